"""The automorphism group and the ad-local-finiteness probes.

Every automorphism of the main algebra acts on basis vectors as

    tau(L[a,i]) = xi * mu^a * nu^i * L[xi*(a+i) - i, i]

for nonzero rationals mu, nu and a sign xi.  Under composition these
parameters form (Q* x Q*) extended by the sign flip; the closed-form
composition law is derived from (a' + i) = xi_in * (a + i) and is
cross-validated pointwise in the test suite.

The probes certify why the group is this small: L[0,0] is the only
basis direction whose ad-action is locally finite (each Krylov chain
stabilizes), every other generator keeps growing, and no nonzero
element acts nilpotently, so there are no exponentials to enlarge the
group.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .brackets import bracket
from .elements import Element
from .errors import NotInWittError, ZeroElementError


@dataclass(frozen=True)
class AutParams:
    """(mu, nu, xi) with mu, nu nonzero rationals and xi = +-1."""

    mu: Fraction
    nu: Fraction
    xi: int

    def __post_init__(self):
        object.__setattr__(self, "mu", Fraction(self.mu))
        object.__setattr__(self, "nu", Fraction(self.nu))
        if not self.mu or not self.nu:
            raise ValueError("mu and nu must be nonzero")
        if self.xi not in (1, -1):
            raise ValueError(f"xi must be +1 or -1, got {self.xi!r}")

    @staticmethod
    def identity() -> "AutParams":
        return AutParams(1, 1, 1)

    def __str__(self):
        return f"{self.mu},{self.nu},{self.xi}"


def apply_automorphism(t: AutParams, x: Element) -> Element:
    """tau(L[a,i]) = xi mu^a nu^i L[xi(a+i)-i, i], extended linearly."""
    if x.central:
        raise ValueError("automorphisms act on the main algebra (no central part)")
    terms = {}
    for (a, i), c in x.terms.items():
        image = (t.xi * (a + i) - i, i)
        terms[image] = t.xi * t.mu**a * t.nu**i * c
    return Element(terms)


def compose(outer: AutParams, inner: AutParams) -> AutParams:
    """Parameters of outer(inner(.)).

    Since the inner map sends a+i to xi_in*(a+i), the outer mu acts with
    exponent xi_in*(a+i) - i = xi_in*a + (xi_in-1)*i, which regroups as:
    """
    return AutParams(
        inner.mu * outer.mu**inner.xi,
        inner.nu * outer.nu * outer.mu ** (inner.xi - 1),
        inner.xi * outer.xi,
    )


def invert(t: AutParams) -> AutParams:
    mu = t.mu**-t.xi
    return AutParams(mu, mu ** (1 - t.xi) / t.nu, t.xi)


def hom_residual(t: AutParams, x: Element, y: Element) -> Element:
    """tau([x,y]) - [tau(x), tau(y)]; zero when tau is an automorphism."""
    return apply_automorphism(t, bracket(x, y)) - bracket(
        apply_automorphism(t, x), apply_automorphism(t, y)
    )


@dataclass(frozen=True)
class WittScale:
    """On the i = 0 subalgebra: L[a,0] -> mu^a L[a,0]."""

    mu: Fraction

    def __post_init__(self):
        object.__setattr__(self, "mu", Fraction(self.mu))
        if not self.mu:
            raise ValueError("mu must be nonzero")


@dataclass(frozen=True)
class WittReflect:
    """On the i = 0 subalgebra: L[a,0] -> s L[s*a, 0], s = +-1."""

    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")


def witt_apply(w, x: Element) -> Element:
    """Apply a Witt-subalgebra map; rejects elements with any i > 0 term."""
    if x.central or any(i != 0 for (_, i) in x.terms):
        raise NotInWittError("element is not in the span of the L[a,0]")
    if isinstance(w, WittScale):
        return Element({(a, 0): w.mu**a * c for (a, _), c in x.terms.items()})
    if isinstance(w, WittReflect):
        return Element({(w.sign * a, 0): w.sign * c for (a, _), c in x.terms.items()})
    raise TypeError(f"not a Witt map: {w!r}")


@dataclass(frozen=True)
class MinimalTerm:
    alpha: int
    i: int
    coeff: Fraction


def minimal_term(x: Element) -> MinimalTerm:
    """The term with smallest alpha, breaking ties by largest i.

    This is the term whose bracket behaviour controls the minimal-alpha
    growth of Krylov chains.
    """
    if not x.terms:
        raise ZeroElementError("the zero element has no minimal term")
    alpha, i = min(x.terms, key=lambda key: (key[0], -key[1]))
    return MinimalTerm(alpha, i, x.terms[(alpha, i)])


def step_coefficient(a0: int, i0: int, b: int, j: int) -> int:
    """Coefficient of L[a0+b, i0+j] in [L[a0,i0], L[b,j]].

    For a0 = 0 this is -(j+1) - (b-1)(i0+1), the growth factor of the
    minimal term under repeated bracketing.
    """
    return (a0 - 1) * (j + 1) - (b - 1) * (i0 + 1)


@dataclass(frozen=True)
class ProbeReport:
    """Krylov dimensions d_k = dim span{v, ad(s)v, ..., ad(s)^k v}.

    `final_dim` set means the chain stabilized (d_k = d_{k-1}), which
    certifies an ad(s)-invariant finite span containing v.  A growing
    verdict is only heuristic evidence of non-finiteness.
    """

    dims: tuple
    depth: int
    final_dim: int | None

    @property
    def stabilized(self) -> bool:
        return self.final_dim is not None

    def verdict(self) -> str:
        if self.stabilized:
            return f"Stabilized({self.final_dim})"
        return f"GrowingAtDepth({self.depth})"


def probe_local_finiteness(s: Element, v: Element, depth: int) -> ProbeReport:
    """Grow the Krylov span of v under ad(s) up to `depth` brackets."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    span = linalg.Span()
    span.add(dict(v.terms))
    dims = [span.dim]
    w = v
    for _ in range(depth):
        w = bracket(s, w)
        span.add(dict(w.terms))
        dims.append(span.dim)
        if dims[-1] == dims[-2]:
            return ProbeReport(tuple(dims), depth, dims[-1])
    return ProbeReport(tuple(dims), depth, None)


@dataclass(frozen=True)
class NilpotencyReport:
    zero_at: int | None
    depth: int

    def verdict(self) -> str:
        if self.zero_at is not None:
            return f"FoundZeroAt({self.zero_at})"
        return f"NonzeroThrough({self.depth})"


def nilpotency_check(s: Element, v: Element, depth: int) -> NilpotencyReport:
    """Smallest k <= depth with ad(s)^k v = 0, if any."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    w = v
    for k in range(1, depth + 1):
        w = bracket(s, w)
        if w.is_zero():
            return NilpotencyReport(k, depth)
    return NilpotencyReport(None, depth)
