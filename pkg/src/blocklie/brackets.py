"""Lie brackets, gradings, and cocycles for the Block-type algebras.

Structure constants, on basis vectors:

  main algebra      [L[a,i], L[b,j]] = ((a-1)(j+1) - (b-1)(i+1)) L[a+b, i+j]

  family, param s   [L[a,i], L[b,j]] = s(b-a) L[a+b, i+j]
                                      + ((a-1+s)j - (b-1+s)i) L[a+b, i+j-1]
                    (the i+j-1 = -1 case only occurs with coefficient 0)

  extended          main bracket plus delta_{a+b,0} delta_{i,0} delta_{j,0}
                    (a^3 - a)/6 times the central generator c

The shift L[a,i] -> L[a,i+1] embeds the main algebra into the s = 0
family; `shift_iso_residual` measures the failure of that embedding to
be a homomorphism (it is exactly zero).
"""

from __future__ import annotations

import enum
from fractions import Fraction

from .elements import Algebra, Element

_ZERO = Fraction(0)


def _plain(x: Element, what: str) -> None:
    if x.central:
        raise ValueError(f"{what} is only defined for elements without a central part")


def bracket(x: Element, y: Element) -> Element:
    """Bracket in the main algebra."""
    _plain(x, "the main bracket")
    _plain(y, "the main bracket")
    acc = {}
    for (a, i), cx in x.terms.items():
        for (b, j), cy in y.terms.items():
            coeff = (a - 1) * (j + 1) - (b - 1) * (i + 1)
            if coeff:
                key = (a + b, i + j)
                new = acc.get(key, _ZERO) + coeff * cx * cy
                if new:
                    acc[key] = new
                else:
                    acc.pop(key, None)
    return Element(acc)


def family_bracket(x: Element, y: Element, s: int) -> Element:
    """Bracket in the two-parameter family, s in {0, 1}."""
    if s not in (0, 1):
        raise ValueError(f"family parameter s must be 0 or 1, got {s!r}")
    _plain(x, "the family bracket")
    _plain(y, "the family bracket")
    acc = {}

    def put(key, value):
        new = acc.get(key, _ZERO) + value
        if new:
            acc[key] = new
        else:
            acc.pop(key, None)

    for (a, i), cx in x.terms.items():
        for (b, j), cy in y.terms.items():
            c = cx * cy
            if s:
                first = s * (b - a)
                if first:
                    put((a + b, i + j), first * c)
            second = (a - 1 + s) * j - (b - 1 + s) * i
            if i + j - 1 < 0:
                # i = j = 0 forces the coefficient to vanish; the basis has
                # no i = -1 layer, so this must never produce a term.
                assert second == 0, (a, i, b, j, s)
                continue
            if second:
                put((a + b, i + j - 1), second * c)
    return Element(acc)


def extension_cocycle_value(a: int, i: int, b: int, j: int) -> Fraction:
    """Central coefficient the extension adds to [L[a,i], L[b,j]]."""
    if a + b == 0 and i == 0 and j == 0:
        return Fraction(a**3 - a, 6)
    return _ZERO


def extended_bracket(x: Element, y: Element) -> Element:
    """Bracket in the central extension; central inputs bracket to zero."""
    out = bracket(Element(x.terms), Element(y.terms))
    central = _ZERO
    for (a, i), cx in x.terms.items():
        for (b, j), cy in y.terms.items():
            central += extension_cocycle_value(a, i, b, j) * cx * cy
    return Element(out.terms, central=central)


def bracket_for(algebra: Algebra):
    """The bracket of the given variant, as a two-argument callable."""
    if algebra is Algebra.BLOCK:
        return bracket
    if algebra is Algebra.EXTENDED:
        return extended_bracket
    s = algebra.family_s
    return lambda x, y: family_bracket(x, y, s)


def jacobi_residual(x: Element, y: Element, z: Element, bracket_fn=bracket) -> Element:
    """[[x,y],z] + [[y,z],x] + [[z,x],y]; zero for a Lie bracket."""
    return (
        bracket_fn(bracket_fn(x, y), z)
        + bracket_fn(bracket_fn(y, z), x)
        + bracket_fn(bracket_fn(z, x), y)
    )


def shift_iso_residual(x: Element, y: Element) -> Element:
    """Residual of the shift embedding into the s = 0 family.

    Computes shift^{-1}([shift(x), shift(y)]_family0) - [x, y] where
    shift sends L[a,i] to L[a,i+1].  Identically zero.
    """
    sx = Element({(a, i + 1): c for (a, i), c in x.terms.items()})
    sy = Element({(a, i + 1): c for (a, i), c in y.terms.items()})
    prod = family_bracket(sx, sy, 0)
    # Every term of the product sits at second index i+j+1 >= 1.
    assert all(k >= 1 for (_, k) in prod.terms), prod.terms
    unshifted = Element({(a, k - 1): c for (a, k), c in prod.terms.items()})
    return unshifted - bracket(x, y)


def first_grade(x: Element):
    """Common first index of all terms of x, or None if mixed.

    A central part counts as grade 0.  Raises on the zero element.
    """
    return _common_degree(x, lambda a, i: a)


def eigen_degree(x: Element):
    """Common value of b+j over the terms of x, or None if mixed.

    b+j is the (negated) eigenvalue of ad L[0,0]: [L[0,0], L[b,j]] equals
    -(b+j) L[b,j].  A central part counts as degree 0.  Raises on zero.
    """
    return _common_degree(x, lambda a, i: a + i)


def _common_degree(x: Element, degree_of):
    from .errors import ZeroElementError

    if x.is_zero():
        raise ZeroElementError("the zero element has no degree")
    degrees = {degree_of(a, i) for (a, i) in x.terms}
    if x.central:
        degrees.add(0)
    if len(degrees) == 1:
        return degrees.pop()
    return None


class CocycleKind(enum.Enum):
    """Which 2-cocycle to evaluate, each against its own bracket.

    FAMILY     phi(L[a,i], L[b,j]) = (a-1) delta_{a+b,2} delta_{i,0} delta_{j,0}
               on the s = 0 family
    EXTENSION  psi(L[a,i], L[b,j]) = delta_{a+b,0} delta_{i,0} delta_{j,0}
               (a^3-a)/6 on the main algebra
    """

    FAMILY = "family"
    EXTENSION = "extension"


def cocycle_value(kind: CocycleKind, x: Element, y: Element) -> Fraction:
    """Bilinear extension of the chosen cocycle."""
    total = _ZERO
    for (a, i), cx in x.terms.items():
        for (b, j), cy in y.terms.items():
            if kind is CocycleKind.FAMILY:
                if a + b == 2 and i == 0 and j == 0:
                    total += (a - 1) * cx * cy
            else:
                total += extension_cocycle_value(a, i, b, j) * cx * cy
    return total


def cocycle_residual(kind: CocycleKind, x: Element, y: Element, z: Element) -> Fraction:
    """phi([x,y],z) + phi([y,z],x) + phi([z,x],y); zero for a 2-cocycle."""
    if kind is CocycleKind.FAMILY:
        br = lambda u, v: family_bracket(u, v, 0)
    else:
        br = bracket
    return (
        cocycle_value(kind, br(x, y), z)
        + cocycle_value(kind, br(y, z), x)
        + cocycle_value(kind, br(z, x), y)
    )
