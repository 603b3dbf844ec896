"""Basis-indexed sparse elements and truncation windows.

The algebras handled here all share one basis shape: vectors L[alpha, i]
indexed by an integer alpha and a nonnegative integer i, plus (in the
extended algebra only) a central generator c.  An Element is a finite
formal linear combination with exact rational coefficients.

Elements are value objects: every operation returns a new Element, and a
constructed Element is never mutated.  Canonical form (no zero
coefficients, Fractions in lowest terms) is established at construction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import NegativeSecondIndexError

# A basis index is the plain pair (alpha, i).
BasisIndex = tuple[int, int]

_ZERO = Fraction(0)


class Algebra(enum.Enum):
    """The algebra variants this package computes in.

    BLOCK     the main algebra, basis L[alpha,i], alpha in Z, i >= 0
    FAMILY0   the two-parameter family at s = 0 (same index set)
    FAMILY1   the two-parameter family at s = 1
    EXTENDED  the one-dimensional central extension of BLOCK
    """

    BLOCK = "block"
    FAMILY0 = "family0"
    FAMILY1 = "family1"
    EXTENDED = "extended"

    @property
    def family_s(self):
        if self is Algebra.FAMILY0:
            return 0
        if self is Algebra.FAMILY1:
            return 1
        return None

    @property
    def allows_central(self) -> bool:
        return self is Algebra.EXTENDED


def _check_index(key) -> tuple[int, int]:
    alpha, i = key
    if type(alpha) is not int or type(i) is not int:
        raise TypeError(f"basis index must be a pair of ints, got {key!r}")
    if i < 0:
        raise NegativeSecondIndexError(f"second basis index must be >= 0, got {key!r}")
    return (alpha, i)


class Element:
    """A finite linear combination of basis vectors, plus a central part.

    `terms` maps (alpha, i) to a nonzero Fraction; `central` is the
    coefficient of c (always 0 outside the extended algebra).
    """

    __slots__ = ("_terms", "central")

    def __init__(self, terms=None, central=0):
        clean = {}
        if terms:
            for key, value in terms.items():
                key = _check_index(key)
                value = Fraction(value)
                if value:
                    clean[key] = value
        self._terms = clean
        self.central = Fraction(central)

    @classmethod
    def zero(cls) -> "Element":
        return cls()

    @classmethod
    def basis(cls, alpha: int, i: int) -> "Element":
        return cls({(alpha, i): 1})

    @classmethod
    def central_term(cls, coeff=1) -> "Element":
        return cls({}, central=coeff)

    @property
    def terms(self):
        # Callers must treat the mapping as read-only.
        return self._terms

    def coefficient(self, alpha: int, i: int) -> Fraction:
        return self._terms.get((alpha, i), _ZERO)

    def is_zero(self) -> bool:
        return not self._terms and not self.central

    def __bool__(self) -> bool:
        return not self.is_zero()

    def support(self):
        """Basis indices with nonzero coefficient, in (alpha, i) order."""
        return sorted(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self._terms == other._terms and self.central == other.central

    def __hash__(self):
        return hash((frozenset(self._terms.items()), self.central))

    def __add__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        merged = dict(self._terms)
        for key, value in other._terms.items():
            new = merged.get(key, _ZERO) + value
            if new:
                merged[key] = new
            else:
                merged.pop(key, None)
        out = Element.__new__(Element)
        out._terms = merged
        out.central = self.central + other.central
        return out

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __neg__(self) -> "Element":
        return self.scale(-1)

    def scale(self, scalar) -> "Element":
        scalar = Fraction(scalar)
        out = Element.__new__(Element)
        if scalar:
            out._terms = {k: v * scalar for k, v in self._terms.items()}
        else:
            out._terms = {}
        out.central = self.central * scalar
        return out

    def __mul__(self, scalar) -> "Element":
        if isinstance(scalar, (int, Fraction)):
            return self.scale(scalar)
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        from .textio import render_element

        return f"Element({render_element(self)!r})"


@dataclass(frozen=True)
class Window:
    """A finite truncation box: alpha in [alpha_min, alpha_max], 0 <= i <= i_max."""

    alpha_min: int
    alpha_max: int
    i_max: int

    def __post_init__(self):
        if self.alpha_min > self.alpha_max:
            raise ValueError(f"empty alpha range in {self}")
        if self.i_max < 0:
            raise ValueError(f"i_max must be >= 0 in {self}")

    def contains_alpha(self, alpha: int) -> bool:
        return self.alpha_min <= alpha <= self.alpha_max

    def contains(self, index) -> bool:
        alpha, i = index
        return self.contains_alpha(alpha) and 0 <= i <= self.i_max

    def alphas(self):
        return range(self.alpha_min, self.alpha_max + 1)

    def indices(self):
        """All (alpha, i) in the window, sorted (alpha asc, i asc)."""
        return [
            (alpha, i) for alpha in self.alphas() for i in range(self.i_max + 1)
        ]

    def __str__(self):
        return f"{self.alpha_min}:{self.alpha_max}:{self.i_max}"
