"""Seeded random inputs for the property suites.

One contract: given the same Random instance state, the same sequence of
calls yields the same values, so every report that prints its seed is
byte-reproducible.  Supports are bounded (alpha in [-6,6], i in [0,4],
|numerator| <= 9, denominator <= 9, at most 5 terms) so residual checks
stay fast and coefficients stay human-readable.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

from .automorphisms import AutParams
from .derivations import Derivation
from .elements import Element


def random_scalar(rng: Random, max_num: int = 9, max_den: int = 9) -> Fraction:
    """A nonzero rational with bounded numerator and denominator."""
    num = rng.randint(1, max_num) * rng.choice((1, -1))
    return Fraction(num, rng.randint(1, max_den))


def random_index(rng: Random, alpha_lo=-6, alpha_hi=6, i_max=4):
    return (rng.randint(alpha_lo, alpha_hi), rng.randint(0, i_max))


def random_element(
    rng: Random,
    alpha_lo: int = -6,
    alpha_hi: int = 6,
    i_max: int = 4,
    max_terms: int = 5,
    allow_central: bool = False,
) -> Element:
    terms: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        index = random_index(rng, alpha_lo, alpha_hi, i_max)
        terms[index] = terms.get(index, Fraction(0)) + random_scalar(rng)
    central = Fraction(0)
    if allow_central and rng.random() < 0.5:
        central = random_scalar(rng)
    return Element(terms, central=central)


def random_aut_params(rng: Random) -> AutParams:
    return AutParams(
        random_scalar(rng), random_scalar(rng), rng.choice((1, -1))
    )


def random_derivation(rng: Random) -> Derivation:
    """A random combination form: sometimes pure inner, sometimes mixed."""
    d = Derivation.of_inner(random_element(rng))
    if rng.random() < 0.5:
        d = d + Derivation.d0(random_scalar(rng))
    return d
