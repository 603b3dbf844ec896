"""Brackets of all variants, gradings, cocycles, and the shift embedding."""

from fractions import Fraction
from random import Random

import pytest

from blocklie import (
    Algebra,
    CocycleKind,
    Element,
    ZeroElementError,
    bracket,
    bracket_for,
    cocycle_residual,
    cocycle_value,
    eigen_degree,
    extended_bracket,
    extension_cocycle_value,
    family_bracket,
    first_grade,
    jacobi_residual,
    shift_iso_residual,
)
from blocklie.randgen import random_element

L = Element.basis


def test_bracket_fixed_values():
    assert bracket(L(0, 0), L(3, 2)) == -5 * L(3, 2)
    assert bracket(L(2, 1), L(3, 2)) == -L(5, 3)
    assert bracket(L(4, 0), L(0, 2)) == 10 * L(4, 2)


def test_bracket_is_bilinear():
    x, y, z = L(1, 0), L(0, 2), L(-2, 1)
    assert bracket(x + 2 * y, z) == bracket(x, z) + 2 * bracket(y, z)


def test_bracket_rejects_central_terms():
    with pytest.raises(ValueError):
        bracket(L(1, 0) + Element.central_term(1), L(0, 0))


def test_family_bracket_fixed_values():
    assert family_bracket(L(2, 0), L(3, 0), 0).is_zero()
    assert family_bracket(L(0, 0), L(1, 0), 1) == L(1, 0)
    # second-index drop: [x_{1,1}, x_{2,0}] at s=0 has only the i+j-1 part
    assert family_bracket(L(1, 1), L(2, 0), 0) == -L(3, 0)


def test_family_bracket_requires_valid_s():
    with pytest.raises(ValueError):
        family_bracket(L(1, 0), L(0, 0), 2)


def test_extension_cocycle_values():
    assert extension_cocycle_value(1, 0, -1, 0) == 0
    assert extension_cocycle_value(2, 0, -2, 0) == 1
    assert extension_cocycle_value(3, 0, -3, 0) == 4
    assert extension_cocycle_value(2, 0, -1, 0) == 0  # alpha sum nonzero
    assert extension_cocycle_value(2, 1, -2, 0) == 0  # second index nonzero


def test_extended_bracket_fixed_values():
    assert extended_bracket(L(2, 0), L(-2, 0)) == 4 * L(0, 0) + Element.central_term(1)
    assert extended_bracket(L(1, 0), L(-1, 0)) == 2 * L(0, 0)


def test_extended_bracket_kills_central_inputs():
    c = Element.central_term(7)
    assert extended_bracket(L(1, 0) + c, L(-1, 0)) == extended_bracket(L(1, 0), L(-1, 0))


def test_bracket_for_dispatch():
    assert bracket_for(Algebra.BLOCK) is bracket
    assert bracket_for(Algebra.EXTENDED) is extended_bracket
    assert bracket_for(Algebra.FAMILY0)(L(0, 0), L(1, 0)).is_zero()
    assert bracket_for(Algebra.FAMILY1)(L(0, 0), L(1, 0)) == L(1, 0)


@pytest.mark.parametrize("algebra", list(Algebra))
def test_antisymmetry_and_jacobi_random(algebra):
    rng = Random(7)
    br = bracket_for(algebra)
    for _ in range(50):
        x = random_element(rng, allow_central=algebra.allows_central)
        y = random_element(rng, allow_central=algebra.allows_central)
        z = random_element(rng, allow_central=algebra.allows_central)
        assert (br(x, y) + br(y, x)).is_zero()
        assert jacobi_residual(x, y, z, br).is_zero()


def test_shift_iso_residual_zero():
    rng = Random(11)
    for _ in range(50):
        assert shift_iso_residual(random_element(rng), random_element(rng)).is_zero()


def test_first_grade_and_eigen_degree():
    assert first_grade(L(3, 2)) == 3
    assert eigen_degree(L(3, 2)) == 5
    assert first_grade(L(1, 0) + L(1, 5)) == 1
    assert eigen_degree(L(1, 0) + L(1, 5)) is None  # mixed a+i
    assert first_grade(L(1, 0) + L(2, 0)) is None


def test_eigen_degree_matches_the_weight_operator():
    # [L[0,0], x] = -(a+i) x on homogeneous x
    x = L(-2, 1)
    assert bracket(L(0, 0), x) == -eigen_degree(x) * x


def test_gradings_of_central_and_zero():
    c = Element.central_term(3)
    assert first_grade(c) == 0
    assert eigen_degree(c + L(0, 0)) == 0
    assert eigen_degree(c + L(1, 0)) is None
    with pytest.raises(ZeroElementError):
        first_grade(Element.zero())
    with pytest.raises(ZeroElementError):
        eigen_degree(Element.zero())


def test_cocycle_value_is_bilinear():
    x, y = L(2, 0), L(-2, 0)
    value = cocycle_value(CocycleKind.EXTENSION, 3 * x, y)
    assert value == 3 * cocycle_value(CocycleKind.EXTENSION, x, y)
    assert cocycle_value(CocycleKind.FAMILY, L(3, 0), L(-1, 0)) == 2


def test_cocycle_identity_spot_checks():
    triples = [
        (L(2, 0), L(-1, 0), L(-1, 0)),
        (L(3, 1), L(-2, 0), L(-1, 1)),
        (L(1, 2), L(1, 0), L(-2, 1)),
    ]
    for kind in CocycleKind:
        for x, y, z in triples:
            assert cocycle_residual(kind, x, y, z) == 0


def test_family_cocycle_vanishes_off_its_support():
    assert cocycle_value(CocycleKind.FAMILY, L(1, 1), L(1, 0)) == 0
    assert cocycle_value(CocycleKind.FAMILY, L(1, 0), L(2, 0)) == 0
    assert cocycle_value(CocycleKind.FAMILY, L(3, 0), L(-1, 0)) == Fraction(2)
