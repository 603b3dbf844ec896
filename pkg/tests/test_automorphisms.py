"""Parametric automorphisms, the index-0 subalgebra maps, minimal terms,
and the Krylov probes."""

from fractions import Fraction
from random import Random

import pytest

from blocklie import (
    AutParams,
    Element,
    NotInWittError,
    WittReflect,
    WittScale,
    ZeroElementError,
    apply_automorphism,
    bracket,
    compose,
    hom_residual,
    invert,
    minimal_term,
    nilpotency_check,
    probe_local_finiteness,
    step_coefficient,
    witt_apply,
)
from blocklie.randgen import random_aut_params, random_element

L = Element.basis


def test_params_validation():
    with pytest.raises(ValueError):
        AutParams(0, 1, 1)
    with pytest.raises(ValueError):
        AutParams(1, 0, 1)
    with pytest.raises(ValueError):
        AutParams(1, 1, 2)
    t = AutParams(2, 3, -1)
    assert isinstance(t.mu, Fraction) and isinstance(t.nu, Fraction)
    assert str(AutParams(Fraction(1, 2), 3, 1)) == "1/2,3,1"


def test_apply_fixed_values():
    assert apply_automorphism(AutParams(2, 1, 1), L(3, 2)) == 8 * L(3, 2)
    assert apply_automorphism(AutParams(1, 1, -1), L(1, 1)) == -L(-3, 1)
    assert apply_automorphism(AutParams(1, 3, 1), L(0, 2)) == 9 * L(0, 2)


def test_apply_rejects_central_terms():
    with pytest.raises(ValueError):
        apply_automorphism(AutParams(1, 1, 1), Element.central_term(1))


def test_hom_residual_zero_random():
    rng = Random(5)
    for _ in range(40):
        t = random_aut_params(rng)
        x, y = random_element(rng), random_element(rng)
        assert hom_residual(t, x, y).is_zero()


def test_compose_fixed_value_and_oracle():
    rho = AutParams(1, 1, -1)
    assert compose(rho, rho) == AutParams.identity()
    rng = Random(9)
    for _ in range(30):
        outer, inner = random_aut_params(rng), random_aut_params(rng)
        combined = compose(outer, inner)
        for v in (L(2, 1), L(-1, 0), L(0, 3)):
            assert apply_automorphism(combined, v) == apply_automorphism(
                outer, apply_automorphism(inner, v)
            )


def test_invert_fixed_value_and_two_sided():
    assert invert(AutParams(2, 3, 1)) == AutParams(Fraction(1, 2), Fraction(1, 3), 1)
    rng = Random(13)
    for _ in range(30):
        t = random_aut_params(rng)
        assert compose(t, invert(t)) == AutParams.identity()
        assert compose(invert(t), t) == AutParams.identity()


def test_conjugation_by_the_involution():
    rho = AutParams(1, 1, -1)
    t = AutParams(2, 3, 1)
    assert compose(compose(rho, t), rho) == AutParams(
        Fraction(1, 2), Fraction(3, 4), 1
    )


def test_witt_maps():
    scale = WittScale(Fraction(3))
    assert witt_apply(scale, L(2, 0)) == 9 * L(2, 0)
    reflect = WittReflect(-1)
    assert witt_apply(reflect, L(2, 0)) == -L(-2, 0)
    # scale matches the full automorphism on index-0 vectors
    assert witt_apply(scale, L(-1, 0)) == apply_automorphism(
        AutParams(3, 1, 1), L(-1, 0)
    )


def test_witt_maps_respect_the_bracket():
    x, y = 2 * L(1, 0) + L(-2, 0), L(3, 0)
    for m in (WittScale(Fraction(5, 2)), WittReflect(-1)):
        assert witt_apply(m, bracket(x, y)) == bracket(
            witt_apply(m, x), witt_apply(m, y)
        )


def test_witt_maps_reject_higher_index_terms():
    with pytest.raises(NotInWittError):
        witt_apply(WittScale(Fraction(2)), L(1, 1))
    with pytest.raises(NotInWittError):
        witt_apply(WittReflect(1), Element.central_term(1))
    with pytest.raises(ValueError):
        WittScale(Fraction(0))
    with pytest.raises(ValueError):
        WittReflect(2)


def test_minimal_term_fixed_values():
    m = minimal_term(L(-3, 0) + L(-3, 4) + L(5, 0))
    assert (m.alpha, m.i, m.coeff) == (-3, 4, 1)
    m = minimal_term(-7 * L(0, 2) + L(1, 0))
    assert (m.alpha, m.i, m.coeff) == (0, 2, -7)
    with pytest.raises(ZeroElementError):
        minimal_term(Element.zero())


def test_step_coefficient_values():
    assert step_coefficient(1, 0, 2, 0) == -1
    # matches the bracket coefficient on basis vectors
    a0, i0, b, j = 2, 1, -1, 2
    lhs = bracket(L(a0, i0), L(b, j))
    assert lhs.coefficient(a0 + b, i0 + j) == step_coefficient(a0, i0, b, j)


def test_probe_stabilizes_under_the_weight_operator():
    report = probe_local_finiteness(L(0, 0), L(3, 2), 10)
    assert report.stabilized
    assert report.final_dim == 1
    assert report.verdict() == "Stabilized(1)"
    assert report.dims == (1, 1)


def test_probe_grows_under_a_step_operator():
    report = probe_local_finiteness(L(1, 0), L(2, 0), 6)
    assert not report.stabilized
    assert report.dims == (1, 2, 3, 4, 5, 6, 7)
    assert report.verdict() == "GrowingAtDepth(6)"


def test_probe_rejects_bad_depth():
    with pytest.raises(ValueError):
        probe_local_finiteness(L(0, 0), L(1, 0), 0)


def test_nilpotency_fixed_values():
    assert nilpotency_check(L(1, 0), L(0, 1), 5).verdict() == "FoundZeroAt(2)"
    assert nilpotency_check(L(0, 0), L(3, 2), 5).verdict() == "NonzeroThrough(5)"
