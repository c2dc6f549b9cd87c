"""Generalized complete elliptic integral tests.

K(1/sqrt 2) in the classical case was frozen from two independent oracles
(explicit AGM loop; Gamma(1/4)^2/(4 sqrt pi) via the Stirling log-gamma),
which agree to 55 digits: 1.85407467730137191843385.
"""

import math

import pytest
from hypothesis import given, settings, strategies as st

from genellip import (
    EllipticParams,
    Modulus,
    arth,
    beta,
    ell_derivatives,
    ell_e,
    ell_e_comp,
    ell_e_minus_rc2k,
    ell_k,
    ell_k_comp,
    ell_k_minus_e,
    reduced_params,
)
from genellip.errors import DomainError, ParameterError

CLASSICAL = EllipticParams(0.5, 0.5, 1.0)
INV_SQRT2 = math.sqrt(0.5)


# --------------------------------------------------------------------------
# parameter and modulus plumbing

def test_params_validation():
    EllipticParams(0.3, 0.5, 0.7)  # fine: c <= a+b, a < min(c,1)
    with pytest.raises(ParameterError):
        EllipticParams(0.8, 0.5, 0.7)  # a >= c
    with pytest.raises(ParameterError):
        EllipticParams(0.3, 0.1, 0.7)  # c > a+b
    with pytest.raises(ParameterError):
        EllipticParams(1.2, 1.2, 1.0)  # a >= 1


def test_reduced_params():
    p = reduced_params(0.3, 0.8)
    assert (p.a, p.b, p.c) == (0.3, 0.5, 0.8)
    with pytest.raises(ParameterError):
        reduced_params(0.3, 1.5)


def test_modulus_pair_round_trip():
    m = Modulus.from_r(0.6)
    assert m.r_comp == pytest.approx(0.8, rel=1e-15)
    assert m.z + m.z_comp == pytest.approx(1.0, abs=1e-15)
    c = m.complement
    assert (c.r, c.r_comp) == (m.r_comp, m.r)


def test_modulus_rejects_inconsistent_pair():
    with pytest.raises(DomainError):
        Modulus(0.6, 0.9)


def test_modulus_deep_complement_is_exact():
    # the pair construction must carry complements far below float(1-r)
    m = Modulus.from_r_comp(1e-50)
    assert m.z_comp == 1e-100
    assert m.r == 1.0  # r rounds to 1 but the pair stays usable


def test_arth():
    assert arth(0.5) == pytest.approx(math.atanh(0.5), rel=1e-15)
    # pair form stays finite and exact where 1-r underflows
    m = Modulus.from_r_comp(1e-8)
    assert arth(m.r, m.r_comp) == pytest.approx(
        math.log(2.0) - math.log(1e-8), rel=1e-12)
    with pytest.raises(DomainError):
        arth(1.0)


# --------------------------------------------------------------------------
# values at distinguished points

def test_k_at_zero_is_half_beta():
    for p in (CLASSICAL, EllipticParams(0.3, 0.5, 0.7)):
        want = 0.5 * beta(p.a, p.b).value
        assert ell_k(p, Modulus.from_r(0.0)).value == pytest.approx(
            want, rel=1e-14)
        assert ell_e(p, Modulus.from_r(0.0)).value == pytest.approx(
            want, rel=1e-14)


def test_k_classical_frozen():
    r = ell_k(CLASSICAL, Modulus.from_r(INV_SQRT2))
    assert r.value == pytest.approx(1.85407467730137191843385, rel=1e-14)
    assert abs(r.value - 1.85407467730137191843385) <= \
        10.0 * r.abs_err_est + 1e-14


def test_k_pole_at_one():
    r = ell_k(CLASSICAL, Modulus.from_r(1.0))
    assert r.value == math.inf
    assert not r.is_finite


def test_e_at_one_classical():
    assert ell_e(CLASSICAL, Modulus.from_r(1.0)).value == pytest.approx(
        1.0, rel=1e-14)


def test_e_at_one_balanced_frozen():
    # (0.4, 0.4, 0.8): the endpoint formula collapses to 1/(2b) = 1.25,
    # confirmed by the Beta/Gamma oracle
    p = EllipticParams(0.4, 0.4, 0.8)
    assert ell_e(p, Modulus.from_r(1.0)).value == pytest.approx(
        1.25, rel=1e-13)


# --------------------------------------------------------------------------
# complementary integrals

def test_comp_symmetry_point():
    m = Modulus.from_r(INV_SQRT2)
    assert ell_k_comp(CLASSICAL, m).value == pytest.approx(
        ell_k(CLASSICAL, m).value, rel=1e-14)


def test_comp_pole_at_zero():
    assert ell_k_comp(CLASSICAL, Modulus.from_r(0.0)).value == math.inf


def test_comp_is_k_of_complement():
    p = EllipticParams(0.3, 0.5, 0.7)
    m = Modulus.from_r(0.6)
    assert ell_k_comp(p, m).value == pytest.approx(
        ell_k(p, Modulus.from_r(0.8)).value, rel=1e-13)
    assert ell_e_comp(p, m).value == pytest.approx(
        ell_e(p, Modulus.from_r(0.8)).value, rel=1e-13)


# --------------------------------------------------------------------------
# difference forms

def test_k_minus_e_matches_subtraction():
    p = EllipticParams(0.3, 0.5, 0.7)
    for r in (0.05, 0.3, 0.6, 0.92, 0.9995):
        m = Modulus.from_r(r)
        direct = ell_k(p, m).value - ell_e(p, m).value
        assert ell_k_minus_e(p, m).value == pytest.approx(direct, rel=1e-10)


def test_k_minus_e_small_r_relative_accuracy():
    # near r = 0 the subtraction loses all digits; the series form must not
    p = CLASSICAL
    m = Modulus.from_r(1e-6)
    got = ell_k_minus_e(p, m).value
    # leading term: (half_beta) (b/c) z = (pi/2)(1/2) 1e-12
    want = math.pi / 4.0 * 1e-12
    assert got == pytest.approx(want, rel=1e-5)
    assert got > 0.0


def test_e_minus_rc2k_matches_subtraction():
    p = EllipticParams(0.4, 0.5, 0.8)
    for r in (0.1, 0.5, 0.85, 0.999):
        m = Modulus.from_r(r)
        direct = ell_e(p, m).value - m.z_comp * ell_k(p, m).value
        assert ell_e_minus_rc2k(p, m).value == pytest.approx(
            direct, rel=1e-9)


def test_difference_forms_at_pole():
    m = Modulus.from_r(1.0)
    assert ell_k_minus_e(CLASSICAL, m).value == math.inf
    # E - r'^2 K -> E(1) which is finite
    assert ell_e_minus_rc2k(CLASSICAL, m).value == pytest.approx(
        1.0, rel=1e-12)


# --------------------------------------------------------------------------
# derivatives

def test_de_dr_sign_classical():
    m = Modulus.from_r(0.5)
    d = ell_derivatives(CLASSICAL, m)
    kme = ell_k_minus_e(CLASSICAL, m).value
    want = 2.0 * (CLASSICAL.a - 1.0) / 0.5 * kme
    assert d.dE_dr == pytest.approx(want, rel=1e-12)
    assert d.dE_dr < 0.0


def test_dkme_linearity():
    m = Modulus.from_r(0.5)
    d = ell_derivatives(CLASSICAL, m)
    assert d.dKmE_dr == pytest.approx(d.dK_dr - d.dE_dr, rel=1e-10)


def test_derivatives_against_central_differences():
    p = EllipticParams(0.4, 0.5, 0.8)
    r, h = 0.3, 1e-5
    d = ell_derivatives(p, Modulus.from_r(r))

    def num(f):
        hi = f(p, Modulus.from_r(r + h)).value
        lo = f(p, Modulus.from_r(r - h)).value
        return (hi - lo) / (2.0 * h)

    assert d.dK_dr == pytest.approx(num(ell_k), rel=1e-8)
    assert d.dE_dr == pytest.approx(num(ell_e), rel=1e-8)
    assert d.dKmE_dr == pytest.approx(num(ell_k_minus_e), rel=1e-8)
    assert d.dEmr2K_dr == pytest.approx(num(ell_e_minus_rc2k), rel=1e-8)


# --------------------------------------------------------------------------
# shape properties

@given(st.floats(min_value=0.01, max_value=0.97))
@settings(max_examples=150, deadline=None)
def test_k_above_e_and_monotone(r):
    p = EllipticParams(0.3, 0.6, 0.8)
    m = Modulus.from_r(r)
    m2 = Modulus.from_r(r + 0.01)
    K, E = ell_k(p, m).value, ell_e(p, m).value
    assert K > E  # strict for r > 0
    assert ell_k(p, m2).value > K     # K increasing
    assert ell_e(p, m2).value < E     # E decreasing


@given(st.floats(min_value=0.05, max_value=0.6),
       st.floats(min_value=0.05, max_value=0.6),
       st.floats(min_value=0.0, max_value=0.95))
@settings(max_examples=150, deadline=None)
def test_k_e_bracket_half_beta(a, b, r):
    # E <= B/2 <= K on [0,1), from the monotonicity in r
    c = min(1.0, a + b)
    p = EllipticParams(a, b, c)
    m = Modulus.from_r(r)
    hb = 0.5 * beta(a, b).value
    assert ell_e(p, m).value <= hb * (1.0 + 1e-12)
    assert ell_k(p, m).value >= hb * (1.0 - 1e-12)
