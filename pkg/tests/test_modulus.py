"""Generalized modulus, its inverse, and the modular function.

Frozen values and their oracles (tests/oracles.py):
  mu(0.5,1; r=0.5)          = 2.009459377005285172842269   (AGM loop)
  phi_2(0.5,1; r=0.5)       = 0.9428090415820633658677925  (bisection on the
                               AGM mu; agrees with the classical Landen form
                               2 sqrt(r)/(1+r) to 25 digits)
  solve mu(s)=3 mu(0.6) at (a,c)=(0.25,1):
                              s = 0.005052235666512477599151527
                               (bisection on the series mu)
"""

import math

import pytest
from hypothesis import given, settings, strategies as st

from genellip import (
    DegreeK,
    Modulus,
    ModulusParams,
    beta,
    modular_solve,
    modulus_params_ac,
    mu,
    mu_deriv,
    mu_deriv_closed,
    mu_inv,
    mu_m,
    mu_inv_m,
    p_logit,
    phi_deriv,
    phi_deriv_closed,
    phi_k,
    phi_k_m,
    phi_logodds,
    q_modulus,
)
from genellip.errors import DomainError, ParameterError

P_CLASSICAL = modulus_params_ac(0.5, 1.0)


def half_beta(p):
    return 0.5 * beta(p.a, p.b).value


# --------------------------------------------------------------------------
# mu

def test_mu_symmetry_point():
    for (a, c) in ((0.5, 1.0), (0.3, 0.8), (0.7, 0.9)):
        p = modulus_params_ac(a, c)
        assert mu(p, math.sqrt(0.5)).value == pytest.approx(
            half_beta(p), rel=1e-12)


def test_mu_classical_frozen():
    r = mu(P_CLASSICAL, 0.5)
    assert r.value == pytest.approx(2.009459377005285172842269, rel=1e-13)
    assert abs(r.value - 2.009459377005285172842269) <= \
        10.0 * r.abs_err_est + 1e-13


def test_mu_complement_product():
    p = modulus_params_ac(0.3, 0.8)
    r = 0.3
    rc = math.sqrt(1.0 - r * r)
    prod = mu(p, r).value * mu(p, rc).value
    assert prod == pytest.approx(half_beta(p) ** 2, rel=1e-12)


def test_mu_params_general():
    ModulusParams(0.3, 0.4, 0.6)          # a+b >= c is enough
    with pytest.raises(ParameterError):
        ModulusParams(0.2, 0.3, 0.6)      # a+b < c


# --------------------------------------------------------------------------
# mu_inv

def test_mu_inv_symmetry_point():
    p = modulus_params_ac(0.3, 0.8)
    assert mu_inv(p, half_beta(p)) == pytest.approx(math.sqrt(0.5),
                                                    rel=1e-12)


def test_mu_inv_classical_pi_over_2():
    assert mu_inv(P_CLASSICAL, math.pi / 2.0) == pytest.approx(
        math.sqrt(0.5), rel=1e-12)


@pytest.mark.parametrize("r", [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9])
def test_mu_round_trip(r):
    p = modulus_params_ac(0.4, 0.9)
    assert mu_inv(p, mu(p, r).value) == pytest.approx(r, abs=1e-10)


def test_mu_inv_m_pair():
    p = modulus_params_ac(0.5, 1.0)
    m = mu_inv_m(p, 40.0)  # deep in the small-r tail
    assert isinstance(m, Modulus)
    assert mu_m(p, m).value == pytest.approx(40.0, rel=1e-11)
    assert 0.0 < m.r < 1e-5


# --------------------------------------------------------------------------
# phi_k

def test_phi_identity_degree():
    p = modulus_params_ac(0.3, 0.8)
    for r in (0.1, 0.5, 0.9):
        assert phi_k(p, 1.0, r) == pytest.approx(r, rel=1e-12)


def test_phi_inverse_pair():
    # scalar round trip where s stays well away from 1...
    p = modulus_params_ac(0.4, 0.9)
    for K in (1.5, 2.0):
        for r in (0.2, 0.6):
            s = phi_k(p, K, r)
            back = phi_k(p, 1.0 / K, s)
            assert back == pytest.approx(r, abs=1e-9)
    # ...and through the pair interface where s' drops below float
    # resolution of 1-s (K=5 from r=0.95 already needs it)
    for K in (5.0, 10.0):
        for r in (0.2, 0.95):
            s = phi_k_m(p, DegreeK(K), Modulus.from_r(r))
            back = phi_k_m(p, DegreeK(1.0 / K), s)
            assert back.r == pytest.approx(r, abs=1e-10)


def test_phi_classical_frozen():
    got = phi_k(P_CLASSICAL, 2.0, 0.5)
    assert got == pytest.approx(0.9428090415820633658677925, rel=1e-11)
    # the classical degree-2 Landen form, as an anchor for the oracle
    assert got == pytest.approx(2.0 * math.sqrt(0.5) / 1.5, rel=1e-11)


def test_phi_functional_equation():
    # composed through the pair API: mu of a bare float s cannot see s'
    # once it falls under the spacing of doubles near 1 (K=10 already
    # pushes s' to 5e-7 from r=0.37)
    p = modulus_params_ac(0.3, 0.8)
    m = Modulus.from_r(0.37)
    for K in (1.25, 2.0, 10.0):
        s = phi_k_m(p, DegreeK(K), m)
        assert mu_m(p, s).value == pytest.approx(
            mu_m(p, m).value / K, rel=1e-10)


def test_phi_monotone_in_r():
    p = modulus_params_ac(0.5, 1.0)
    vals = [phi_k(p, 2.0, r) for r in (0.1, 0.3, 0.5, 0.7, 0.9)]
    assert all(x < y for x, y in zip(vals, vals[1:]))


# --------------------------------------------------------------------------
# modular_solve

def test_solve_degree_one():
    p = modulus_params_ac(0.3, 0.8)
    assert modular_solve(p, 1.0, 0.44) == pytest.approx(0.44, rel=1e-12)


def test_solve_inverse_degrees():
    p = modulus_params_ac(0.4, 0.9)
    s = modular_solve(p, 2.0, 0.7)
    assert modular_solve(p, 0.5, s) == pytest.approx(0.7, abs=1e-10)


def test_solve_degree_three_frozen():
    p = modulus_params_ac(0.25, 1.0)
    s = modular_solve(p, 3.0, 0.6)
    assert s == pytest.approx(0.005052235666512477599151527, rel=1e-9)


# --------------------------------------------------------------------------
# derivatives

def test_mu_deriv_classical_recipe():
    # -B^3 M / (4 r r'^2 K(r)^2) with M = 1/pi at the symmetry point
    from genellip import EllipticParams, ell_k
    r = math.sqrt(0.5)
    B = beta(0.5, 0.5).value
    K = ell_k(EllipticParams(0.5, 0.5, 1.0), Modulus.from_r(r)).value
    want = -B ** 3 * (1.0 / math.pi) / (4.0 * r * 0.5 * K * K)
    assert mu_deriv(P_CLASSICAL, r).value == pytest.approx(want, rel=1e-11)


def test_mu_deriv_negative():
    for (a, c) in ((0.5, 1.0), (0.3, 0.6)):
        p = modulus_params_ac(a, c)
        for r in (0.05, 0.5, 0.95):
            assert mu_deriv(p, r).value < 0.0


def test_mu_deriv_matches_central_difference():
    p = ModulusParams(0.3, 0.4, 0.6)
    r, h = 0.45, 1e-5
    num = (mu(p, r + h).value - mu(p, r - h).value) / (2.0 * h)
    assert mu_deriv(p, r).value == pytest.approx(num, rel=1e-7)


def test_phi_deriv_identity_degree():
    p = modulus_params_ac(0.3, 0.8)
    assert phi_deriv(p, 1.0, 0.5).value == pytest.approx(1.0, rel=1e-10)


def test_phi_deriv_matches_central_difference():
    p = P_CLASSICAL
    r, h = 0.5, 1e-6
    num = (phi_k(p, 2.0, r + h) - phi_k(p, 2.0, r - h)) / (2.0 * h)
    assert phi_deriv(p, 2.0, r).value == pytest.approx(num, rel=1e-7)


def test_closed_derivative_forms_power_case():
    # a+b+1 = 2c holds for the classical (0.5, 0.5, 1)
    p = P_CLASSICAL
    r = 0.37
    assert mu_deriv_closed(p, r).value == pytest.approx(
        mu_deriv(p, r).value, rel=1e-9)
    assert phi_deriv_closed(p, 2.0, r).value == pytest.approx(
        phi_deriv(p, 2.0, r).value, rel=1e-9)
    with pytest.raises(ParameterError):
        mu_deriv_closed(ModulusParams(0.3, 0.4, 0.6), r)


# --------------------------------------------------------------------------
# log-odds coordinates

def test_logit_round_trip():
    for x in (-30.0, -2.0, 0.0, 1.7, 40.0):
        assert p_logit(q_modulus(x)) == pytest.approx(x, abs=1e-12)


def test_q_modulus_symmetry():
    m = q_modulus(0.0)
    assert m.r == pytest.approx(math.sqrt(0.5), rel=1e-15)


def test_phi_logodds_identity_degree():
    p = modulus_params_ac(0.3, 0.8)
    for x in (-5.0, 0.0, 7.0):
        assert phi_logodds(p, DegreeK(1.0), x) == pytest.approx(x, abs=1e-9)


def test_degree_validation():
    with pytest.raises(ParameterError):
        DegreeK(0.0)
    with pytest.raises(ParameterError):
        DegreeK(math.inf)


def test_mu_domain_errors():
    p = modulus_params_ac(0.5, 1.0)
    with pytest.raises(DomainError):
        mu(p, 0.0)
    with pytest.raises(DomainError):
        mu(p, 1.0)
    with pytest.raises(DomainError):
        mu_inv(p, -1.0)


# --------------------------------------------------------------------------
# properties

@given(st.floats(min_value=0.02, max_value=0.9))
@settings(max_examples=100, deadline=None)
def test_mu_strictly_decreasing(r):
    p = modulus_params_ac(0.3, 0.8)
    assert mu(p, r).value > mu(p, r + 0.02).value


@given(st.floats(min_value=0.05, max_value=0.95),
       st.floats(min_value=0.15, max_value=0.85))
@settings(max_examples=100, deadline=None)
def test_mu_product_identity(r, a):
    c = min(1.0, a + 0.4)
    if a >= c:
        return
    p = modulus_params_ac(a, c)
    rc = math.sqrt((1.0 - r) * (1.0 + r))
    lhs = mu(p, r).value * mu(p, rc).value
    assert lhs == pytest.approx(half_beta(p) ** 2, rel=1e-10)


@given(st.floats(min_value=0.1, max_value=0.9),
       st.floats(min_value=1.01, max_value=20.0))
@settings(max_examples=100, deadline=None)
def test_phi_round_trip_property(r, K):
    p = modulus_params_ac(0.5, 1.0)
    s = phi_k_m(p, DegreeK(K), Modulus.from_r(r))
    assert r ** (1.0 / K) < s.r <= 1.0  # lower bound of the sandwich
    assert phi_k_m(p, DegreeK(1.0 / K), s).r == pytest.approx(r, abs=1e-9)
