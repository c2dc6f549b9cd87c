"""Gauss hypergeometric evaluation tests.

Frozen decimals come from the raw-series oracle in tests/oracles.py
(60-digit arithmetic, geometric tail bound).
"""

import math

import pytest
from hypothesis import given, settings, strategies as st

from genellip import (
    HypParams,
    contiguous_shift,
    euler_transform,
    hyp2f1,
    hyp2f1_deriv,
    hyp2f1_pair,
    hyp2f1_zero_balanced_near_one,
    beta,
    gamma_ln,
)
from genellip.errors import DomainError, ParameterError
from genellip.result import Method


def gauss_value(a, b, c):
    """F(a,b;c;1) for c > a+b, by the log-gamma route."""
    return math.exp(gamma_ln(c).value + gamma_ln(c - a - b).value
                    - gamma_ln(c - a).value - gamma_ln(c - b).value)


# --------------------------------------------------------------------------
# basic values

def test_value_at_zero_is_one():
    for p in (HypParams(0.5, 0.5, 1.0), HypParams(2.0, 3.0, 0.7)):
        assert hyp2f1(p, 0.0).value == 1.0


def test_frozen_half_half_one():
    r = hyp2f1(HypParams(0.5, 0.5, 1.0), 0.5)
    assert r.value == pytest.approx(1.180340599016096226045338, rel=1e-14)


def test_gauss_limit_c_greater_ab():
    # c > a+b: F converges at z=1 to the Gauss value; the approach rate
    # is (1-z)^(c-a-b), so the bound scales with that factor
    a, b, c = 0.3, 0.4, 1.1
    want = gauss_value(a, b, c)
    eps = 1e-12
    got = hyp2f1(HypParams(a, b, c), 1.0 - eps).value
    assert abs(got - want) <= 5.0 * eps ** (c - a - b) * want


def test_frozen_near_one_zero_balanced():
    # (0.3, 0.7, 1.0) is zero balanced; z=0.99 exercises the connection route
    r = hyp2f1(HypParams(0.3, 0.7, 1.0), 0.99)
    assert r.value == pytest.approx(2.107710917717898159567188, rel=1e-12)


def test_frozen_near_one_c_exceeds_ab():
    r = hyp2f1(HypParams(0.2, 0.3, 1.0), 0.999)
    assert r.value == pytest.approx(1.164827014619428883209214, rel=1e-12)


def test_ramanujan_asymptote():
    # B F(z) + log(1-z) -> R(a,b) as z -> 1 in the zero-balanced case
    p = HypParams(0.5, 0.5, 1.0)
    z = 1.0 - 1e-8
    B = beta(0.5, 0.5).value
    lhs = B * hyp2f1(p, z).value + math.log1p(-z)
    assert abs(lhs - math.log(16.0)) <= 1e-6


def test_internal_route_crosscheck_z09():
    # direct series against the pair-aware ladder at its switch region
    p = HypParams(0.5, 0.5, 1.0)
    direct = hyp2f1(p, 0.9)
    paired = hyp2f1_pair(p, 0.9, 0.1)
    assert abs(direct.value - paired.value) <= \
        direct.abs_err_est + paired.abs_err_est + 1e-15 * direct.value


# --------------------------------------------------------------------------
# near-one helper and Euler transform

def test_zero_balanced_near_one_helper():
    p = HypParams(0.5, 0.5, 1.0)
    r = hyp2f1_zero_balanced_near_one(p, 1.0 - 1e-8)
    assert r.value == pytest.approx(hyp2f1(p, 1.0 - 1e-8).value, rel=1e-9)


def test_euler_identity_instance():
    p = HypParams(0.5, 0.5, 1.0)
    assert euler_transform(p, 0.5).value == pytest.approx(
        hyp2f1(p, 0.5).value, rel=1e-11)


def test_euler_c_exceeds_ab_near_one():
    # a+b < c keeps the transformed value finite all the way up
    p = HypParams(0.2, 0.3, 1.0)
    r = euler_transform(p, 0.999)
    assert math.isfinite(r.value)
    assert r.value == pytest.approx(1.164827014619428883209214, rel=1e-9)


def test_euler_at_zero():
    assert euler_transform(HypParams(0.4, 1.1, 2.0), 0.0).value == \
        pytest.approx(1.0, rel=1e-15)


@given(st.floats(min_value=0.05, max_value=0.95),
       st.floats(min_value=0.1, max_value=3.0),
       st.floats(min_value=0.1, max_value=3.0),
       st.floats(min_value=0.05, max_value=2.0))
@settings(max_examples=200, deadline=None)
def test_euler_transform_residual(z, a, b, extra):
    """(1-z)^(c-a-b) F(c-a,c-b;c;z) = F(a,b;c;z) when c > max(a,b)."""
    c = max(a, b) + extra
    p = HypParams(a, b, c)
    lhs = euler_transform(p, z)
    rhs = hyp2f1(p, z)
    tol = 5.0 * (lhs.abs_err_est + rhs.abs_err_est) + 1e-12 * abs(rhs.value)
    assert abs(lhs.value - rhs.value) <= tol


# --------------------------------------------------------------------------
# contiguous shifts and the derivative

def test_shift_a_minus_is_e_kernel():
    # F(a-1,b;c;r^2) is the E-integrand kernel: scaled E equals (B/2) F(a-)
    from genellip import EllipticParams, Modulus, ell_e
    p = HypParams(0.5, 0.5, 1.0)
    ep = EllipticParams(0.5, 0.5, 1.0)
    r = 0.6
    f = contiguous_shift(p, "a_minus", r * r)
    e = ell_e(ep, Modulus.from_r(r))
    B = beta(0.5, 0.5).value
    assert e.value == pytest.approx(0.5 * B * f.value, rel=1e-12)


def test_shift_c_plus_at_zero():
    assert contiguous_shift(HypParams(1.0, 1.0, 2.0), "c_plus", 0.0).value \
        == 1.0


def test_shift_a_plus_frozen():
    r = contiguous_shift(HypParams(0.4, 0.6, 1.2), "a_plus", 0.7)
    assert r.value == pytest.approx(2.375800693417542594734975, rel=1e-12)


def test_shift_rejects_unknown_selector():
    with pytest.raises(ParameterError):
        contiguous_shift(HypParams(0.5, 0.5, 1.0), "d_plus", 0.3)


def test_deriv_matches_central_difference():
    p = HypParams(0.4, 0.8, 1.1)
    z, h = 0.35, 1e-6
    want = (hyp2f1(p, z + h).value - hyp2f1(p, z - h).value) / (2.0 * h)
    assert hyp2f1_deriv(p, z).value == pytest.approx(want, rel=1e-8)


# --------------------------------------------------------------------------
# structural properties

@given(st.floats(min_value=0.1, max_value=5.0),
       st.floats(min_value=0.1, max_value=5.0),
       st.floats(min_value=0.2, max_value=5.0),
       st.floats(min_value=0.0, max_value=0.95))
@settings(max_examples=200, deadline=None)
def test_symmetric_in_a_b(a, b, c, z):
    lhs = hyp2f1(HypParams(a, b, c), z).value
    rhs = hyp2f1(HypParams(b, a, c), z).value
    assert lhs == pytest.approx(rhs, rel=1e-13)


@given(st.floats(min_value=0.05, max_value=0.9))
@settings(max_examples=100, deadline=None)
def test_positive_series_monotone_in_z(z):
    # positive parameters give a positive-coefficient series
    p = HypParams(0.5, 0.7, 1.3)
    assert hyp2f1(p, z + 0.05).value > hyp2f1(p, z).value >= 1.0


def test_error_estimate_covers_truth():
    # frozen oracle points: estimate must cover the actual error
    cases = [
        (HypParams(0.5, 0.5, 1.0), 0.5, 1.180340599016096226045338),
        (HypParams(0.3, 0.7, 1.0), 0.99, 2.107710917717898159567188),
        (HypParams(0.2, 0.3, 1.0), 0.999, 1.164827014619428883209214),
    ]
    for p, z, want in cases:
        r = hyp2f1(p, z)
        assert abs(r.value - want) <= 20.0 * r.abs_err_est + 5e-15 * want


def test_method_tags():
    assert hyp2f1(HypParams(0.5, 0.5, 1.0), 0.3).method is Method.SERIES
    near = hyp2f1(HypParams(0.5, 0.5, 1.0), 1.0 - 1e-10).method
    assert near in (Method.TRANSFORM_NEAR_ONE, Method.ASYMPTOTIC)


def test_domain_rejections():
    with pytest.raises((DomainError, ParameterError)):
        hyp2f1(HypParams(0.5, 0.5, 1.0), 1.5)
    with pytest.raises((DomainError, ParameterError)):
        hyp2f1(HypParams(0.5, 0.5, 1.0), -0.2)
    with pytest.raises(ParameterError):
        HypParams(-0.5, 0.5, 1.0)
    with pytest.raises(ParameterError):
        HypParams(0.5, 0.5, 51.0)
