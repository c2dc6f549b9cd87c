"""Verification engine and registry tests.

A(0.3, 0.8, t=2) was frozen from the Gamma oracle; it reduces to the
rational 25/48 (Gamma(2.5)Gamma(0.8)/(Gamma(2.8)Gamma(0.5)), where both
Gamma(0.8) factors cancel through the recurrence).
"""

import math

import pytest

from genellip import modulus_params_ac, mu, mu_deriv
from genellip.errors import ParameterError
from genellip.verify import (
    CheckReport,
    CheckSpec,
    GridDim,
    GridSpec,
    finite_diff,
    pab,
    registry,
    run_check,
    select,
)

P_CL = modulus_params_ac(0.5, 1.0)


# --------------------------------------------------------------------------
# grids

def test_grid_points_linear():
    d = GridDim("x", 0.0, 1.0, 5, "linear")
    assert list(d.points()) == pytest.approx([0.0, 0.25, 0.5, 0.75, 1.0])


def test_grid_points_log():
    d = GridDim("x", 0.01, 100.0, 5, "log")
    pts = list(d.points())
    assert pts[0] == pytest.approx(0.01)
    assert pts[-1] == pytest.approx(100.0)
    ratios = [pts[i + 1] / pts[i] for i in range(4)]
    assert max(ratios) == pytest.approx(min(ratios), rel=1e-9)


def test_grid_points_logit_symmetric():
    d = GridDim("r", 0.001, 0.999, 9, "logit")
    pts = list(d.points())
    assert pts[0] == pytest.approx(0.001)
    assert pts[-1] == pytest.approx(0.999)
    # logit spacing is symmetric about 1/2
    for lo, hi in zip(pts, reversed(pts)):
        assert lo == pytest.approx(1.0 - hi, abs=1e-12)


def test_grid_pinned_values():
    d = GridDim("K", 0.0, 0.0, 1, "linear", values=(2.0, 5.0))
    assert tuple(d.points()) == (2.0, 5.0)
    with pytest.raises(ParameterError):
        GridDim("K", 0.0, 0.0, 1, "linear", values=())


def test_grid_validation():
    with pytest.raises(ParameterError):
        GridDim("x", 1.0, 0.0, 5, "linear")  # lo >= hi
    with pytest.raises(ParameterError):
        GridDim("x", 0.0, 1.0, 2, "linear")  # count < 3
    with pytest.raises(ParameterError):
        GridDim("x", 0.0, 1.0, 5, "cubic")   # unknown scale


def test_gridspec_combos():
    g = GridSpec((GridDim("a", 0.0, 1.0, 3, "linear"),
                  GridDim("b", 0.0, 0.0, 1, "linear", values=(7.0,))))
    combos = list(g.combos())
    assert len(combos) == 3
    assert combos[0] == {"a": 0.0, "b": 7.0}


# --------------------------------------------------------------------------
# pab notation

def test_pab_at_zero_shift():
    n = pab(0.3, 0.8, 0.0)
    assert n.A == 1.0
    assert n.A_tilde == 1.0
    assert n.B_t == pytest.approx(0.0, abs=1e-15)


def test_pab_frozen_gamma_oracle():
    n = pab(0.3, 0.8, 2.0)
    assert n.A == pytest.approx(0.5208333333333333, rel=1e-13)
    assert n.A == pytest.approx(25.0 / 48.0, rel=1e-13)


def test_pab_bt_increasing():
    vals = [pab(0.3, 0.8, t).B_t for t in (0.0, 0.5, 1.0, 2.0, 4.0)]
    assert all(x < y for x, y in zip(vals, vals[1:]))
    assert vals[0] == pytest.approx(0.0, abs=1e-15)


def test_pab_validation():
    with pytest.raises(ParameterError):
        pab(0.8, 0.3, 1.0)  # needs a < c
    with pytest.raises(ParameterError):
        pab(0.3, 0.8, -1.0)


# --------------------------------------------------------------------------
# finite differences

def test_finite_diff_square():
    d = finite_diff(lambda x: x * x, 3.0, 1e-4)
    assert d.first == pytest.approx(6.0, rel=1e-9)
    assert d.second == pytest.approx(2.0, rel=1e-6)


def test_finite_diff_constant():
    d = finite_diff(lambda x: 4.2, 1.0, 1e-4)
    assert d.first == pytest.approx(0.0, abs=1e-9)
    assert d.second == pytest.approx(0.0, abs=1e-5)


def test_finite_diff_matches_mu_deriv():
    d = finite_diff(lambda r: mu(P_CL, r).value, 0.4, 1e-5)
    assert d.first == pytest.approx(mu_deriv(P_CL, 0.4).value, rel=1e-9)


# --------------------------------------------------------------------------
# run_check on hand-built specs

R_GRID = GridSpec((GridDim("r", 0.01, 0.99, 17, "logit"),))
A_CASES = GridSpec((GridDim("a", 0.0, 0.0, 1, "linear", values=(0.5,)),))


def test_identity_check_passes():
    # M(0.5, 0.5, 1, r^2) = 1/pi as an engine identity check
    from genellip import MPoint, m_value

    def lhs(d, r):
        v = m_value(MPoint(0.5, 0.5, 1.0, r * r))
        return v.value, v.abs_err_est

    spec = CheckSpec(
        id="t-classical-m", kind="identity",
        claim="classical M is the constant 1/pi",
        param_grid=A_CASES, arg_grid=R_GRID, tolerance=1e-10,
        fn=lhs, rhs=lambda d, r: (1.0 / math.pi, 0.0))
    rep = run_check(spec)
    assert rep.verdict == "pass"
    assert rep.worst_margin <= 1e-10
    assert rep.samples >= 17


def test_inverted_predicate_fails_with_witness():
    # deliberately wrong: mu is decreasing, claim increasing
    def f(d, r):
        v = mu(P_CL, r)
        return v.value, v.abs_err_est

    spec = CheckSpec(
        id="t-mu-increasing", kind="monotone", direction=1,
        claim="deliberately inverted: mu increasing",
        param_grid=A_CASES, arg_grid=R_GRID, tolerance=1e-9, fn=f)
    rep = run_check(spec)
    assert rep.verdict == "fail"
    assert rep.witness is not None
    assert "r" in rep.witness or "arg" in rep.witness


def test_quotient_c_dependence_check():
    # F(a,b;c;x)/F(a,b;c;y) with x<y, decreasing in c; direct evaluation
    from genellip import HypParams, hyp2f1

    def quot(d, c):
        num = hyp2f1(HypParams(0.4, 0.6, c), 0.2)
        den = hyp2f1(HypParams(0.4, 0.6, c), 0.7)
        v = num.value / den.value
        e = (num.abs_err_est / den.value
             + abs(v) * den.abs_err_est / den.value)
        return v, e

    spec = CheckSpec(
        id="t-quot-c", kind="monotone", direction=-1,
        claim="x<y: F(c;x)/F(c;y) strictly increasing in c toward 1",
        param_grid=A_CASES,
        arg_grid=GridSpec((GridDim("c", 0.45, 10.0, 25, "log"),)),
        tolerance=1e-9,
        fn=lambda d, c: (lambda v, e: (-v, e))(*quot(d, c)))
    rep = run_check(spec)
    assert rep.verdict == "pass"


def test_report_shape():
    rep = run_check(select("mutheorem-1")[0])
    assert isinstance(rep, CheckReport)
    assert rep.id == "mutheorem-1"
    assert rep.verdict in ("pass", "fail", "inconclusive")
    assert rep.samples > 0


# --------------------------------------------------------------------------
# registry catalog properties

def test_registry_size_and_ids():
    reg = registry()
    assert len(reg) >= 40
    assert len(set(reg)) == len(reg)
    for cid, spec in reg.items():
        assert spec.id == cid
        assert spec.kind in ("monotone", "convex_concave", "range_endpoints",
                             "inequality", "identity", "derivative_match",
                             "limit")
        assert spec.claim


def test_conjectures_not_gating():
    for spec in select("conjectures"):
        assert not spec.gating


def test_select_semantics():
    assert len(select("all")) == len(registry())
    assert [s.id for s in select(["ekmonot-1", "hyper-1"])] == \
        ["ekmonot-1", "hyper-1"]
    with pytest.raises(KeyError):
        select("no-such-id")


def test_spot_checks_pass():
    # a cheap cross-section; the full registry run is the acceptance suite
    for cid in ("hyper-1", "mprop-1", "mutheorem-1", "linconj-g"):
        rep = run_check(select(cid)[0])
        assert rep.verdict == "pass", (cid, rep.witness)
