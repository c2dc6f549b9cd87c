"""Generalized modulus, its inverse, and the modular function.

    mu(r) = (B(a,b)/2) F(a,b;c;r'^2) / F(a,b;c;r^2),

a strictly decreasing homeomorphism of (0,1) onto (0,infinity); the modular
function phi_K(r) = mu^{-1}(mu(r)/K) solves the modular equation
mu(s) = p mu(r) of degree p = 1/K.  For (a,b,c) = (1/2,1/2,1), mu is the
classical Groetzsch ring modulus (2/pi) mu would be... the plane ring
modulus, and phi_K the Hersch-Pfluger distortion function.

The inverse is found by a bracketed secant/bisection hybrid driven in the
variables t = log(r^2/r'^2) (so that both endpoints stretch to infinity)
and log(mu) (uniform conditioning across decades).  Near the endpoints a
solution is kept as the exact pair (r^2, r'^2): the float r alone would
round to 0 or 1 long before mu exhausts its range, so the pair-returning
variants are the precise API and the float-returning ones are projections.
"""

from __future__ import annotations

import functools
import math
import os
from dataclasses import dataclass

from .elliptic import Modulus
from .errors import ConvergenceError, DomainError, ParameterError, SaturationError
from .hypergeom import _eval_pair
from .legendre_m import MPoint, m_value
from .result import EvalResult, Method
from .scalar_special import _lngamma_signed, beta_ln

_T_MAX = 700.0
_K_LO, _K_HI = 1e-3, 1e3
_DEFAULT_ITERS = 200


@dataclass(frozen=True)
class ModulusParams:
    """Parameters (a,b,c) with a,b,c > 0 and a+b >= c (the mu domain)."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and 0.0 < v <= 50.0):
                raise ParameterError(f"{name} must lie in (0, 50], got {v!r}")
            object.__setattr__(self, name, float(v))
        if self.a + self.b < self.c:
            raise ParameterError(
                f"mu needs a+b >= c, got a+b={self.a + self.b!r}, c={self.c!r}")

    @property
    def reduced(self) -> bool:
        """True for the b = c-a sub-family with 0 < a < c <= 1."""
        return (abs(self.b - (self.c - self.a)) <= 1e-12
                and 0.0 < self.a < self.c <= 1.0)

    @property
    def half_beta(self) -> float:
        return 0.5 * math.exp(beta_ln(self.a, self.b))


def modulus_params_ac(a: float, c: float) -> ModulusParams:
    """The two-parameter family mu_{a,c} = mu_{a,c-a,c}; needs 0 < a < c."""
    if not (isinstance(a, (int, float)) and isinstance(c, (int, float))
            and math.isfinite(a) and math.isfinite(c) and 0.0 < a < c):
        raise ParameterError(f"need 0 < a < c, got a={a!r}, c={c!r}")
    return ModulusParams(float(a), float(c) - float(a), float(c))


@dataclass(frozen=True)
class DegreeK:
    """Degree parameter of the modular equation; p = 1/K is the degree."""

    K: float

    def __post_init__(self):
        if not (isinstance(self.K, (int, float)) and math.isfinite(self.K) and self.K > 0):
            raise ParameterError(f"K must be a finite positive real, got {self.K!r}")
        object.__setattr__(self, "K", float(self.K))

    @property
    def p(self) -> float:
        return 1.0 / self.K


def _as_degree(K) -> float:
    if isinstance(K, DegreeK):
        return K.K
    return DegreeK(K).K


def _sigmoid(t: float) -> float:
    if t >= 0.0:
        return 1.0 / (1.0 + math.exp(-t))
    e = math.exp(t)
    return e / (1.0 + e)


def _modulus_from_t(t: float) -> Modulus:
    z = _sigmoid(t)
    zc = _sigmoid(-t)
    r = math.sqrt(z) if z > 0.0 else math.exp(0.5 * t)
    rc = math.sqrt(zc) if zc > 0.0 else math.exp(-0.5 * t)
    return Modulus(r, rc)


def _log_mu_pair(p: ModulusParams, z: float, zc: float) -> float:
    num = _eval_pair(p.a, p.b, p.c, zc, z)
    den = _eval_pair(p.a, p.b, p.c, z, zc)
    return math.log(p.half_beta) + math.log(num.value) - math.log(den.value)


def _iter_budget() -> int:
    raw = os.environ.get("GENELLIP_MAX_ITERS", "")
    try:
        n = int(raw)
    except ValueError:
        return _DEFAULT_ITERS
    return n if n > 0 else _DEFAULT_ITERS


@functools.lru_cache(maxsize=1 << 16)
def _solve_log_mu(a: float, b: float, c: float, log_target: float) -> float:
    """Return t = log(s^2/s'^2) with log mu(s) = log_target.

    g(t) = log mu - log_target is strictly decreasing; bracket by geometric
    expansion from the origin, then a secant/bisection hybrid.
    """
    p = ModulusParams(a, b, c)

    def g(t: float) -> float:
        return _log_mu_pair(p, _sigmoid(t), _sigmoid(-t)) - log_target

    budget = _iter_budget()
    evals = 0
    lo, hi = -2.0, 2.0
    glo = g(lo)
    ghi = g(hi)
    evals += 2
    while glo < 0.0:  # mu(lo) already below target: push lo toward r=0
        if lo <= -_T_MAX:
            raise SaturationError(
                f"target mu={math.exp(log_target)!r} exceeds the value "
                f"attainable at the smallest representable modulus", endpoint=0.0)
        hi, ghi = lo, glo
        lo = max(2.0 * lo, -_T_MAX)
        glo = g(lo)
        evals += 1
    while ghi > 0.0:
        if hi >= _T_MAX:
            raise SaturationError(
                f"target mu={math.exp(log_target)!r} is below the value "
                f"attainable at the largest representable modulus", endpoint=1.0)
        lo, glo = hi, ghi
        hi = min(2.0 * hi, _T_MAX)
        ghi = g(hi)
        evals += 1
    if glo == 0.0:
        return lo
    if ghi == 0.0:
        return hi
    t0, g0 = lo, glo
    t1, g1 = hi, ghi
    while evals < budget:
        if g0 != g1:
            t2 = t1 - g1 * (t1 - t0) / (g1 - g0)
        else:
            t2 = 0.5 * (lo + hi)
        if not lo < t2 < hi:
            t2 = 0.5 * (lo + hi)
        g2 = g(t2)
        evals += 1
        if g2 == 0.0:
            return t2
        if g2 > 0.0:
            lo, glo = t2, g2
        else:
            hi, ghi = t2, g2
        t0, g0 = t1, g1
        t1, g1 = t2, g2
        if abs(g2) <= 1e-13 * (1.0 + abs(log_target)) or hi - lo <= 4e-16 * max(1.0, abs(t2)):
            return t2
    if abs(g1) <= 1e-12:
        return t1
    raise ConvergenceError(
        f"mu inversion did not reach tolerance within {budget} evaluations "
        f"(residual {g1!r} in log mu)")


def mu_m(p: ModulusParams, m: Modulus) -> EvalResult:
    """mu at a modulus carried as an exact (r, r') pair."""
    if m.r <= 0.0 or m.r_comp <= 0.0:
        raise DomainError(f"mu needs 0 < r < 1, got r={m.r!r}")
    hb = p.half_beta
    num = _eval_pair(p.a, p.b, p.c, m.z_comp, m.z)
    den = _eval_pair(p.a, p.b, p.c, m.z, m.z_comp)
    value = hb * num.value / den.value
    rel = (num.abs_err_est / abs(num.value) + den.abs_err_est / abs(den.value) + 4e-15)
    return EvalResult(value, abs(value) * rel, num.method)


def mu(p: ModulusParams, r: float) -> EvalResult:
    """The generalized modulus; strictly decreasing from (0,1) onto (0,oo)."""
    if not (isinstance(r, (int, float)) and 0.0 < r < 1.0):
        raise DomainError(f"mu needs 0 < r < 1, got r={r!r}")
    return mu_m(p, Modulus.from_r(float(r)))


def mu_inv_m(p: ModulusParams, y: float) -> Modulus:
    """Inverse modulus as an exact pair; mu(result) = y to ~1e-13 relative."""
    if not (isinstance(y, (int, float)) and math.isfinite(y) and y > 0.0):
        raise DomainError(f"mu_inv needs y > 0, got {y!r}")
    t = _solve_log_mu(p.a, p.b, p.c, math.log(y))
    return _modulus_from_t(t)


def mu_inv(p: ModulusParams, y: float) -> float:
    """Inverse modulus as a float in (0,1); see mu_inv_m for the exact pair."""
    return mu_inv_m(p, y).r


def phi_k_m(p: ModulusParams, K, m: Modulus) -> Modulus:
    """phi_K at an exact pair, returned as an exact pair."""
    k = _as_degree(K)
    if not _K_LO <= k <= _K_HI:
        raise SaturationError(
            f"K={k!r} outside [{_K_LO}, {_K_HI}]: phi_K saturates numerically",
            endpoint=1.0 if k > 1.0 else 0.0)
    if k == 1.0:
        return m
    log_target = math.log(mu_m(p, m).value) - math.log(k)
    return _modulus_from_t(_solve_log_mu(p.a, p.b, p.c, log_target))


def phi_k(p: ModulusParams, K, r: float) -> float:
    """phi_K(r) = mu^{-1}(mu(r)/K); K > 1 pushes toward 1, K < 1 toward 0."""
    if not (isinstance(r, (int, float)) and 0.0 < r < 1.0):
        raise DomainError(f"phi_K needs 0 < r < 1, got r={r!r}")
    return phi_k_m(p, K, Modulus.from_r(float(r))).r


def modular_solve(p: ModulusParams, degree_p: float, r: float) -> float:
    """Solve mu(s) = degree_p * mu(r) for s; equals phi_K with K = 1/degree_p."""
    if not (isinstance(degree_p, (int, float)) and math.isfinite(degree_p)
            and degree_p > 0):
        raise DomainError(f"degree must be a positive real, got {degree_p!r}")
    return phi_k(p, 1.0 / degree_p, r)


def mu_deriv(p: ModulusParams, r: float) -> EvalResult:
    """d mu/dr = -B(a,b) M(r^2) / (r r'^2 F(a,b;c;r^2)^2); negative throughout."""
    if not (isinstance(r, (int, float)) and 0.0 < r < 1.0):
        raise DomainError(f"mu_deriv needs 0 < r < 1, got r={r!r}")
    m = Modulus.from_r(float(r))
    v = _eval_pair(p.a, p.b, p.c, m.z, m.z_comp)
    M = m_value(MPoint(p.a, p.b, p.c, m.z))
    B = 2.0 * p.half_beta
    value = -B * M.value / (m.r * m.z_comp * v.value * v.value)
    rel = (M.abs_err_est / abs(M.value) + 2.0 * v.abs_err_est / abs(v.value) + 5e-15)
    return EvalResult(value, abs(value) * rel, M.method)


def phi_deriv(p: ModulusParams, K, r: float) -> EvalResult:
    """ds/dr for s = phi_K(r):

    ds/dr = (1/K) (M(r^2)/M(s^2)) (s s'^2 F(s^2)^2) / (r r'^2 F(r^2)^2)
    """
    if not (isinstance(r, (int, float)) and 0.0 < r < 1.0):
        raise DomainError(f"phi_deriv needs 0 < r < 1, got r={r!r}")
    k = _as_degree(K)
    m = Modulus.from_r(float(r))
    s = phi_k_m(p, k, m)
    if not 0.0 < s.z < 1.0:
        raise DomainError(f"phi_K(r) saturated to {s.r!r}; derivative not representable")
    vr = _eval_pair(p.a, p.b, p.c, m.z, m.z_comp)
    vs = _eval_pair(p.a, p.b, p.c, s.z, s.z_comp)
    Mr = m_value(MPoint(p.a, p.b, p.c, m.z))
    Ms = m_value(MPoint(p.a, p.b, p.c, s.z))
    value = (Mr.value / Ms.value) * (s.r * s.z_comp * vs.value * vs.value) \
        / (k * m.r * m.z_comp * vr.value * vr.value)
    rel = (Mr.abs_err_est / abs(Mr.value) + Ms.abs_err_est / abs(Ms.value)
           + 2.0 * vs.abs_err_est / abs(vs.value) + 2.0 * vr.abs_err_est / abs(vr.value)
           + 1e-12)
    return EvalResult(value, abs(value) * rel, Mr.method)


def _require_power_case(p: ModulusParams) -> None:
    if abs(p.a + p.b + 1.0 - 2.0 * p.c) > 1e-12:
        raise ParameterError(
            f"closed form needs a+b+1 = 2c, got a+b+1-2c={p.a + p.b + 1 - 2 * p.c!r}")


def mu_deriv_closed(p: ModulusParams, r: float) -> EvalResult:
    """For a+b+1 = 2c:  d mu/dr = -D / (r^(2c-1) r'^(2c) K(r)^2)
    with D = (Gamma(a)Gamma(b)Gamma(c))^2 / (4 Gamma(a+b)^3)."""
    _require_power_case(p)
    if not (isinstance(r, (int, float)) and 0.0 < r < 1.0):
        raise DomainError(f"need 0 < r < 1, got r={r!r}")
    m = Modulus.from_r(float(r))
    la, _ = _lngamma_signed(p.a)
    lb, _ = _lngamma_signed(p.b)
    lc, _ = _lngamma_signed(p.c)
    lab, _ = _lngamma_signed(p.a + p.b)
    D = math.exp(2.0 * (la + lb + lc) - 3.0 * lab) / 4.0
    Kr = p.half_beta * _eval_pair(p.a, p.b, p.c, m.z, m.z_comp).value
    value = -D / (m.r ** (2.0 * p.c - 1.0) * m.z_comp ** p.c * Kr * Kr)
    return EvalResult(value, abs(value) * 1e-12, Method.CLOSED_FORM)


def phi_deriv_closed(p: ModulusParams, K, r: float) -> EvalResult:
    """For a+b+1 = 2c:  ds/dr = (1/K)(s/r)^(2c-1)(s'/r')^(2c)(K(s)/K(r))^2."""
    _require_power_case(p)
    if not (isinstance(r, (int, float)) and 0.0 < r < 1.0):
        raise DomainError(f"need 0 < r < 1, got r={r!r}")
    k = _as_degree(K)
    m = Modulus.from_r(float(r))
    s = phi_k_m(p, k, m)
    if not 0.0 < s.z < 1.0:
        raise DomainError(f"phi_K(r) saturated to {s.r!r}; derivative not representable")
    Fr = _eval_pair(p.a, p.b, p.c, m.z, m.z_comp).value
    Fs = _eval_pair(p.a, p.b, p.c, s.z, s.z_comp).value
    value = (s.r / m.r) ** (2.0 * p.c - 1.0) * (s.z_comp / m.z_comp) ** p.c \
        * (Fs / Fr) ** 2 / k
    return EvalResult(value, abs(value) * 1e-12, Method.CLOSED_FORM)


def q_modulus(x: float) -> Modulus:
    """q(x) = sqrt(e^x/(e^x+1)) as an exact pair; inverse of p_logit."""
    if not (isinstance(x, (int, float)) and math.isfinite(x) and abs(x) <= _T_MAX):
        raise DomainError(f"q needs a finite x with |x| <= {_T_MAX}, got {x!r}")
    return _modulus_from_t(float(x))


def p_logit(m: Modulus) -> float:
    """p(r) = 2 log(r/r') = log(r^2) - log(r'^2), exact on extreme pairs."""
    if m.r <= 0.0 or m.r_comp <= 0.0:
        raise DomainError("p is defined on 0 < r < 1 only")
    if m.z_comp < 0.5:
        return math.log1p(-m.z_comp) - math.log(m.z_comp)
    return math.log(m.z) - math.log1p(-m.z)


def phi_logodds(p: ModulusParams, K, x: float) -> float:
    """p(phi_K(q(x))): the modular function conjugated to log-odds coordinates."""
    return p_logit(phi_k_m(p, K, q_modulus(x)))
