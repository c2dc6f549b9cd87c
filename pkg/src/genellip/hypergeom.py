"""Gaussian hypergeometric function F(a,b;c;z) on real z in [0, 1).

Below z_switch = 0.75 the Maclaurin series is summed directly (chunked, with
Kahan accumulation and a geometric tail bound).  Above it the evaluation
splits into the classical z -> 1 regimes: the connection formula in powers
of 1-z (Abramowitz & Stegun 15.3.6), the zero-balanced logarithmic
expansion for c = a+b (A&S 15.3.10), and series fallbacks where the
connection coefficients degenerate (c-a-b near an integer).  Callers that
track the complement 1-z exactly can pass it through the pair entry point
to keep full relative accuracy as z -> 1.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError, ParameterError, RegimeError
from .result import EvalResult, Method
from .scalar_special import (
    EULER_GAMMA,
    _is_nonpositive_integer,
    _lngamma_signed,
    digamma,
)

Z_SWITCH = 0.75
_EPS = 1e-15
_ZERO_BALANCED_TOL = 1e-12
_EULER_BAND = 1e-6
_INTEGER_SNAP = 1e-8
_MAX_TERMS = 400_000
_PARAM_CAP = 50.0


@dataclass(frozen=True)
class HypParams:
    """Positive real parameters (a, b, c), each bounded by 50."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v)):
                raise ParameterError(f"{name} must be a finite real, got {v!r}")
            if not 0.0 < v <= _PARAM_CAP:
                raise ParameterError(f"{name} must lie in (0, {_PARAM_CAP}], got {v!r}")
            object.__setattr__(self, name, float(v))


def _gamma_ratio(nums, dens) -> float:
    """Product of Gamma(nums) / product of Gamma(dens); 0 on a denominator pole."""
    ln = 0.0
    sign = 1
    for x in dens:
        if _is_nonpositive_integer(x):
            return 0.0
        l, s = _lngamma_signed(x)
        ln -= l
        sign *= s
    for x in nums:
        l, s = _lngamma_signed(x)
        ln += l
        sign *= s
    return sign * math.exp(ln)


def _digamma_any(x: float) -> float:
    if x > 0:
        return digamma(x).value
    f = x - math.floor(x)
    return digamma(1.0 - x).value - math.pi / math.tan(math.pi * f)


def _direct_series(a: float, b: float, c: float, z: float,
                   max_terms: int = _MAX_TERMS) -> tuple[float, float, int]:
    """Sum the Maclaurin series; returns (value, err_bound, terms_used).

    Stops once three consecutive terms fall below eps*|sum| and the
    geometric tail bound q*|term|/(1-q) with q = max(|last ratio|, z) is
    below eps*|sum|.  The tail bound is only trusted after the coefficient
    ratio has become monotone, i.e. past the largest parameter.
    """
    if z == 0.0:
        return 1.0, 0.0, 1
    total = 1.0
    comp = 0.0
    abs_total = 1.0
    term = 1.0
    k = 0
    min_k = max(64, int(max(abs(a), abs(b), abs(c))) + 2)
    chunk = 64
    while k < max_terms:
        m = min(chunk, max_terms - k)
        ks = np.arange(k, k + m, dtype=np.float64)
        ratios = (a + ks) * (b + ks) / ((c + ks) * (1.0 + ks)) * z
        terms = term * np.cumprod(ratios)
        y = float(np.sum(terms)) - comp
        t = total + y
        comp = (t - total) - y
        total = t
        abs_total += float(np.sum(np.abs(terms)))
        term = float(terms[-1])
        k += m
        if not math.isfinite(total):
            raise ConvergenceError(
                f"hypergeometric series overflowed at z={z!r} "
                f"with (a,b,c)=({a!r},{b!r},{c!r})")
        bound = _EPS * abs(total)
        if m >= 3 and k >= min_k and all(abs(t_) <= bound for t_ in terms[-3:]):
            q = max(abs(float(ratios[-1])), z)
            if q < 1.0:
                tail = abs(term) * q / (1.0 - q)
                if tail <= bound:
                    err = 4e-16 * abs_total + tail + _EPS * abs(total)
                    return total, err, k + 1
        chunk = min(2 * chunk, 8192)
    raise ConvergenceError(
        f"hypergeometric series needed more than {max_terms} terms at z={z!r} "
        f"with (a,b,c)=({a!r},{b!r},{c!r})")


def _zero_balanced(a: float, b: float, u: float) -> tuple[float, float]:
    """Logarithmic expansion of F(a,b;a+b;1-u) for small u (A&S 15.3.10)."""
    lnu = math.log(u)
    h = -_digamma_any(a) - _digamma_any(b) - 2.0 * EULER_GAMMA
    g = 1.0
    total = 0.0
    abs_total = 0.0
    quiet = 0
    for n in range(1000):
        t = g * (h - lnu)
        total += t
        abs_total += abs(t)
        g *= (a + n) * (b + n) / ((n + 1.0) * (n + 1.0)) * u
        h += 2.0 / (n + 1.0) - 1.0 / (a + n) - 1.0 / (b + n)
        if abs(t) <= _EPS * abs(total):
            quiet += 1
            if quiet >= 3:
                tail = 2.0 * abs(t) * u / (1.0 - u)
                if tail <= _EPS * abs(total):
                    break
        else:
            quiet = 0
    else:
        raise ConvergenceError(f"zero-balanced expansion stalled at u={u!r}")
    pref = _gamma_ratio((a + b,), (a, b))
    value = pref * total
    err = abs(pref) * (4e-16 * abs_total) + 3e-15 * abs(value)
    return value, err


def _integer_d(a: float, b: float, c: float, u: float, m: int) -> tuple[float, float]:
    """Logarithmic expansion for c-a-b an exact nonzero integer m
    (Abramowitz & Stegun 15.3.11 for m > 0, 15.3.12 for m < 0)."""
    lnu = math.log(u)
    k = abs(m)
    if m > 0:
        sa, sb = a + k, b + k  # shifted parameters entering the log series
        log_pref = _gamma_ratio((c,), (a, b))
        u_log_power = u ** k
        fin_pref = _gamma_ratio((float(k), c), (a + k, b + k))
        fa, fb = a, b
        fin_power = 1.0
    else:
        sa, sb = a, b
        log_pref = _gamma_ratio((c,), (a - k, b - k))
        u_log_power = 1.0
        fin_pref = _gamma_ratio((float(k), c), (a, b))
        fa, fb = a - k, b - k
        if k * lnu < -700.0:
            raise ConvergenceError(
                f"F magnitude exceeds float range at u={u!r} with integer d={m}")
        fin_power = u ** (-k)
    # finite part: sum_{n<k} (fa,n)(fb,n)/(n! (1-k,n)) u^n
    fin = 0.0
    coef = 1.0
    for n in range(k):
        fin += coef
        if n < k - 1:
            coef *= (fa + n) * (fb + n) / ((n + 1.0) * (1.0 - k + n)) * u
    fin *= fin_pref * fin_power
    # logarithmic part: sum_{n>=0} g_n [ln u - psi(n+1) - psi(n+k+1)
    #                                   + psi(sa+n) + psi(sb+n)] u^n
    g = 1.0 / math.factorial(k)
    L = lnu - digamma(1.0).value - digamma(float(k + 1)).value \
        + _digamma_any(sa) + _digamma_any(sb)
    total = 0.0
    abs_total = 0.0
    upow = 1.0
    quiet = 0
    for n in range(1000):
        t = g * L * upow
        total += t
        abs_total += abs(t)
        g *= (sa + n) * (sb + n) / ((n + 1.0) * (n + k + 1.0))
        L += -1.0 / (n + 1.0) - 1.0 / (n + k + 1.0) + 1.0 / (sa + n) + 1.0 / (sb + n)
        upow *= u
        if abs(t) <= _EPS * (abs(total) + abs(fin)):
            quiet += 1
            if quiet >= 3:
                break
        else:
            quiet = 0
    else:
        raise ConvergenceError(f"integer-d expansion stalled at u={u!r}")
    sign = -1.0 if k % 2 == 0 else 1.0  # -(-1)^k
    logpart = sign * log_pref * u_log_power * total
    value = fin + logpart
    err = (abs(fin) + abs(log_pref) * u_log_power * abs_total) * 5e-15 \
        + 2e-15 * abs(value)
    return value, err


def _connection(a: float, b: float, c: float, u: float, d: float) -> tuple[float, float]:
    """A&S 15.3.6: two series in u = 1-z, valid for non-integer d = c-a-b."""
    c1 = _gamma_ratio((c, d), (c - a, c - b))
    c2 = _gamma_ratio((c, -d), (a, b))
    t1 = e1 = 0.0
    if c1 != 0.0:
        s1, se1, _ = _direct_series(a, b, 1.0 - d, u, max_terms=20_000)
        t1 = c1 * s1
        e1 = abs(c1) * se1
    t2 = e2 = 0.0
    if c2 != 0.0:
        ud = math.exp(d * math.log(u))
        s2, se2, _ = _direct_series(c - a, c - b, 1.0 + d, u, max_terms=20_000)
        t2 = c2 * ud * s2
        e2 = abs(c2) * ud * se2
    value = t1 + t2
    err = e1 + e2 + 2e-15 * (abs(t1) + abs(t2)) + 1e-15 * abs(value)
    return value, err


@functools.lru_cache(maxsize=1 << 18)
def _eval_pair(a: float, b: float, c: float, z: float, zc: float) -> EvalResult:
    """Unvalidated engine: a, b any real; c > 0; zc = 1-z supplied exactly.

    Trusted internal callers only; the public entry points validate.
    """
    if z == 0.0:
        return EvalResult(1.0, 0.0, Method.SERIES)
    if a == c or b == c:
        expo = b if a == c else a
        value = zc ** (-expo)
        return EvalResult(value, abs(value) * (abs(expo * math.log(zc)) + 1.0) * 2e-16,
                          Method.CLOSED_FORM)
    if _is_nonpositive_integer(a) or _is_nonpositive_integer(b):
        value, err, _ = _direct_series(a, b, c, z)
        return EvalResult(value, err, Method.SERIES)
    if z < Z_SWITCH:
        value, err, _ = _direct_series(a, b, c, z)
        return EvalResult(value, err, Method.SERIES)
    d = c - a - b
    m = round(d)
    if abs(d) <= _ZERO_BALANCED_TOL:
        value, err = _zero_balanced(a, b, zc)
        err += abs(d) * (abs(math.log(zc)) + 5.0) * abs(value)
        return EvalResult(value, err, Method.TRANSFORM_NEAR_ONE)
    if m == 0 and abs(d) < _EULER_BAND:
        # Between regimes the connection coefficients blow up like 1/d;
        # route through the Euler transformation and sum directly.  When
        # 1-z is too small for that to terminate, fall back to the
        # zero-balanced expansion and carry the parameter perturbation
        # in the error estimate.
        if zc > 1e-4:
            s, serr, _ = _direct_series(c - a, c - b, c, z)
            ud = math.exp(d * math.log(zc))
            value = ud * s
            err = ud * serr + 2e-15 * abs(value)
            return EvalResult(value, err, Method.TRANSFORM_NEAR_ONE)
        value, err = _zero_balanced(a, b, zc)
        err += abs(d) * (abs(math.log(zc)) + 5.0) * abs(value)
        return EvalResult(value, err, Method.TRANSFORM_NEAR_ONE)
    if m != 0 and abs(d - m) <= _INTEGER_SNAP:
        value, err = _integer_d(a, b, c, zc, m)
        err += abs(d - m) * (abs(math.log(zc)) + 5.0) * abs(value)
        return EvalResult(value, err, Method.TRANSFORM_NEAR_ONE)
    value, err = _connection(a, b, c, zc, d)
    return EvalResult(value, err, Method.TRANSFORM_NEAR_ONE)


def _check_z(z: float) -> float:
    if not (isinstance(z, (int, float)) and 0.0 <= z < 1.0):
        raise DomainError(f"z must lie in [0, 1), got {z!r}")
    return float(z)


def hyp2f1(p: HypParams, z: float) -> EvalResult:
    """F(a,b;c;z) for z in [0, 1)."""
    z = _check_z(z)
    return _eval_pair(p.a, p.b, p.c, z, 1.0 - z)


def hyp2f1_pair(p: HypParams, z: float, z_comp: float) -> EvalResult:
    """F(a,b;c;z) with the complement 1-z supplied exactly by the caller.

    Use when z was formed as 1 - z_comp with z_comp tiny, where recomputing
    1-z in floating point would lose all the information.
    """
    z = _check_z(z)
    if not 0.0 < z_comp <= 1.0 or abs((1.0 - z) - z_comp) > 1e-12:
        raise DomainError(f"z_comp={z_comp!r} is not a complement of z={z!r}")
    return _eval_pair(p.a, p.b, p.c, z, float(z_comp))


def hyp2f1_zero_balanced_near_one(p: HypParams, z: float) -> EvalResult:
    """Logarithmic expansion of F(a,b;a+b;z) for z >= z_switch."""
    z = _check_z(z)
    if abs(p.a + p.b - p.c) > _ZERO_BALANCED_TOL:
        raise RegimeError(f"c must equal a+b within {_ZERO_BALANCED_TOL}, "
                          f"got a+b-c={p.a + p.b - p.c!r}")
    if z < Z_SWITCH:
        raise RegimeError(f"z must be >= {Z_SWITCH} for the near-one expansion, got {z!r}")
    value, err = _zero_balanced(p.a, p.b, 1.0 - z)
    return EvalResult(value, err, Method.TRANSFORM_NEAR_ONE)


def euler_transform(p: HypParams, z: float) -> EvalResult:
    """(1-z)^(c-a-b) F(c-a,c-b;c;z), equal to F(a,b;c;z)."""
    z = _check_z(z)
    if p.c - p.a <= 0.0 or p.c - p.b <= 0.0:
        raise ParameterError(
            f"euler transform needs c-a > 0 and c-b > 0, got c-a={p.c - p.a!r}, "
            f"c-b={p.c - p.b!r}")
    zc = 1.0 - z
    inner = _eval_pair(p.c - p.a, p.c - p.b, p.c, z, zc)
    d = p.c - p.a - p.b
    factor = zc ** d
    value = factor * inner.value
    err = factor * inner.abs_err_est + 2e-16 * abs(value) * (abs(d * math.log(zc)) + 1.0)
    return EvalResult(value, err, inner.method)


_SHIFTS = {
    "a_plus": (1.0, 0.0, 0.0),
    "a_minus": (-1.0, 0.0, 0.0),
    "b_plus": (0.0, 1.0, 0.0),
    "c_plus": (0.0, 0.0, 1.0),
}


def contiguous_shift(p: HypParams, which: str, z: float) -> EvalResult:
    """F at a contiguously shifted parameter: a+1, a-1, b+1, or c+1."""
    z = _check_z(z)
    if which not in _SHIFTS:
        raise ParameterError(f"unknown shift {which!r}; expected one of {sorted(_SHIFTS)}")
    da, db, dc = _SHIFTS[which]
    a, b, c = p.a + da, p.b + db, p.c + dc
    if c <= 0.0:
        raise ParameterError(f"shifted c={c!r} is not positive")
    return _eval_pair(a, b, c, z, 1.0 - z)


def hyp2f1_deriv(p: HypParams, z: float) -> EvalResult:
    """dF/dz = (ab/c) F(a+1,b+1;c+1;z), by the term-shift identity."""
    z = _check_z(z)
    inner = _eval_pair(p.a + 1.0, p.b + 1.0, p.c + 1.0, z, 1.0 - z)
    scale = p.a * p.b / p.c
    return EvalResult(scale * inner.value, scale * inner.abs_err_est + 1e-16 * scale,
                      inner.method)
