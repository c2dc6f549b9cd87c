"""Gamma-family scalar functions: ln Gamma, Gamma, psi, psi', Beta, the
Appell symbol and its Gamma-ratio extension, and the Ramanujan constant
R(a,b) = -psi(a) - psi(b) - 2*gamma.

Evaluation uses argument-shift recurrences into the asymptotic regime
followed by Stirling-type series with Bernoulli-number coefficients; the
reflection formula Gamma(x)Gamma(1-x) = pi/sin(pi x) covers negative
arguments.  The standard identities are in DLMF chapter 5 and Abramowitz &
Stegun chapter 6.
"""

from __future__ import annotations

import math

from .errors import DomainError, PoleError
from .result import EvalResult, Method

EULER_GAMMA = 0.5772156649015328606065120900824024

# B_{2k} / (2k (2k-1)), k = 1..9: coefficients of x^{1-2k} in the Stirling
# series for ln Gamma.  Nine terms keep the truncation below 1e-17 at x=10.
_LNGAMMA_COEFFS = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
)

# B_{2k} / (2k), k = 1..9: coefficients of x^{-2k} in the series for psi.
_DIGAMMA_COEFFS = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
    43867.0 / 14364.0,
)

# B_{2k}, k = 1..8: coefficients of x^{-2k-1} in the series for psi'.
_TRIGAMMA_COEFFS = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
)

_LN_SQRT_TWO_PI = 0.9189385332046727417803297364056176

_GAMMA_SHIFT = 10.0
_PSI_SHIFT = 8.0


def _require_positive(x: float, name: str) -> None:
    if not (isinstance(x, (int, float)) and math.isfinite(x) and x > 0):
        raise DomainError(f"{name} must be a finite positive real, got {x!r}")


def _require_finite(x: float, name: str) -> None:
    if not (isinstance(x, (int, float)) and math.isfinite(x)):
        raise DomainError(f"{name} must be finite, got {x!r}")


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0 and x == math.floor(x)


def _lngamma_raw(x: float) -> float:
    """ln Gamma(x) for x > 0, shift to >= _GAMMA_SHIFT then Stirling."""
    shift_log = 0.0
    while x < _GAMMA_SHIFT:
        shift_log += math.log(x)
        x += 1.0
    inv2 = 1.0 / (x * x)
    corr = 0.0
    power = 1.0 / x
    for ck in _LNGAMMA_COEFFS:
        corr += ck * power
        power *= inv2
    return (x - 0.5) * math.log(x) - x + _LN_SQRT_TWO_PI + corr - shift_log


def _sinpi(x: float) -> float:
    """sin(pi*x) with argument reduction exact in the integer part."""
    n = math.floor(x)
    f = x - n
    if f > 0.5:
        s = math.sin(math.pi * (1.0 - f))
    else:
        s = math.sin(math.pi * f)
    return -s if (int(n) & 1) else s


def _lngamma_signed(x: float) -> tuple[float, int]:
    """(ln |Gamma(x)|, sign) for any non-pole real x, via reflection."""
    if x > 0:
        return _lngamma_raw(x), 1
    if _is_nonpositive_integer(x):
        raise PoleError(f"gamma pole at {x!r}")
    # Gamma(x) = pi / (sin(pi x) Gamma(1-x))
    s = _sinpi(x)
    val = math.log(math.pi) - math.log(abs(s)) - _lngamma_raw(1.0 - x)
    return val, (1 if s > 0 else -1)


def gamma_ln(x: float) -> EvalResult:
    """ln Gamma(x) for x > 0."""
    _require_positive(x, "x")
    val = _lngamma_raw(float(x))
    # Rounding across the shifted product dominates; truncation is ~1e-17.
    err = max(abs(val), 1.0) * 5e-16 + 1e-15
    method = Method.ASYMPTOTIC if x >= _GAMMA_SHIFT else Method.RECURRENCE_SHIFT
    return EvalResult(val, err, method)


def gamma(x: float) -> EvalResult:
    """Gamma(x) for real x off the poles at 0, -1, -2, ..."""
    _require_finite(x, "x")
    if _is_nonpositive_integer(x):
        raise PoleError(f"gamma pole at {x!r}")
    if x > 0:
        r = gamma_ln(x)
        val = math.exp(r.value)
        return EvalResult(val, abs(val) * 2e-14, r.method)
    lnval, sign = _lngamma_signed(float(x))
    val = sign * math.exp(lnval)
    return EvalResult(val, abs(val) * 5e-14, Method.REFLECTION)


def digamma(x: float) -> EvalResult:
    """psi(x) = Gamma'(x)/Gamma(x) for x > 0."""
    _require_positive(x, "x")
    x = float(x)
    shifted = x < _PSI_SHIFT
    acc = 0.0
    while x < _PSI_SHIFT:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    corr = 0.0
    power = inv2
    for ck in _DIGAMMA_COEFFS:
        corr += ck * power
        power *= inv2
    val = acc + math.log(x) - 0.5 / x - corr
    err = (abs(val) + 1.0) * 5e-16 + 1e-15
    return EvalResult(val, err, Method.RECURRENCE_SHIFT if shifted else Method.ASYMPTOTIC)


def digamma_deriv(x: float) -> EvalResult:
    """psi'(x) = sum over n >= 0 of 1/(n+x)^2, for x > 0."""
    _require_positive(x, "x")
    x = float(x)
    shifted = x < _PSI_SHIFT
    acc = 0.0
    while x < _PSI_SHIFT:
        acc += 1.0 / (x * x)
        x += 1.0
    inv2 = 1.0 / (x * x)
    corr = 0.0
    power = inv2 / x
    for bk in _TRIGAMMA_COEFFS:
        corr += bk * power
        power *= inv2
    val = acc + 1.0 / x + 0.5 * inv2 + corr
    err = abs(val) * 1e-15 + 1e-15
    return EvalResult(val, err, Method.RECURRENCE_SHIFT if shifted else Method.ASYMPTOTIC)


def beta(x: float, y: float) -> EvalResult:
    """B(x,y) = Gamma(x)Gamma(y)/Gamma(x+y) for x, y > 0."""
    _require_positive(x, "x")
    _require_positive(y, "y")
    lnb = _lngamma_raw(float(x)) + _lngamma_raw(float(y)) - _lngamma_raw(float(x) + float(y))
    val = math.exp(lnb)
    return EvalResult(val, abs(val) * (abs(lnb) + 1.0) * 1e-15, Method.RECURRENCE_SHIFT)


def beta_ln(x: float, y: float) -> float:
    """ln B(x,y); convenience for callers that need the logarithm directly."""
    _require_positive(x, "x")
    _require_positive(y, "y")
    return _lngamma_raw(float(x)) + _lngamma_raw(float(y)) - _lngamma_raw(float(x) + float(y))


def appell(a, n: int):
    """Appell symbol (a, n) = a (a+1) ... (a+n-1), with (a, 0) = 1.

    Duck-typed on purpose: Fraction inputs stay exact.  For n > 64 the
    factors are combined pairwise so rounding grows like log(n), not n.
    """
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"n must be a nonnegative integer, got {n!r}")
    if n == 0:
        return 1 if isinstance(a, int) else type(a)(1)
    if n <= 64:
        result = a
        for k in range(1, n):
            result = result * (a + k)
        return result
    factors = [a + k for k in range(n)]
    while len(factors) > 1:
        paired = [factors[i] * factors[i + 1] for i in range(0, len(factors) - 1, 2)]
        if len(factors) % 2:
            paired.append(factors[-1])
        factors = paired
    return factors[0]


def appell_ext(a: float, t: float) -> EvalResult:
    """Extended Appell symbol (a, t) = Gamma(a+t)/Gamma(a)."""
    _require_finite(a, "a")
    _require_finite(t, "t")
    if _is_nonpositive_integer(a) or _is_nonpositive_integer(a + t):
        raise PoleError(f"gamma pole in (a,t) with a={a!r}, t={t!r}")
    ln_num, sign_num = _lngamma_signed(a + t)
    ln_den, sign_den = _lngamma_signed(a)
    val = sign_num * sign_den * math.exp(ln_num - ln_den)
    method = Method.REFLECTION if (a < 0 or a + t < 0) else Method.RECURRENCE_SHIFT
    return EvalResult(val, abs(val) * (abs(ln_num - ln_den) + 1.0) * 1e-15, method)


def ramanujan_r(a: float, b: float) -> EvalResult:
    """R(a,b) = -psi(a) - psi(b) - 2*gamma; R(1/2,1/2) = log 16."""
    _require_positive(a, "a")
    _require_positive(b, "b")
    da = digamma(a)
    db = digamma(b)
    val = -da.value - db.value - 2.0 * EULER_GAMMA
    return EvalResult(val, da.abs_err_est + db.abs_err_est + 1e-15, da.method)
