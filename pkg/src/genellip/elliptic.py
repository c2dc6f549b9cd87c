"""Generalized complete elliptic integrals of the first and second kind,

    K(r) = (B(a,b)/2) F(a,b;c;r^2),    E(r) = (B(a,b)/2) F(a-1,b;c;r^2),

their complements K' = K(r'), E' = E(r'), the endpoint values, and the
closed-form r-derivatives of K, E, K-E, and E-r'^2 K.  For (a,b,c) =
(1/2,1/2,1) everything reduces to the classical complete integrals.

The combinations K-E and E-r'^2 K are also provided as dedicated positive
Maclaurin series, which matter near r=0 where forming the differences from
K and E would cancel to noise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError, ParameterError
from .hypergeom import _eval_pair
from .result import EvalResult, Method
from .scalar_special import beta

_EPS = 1e-15


@dataclass(frozen=True)
class EllipticParams:
    """Parameter triple with 0 < a < min(c,1) and 0 < b < c <= a+b."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        a, b, c = self.a, self.b, self.c
        for name, v in (("a", a), ("b", b), ("c", c)):
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
                raise ParameterError(f"{name} must be a finite positive real, got {v!r}")
            object.__setattr__(self, name, float(v))
        if not self.a < min(self.c, 1.0):
            raise ParameterError(f"need a < min(c, 1), got a={a!r}, c={c!r}")
        if not self.b < self.c:
            raise ParameterError(f"need b < c, got b={b!r}, c={c!r}")
        if not self.c <= self.a + self.b:
            raise ParameterError(f"need c <= a+b, got c={c!r}, a+b={a + b!r}")

    @property
    def half_beta(self) -> float:
        """B(a,b)/2, the common value K(0) = E(0)."""
        return 0.5 * beta(self.a, self.b).value


def reduced_params(a: float, c: float) -> EllipticParams:
    """The b = c-a sub-family K_{a,c}, E_{a,c}; requires 0 < a < c <= 1."""
    if not (isinstance(a, (int, float)) and isinstance(c, (int, float))
            and math.isfinite(a) and math.isfinite(c) and 0.0 < a < c <= 1.0):
        raise ParameterError(f"need 0 < a < c <= 1, got a={a!r}, c={c!r}")
    return EllipticParams(float(a), float(c) - float(a), float(c))


@dataclass(frozen=True)
class Modulus:
    """A modulus r in [0,1] carried together with r' = sqrt(1-r^2).

    Keeping the complement explicit preserves relative accuracy of 1-r^2
    as r -> 1; build from whichever side is known accurately.
    """

    r: float
    r_comp: float

    def __post_init__(self):
        for name, v in (("r", self.r), ("r_comp", self.r_comp)):
            if not (isinstance(v, (int, float)) and 0.0 <= v <= 1.0):
                raise DomainError(f"{name} must lie in [0, 1], got {v!r}")
            object.__setattr__(self, name, float(v))
        if abs(self.r * self.r + self.r_comp * self.r_comp - 1.0) > 1e-15:
            raise DomainError(
                f"r^2 + r_comp^2 = 1 violated: r={self.r!r}, r_comp={self.r_comp!r}")

    @classmethod
    def from_r(cls, r: float) -> "Modulus":
        if not (isinstance(r, (int, float)) and 0.0 <= r <= 1.0):
            raise DomainError(f"r must lie in [0, 1], got {r!r}")
        return cls(float(r), math.sqrt((1.0 - r) * (1.0 + r)))

    @classmethod
    def from_r_comp(cls, r_comp: float) -> "Modulus":
        if not (isinstance(r_comp, (int, float)) and 0.0 <= r_comp <= 1.0):
            raise DomainError(f"r_comp must lie in [0, 1], got {r_comp!r}")
        return cls(math.sqrt((1.0 - r_comp) * (1.0 + r_comp)), float(r_comp))

    @property
    def z(self) -> float:
        return self.r * self.r

    @property
    def z_comp(self) -> float:
        return self.r_comp * self.r_comp

    @property
    def complement(self) -> "Modulus":
        return Modulus(self.r_comp, self.r)


def arth(r: float, r_comp: float | None = None) -> float:
    """arth(r) = (1/2) log((1+r)/(1-r)); pass r_comp to stay exact near 1."""
    if r_comp is not None:
        # 1-r = r_comp^2/(1+r), so arth(r) = log((1+r)/r_comp) stays exact.
        if r_comp <= 0.0:
            raise DomainError("arth is infinite at r=1")
        return math.log((1.0 + r) / r_comp)
    if not -1.0 < r < 1.0:
        raise DomainError(f"arth needs |r| < 1, got {r!r}")
    return math.atanh(r)


def ell_k(p: EllipticParams, m: Modulus) -> EvalResult:
    """K(r) = (B(a,b)/2) F(a,b;c;r^2); infinite at r = 1.

    The pole test uses the exact pair: r may round to 1.0 in floating
    point while z_comp > 0 still identifies an interior modulus.
    """
    if m.z_comp == 0.0:
        return EvalResult(math.inf, 0.0, Method.CLOSED_FORM)
    hb = p.half_beta
    f = _eval_pair(p.a, p.b, p.c, m.z, m.z_comp)
    value = hb * f.value
    return EvalResult(value, hb * f.abs_err_est + 2e-15 * abs(value), f.method)


def ell_e(p: EllipticParams, m: Modulus) -> EvalResult:
    """E(r) = (B(a,b)/2) F(a-1,b;c;r^2); finite on all of [0, 1]."""
    if m.z_comp == 0.0:
        num = beta(p.a, p.b).value * beta(p.c, p.c + 1.0 - p.a - p.b).value
        den = beta(p.c + 1.0 - p.a, p.c - p.b).value
        value = 0.5 * num / den
        return EvalResult(value, 1e-13 * abs(value), Method.CLOSED_FORM)
    hb = p.half_beta
    f = _eval_pair(p.a - 1.0, p.b, p.c, m.z, m.z_comp)
    value = hb * f.value
    return EvalResult(value, hb * f.abs_err_est + 2e-15 * abs(value), f.method)


def ell_k_comp(p: EllipticParams, m: Modulus) -> EvalResult:
    """K'(r) = K(r')."""
    return ell_k(p, m.complement)


def ell_e_comp(p: EllipticParams, m: Modulus) -> EvalResult:
    """E'(r) = E(r')."""
    return ell_e(p, m.complement)


def _positive_series(first: float, ratio_shifts: tuple[float, float, float],
                     z: float, max_terms: int = 400_000) -> tuple[float, float]:
    """Sum t_1 + t_2 + ... with t_{n+1}/t_n = (p+n)(q+n)/((s+n) n) * z.

    first = t_1; ratio_shifts = (p, q, s).  All terms share the sign of
    `first`, so the partial sums never cancel.
    """
    if z == 0.0 or first == 0.0:
        return 0.0, 0.0
    pp, qq, ss = ratio_shifts
    total = first
    term = first
    n = 1
    min_n = max(64, int(max(abs(pp), abs(qq), abs(ss))) + 2)
    chunk = 64
    while n < max_terms:
        mlen = min(chunk, max_terms - n)
        ks = np.arange(n, n + mlen, dtype=np.float64)
        ratios = (pp + ks) * (qq + ks) / ((ss + ks) * ks) * z
        terms = term * np.cumprod(ratios)
        total += float(np.sum(terms))
        term = float(terms[-1])
        n += mlen
        if not math.isfinite(total):
            raise ConvergenceError(f"series overflow at z={z!r}")
        bound = _EPS * abs(total)
        if mlen >= 3 and n >= min_n and all(abs(t_) <= bound for t_ in terms[-3:]):
            q = max(abs(float(ratios[-1])), z)
            if q < 1.0:
                tail = abs(term) * q / (1.0 - q)
                if tail <= bound:
                    return total, 4e-16 * abs(total) + tail
        chunk = min(2 * chunk, 8192)
    raise ConvergenceError(f"series needed more than {max_terms} terms at z={z!r}")


def ell_k_minus_e(p: EllipticParams, m: Modulus) -> EvalResult:
    """K - E by its positive Maclaurin series; exact relative accuracy near 0.

    Past z = 0.9 the series needs O(1/(1-z)) terms while the plain
    subtraction loses at most a couple of digits (the gap is a bounded
    fraction of K there), so the routes swap.
    """
    if m.z_comp == 0.0:
        return EvalResult(math.inf, 0.0, Method.CLOSED_FORM)
    z = m.z
    if z > 0.9:
        kv = ell_k(p, m)
        ev = ell_e(p, m)
        return EvalResult(kv.value - ev.value,
                          kv.abs_err_est + ev.abs_err_est, kv.method)
    first = p.half_beta * (p.b / p.c) * z
    value, err = _positive_series(first, (p.a - 1.0, p.b, p.c), z)
    return EvalResult(value, err + 2e-15 * abs(value), Method.SERIES)


def ell_e_minus_rc2k(p: EllipticParams, m: Modulus) -> EvalResult:
    """E - r'^2 K by its positive Maclaurin series (coefficient (c-b) > 0).

    Same route swap as K - E: past z = 0.9 the r'^2 K term is a small
    correction to E and the direct combination is accurate.
    """
    z = m.z
    if m.z_comp == 0.0:
        return ell_e(p, m)
    if z > 0.9:
        ev = ell_e(p, m)
        kv = ell_k(p, m)
        zc = m.z_comp
        value = ev.value - zc * kv.value
        err = ev.abs_err_est + zc * kv.abs_err_est \
            + 2e-16 * (abs(ev.value) + zc * abs(kv.value))
        return EvalResult(value, err, ev.method)
    first = p.half_beta * (p.c - p.b) * z / p.c
    value, err = _positive_series(first, (p.a - 1.0, p.b - 1.0, p.c), z)
    return EvalResult(value, err + 2e-15 * abs(value), Method.SERIES)


@dataclass(frozen=True)
class EllDerivatives:
    """The four closed-form r-derivatives at an interior modulus."""

    dK_dr: float
    dE_dr: float
    dKmE_dr: float
    dEmr2K_dr: float


def ell_derivatives(p: EllipticParams, m: Modulus) -> EllDerivatives:
    """d/dr of K, E, K-E, and E-r'^2 K for 0 < r < 1.

    dK/dr  = (2/(r r'^2)) ((c-a) E + (b r^2 + a - c) K)
    dE/dr  = (2(a-1)/r) (K - E)
    d(K-E)/dr = (2/(r r'^2)) (((c-a)-(1-a)r'^2) E + ((a+b)r^2 - c + r'^2) K)
    d(E-r'^2 K)/dr = (2/r) ((1-c) E + (c-1-(b-1)r^2) K)

    The K-E form is the difference of the first two; for (1/2,1/2,1) it
    reduces to the classical r E/r'^2.
    """
    r, rc2 = m.r, m.z_comp
    if not 0.0 < r < 1.0:
        raise DomainError(f"derivatives need 0 < r < 1, got r={r!r}")
    a, b, c = p.a, p.b, p.c
    K = ell_k(p, m).value
    E = ell_e(p, m).value
    KmE = ell_k_minus_e(p, m).value
    z = m.z
    dK = (2.0 / (r * rc2)) * ((c - a) * E + (b * z + a - c) * K)
    dE = (2.0 * (a - 1.0) / r) * KmE
    dKmE = (2.0 / (r * rc2)) * (((c - a) - (1.0 - a) * rc2) * E
                                + ((a + b) * z - c + rc2) * K)
    dEmr2K = (2.0 / r) * ((1.0 - c) * E + (c - 1.0 - (b - 1.0) * z) * K)
    return EllDerivatives(dK, dE, dKmE, dEmr2K)
