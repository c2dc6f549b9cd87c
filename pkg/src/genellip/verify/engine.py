"""Grid-based numerical verification of monotonicity/convexity/inequality claims.

A CheckSpec binds a scalar function of (parameters, argument) to a claim kind
and a pair of grids.  run_check evaluates the function across the grid
product and issues a three-way verdict:

    pass          the claimed property holds with margin beyond error bounds
    fail          a point violates the claim by more than the error bounds
    inconclusive  margins are inside the error bounds (or an endpoint limit
                  approaches too slowly for the grid to resolve)

Strict monotonicity and convexity are judged on discrete deltas with
error-aware slack: correctly-signed deltas must beat the combined error
estimate at >= 99% of consecutive pairs (endpoint cells near removable
limits are allowed to be flat), and no wrongly-signed delta may exceed it.

Claims of the form "strictly monotone from I onto J" carry the range facet
in the same check: grid values must stay inside J, and the endpoint values
of J are verified at boundary-adjacent probe points.  True limits are
unreachable numerically, so endpoint attainment uses a relaxed tolerance
(default 1e-3, wider where the approach rate is logarithmic; each spec's
claim text documents the rate), accepting also a contraction of the gap by
`decay_factor` relative to the nearest grid edge.  Infinite endpoints
require the probe to grow 1.5x beyond the edge value.  Attainment that the
grid cannot resolve downgrades to inconclusive, never to fail; containment
violations beyond error bounds fail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from ..errors import GenellipError, ParameterError
from ..scalar_special import _lngamma_raw, digamma

KINDS = ("monotone", "convex_concave", "range_endpoints", "inequality",
         "identity", "derivative_match", "limit")
VERDICTS = ("pass", "fail", "inconclusive")

_STRICT_FRACTION = 0.99
_GROWTH_FACTOR = 1.5


@dataclass(frozen=True)
class GridDim:
    """One grid dimension; `values` pins an explicit point set."""

    name: str
    lo: float
    hi: float
    count: int
    scale: str = "linear"
    values: Optional[tuple] = None

    def __post_init__(self):
        if self.values is not None:
            vals = tuple(float(v) for v in self.values)
            if not vals:
                raise ParameterError(f"grid dim {self.name!r}: empty values")
            object.__setattr__(self, "values", vals)
            object.__setattr__(self, "lo", min(vals))
            object.__setattr__(self, "hi", max(vals))
            object.__setattr__(self, "count", len(vals))
        else:
            if not self.lo < self.hi:
                raise ParameterError(f"grid dim {self.name!r}: need lo < hi")
            if self.count < 3:
                raise ParameterError(f"grid dim {self.name!r}: need count >= 3")
        if self.scale not in ("linear", "log", "logit"):
            raise ParameterError(f"grid dim {self.name!r}: bad scale {self.scale!r}")
        if self.scale == "log" and self.lo <= 0.0:
            raise ParameterError(f"grid dim {self.name!r}: log scale needs lo > 0")
        if self.scale == "logit" and not (0.0 < self.lo and self.hi < 1.0):
            raise ParameterError(f"grid dim {self.name!r}: logit scale needs (0,1)")

    def points(self) -> np.ndarray:
        if self.values is not None:
            return np.asarray(self.values, dtype=float)
        if self.scale == "linear":
            return np.linspace(self.lo, self.hi, self.count)
        if self.scale == "log":
            return np.geomspace(self.lo, self.hi, self.count)
        t = np.linspace(math.log(self.lo / (1.0 - self.lo)),
                        math.log(self.hi / (1.0 - self.hi)), self.count)
        return 1.0 / (1.0 + np.exp(-t))


@dataclass(frozen=True)
class GridSpec:
    dims: tuple

    def __post_init__(self):
        if not self.dims:
            raise ParameterError("grid must have at least one dimension")

    def combos(self):
        """Iterate dicts over the cartesian product of the dims."""
        axes = [d.points() for d in self.dims]
        names = [d.name for d in self.dims]
        idx = np.indices([len(ax) for ax in axes]).reshape(len(axes), -1).T
        for row in idx:
            yield {names[k]: float(axes[k][row[k]]) for k in range(len(axes))}


@dataclass(frozen=True)
class CheckSpec:
    """A declarative claim: id, statement, kind, grids, and evaluators.

    `fn(params, x) -> (value, abs_err_est)` is the scalar under test.  The
    remaining callables fill in kind-specific structure; see run_check.
    """

    id: str
    claim: str
    kind: str
    param_grid: GridSpec
    arg_grid: GridSpec
    tolerance: float
    gating: bool = True
    seed: int = 0
    fn: Optional[Callable] = None
    direction: int = 0
    param_map: Optional[Callable] = None
    lo_limit: Optional[Callable] = None
    hi_limit: Optional[Callable] = None
    lo_probe: Optional[Callable] = None
    hi_probe: Optional[Callable] = None
    lo_attain: float = 1e-3
    hi_attain: float = 1e-3
    decay_factor: float = 0.5
    strict: bool = True
    rhs: Optional[Callable] = None
    fd_h: float = 1e-5

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ParameterError(f"unknown check kind {self.kind!r}")
        if not self.tolerance > 0.0:
            raise ParameterError("tolerance must be positive")
        if self.kind in ("monotone", "convex_concave") and self.direction not in (-1, 1):
            raise ParameterError(f"{self.kind} check needs direction +1 or -1")


@dataclass(frozen=True)
class CheckReport:
    id: str
    verdict: str
    worst_margin: float
    witness: Optional[dict]
    samples: int

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ParameterError(f"bad verdict {self.verdict!r}")
        if self.verdict == "fail" and self.witness is None:
            raise ParameterError("fail verdict requires a witness")


@dataclass(frozen=True)
class PABNotation:
    """P = Psi(c-a+t) - Psi(c+t); A = (c-a,t)/(c,t); A_tilde = (a,t)A;
    B_t = P(a,c,t) - P(a,c,0).  A > 0 for 0 < a < c, t > 0; B_t >= 0 with
    equality iff t = 0."""

    a: float
    c: float
    t: float
    P: float
    A: float
    A_tilde: float
    B_t: float


def pab(a: float, c: float, t: float) -> PABNotation:
    """Digamma-difference notation for the parameter-dependence results."""
    if not (0.0 < a < c and math.isfinite(c)):
        raise ParameterError(f"need 0 < a < c, got a={a!r}, c={c!r}")
    if not (isinstance(t, (int, float)) and math.isfinite(t) and t >= 0.0):
        raise ParameterError(f"need t >= 0, got {t!r}")
    t = float(t)
    P = digamma(c - a + t).value - digamma(c + t).value
    if t == 0.0:
        A = 1.0
        A_tilde = 1.0
    else:
        lA = (_lngamma_raw(c - a + t) - _lngamma_raw(c + t)
              + _lngamma_raw(c) - _lngamma_raw(c - a))
        A = math.exp(lA)
        lt = _lngamma_raw(a + t) - _lngamma_raw(a) + lA
        A_tilde = math.exp(lt) if lt < 709.0 else math.inf
    B_t = P - (digamma(c - a).value - digamma(c).value)
    return PABNotation(a, c, t, P, A, A_tilde, B_t)


@dataclass(frozen=True)
class FiniteDiff:
    first: float
    second: float
    first_err: float
    second_err: float


def finite_diff(f: Callable[[float], float], x: float, h: float) -> FiniteDiff:
    """Richardson-refined central differences with error estimates."""
    if not h > 0.0:
        raise ParameterError("step h must be positive")
    fp, fm = f(x + h), f(x - h)
    fp2, fm2 = f(x + 0.5 * h), f(x - 0.5 * h)
    f0 = f(x)
    scale = max(abs(fp), abs(fm), abs(f0), 1e-300)
    d1a = (fp - fm) / (2.0 * h)
    d1b = (fp2 - fm2) / h
    first = d1b + (d1b - d1a) / 3.0
    first_err = abs(d1b - d1a) / 3.0 + 4e-16 * scale / h
    d2a = (fp - 2.0 * f0 + fm) / (h * h)
    d2b = (fp2 - 2.0 * f0 + fm2) / (0.25 * h * h)
    second = d2b + (d2b - d2a) / 3.0
    second_err = abs(d2b - d2a) / 3.0 + 1.6e-15 * scale / (h * h)
    return FiniteDiff(first, second, first_err, second_err)


class _Counter:
    __slots__ = ("n",)

    def __init__(self):
        self.n = 0


def _eval(spec, params, x, counter):
    counter.n += 1
    value, err = spec.fn(params, x)
    return float(value), float(err)


def _witness(params, **extra):
    w = {}
    for src in (params, extra):
        for k, v in src.items():
            if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
                w[k] = int(v)
            elif isinstance(v, (float, np.floating)):
                w[k] = float(v)
            else:
                w[k] = v
    return w


class _Outcome:
    """Aggregates per-combo results into the final verdict."""

    def __init__(self):
        self.verdict = "pass"
        self.worst = math.inf
        self.witness = None

    def note(self, margin, witness):
        if margin < self.worst:
            self.worst = margin
            if self.verdict == "pass":
                self.witness = witness

    def fail(self, margin, witness):
        self.verdict = "fail"
        if margin < self.worst or self.witness is None:
            self.witness = witness
        self.worst = min(self.worst, margin)

    def inconclusive(self, witness):
        # The first downgrade records its own witness so the cause stays
        # visible; pass-time worst-margin notes never overwrite it.
        if self.verdict == "pass":
            self.verdict = "inconclusive"
            self.witness = witness

    def report(self, check_id, samples):
        worst = self.worst if math.isfinite(self.worst) else 0.0
        witness = self.witness if self.verdict != "pass" else None
        if self.verdict == "fail" and witness is None:
            witness = {}
        return CheckReport(check_id, self.verdict, worst, witness, samples)


def _check_sequence(spec, params, xs, ys, errs, out):
    """Monotone slack rule on consecutive deltas."""
    n_pairs = len(xs) - 1
    strict_hits = 0
    for i in range(n_pairs):
        delta = spec.direction * (ys[i + 1] - ys[i])
        slack = errs[i] + errs[i + 1] + 1e-300
        out.note(delta - slack, _witness(params, arg=xs[i], value=ys[i],
                                         next_arg=xs[i + 1], next_value=ys[i + 1]))
        if delta < -slack:
            out.fail(delta - slack, _witness(params, arg=xs[i], value=ys[i],
                                             next_arg=xs[i + 1], next_value=ys[i + 1]))
            return
        if delta > slack:
            strict_hits += 1
    if strict_hits < _STRICT_FRACTION * n_pairs:
        out.inconclusive(_witness(params, note="deltas inside error bounds",
                                  strict_pairs=strict_hits, pairs=n_pairs))


def _check_second_diffs(spec, params, xs, ys, errs, out):
    """Divided second differences with exact-coefficient error slack."""
    n = len(xs)
    strict_hits = 0
    total = n - 2
    for i in range(1, n - 1):
        h0 = xs[i] - xs[i - 1]
        h1 = xs[i + 1] - xs[i]
        span = xs[i + 1] - xs[i - 1]
        c0 = 2.0 / (h0 * span)
        c1 = 2.0 / (h0 * h1)
        c2 = 2.0 / (h1 * span)
        d2 = c0 * ys[i - 1] - c1 * ys[i] + c2 * ys[i + 1]
        slack = c0 * errs[i - 1] + c1 * errs[i] + c2 * errs[i + 1] + 1e-300
        signed = spec.direction * d2
        out.note(signed - slack, _witness(params, arg=xs[i], value=ys[i]))
        if signed < -slack:
            out.fail(signed - slack, _witness(params, arg=xs[i], value=ys[i],
                                              second_diff=d2))
            return
        if signed > slack:
            strict_hits += 1
    if strict_hits < _STRICT_FRACTION * total:
        out.inconclusive(_witness(params, note="second differences inside error bounds",
                                  strict_pairs=strict_hits, pairs=total))


def _check_containment(spec, params, xs, ys, errs, out):
    """Grid values must lie between the two endpoint limits of the range."""
    if spec.lo_limit is None or spec.hi_limit is None:
        return
    ends = (spec.lo_limit(params), spec.hi_limit(params))
    lo_b, hi_b = min(ends), max(ends)
    for x, y, e in zip(xs, ys, errs):
        if math.isfinite(lo_b) and y < lo_b - e - 1e-12 * max(1.0, abs(lo_b)):
            out.fail(y - lo_b, _witness(params, arg=float(x), value=float(y), bound=lo_b))
            return
        if math.isfinite(hi_b) and y > hi_b + e + 1e-12 * max(1.0, abs(hi_b)):
            out.fail(hi_b - y, _witness(params, arg=float(x), value=float(y), bound=hi_b))
            return


def _check_endpoint(spec, params, side, edge_value, counter, out):
    limit_fn = spec.lo_limit if side == "lo" else spec.hi_limit
    probe_fn = spec.lo_probe if side == "lo" else spec.hi_probe
    attain = spec.lo_attain if side == "lo" else spec.hi_attain
    if limit_fn is None or probe_fn is None:
        return
    target = limit_fn(params)
    x = probe_fn(params)
    try:
        y, err = _eval(spec, params, x, counter)
    except GenellipError as exc:
        out.inconclusive(_witness(params, arg=x, note=f"endpoint probe failed: {exc}"))
        return
    if math.isinf(target):
        grown = (y >= _GROWTH_FACTOR * abs(edge_value) + 1.0) if target > 0 \
            else (-y >= _GROWTH_FACTOR * abs(edge_value) + 1.0)
        if not grown:
            out.inconclusive(_witness(params, arg=x, value=y, edge=edge_value,
                                      note=f"{side} endpoint divergence unresolved"))
        return
    gap = abs(y - target)
    bound = attain * max(1.0, abs(target))
    edge_gap = abs(edge_value - target)
    if gap <= bound + err or gap <= spec.decay_factor * edge_gap:
        return
    out.inconclusive(_witness(params, arg=x, value=y, target=target,
                              note=f"{side} endpoint approach unresolved"))


def _run_shape(spec, params, counter, out, checker):
    xs = spec.arg_grid.dims[0].points()
    ys = np.empty_like(xs)
    errs = np.empty_like(xs)
    for i, x in enumerate(xs):
        try:
            ys[i], errs[i] = _eval(spec, params, float(x), counter)
        except GenellipError as exc:
            out.inconclusive(_witness(params, arg=float(x),
                                      note=f"evaluation failed: {exc}"))
            return
        if not math.isfinite(ys[i]):
            out.inconclusive(_witness(params, arg=float(x), value=float(ys[i]),
                                      note="non-finite sample"))
            return
    checker(spec, params, xs, ys, errs, out)
    if out.verdict == "fail":
        return
    _check_containment(spec, params, xs, ys, errs, out)
    if out.verdict == "fail":
        return
    _check_endpoint(spec, params, "lo", float(ys[0]), counter, out)
    _check_endpoint(spec, params, "hi", float(ys[-1]), counter, out)


def _run_inequality(spec, params, counter, out):
    xs = spec.arg_grid.dims[0].points()
    strict_hits = 0
    for x in xs:
        try:
            m, err = _eval(spec, params, float(x), counter)
        except GenellipError as exc:
            out.inconclusive(_witness(params, arg=float(x),
                                      note=f"evaluation failed: {exc}"))
            return
        out.note(m, _witness(params, arg=float(x), margin=m))
        if m < -(err + spec.tolerance):
            out.fail(m, _witness(params, arg=float(x), margin=m))
            return
        if m > err:
            strict_hits += 1
    if spec.strict and strict_hits < _STRICT_FRACTION * len(xs):
        out.inconclusive(_witness(params, note="margins inside error bounds",
                                  strict_pairs=strict_hits, pairs=len(xs)))


def _run_identity(spec, params, counter, out):
    xs = spec.arg_grid.dims[0].points()
    for x in xs:
        try:
            lhs, el = _eval(spec, params, float(x), counter)
            rhs, er = spec.rhs(params, float(x))
            counter.n += 1
        except GenellipError as exc:
            out.inconclusive(_witness(params, arg=float(x),
                                      note=f"evaluation failed: {exc}"))
            return
        diff = abs(lhs - rhs)
        bound = spec.tolerance * max(1.0, abs(lhs), abs(rhs))
        out.note(bound - diff, _witness(params, arg=float(x), lhs=lhs, rhs=rhs))
        if diff > bound:
            if diff <= el + er:
                out.inconclusive(_witness(params, arg=float(x), lhs=lhs, rhs=rhs,
                                          note="difference inside error bounds"))
            else:
                out.fail(bound - diff, _witness(params, arg=float(x), lhs=lhs, rhs=rhs))
            return


def _run_derivative_match(spec, params, counter, out):
    xs = spec.arg_grid.dims[0].points()
    for x in xs:
        x = float(x)
        try:
            fd = finite_diff(lambda t: _eval(spec, params, t, counter)[0], x, spec.fd_h)
            ref, _ = spec.rhs(params, x)
            counter.n += 1
        except GenellipError as exc:
            out.inconclusive(_witness(params, arg=x, note=f"evaluation failed: {exc}"))
            return
        scale = max(abs(ref), 1e-300)
        rel = abs(fd.first - ref) / scale
        out.note(spec.tolerance - rel, _witness(params, arg=x, fd=fd.first, formula=ref))
        if rel > spec.tolerance:
            if fd.first_err > spec.tolerance * scale:
                out.inconclusive(_witness(params, arg=x, fd=fd.first, formula=ref,
                                          note="finite-difference error too large"))
            else:
                out.fail(spec.tolerance - rel,
                         _witness(params, arg=x, fd=fd.first, formula=ref))
            return


def _run_limit(spec, params, counter, out):
    target = spec.rhs(params, 0.0)[0]
    for x in spec.arg_grid.dims[0].points():
        x = float(x)
        try:
            y, err = _eval(spec, params, x, counter)
        except GenellipError as exc:
            out.inconclusive(_witness(params, arg=x, note=f"evaluation failed: {exc}"))
            return
        diff = abs(y - target)
        bound = spec.tolerance * max(1.0, abs(target))
        out.note(bound - diff, _witness(params, arg=x, value=y, target=target))
        if diff > bound + err:
            out.fail(bound - diff, _witness(params, arg=x, value=y, target=target))
            return


def _run_range_only(spec, params, counter, out):
    xs = spec.arg_grid.dims[0].points()
    ys = []
    for x in xs:
        try:
            y, _ = _eval(spec, params, float(x), counter)
        except GenellipError as exc:
            out.inconclusive(_witness(params, arg=float(x),
                                      note=f"evaluation failed: {exc}"))
            return
        ys.append(y)
    _check_endpoint(spec, params, "lo", ys[0], counter, out)
    _check_endpoint(spec, params, "hi", ys[-1], counter, out)


def run_check(spec: CheckSpec) -> CheckReport:
    """Evaluate one claim across its grids; deterministic for a fixed spec."""
    counter = _Counter()
    out = _Outcome()
    ran = 0
    for raw in spec.param_grid.combos():
        params = spec.param_map(raw) if spec.param_map else raw
        if params is None:
            continue
        ran += 1
        if spec.kind == "monotone":
            _run_shape(spec, params, counter, out, _check_sequence)
        elif spec.kind == "convex_concave":
            _run_shape(spec, params, counter, out, _check_second_diffs)
        elif spec.kind == "range_endpoints":
            _run_range_only(spec, params, counter, out)
        elif spec.kind == "inequality":
            _run_inequality(spec, params, counter, out)
        elif spec.kind == "identity":
            _run_identity(spec, params, counter, out)
        elif spec.kind == "derivative_match":
            _run_derivative_match(spec, params, counter, out)
        else:
            _run_limit(spec, params, counter, out)
        if out.verdict == "fail":
            break
    if ran == 0:
        raise ParameterError(f"check {spec.id!r}: parameter grid is empty after mapping")
    return out.report(spec.id, counter.n)
