"""Summation of sum_{k>=1} z^k w(k) / (k^a C(3k,k)) with certified tails.

The binomial C(3k,k) grows like (27/4)^k sqrt(3/(4 pi k)), so the series
is geometric for |z| g < 27/4 (g the exponential growth rate of the
weight), sits on the convergence boundary at equality, and is divergent
beyond it.  Geometric sums carry a rigorous tail bracket; boundary sums
go through Euler-Maclaurin (positive case) or CRVZ alternating-series
acceleration, both with an a-posteriori stability check.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Union

from mpmath import mp, mpf

from . import expressions
from .errors import MaxTermsExceeded, NotGeometric, Unsupported
from .precision import PrecisionContext, max_terms
from .sequences import HoradamParams, fib, horadam

BOUNDARY_DIGITS_BUDGET = 12
_DOUBLING_START = 64
_RATIO_WINDOW = 32
_BOUNDARY_TOL = mpf(10) ** -6


@dataclass(frozen=True)
class Weight:
    """Per-term factor w(k): 1, F(mk), L(mk) or W(mk)."""

    kind: str  # "unit" | "fib" | "lucas" | "horadam"
    m: int = 0
    params: Optional[HoradamParams] = None

    def __post_init__(self):
        if self.kind not in ("unit", "fib", "lucas", "horadam"):
            raise ValueError(f"unknown weight kind {self.kind!r}")
        if self.kind == "horadam":
            if self.params is None:
                raise ValueError("horadam weight needs params")
            if self.m < 0:
                raise ValueError("horadam weight needs m >= 0")

    def growth_rate(self, ctx: PrecisionContext) -> mpf:
        """Limit of |w(k+1)/w(k)| (dominant-root growth per step of k)."""
        with ctx.workdps():
            if self.kind == "unit":
                return mpf(1)
            if self.kind in ("fib", "lucas"):
                alpha = (1 + mp.sqrt(5)) / 2
                return alpha ** abs(self.m)
            alpha, beta, _ = self.params.roots(ctx)
            return max(abs(alpha), abs(beta)) ** self.m

    def values(self) -> Iterator[int]:
        """Exact w(k) for k = 1, 2, 3, ... computed incrementally."""
        return _weight_values(self)

    def _horadam_values(self) -> Iterator[int]:
        p, q = self.params.p, self.params.q
        w = [self.params.a, self.params.b]
        j = 1
        while True:
            while len(w) <= self.m * j:
                w.append(p * w[-1] + q * w[-2])
            yield w[self.m * j]
            j += 1


UNIT_WEIGHT = Weight("unit")


def _weight_values(weight: Weight) -> Iterator[int]:
    if weight.kind == "unit":
        return itertools.repeat(1)
    if weight.kind == "horadam":
        return weight._horadam_values()
    return _fib_lucas_values(weight.m, weight.kind == "lucas")


def _fib_lucas_values(m: int, want_lucas: bool) -> Iterator[int]:
    # walk (F(mk), F(mk+1)) with the addition formula; valid for any sign of m
    fm, fm1 = fib(m), fib(m + 1)
    fm_1 = fm1 - fm  # F(m-1)
    a, b = 0, 1      # (F(0), F(1))
    while True:
        a, b = fm * b + fm_1 * a, fm1 * b + fm * a
        yield 2 * b - a if want_lucas else a


@dataclass(frozen=True)
class SeriesSpec:
    """One left-hand series: term k is z^k w(k) / (k^a C(3k,k)), k >= 1."""

    z: Union[Fraction, expressions.Expr]
    a: int
    weight: Weight = UNIT_WEIGHT
    label: str = ""

    def __post_init__(self):
        if self.a not in (0, 1, 2):
            raise ValueError("exponent a must be 0, 1 or 2")

    def z_value(self, ctx: PrecisionContext) -> mpf:
        with ctx.workdps():
            if isinstance(self.z, Fraction):
                return mpf(self.z.numerator) / mpf(self.z.denominator)
            return expressions.eval_expr(self.z, ctx)


@dataclass(frozen=True)
class ConvergenceClass:
    kind: str  # "geometric" | "boundary_positive" | "boundary_alternating" | "divergent_formal"
    rho: Optional[mpf] = None

    @property
    def is_geometric(self) -> bool:
        return self.kind == "geometric"


@dataclass(frozen=True)
class SumResult:
    value: mpf
    terms_used: int
    tail: mpf


def binom_3k_k(k: int) -> int:
    """Exact C(3k, k)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return math.comb(3 * k, k)


def classify(spec: SeriesSpec, ctx: PrecisionContext) -> ConvergenceClass:
    """Limit-ratio classification against the radius 27/4."""
    with ctx.workdps():
        z = spec.z_value(ctx)
        if z == 0:
            return ConvergenceClass("geometric", mpf(0))
        rho = abs(z) * spec.weight.growth_rate(ctx) * mpf(4) / 27
        if rho < 1 - _BOUNDARY_TOL:
            return ConvergenceClass("geometric", rho)
        if rho > 1 + _BOUNDARY_TOL:
            return ConvergenceClass("divergent_formal", rho)
        kind = "boundary_positive" if z > 0 else "boundary_alternating"
        return ConvergenceClass(kind, rho)


def _terms(spec: SeriesSpec, ctx: PrecisionContext) -> Iterator[mpf]:
    """Signed term values t_k at working precision, k = 1, 2, ..."""
    z = spec.z_value(ctx)
    weights = _weight_values(spec.weight)
    t = z / 3  # z^1 / C(3,1)
    k = 1
    while True:
        yield t * next(weights) / mpf(k) ** spec.a
        # z^(k+1)/C(3k+3,k+1) from z^k/C(3k,k)
        t *= z * (k + 1) * (2 * k + 1) * (2 * k + 2)
        t /= (3 * k + 1) * (3 * k + 2) * (3 * k + 3)
        k += 1


def partial_sum(spec: SeriesSpec, K: int, ctx: PrecisionContext) -> mpf:
    """Sum of the first K terms at working precision."""
    if K < 1:
        raise ValueError("K must be >= 1")
    with ctx.workdps():
        gen = _terms(spec, ctx)
        return sum(next(gen) for _ in range(K))


def _certified_tail(lookahead: list[mpf], rho: mpf) -> mpf:
    """Upper bound on the omitted tail from a window of upcoming terms.

    rho-hat is the limit ratio with a safety margin, checked against every
    ratio in the window; the window maximum takes over if the limit has not
    been reached yet.  Sound because unit-weight ratios increase
    monotonically to rho and weighted ratios converge exponentially fast.
    """
    first = abs(lookahead[0])
    if first == 0:
        return mpf(0)
    delta = min(mpf("1e-3"), (1 - rho) / 8)
    rho_hat = rho * (1 + delta)
    ratios = [abs(lookahead[i + 1]) / abs(lookahead[i])
              for i in range(len(lookahead) - 1) if lookahead[i] != 0]
    worst = max(ratios) if ratios else mpf(0)
    if worst > rho_hat:
        rho_hat = worst * (1 + delta)
    if rho_hat >= 1:
        raise NotGeometric(f"term ratios reach {rho_hat}; no geometric tail")
    return first / (1 - rho_hat)


def tail_bound(spec: SeriesSpec, K: int, ctx: PrecisionContext) -> mpf:
    """Certified bound on |sum of terms beyond K| for geometric series."""
    cls = classify(spec, ctx)
    if not cls.is_geometric:
        raise NotGeometric(f"series is {cls.kind}, tail bound needs geometric")
    with ctx.workdps():
        if spec.z_value(ctx) == 0:
            return mpf(0)
        gen = _terms(spec, ctx)
        for _ in range(K):
            next(gen)
        lookahead = [next(gen) for _ in range(_RATIO_WINDOW + 1)]
        return _certified_tail(lookahead, cls.rho)


def sum_to_digits(spec: SeriesSpec, digits: int, ctx: PrecisionContext) -> SumResult:
    """Sum until the certified tail drops below 10^-digits.

    The cutoff K is probed on a doubling schedule starting at 64; raises
    MaxTermsExceeded once K would pass the context's term budget.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    cls = classify(spec, ctx)
    if not cls.is_geometric:
        raise NotGeometric(f"series is {cls.kind}; use sum_boundary at the radius")
    budget = max_terms(ctx)
    with ctx.workdps():
        if spec.z_value(ctx) == 0:
            return SumResult(mpf(0), 0, mpf(0))
        threshold = mpf(10) ** (-digits)
        gen = _terms(spec, ctx)
        total = mpf(0)
        produced = 0
        pending: list[mpf] = []
        K = _DOUBLING_START
        while True:
            if K > budget:
                raise MaxTermsExceeded(
                    f"needed more than {budget} terms for {digits} digits")
            while produced < K:
                total += pending.pop(0) if pending else next(gen)
                produced += 1
            while len(pending) < _RATIO_WINDOW + 1:
                pending.append(next(gen))
            tail = _certified_tail(pending, cls.rho)
            if tail < threshold:
                return SumResult(total, K, tail)
            K *= 2


# -- boundary summation -------------------------------------------------

# Stirling-series coefficients of E(k) in ln C(3k,k) =
# k ln(27/4) + ln sqrt(3/(4 pi k)) + E(k), E(k) = e1/k + e3/k^3 + e5/k^5 + ...
_E1 = Fraction(-7, 72)
_E3 = Fraction(235, 77760)
_E5 = Fraction(-7987, 9797760)


def _tail_series_coeffs() -> list[mpf]:
    """Coefficients c_j of exp(-E(k)) = sum_j c_j k^-j, j = 0..3."""
    e1, e3 = mpf(_E1.numerator) / _E1.denominator, mpf(_E3.numerator) / _E3.denominator
    return [mpf(1), -e1, e1 ** 2 / 2, -e3 - e1 ** 3 / 6]


def _euler_maclaurin_tail(K: int) -> mpf:
    """sum_{k>K} (27/4)^k / (k^2 C(3k,k)) via the asymptotic term expansion.

    Each term is sqrt(4 pi/3) k^(-3/2) exp(-E(k)); Euler-Maclaurin with
    three derivative corrections on the truncated power series.  The
    truncation error is O(K^(-9/2)), far below the 12-digit budget for
    the K used here.
    """
    a = mpf(K + 1)
    total = mpf(0)
    for j, c in enumerate(_tail_series_coeffs()):
        p = mpf(3) / 2 + j
        integral = c * a ** (1 - p) / (p - 1)
        f0 = c * a ** (-p)
        f1 = -c * p * a ** (-p - 1)
        f3 = -c * p * (p + 1) * (p + 2) * a ** (-p - 3)
        total += integral + f0 / 2 - f1 / 12 + f3 / 720
    return mp.sqrt(4 * mp.pi / 3) * total


def _boundary_positive(spec: SeriesSpec, digits: int, ctx: PrecisionContext,
                       K: int = 16384) -> SumResult:
    if spec.a != 2 or spec.weight.kind != "unit":
        raise Unsupported("boundary-positive summation supports a=2, unit weight only")
    gen = _terms(spec, ctx)
    head = mpf(0)
    for _ in range(K):
        head += next(gen)
    value = head + _euler_maclaurin_tail(K)
    # stability check: the half-depth evaluation must already agree
    gen2 = _terms(spec, ctx)
    half = mpf(0)
    for _ in range(K // 2):
        half += next(gen2)
    alt = half + _euler_maclaurin_tail(K // 2)
    stability = abs(value - alt)
    if stability > mpf(10) ** (-digits):
        raise Unsupported(
            f"boundary acceleration unstable: {stability} at {digits} digits")
    return SumResult(value, K, stability)


def _crvz_alternating(abs_terms: list[mpf]) -> mpf:
    """CRVZ acceleration of sum_{j>=0} (-1)^j a_j from the first n |terms|."""
    n = len(abs_terms)
    d = (3 + mp.sqrt(8)) ** n
    d = (d + 1 / d) / 2
    b = mpf(-1)
    c = -d
    s = mpf(0)
    for k in range(n):
        c = b - c
        s += c * abs_terms[k]
        b *= (k + n) * (k - n) / ((k + mpf(1) / 2) * (k + 1))
    return s / d


def _boundary_alternating(spec: SeriesSpec, digits: int,
                          ctx: PrecisionContext) -> SumResult:
    if spec.a not in (1, 2):
        raise Unsupported("boundary-alternating summation needs a in {1, 2}")
    n = 4 * digits + 24
    gen = _terms(spec, ctx)
    terms = [next(gen) for _ in range(n + 8)]
    if any(terms[i] * terms[i + 1] >= 0 for i in range(len(terms) - 1)):
        raise Unsupported("terms do not alternate in sign")
    # series starts at k=1 with a negative term: sum = -sum_j (-1)^j |t_{j+1}|
    sign = mpf(1) if terms[0] > 0 else mpf(-1)
    abs_terms = [abs(t) for t in terms]
    low = sign * _crvz_alternating(abs_terms[:n])
    high = sign * _crvz_alternating(abs_terms)
    stability = abs(high - low)
    if stability > mpf(10) ** (-digits):
        raise Unsupported(
            f"alternating acceleration unstable: {stability} at {digits} digits")
    return SumResult(high, n + 8, stability)


def sum_boundary_detailed(spec: SeriesSpec, digits: int,
                          ctx: PrecisionContext) -> SumResult:
    """Boundary summation with terms/stability attached (internal to verify)."""
    if digits > BOUNDARY_DIGITS_BUDGET:
        raise Unsupported(
            f"boundary summation is budgeted for {BOUNDARY_DIGITS_BUDGET} digits")
    cls = classify(spec, ctx)
    with ctx.workdps():
        if cls.kind == "boundary_positive":
            return _boundary_positive(spec, digits, ctx)
        if cls.kind == "boundary_alternating":
            return _boundary_alternating(spec, digits, ctx)
    raise Unsupported(f"series is {cls.kind}, not a boundary case")


def sum_boundary(spec: SeriesSpec, digits: int, ctx: PrecisionContext) -> mpf:
    """Value of a boundary series, correct to at least ``digits`` digits."""
    return sum_boundary_detailed(spec, digits, ctx).value
