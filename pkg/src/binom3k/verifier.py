"""Comparison engine: certified series brackets vs. closed-form values.

A verification sums the left-hand series with a certified tail bound and
evaluates the right-hand closed form at higher working precision; PASS
demands both a digit match (target - 2, absorbing final roundoff) and
bracket consistency |lhs - rhs| <= 3 tail.  Boundary records are verified
at a reduced digit target; records beyond the radius are skipped.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from mpmath import mp, mpf

from .closed_forms import (A_rhs, B_rhs, C_rhs, TheoremParams, XYPair,
                           theorem_rhs)
from .errors import Binom3kError, DomainError, InvalidParams
from .precision import PrecisionContext, make_context
from .registry import IdentityRecord, instantiate
from .series import sum_boundary_detailed, sum_to_digits

PASS = "PASS"
FAIL = "FAIL"
SKIPPED_DIVERGENT = "SKIPPED_DIVERGENT"
PASS_BOUNDARY_REDUCED = "PASS_BOUNDARY_REDUCED"

BOUNDARY_TARGET = 10


@dataclass
class VerificationReport:
    identity_id: str
    target_digits: int
    status: str
    matched_digits: int = 0
    lhs_value: Optional[mpf] = None
    rhs_value: Optional[mpf] = None
    terms_used: int = 0
    tail: Optional[mpf] = None
    elapsed: float = 0.0
    params: Optional[TheoremParams] = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status in (PASS, PASS_BOUNDARY_REDUCED, SKIPPED_DIVERGENT)


def _matched_digits(lhs: mpf, rhs: mpf, cap: int) -> int:
    """Floor of -log10 of the difference, relative unless |rhs| < 1."""
    diff = abs(lhs - rhs)
    if abs(rhs) >= 1:
        diff = diff / abs(rhs)
    if diff == 0:
        return cap
    digits = int(mp.floor(-mp.log10(diff)))
    return min(max(digits, 0), cap)


def _context_for(digits: int, ctx: Optional[PrecisionContext]) -> PrecisionContext:
    return ctx if ctx is not None else make_context(digits + 10)


def verify(record: IdentityRecord, digits: int,
           ctx: Optional[PrecisionContext] = None) -> VerificationReport:
    """Verify one catalog record to the requested digit target."""
    if digits < 5:
        raise ValueError("digits must be >= 5")
    ctx = _context_for(digits, ctx)
    start = time.perf_counter()
    report = VerificationReport(record.id, digits, FAIL)
    if isinstance(record.rhs, TheoremParams):
        report.params = record.rhs
    if record.convergence == "divergent_formal":
        report.status = SKIPPED_DIVERGENT
        report.detail = "series argument exceeds the radius 27/4"
        report.elapsed = time.perf_counter() - start
        return report
    try:
        with ctx.workdps():
            rhs = record.rhs_value(ctx)
            if record.convergence == "geometric":
                result = sum_to_digits(record.lhs, digits, ctx)
                lhs = result.value
                matched = _matched_digits(lhs, rhs, digits)
                # allowance for roundoff of both pipelines at working precision
                slack = (mpf(10) ** (-(ctx.working_digits - 5))
                         * max(mpf(1), abs(rhs)))
                if matched >= digits - 2 and abs(lhs - rhs) <= 3 * result.tail + slack:
                    report.status = PASS
                else:
                    report.detail = (f"matched {matched} digits; "
                                     f"|lhs-rhs| = {mp.nstr(abs(lhs - rhs), 5)} "
                                     f"vs tail {mp.nstr(result.tail, 5)}")
            else:
                target = min(digits, BOUNDARY_TARGET)
                result = sum_boundary_detailed(record.lhs, target, ctx)
                lhs = result.value
                matched = _matched_digits(lhs, rhs, digits)
                if matched >= target:
                    report.status = PASS_BOUNDARY_REDUCED
                else:
                    report.detail = (f"boundary sum matched only {matched} "
                                     f"of {target} digits")
            report.lhs_value = lhs
            report.rhs_value = rhs
            report.matched_digits = matched
            report.terms_used = result.terms_used
            report.tail = result.tail
    except Binom3kError as exc:
        report.status = FAIL
        report.detail = f"{type(exc).__name__}: {exc}"
    report.elapsed = time.perf_counter() - start
    return report


def verify_all(catalog: Sequence[IdentityRecord], digits: int,
               ctx: Optional[PrecisionContext] = None,
               jobs: int = 1) -> dict:
    """Verify every record; failures are data, not exceptions."""
    records = sorted(catalog, key=lambda r: r.id)
    if jobs > 1 and len(records) > 1:
        import multiprocessing
        with multiprocessing.Pool(jobs) as pool:
            reports = pool.starmap(
                _verify_task, [(record, digits) for record in records])
    else:
        reports = [verify(record, digits, ctx) for record in records]
    summary = {
        "pass": sum(r.status in (PASS, PASS_BOUNDARY_REDUCED) for r in reports),
        "fail": sum(r.status == FAIL for r in reports),
        "skipped": sum(r.status == SKIPPED_DIVERGENT for r in reports),
        "reports": reports,
    }
    return summary


def _verify_task(record: IdentityRecord, digits: int) -> VerificationReport:
    return verify(record, digits)


def sweep(family: str, grid: Iterable[Union[TheoremParams, dict]],
          digits: int, ctx: Optional[PrecisionContext] = None
          ) -> list[VerificationReport]:
    """Instantiate and verify the family at every grid point.

    Invalid points (constraint violations, arguments beyond the radius)
    appear as FAIL reports carrying the constraint message.
    """
    reports = []
    for point in grid:
        if isinstance(point, TheoremParams):
            params = point
        else:
            params = TheoremParams(family, **point)
        try:
            record = instantiate(family, params)
        except InvalidParams as exc:
            reports.append(VerificationReport(
                identity_id=f"{family.lower()}-invalid",
                target_digits=digits, status=FAIL, params=params,
                detail=str(exc)))
            continue
        reports.append(verify(record, digits, ctx))
    return reports


def differential_check(level: str, pair: XYPair, digits: int,
                       ctx: Optional[PrecisionContext] = None
                       ) -> VerificationReport:
    """Check the derivative chain between adjacent closed-form levels.

    The level-(a-1) form equals x(x+y)/(y-x) times the x-derivative of the
    level-a form; the derivative is taken by central differences with
    h = 10^(-digits/3), so agreement of digits/3 digits is the bar.
    """
    if level not in ("A_to_B", "B_to_C"):
        raise ValueError(f"level must be 'A_to_B' or 'B_to_C', got {level!r}")
    ctx = _context_for(digits, ctx)
    lower, upper = (A_rhs, B_rhs) if level == "A_to_B" else (B_rhs, C_rhs)
    start = time.perf_counter()
    with ctx.workdps():
        x, y = pair.values(ctx)
        if x == y:
            raise DomainError("differential check is singular at x = y")
        h = mpf(10) ** (-mpf(digits) / 3)
        f_plus = lower(XYPair(x + h, y), ctx)
        f_minus = lower(XYPair(x - h, y), ctx)
        derivative = (f_plus - f_minus) / (2 * h)
        transformed = x * (x + y) / (y - x) * derivative
        closed = upper(pair, ctx)
        required = digits // 3
        matched = _matched_digits(transformed, closed, digits)
    report = VerificationReport(
        identity_id=f"diff-{level}-{x}-{y}".replace(".", "p"),
        target_digits=digits,
        status=PASS if matched >= required else FAIL,
        matched_digits=matched,
        lhs_value=transformed, rhs_value=closed,
        elapsed=time.perf_counter() - start,
        detail=f"central difference h = 1e-{digits}/3" if matched >= required
        else f"only {matched} of {required} digits agree",
    )
    return report
