"""High-precision evaluators for the closed forms of the C(3k,k) series.

The base closed form expresses sum z^k/(k^2 C(3k,k)) through arctan^2 and
log^2 of the cube-root auxiliary phi(z).  The substitution
z = 27xy/(x+y)^2 turns it into the two-parameter identity implemented by
:func:`A_rhs`; differentiating in x lowers the exponent of k, giving
:func:`B_rhs` (a = 1) and :func:`C_rhs` (a = 0).  Trigonometric variants
substitute x = cot^2 t.  On top of these sit the parameterized families:
golden-ratio substitutions producing Fibonacci/Lucas-flavored right-hand
sides, their corollaries at tripled index, Fibonacci-pair substitutions
with weighted left-hand series, and the generalized two-term recurrence
(Horadam) version.

Every evaluator returns an mpf at the context's working precision; the
matching left-hand :class:`~.series.SeriesSpec` for a family comes from
:func:`theorem_lhs_spec`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from mpmath import mp, mpf

from . import expressions
from .errors import DomainError, InvalidParams, SingularInput
from .precision import PrecisionContext, real_cbrt
from .sequences import HoradamParams, fib, horadam, lucas
from .series import SeriesSpec, UNIT_WEIGHT, Weight

Realish = Union[int, float, Fraction, mpf, expressions.Expr]

FAMILIES = (
    "THM1_FIB", "THM1_LUC", "COR2_FIB", "COR2_LUC",
    "THM3_V1", "THM3_V2", "THM3_V3", "THM3_V4", "THM3_V5", "THM3_V6",
    "THM4_FIB", "THM4_LUC", "COR5_FIB", "COR5_LUC",
    "THM6_FIB", "THM6_LUC",
    "THM7_FIB", "THM7_LUC", "THM9_FIB", "THM9_LUC", "THM10_FIB", "THM10_LUC",
    "HORADAM_A2", "HORADAM_A1",
)


def _as_mpf(value: Realish, ctx: PrecisionContext) -> mpf:
    if isinstance(value, expressions.Expr):
        return expressions.eval_expr(value, ctx)
    if isinstance(value, Fraction):
        return mpf(value.numerator) / mpf(value.denominator)
    return mpf(value)


# -- phi and the base closed form ---------------------------------------

def phi(z: Realish, ctx: PrecisionContext) -> mpf:
    """Cube-root auxiliary: real cbrt of (27 - 2z + 3 sqrt(81-12z)) / (2z)."""
    with ctx.workdps():
        zv = _as_mpf(z, ctx)
        if zv == 0:
            raise DomainError("phi is undefined at z = 0")
        rad = 81 - 12 * zv
        if rad < 0:
            raise DomainError(f"phi needs z <= 27/4, got z = {zv}")
        return real_cbrt((27 - 2 * zv + 3 * mp.sqrt(rad)) / (2 * zv))


def batir_rhs(z: Realish, ctx: PrecisionContext) -> mpf:
    """6 arctan^2(sqrt3/(2 phi - 1)) - log^2((phi^3+1)/(phi+1)^3) / 2."""
    with ctx.workdps():
        p = phi(z, ctx)
        if 2 * p - 1 == 0:
            raise DomainError("batir_rhs: arctan denominator 2 phi - 1 vanishes")
        arg = (p ** 3 + 1) / (p + 1) ** 3
        if arg <= 0:
            raise DomainError(f"batir_rhs: log argument {arg} is nonpositive")
        return 6 * mp.atan(mp.sqrt(3) / (2 * p - 1)) ** 2 - mp.log(arg) ** 2 / 2


# -- the (x, y) identities ----------------------------------------------

@dataclass(frozen=True)
class XYPair:
    """Arguments of the substitution z = 27xy/(x+y)^2.

    Validity window: x/y >= 1 (strict for the differentiated levels) or
    x/y <= -(sqrt(2)+1)^2; the lower boundary point itself is accepted.
    """

    x: Realish
    y: Realish

    def values(self, ctx: PrecisionContext) -> tuple[mpf, mpf]:
        with ctx.workdps():
            return _as_mpf(self.x, ctx), _as_mpf(self.y, ctx)


def _check_window(x: mpf, y: mpf, strict: bool) -> None:
    if y == 0:
        raise DomainError("y must be nonzero")
    ratio = x / y
    floor = -(mp.sqrt(2) + 1) ** 2
    slack = abs(floor) * mpf(10) ** (-(mp.dps - 5))  # roundoff at the boundary
    ok_pos = ratio > 1 if strict else ratio >= 1
    if not (ok_pos or ratio <= floor + slack):
        bound = ">" if strict else ">="
        raise DomainError(
            f"x/y = {ratio} outside validity window "
            f"(needs x/y {bound} 1 or x/y <= -(sqrt2+1)^2)")


def _a_parts(x: mpf, y: mpf) -> tuple[mpf, mpf]:
    """The shared arctan and log factors of identities at every level."""
    cx, cy = real_cbrt(x), real_cbrt(y)
    den = 2 * cx - cy
    if den == 0:
        raise DomainError("arctan denominator 2 cbrt(x) - cbrt(y) vanishes")
    s = x + y
    if s == 0:
        raise DomainError("x + y must be nonzero")
    arg = s / (cx + cy) ** 3
    if arg <= 0:
        raise DomainError(f"log argument (x+y)/(cbrt x + cbrt y)^3 = {arg} <= 0")
    return mp.atan(mp.sqrt(3) * cy / den), mp.log(arg)


def A_rhs(pair: XYPair, ctx: PrecisionContext) -> mpf:
    """Closed form of sum (27xy)^k / (k^2 (x+y)^{2k} C(3k,k))."""
    with ctx.workdps():
        x, y = pair.values(ctx)
        _check_window(x, y, strict=False)
        at, lg = _a_parts(x, y)
        return 6 * at ** 2 - lg ** 2 / 2


def B_rhs(pair: XYPair, ctx: PrecisionContext) -> mpf:
    """Closed form at exponent a = 1 (one x-derivative below A)."""
    with ctx.workdps():
        x, y = pair.values(ctx)
        if x == y:
            raise SingularInput("B_rhs is singular at x = y")
        _check_window(x, y, strict=True)
        at, lg = _a_parts(x, y)
        cx, cy = real_cbrt(x), real_cbrt(y)
        return real_cbrt(x * y) / (x - y) * (
            2 * mp.sqrt(3) * (cx + cy) * at + (cx - cy) * lg)


def C_rhs(pair: XYPair, ctx: PrecisionContext) -> mpf:
    """Closed form at exponent a = 0 (two x-derivatives below A)."""
    with ctx.workdps():
        x, y = pair.values(ctx)
        if x == y:
            raise SingularInput("C_rhs is singular at x = y")
        _check_window(x, y, strict=True)
        at, lg = _a_parts(x, y)
        cxy = real_cbrt(x * y)
        cx2, cy2 = real_cbrt(x * x), real_cbrt(y * y)
        cx4, cy4 = real_cbrt(x ** 4), real_cbrt(y ** 4)
        return 4 * x * y / (x - y) ** 2 + cxy / 3 * (x + y) / (x - y) ** 3 * (
            2 * mp.sqrt(3) * (2 * cxy * (cx2 + cy2) + cx4 + cy4) * at
            - (2 * cxy * (cx2 - cy2) - cx4 + cy4) * lg)


# -- trigonometric variants ---------------------------------------------

def trig_rhs(variant: str, x: Realish, ctx: PrecisionContext) -> mpf:
    """Closed forms after the substitution x -> cot^2 t, y -> 1.

    Variant D is the a=2 level on sin^{2k} 2t for t in (0, pi/4]; E the
    alternating a=2 level on tan^{2k} 2t for t in (0, pi/8]; F the a=1
    level on sin^{2k} 2t for t in (0, pi/4) strictly.
    """
    if variant not in ("D", "E", "F"):
        raise ValueError(f"unknown trig variant {variant!r}")
    with ctx.workdps():
        t = _as_mpf(x, ctx)
        slack = mpf(10) ** (-(mp.dps - 5))
        if variant == "D":
            lo_ok, hi_ok = t > 0, t <= mp.pi / 4 + slack
        elif variant == "E":
            lo_ok, hi_ok = t > 0, t <= mp.pi / 8 + slack
        else:
            lo_ok, hi_ok = t > 0, t < mp.pi / 4 - slack
        if not (lo_ok and hi_ok):
            raise DomainError(f"variant {variant} needs its argument in the "
                              f"stated interval, got {t}")
        c2 = mp.cot(t) ** 2
        s3 = mp.sqrt(3)
        cc = real_cbrt(c2)
        if variant == "D":
            return (6 * mp.atan(s3 / (2 * cc - 1)) ** 2
                    - mp.log(mp.csc(t) ** 2 / (cc + 1) ** 3) ** 2 / 2)
        if variant == "E":
            return (6 * mp.atan(s3 / (2 * cc + 1)) ** 2
                    - mp.log(mp.csc(t) ** 2 * mp.cos(2 * t) / (cc - 1) ** 3) ** 2 / 2)
        at = mp.atan(s3 / (2 * cc - 1))
        lg = mp.log(mp.csc(t) ** 2 / (cc + 1) ** 3)
        scale = mp.sin(t) ** 2 / mp.cos(2 * t) * cc
        return 2 * s3 * scale * (cc + 1) * at + scale * (cc - 1) * lg


# -- parameterized theorem families -------------------------------------

@dataclass(frozen=True)
class TheoremParams:
    """Bound parameters of one closed-form family.

    ``r`` indexes the golden-ratio families, ``(n, m)`` the six
    Fibonacci/Lucas product identities, ``(p, q)`` the weighted-series
    families, and ``horadam``+``r`` the generalized recurrence family.
    """

    family: str
    r: Optional[int] = None
    n: Optional[int] = None
    m: Optional[int] = None
    p: Optional[int] = None
    q: Optional[int] = None
    horadam: Optional[HoradamParams] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidParams(f"unknown family {self.family!r}")

    def describe(self) -> str:
        parts = [self.family]
        for name in ("r", "n", "m", "p", "q"):
            value = getattr(self, name)
            if value is not None:
                parts.append(f"{name}={value}")
        if self.horadam is not None:
            h = self.horadam
            parts.append(f"W({h.p},{h.q},{h.a},{h.b})")
        return " ".join(parts)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidParams(message)


def _validate(params: TheoremParams) -> None:
    fam = params.family
    if fam in ("THM1_FIB", "COR2_FIB", "THM4_FIB", "COR5_FIB", "THM6_FIB",
               "THM4_LUC", "COR5_LUC", "THM6_LUC"):
        _require(params.r is not None and params.r >= 1,
                 f"{fam} needs r >= 1")
    elif fam == "THM1_LUC":
        _require(params.r is not None and params.r >= 0,
                 "THM1_LUC needs r >= 0")
        _require(params.r != 1,
                 "THM1_LUC excludes r = 1 (27/L_1^2 exceeds the radius)")
    elif fam == "COR2_LUC":
        _require(params.r is not None and params.r >= 0, "COR2_LUC needs r >= 0")
    elif fam.startswith("THM3"):
        n, m = params.n, params.m
        _require(n is not None and m is not None, f"{fam} needs (n, m)")
        if fam == "THM3_V1":
            _require(n > m >= 1, "THM3_V1 needs n > m >= 1")
        else:
            _require(n >= m >= 1, f"{fam} needs n >= m >= 1")
        if fam == "THM3_V4":
            _require(lucas(n) * fib(m) > fib(n) * lucas(m),
                     f"THM3_V4 needs L_n F_m > F_n L_m "
                     f"(got {lucas(n) * fib(m)} <= {fib(n) * lucas(m)})")
    elif fam.startswith(("THM7", "THM9", "THM10")):
        p, q = params.p, params.q
        _require(p is not None and q is not None, f"{fam} needs (p, q)")
        _require(p <= -2, f"{fam} needs p <= -2")
        _require(q >= 4, f"{fam} needs q >= 4")
        _require(q > abs(p) + 1, f"{fam} needs q > |p| + 1")
    elif fam.startswith("HORADAM"):
        _require(params.horadam is not None, f"{fam} needs recurrence params")
        _require(params.r is not None and params.r >= 1, f"{fam} needs r >= 1")


def _alpha_beta() -> tuple[mpf, mpf]:
    s5 = mp.sqrt(5)
    return (1 + s5) / 2, (1 - s5) / 2


# Golden-ratio families (a = 2 and a = 1 levels, unit weight).

def _thm1_fib(r: int) -> mpf:
    alpha, _ = _alpha_beta()
    a2r, s = real_cbrt(alpha ** (2 * r)), (-1) ** r
    return (6 * mp.atan(mp.sqrt(3) / (2 * a2r + s)) ** 2
            - mp.log(mp.sqrt(5) * alpha ** r * fib(r) / (a2r - s) ** 3) ** 2 / 2)


def _thm1_luc(r: int) -> mpf:
    alpha, _ = _alpha_beta()
    a2r, s = real_cbrt(alpha ** (2 * r)), (-1) ** r
    return (6 * mp.atan(mp.sqrt(3) / (2 * a2r - s)) ** 2
            - mp.log(alpha ** r * lucas(r) / (a2r + s) ** 3) ** 2 / 2)


def _cor2_fib(r: int) -> mpf:
    alpha, _ = _alpha_beta()
    return (6 * mp.atan(mp.sqrt(3) / (alpha ** (2 * r) + alpha ** r * lucas(r))) ** 2
            - mp.log(mpf(fib(3 * r)) / (5 * fib(r) ** 3)) ** 2 / 2)


def _cor2_luc(r: int) -> mpf:
    alpha, _ = _alpha_beta()
    return (6 * mp.atan(mp.sqrt(3) / (alpha ** (2 * r)
                                      + mp.sqrt(5) * alpha ** r * fib(r))) ** 2
            - mp.log(mpf(lucas(3 * r)) / lucas(r) ** 3) ** 2 / 2)


def _thm4_fib(r: int) -> mpf:
    alpha, _ = _alpha_beta()
    a2r, s = real_cbrt(alpha ** (2 * r)), (-1) ** r
    return (2 * mp.sqrt(3) * (a2r - s) * mp.atan(mp.sqrt(3) / (2 * a2r + s))
            - s * (a2r + s)
            * mp.log(mp.sqrt(5) * alpha ** r * fib(r) / (a2r - s) ** 3)
            ) / (real_cbrt(alpha ** r) * lucas(r))


def _thm4_luc(r: int) -> mpf:
    alpha, _ = _alpha_beta()
    a2r, s = real_cbrt(alpha ** (2 * r)), (-1) ** r
    return mp.sqrt(5) / (5 * real_cbrt(alpha ** r) * fib(r)) * (
        2 * mp.sqrt(3) * (a2r + s) * mp.atan(mp.sqrt(3) / (2 * a2r - s))
        + s * (a2r - s) * mp.log(alpha ** r * lucas(r) / (a2r + s) ** 3))


def _cor5_fib(r: int) -> mpf:
    alpha, _ = _alpha_beta()
    return (2 * mp.sqrt(15) * fib(r) / lucas(3 * r)
            * mp.atan(mp.sqrt(3) / (alpha ** r * (alpha ** r + lucas(r))))
            - (-1) ** r * mpf(lucas(r)) / lucas(3 * r)
            * mp.log(mpf(fib(3 * r)) / (5 * fib(r) ** 3)))


def _cor5_luc(r: int) -> mpf:
    alpha, _ = _alpha_beta()
    return (2 * mp.sqrt(15) / 5 * lucas(r) / fib(3 * r)
            * mp.atan(mp.sqrt(3) / (alpha ** r * (alpha ** r + mp.sqrt(5) * fib(r))))
            + (-1) ** r * mpf(fib(r)) / fib(3 * r)
            * mp.log(mpf(lucas(3 * r)) / lucas(r) ** 3))


# a = 0 level golden-ratio families.  The printed forms carry the k-sign
# factor outside the series, so the sum of z^k w/C equals (+-1) times the
# displayed value; that sign is folded in here.

def _thm6_fib(r: int) -> mpf:
    alpha, beta = _alpha_beta()
    a2, b2 = real_cbrt(alpha ** (2 * r)), real_cbrt(beta ** (2 * r))
    a4, b4 = real_cbrt(alpha ** (4 * r)), real_cbrt(beta ** (4 * r))
    s = (-1) ** r
    Lr3 = mpf(lucas(r)) ** 3
    value = (mpf(4) / lucas(r) ** 2
             + 2 * mp.sqrt(15) / 3 * fib(r) / Lr3
             * (2 * (a2 + b2) - s * (a4 + b4))
             * mp.atan(mp.sqrt(3) / (2 * real_cbrt(alpha ** (2 * r)) + s))
             + s * mp.sqrt(5) / 3 * fib(r) / Lr3
             * (2 * (a2 - b2) + s * (a4 - b4))
             * mp.log(mp.sqrt(5) * alpha ** r * fib(r)
                      / (real_cbrt(alpha ** (2 * r)) - s) ** 3))
    return (-1) ** (r - 1) * value


def _thm6_luc(r: int) -> mpf:
    alpha, beta = _alpha_beta()
    a2, b2 = real_cbrt(alpha ** (2 * r)), real_cbrt(beta ** (2 * r))
    a4, b4 = real_cbrt(alpha ** (4 * r)), real_cbrt(beta ** (4 * r))
    ar, br = real_cbrt(alpha ** r), real_cbrt(beta ** r)
    s = (-1) ** r
    Fr3 = mpf(fib(r)) ** 3
    value = (mpf(4) / (5 * fib(r) ** 2)
             + 2 * mp.sqrt(15) / 75 * lucas(r) / Fr3
             * (2 * (a2 + b2) + s * (a4 + b4))
             * mp.atan(mp.sqrt(3) / (2 * real_cbrt(alpha ** (2 * r)) - s))
             - s * mp.sqrt(5) / 75 * lucas(r) / Fr3
             * (2 * (a2 - b2) - s * (a4 - b4))
             * mp.log(mpf(lucas(r)) / (ar + br) ** 3))
    return (-1) ** r * value


# Weighted families: z = -27 F_p F_{p+q} / F_q^2, weight F or L at m = 2p+q.

def _thm7_parts(p: int, q: int):
    alpha, _ = _alpha_beta()
    Fp, Fpq, Fq = mpf(fib(p)), mpf(fib(p + q)), mpf(fib(q))
    sgq = (-1) ** q
    s3 = mp.sqrt(3)
    at1 = mp.atan(s3 * real_cbrt(Fpq) / (2 * real_cbrt(alpha ** q * Fp)
                                         + real_cbrt(Fpq)))
    at2 = mp.atan(s3 * real_cbrt(Fp) / (2 * real_cbrt(alpha ** q * Fpq)
                                        + sgq * real_cbrt(Fp)))
    lg1 = mp.log((-1) ** p * Fq / (real_cbrt(alpha ** p * Fpq)
                                   - real_cbrt(alpha ** (p + q) * Fp)) ** 3)
    lg2 = mp.log(alpha ** (p + q) * Fq / (real_cbrt(alpha ** q * Fpq)
                                          - sgq * real_cbrt(Fp)) ** 3)
    return at1, at2, lg1, lg2


def _thm7_fib(p: int, q: int) -> mpf:
    at1, at2, lg1, lg2 = _thm7_parts(p, q)
    return (6 / mp.sqrt(5) * (at1 ** 2 - at2 ** 2)
            - mp.sqrt(5) / 10 * (lg1 ** 2 - lg2 ** 2))


def _thm7_luc(p: int, q: int) -> mpf:
    at1, at2, lg1, lg2 = _thm7_parts(p, q)
    return 6 * (at1 ** 2 + at2 ** 2) - (lg1 ** 2 + lg2 ** 2) / 2


def _thm9_parts(p: int, q: int):
    alpha, beta = _alpha_beta()
    Fp, Fpq, Fq = mpf(fib(p)), mpf(fib(p + q)), mpf(fib(q))
    sgq = (-1) ** q
    s3 = mp.sqrt(3)

    def a_minus(s):
        return (real_cbrt(s ** q) * (real_cbrt(s ** q * Fp) - real_cbrt(Fpq))
                / (s ** q * Fp + Fpq))

    def a_plus(s):
        return (real_cbrt(s ** q) * (real_cbrt(s ** q * Fp) + real_cbrt(Fpq))
                / (s ** q * Fp + Fpq))

    at1 = mp.atan(s3 * real_cbrt(Fpq) / (2 * real_cbrt(alpha ** q * Fp)
                                         + real_cbrt(Fpq)))
    at2 = mp.atan(s3 * real_cbrt(Fp) / (2 * sgq * real_cbrt(alpha ** q * Fpq)
                                        + real_cbrt(Fp)))
    lg1 = mp.log(beta ** p * Fq / (real_cbrt(Fpq) - real_cbrt(alpha ** q * Fp)) ** 3)
    lg2 = mp.log(alpha ** p * Fq / (real_cbrt(Fpq) - real_cbrt(beta ** q * Fp)) ** 3)
    pre = real_cbrt(Fp * Fpq)
    return a_minus, a_plus, at1, at2, lg1, lg2, pre, alpha, beta


def _thm9_fib(p: int, q: int) -> mpf:
    am, ap, at1, at2, lg1, lg2, pre, alpha, beta = _thm9_parts(p, q)
    return pre / mp.sqrt(5) * (
        2 * mp.sqrt(3) * (am(alpha) * at1 + am(beta) * at2)
        - (ap(alpha) * lg1 - ap(beta) * lg2))


def _thm9_luc(p: int, q: int) -> mpf:
    am, ap, at1, at2, lg1, lg2, pre, alpha, beta = _thm9_parts(p, q)
    return pre * (
        2 * mp.sqrt(3) * (am(alpha) * at1 - am(beta) * at2)
        - (ap(alpha) * lg1 + ap(beta) * lg2))


def _thm10_value(p: int, q: int, want_lucas: bool) -> mpf:
    alpha, beta = _alpha_beta()
    Fp, Fpq, Fq = mpf(fib(p)), mpf(fib(p + q)), mpf(fib(q))
    Lq = mpf(lucas(q))
    sgq = (-1) ** q
    s3 = mp.sqrt(3)

    def b_coeff(s, sign):
        return (real_cbrt(s ** (q - 3 * p)) / (s ** q * Fp + Fpq) ** 3
                * (real_cbrt(s ** (4 * q) * Fp ** 4) + sign * real_cbrt(Fpq ** 4)
                   - sign * 2 * real_cbrt(s ** q * Fp * Fpq)
                   * (real_cbrt(s ** (2 * q) * Fp ** 2)
                      + sign * real_cbrt(Fpq ** 2))))

    at1, at2, lg1, lg2 = _thm7_parts(p, q)
    # thm7's at2 uses the (2 cbrt(a^q Fpq) + (-1)^q cbrt(Fp)) denominator;
    # the a=0/a=1 levels place (-1)^q on the other factor
    at2 = mp.atan(s3 * real_cbrt(Fp) / (2 * sgq * real_cbrt(alpha ** q * Fpq)
                                        + real_cbrt(Fp)))
    den = (Fpq + alpha ** q * Fp) ** 2 * (Fpq + beta ** q * Fp) ** 2
    if want_lucas:
        displayed = (4 * (-1) ** (p - q - 1) * real_cbrt(Fpq ** 2 * Fp ** 2) / Fq
                     * (Fp ** 2 * Lq + sgq * Fpq ** 2 * Lq + 4 * Fp * Fpq) / den
                     - 2 / s3 * (b_coeff(alpha, 1) * at1 - b_coeff(beta, 1) * at2)
                     + mpf(1) / 3 * (b_coeff(alpha, -1) * lg1
                                     + b_coeff(beta, -1) * lg2))
    else:
        displayed = (4 * (-1) ** (p - 1) * real_cbrt(Fpq ** 2 * Fp ** 2)
                     * (Fpq ** 2 - sgq * Fp ** 2) / den
                     - 2 * mp.sqrt(15) / 15 * (b_coeff(alpha, 1) * at1
                                               + b_coeff(beta, 1) * at2)
                     + mp.sqrt(5) / 15 * (b_coeff(alpha, -1) * lg1
                                          - b_coeff(beta, -1) * lg2))
    # the displayed form is normalized by (-1)^p F_q cbrt(Fp F_{p+q}) and
    # carries (-1)^{k-p} inside the sum; fold both into the series value
    return (-1) ** p * Fq * real_cbrt(Fp * Fpq) * displayed


# Generalized recurrence family.

def _horadam_value(params: HoradamParams, r: int, level: int) -> mpf:
    p, q = params.p, params.q
    delta = mp.sqrt(p * p + 4 * q)
    alpha_s = (p + delta) / 2
    A = params.b - params.a * (p - delta) / 2
    B = params.b - params.a * alpha_s
    Wr = mpf(horadam(r, params))
    if Wr == 0:
        raise InvalidParams(f"W_{r} = 0: series argument undefined")
    x = A * alpha_s ** (2 * r)
    y = B * mpf(-q) ** r
    cx, cy = real_cbrt(x), real_cbrt(y)
    at = mp.atan(mp.sqrt(3) * real_cbrt(B * mpf(q) ** r) / (2 * cx + cy))
    lg = mp.log(alpha_s ** r * delta * Wr / (cx - cy) ** 3)
    # the (-1)^{k(r-1)} factor folds entirely into z^k, so no sign prefactor
    if level == 2:
        return 6 * at ** 2 - lg ** 2 / 2
    displayed = (2 * mp.sqrt(3) * (cx - cy) * at
                 - (-1) ** r * (cx + cy) * lg)
    return displayed * real_cbrt(A * B * alpha_s ** (2 * r)
                                 * mpf(q) ** r) / (x + y)


# -- public dispatchers --------------------------------------------------

def theorem_rhs(params: TheoremParams, ctx: PrecisionContext) -> mpf:
    """Value of the family's series (sum of z^k w(k)/(k^a C(3k,k)))."""
    _validate(params)
    fam = params.family
    with ctx.workdps():
        if fam == "THM1_FIB":
            return _thm1_fib(params.r)
        if fam == "THM1_LUC":
            return _thm1_luc(params.r)
        if fam == "COR2_FIB":
            return _cor2_fib(params.r)
        if fam == "COR2_LUC":
            return _cor2_luc(params.r)
        if fam.startswith("THM3"):
            return _thm3_value(fam, params.n, params.m)
        if fam == "THM4_FIB":
            return _thm4_fib(params.r)
        if fam == "THM4_LUC":
            return _thm4_luc(params.r)
        if fam == "COR5_FIB":
            return _cor5_fib(params.r)
        if fam == "COR5_LUC":
            return _cor5_luc(params.r)
        if fam == "THM6_FIB":
            return _thm6_fib(params.r)
        if fam == "THM6_LUC":
            return _thm6_luc(params.r)
        if fam == "THM7_FIB":
            return _thm7_fib(params.p, params.q)
        if fam == "THM7_LUC":
            return _thm7_luc(params.p, params.q)
        if fam == "THM9_FIB":
            return _thm9_fib(params.p, params.q)
        if fam == "THM9_LUC":
            return _thm9_luc(params.p, params.q)
        if fam == "THM10_FIB":
            return _thm10_value(params.p, params.q, want_lucas=False)
        if fam == "THM10_LUC":
            return _thm10_value(params.p, params.q, want_lucas=True)
        if fam == "HORADAM_A2":
            return _horadam_value(params.horadam, params.r, level=2)
        return _horadam_value(params.horadam, params.r, level=1)


def _thm3_value(fam: str, n: int, m: int) -> mpf:
    s3 = mp.sqrt(3)
    s = (-1) ** m
    if fam == "THM3_V1":
        t = (-1) ** (n - m)
        u, v = real_cbrt(mpf(fib(n)) ** 2), real_cbrt(mpf(fib(m)) ** 2)
        return (6 * mp.atan(s3 * v / (2 * u + t * v)) ** 2
                - mp.log(mpf(fib(n - m) * fib(n + m)) / (u - t * v) ** 3) ** 2 / 2)
    if fam == "THM3_V2":
        u, v = real_cbrt(mpf(fib(n + m))), real_cbrt(mpf(fib(n - m)))
        return (6 * mp.atan(s3 * v / (2 * u - s * v)) ** 2
                - mp.log(mpf(lucas(m) * fib(n)) / (u + s * v) ** 3) ** 2 / 2)
    if fam == "THM3_V3":
        u, v = real_cbrt(mpf(fib(n + m))), real_cbrt(mpf(fib(n - m)))
        return (6 * mp.atan(s3 * v / (2 * u + s * v)) ** 2
                - mp.log(mpf(fib(m) * lucas(n)) / (u - s * v) ** 3) ** 2 / 2)
    if fam == "THM3_V4":
        u = real_cbrt(mpf(lucas(n) * fib(m)))
        v = real_cbrt(mpf(lucas(m) * fib(n)))
        return (6 * mp.atan(s3 * v / (2 * u - v)) ** 2
                - mp.log(mpf(2 * fib(n + m)) / (u + v) ** 3) ** 2 / 2)
    if fam == "THM3_V5":
        u, v = real_cbrt(mpf(lucas(n + m))), real_cbrt(mpf(lucas(n - m)))
        return (6 * mp.atan(s3 * v / (2 * u - s * v)) ** 2
                - mp.log(mpf(lucas(m) * lucas(n)) / (u + s * v) ** 3) ** 2 / 2)
    u, v = real_cbrt(mpf(lucas(n + m))), real_cbrt(mpf(lucas(n - m)))
    return (6 * mp.atan(s3 * v / (2 * u + s * v)) ** 2
            - mp.log(mpf(5 * fib(m) * fib(n)) / (u - s * v) ** 3) ** 2 / 2)


def theorem_lhs_spec(params: TheoremParams) -> SeriesSpec:
    """The SeriesSpec whose sum theorem_rhs evaluates in closed form."""
    _validate(params)
    fam = params.family
    label = params.describe()
    if fam in ("THM1_FIB", "THM4_FIB", "THM6_FIB"):
        r = params.r
        z = Fraction((-1) ** (r - 1) * 27, 5 * fib(r) ** 2)
        a = {"THM1_FIB": 2, "THM4_FIB": 1, "THM6_FIB": 0}[fam]
        return SeriesSpec(z, a, UNIT_WEIGHT, label)
    if fam in ("THM1_LUC", "THM4_LUC", "THM6_LUC"):
        r = params.r
        z = Fraction((-1) ** r * 27, lucas(r) ** 2)
        a = {"THM1_LUC": 2, "THM4_LUC": 1, "THM6_LUC": 0}[fam]
        return SeriesSpec(z, a, UNIT_WEIGHT, label)
    if fam in ("COR2_FIB", "COR5_FIB"):
        r = params.r
        z = Fraction((-1) ** (r - 1) * 27, 5 * fib(3 * r) ** 2)
        return SeriesSpec(z, 2 if fam == "COR2_FIB" else 1, UNIT_WEIGHT, label)
    if fam in ("COR2_LUC", "COR5_LUC"):
        r = params.r
        z = Fraction((-1) ** r * 27, lucas(3 * r) ** 2)
        return SeriesSpec(z, 2 if fam == "COR2_LUC" else 1, UNIT_WEIGHT, label)
    if fam.startswith("THM3"):
        n, m = params.n, params.m
        z = {
            "THM3_V1": lambda: Fraction(
                (-1) ** (n - m - 1) * 27 * fib(n) ** 2 * fib(m) ** 2,
                fib(n - m) ** 2 * fib(n + m) ** 2),
            "THM3_V2": lambda: Fraction(
                (-1) ** m * 27 * fib(n + m) * fib(n - m),
                lucas(m) ** 2 * fib(n) ** 2),
            "THM3_V3": lambda: Fraction(
                (-1) ** (m - 1) * 27 * fib(n + m) * fib(n - m),
                fib(m) ** 2 * lucas(n) ** 2),
            "THM3_V4": lambda: Fraction(
                27 * fib(2 * m) * fib(2 * n), 4 * fib(n + m) ** 2),
            "THM3_V5": lambda: Fraction(
                (-1) ** m * 27 * lucas(n + m) * lucas(n - m),
                lucas(m) ** 2 * lucas(n) ** 2),
            "THM3_V6": lambda: Fraction(
                (-1) ** (m - 1) * 27 * lucas(n + m) * lucas(n - m),
                25 * fib(m) ** 2 * fib(n) ** 2),
        }[fam]()
        return SeriesSpec(z, 2, UNIT_WEIGHT, label)
    if fam.startswith(("THM7", "THM9", "THM10")):
        p, q = params.p, params.q
        z = Fraction(-27 * fib(p) * fib(p + q), fib(q) ** 2)
        a = 2 if fam.startswith("THM7") else 1 if fam.startswith("THM9") else 0
        kind = "fib" if fam.endswith("FIB") else "lucas"
        return SeriesSpec(z, a, Weight(kind, 2 * p + q), label)
    # HORADAM_A2 / HORADAM_A1
    h, r = params.horadam, params.r
    ab = h.b * h.b - h.p * h.a * h.b - h.q * h.a * h.a  # A*B exactly
    wr = horadam(r, h)
    if wr == 0:
        raise InvalidParams(f"W_{r} = 0: series argument undefined")
    z = Fraction((-1) ** (r - 1) * 27 * ab * h.q ** r,
                 (h.p ** 2 + 4 * h.q) * wr ** 2)
    return SeriesSpec(z, 2 if fam == "HORADAM_A2" else 1, UNIT_WEIGHT, label)


def thm7_intermediate(params: TheoremParams, branch: str,
                      ctx: PrecisionContext) -> mpf:
    """One Binet branch of the weighted a=2 family.

    The alpha branch is the base identity at (x, y) = (F_p alpha^q,
    -F_{p+q}); the beta branch at (F_{p+q}, -beta^q F_p).  (alpha -
    beta)/sqrt5 and alpha + beta recombine to the Fibonacci- and
    Lucas-weighted sums.
    """
    if branch not in ("alpha", "beta"):
        raise ValueError(f"branch must be 'alpha' or 'beta', got {branch!r}")
    _validate(TheoremParams("THM7_FIB", p=params.p, q=params.q))
    with ctx.workdps():
        alpha, beta = _alpha_beta()
        p, q = params.p, params.q
        if branch == "alpha":
            pair = XYPair(fib(p) * alpha ** q, -mpf(fib(p + q)))
        else:
            pair = XYPair(mpf(fib(p + q)), -beta ** q * fib(p))
        return A_rhs(pair, ctx)


def thm1_fib_rhs(r: int, ctx: PrecisionContext) -> mpf:
    """Shorthand for theorem_rhs of the first golden-ratio family."""
    return theorem_rhs(TheoremParams("THM1_FIB", r=r), ctx)


def horadam_rhs(level: int, params: HoradamParams, r: int,
                ctx: PrecisionContext) -> mpf:
    """Generalized-recurrence closed form at exponent a = level (2 or 1)."""
    if level not in (1, 2):
        raise ValueError("level must be 1 or 2")
    fam = "HORADAM_A2" if level == 2 else "HORADAM_A1"
    return theorem_rhs(TheoremParams(fam, r=r, horadam=params), ctx)
