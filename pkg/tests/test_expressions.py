from fractions import Fraction

import pytest
from mpmath import mp, mpf

from binom3k import expressions as ex
from binom3k.precision import make_context


@pytest.fixture(scope="module")
def ctx():
    return make_context(40)


def ev(expr, ctx):
    with ctx.workdps():
        return ex.eval_expr(expr, ctx)


def test_cbrt_negative(ctx):
    assert ev(ex.cbrt(ex.intlit(-8)), ctx) == -2


def test_boundary_positive_value(ctx):
    # 2*pi^2/3 - 2*ln^2 2, checked against direct mpmath evaluation
    expr = (ex.ratlit(Fraction(2, 3)) * ex.PI ** 2
            - ex.intlit(2) * ex.log(ex.intlit(2)) ** 2)
    with ctx.workdps():
        reference = 2 * mp.pi ** 2 / 3 - 2 * mp.log(2) ** 2
        assert abs(ev(expr, ctx) - reference) < mpf(10) ** -38
        assert mp.nstr(reference, 11) == "5.6188302396"


def test_pi2_over_6_value(ctx):
    expr = (ex.PI ** 2 / ex.intlit(6)
            - ex.log(ex.intlit(3)) ** 2 / ex.intlit(2))
    with ctx.workdps():
        reference = mp.pi ** 2 / 6 - mp.log(3) ** 2 / 2
        assert abs(ev(expr, ctx) - reference) < mpf(10) ** -38
        assert mp.nstr(reference, 11) == "1.0414595864"


def test_golden_ratio_leaf(ctx):
    with ctx.workdps():
        value = ev(ex.GOLDEN, ctx)
        assert abs(value - (1 + mp.sqrt(5)) / 2) < mpf(10) ** -38


def test_arctan_and_sqrt(ctx):
    expr = ex.arctan(ex.sqrt(ex.intlit(3)))
    with ctx.workdps():
        assert abs(ev(expr, ctx) - mp.pi / 3) < mpf(10) ** -38


def test_rational_exactness(ctx):
    expr = ex.ratlit(Fraction(1, 3)) + ex.ratlit(Fraction(2, 3))
    assert ev(expr, ctx) == 1


@pytest.mark.parametrize("builder", [
    lambda: ex.intlit(7),
    lambda: ex.ratlit(Fraction(-5, 12)),
    lambda: ex.cbrt(ex.intlit(3) + ex.sqrt(ex.intlit(2))),
    lambda: (ex.ratlit(Fraction(2, 3)) * ex.PI ** 2
             - ex.intlit(2) * ex.log(ex.intlit(2)) ** 2),
    lambda: (-ex.arctan(ex.sqrt(ex.intlit(3)) / ex.GOLDEN)),
])
def test_json_round_trip(builder, ctx):
    expr = builder()
    back = ex.from_json(ex.to_json(expr))
    assert back == expr
    assert ev(back, ctx) == ev(expr, ctx)
