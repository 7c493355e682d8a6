import math

import pytest

from logsine import (
    Accuracy,
    DomainError,
    GenfuncPoint,
    GridPoint,
    eval_derivative_cot,
    eval_derivative_series,
    eval_integral,
    eval_via_ladder,
    evaluate,
    genfunc_closed,
    genfunc_partial,
    genfunc_tail_bound,
    ladder_delta,
)

# Apery's constant zeta(3), exact to double precision
ZETA_3 = 1.2020569031595943

# Closed-form checkpoints, all derived from the termwise Fourier
# integration of log(2 sin(pi x u)) against the polynomial weights.
G_1_HALF = 1.0 - math.log(math.pi)
G_2_HALF = 1.5 - math.log(math.pi) + 3.5 * ZETA_3 / math.pi**2
G_3_HALF = 11.0 / 6.0 - math.log(math.pi) + 6.0 * ZETA_3 / math.pi**2
G_1_ONE = 1.0 - math.log(2.0 * math.pi)
G_2_ONE = 1.5 - math.log(2.0 * math.pi)
LADDER_1_HALF = 0.5 + 3.5 * ZETA_3 / math.pi**2
# -1 - log 2, from int_0^(pi/2) t cot(t) dt = (pi/2) log 2
DERIVATIVE_1_HALF = -1.0 - math.log(2.0)


class TestGridPoint:
    def test_validation_messages(self):
        with pytest.raises(DomainError, match="n must satisfy n >= 1"):
            GridPoint(0, 0.5)
        with pytest.raises(DomainError, match="x must satisfy 0 < x <= 1"):
            GridPoint(1, 0.0)
        with pytest.raises(DomainError, match="x must satisfy 0 < x <= 1"):
            GridPoint(1, 1.0001)


class TestIntegralRoute:
    @pytest.mark.parametrize(
        "n,x,expected",
        [
            (1, 0.5, G_1_HALF),
            (2, 0.5, G_2_HALF),
            (3, 0.5, G_3_HALF),
            (1, 1.0, G_1_ONE),
            (2, 1.0, G_2_ONE),
        ],
    )
    def test_closed_form_checkpoints(self, n, x, expected):
        assert eval_integral(GridPoint(n, x)) == pytest.approx(expected, abs=1e-11)

    def test_bitwise_deterministic(self):
        x = float("0.5")  # recomputed scale with identical bits
        a = eval_integral(GridPoint(4, 0.5))
        b = eval_integral(GridPoint(4, x))
        assert a == b

    def test_detailed_evaluation_fields(self):
        ev = evaluate(GridPoint(2, 0.7))
        assert ev.err_estimate >= 0.0
        assert ev.evaluations >= 1
        assert ev.value == eval_integral(GridPoint(2, 0.7))


class TestDerivativeRoutes:
    def test_cot_route_closed_form(self):
        assert eval_derivative_cot(GridPoint(1, 0.5)) == pytest.approx(
            DERIVATIVE_1_HALF, abs=1e-10
        )

    def test_cot_route_small_x_limit(self):
        # the cot kernel tends to 1 and the weight integrates to 1, so the
        # small-x limit is -1 - 1 = -2; this constant discriminates the two
        # printed series constants
        assert eval_derivative_cot(GridPoint(1, 1e-6)) == pytest.approx(-2.0, abs=1e-9)

    @pytest.mark.parametrize("n,x", [(1, 0.5), (2, 0.5), (3, 0.8)])
    def test_cot_route_matches_finite_difference(self, n, x):
        h = 1e-5
        fd = (
            x
            * (eval_integral(GridPoint(n, x + h)) - eval_integral(GridPoint(n, x - h)))
            / (2.0 * h)
        )
        assert eval_derivative_cot(GridPoint(n, x)) == pytest.approx(fd, abs=1e-6)

    def test_series_corrected_matches_cot(self):
        p = GridPoint(1, 0.5)
        series = eval_derivative_series(p, constant_variant="corrected")
        assert series == pytest.approx(eval_derivative_cot(p), abs=1e-9)

    def test_series_as_printed_differs_by_one(self):
        p = GridPoint(1, 0.5)
        printed = eval_derivative_series(p, constant_variant="as_printed")
        assert printed - eval_derivative_cot(p) == pytest.approx(1.0, abs=1e-9)

    def test_series_returns_bare_constant_when_terms_vanish(self):
        # at x = 1e-9 every term is far below the tail tolerance, so the
        # sum is empty up to one negligible rounding-level term
        p = GridPoint(1, 1e-9)
        assert eval_derivative_series(p, constant_variant="corrected") == -2.0
        assert eval_derivative_series(p, constant_variant="as_printed") == -1.0

    def test_series_rejects_x_at_radius(self):
        with pytest.raises(DomainError, match="series"):
            eval_derivative_series(GridPoint(1, 1.0))

    def test_series_rejects_unknown_variant(self):
        with pytest.raises(DomainError):
            eval_derivative_series(GridPoint(1, 0.5), constant_variant="fixed")

    def test_series_honors_term_cap(self):
        acc = Accuracy(max_series_terms=5)
        ev = evaluate(GridPoint(1, 0.8), method="derivative-series", acc=acc)
        assert ev.evaluations == 5


class TestLadderRoute:
    def test_closed_form_step(self):
        assert ladder_delta(1, 0.5) == pytest.approx(LADDER_1_HALF, abs=1e-10)

    def test_step_matches_direct_difference(self):
        diff = eval_integral(GridPoint(2, 0.5)) - eval_integral(GridPoint(1, 0.5))
        assert ladder_delta(1, 0.5) == pytest.approx(diff, abs=1e-9)

    def test_step_matches_direct_difference_high_order(self):
        diff = eval_integral(GridPoint(10, 0.3)) - eval_integral(GridPoint(9, 0.3))
        assert ladder_delta(9, 0.3) == pytest.approx(diff, abs=1e-8)

    def test_domain(self):
        with pytest.raises(DomainError):
            ladder_delta(0, 0.5)
        with pytest.raises(DomainError):
            ladder_delta(1, 0.0)
        with pytest.raises(DomainError):
            ladder_delta(1, 1.5)

    def test_via_ladder_order_one_is_integral(self):
        p = GridPoint(1, 0.37)
        assert eval_via_ladder(p) == eval_integral(p)

    def test_via_ladder_checkpoint(self):
        assert eval_via_ladder(GridPoint(2, 0.5)) == pytest.approx(G_2_HALF, abs=1e-9)

    def test_via_ladder_agrees_with_integral(self):
        p = GridPoint(10, 0.5)
        assert abs(eval_via_ladder(p) - eval_integral(p)) <= 10 * 1e-8


class TestGenfunc:
    def test_zero_z_vanishes(self):
        assert genfunc_closed(GenfuncPoint(0.7, 0.0)) == 0.0
        assert genfunc_partial(0.7, 0.0, 10) == 0.0

    @pytest.mark.parametrize("x,z", [(0.5, 0.5), (0.3, -0.5)])
    def test_closed_matches_partial(self, x, z):
        closed = genfunc_closed(GenfuncPoint(x, z))
        partial = genfunc_partial(x, z, 60)
        tail = genfunc_tail_bound(x, z, 60)
        assert abs(closed - partial) <= 1e-8 + tail

    def test_partial_single_term(self):
        expected = 0.5 * eval_integral(GridPoint(1, 0.5))
        assert genfunc_partial(0.5, 0.5, 1) == expected

    def test_partial_two_terms(self):
        expected = 0.5 * eval_integral(GridPoint(1, 0.5)) + 0.25 * eval_integral(GridPoint(2, 0.5))
        assert genfunc_partial(0.5, 0.5, 2) == pytest.approx(expected, abs=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError, match=r"\|z\| <= 0.9"):
            GenfuncPoint(0.5, 0.95)
        with pytest.raises(DomainError):
            genfunc_partial(0.5, 0.95, 10)
        with pytest.raises(DomainError):
            genfunc_partial(0.5, 0.5, 0)
        with pytest.raises(DomainError):
            genfunc_partial(0.0, 0.5, 10)


class TestEvaluateDispatch:
    def test_routes_agree(self):
        p = GridPoint(3, 0.4)
        integral = evaluate(p, method="integral")
        ladder = evaluate(p, method="ladder")
        assert ladder.value == pytest.approx(integral.value, abs=1e-9)

    def test_unknown_method(self):
        with pytest.raises(DomainError, match="method"):
            evaluate(GridPoint(1, 0.5), method="closed-form")
