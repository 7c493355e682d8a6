import math

import pytest

from logsine import (
    DomainError,
    IdentityReport,
    audit_large_n,
    audit_small_x,
    audit_table,
    check_bernoulli_zeta,
    check_derivative,
    check_genfunc,
    check_ladder,
    check_path_equivalence,
    check_series_constant,
    harmonic,
)

G_1_HALF = 1.0 - math.log(math.pi)


class TestIdentityReportType:
    def test_grid_must_be_non_empty(self):
        with pytest.raises(DomainError):
            IdentityReport("x", (), 0.0, 1.0, True, "")

    def test_passed_flag_must_match_residual(self):
        with pytest.raises(ValueError):
            IdentityReport("x", (1,), 2.0, 1.0, True, "")
        report = IdentityReport("x", (1,), 0.5, 1.0, True, "")
        assert report.passed


class TestChecks:
    def test_derivative_default_grid_passes(self):
        report = check_derivative()
        assert report.passed
        assert report.tolerance == 1e-6
        assert len(report.grid) == 18
        assert report.max_abs_residual <= 1e-6

    def test_derivative_single_point(self):
        report = check_derivative(grid=[(1, 0.5)])
        assert report.passed
        assert report.max_abs_residual <= 1e-6

    def test_derivative_empty_grid_rejected(self):
        with pytest.raises(DomainError):
            check_derivative(grid=[])

    def test_ladder_default_grid_passes(self):
        report = check_ladder()
        assert report.passed
        assert report.tolerance == 1e-8
        assert len(report.grid) == 90

    def test_ladder_checkpoint_value(self):
        report = check_ladder(grid=[(1, 0.5)])
        assert report.passed
        assert report.max_abs_residual <= 1e-9

    def test_ladder_rejects_out_of_domain_point(self):
        with pytest.raises(DomainError, match="x must satisfy 0 < x <= 1"):
            check_ladder(grid=[(1, 0.5), (2, 1.5)])

    def test_path_equivalence_passes(self):
        report = check_path_equivalence()
        assert report.passed
        assert report.tolerance == 1e-8

    def test_series_constant_names_corrected_variant(self):
        report = check_series_constant()
        assert report.passed
        assert "matching variant: corrected" in report.notes
        assert "as_printed=0" in report.notes

    def test_series_constant_emits_cap_note_when_truncated(self):
        from logsine import Accuracy

        report = check_series_constant(grid=[(1, 0.95)], acc=Accuracy())
        assert "term cap" in report.notes

    def test_genfunc_passes(self):
        report = check_genfunc()
        assert report.passed
        assert report.tolerance >= 1e-8
        assert len(report.grid) == 8

    def test_genfunc_accepts_zero_z(self):
        report = check_genfunc(xs=(0.5,), zs=(0.0, 0.3))
        assert report.passed

    def test_genfunc_rejects_z_outside_radius(self):
        with pytest.raises(DomainError):
            check_genfunc(xs=(0.5,), zs=(0.95,))

    def test_genfunc_rejects_empty(self):
        with pytest.raises(DomainError):
            check_genfunc(xs=(), zs=(0.5,))

    def test_bernoulli_zeta_passes(self):
        report = check_bernoulli_zeta()
        assert report.passed
        assert report.tolerance == 1e-12
        assert len(report.grid) == 30

    def test_bernoulli_zeta_rejects_empty_range(self):
        with pytest.raises(DomainError):
            check_bernoulli_zeta(0)

    def test_checks_are_deterministic(self):
        assert check_ladder(grid=[(1, 0.5), (2, 0.3)]) == check_ladder(grid=[(1, 0.5), (2, 0.3)])

    def test_point_failures_recorded_without_aborting(self):
        from logsine import Accuracy

        acc = Accuracy(quad_rel_tol=1e-18, max_quad_refinements=3)
        report = check_derivative(grid=[(1, 0.5)], acc=acc)
        assert not report.passed
        assert report.max_abs_residual == math.inf
        assert "evaluation failures" in report.notes


class TestAuditsAlwaysComplete:
    def test_table_rows_emitted_despite_budget_exhaustion(self):
        from logsine import Accuracy

        acc = Accuracy(quad_rel_tol=1e-18, max_quad_refinements=3)
        audit = audit_table(acc)
        assert len(audit.rows) == 4
        assert all(math.isfinite(r.computed_value) for r in audit.rows)


class TestSmallXAudit:
    def test_default_rows(self):
        audit = audit_small_x()
        assert len(audit.rows) == 3
        gaps = [abs(r.gap) for r in audit.rows]
        # the gap against 2 H_n - 2 log(2 pi x) shrinks quadratically
        assert gaps[0] <= 1e-4
        assert gaps[0] > gaps[1] > gaps[2]
        for r in audit.rows:
            assert r.reference == pytest.approx(
                2.0 * harmonic(r.n) - 2.0 * math.log(2.0 * math.pi * r.x), rel=1e-15
            )
            assert r.scaled == r.value / (r.x * r.x)
        # nothing like the claimed quadratic vanishing (slope 2)
        assert audit.log_slope < 0.5

    def test_checkpoint_row_reused(self):
        audit = audit_small_x(1, xs=(0.5,))
        assert audit.rows[0].value == pytest.approx(G_1_HALF, abs=1e-9)

    def test_rejects_bad_inputs(self):
        with pytest.raises(DomainError):
            audit_small_x(1, xs=())
        with pytest.raises(DomainError):
            audit_small_x(1, xs=(1e-3, 1e-2))
        with pytest.raises(DomainError):
            audit_small_x(1, xs=(1.5, 0.5))
        with pytest.raises(DomainError):
            audit_small_x(0)


class TestLargeNAudit:
    def test_default_rows(self):
        audit = audit_large_n()
        assert len(audit.rows) == 5
        gaps = [abs(r.gap) for r in audit.rows]
        assert all(a > b for a, b in zip(gaps, gaps[1:]))
        # n*g grows, refuting any 1/n decay
        scaled = [r.scaled for r in audit.rows]
        assert all(a < b for a, b in zip(scaled, scaled[1:]))
        assert audit.log_slope > 0.0

    def test_order_one_checkpoint(self):
        audit = audit_large_n(0.5, ns=(1,))
        assert audit.rows[0].value == pytest.approx(G_1_HALF, abs=1e-9)

    def test_rejects_bad_inputs(self):
        with pytest.raises(DomainError):
            audit_large_n(0.5, ns=())
        with pytest.raises(DomainError):
            audit_large_n(0.5, ns=(20, 10))
        with pytest.raises(DomainError):
            audit_large_n(0.5, ns=(0, 10))
        with pytest.raises(DomainError):
            audit_large_n(0.0)


class TestTableAudit:
    def test_emits_exactly_four_rows(self):
        audit = audit_table()
        assert len(audit.rows) == 4

    def test_first_row_residual_reported_not_suppressed(self):
        audit = audit_table()
        row = audit.rows[0]
        assert (row.n, row.x) == (1, 0.5)
        assert row.paper_integral_value == 0.0770
        assert row.computed_value == pytest.approx(G_1_HALF, abs=1e-9)
        assert row.residual_vs_paper == pytest.approx(0.0770 - G_1_HALF, abs=1e-9)

    def test_x_equal_one_row_has_error_estimate(self):
        audit = audit_table()
        row = audit.rows[3]
        assert (row.n, row.x) == (2, 1.0)
        assert row.computed_value == pytest.approx(1.5 - math.log(2.0 * math.pi), abs=1e-9)
        assert row.quad_err >= 0.0

    def test_all_rows_flagged(self):
        audit = audit_table()
        assert len(audit.flagged) == 4
        assert "not reproduced" in audit.summary
        assert audit.max_residual == max(r.residual_vs_paper for r in audit.rows)

    def test_both_published_columns_retained(self):
        audit = audit_table()
        for row in audit.rows:
            assert row.paper_series_value == row.paper_integral_value

    def test_deterministic(self):
        assert audit_table() == audit_table()
