import pytest

from seqalign import count_comparisons
from seqalign.bench import fit_loglog_slope, format_table, measure_growth


def test_rows_match_closed_form_counters():
    report = measure_growth([16, 24, 40], [4, 6], seed=5)
    assert len(report.rows) == 6
    for row in report.rows:
        predicted = count_comparisons(row.m, row.n)
        assert row.substring_comparisons == predicted.substring_comparisons
        assert row.claimed_comparisons == predicted.claimed_comparisons
    # mixed grid: no axis is held fixed, so no slopes
    assert report.slope_vs_m is None and report.slope_vs_n is None


def test_slope_fit_recovers_exact_powers():
    xs = [2, 4, 8, 16]
    assert fit_loglog_slope(xs, [x * x for x in xs]) == pytest.approx(2.0)
    assert fit_loglog_slope(xs, [7 * x for x in xs]) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        fit_loglog_slope([2], [4])


def test_growth_report_slopes_and_table():
    report = measure_growth([32, 64, 128, 256], [8], seed=2)
    assert report.slope_vs_m == pytest.approx(1.0, abs=0.1)
    table = format_table(report)
    assert "slope vs m" in table
    assert str(report.rows[0].substring_comparisons) in table


def test_measure_growth_validation():
    with pytest.raises(ValueError):
        measure_growth([], [4])
    with pytest.raises(ValueError):
        measure_growth([8], [16])  # fragment longer than reference
    with pytest.raises(ValueError):
        measure_growth([8], [4], repeats=0)
    with pytest.raises(ValueError):
        measure_growth([0], [1])
