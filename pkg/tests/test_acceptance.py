"""Acceptance criteria for the whole pipeline, one verdict line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see every PASS or
FAIL line. Each criterion pins the tolerances the package promises; the
known-red sampled-recovery cases are documented at the test itself.
"""

from collections import Counter

import numpy as np
import pytest

from lotkalaw import (
    CountingMethod,
    SynthSpec,
    authorship_pattern,
    collab_metrics,
    compute_constant,
    count_productivity,
    critical_value,
    exact_distribution,
    fit_exponent_lsq,
    fit_power_law,
    ks_report,
    ks_statistic_cumulative,
    ks_statistic_pointwise,
    run_ks,
    sample_distribution,
)
from lotkalaw.cli import main

from conftest import DATA_DIR, build_pattern_records, random_corpus


def _verdict(cid: str, ok: bool, detail: str) -> None:
    print(f"{cid}: {'PASS' if ok else 'FAIL'} - {detail}")


def test_c01_exponent_and_regression_sums(cad_distribution):
    """Fitted exponent in [2.53, 2.56]; worksheet sums match to 0.01."""
    fit = fit_exponent_lsq(cad_distribution)
    targets = {
        "sum_x": 39.9858,
        "sum_y": 40.1046,
        "sum_xy": 31.4999,
        "sum_x2": 53.1807,
    }
    sums_ok = all(
        abs(getattr(fit.sums, name) - want) <= 0.01 for name, want in targets.items()
    )
    ok = 2.53 <= fit.n <= 2.56 and sums_ok and fit.sums.point_count == 34
    _verdict("C1", ok, f"n={fit.n:.6f}, sums within 0.01 of worksheet: {sums_ok}")
    assert ok


def test_c02_normalizing_constant():
    """Constant windows at the lookup exponent and at the inverse square."""
    c_lookup = compute_constant(2.54)
    c_square = compute_constant(2.0)
    ok = 0.7534 <= c_lookup <= 0.7544 and 0.60790 <= c_square <= 0.60795
    _verdict("C2", ok, f"c(2.54)={c_lookup:.6f}, c(2.00)={c_square:.6f}")
    assert ok


def test_c03_pointwise_statistic(cad_distribution):
    """Pointwise D in [0.1045, 0.1055], attained at x=2."""
    fit = fit_power_law(cad_distribution)
    report = ks_report(cad_distribution, fit.n, fit.c)
    d = ks_statistic_pointwise(report)
    top = max(report, key=lambda row: row.pointwise_diff)
    ok = 0.1045 <= d <= 0.1055 and top.x == 2
    _verdict("C3", ok, f"d_max_pointwise={d:.6f} at x={top.x}")
    assert ok


def test_c04_cumulative_statistic(cad_distribution):
    """Cumulative D in [0.2127, 0.2137]."""
    fit = fit_power_law(cad_distribution)
    report = ks_report(cad_distribution, fit.n, fit.c)
    d = ks_statistic_cumulative(report)
    ok = 0.2127 <= d <= 0.2137
    _verdict("C4", ok, f"d_max_cumulative={d:.6f}")
    assert ok


def test_c05_critical_value_and_verdicts(cad_distribution):
    """Threshold window and non-conformity under both statistics."""
    crit = critical_value(16006, 2.54)
    fit = fit_power_law(cad_distribution)
    result = run_ks(cad_distribution, fit.n, fit.c, 2.54)
    ok = (
        0.0200 <= crit <= 0.0201
        and not result.conforms_pointwise
        and not result.conforms_cumulative
    )
    _verdict(
        "C5",
        ok,
        f"critical={crit:.6f}, conforms_pointwise={result.conforms_pointwise}, "
        f"conforms_cumulative={result.conforms_cumulative}",
    )
    assert ok


def test_c06_published_worksheet_row_fidelity(cad_distribution, cad_reference):
    """Every row of the bundled reference table within 1e-3 per column."""
    fit = fit_power_law(cad_distribution)
    report = ks_report(cad_distribution, fit.n, fit.c)
    worst = 0.0
    for row, ref in zip(report, cad_reference):
        worst = max(
            worst,
            abs(row.observed_proportion - ref["observed"]),
            abs(row.observed_cumulative - ref["observed_cum"]),
            abs(row.expected_proportion - ref["expected"]),
            abs(row.expected_cumulative - ref["expected_cum"]),
            abs(row.pointwise_diff - ref["diff"]),
        )
    ok = len(report) == 34 == len(cad_reference) and worst <= 1e-3
    _verdict("C6", ok, f"34 rows, worst column error {worst:.2e} (bound 1e-3)")
    assert ok


def test_c07_authorship_pattern(pattern_records):
    """Grand total 1284; single-author share 7.32; collaboration 0.9268."""
    table = authorship_pattern(pattern_records)
    metrics = collab_metrics(pattern_records)
    single_share = table.bucket_percentages[0]
    ok = (
        table.grand_total == 1284
        and abs(single_share - 7.32) <= 0.01
        and abs(metrics.degree_of_collaboration - 0.9268) <= 0.001
    )
    _verdict(
        "C7",
        ok,
        f"grand_total={table.grand_total}, single_share={single_share:.4f}%, "
        f"degree_of_collaboration={metrics.degree_of_collaboration:.6f}",
    )
    assert ok


def test_c08_counting_matches_brute_force():
    """100 random corpora tally identically under a naive reimplementation."""
    rng = np.random.default_rng(20_240_831)
    checked = 0
    for _ in range(100):
        records = random_corpus(rng)
        for method in CountingMethod:
            per_author: Counter[str] = Counter()
            for rec in records:
                names = rec.authors if method is CountingMethod.COMPLETE else rec.authors[:1]
                for name in names:
                    per_author[name] += 1
            expected = tuple(sorted(Counter(per_author.values()).items()))
            got = count_productivity(records, method).points
            assert got == expected, f"{method} mismatch on corpus {checked}"
        straight = count_productivity(records, CountingMethod.STRAIGHT)
        assert straight.total_contributions == len(records)
        checked += 1
    _verdict("C8", True, f"{checked} corpora, both counting methods, exact tally match")


# Sampled-recovery verdicts, one per target exponent. At the pinned
# parameters (author_count 10**4, x_max 100, seeds 0..19) the criterion
# is not attainable for the three steeper targets: equal-weight log-log
# least squares is biased low whenever the sampled table carries a long
# tail of levels observed once, and with 10**4 authors most of the 100
# support levels are such singletons. Measured mean fits are about
# 1.80, 1.88, 2.06 and 2.38 for targets 1.8, 2.0, 2.54, 3.0, so the
# bias, not the sampler, is what these red cases document. Growing the
# corpus (see the exact-recovery test and test_synth) or truncating the
# tail (fit max_x=10 recovers all four targets within 0.022) removes it.
@pytest.mark.parametrize("target", [1.8, 2.0, 2.54, 3.0])
def test_c09_sampled_recovery(target):
    """Mean fitted exponent over 20 seeds within 0.1 of the target."""
    fits = [
        fit_exponent_lsq(sample_distribution(SynthSpec(target, 10_000, 100, seed))).n
        for seed in range(20)
    ]
    mean_fit = float(np.mean(fits))
    ok = abs(mean_fit - target) <= 0.1
    _verdict(
        "C9-sampled",
        ok,
        f"target={target}, mean_fit={mean_fit:.4f} "
        f"(author_count=10^4, x_max=100, seeds 0..19)",
    )
    assert ok


@pytest.mark.parametrize("target", [1.8, 2.0, 2.54, 3.0])
def test_c09_exact_recovery(target):
    """Noiseless tables recover the exponent within 0.02.

    The clause fixes no corpus size; author_count 10**6 makes rounding
    noise negligible across the x_max=100 support, which is the point
    of the noiseless variant.
    """
    dist = exact_distribution(target, 1_000_000, 100)
    n = fit_exponent_lsq(dist).n
    ok = abs(n - target) <= 0.02
    _verdict(
        "C9-exact", ok, f"target={target}, fit={n:.4f} (author_count=10^6, x_max=100)"
    )
    assert ok


def test_c10_deterministic_outputs(capsys, tmp_path):
    """Same flags, same bytes: report runs and synthetic draws repeat."""
    cad_path = str(DATA_DIR / "cad_productivity.csv")
    plot_a, plot_b = tmp_path / "a.csv", tmp_path / "b.csv"
    outs = []
    for plot in (plot_a, plot_b):
        code = main(
            ["report", "--input", cad_path, "--preset", "paper", "--plot-out", str(plot)]
        )
        assert code == 0
        outs.append(capsys.readouterr().out)
    stdout_same = outs[0] == outs[1]
    plot_same = plot_a.read_bytes() == plot_b.read_bytes()
    spec = SynthSpec(2.0, 5, 3, 42)
    draw_same = sample_distribution(spec).points == sample_distribution(spec).points
    pinned = sample_distribution(spec).points == ((1, 3), (2, 2))
    ok = stdout_same and plot_same and draw_same and pinned
    # restore capsys so the verdict is visible
    _verdict(
        "C10",
        ok,
        f"report stdout identical: {stdout_same}, plot file identical: {plot_same}, "
        f"draw repeatable and pinned: {draw_same and pinned}",
    )
    assert ok
