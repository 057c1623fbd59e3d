import math

import numpy as np
import pytest

from pqwalk import (
    C0,
    CP,
    PositionDistribution,
    SummarySeries,
    case_layout,
    detect_recurrence,
    fit_sigma_slope,
    hadamard_reference,
    layout_from_pattern,
    localization_score,
    mean_position,
    origin_probability,
    sigma,
    sigma_at_step_vs_period,
    summarize_run,
)

HAD = layout_from_pattern([CP])
BALLISTIC = layout_from_pattern([C0])


def dist(mapping, step):
    positions = np.arange(-step, step + 1, dtype=np.int64)
    probs = np.array([mapping.get(int(x), 0.0) for x in positions])
    return PositionDistribution(positions=positions, probs=probs, step=step)


def series_from_p0(p0):
    n = len(p0)
    return SummarySeries(
        steps=np.arange(n, dtype=np.int64),
        mean_x=np.zeros(n),
        sigma=np.zeros(n),
        p0=np.asarray(p0, dtype=float),
    )


def test_mean_position_symmetric_and_point_mass():
    assert mean_position(dist({-1: 0.5, 1: 0.5}, 1)) == 0.0
    assert mean_position(dist({5: 1.0}, 5)) == 5.0


def test_sigma_values():
    assert sigma(dist({-2: 0.25, 0: 0.5, 2: 0.25}, 2)) == pytest.approx(math.sqrt(2), abs=1e-15)
    assert sigma(dist({0: 1.0}, 0)) == 0.0


def test_sigma_ballistic_equals_t():
    ser = summarize_run(BALLISTIC, 25)
    assert ser.sigma[25] == pytest.approx(25.0, abs=1e-10)


def test_sigma_bounded_by_support():
    d = dist({-3: 0.25, 1: 0.5, 3: 0.25}, 3)
    assert sigma(d) <= 3.0
    assert sigma(dist({-3: 0.5, 3: 0.5}, 3)) == pytest.approx(3.0, abs=1e-12)


def test_origin_probability_series_values():
    ser = summarize_run(HAD, 3)
    assert ser.p0[0] == pytest.approx(1.0, abs=1e-15)
    assert ser.p0[1] == 0.0  # odd steps are exactly zero
    assert ser.p0[2] == pytest.approx(0.5, abs=1e-14)
    assert ser.p0[3] == 0.0


def test_origin_probability_matches_distribution():
    from pqwalk import WalkRun, WalkState

    s = WalkState(20)
    run = WalkRun(s, case_layout("IB", 4))
    ser = summarize_run(case_layout("IB", 4), 20)
    for t in range(1, 21):
        run.step()
        assert origin_probability(s.position_distribution()) == ser.p0[t]


def test_summarize_run_shape_and_t0_entry():
    ser = summarize_run(HAD, 12)
    assert len(ser) == 13
    assert ser.steps[0] == 0 and ser.steps[-1] == 12
    assert ser.sigma[0] == 0.0 and ser.mean_x[0] == 0.0
    assert ser.p0[0] == pytest.approx(1.0, abs=1e-15)


def test_summarize_run_zero_steps():
    ser = summarize_run(HAD, 0)
    assert len(ser) == 1
    assert ser.sigma[0] == 0.0
    assert ser.p0[0] == pytest.approx(1.0, abs=1e-15)


def test_symmetric_run_mean_position_stays_zero():
    ser = summarize_run(case_layout("IB", 7), 400)
    assert np.max(np.abs(ser.mean_x)) <= 1e-10


def test_fit_recovers_exact_line():
    t = np.arange(101, dtype=np.int64)
    ser = SummarySeries(steps=t, mean_x=np.zeros(101),
                        sigma=0.37 * t + 1.25, p0=np.zeros(101))
    fit = fit_sigma_slope(ser, (10, 90))
    assert fit.slope == pytest.approx(0.37, abs=1e-10)
    assert fit.intercept == pytest.approx(1.25, abs=1e-10)
    assert fit.r_squared == pytest.approx(1.0, abs=1e-12)


def test_fit_constant_series():
    t = np.arange(50, dtype=np.int64)
    ser = SummarySeries(steps=t, mean_x=np.zeros(50),
                        sigma=np.full(50, 2.0), p0=np.zeros(50))
    fit = fit_sigma_slope(ser, (0, 49))
    assert fit.slope == pytest.approx(0.0, abs=1e-12)
    assert fit.r_squared == 1.0


def test_fit_ballistic_slope_one():
    ser = summarize_run(BALLISTIC, 60)
    fit = fit_sigma_slope(ser, (0, 60))
    assert fit.slope == pytest.approx(1.0, abs=1e-10)
    assert fit.r_squared == pytest.approx(1.0, abs=1e-12)


def test_fit_hadamard_tail():
    ser = hadamard_reference(400)
    fit = fit_sigma_slope(ser, (100, 400))
    assert 0.5 < fit.slope < 0.8
    assert fit.r_squared > 0.999


def test_fit_window_guards():
    ser = summarize_run(HAD, 30)
    with pytest.raises(ValueError, match="points"):
        fit_sigma_slope(ser, (10, 15))
    with pytest.raises(ValueError, match="window"):
        fit_sigma_slope(ser, (10, 99))


def test_localization_baseline_against_itself():
    base = hadamard_reference(100)
    rep = localization_score(base, (50, 100), base)
    assert rep.ratio == pytest.approx(1.0, abs=1e-12)
    assert not rep.localized


def test_localization_case_verdicts():
    base = hadamard_reference(400)
    not_loc = localization_score(summarize_run(case_layout("IA", 14), 400),
                                 (200, 400), base)
    loc = localization_score(summarize_run(case_layout("IB", 7), 400),
                             (200, 400), base)
    assert not not_loc.localized
    assert loc.localized
    assert loc.ratio > not_loc.ratio


def test_localization_is_monotone_in_p0():
    base = series_from_p0([1.0] + [0.01] * 100)
    lower = series_from_p0([1.0] + [0.02] * 100)
    higher = series_from_p0([1.0] + [0.03] * 100)
    lo = localization_score(lower, (20, 100), base)
    hi = localization_score(higher, (20, 100), base)
    assert hi.mean_return >= lo.mean_return
    assert hi.ratio >= lo.ratio


def test_localization_window_guard():
    base = hadamard_reference(50)
    with pytest.raises(ValueError, match="window"):
        localization_score(base, (10, 80), base)


def test_detect_recurrence_synthetic():
    decaying = series_from_p0([1.0] + [0.5 / (t + 1) for t in range(100)])
    assert detect_recurrence(decaying, (10, 100), 0.05) == 0
    p0 = np.zeros(101)
    p0[0] = 1.0
    p0[40] = 0.2
    p0[70] = 0.1
    assert detect_recurrence(series_from_p0(p0), (10, 100), 0.05) == 2
    # below-height bumps do not count
    assert detect_recurrence(series_from_p0(p0), (10, 100), 0.5) == 0


def test_detect_recurrence_height_guard():
    ser = series_from_p0(np.zeros(60))
    with pytest.raises(ValueError, match="height"):
        detect_recurrence(ser, (10, 50), 0.0)
    with pytest.raises(ValueError, match="height"):
        detect_recurrence(ser, (10, 50), 1.0)


def test_detect_recurrence_engine_case():
    ser = summarize_run(case_layout("IIA", 14), 400)
    assert detect_recurrence(ser, (50, 400), 0.05) >= 2


def test_sweep_single_param():
    rows = sigma_at_step_vs_period("IA", [2], 50)
    assert len(rows) == 1
    assert rows[0][0] == 2
    assert rows[0][1] > 0


def test_sweep_fails_fast_on_invalid_param():
    with pytest.raises(ValueError, match="even"):
        sigma_at_step_vs_period("IIA", [2, 4, 7], 10)


def test_sweep_ia_stays_near_reference():
    ref = hadamard_reference(400).sigma[400]
    rows = sigma_at_step_vs_period("IA", list(range(2, 15)), 400)
    for _, value in rows:
        assert abs(value - ref) / ref < 0.01


def test_sweep_ib_spread_shrinks_then_plateaus():
    rows = dict(sigma_at_step_vs_period("IB", [2, 3, 4, 7, 14], 400))
    assert rows[4] < rows[3] < rows[2]
    assert rows[14] < 0.8 * rows[2]
    assert abs(rows[14] - rows[7]) < 10.0
