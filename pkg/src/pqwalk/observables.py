"""
Diagnostics over walk runs: position moments, origin return probability,
per-step summary series, and the derived localization / recurrence /
spreading-slope detectors.

The spread measure is sigma(t) = sqrt(<x^2>), the square root of the raw
second moment (not the variance about the mean); the two coincide for the
symmetric walks this package targets.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .engine import WalkRun
from .layout import CP, CaseSpec, CoinLayout, CoinsLike, case_layout, layout_from_pattern
from .state import SYMMETRIC, InitialState, PositionDistribution, WalkState

__all__ = [
    "SummarySeries",
    "SlopeFit",
    "LocalizationReport",
    "mean_position",
    "sigma",
    "origin_probability",
    "run_with_snapshot",
    "summarize_run",
    "hadamard_reference",
    "fit_sigma_slope",
    "localization_score",
    "detect_recurrence",
    "sigma_at_step_vs_period",
    "default_localization_window",
    "default_slope_window",
    "default_recurrence_window",
]


def mean_position(dist: PositionDistribution) -> float:
    """<x> of a normalized position distribution."""
    return float(np.dot(dist.positions, dist.probs))


def sigma(dist: PositionDistribution) -> float:
    """sqrt(<x^2>): the raw-second-moment spread of the distribution."""
    return float(np.sqrt(np.dot(dist.positions.astype(np.float64) ** 2, dist.probs)))


def origin_probability(dist: PositionDistribution) -> float:
    """p(0, t); zero when the origin lies outside the window."""
    return dist.prob_at(0)


@dataclass
class SummarySeries:
    """Per-step scalar diagnostics of one run, including the t=0 entry."""

    steps: NDArray[np.int64]
    mean_x: NDArray[np.float64]
    sigma: NDArray[np.float64]
    p0: NDArray[np.float64]

    def __len__(self) -> int:
        return len(self.steps)


@dataclass
class SlopeFit:
    """Least-squares line through sigma(t) over a step window."""

    slope: float
    intercept: float
    r_squared: float
    window: tuple[int, int]


@dataclass
class LocalizationReport:
    """
    Late-time origin-return comparison against the all-Hadamard reference.

    ``mean_return`` averages p0 over the even steps of the window (odd
    steps are identically zero and would only dilute the average);
    ``ratio`` = mean_return / baseline, and the walk counts as localized
    when the ratio clears ``threshold``.
    """

    window: tuple[int, int]
    mean_return: float
    baseline: float
    ratio: float
    localized: bool
    threshold: float


def _resolve_layout(layout) -> CoinLayout:
    if isinstance(layout, CoinLayout):
        return layout
    if isinstance(layout, CaseSpec):
        return case_layout(layout.family, layout.param)
    raise TypeError(f"expected CoinLayout or CaseSpec, got {type(layout).__name__}")


def run_with_snapshot(
    layout: CoinLayout | CaseSpec,
    steps: int,
    init: InitialState = SYMMETRIC,
    coins: CoinsLike | None = None,
) -> tuple[SummarySeries, PositionDistribution]:
    """
    Run a walk for ``steps`` steps; return the per-step summary series and
    the final position distribution from the same single run.

    The series has length steps + 1; entry 0 is the initial state
    (sigma = 0, p0 = 1).
    """
    if steps < 0:
        raise ValueError(f"steps must be >= 0, got {steps}")
    lay = _resolve_layout(layout)
    run = WalkRun(WalkState(max(steps, 1), init), lay, coins)

    mean_x = np.empty(steps + 1)
    sig = np.empty(steps + 1)
    p0 = np.empty(steps + 1)

    def record(state: WalkState) -> None:
        d = state.position_distribution()
        mean_x[state.step] = mean_position(d)
        sig[state.step] = sigma(d)
        p0[state.step] = origin_probability(d)

    record(run.state)
    run.evolve(steps, recorder=record)
    series = SummarySeries(
        steps=np.arange(steps + 1, dtype=np.int64),
        mean_x=mean_x,
        sigma=sig,
        p0=p0,
    )
    return series, run.state.position_distribution()


def summarize_run(
    layout: CoinLayout | CaseSpec,
    steps: int,
    init: InitialState = SYMMETRIC,
    coins: CoinsLike | None = None,
) -> SummarySeries:
    """Per-step <x>, sigma and p0 of one run (see :func:`run_with_snapshot`)."""
    return run_with_snapshot(layout, steps, init=init, coins=coins)[0]


def hadamard_reference(
    steps: int, init: InitialState = SYMMETRIC, coins: CoinsLike | None = None
) -> SummarySeries:
    """The pure potential-coin walk (period-1 layout): the baseline run."""
    return summarize_run(layout_from_pattern([CP]), steps, init=init, coins=coins)


def default_slope_window(steps: int) -> tuple[int, int]:
    """Tail window [T/4, T]: the spreading-slope fit excludes the transient."""
    return (steps // 4, steps)


def default_localization_window(steps: int) -> tuple[int, int]:
    """Late-time window [T/2, T] used for the localization decision."""
    return (steps // 2, steps)


def default_recurrence_window(steps: int) -> tuple[int, int]:
    """Window [T/8, T] for counting recurrence peaks past the initial decay."""
    return (steps // 8, steps)


def _window_mask(
    series: SummarySeries, window: tuple[int, int]
) -> NDArray[np.bool_]:
    lo, hi = window
    if lo >= hi:
        raise ValueError(f"window must satisfy lo < hi, got {window}")
    if lo < int(series.steps[0]) or hi > int(series.steps[-1]):
        raise ValueError(
            f"window {window} outside series steps "
            f"[{series.steps[0]}, {series.steps[-1]}]"
        )
    return (series.steps >= lo) & (series.steps <= hi)


def fit_sigma_slope(series: SummarySeries, window: tuple[int, int]) -> SlopeFit:
    """
    Ordinary least squares of sigma(t) against t over ``window``.

    Requires at least 10 points in the window.  r_squared is 1 for an
    exactly constant series (the fit is then perfect by definition).
    """
    mask = _window_mask(series, window)
    t = series.steps[mask].astype(np.float64)
    y = series.sigma[mask]
    if len(t) < 10:
        raise ValueError(f"slope window {window} holds {len(t)} points, need >= 10")
    slope, intercept = np.polyfit(t, y, 1)
    resid = y - (slope * t + intercept)
    ss_res = float(np.dot(resid, resid))
    centered = y - y.mean()
    ss_tot = float(np.dot(centered, centered))
    r2 = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return SlopeFit(
        slope=float(slope),
        intercept=float(intercept),
        r_squared=min(max(r2, 0.0), 1.0),
        window=(int(window[0]), int(window[1])),
    )


def _even_step_mean_p0(series: SummarySeries, window: tuple[int, int]) -> float:
    mask = _window_mask(series, window) & (series.steps % 2 == 0)
    return float(series.p0[mask].mean())


def localization_score(
    series: SummarySeries,
    window: tuple[int, int],
    baseline: SummarySeries,
    threshold: float = 10.0,
) -> LocalizationReport:
    """
    Compare late-time origin returns against the all-Hadamard baseline.

    The baseline's p0 decays like 1/t, so a walk whose even-step mean p0
    sits a full decade above it is unambiguously pinned near the origin;
    the threshold is recorded in the report for auditability.
    """
    mean_return = _even_step_mean_p0(series, window)
    base = _even_step_mean_p0(baseline, window)
    if base > 0.0:
        ratio = mean_return / base
    else:
        ratio = float("inf") if mean_return > 0.0 else 0.0
    return LocalizationReport(
        window=(int(window[0]), int(window[1])),
        mean_return=mean_return,
        baseline=base,
        ratio=ratio,
        localized=bool(ratio >= threshold),
        threshold=float(threshold),
    )


def detect_recurrence(
    series: SummarySeries, window: tuple[int, int], height: float = 0.05
) -> int:
    """
    Count recurrence peaks of p0 inside ``window``.

    A peak is an even step whose p0 is at least ``height`` and strictly
    exceeds both even-step neighbors (odd steps carry exactly zero and are
    skipped).  Steps lacking a neighbor inside the series do not qualify.
    """
    if not 0.0 < height < 1.0:
        raise ValueError(f"height must lie in (0, 1), got {height}")
    lo, hi = window
    _window_mask(series, window)  # validates the window
    first = int(series.steps[0])
    count = 0
    start = lo if lo % 2 == 0 else lo + 1
    for t in range(start, hi + 1, 2):
        if t - 2 < first or t + 2 > int(series.steps[-1]):
            continue
        p = series.p0[t - first]
        if p >= height and p > series.p0[t - 2 - first] and p > series.p0[t + 2 - first]:
            count += 1
    return count


def sigma_at_step_vs_period(
    family: str,
    params: list[int],
    t_probe: int,
    init: InitialState = SYMMETRIC,
    coins: CoinsLike | None = None,
) -> list[tuple[int, float]]:
    """
    sigma(t_probe) for one case family across a list of size parameters.

    The whole parameter list is validated before any run starts (fail
    fast); rows come back in parameter order.
    """
    layouts = [case_layout(family, p) for p in params]  # validates all first
    rows = []
    for p, lay in zip(params, layouts):
        run = WalkRun(WalkState(max(t_probe, 1), init), lay, coins)
        run.evolve(t_probe)
        rows.append((p, sigma(run.state.position_distribution())))
    return rows
