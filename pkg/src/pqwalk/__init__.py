"""
pqwalk: exact simulation of discrete-time coined quantum walks on the
integer line with position-periodic coin operators.

The walker carries a two-state coin; each step rotates the coin with a
site-dependent 2x2 unitary chosen by a periodic layout, then shifts the
|0> component right and the |1> component left.  Periodic two-coin
layouts (identity at "plain" sites, Hadamard at "potential" sites) can
pin the walker near the origin or let it escape ballistically, depending
on the layout geometry; the observables module quantifies both behaviors.
"""

from .coins import apply_coin, general_coin, hadamard, identity_coin, is_unitary
from .engine import WalkRun, dense_step_matrix
from .layout import (
    C0,
    CP,
    FAMILIES,
    CaseSpec,
    CoinLayout,
    CoinTable,
    case_layout,
    coin_at,
    coin_matrices,
    default_table,
    layout_from_pattern,
    parse_pattern,
)
from .observables import (
    LocalizationReport,
    SlopeFit,
    SummarySeries,
    default_localization_window,
    default_recurrence_window,
    default_slope_window,
    detect_recurrence,
    fit_sigma_slope,
    hadamard_reference,
    localization_score,
    mean_position,
    origin_probability,
    run_with_snapshot,
    sigma,
    sigma_at_step_vs_period,
    summarize_run,
)
from .state import ASYMMETRIC, SYMMETRIC, PositionDistribution, WalkState, initial_spinor

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # coins
    "hadamard",
    "identity_coin",
    "general_coin",
    "apply_coin",
    "is_unitary",
    # layout
    "C0",
    "CP",
    "FAMILIES",
    "CoinTable",
    "CoinLayout",
    "CaseSpec",
    "case_layout",
    "layout_from_pattern",
    "parse_pattern",
    "coin_at",
    "coin_matrices",
    "default_table",
    # state
    "SYMMETRIC",
    "ASYMMETRIC",
    "initial_spinor",
    "WalkState",
    "PositionDistribution",
    # engine
    "WalkRun",
    "dense_step_matrix",
    # observables
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
