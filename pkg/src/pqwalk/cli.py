"""
Command-line front end.

Subcommands
-----------
run                simulate one walk; writes summary.csv, snapshot.csv, report.txt
sweep              sigma / localization across a parameter range; writes sweep.csv
reproduce-figures  run the full experiment matrix; one CSV + one SVG per figure
validate           run the built-in invariant suite

The model is fully deterministic: identical invocations produce byte
identical CSV files.  Exit codes: 0 success, 2 usage or configuration
error, 1 runtime/I-O error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .coins import general_coin, hadamard, identity_coin
from .layout import (
    FAMILIES,
    CaseSpec,
    CoinLayout,
    CoinTable,
    case_layout,
    parse_pattern,
)
from .observables import (
    default_localization_window,
    default_recurrence_window,
    default_slope_window,
    detect_recurrence,
    fit_sigma_slope,
    hadamard_reference,
    localization_score,
    run_with_snapshot,
)
from .reporting import write_report, write_snapshot_csv, write_summary_csv, write_table_csv
from .state import SYMMETRIC, InitialState, initial_spinor
from .validation import run_all_checks

__all__ = ["main", "RunConfig", "OutputBundle", "run_case", "run_sweep"]

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_USAGE = 2


@dataclass
class RunConfig:
    """One walk's full configuration (no randomness anywhere, by design)."""

    case: CaseSpec | None = None
    pattern: str | None = None
    steps: int = 400
    init: InitialState = SYMMETRIC
    coin_c0: tuple[float, float, float] | None = None
    coin_cp: tuple[float, float, float] | None = None
    output_dir: Path = field(default_factory=lambda: Path("pqwalk_out"))
    localization_window: tuple[int, int] | None = None
    localization_ratio: float = 10.0
    peak_height: float = 0.05

    def table(self) -> CoinTable:
        c0 = identity_coin() if self.coin_c0 is None else general_coin(*self.coin_c0)
        cp = hadamard() if self.coin_cp is None else general_coin(*self.coin_cp)
        return CoinTable(c0=c0, cp=cp)

    def layout_and_coins(self) -> tuple[CoinLayout, tuple]:
        if (self.case is None) == (self.pattern is None):
            raise ValueError("exactly one of case and pattern must be given")
        table = self.table()
        if self.pattern is not None:
            return parse_pattern(self.pattern, table)
        return case_layout(self.case.family, self.case.param), table.matrices


@dataclass
class OutputBundle:
    summary_csv: Path
    snapshot_csv: Path
    report_path: Path


def _describe_coin(params: tuple[float, float, float] | None, default: str) -> str:
    if params is None:
        return default
    return "general({:.15g},{:.15g},{:.15g})".format(*params)


def _describe_init(init: InitialState) -> str:
    if isinstance(init, str):
        return init
    return "custom:" + ",".join(
        f"{v:.15g}" for a in np.asarray(init) for v in (a.real, a.imag)
    )


def run_case(config: RunConfig) -> OutputBundle:
    """Execute one walk and write its summary, snapshot and report."""
    layout, coins = config.layout_and_coins()
    steps = config.steps
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    series, snapshot = run_with_snapshot(layout, steps, init=config.init, coins=coins)

    out = Path(config.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    bundle = OutputBundle(
        summary_csv=write_summary_csv(out / "summary.csv", series),
        snapshot_csv=write_snapshot_csv(out / "snapshot.csv", snapshot),
        report_path=out / "report.txt",
    )

    report: dict[str, object] = {"command": "run"}
    if config.case is not None:
        report["case"] = config.case.family
        key = "q" if config.case.family.startswith("III") else "period"
        report[key] = config.case.param
    else:
        report["pattern"] = config.pattern
    report["steps"] = steps
    report["init"] = _describe_init(config.init)
    report["coin_c0"] = _describe_coin(config.coin_c0, "identity")
    report["coin_cp"] = _describe_coin(config.coin_cp, "hadamard")
    report["total_probability"] = float(np.sum(snapshot.probs))
    report["mean_x_final"] = float(series.mean_x[steps])
    report["sigma_final"] = float(series.sigma[steps])
    report["p0_final"] = float(series.p0[steps])

    try:
        fit = fit_sigma_slope(series, default_slope_window(steps))
        report["slope"] = fit.slope
        report["slope_intercept"] = fit.intercept
        report["slope_r_squared"] = fit.r_squared
        report["slope_window"] = f"{fit.window[0]}:{fit.window[1]}"
    except ValueError:
        pass  # run too short for the tail fit

    window = config.localization_window or default_localization_window(steps)
    try:
        baseline = hadamard_reference(steps, init=config.init)
        loc = localization_score(series, window, baseline,
                                 threshold=config.localization_ratio)
        report["localized"] = loc.localized
        report["localization_ratio"] = loc.ratio
        report["localization_mean_return"] = loc.mean_return
        report["localization_baseline"] = loc.baseline
        report["localization_window"] = f"{loc.window[0]}:{loc.window[1]}"
        report["localization_threshold"] = loc.threshold
        rec_window = default_recurrence_window(steps)
        report["recurrence_peaks"] = detect_recurrence(series, rec_window,
                                                       config.peak_height)
        report["recurrence_height"] = config.peak_height
        report["recurrence_window"] = f"{rec_window[0]}:{rec_window[1]}"
    except ValueError:
        pass  # window does not fit in a very short run

    write_report(bundle.report_path, report)
    return bundle


def run_sweep(
    family: str,
    params: list[int],
    steps: int,
    out_path: Path,
    window: tuple[int, int] | None = None,
    threshold: float = 10.0,
) -> Path:
    """sigma and localization verdicts across a family's parameter list."""
    for p in params:
        CaseSpec(family, p)  # fail fast before any run starts
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    window = window or default_localization_window(steps)
    baseline = hadamard_reference(steps)
    rows = []
    for p in params:
        series, _ = run_with_snapshot(case_layout(family, p), steps)
        loc = localization_score(series, window, baseline, threshold=threshold)
        rows.append([p, float(series.sigma[steps]), loc.mean_return, loc.ratio,
                     loc.localized])
    return write_table_csv(out_path, ("param", "sigma", "mean_p0", "ratio", "localized"),
                           rows)


# ---------------------------------------------------------------------------
# argument parsing


def _parse_init(text: str) -> InitialState:
    if text in ("symmetric", "asymmetric"):
        return text
    if text.startswith("custom:"):
        fields = text[len("custom:"):].split(",")
        if len(fields) != 4:
            raise ValueError(
                "custom init needs four fields a_re,a_im,b_re,b_im, got "
                f"{text!r}"
            )
        a_re, a_im, b_re, b_im = (float(f) for f in fields)
        spinor = np.array([a_re + 1j * a_im, b_re + 1j * b_im])
        initial_spinor(spinor)  # norm check
        return spinor
    raise ValueError(f"init must be symmetric, asymmetric or custom:..., got {text!r}")


def _parse_coin_params(text: str) -> tuple[float, float, float]:
    fields = text.split(",")
    if len(fields) != 3:
        raise ValueError(f"coin parameters need rho,theta,phi, got {text!r}")
    return tuple(float(f) for f in fields)  # type: ignore[return-value]


def _parse_window(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise ValueError(f"window must look like LO:HI, got {text!r}")
    return int(lo), int(hi)


def _parse_param_range(text: str) -> list[int]:
    """Accepts '7', '3,7,10', '2..14', '2..14(even)' or '3..19(odd)'."""
    text = text.strip()
    parity = None
    for tag in ("(even)", "(odd)"):
        if text.endswith(tag):
            parity = tag[1:-1]
            text = text[: -len(tag)]
    if ".." in text:
        lo_s, _, hi_s = text.partition("..")
        lo, hi = int(lo_s), int(hi_s)
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        values = list(range(lo, hi + 1))
    else:
        values = [int(f) for f in text.split(",")]
    if parity == "even":
        values = [v for v in values if v % 2 == 0]
    elif parity == "odd":
        values = [v for v in values if v % 2 == 1]
    if not values:
        raise ValueError(f"parameter range {text!r} selects nothing")
    return values


def _add_run_parser(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("run", help="simulate one walk and write its outputs")
    p.add_argument("--case", choices=FAMILIES, help="built-in case family")
    p.add_argument("--period", type=int, help="period N (families I/II)")
    p.add_argument("--q", type=int, help="block length q (family III)")
    p.add_argument("--pattern", help="explicit pattern, e.g. H1I13 or G(0.5,0,0)3I4")
    p.add_argument("--steps", type=int, default=400)
    p.add_argument("--init", default="symmetric",
                   help="symmetric | asymmetric | custom:a_re,a_im,b_re,b_im")
    p.add_argument("--coin-c0", metavar="RHO,THETA,PHI",
                   help="replace the identity coin at plain sites")
    p.add_argument("--coin-cp", metavar="RHO,THETA,PHI",
                   help="replace the Hadamard coin at potential sites")
    p.add_argument("--out", default="pqwalk_out", help="output directory")
    p.add_argument("--window", metavar="LO:HI",
                   help="localization decision window (default steps/2:steps)")
    p.add_argument("--loc-ratio", type=float, default=10.0,
                   help="localization threshold over the reference walk")
    p.add_argument("--peak-height", type=float, default=0.05,
                   help="minimum origin probability that counts as a peak")
    p.set_defaults(func=_cmd_run)


def _case_from_args(args: argparse.Namespace) -> CaseSpec | None:
    if args.case is None:
        if args.period is not None or args.q is not None:
            raise ValueError("--period/--q need --case (use --pattern otherwise)")
        return None
    is_iii = args.case.startswith("III")
    if is_iii:
        if args.q is None or args.period is not None:
            raise ValueError(f"family {args.case} takes --q, not --period")
        return CaseSpec(args.case, args.q)
    if args.period is None or args.q is not None:
        raise ValueError(f"family {args.case} takes --period, not --q")
    return CaseSpec(args.case, args.period)


def _cmd_run(args: argparse.Namespace) -> int:
    config = RunConfig(
        case=_case_from_args(args),
        pattern=args.pattern,
        steps=args.steps,
        init=_parse_init(args.init),
        coin_c0=_parse_coin_params(args.coin_c0) if args.coin_c0 else None,
        coin_cp=_parse_coin_params(args.coin_cp) if args.coin_cp else None,
        output_dir=Path(args.out),
        localization_window=_parse_window(args.window) if args.window else None,
        localization_ratio=args.loc_ratio,
        peak_height=args.peak_height,
    )
    bundle = run_case(config)
    for path in (bundle.summary_csv, bundle.snapshot_csv, bundle.report_path):
        print(path)
    return EXIT_OK


def _add_sweep_parser(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("sweep", help="sigma/localization across a parameter range")
    p.add_argument("--case", choices=FAMILIES, required=True)
    p.add_argument("--period", help="range for families I/II, e.g. 2..14(even)")
    p.add_argument("--q", help="range for family III, e.g. 3..19(odd)")
    p.add_argument("--steps", type=int, default=400)
    p.add_argument("--out", default="pqwalk_out", help="output directory")
    p.add_argument("--window", metavar="LO:HI")
    p.add_argument("--loc-ratio", type=float, default=10.0)
    p.set_defaults(func=_cmd_sweep)


def _cmd_sweep(args: argparse.Namespace) -> int:
    is_iii = args.case.startswith("III")
    raw = args.q if is_iii else args.period
    wrong = args.period if is_iii else args.q
    flag = "--q" if is_iii else "--period"
    if raw is None or wrong is not None:
        raise ValueError(f"family {args.case} takes {flag}")
    params = _parse_param_range(raw)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    path = run_sweep(
        args.case,
        params,
        args.steps,
        out / "sweep.csv",
        window=_parse_window(args.window) if args.window else None,
        threshold=args.loc_ratio,
    )
    print(path)
    return EXIT_OK


def _cmd_figures(args: argparse.Namespace) -> int:
    from .figures import reproduce_figures

    for path in reproduce_figures(Path(args.out)):
        print(path)
    return EXIT_OK


def _cmd_validate(args: argparse.Namespace) -> int:
    failures = 0
    for name, ok, detail in run_all_checks():
        status = "ok" if ok else "FAIL"
        print(f"{status:4s} {name}: {detail}")
        failures += 0 if ok else 1
    return EXIT_OK if failures == 0 else EXIT_RUNTIME


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pqwalk",
        description="coined quantum walks on the line with periodic two-coin layouts",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    _add_run_parser(sub)
    _add_sweep_parser(sub)
    p = sub.add_parser("reproduce-figures",
                       help="run the full experiment matrix (CSV + SVG per figure)")
    p.add_argument("--out", default="figures", help="output directory")
    p.set_defaults(func=_cmd_figures)
    p = sub.add_parser("validate", help="run the built-in invariant suite")
    p.set_defaults(func=_cmd_validate)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
