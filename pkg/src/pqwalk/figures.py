"""
The figure-reproduction suite: a fixed experiment matrix of walks whose
spreading curves, sweeps, snapshots and origin-return series are written
as one CSV plus one static SVG plot per figure.

All plots are rendered from the CSV files, never from in-memory arrays, so
anything visible in a plot is verifiable from the data file next to it.
"""

from __future__ import annotations

from pathlib import Path

from .layout import CP, CoinLayout, case_layout, layout_from_pattern
from .observables import run_with_snapshot
from .reporting import read_table_csv, write_table_csv

__all__ = ["reproduce_figures", "REFERENCE_RUNS", "SWEEP_GRIDS", "FIGURE_STEPS"]

FIGURE_STEPS = 400

# label -> (family, param); None denotes the pure potential-coin walk.
REFERENCE_RUNS: list[tuple[str, tuple[str, int] | None]] = [
    ("hadamard", None),
    ("ia_n14", ("IA", 14)),
    ("ib_n14", ("IB", 14)),
    ("iia_n14", ("IIA", 14)),
    ("iib_n14", ("IIB", 14)),
    ("iiia_q19", ("IIIA", 19)),
    ("iiib_q7", ("IIIB", 7)),
]

SWEEP_GRIDS: dict[str, list[int]] = {
    "IA": list(range(2, 15)),
    "IB": list(range(2, 15)),
    "IIA": list(range(2, 15, 2)),
    "IIB": list(range(2, 15, 2)),
    "IIIA": list(range(3, 20, 2)),
    "IIIB": list(range(3, 20, 2)),
}


def _layout_of(spec: tuple[str, int] | None) -> CoinLayout:
    if spec is None:
        return layout_from_pattern([CP])
    return case_layout(*spec)


class _RunCache:
    """One full run per distinct walk, shared across the figures."""

    def __init__(self, steps: int) -> None:
        self.steps = steps
        self._runs: dict[tuple, tuple] = {}

    def get(self, spec: tuple[str, int] | None):
        key = spec if spec is None else tuple(spec)
        if key not in self._runs:
            self._runs[key] = run_with_snapshot(_layout_of(spec), self.steps)
        return self._runs[key]

    def series(self, spec):
        return self.get(spec)[0]

    def snapshot(self, spec):
        return self.get(spec)[1]


def _plot_lines(csv_path: Path, svg_path: Path, xlabel: str, ylabel: str,
                title: str, even_x_only: bool = False) -> None:
    """Render a multi-column CSV (first column = x axis) as an SVG plot."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    plt.rcParams["svg.hashsalt"] = "pqwalk"
    header, cols = read_table_csv(csv_path)
    xs = cols[0]
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for name, ys in zip(header[1:], cols[1:]):
        if even_x_only:
            pairs = [(x, y) for x, y in zip(xs, ys) if int(x) % 2 == 0]
            ax.plot([p[0] for p in pairs], [p[1] for p in pairs], label=name, lw=1.0)
        else:
            ax.plot(xs, ys, label=name, lw=1.0)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    if len(header) > 2:
        ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(svg_path, format="svg", metadata={"Date": None})
    plt.close(fig)


def _emit(out: Path, stem: str, header, rows, xlabel, ylabel, title,
          even_x_only=False) -> list[Path]:
    csv_path = write_table_csv(out / f"{stem}.csv", header, rows)
    svg_path = out / f"{stem}.svg"
    _plot_lines(csv_path, svg_path, xlabel, ylabel, title, even_x_only=even_x_only)
    return [csv_path, svg_path]


def reproduce_figures(out_dir: Path, steps: int = FIGURE_STEPS) -> list[Path]:
    """
    Run the whole experiment matrix and write fig01..fig14 data and plots
    into ``out_dir``.  Returns the paths written, CSVs first per figure.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    cache = _RunCache(steps)
    written: list[Path] = []

    # fig01: spreading sigma(t) of the seven reference walks
    labels = [label for label, _ in REFERENCE_RUNS]
    series = [cache.series(spec) for _, spec in REFERENCE_RUNS]
    rows = (
        [int(t)] + [float(s.sigma[t]) for s in series] for t in range(steps + 1)
    )
    written += _emit(out, "fig01_sigma_series", ["t"] + labels, rows,
                     "t", "sigma", "spread vs step, reference walks")

    # fig02: sigma at t=steps across each family's parameter grid
    def sweep_rows():
        for family, grid in SWEEP_GRIDS.items():
            for p in grid:
                run = run_with_snapshot(case_layout(family, p), steps)
                yield [family, p, float(run[0].sigma[steps])]

    csv_path = write_table_csv(out / "fig02_sigma_vs_period.csv",
                               ["family", "param", "sigma"], sweep_rows())
    written.append(csv_path)
    written.append(_plot_fig02(csv_path, out / "fig02_sigma_vs_period.svg", steps))

    # snapshot + origin-series figure pairs at the caption parameters
    def snapshot_fig(stem, spec, title):
        snap = cache.snapshot(spec)
        rows = zip(snap.positions.tolist(), snap.probs.tolist())
        return _emit(out, stem, ["x", "p"], rows, "x", "p",
                     title, even_x_only=True)

    def p0_fig(stem, specs, names, title):
        sers = [cache.series(spec) for spec in specs]
        rows = ([int(t)] + [float(s.p0[t]) for s in sers] for t in range(steps + 1))
        return _emit(out, stem, ["t"] + names, rows, "t", "p0", title)

    written += snapshot_fig("fig03_snapshot_ia_n14", ("IA", 14),
                            "case IA, N=14: final distribution")
    written += p0_fig("fig04_p0_ia_n14", [("IA", 14)], ["p0"],
                      "case IA, N=14: origin probability")

    ib_snaps = [("IB", n) for n in (3, 7, 10, 14)]
    snaps = [cache.snapshot(spec) for spec in ib_snaps]
    rows = (
        [int(snaps[0].positions[i])] + [float(s.probs[i]) for s in snaps]
        for i in range(len(snaps[0].positions))
    )
    written += _emit(out, "fig05_snapshot_ib", ["x", "n3", "n7", "n10", "n14"],
                     rows, "x", "p", "case IB: final distributions",
                     even_x_only=True)
    written += p0_fig("fig06_p0_ib", [("IB", n) for n in (2, 4, 7, 14)],
                      ["n2", "n4", "n7", "n14"], "case IB: origin probability")

    written += snapshot_fig("fig07_snapshot_iia_n14", ("IIA", 14),
                            "case IIA, N=14: final distribution")
    written += p0_fig("fig08_p0_iia_n14", [("IIA", 14)], ["p0"],
                      "case IIA, N=14: origin probability")
    written += snapshot_fig("fig09_snapshot_iib_n14", ("IIB", 14),
                            "case IIB, N=14: final distribution")
    written += p0_fig("fig10_p0_iib_n14", [("IIB", 14)], ["p0"],
                      "case IIB, N=14: origin probability")
    written += snapshot_fig("fig11_snapshot_iiia_q19", ("IIIA", 19),
                            "case IIIA, q=19: final distribution")
    written += p0_fig("fig12_p0_iiia_q19", [("IIIA", 19)], ["p0"],
                      "case IIIA, q=19: origin probability")
    written += snapshot_fig("fig13_snapshot_iiib_q7", ("IIIB", 7),
                            "case IIIB, q=7: final distribution")
    written += p0_fig("fig14_p0_iiib_q7", [("IIIB", 7)], ["p0"],
                      "case IIIB, q=7: origin probability")

    return written


def _plot_fig02(csv_path: Path, svg_path: Path, steps: int) -> Path:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    plt.rcParams["svg.hashsalt"] = "pqwalk"
    text = csv_path.read_text(encoding="utf-8").strip().splitlines()
    by_family: dict[str, tuple[list[int], list[float]]] = {}
    for line in text[1:]:
        family, param, sig = line.split(",")
        xs, ys = by_family.setdefault(family, ([], []))
        xs.append(int(param))
        ys.append(float(sig))
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for family, (xs, ys) in by_family.items():
        ax.plot(xs, ys, marker="o", ms=3, lw=1.0, label=family)
    ax.set_xlabel("period N (families I/II) or block length q (family III)")
    ax.set_ylabel(f"sigma(t={steps})")
    ax.set_title("spread at fixed step vs layout size")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(svg_path, format="svg", metadata={"Date": None})
    plt.close(fig)
    return svg_path
