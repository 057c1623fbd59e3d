"""
File emission helpers: UTF-8 CSV with 15-significant-digit decimals and a
plain-text key/value report.  All writers are byte-stable for identical
inputs, so repeated runs of the same configuration diff clean.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Mapping

from .observables import SummarySeries
from .state import PositionDistribution

__all__ = [
    "fmt_value",
    "write_summary_csv",
    "write_snapshot_csv",
    "write_table_csv",
    "write_report",
    "read_table_csv",
]

REPORT_SCHEMA = "pqwalk.report.v1"


def fmt_value(value) -> str:
    """Render one CSV/report field (floats at 15 significant digits)."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.15g}"
    return str(value)


def write_table_csv(path: Path, header: Iterable[str], rows: Iterable[Iterable]) -> Path:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(fmt_value(v) for v in row))
    path = Path(path)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def write_summary_csv(path: Path, series: SummarySeries) -> Path:
    """Per-step series with the stable header ``t,mean_x,sigma,p0``."""
    rows = (
        (int(series.steps[i]), float(series.mean_x[i]), float(series.sigma[i]),
         float(series.p0[i]))
        for i in range(len(series))
    )
    return write_table_csv(path, ("t", "mean_x", "sigma", "p0"), rows)


def write_snapshot_csv(path: Path, dist: PositionDistribution) -> Path:
    """Final p(x, t) with the stable header ``x,p``."""
    rows = (
        (int(dist.positions[i]), float(dist.probs[i]))
        for i in range(len(dist.positions))
    )
    return write_table_csv(path, ("x", "p"), rows)


def write_report(path: Path, items: Mapping[str, object]) -> Path:
    """Versioned, diffable ``key = value`` document."""
    lines = [f"schema = {REPORT_SCHEMA}"]
    for key, value in items.items():
        lines.append(f"{key} = {fmt_value(value)}")
    path = Path(path)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def read_table_csv(path: Path) -> tuple[list[str], list[list[float]]]:
    """Read a CSV written by :func:`write_table_csv` into float columns."""
    text = Path(path).read_text(encoding="utf-8").strip().splitlines()
    header = text[0].split(",")
    columns: list[list[float]] = [[] for _ in header]
    for line in text[1:]:
        for col, field in zip(columns, line.split(",")):
            col.append(float(field))
    return header, columns
