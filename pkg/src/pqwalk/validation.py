"""
Runtime invariant suite backing the ``validate`` CLI subcommand.

Each check returns (name, ok, detail); the suite covers coin unitarity,
layout periodicity/duality/centering, probability conservation, parity
zeros, reflection symmetry, the ballistic bound, and engine-vs-dense-matrix
equivalence on small instances.
"""

from __future__ import annotations

import numpy as np

from .coins import general_coin, hadamard, identity_coin, is_unitary
from .engine import WalkRun, dense_step_matrix
from .layout import CP, case_layout, coin_at, default_table, layout_from_pattern
from .state import WalkState

__all__ = ["run_all_checks"]

_REFS = [
    ("hadamard", None),
    ("IA N=14", ("IA", 14)),
    ("IB N=14", ("IB", 14)),
    ("IIA N=14", ("IIA", 14)),
    ("IIB N=14", ("IIB", 14)),
    ("IIIA q=19", ("IIIA", 19)),
    ("IIIB q=7", ("IIIB", 7)),
]

_SMALL = [("IA", 3), ("IB", 3), ("IIA", 4), ("IIB", 4), ("IIIA", 3), ("IIIB", 3)]


def _layout(spec):
    return layout_from_pattern([CP]) if spec is None else case_layout(*spec)


def _check_coin_unitarity():
    rng = np.random.default_rng(20240)
    worst = 0.0
    for _ in range(200):
        rho = float(rng.uniform(0, 1))
        theta = float(rng.uniform(0, np.pi))
        phi = float(rng.uniform(0, np.pi))
        c = general_coin(rho, theta, phi)
        worst = max(worst, float(np.max(np.abs(c.conj().T @ c - np.eye(2)))))
    ok = worst <= 1e-12 and is_unitary(hadamard()) and is_unitary(identity_coin())
    return ok, f"max |C^H C - I| over 200 random coins = {worst:.2e}"


def _check_named_coin_identities():
    dh = float(np.max(np.abs(general_coin(0.5, 0.0, 0.0) - hadamard())))
    di = float(np.max(np.abs(general_coin(1.0, np.pi / 2, np.pi / 2) - identity_coin())))
    return dh <= 1e-15 and di <= 1e-15, f"|G(1/2,0,0)-H|={dh:.1e}, |G(1,pi/2,pi/2)-I|={di:.1e}"


def _check_layout_periodicity():
    for _, spec in _REFS[1:]:
        lay = case_layout(*spec)
        for x in range(-1000, 1001):
            if lay.slot(x) != lay.slot(x + lay.period):
                return False, f"{spec}: slot({x}) != slot(x+N)"
    return True, "slot(x) == slot(x + N) for all x in [-1000, 1000]"


def _check_layout_duality():
    table = default_table()
    swapped = table.swapped()
    duals = [("IA", "IB", 5), ("IIA", "IIB", 14), ("IIIA", "IIIB", 7)]
    for fam_a, fam_b, p in duals:
        la, lb = case_layout(fam_a, p), case_layout(fam_b, p)
        for x in range(-50, 51):
            if not np.array_equal(coin_at(la, swapped, x), coin_at(lb, table, x)):
                return False, f"{fam_a}/{fam_b} duality broken at x={x}"
    return True, "coin-table swap maps each family onto its dual, site for site"


def _check_layout_centering():
    for fam in ("IIIA", "IIIB"):
        for q in (3, 7, 19):
            lay = case_layout(fam, q)
            for x in range(0, 80):
                if lay.slot(x) != lay.slot(-x):
                    return False, f"{fam} q={q}: slot({x}) != slot({-x})"
    return True, "family-III layouts are reflection symmetric about the origin"


def _check_conservation_parity_symmetry():
    details = []
    ok = True
    for name, spec in _REFS:
        run = WalkRun(WalkState(400), _layout(spec))
        run.evolve(400)
        dist = run.state.position_distribution()
        drift = abs(run.state.total_probability() - 1.0)
        asym = float(np.max(np.abs(dist.probs - dist.probs[::-1])))
        odd = float(np.max(np.abs(dist.probs[1::2])))
        if drift > 1e-10 or asym > 1e-12 or odd != 0.0:
            ok = False
            details.append(f"{name}: drift={drift:.1e} asym={asym:.1e} odd={odd:.1e}")
    if ok:
        details.append("drift<=1e-10, p(x)=p(-x)<=1e-12, exact odd-site zeros at t=400")
    return ok, "; ".join(details)


def _check_ballistic_bound():
    for name, spec in _REFS:
        run = WalkRun(WalkState(100), _layout(spec))
        for _ in range(100):
            run.step()
            d = run.state.position_distribution()
            x = d.positions.astype(float)
            s = float(np.sqrt(np.dot(x * x, d.probs)))
            if s > run.state.step + 1e-9:
                return False, f"{name}: sigma({run.state.step}) = {s} > t"
    return True, "sigma(t) <= t for all reference walks up to t=100"


def _check_oracle_equivalence():
    radius = 10
    worst = 0.0
    for fam, p in _SMALL:
        lay = case_layout(fam, p)
        mat = dense_step_matrix(lay, window_radius=radius)
        vec = np.zeros(2 * (2 * radius + 1), dtype=np.complex128)
        vec[2 * radius] = np.sqrt(0.5)
        vec[2 * radius + 1] = 1j * np.sqrt(0.5)
        run = WalkRun(WalkState(8), lay)
        for t in range(1, 9):
            vec = mat @ vec
            run.step()
            for x in range(-t, t + 1):
                sp = run.state.spinor_at(x)
                col = 2 * (x + radius)
                worst = max(worst, abs(vec[col] - sp[0]), abs(vec[col + 1] - sp[1]))
    return worst <= 1e-12, f"max engine-vs-matrix amplitude diff (t<=8) = {worst:.2e}"


def run_all_checks() -> list[tuple[str, bool, str]]:
    """Run every invariant check; returns (name, ok, detail) triples."""
    checks = [
        ("coin unitarity", _check_coin_unitarity),
        ("named coin identities", _check_named_coin_identities),
        ("layout periodicity", _check_layout_periodicity),
        ("layout duality", _check_layout_duality),
        ("layout centering", _check_layout_centering),
        ("conservation/parity/symmetry", _check_conservation_parity_symmetry),
        ("ballistic bound", _check_ballistic_bound),
        ("dense-oracle equivalence", _check_oracle_equivalence),
    ]
    return [(name, *fn()) for name, fn in checks]
