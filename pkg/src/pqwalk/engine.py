"""
Evolution engine: site-dependent coin, then conditional shift.

One step applies the layout's coin to each occupied site's spinor and then
moves the |0> component to x+1 and the |1> component to x-1.  Each step
writes into a fresh zeroed buffer, so sites outside the support stay exact
zeros and no renormalization is ever applied: probability drift is a
measurable diagnostic, not something to correct away.

:func:`dense_step_matrix` builds the same one-step operator as an explicit
matrix on a small window, as an independent oracle for testing the engine.
"""

from __future__ import annotations

from typing import Callable, Optional

import numpy as np
from numpy.typing import NDArray

from .layout import CoinLayout, CoinsLike, coin_matrices
from .state import WalkState

__all__ = ["WalkRun", "dense_step_matrix"]

Recorder = Callable[[WalkState], None]


class WalkRun:
    """
    One walk: a state owned by the engine plus its (fixed) coin layout.

    The per-site coin matrices are precomputed over the whole window at
    construction; stepping is then a slice-restricted coin contraction and
    two shifted copies.  A run is single-owner: step/evolve must not be
    called concurrently on the same instance.
    """

    def __init__(
        self,
        state: WalkState,
        layout: CoinLayout,
        coins: CoinsLike | None = None,
    ) -> None:
        self.state = state
        self.layout = layout
        mats = coin_matrices(coins)
        used = set(layout.pattern)
        if max(used) >= len(mats):
            raise ValueError(
                f"layout references coin slot {max(used)} but only "
                f"{len(mats)} coins were supplied"
            )
        slots = layout.slots(state.positions)
        self._site_coins = np.stack(mats)[slots]  # (window, 2, 2)

    def step(self) -> "WalkRun":
        """Advance one step (coin, then shift).  Raises past the budget."""
        s = self.state
        if s.step >= s.t_max:
            raise RuntimeError(
                f"step budget exhausted: state sized for t_max={s.t_max}"
            )
        t, c = s.step, s.t_max
        lo, hi = c - t, c + t + 1  # occupied slice of the window
        mixed = np.einsum(
            "xij,jx->ix", self._site_coins[lo:hi], s.psi[:, lo:hi]
        )
        out = np.zeros_like(s.psi)
        out[0, lo + 1 : hi + 1] = mixed[0]  # |0> component moves right
        out[1, lo - 1 : hi - 1] = mixed[1]  # |1> component moves left
        s.psi = out
        s.step = t + 1
        return self

    def evolve(self, steps: int, recorder: Optional[Recorder] = None) -> "WalkRun":
        """
        Apply :meth:`step` ``steps`` times.

        ``recorder``, if given, is called after every step with read access
        to the current state (used to collect per-step summaries).
        """
        if steps < 0:
            raise ValueError(f"steps must be >= 0, got {steps}")
        s = self.state
        if s.step + steps > s.t_max:
            raise RuntimeError(
                f"step budget exhausted: {s.step} + {steps} exceeds t_max={s.t_max}"
            )
        for _ in range(steps):
            self.step()
            if recorder is not None:
                recorder(self.state)
        return self


def dense_step_matrix(
    layout: CoinLayout,
    coins: CoinsLike | None = None,
    window_radius: int = 8,
) -> NDArray[np.complex128]:
    """
    The one-step operator as an explicit unitary matrix on a small window.

    Basis ordering is position-major, coin-minor: index 2*(x + R) + c for
    x in [-R, R] and coin c in {0, 1}.  The shift is closed cyclically at
    the window edges, which keeps the matrix exactly unitary; amplitudes
    started at the origin agree with the line engine for t <= R steps,
    before anything could wrap.

    This is a verification oracle for small instances only; ``window_radius``
    is capped at 12.
    """
    if not 1 <= window_radius <= 12:
        raise ValueError(
            f"window_radius must lie in [1, 12] (oracle is for small instances), "
            f"got {window_radius}"
        )
    mats = coin_matrices(coins)
    r = window_radius
    n_sites = 2 * r + 1
    u = np.zeros((2 * n_sites, 2 * n_sites), dtype=np.complex128)
    for x in range(-r, r + 1):
        cx = mats[layout.slot(x)]
        right = x + 1 if x < r else -r
        left = x - 1 if x > -r else r
        for c_in in range(2):
            col = 2 * (x + r) + c_in
            u[2 * (right + r) + 0, col] = cx[0, c_in]
            u[2 * (left + r) + 1, col] = cx[1, c_in]
    return u
