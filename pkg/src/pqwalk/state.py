"""
Walker-plus-coin wavefunction on a bounded lattice window.

The window [-t_max, t_max] is sized to the planned number of steps; a walk
of up to t_max steps provably never reaches the boundary, so the infinite
line is simulated exactly with no truncation or boundary condition.

Amplitudes are stored densely as a (2, 2*t_max + 1) complex array: row 0
holds the right-moving (coin |0>) component at each site, row 1 the
left-moving (coin |1>) component.  Sites outside the current support
[-t, t] stay exactly zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np
from numpy.typing import NDArray

__all__ = [
    "SYMMETRIC",
    "ASYMMETRIC",
    "initial_spinor",
    "WalkState",
    "PositionDistribution",
]

SYMMETRIC = "symmetric"
ASYMMETRIC = "asymmetric"

_INV_SQRT2 = math.sqrt(0.5)

InitialState = Union[str, NDArray[np.complex128]]


def initial_spinor(init: InitialState) -> NDArray[np.complex128]:
    """
    Resolve an initial coin state.

    ``"symmetric"`` gives (|0> + i|1>)/sqrt(2), whose Hadamard walk spreads
    left-right symmetrically; ``"asymmetric"`` gives (|0> + |1>)/sqrt(2),
    which drifts.  Any length-2 complex vector of unit norm (within 1e-12)
    is accepted as a custom state.
    """
    if isinstance(init, str):
        if init == SYMMETRIC:
            return np.array([_INV_SQRT2, 1j * _INV_SQRT2], dtype=np.complex128)
        if init == ASYMMETRIC:
            return np.array([_INV_SQRT2, _INV_SQRT2], dtype=np.complex128)
        raise ValueError(
            f"init must be 'symmetric', 'asymmetric' or a length-2 vector, got {init!r}"
        )
    spinor = np.asarray(init, dtype=np.complex128)
    if spinor.shape != (2,):
        raise ValueError(f"custom spinor must have shape (2,), got {spinor.shape}")
    norm = float(np.sum(np.abs(spinor) ** 2))
    if abs(norm - 1.0) > 1e-12:
        raise ValueError(f"custom spinor must have unit norm, got |a|^2+|b|^2 = {norm}")
    return spinor


@dataclass
class PositionDistribution:
    """p(x, t) over the occupied window x in [-t, t]."""

    positions: NDArray[np.int64]
    probs: NDArray[np.float64]
    step: int

    def prob_at(self, x: int) -> float:
        """Probability at position x (0 outside the window)."""
        t = self.step
        if -t <= x <= t:
            return float(self.probs[x + t])
        return 0.0


class WalkState:
    """
    The walker's full state: spinor amplitudes per site plus a step counter.

    Parameters
    ----------
    t_max : int
        Planned total number of steps; fixes the window [-t_max, t_max].
    init : str or array_like
        Initial coin state at the origin (see :func:`initial_spinor`).
    """

    def __init__(self, t_max: int, init: InitialState = SYMMETRIC) -> None:
        if t_max < 1:
            raise ValueError(f"t_max must be >= 1, got {t_max}")
        self.t_max = int(t_max)
        self.step = 0
        self.psi = np.zeros((2, 2 * self.t_max + 1), dtype=np.complex128)
        self.psi[:, self.t_max] = initial_spinor(init)

    @property
    def positions(self) -> NDArray[np.int64]:
        """All window positions, -t_max .. t_max."""
        return np.arange(-self.t_max, self.t_max + 1, dtype=np.int64)

    def spinor_at(self, x: int) -> NDArray[np.complex128]:
        """Copy of the (right, left) amplitude pair at position x."""
        if abs(x) > self.t_max:
            return np.zeros(2, dtype=np.complex128)
        return self.psi[:, x + self.t_max].copy()

    def total_probability(self) -> float:
        """Sum over all sites of |A_x|^2 + |B_x|^2 (1 up to rounding drift)."""
        return float(np.sum(np.abs(self.psi) ** 2))

    def position_distribution(self) -> PositionDistribution:
        """Site probabilities over the current support window [-t, t]."""
        t, c = self.step, self.t_max
        seg = self.psi[:, c - t : c + t + 1]
        probs = np.sum(np.abs(seg) ** 2, axis=0)
        return PositionDistribution(
            positions=np.arange(-t, t + 1, dtype=np.int64),
            probs=probs,
            step=t,
        )
