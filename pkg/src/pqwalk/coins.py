"""
2x2 unitary coin operators for quantum walks on the line.

Every coin is a NumPy array of shape (2, 2) with dtype complex128, in the
coin basis (|0>, |1>): under the conditional shift, the |0> amplitude of a
site moves one step right and the |1> amplitude one step left.

Available coins
---------------
- hadamard(): the unbiased coin (1/sqrt(2)) * [[1, 1], [1, -1]]
- identity_coin(): leaves the coin state untouched
- general_coin(rho, theta, phi): the full two-angle unitary family
"""

import math

import numpy as np
from numpy.typing import NDArray

__all__ = [
    "hadamard",
    "identity_coin",
    "general_coin",
    "apply_coin",
    "is_unitary",
]

_INV_SQRT2 = math.sqrt(0.5)


def hadamard() -> NDArray[np.complex128]:
    """
    Return the 2x2 Hadamard coin (1/sqrt(2)) * [[1, 1], [1, -1]].

    Entries are built from the exact double ``sqrt(0.5)`` rather than going
    through :func:`general_coin`, so long runs accrue no parameterization
    rounding on top of the single constant.
    """
    return np.array(
        [[_INV_SQRT2, _INV_SQRT2], [_INV_SQRT2, -_INV_SQRT2]],
        dtype=np.complex128,
    )


def identity_coin() -> NDArray[np.complex128]:
    """Return the exact 2x2 identity coin."""
    return np.eye(2, dtype=np.complex128)


def general_coin(rho: float, theta: float, phi: float) -> NDArray[np.complex128]:
    """
    Return the general two-angle 2x2 unitary coin

        [[ sqrt(rho),              sqrt(1-rho)*e^{i*theta}    ],
         [ sqrt(1-rho)*e^{i*phi}, -sqrt(rho)*e^{i*(theta+phi)} ]].

    The family covers both named coins: (rho=1/2, theta=phi=0) is the
    Hadamard coin and (rho=1, theta+phi=pi) is the identity.

    Parameters
    ----------
    rho : float
        Mixing weight, in [0, 1].
    theta : float
        Upper-right phase angle, in [0, pi].
    phi : float
        Lower-left phase angle, in [0, pi].

    Returns
    -------
    NDArray[np.complex128]
        A unitary (2, 2) matrix.

    Raises
    ------
    ValueError
        If a parameter lies outside its range; the message names the
        offending parameter.
    """
    if not 0.0 <= rho <= 1.0:
        raise ValueError(f"rho must lie in [0, 1], got {rho}")
    if not 0.0 <= theta <= math.pi:
        raise ValueError(f"theta must lie in [0, pi], got {theta}")
    if not 0.0 <= phi <= math.pi:
        raise ValueError(f"phi must lie in [0, pi], got {phi}")

    a = math.sqrt(rho)
    b = math.sqrt(1.0 - rho)
    return np.array(
        [
            [a, b * np.exp(1j * theta)],
            [b * np.exp(1j * phi), -a * np.exp(1j * (theta + phi))],
        ],
        dtype=np.complex128,
    )


def apply_coin(
    coin: NDArray[np.complex128], spinor: NDArray[np.complex128]
) -> NDArray[np.complex128]:
    """
    Apply a coin to one site's spinor (a length-2 complex vector).

    A unitary coin preserves the spinor norm |a|^2 + |b|^2 (within 1e-14
    in double precision).
    """
    return np.asarray(coin, dtype=np.complex128) @ np.asarray(
        spinor, dtype=np.complex128
    )


def is_unitary(matrix: NDArray[np.complex128], tol: float = 1e-12) -> bool:
    """
    Test whether ``matrix`` is unitary: max entrywise |C^dag C - I| <= tol.

    Parameters
    ----------
    matrix : array_like
        Square complex matrix.
    tol : float
        Positive entrywise tolerance.  The default leaves headroom over
        double-precision construction error (~1e-15) without masking bugs.
    """
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    m = np.asarray(matrix, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    gram = m.conj().T @ m
    return bool(np.max(np.abs(gram - np.eye(m.shape[0]))) <= tol)
