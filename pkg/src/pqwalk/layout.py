"""
Periodic assignment of coin operators to lattice positions.

A :class:`CoinLayout` is a period-N pattern of slots into a coin table:
position x uses ``pattern[(x + anchor) mod N]`` with the nonnegative
(mathematical) remainder, so negative positions see the same periodic
pattern as positive ones and ``x = 0 (mod N)`` really holds at -N, -2N, ...

Slot 0 is the "no potential" coin (identity by default) and slot 1 the
"potential" coin (Hadamard by default).  The six built-in case families:

    IA    [H:1, I:N-1]   potential coin exactly at x = 0 (mod N)
    IB    [I:1, H:N-1]   plain coin exactly at x = 0 (mod N)
    IIA   [H:N-1, I:1]   plain coin at x = N/2 (mod N), N even
    IIB   [I:N-1, H:1]   potential coin at x = N/2 (mod N), N even
    IIIA  [H:q, I:q]     potential coin on the centered block |x| <= (q-1)/2
                         (mod 2q), q odd
    IIIB  [I:q, H:q]     plain coin on the centered block, q odd

All six place the walker's start (x = 0) at the middle of the pattern's
first block, so every layout satisfies coin(x) = coin(-x).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np
from numpy.typing import NDArray

from .coins import general_coin, hadamard, identity_coin, is_unitary

__all__ = [
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
    "default_table",
    "coin_matrices",
]

C0 = 0  # slot of the no-potential coin
CP = 1  # slot of the potential coin

FAMILIES = ("IA", "IB", "IIA", "IIB", "IIIA", "IIIB")


@dataclass(frozen=True)
class CoinTable:
    """The two coins a layout alternates between; both must be unitary."""

    c0: NDArray[np.complex128]
    cp: NDArray[np.complex128]

    def __post_init__(self) -> None:
        for name, coin in (("c0", self.c0), ("cp", self.cp)):
            if not is_unitary(coin, tol=1e-12):
                raise ValueError(f"coin {name} is not unitary within 1e-12")

    @property
    def matrices(self) -> tuple[NDArray[np.complex128], ...]:
        return (self.c0, self.cp)

    def swapped(self) -> "CoinTable":
        """Exchange the two coins (maps each case family onto its dual)."""
        return CoinTable(c0=self.cp, cp=self.c0)


def default_table() -> CoinTable:
    """Identity at plain sites, Hadamard at potential sites."""
    return CoinTable(c0=identity_coin(), cp=hadamard())


CoinsLike = Union[CoinTable, Sequence[NDArray[np.complex128]]]


def coin_matrices(coins: CoinsLike | None) -> tuple[NDArray[np.complex128], ...]:
    """Normalize a CoinTable / sequence of matrices (None -> defaults)."""
    if coins is None:
        coins = default_table()
    if isinstance(coins, CoinTable):
        return coins.matrices
    mats = tuple(np.asarray(c, dtype=np.complex128) for c in coins)
    for k, m in enumerate(mats):
        if not is_unitary(m, tol=1e-12):
            raise ValueError(f"coin at slot {k} is not unitary within 1e-12")
    return mats


@dataclass(frozen=True)
class CoinLayout:
    """
    Period-N assignment of coin slots to positions.

    Attributes
    ----------
    period : int
        Spatial period N >= 1.
    pattern : tuple[int, ...]
        One coin slot per residue; length N.
    anchor : int
        Offset in [0, N): position x uses pattern[(x + anchor) mod N].
    """

    period: int
    pattern: tuple[int, ...]
    anchor: int = 0

    def __post_init__(self) -> None:
        if self.period < 1:
            raise ValueError(f"period must be >= 1, got {self.period}")
        if len(self.pattern) != self.period:
            raise ValueError(
                f"pattern length {len(self.pattern)} != period {self.period}"
            )
        if not 0 <= self.anchor < self.period:
            raise ValueError(
                f"anchor must lie in [0, {self.period}), got {self.anchor}"
            )

    def slot(self, x: int) -> int:
        """Coin slot used at position x (any integer, negatives included)."""
        return self.pattern[(x + self.anchor) % self.period]

    def slots(self, positions: NDArray[np.int64]) -> NDArray[np.int64]:
        """Vectorized :meth:`slot` over an array of positions."""
        idx = np.mod(np.asarray(positions, dtype=np.int64) + self.anchor, self.period)
        return np.asarray(self.pattern, dtype=np.int64)[idx]


def coin_at(
    layout: CoinLayout, coins: CoinsLike | None, x: int
) -> NDArray[np.complex128]:
    """Return the coin matrix acting at position x under ``layout``."""
    return coin_matrices(coins)[layout.slot(x)]


@dataclass(frozen=True)
class CaseSpec:
    """
    One of the six case families with its size parameter.

    ``param`` is the period N for families I/II and the half-period q for
    family III (whose full period is 2q).
    """

    family: str
    param: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(
                f"family must be one of {'/'.join(FAMILIES)}, got {self.family!r}"
            )
        n = self.param
        if self.family in ("IA", "IB"):
            if n < 2:
                raise ValueError(f"family {self.family} requires period N >= 2, got {n}")
        elif self.family in ("IIA", "IIB"):
            if n < 2 or n % 2 != 0:
                raise ValueError(
                    f"family {self.family} requires an even period N >= 2, got {n}"
                )
        else:  # IIIA / IIIB
            if n < 3 or n % 2 == 0:
                raise ValueError(
                    f"family {self.family} requires an odd block length q >= 3, got {n}"
                )


def case_layout(family: str, param: int) -> CoinLayout:
    """
    Build the layout of one case family.

    Parameters
    ----------
    family : str
        One of IA, IB, IIA, IIB, IIIA, IIIB.
    param : int
        Period N (families I/II) or block length q (family III).

    Raises
    ------
    ValueError
        If the parameter violates the family's constraint (family II needs
        even N, family III needs odd q >= 3).
    """
    CaseSpec(family, param)  # validates family/param
    n = param
    if family == "IA":
        pattern = [CP] + [C0] * (n - 1)
    elif family == "IB":
        pattern = [C0] + [CP] * (n - 1)
    elif family == "IIA":
        pattern = [CP] * n
        pattern[n // 2] = C0
    elif family == "IIB":
        pattern = [C0] * n
        pattern[n // 2] = CP
    else:
        # Family III: full period 2q, first-listed coin on the block of q
        # sites centered on the origin, i.e. residues r <= (q-1)/2 or
        # r >= 2q - (q-1)/2.
        q = n
        half = (q - 1) // 2
        block = CP if family == "IIIA" else C0
        other = C0 if family == "IIIA" else CP
        pattern = [
            block if (r <= half or r >= 2 * q - half) else other
            for r in range(2 * q)
        ]
    return CoinLayout(period=len(pattern), pattern=tuple(pattern), anchor=0)


def layout_from_pattern(pattern: Sequence[int], anchor: int = 0) -> CoinLayout:
    """
    Build a layout from an explicit slot sequence.

    ``anchor`` may be any integer; it is reduced into [0, N).
    """
    pat = tuple(int(p) for p in pattern)
    if not pat:
        raise ValueError("pattern must be nonempty")
    return CoinLayout(period=len(pat), pattern=pat, anchor=anchor % len(pat))


_PATTERN_TOKEN = re.compile(r"([HI]|G\(([^)]*)\))(\d+)")


def parse_pattern(
    text: str, table: CoinTable | None = None
) -> tuple[CoinLayout, tuple[NDArray[np.complex128], ...]]:
    """
    Parse a compact pattern string into (layout, coin matrices).

    The grammar is a sequence of letter+count blocks, e.g. ``H1I13`` for one
    potential site followed by 13 plain sites per period.  Letters: ``I`` is
    the table's c0 coin, ``H`` its cp coin, and ``G(rho,theta,phi)`` an
    inline coin from the general family.  The layout is anchored so that the
    first block is centered on x = 0 when its count is odd (and starts at
    x = 0 when even).

    Returns
    -------
    (CoinLayout, tuple of matrices)
        The matrices tuple is indexed by the layout's slot values.
    """
    if table is None:
        table = default_table()
    matrices: list[NDArray[np.complex128]] = [table.c0, table.cp]

    slots: list[int] = []
    pos = 0
    first_count: int | None = None
    for m in _PATTERN_TOKEN.finditer(text):
        if m.start() != pos:
            break
        letter = m.group(1)
        if letter == "I":
            slot = C0
        elif letter == "H":
            slot = CP
        else:
            params = [p.strip() for p in m.group(2).split(",")]
            if len(params) != 3:
                raise ValueError(
                    f"G coin needs three parameters rho,theta,phi, got {m.group(1)!r}"
                )
            try:
                rho, theta, phi = (float(p) for p in params)
            except ValueError as exc:
                raise ValueError(f"bad G coin parameters in {m.group(1)!r}") from exc
            matrices.append(general_coin(rho, theta, phi))
            slot = len(matrices) - 1
        count = int(m.group(3))
        if count < 1:
            raise ValueError(f"block counts must be positive in pattern {text!r}")
        if first_count is None:
            first_count = count
        slots.extend([slot] * count)
        pos = m.end()
    if pos != len(text) or not slots:
        raise ValueError(
            f"cannot parse pattern {text!r}: expected blocks like H1I13 or G(0.5,0,0)3"
        )

    anchor = (first_count - 1) // 2 if first_count % 2 == 1 else 0
    return layout_from_pattern(slots, anchor=anchor), tuple(matrices)
