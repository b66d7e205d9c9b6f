"""Divisions up to isometry under the order-4 group of a rectangle.

The group is {identity, rotate180, mirrorHorizontal, mirrorVertical}, even
for square boards. ``mirrorHorizontal`` reflects across the horizontal axis
(swaps the top and bottom rows); ``mirrorVertical`` reflects across the
vertical axis (reverses the column order).
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Optional, Sequence

from .core import BoardShape, Division, _trusted, as_shape, canonical_labels, enumerate_divisions
from .errors import OracleDisagreement


class GroupElement(enum.Enum):
    IDENTITY = "e"
    ROTATE180 = "r180"
    MIRROR_H = "mH"
    MIRROR_V = "mV"

    def compose(self, other: "GroupElement") -> "GroupElement":
        """``self`` after ``other``. The group is the Klein four-group."""
        bits = {GroupElement.IDENTITY: 0, GroupElement.MIRROR_H: 1,
                GroupElement.MIRROR_V: 2, GroupElement.ROTATE180: 3}
        inv = {v: k for k, v in bits.items()}
        return inv[bits[self] ^ bits[other]]


GROUP = tuple(GroupElement)


def permutation(shape, g: GroupElement) -> list[int]:
    """``perm[i]`` is where square ``i`` lands under ``g``."""
    shape = as_shape(shape)
    m, n = shape.rows, shape.cols
    perm = []
    for i in range(shape.size):
        r, j = shape.position(i)
        if g in (GroupElement.ROTATE180, GroupElement.MIRROR_H):
            r = m - 1 - r
        if g in (GroupElement.ROTATE180, GroupElement.MIRROR_V):
            j = n - 1 - j
        perm.append(shape.index(r, j))
    return perm


def apply_isometry(d: Division, g: GroupElement) -> Division:
    perm = permutation(d.shape, g)
    moved = [0] * d.shape.size
    for i, label in enumerate(d.labels):
        moved[perm[i]] = label
    # an isometric image of a valid division is valid
    return _trusted(d.shape, canonical_labels(moved))


def fixed_count(shape, k: int, g: GroupElement, *, divisions: Optional[Sequence[Division]] = None,
                edge_limit: Optional[int] = None) -> int:
    if divisions is None:
        divisions = enumerate_divisions(shape, k, edge_limit=edge_limit)
    return sum(1 for d in divisions if apply_isometry(d, g) == d)


def direct_orbits(divisions: Sequence[Division]) -> list[frozenset[Division]]:
    """Partition divisions into orbits by explicit group closure."""
    seen: set[Division] = set()
    orbits = []
    for d in divisions:
        if d in seen:
            continue
        orbit = frozenset(apply_isometry(d, g) for g in GROUP)
        seen |= orbit
        orbits.append(orbit)
    return orbits


@dataclass(frozen=True)
class OrbitCount:
    shape: BoardShape
    k: int
    total: int
    up_to_isometry: int
    fixed: dict[GroupElement, int]

    def to_json(self) -> str:
        doc = {
            "m": self.shape.rows,
            "n": self.shape.cols,
            "k": self.k,
            "fixed": {g.value: self.fixed[g] for g in GROUP},
            "orbits": self.up_to_isometry,
        }
        return json.dumps(doc)


def orbit_count(shape, k: int, *, edge_limit: Optional[int] = None, cross_check: bool = True,
                divisions: Optional[Sequence[Division]] = None) -> OrbitCount:
    """Burnside count of divisions up to isometry.

    With ``cross_check`` the result is compared against explicit orbit
    partitioning and a disagreement raises.
    """
    shape = as_shape(shape)
    if divisions is None:
        divisions = enumerate_divisions(shape, k, edge_limit=edge_limit)
    fixed = {g: fixed_count(shape, k, g, divisions=divisions) for g in GROUP}
    total = sum(fixed.values())
    if total % len(GROUP):
        raise OracleDisagreement(f"Burnside sum {total} for {shape.rows}x{shape.cols}, k={k} is not divisible by 4")
    orbits = total // len(GROUP)
    if cross_check:
        direct = len(direct_orbits(divisions))
        if direct != orbits:
            raise OracleDisagreement(f"Burnside gives {orbits} orbits, direct partition gives {direct}")
    return OrbitCount(shape, k, len(divisions), orbits, fixed)


def i2_closed_form(n: int) -> int:
    """Two-piece divisions of the 2 x n board up to isometry."""
    return n * (n + 1) // 2
