"""L-shaped Apéry frames for triples.

A frame lays out the candidate Apéry elements ``t(y, z) = y*a2 + z*a3`` on
a grid: rows ``0 <= z < z0`` have ``y0`` columns, rows ``z0 <= z < z1``
have ``y1`` columns::

    z=0      . . . . . . . .   (y0 columns)
    ...
    z=z0-1   . . . . . . . .
    z=z0     . . .             (y1 columns)
    ...
    z=z1-1   . . .

The frame is described by four extents plus the two multipliers
``k`` and ``l`` that turn the closing congruences into equalities::

    y0*a2 - (z1 - z0)*a3 == k*a1
    y1*a2 + z0*a3        == l*a1
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from ._int import checked
from .core import AperySet, Triple
from .errors import DuplicateResidue, FrameInvalid, InternalInconsistency, TraversalStuck

__all__ = [
    "AperyFrame",
    "FramePosition",
    "validate_frame",
    "frame_violations",
    "traverse",
    "frame_apery_values",
    "frobenius_from_frame",
    "genus_from_frame",
]


@dataclass(frozen=True)
class AperyFrame:
    y0: int
    z0: int
    y1: int
    z1: int
    k: int
    l: int  # noqa: E741

    def row_length(self, z: int) -> int:
        if 0 <= z < self.z0:
            return self.y0
        if self.z0 <= z < self.z1:
            return self.y1
        return 0

    def contains(self, y: int, z: int) -> bool:
        return 0 <= y < self.row_length(z)

    def positions(self):
        for z in range(self.z1):
            for y in range(self.row_length(z)):
                yield y, z

    @property
    def area(self) -> int:
        return self.y0 * self.z0 + self.y1 * (self.z1 - self.z0)


@dataclass(frozen=True)
class FramePosition:
    y: int
    z: int
    value: int


def frame_violations(F: AperyFrame, T: Triple) -> list[str]:
    """Names of the frame conditions that fail; empty when the frame is valid."""
    a1, a2, a3 = T
    bad = []
    if not (0 <= F.y1 <= F.y0 and 0 <= F.z0 <= F.z1):
        bad.append("(i) ordering")
    if F.area != a1:
        bad.append("(ii) area")
    long_step = F.y0 * a2 - (F.z1 - F.z0) * a3
    if long_step != F.k * a1 or F.k * a1 <= 0:
        bad.append("(iii) long-row closure")
    if F.y1 * a2 + F.z0 * a3 != F.l * a1:
        bad.append("(iv) short-row closure")
    return bad


def validate_frame(F: AperyFrame, T: Triple) -> bool:
    return not frame_violations(F, T)


def _require_valid(F: AperyFrame, T: Triple) -> None:
    bad = frame_violations(F, T)
    if bad:
        raise FrameInvalid(f"{F} fails {', '.join(bad)} for {T.as_tuple()}")


def _value(T: Triple, y: int, z: int) -> int:
    return checked(y * T.a2 + z * T.a3)


def traverse(F: AperyFrame, T: Triple) -> list[FramePosition]:
    """Walk the frame in the order of ``l*a2 mod a1``.

    Moving right along a row adds ``a2``. Leaving the end of a long row
    jumps to column 0 of row ``z + (z1 - z0)``; leaving a short row jumps
    to column 0 of row ``z - z0``. When ``d = gcd(a1, a2) > 1`` the walk
    splits into ``d`` cycles of length ``a1/d`` starting at ``(0, j)``.
    """
    _require_valid(F, T)
    a1 = T.a1
    d = gcd(a1, T.a2)
    cycle_len = a1 // d
    shift = F.z1 - F.z0
    seen: set[tuple[int, int]] = set()
    out: list[FramePosition] = []
    for j in range(d):
        y, z = 0, j
        for _ in range(cycle_len):
            if not F.contains(y, z):
                raise TraversalStuck(f"walk left the frame at ({y}, {z})")
            if (y, z) in seen:
                raise TraversalStuck(f"walk revisited ({y}, {z})")
            seen.add((y, z))
            out.append(FramePosition(y, z, _value(T, y, z)))
            if y + 1 < F.row_length(z):
                y += 1
            elif z < F.z0:
                y, z = 0, z + shift
            else:
                y, z = 0, z - F.z0
    return out


def frame_apery_values(F: AperyFrame, T: Triple) -> AperySet:
    """Frame cell values indexed by residue modulo ``a1`` (level ``p = 0``)."""
    _require_valid(F, T)
    a1 = T.a1
    slots: list[int | None] = [None] * a1
    for y, z in F.positions():
        v = _value(T, y, z)
        r = v % a1
        if slots[r] is not None:
            raise DuplicateResidue(f"residue {r} appears at {slots[r]} and {v}")
        slots[r] = v
    # area == a1 plus no duplicates means every slot is filled
    return AperySet(0, tuple(slots))


def frobenius_from_frame(F: AperyFrame, T: Triple) -> int:
    """Frobenius number read off the larger of the two outer corners."""
    _require_valid(F, T)
    a1, a2, a3 = T
    upper = (F.y0 - 1, F.z0 - 1)
    lower = (F.y1 - 1, F.z1 - 1)
    # z0 == 0: only short rows exist; y1 == 0 or z1 == z0: only long rows
    if F.z0 == 0:
        corner = lower
    elif F.y1 == 0 or F.z1 == F.z0:
        corner = upper
    elif (F.y0 - F.y1) * a2 - (F.z1 - F.z0) * a3 > 0:
        corner = upper
    else:
        corner = lower
    return _value(T, *corner) - a1


def genus_from_frame(F: AperyFrame, T: Triple) -> int:
    """Genus from the frame extents and multipliers alone."""
    _require_valid(F, T)
    a1, a2, a3 = T
    num = (F.l - 1) * a1 - a2 + (F.z1 - 1) * a3 + (F.k - F.l) * F.y0 * F.z0 + 1
    q, r = divmod(checked(num), 2)
    if r:
        raise InternalInconsistency(f"frame genus numerator {num} is odd")
    return q
