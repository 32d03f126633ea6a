"""Numerical semigroups generated by three integers.

Everything here is brute force in the honest sense: representation counts
come from an exhaustive loop, Apéry sets for ``p = 0`` come from a
shortest-path search on the residues modulo the smallest generator, and
Apéry sets for ``p > 0`` are found by scanning each residue class upward.
The closed forms elsewhere in the package are checked against these.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import reduce
from math import gcd

from ._int import checked
from .errors import InternalInconsistency, NotCoprime, NotSorted, TooSmall

__all__ = [
    "Triple",
    "AperySet",
    "RepCount",
    "validate_triple",
    "count_representations",
    "apery_set",
    "frobenius",
    "genus",
    "is_member",
]


@dataclass(frozen=True)
class Triple:
    """Generators ``a1 < a2 < a3`` with ``gcd(a1, a2, a3) == 1``.

    Pairwise gcds may exceed one, e.g. ``Triple(25, 65, 121)``.
    """

    a1: int
    a2: int
    a3: int

    def __post_init__(self):
        a1, a2, a3 = self.a1, self.a2, self.a3
        if not all(isinstance(v, int) for v in (a1, a2, a3)):
            raise TypeError("generators must be integers")
        if not a1 < a2 < a3:
            raise NotSorted(f"generators must be strictly increasing, got {self.as_tuple()}")
        if a1 < 3:
            raise TooSmall(f"smallest generator must be at least 3, got {a1}")
        if reduce(gcd, (a1, a2, a3)) != 1:
            raise NotCoprime(f"gcd{self.as_tuple()} != 1")
        for v in (a1, a2, a3):
            checked(v)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a1, self.a2, self.a3)

    def __iter__(self):
        return iter(self.as_tuple())


@dataclass(frozen=True)
class AperySet:
    """Minimal elements of ``S_p`` in each residue class modulo ``a1``.

    ``elements[j]`` is the least value congruent to ``j`` that has more
    than ``p`` representations.
    """

    p: int
    elements: tuple[int, ...]

    @property
    def modulus(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, j):
        return self.elements[j]

    def __iter__(self):
        return iter(self.elements)


@dataclass(frozen=True)
class RepCount:
    target: int
    count: int

    @property
    def representable(self) -> bool:
        return self.count > 0


def validate_triple(a1: int, a2: int, a3: int) -> Triple:
    return Triple(a1, a2, a3)


def _count(t: int, T: Triple, stop: int | None = None) -> int:
    # loops over x3 then x2; the remainder must be a multiple of a1
    a1, a2, a3 = T
    count = 0
    for x3 in range(t // a3 + 1):
        rest3 = t - x3 * a3
        for x2 in range(rest3 // a2 + 1):
            if (rest3 - x2 * a2) % a1 == 0:
                count += 1
                if stop is not None and count >= stop:
                    return count
    return count


def count_representations(t: int, T: Triple) -> RepCount:
    """Number of ``(x1, x2, x3) >= 0`` with ``x1*a1 + x2*a2 + x3*a3 == t``."""
    if t < 0:
        raise ValueError(f"target must be nonnegative, got {t}")
    checked(t)
    return RepCount(t, _count(t, T))


def _apery0(T: Triple) -> list[int]:
    # Dijkstra on Z/a1 with edges +a2 and +a3
    a1, a2, a3 = T
    dist: list[int | None] = [None] * a1
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if d > dist[r]:
            continue
        for g in (a2, a3):
            w = checked(d + g)
            s = w % a1
            if dist[s] is None or w < dist[s]:
                dist[s] = w
                heapq.heappush(heap, (w, s))
    if any(v is None for v in dist):
        raise InternalInconsistency(f"residue graph of {T.as_tuple()} is not connected")
    return dist


def apery_set(T: Triple, p: int = 0) -> AperySet:
    """The ``p``-Apéry set of ``T`` with respect to ``a1``.

    Level 0 is computed by shortest paths. Each higher level starts every
    residue class at the previous level's element and walks upward in
    steps of ``a1`` until the representation count exceeds ``p``; counts
    never decrease along such a walk, so it terminates.
    """
    if p < 0:
        raise ValueError(f"p must be nonnegative, got {p}")
    elems = _apery0(T)
    a1 = T.a1
    for level in range(1, p + 1):
        nxt = []
        for v in elems:
            while _count(v, T, stop=level + 1) <= level:
                v = checked(v + a1)
            nxt.append(v)
        elems = nxt
    return AperySet(p, tuple(elems))


def frobenius(T: Triple, p: int = 0) -> int:
    """Largest integer with at most ``p`` representations."""
    return max(apery_set(T, p)) - T.a1


def genus_from_apery(ap: AperySet) -> int:
    a1 = ap.modulus
    num = 2 * sum(ap) - a1 * (a1 - 1)
    q, r = divmod(num, 2 * a1)
    if r:
        raise InternalInconsistency(f"genus is not an integer: {num}/{2 * a1}")
    return q


def genus(T: Triple, p: int = 0) -> int:
    """Number of nonnegative integers with at most ``p`` representations."""
    return genus_from_apery(apery_set(T, p))


def is_member(t: int, T: Triple, p: int = 0) -> bool:
    """Whether ``t`` has more than ``p`` representations."""
    if t < 0:
        return False
    return _count(checked(t), T, stop=p + 1) >= p + 1
