"""Numerical checks of four series built from 2-step star numbers.

The summand ``a*n*(n-2) + 1`` is used as written for every index,
including ``n = 0, 1`` where it equals ``1`` and ``1 - a``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = [
    "SeriesCheck",
    "reciprocal_closed",
    "reciprocal_partial",
    "reciprocal_check",
    "exp_sums_check",
    "geometric_closed",
    "geometric_partial",
    "geometric_check",
    "TOLERANCE",
]

TOLERANCE = {
    "reciprocal": 1e-8,
    "exp": 1e-10,
    "exp_alternating": 1e-10,
    "geometric": 1e-10,
}


@dataclass(frozen=True)
class SeriesCheck:
    """One partial sum set against its closed value.

    For the reciprocal series ``partial_value`` already includes
    ``tail_estimate``; for the others the tail is zero.
    """

    identity_id: str
    a: int
    b: float | None
    partial_terms: int
    partial_value: float
    closed_value: float
    abs_error: float
    tail_estimate: float = 0.0

    @property
    def tolerance(self) -> float:
        return TOLERANCE[self.identity_id]

    @property
    def passed(self) -> bool:
        return self.abs_error < self.tolerance


def _make(identity_id, a, b, terms, partial, closed, tail=0.0) -> SeriesCheck:
    return SeriesCheck(identity_id, a, b, terms, partial, closed, abs(partial - closed), tail)


def _check_reciprocal_a(a: int) -> None:
    if a < 2:
        raise DomainError(f"reciprocal series needs an integer a >= 2 (a != 0, 1), got {a}")
    r = math.isqrt(a * (a - 1))
    # a(a-1) sits strictly between (a-1)^2 and a^2, so it is never a square
    assert r * r != a * (a - 1)


def reciprocal_closed(a: int) -> float:
    _check_reciprocal_a(a)
    root = math.sqrt(a * (a - 1))
    return 1 / (2 * (a - 1)) - math.pi / (2 * root) / math.tan(root * math.pi / a)


def reciprocal_partial(a: int, N: int) -> float:
    """Sum of ``1/S(a, n)`` for ``n = 2 .. N+1``."""
    _check_reciprocal_a(a)
    if N < 1:
        raise DomainError(f"need at least one term, got N={N}")
    n = np.arange(2, N + 2, dtype=np.float64)
    return math.fsum(1.0 / (a * n * (n - 2) + 1))


def reciprocal_check(a: int, N: int = 10**6) -> SeriesCheck:
    """Partial sum plus the tail estimate ``1/(a*N)`` against the cotangent form."""
    tail = 1.0 / (a * N)
    return _make("reciprocal", a, None, N, reciprocal_partial(a, N) + tail, reciprocal_closed(a), tail)


def _star_terms(a: int, N: int) -> np.ndarray:
    n = np.arange(0, N + 1, dtype=np.float64)
    return a * n * (n - 2) + 1


def exp_sums_check(a: int, N: int = 30) -> tuple[SeriesCheck, SeriesCheck]:
    """Sums of ``S(a,n)/n!`` and ``(-1)^n S(a,n)/n!`` for ``n = 0 .. N``."""
    if N < 3:
        raise DomainError(f"need N >= 3, got {N}")
    terms = _star_terms(a, N) / np.array([math.factorial(k) for k in range(N + 1)], dtype=np.float64)
    signs = np.where(np.arange(N + 1) % 2 == 0, 1.0, -1.0)
    plain = math.fsum(terms)
    alt = math.fsum(signs * terms)
    return (
        _make("exp", a, None, N + 1, plain, math.e),
        _make("exp_alternating", a, None, N + 1, alt, (2 * a + 1) / math.e),
    )


def geometric_closed(a: int, b: float) -> float:
    if not b > 1:
        raise DomainError(f"geometric series needs b > 1, got {b}")
    return a * b * (3 - b) / (b - 1) ** 3 + b / (b - 1)


def geometric_partial(a: int, b: float, N: int = 200) -> float:
    """Sum of ``S(a,n)/b^n`` for ``n = 0 .. N``."""
    if not b > 1:
        raise DomainError(f"geometric series needs b > 1, got {b}")
    n = np.arange(0, N + 1, dtype=np.float64)
    return math.fsum(_star_terms(a, N) * np.power(float(b), -n))


def geometric_check(a: int, b: float, N: int = 200) -> SeriesCheck:
    return _make("geometric", a, float(b), N + 1, geometric_partial(a, b, N), geometric_closed(a, b))
