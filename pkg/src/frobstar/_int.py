"""Checked integer helpers.

Python integers never wrap, so the 128-bit policy is enforced explicitly:
every value that passes through :func:`checked` must fit in a signed
128-bit word.
"""

from __future__ import annotations

from .errors import IntegerOverflow, NonIntegerParameter

INT128_MIN = -(1 << 127)
INT128_MAX = (1 << 127) - 1


def checked(value: int) -> int:
    if not INT128_MIN <= value <= INT128_MAX:
        raise IntegerOverflow(f"value {value} exceeds the signed 128-bit range")
    return value


def exact_div(num: int, den: int, what: str = "quotient") -> int:
    """Divide and insist on a zero remainder."""
    q, r = divmod(checked(num), den)
    if r:
        raise NonIntegerParameter(f"{what}: {num}/{den} is not an integer")
    return q
