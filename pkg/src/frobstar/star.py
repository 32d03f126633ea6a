"""2-step star numbers ``a*n*(n-2) + 1`` and their consecutive triples.

For ``a >= 5``, ``n >= 3`` the triple ``(S(a,n), S(a,n+1), S(a,n+2))`` has
an explicit L-shaped Apéry frame whose short-row width is ``c*n - 1`` for
a multiplier ``c`` in ``{1, 2, 3, 4}`` picked by ``(a mod 4, n mod 4)``.
The Frobenius number and genus then have closed forms in ``a`` and ``n``.
A finite list of small ``(a, n)`` is excluded from those closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._int import checked, exact_div
from .core import Triple
from .errors import ExceptionalCase, FrameInvalid, OutOfRange
from .frame import AperyFrame, frame_violations

__all__ = [
    "StarParams",
    "CaseTag",
    "star_number",
    "star_triple",
    "case_tag",
    "is_exceptional",
    "frame_parameters",
    "table_frame",
    "closed_frobenius",
    "closed_genus",
    "EXCEPTIONAL_FAMILIES",
]


@dataclass(frozen=True)
class StarParams:
    a: int
    n: int

    def __post_init__(self):
        if self.a < 4 or self.n < 2:
            raise OutOfRange(f"need a >= 4 and n >= 2, got a={self.a}, n={self.n}")


@dataclass(frozen=True)
class CaseTag:
    a_mod4: int
    n_mod4: int
    multiplier: int  # c with short-row width y1 = c*n - 1

    @property
    def p_class(self) -> str:
        return "n" if self.multiplier == 1 else f"{self.multiplier}n"


def star_number(P: StarParams) -> int:
    return checked(P.a * P.n * (P.n - 2) + 1)


def star_triple(P: StarParams) -> Triple:
    if P.n < 3:
        raise OutOfRange(f"consecutive triples need n >= 3, got n={P.n}")
    return Triple(*(star_number(StarParams(P.a, P.n + i)) for i in range(3)))


# multiplier c by (a mod 4, n mod 4); a = 0 mod 4 always uses c = 2
_MULTIPLIER = {
    (1, 1): 1, (3, 3): 1,
    (1, 2): 2, (2, 0): 2, (2, 2): 2, (3, 2): 2,
    (1, 3): 3, (3, 1): 3,
    (1, 0): 4, (2, 1): 4, (2, 3): 4, (3, 0): 4,
}


def case_tag(P: StarParams) -> CaseTag:
    am, nm = P.a % 4, P.n % 4
    c = 2 if am == 0 else _MULTIPLIER[(am, nm)]
    return CaseTag(am, nm, c)


# Each entry is (a, predicate on n, human description). The families are
# unions of their clauses.
EXCEPTIONAL_FAMILIES = (
    (5, lambda n: n % 4 in (0, 3) or n == 6, "n = 0, 3 (mod 4) or n = 6"),
    (6, lambda n: n % 2 == 1 or n == 4, "n odd or n = 4"),
    (7, lambda n: n % 4 == 0 or n in (5, 9), "n = 0 (mod 4) or n in {5, 9}"),
    (9, lambda n: n in (4, 8, 12), "n in {4, 8, 12}"),
    (10, lambda n: n in (3, 5, 7), "n in {3, 5, 7}"),
    (11, lambda n: n == 4, "n = 4"),
    (13, lambda n: n == 4, "n = 4"),
    (14, lambda n: n == 3, "n = 3"),
    (18, lambda n: n == 3, "n = 3"),
)


def _check_closed_domain(P: StarParams) -> None:
    if P.a < 5 or P.n < 3:
        raise OutOfRange(f"closed forms need a >= 5 and n >= 3, got a={P.a}, n={P.n}")


def is_exceptional(P: StarParams) -> bool:
    _check_closed_domain(P)
    return any(a == P.a and pred(P.n) for a, pred, _ in EXCEPTIONAL_FAMILIES)


def _refuse_exceptional(P: StarParams) -> None:
    if is_exceptional(P):
        desc = next(d for a, pred, d in EXCEPTIONAL_FAMILIES if a == P.a and pred(P.n))
        raise ExceptionalCase(f"(a, n) = ({P.a}, {P.n}) is exceptional: a = {P.a} with {desc}")


def table_frame(P: StarParams) -> AperyFrame:
    """Frame read off the case table with no exceptional or validity check.

    Useful for inspecting what the table produces where the closed forms
    are refused or fail.
    """
    a, n = P.a, P.n
    c = case_tag(P).multiplier
    # l = (a(n+2) + beta*n + gamma)/4  <=>  z0 - 1 = (a(n-2) - beta*n + gamma)/4
    beta, gamma = 2 * c, c - 2
    z0 = exact_div(a * (n - 2) - beta * n + gamma + 4, 4, "z0")
    l = exact_div(a * (n + 2) + beta * n + gamma, 4, "l")  # noqa: E741
    return AperyFrame(y0=4 * n, z0=z0, y1=c * n - 1, z1=z0 + 2 * n - 1, k=2 * n + 1, l=l)


def frame_parameters(P: StarParams) -> AperyFrame:
    _check_closed_domain(P)
    _refuse_exceptional(P)
    F = table_frame(P)
    bad = frame_violations(F, star_triple(P))
    if bad:
        raise FrameInvalid(f"frame {F} for (a, n) = ({P.a}, {P.n}) fails {', '.join(bad)}")
    return F


def _frobenius_formula(P: StarParams) -> int:
    a, n = P.a, P.n
    s0, s1, s2 = (star_number(StarParams(a, n + i)) for i in range(3))
    am, nm = a % 4, n % 4
    m = a * (n - 2)
    # (coefficient of S(a,n+1), numerator of the S(a,n+2) coefficient over 4)
    c_two = (2 * n - 2, m + 4 * n - 4)
    c_four = (4 * n - 2, m - 2)
    c_one = (4 * n - 1, m - 2 * n - 1)
    c_three = (3 * n - 2, m + 2 * n - 3)
    if am == 0:
        coef, num = c_two
    elif am == 1:
        coef, num = {0: c_four, 1: c_one, 2: c_two, 3: c_three}[nm]
    elif am == 2:
        coef, num = c_two if n % 2 == 0 else c_four
    else:
        coef, num = {0: c_four, 1: c_three, 2: c_two, 3: c_one}[nm]
    return checked(coef * s1 + exact_div(num, 4, "S(a,n+2) coefficient") * s2 - s0)


def _genus_formula(P: StarParams) -> int:
    a, n = P.a, P.n
    c = case_tag(P).multiplier
    if c == 1:
        num = (a * a + 16 * a - 12) * n**3 - (12 * a - 8) * n**2 - (4 * a * a + 14 * a - 23) * n + 4 * a - 10
    elif c == 2:
        num = (a * a + 16 * a - 16) * n**3 - 12 * a * n**2 - (4 * a * a + 14 * a - 24) * n + 4 * a - 8
    elif c == 3:
        num = (a * a + 16 * a - 12) * n**3 - (12 * a + 8) * n**2 - (4 * a * a + 14 * a - 23) * n + 4 * a - 6
    else:
        num = (a * a + 16 * a) * n**3 - (12 * a + 16) * n**2 - (4 * a * a + 14 * a - 20) * n + 4 * a - 4
    return exact_div(num, 8, "genus numerator")


def closed_frobenius(P: StarParams) -> int:
    """Closed-form Frobenius number of the star triple at ``(a, n)``."""
    _check_closed_domain(P)
    _refuse_exceptional(P)
    return _frobenius_formula(P)


def closed_genus(P: StarParams) -> int:
    """Closed-form genus of the star triple at ``(a, n)``."""
    _check_closed_domain(P)
    _refuse_exceptional(P)
    return _genus_formula(P)
