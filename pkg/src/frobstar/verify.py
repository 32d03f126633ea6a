"""Sweep star parameters and compare closed forms, frames and the oracle."""

from __future__ import annotations

import csv
import io
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from . import core, frame
from .errors import FrobstarError, NonIntegerParameter
from .star import (
    StarParams,
    _frobenius_formula,
    _genus_formula,
    closed_frobenius,
    closed_genus,
    is_exceptional,
    star_triple,
    table_frame,
)

log = logging.getLogger(__name__)

REFUSED = "refused"

CSV_FIELDS = (
    "a", "n", "triple", "exceptional", "closed_g0", "oracle_g0", "closed_n0", "oracle_n0",
    "frame_valid", "frame_matches_oracle", "match", "would_have_matched",
)


@dataclass(frozen=True)
class SweepRecord:
    a: int
    n: int
    triple: tuple[int, int, int]
    exceptional: bool
    closed_g0: int | str
    oracle_g0: int
    closed_n0: int | str
    oracle_n0: int
    frame_valid: bool
    frame_matches_oracle: bool
    match: bool | None
    would_have_matched: bool | None

    @property
    def mismatch(self) -> bool:
        """A non-exceptional pair where any path disagrees with the oracle."""
        if self.exceptional:
            return False
        return not (self.match and self.frame_valid and self.frame_matches_oracle)


@dataclass(frozen=True)
class SweepReport:
    records: tuple[SweepRecord, ...]

    @property
    def summary(self) -> dict:
        regular = [r for r in self.records if not r.exceptional]
        return {
            "pairs": len(self.records),
            "checked": len(regular),
            "matches": sum(bool(r.match) for r in regular),
            "mismatches": sum(not r.match for r in regular),
            "frame_failures": sum(not (r.frame_valid and r.frame_matches_oracle) for r in regular),
            "refusals": len(self.records) - len(regular),
        }

    @property
    def ok(self) -> bool:
        return not any(r.mismatch for r in self.records)

    def failures(self) -> list[SweepRecord]:
        return [r for r in self.records if r.mismatch]

    def to_json(self) -> str:
        body = {
            "records": [_record_dict(r) for r in self.records],
            "summary": self.summary,
        }
        return json.dumps(body, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for r in self.records:
            d = _record_dict(r)
            d["triple"] = " ".join(map(str, r.triple))
            w.writerow(["" if d[k] is None else _csv_cell(d[k]) for k in CSV_FIELDS])
        return buf.getvalue()


def _csv_cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    return v


def _record_dict(r: SweepRecord) -> dict:
    d = asdict(r)
    d["triple"] = list(r.triple)
    return d


def _frame_status(P: StarParams, T: core.Triple, oracle: core.AperySet) -> tuple[bool, bool]:
    try:
        F = table_frame(P)
    except NonIntegerParameter:
        return False, False
    if not frame.validate_frame(F, T):
        return False, False
    try:
        matches = frame.frame_apery_values(F, T) == oracle
        order = frame.traverse(F, T)
    except FrobstarError as exc:
        log.info("frame for (%d, %d) broke: %s", P.a, P.n, exc)
        return True, False
    covers = sorted(pos.value % T.a1 for pos in order) == list(range(T.a1))
    return True, matches and covers


def check_pair(a: int, n: int) -> SweepRecord:
    """Compare every available path for one ``(a, n)``."""
    P = StarParams(a, n)
    T = star_triple(P)
    oracle = core.apery_set(T, 0)
    g0 = max(oracle) - T.a1
    n0 = core.genus_from_apery(oracle)
    frame_valid, frame_ok = _frame_status(P, T, oracle)
    if is_exceptional(P):
        try:
            would = _frobenius_formula(P) == g0 and _genus_formula(P) == n0
        except NonIntegerParameter:
            would = False
        return SweepRecord(a, n, T.as_tuple(), True, REFUSED, g0, REFUSED, n0,
                           frame_valid, frame_ok, None, would)
    cg, cn = closed_frobenius(P), closed_genus(P)
    return SweepRecord(a, n, T.as_tuple(), False, cg, g0, cn, n0,
                       frame_valid, frame_ok, cg == g0 and cn == n0, None)


def _check_pair_args(args):
    return check_pair(*args)


def sweep(a_range: tuple[int, int], n_range: tuple[int, int], jobs: int = 1) -> SweepReport:
    """Check every ``(a, n)`` in the inclusive ranges; output ordered by ``(a, n)``."""
    (a_lo, a_hi), (n_lo, n_hi) = a_range, n_range
    if not (5 <= a_lo <= a_hi and 3 <= n_lo <= n_hi):
        raise ValueError(f"need 5 <= a_min <= a_max and 3 <= n_min <= n_max, got a={a_range}, n={n_range}")
    pairs = [(a, n) for a in range(a_lo, a_hi + 1) for n in range(n_lo, n_hi + 1)]
    if jobs > 1 and len(pairs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_check_pair_args, pairs, chunksize=4))
    else:
        records = [check_pair(a, n) for a, n in pairs]
    records.sort(key=lambda r: (r.a, r.n))
    for r in records:
        if r.mismatch:
            log.warning("mismatch at (a, n) = (%d, %d): closed %s/%s, oracle %s/%s",
                        r.a, r.n, r.closed_g0, r.closed_n0, r.oracle_g0, r.oracle_n0)
    return SweepReport(tuple(records))
