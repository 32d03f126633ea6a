from math import gcd

import pytest

from frobstar import core
from frobstar.errors import DuplicateResidue, FrameInvalid, TraversalStuck
from frobstar.frame import (
    AperyFrame,
    frame_apery_values,
    frame_violations,
    frobenius_from_frame,
    genus_from_frame,
    traverse,
    validate_frame,
)

T55 = core.Triple(76, 121, 176)
F55 = AperyFrame(y0=20, z0=2, y1=4, z1=11, k=11, l=11)
T83 = core.Triple(25, 65, 121)
F83 = AperyFrame(y0=12, z0=0, y1=5, z1=5, k=7, l=13)


def test_validate_examples():
    assert validate_frame(F55, T55)
    assert validate_frame(F83, T83)


def test_perturbed_frame_fails_area():
    bad = AperyFrame(20, 2, 5, 11, 11, 11)
    assert not validate_frame(bad, T55)
    assert any(v.startswith("(ii)") for v in frame_violations(bad, T55))


def test_operations_refuse_invalid_frame():
    bad = AperyFrame(20, 2, 5, 11, 11, 11)
    for op in (traverse, frame_apery_values, frobenius_from_frame, genus_from_frame):
        with pytest.raises(FrameInvalid):
            op(bad, T55)


def test_traverse_single_cycle():
    walk = traverse(F55, T55)
    assert len(walk) == 76
    assert [(p.y, p.z) for p in walk[:20]] == [(y, 0) for y in range(20)]
    assert (walk[20].y, walk[20].z) == (0, 9)
    # consecutive steps add a2 modulo a1
    for prev, cur in zip(walk, walk[1:]):
        assert (cur.value - prev.value - T55.a2) % T55.a1 == 0
    assert sorted(p.value % 76 for p in walk) == list(range(76))


def test_traverse_split_cycles():
    walk = traverse(F83, T83)
    d = gcd(25, 65)
    assert d == 5 and len(walk) == 25
    for j in range(d):
        chunk = walk[5 * j:5 * j + 5]
        assert (chunk[0].y, chunk[0].z) == (0, j)
        assert all(p.value % d == j for p in chunk)
    assert sorted(p.value % 25 for p in walk) == list(range(25))


def test_frame_values_equal_oracle():
    assert frame_apery_values(F83, T83) == core.apery_set(T83, 0)
    vals = frame_apery_values(F55, T55)
    assert vals == core.apery_set(T55, 0)
    assert len(vals) == 76 and max(vals) == 2475


def test_frobenius_from_frame():
    assert frobenius_from_frame(F55, T55) == 2399
    assert frobenius_from_frame(F83, T83) == 719


def test_genus_from_frame():
    assert genus_from_frame(F55, T55) == 1200
    assert genus_from_frame(F83, T83) == 360


def test_corner_holds_maximum():
    for F, T in ((F55, T55), (F83, T83)):
        vals = frame_apery_values(F, T)
        assert frobenius_from_frame(F, T) == max(vals) - T.a1


def test_small_frame():
    T = core.Triple(3, 4, 5)
    assert not validate_frame(AperyFrame(y0=3, z0=1, y1=3, z1=1, k=4, l=0), T)
    # rows {0, 4} and {5}
    F = AperyFrame(y0=2, z0=1, y1=1, z1=2, k=1, l=3)
    assert validate_frame(F, T)
    assert frame_apery_values(F, T) == core.apery_set(T, 0)
    assert frobenius_from_frame(F, T) == core.frobenius(T)
    assert genus_from_frame(F, T) == core.genus(T)


def test_empty_short_rows_get_stuck():
    # passes (i)-(iv) but rows z0..z1-1 have no cells
    T = core.Triple(8, 11, 12)
    F = AperyFrame(y0=4, z0=2, y1=0, z1=5, k=1, l=3)
    assert validate_frame(F, T)
    with pytest.raises(TraversalStuck):
        traverse(F, T)


def _all_frames(T):
    a1, a2, a3 = T
    for y0 in range(1, a1 + 1):
        for z0 in range(a1 + 1):
            for y1 in range(y0 + 1):
                for z1 in range(z0, a1 + 1):
                    if y0 * z0 + y1 * (z1 - z0) != a1:
                        continue
                    k, r = divmod(y0 * a2 - (z1 - z0) * a3, a1)
                    l, s = divmod(y1 * a2 + z0 * a3, a1)
                    if not r and not s and k > 0:
                        yield AperyFrame(y0, z0, y1, z1, k, l)


def test_every_small_frame():
    n_frames = n_match = 0
    for a1 in range(3, 9):
        for a2 in range(a1 + 1, a1 + 9):
            for a3 in range(a2 + 1, a2 + 9):
                if gcd(gcd(a1, a2), a3) != 1:
                    continue
                T = core.Triple(a1, a2, a3)
                oracle = core.apery_set(T, 0)
                for F in _all_frames(T):
                    n_frames += 1
                    try:
                        walk = traverse(F, T)
                    except TraversalStuck:
                        assert F.y1 == 0 and F.z1 > F.z0
                    else:
                        assert len(walk) == a1
                        assert sorted(p.value % a1 for p in walk) == list(range(a1))
                    try:
                        vals = frame_apery_values(F, T)
                    except DuplicateResidue:
                        continue
                    if vals == oracle:
                        n_match += 1
                        assert frobenius_from_frame(F, T) == core.frobenius(T)
                        assert genus_from_frame(F, T) == core.genus(T)
    assert n_frames > 300 and n_match > 200
