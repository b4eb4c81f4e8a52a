import logging
from fractions import Fraction

import numpy as np
import pytest

from bezout_arcs.export import csv_text
from bezout_arcs.set_builder import (
    build_bezout_set,
    coprime_residues,
    set_stats,
)
from oracles import bezout_set_brute, in_bezout_set


def test_p6():
    s = build_bezout_set(6)
    assert s.as_set() == bezout_set_brute(6)
    assert {(5, 4), (1, 1), (4, 5)} == {pt for pt in s.as_set() if pt[0] > 0 and pt[1] > 0}
    assert build_bezout_set(6, mode="b1-flip").tolist() == [(1, 1), (5, 4)]


def test_quadrant_only_1024():
    s = build_bezout_set(1024, quadrant_only=True)
    assert s.mode == "b1"
    assert (465, 371) in s.as_set()
    assert len(s) == 511


def test_quadrant_only_matches_oracle():
    for p in (9, 64, 97, 200):
        assert build_bezout_set(p, quadrant_only=True).as_set() == bezout_set_brute(p, "b1")


def test_oracle_equivalence_small():
    for p in range(3, 61):
        assert build_bezout_set(p, workers=1).as_set() == bezout_set_brute(p), p


def test_sorted_unique():
    pts = build_bezout_set(360).points
    keys = [tuple(r) for r in pts.tolist()]
    assert keys == sorted(set(keys))


def test_point_symmetry_and_quadrants():
    for p in range(3, 301):
        s = build_bezout_set(p, workers=1)
        pts = s.as_set()
        assert all((-x, -y) in pts for x, y in pts)
        st = set_stats(s, coverage=False)
        assert len(set(st.quadrants)) == 1
        assert sum(st.quadrants) == st.cardinality


def test_provenance_identities():
    for p in (7, 12, 45, 128, 300):
        s = build_bezout_set(p, provenance=True, workers=1)
        assert set(s.provenance) == s.as_set()
        for (x, y), sources in s.provenance.items():
            for P, Q, i in sources:
                assert abs(x * Q - y * P) == 1 and x * Q - y * P == i
                assert {abs(P), abs(Q)} != {p} and p in (abs(P), abs(Q))


def test_membership_oracle_agrees():
    p = 90
    pts = build_bezout_set(p).as_set()
    assert all(in_bezout_set(p, x, y) for x, y in pts)
    box = {(x, y) for x in range(-p, p + 1) for y in range(-p, p + 1)}
    assert not any(in_bezout_set(p, x, y) for x, y in box - pts)


def test_parallel_is_deterministic():
    one = build_bezout_set(5000, workers=1)
    three = build_bezout_set(5000, workers=3)
    assert csv_text(one.points) == csv_text(three.points)


def test_workers_env(monkeypatch):
    from bezout_arcs.set_builder import default_workers

    monkeypatch.setenv("BEZOUT_WORKERS", "2")
    assert default_workers() == 2


@pytest.mark.parametrize("p", [0, 1, 2])
def test_degenerate_p(p, caplog):
    with caplog.at_level(logging.WARNING):
        s = build_bezout_set(p)
    assert len(s) == 0
    assert "empty" in caplog.text
    st = set_stats(s)
    assert (st.cardinality, st.bbox, st.quadrants, st.arc_coverage) == (0, None, (0, 0, 0, 0), 0)


def test_p3():
    assert build_bezout_set(3).tolist() == sorted(bezout_set_brute(3))


def test_coprime_residues():
    assert coprime_residues(12).tolist() == [5, 7, 11]
    assert coprime_residues(2).tolist() == []


def test_stats_coverage_ordering():
    a = set_stats(build_bezout_set(46368, quadrant_only=True))
    b = set_stats(build_bezout_set(317811, quadrant_only=True))
    assert a.arc_coverage == Fraction(642, 12671)
    assert b.arc_coverage == 0
    assert a.arc_coverage > b.arc_coverage


def test_bad_mode():
    with pytest.raises(ValueError):
        build_bezout_set(10, mode="half")


def test_points_dtype():
    s = build_bezout_set(50)
    assert s.points.dtype == np.int64 and s.points.shape[1] == 2
