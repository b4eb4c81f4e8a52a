import math
import random
from fractions import Fraction

import pytest

from bezout_arcs.arcs import (
    arc_coverage,
    arc_point,
    arc_points_in_range,
    build_arc,
    curve_residual,
    formula_point,
    group_into_arcs,
    point_key,
)
from bezout_arcs.bezout import bezout_plus
from bezout_arcs.errors import MagnitudeError, NotCoprimeError
from bezout_arcs.nt_core import factorize
from oracles import b1_egcd

ARC_1024_817 = {-2: (529, 389), -1: (497, 381), 0: (465, 371), 1: (433, 359), 2: (401, 345), 3: (369, 329)}


def test_build_arc_1024():
    spec = build_arc(1024, 817)
    assert (spec.a, spec.b) == (465, 371)
    assert (spec.w, spec.root, spec.r, spec.s, spec.d) == (1, 32, 1, 11, 32)
    assert spec.coefficients == (Fraction(-1, 1024), Fraction(1282, 1024), Fraction(-1, 1024))
    assert spec.key == 1282


def test_arc_1024_817_rows():
    spec = build_arc(1024, 817)
    for n, xy in ARC_1024_817.items():
        assert arc_point(spec, n).xy == xy
        assert curve_residual(spec, xy) == 0
    pts = [pt.xy for pt in arc_points_in_range(spec)]
    assert all(xy in pts for xy in ARC_1024_817.values())
    # x - n*d walks down by d as n increases
    assert pts == sorted(pts, reverse=True)


def test_curve_residual_off_by_one():
    assert curve_residual(build_arc(1024, 817), (465, 372)) == 1024


def test_build_arc_9_2():
    spec = build_arc(9, 2)
    assert (spec.a, spec.b, spec.w, spec.root, spec.r, spec.s, spec.d) == (5, 1, 1, 3, 1, -1, 3)
    assert [pt.xy for pt in arc_points_in_range(spec)] == [(5, 1), (2, 1)]


def test_formula_leaves_the_box():
    # q + 2d = 8 is in (1, 9), but the closed form gives x = -1 there:
    # a valid solution of x*8 - y*9 = 1, just not the bounded one.
    spec = build_arc(9, 2)
    x, y = formula_point(spec, 2)
    assert (x, y) == (-1, -1)
    assert x * 8 - y * 9 == 1
    assert bezout_plus(9, 8).xy == (8, 7)
    assert arc_point(spec, 2) is None
    assert curve_residual(spec, (x, y)) == 0
    assert curve_residual(spec, (8, 7)) != 0


def test_squarefree_seed_single_point():
    spec = build_arc(7, 3)
    assert spec.w == 7 and spec.root == 7 and spec.d >= 7
    assert len(arc_points_in_range(spec)) == 1


def test_q_equals_a():
    # 3*3 = 9 = 1 mod 8, so the seed is its own inverse
    spec = build_arc(8, 3)
    assert spec.a == 3 and (spec.r, spec.s) == (1, 0) and spec.d == spec.root == 4
    for pt in arc_points_in_range(spec):
        assert curve_residual(spec, pt) == 0


def test_build_arc_errors():
    with pytest.raises(NotCoprimeError):
        build_arc(12, 8)
    with pytest.raises(MagnitudeError):
        build_arc(12, 1)
    with pytest.raises(MagnitudeError):
        build_arc(12, 13)


def brute_in_range(spec, window):
    # every n whose q + nd is admissible and whose closed form is the true B_1
    out = []
    for n in range(-window, window + 1):
        qn = spec.q + n * spec.d
        if 1 < qn < spec.p and formula_point(spec, n) == b1_egcd(spec.p, qn):
            out.append(n)
    return out


def test_n_range_matches_brute_force():
    for p in range(3, 160):
        for q in range(2, p):
            if math.gcd(p, q) == 1:
                spec = build_arc(p, q)
                lo, hi = spec.n_range()
                assert brute_in_range(spec, p) == list(range(lo, hi + 1)), (p, q)


def test_random_seeds_agree_with_egcd():
    rng = random.Random(7)
    for _ in range(300):
        # bias toward p with a large square factor so arcs are long
        p = rng.randint(2, 60) ** 2 * rng.randint(1, 30)
        if p < 3:
            continue
        q = rng.randrange(2, p)
        if math.gcd(p, q) != 1:
            continue
        spec = build_arc(p, q)
        assert (spec.d ** 2) % p == 0 and ((spec.q - spec.a) * spec.d) % p == 0
        for pt in arc_points_in_range(spec):
            qn = spec.key - pt.x
            assert math.gcd(p, qn) == 1
            assert pt.xy == b1_egcd(p, qn)
            assert curve_residual(spec, pt) == 0


def test_squarefree_degeneracy():
    for p in range(3, 600):
        if factorize(p).is_squarefree():
            for q in range(2, p):
                if math.gcd(p, q) == 1:
                    spec = build_arc(p, q)
                    assert spec.d >= p and spec.count_in_range() == 1


def test_group_into_arcs_p9():
    pts = [bezout_plus(9, q) for q in (2, 4, 5, 7, 8)]
    groups = group_into_arcs(9, pts)
    assert {k: [pt.xy for pt in v] for k, v in groups.items()} == {
        7: [(5, 1), (2, 1)],
        11: [(7, 3), (4, 3)],
        16: [(8, 7)],
    }


def test_group_into_arcs_table_1():
    groups = group_into_arcs(1024, list(ARC_1024_817.values()))
    assert list(groups) == [1282]
    assert group_into_arcs(1024, []) == {}


def test_groups_lie_on_their_curve():
    p = 1024
    pts = [bezout_plus(p, q) for q in range(3, p, 2)]
    for key, group in group_into_arcs(p, pts).items():
        for x, y, _ in group:
            assert p * y == -1 + key * x - x * x


def test_point_key_rejects_non_b1():
    with pytest.raises(ValueError):
        point_key(9, (2, 2))


def test_arc_coverage_small():
    assert arc_coverage(2) == (0, 0)
    covered, total = arc_coverage(30)
    assert (covered, total) == (0, 7)
    covered, total = arc_coverage(1024)
    assert total == 511 and covered > 0
