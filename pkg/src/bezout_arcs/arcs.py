"""
Quadratic arcs of B_1 points along arithmetic progressions q + n*d.

For a seed (p, q) with B_1(p, q) = (a, b): let w be the squarefree part of
p, root = sqrt(p*w), (r, s) = B_0(root, q - a) and d = r*root. Then for
every n with

    1 < q + n*d < p   and   0 < a - n*d < p

B_1(p, q + n*d) = (a - n*d, b - (q - a)*n*d/p - (n*d)**2/p), and all of
these lie on the parabola p*y = -1 + (a + q)*x - x**2.

The second condition is needed: outside it the formula still solves
x*(q + n*d) - y*p = 1 but lands outside the box 0 < x <= p, so it is not
the canonical B_1 (e.g. p = 9, q = 2, n = 2 gives (-1, -1), while
B_1(9, 8) = (8, 7)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bezout import BezoutPoint, bezout_plus, bezout_zero
from .errors import ConsistencyError, MagnitudeError
from .nt_core import gcd, squarefree_part


@dataclass(frozen=True)
class ArcSpec:
    p: int
    q: int
    a: int
    b: int
    w: int
    root: int
    r: int
    s: int
    d: int

    @property
    def key(self) -> int:
        """a + q; constant along the arc and determines the parabola."""
        return self.a + self.q

    # y = (a0_num + a1_num*x + a2_num*x**2) / p
    @property
    def a0_num(self) -> int:
        return -1

    @property
    def a1_num(self) -> int:
        return self.a + self.q

    @property
    def a2_num(self) -> int:
        return -1

    @property
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction]:
        return (
            Fraction(self.a0_num, self.p),
            Fraction(self.a1_num, self.p),
            Fraction(self.a2_num, self.p),
        )

    def n_range(self) -> tuple[int, int]:
        """Inclusive bounds of the in-range n; empty when lo > hi."""
        p, q, a, d = self.p, self.q, self.a, self.d
        # 1 < q + n*d < p
        lo = (1 - q) // d + 1
        hi = -((q - p) // d) - 1
        # 0 < a - n*d < p
        lo = max(lo, (a - p) // d + 1)
        hi = min(hi, -(-a // d) - 1)
        return lo, hi

    def count_in_range(self) -> int:
        lo, hi = self.n_range()
        return max(0, hi - lo + 1)


def _make_arc(p: int, q: int, w: int, root: int) -> ArcSpec:
    a, b, _ = bezout_plus(p, q)
    r, s, _ = bezout_zero(root, q - a)
    d = r * root
    spec = ArcSpec(p, q, a, b, w, root, r, s, d)
    if p * w != root * root or r <= 0 or d <= 0:
        raise ConsistencyError(f"bad auxiliary data in {spec}")
    if r * (q - a) != s * root:
        raise ConsistencyError(f"r/s does not match root/(q - a) in {spec}")
    if (d * d) % p or ((q - a) * d) % p:
        raise ConsistencyError(f"d^2 or (q - a)*d not divisible by p in {spec}")
    return spec


def build_arc(p: int, q: int) -> ArcSpec:
    """Arc data for the seed (p, q), with 2 <= q < p coprime."""
    if not 2 <= q < p:
        raise MagnitudeError(f"arc seed needs 2 <= q < p, got ({p}, {q})")
    w, root = squarefree_part(p)
    return _make_arc(p, q, w, root)


def formula_point(spec: ArcSpec, n: int) -> tuple[int, int]:
    """The closed-form pair for step n, with no range check."""
    p, nd = spec.p, n * spec.d
    y_num = spec.b * p - (spec.q - spec.a) * nd - nd * nd
    if y_num % p:
        raise ConsistencyError(f"non-integral y at n = {n} for {spec}")
    return spec.a - nd, y_num // p


def arc_point(spec: ArcSpec, n: int) -> BezoutPoint | None:
    """B_1(p, q + n*d) from the closed form, or None when n is out of range.

    The result is cross-checked against extended Euclid.
    """
    lo, hi = spec.n_range()
    if not lo <= n <= hi:
        return None
    x, y = formula_point(spec, n)
    expected = bezout_plus(spec.p, spec.q + n * spec.d)
    if expected.xy != (x, y):
        raise ConsistencyError(
            f"closed form gives ({x}, {y}) but B_1{(spec.p, spec.q + n * spec.d)}"
            f" = {expected.xy}"
        )
    return expected


def arc_points_in_range(spec: ArcSpec) -> list[BezoutPoint]:
    lo, hi = spec.n_range()
    return [arc_point(spec, n) for n in range(lo, hi + 1)]


def curve_residual(spec: ArcSpec, point) -> int:
    """p*y - (-1 + (a + q)*x - x**2); zero iff point is on the parabola."""
    x, y = point[0], point[1]
    return spec.p * y - (-1 + spec.key * x - x * x)


def point_key(p: int, point) -> int:
    """Recover a + q from a B_1(p, q) point (x, y) = (a, b)."""
    x, y = point[0], point[1]
    num = p * y + 1 + x * x
    if x == 0 or num % x:
        raise ValueError(f"{(x, y)} is not a B_1 point for p = {p}")
    return num // x


def group_into_arcs(p: int, points) -> dict[int, list]:
    """Group B_1(p, .) points by parabola, keyed by a + q.

    Keys come out ascending; each group is ordered by increasing n,
    i.e. decreasing x.
    """
    groups: dict[int, list] = {}
    for pt in points:
        groups.setdefault(point_key(p, pt), []).append(pt)
    return {k: sorted(groups[k], key=lambda pt: -pt[0]) for k in sorted(groups)}


def arc_coverage(p: int) -> tuple[int, int]:
    """(covered, total) over the seeds 2 <= q < p coprime to p.

    B_1(p, q) is covered when it is an in-range point of some arc that has
    at least two in-range points.
    """
    if p < 3:
        return 0, 0
    w, root = squarefree_part(p)
    total = 0
    covered: set[int] = set()
    for q in range(2, p):
        if gcd(p, q) == 1:
            total += 1
            spec = _make_arc(p, q, w, root)
            lo, hi = spec.n_range()
            if hi > lo:
                covered.update(q + n * spec.d for n in range(lo, hi + 1))
    return len(covered), total

