"""
The Bezout set of p: all B_{+-1} points of the pairs (+-p, +-q) and
(+-q, +-p) for 1 < q < p coprime to p.

Every point comes from the positive-orthant B_1(p, q) = (a, b):

    B_-1(p, q) = (p - a, q - b)
    B_1(q, p)  = (q - b, p - a)
    B_-1(q, p) = (b, a)

and a sign change of the source moves to the other coordinate. Points are
deduplicated and sorted lexicographically, so the result does not depend
on how the work is split.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .arcs import arc_coverage
from .bezout import bezout_signed
from .nt_core import extended_euclid, factorize

log = logging.getLogger(__name__)

MODES = ("full", "b1", "b1-flip", "positive")
WORKERS_ENV = "BEZOUT_WORKERS"

# (order, i): order "pq" is the source (+-p, +-q), "qp" is (+-q, +-p)
_SOURCES = (("pq", 1), ("pq", -1), ("qp", 1), ("qp", -1))
_SIGNS = ((1, 1), (1, -1), (-1, 1), (-1, -1))  # (sign of p, sign of q)


@dataclass
class BezoutSet:
    p: int
    mode: str
    points: np.ndarray  # shape (n, 2), int64, sorted, unique
    provenance: dict | None = field(default=None, repr=False)

    def __len__(self):
        return len(self.points)

    def as_set(self) -> set[tuple[int, int]]:
        return set(map(tuple, self.points.tolist()))

    def tolist(self) -> list[tuple[int, int]]:
        return [tuple(pt) for pt in self.points.tolist()]


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def coprime_residues(p: int) -> np.ndarray:
    """All 1 < q < p with gcd(p, q) = 1, ascending."""
    if p < 3:
        return np.zeros(0, dtype=np.int64)
    mask = np.ones(p, dtype=bool)
    mask[:2] = False
    for prime in factorize(p).primes():
        mask[::prime] = False
    return np.flatnonzero(mask).astype(np.int64)


def b1_table(p: int, qs) -> tuple[np.ndarray, np.ndarray]:
    """Positive-orthant B_1(p, q) = (a, b) for each q in qs."""
    a = np.empty(len(qs), dtype=np.int64)
    b = np.empty(len(qs), dtype=np.int64)
    for k, q in enumerate(np.asarray(qs).tolist()):
        _, x, y = extended_euclid(p, q)
        if y > 0:
            a[k], b[k] = p + x, q - y
        else:
            a[k], b[k] = x, -y
    return a, b


def _slices(p: int, qs: np.ndarray, mode: str) -> list[tuple[np.ndarray, np.ndarray]]:
    a, b = b1_table(p, qs)
    c, e = p - a, qs - b  # B_-1(p, q)
    base = {
        ("pq", 1): (a, b),
        ("pq", -1): (c, e),
        ("qp", 1): (e, c),
        ("qp", -1): (b, a),
    }
    if mode == "b1":
        return [base["pq", 1]]
    if mode == "b1-flip":
        return [base["pq", 1], base["qp", 1]]
    if mode == "positive":
        return [base[src] for src in _SOURCES]
    out = []
    for sp, sq in _SIGNS:
        for order, i in _SOURCES:
            x, y = base[order, i]
            # first coordinate takes the sign of the second source entry
            sx, sy = (sq, sp) if order == "pq" else (sp, sq)
            out.append((sx * x, sy * y))
    return out


def _encode(p: int, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    # order-preserving packing of (x, y) with |x|, |y| <= p
    return (xs + p) * (2 * p + 1) + (ys + p)


def _unique_keys(p: int, qs: np.ndarray, mode: str) -> np.ndarray:
    parts = [_encode(p, x, y) for x, y in _slices(p, qs, mode)]
    if not parts:
        return np.zeros(0, dtype=np.int64)
    return np.unique(np.concatenate(parts))


def _unique_keys_star(args):
    return _unique_keys(*args)


def build_bezout_set(
    p: int,
    quadrant_only: bool = False,
    *,
    mode: str | None = None,
    workers: int | None = None,
    provenance: bool = False,
) -> BezoutSet:
    """Build the Bezout set of p, or one of its positive-quadrant slices.

    mode is one of "full" (default), "b1" (B_1(p, q) only; what
    quadrant_only selects), "b1-flip" (B_1(p, q) and B_1(q, p)) and
    "positive" (B_{+-1} of both orders, unsigned).
    """
    if mode is None:
        mode = "b1" if quadrant_only else "full"
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    if p <= 2:
        log.warning("p = %d: there is no q with 1 < q < p; the set is empty", p)
        empty = np.zeros((0, 2), dtype=np.int64)
        return BezoutSet(p, mode, empty, {} if provenance else None)
    if 2 * p + 1 > 3_000_000_000:
        raise ValueError(f"p = {p} is too large for int64 point packing")

    qs = coprime_residues(p)
    workers = default_workers() if workers is None else max(1, workers)
    if p >= 100_000:
        log.info("p = %d: %d seeds, %d worker(s)", p, len(qs), workers)

    if workers == 1 or len(qs) < 2 * workers:
        keys = _unique_keys(p, qs, mode)
    else:
        chunks = np.array_split(qs, workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_unique_keys_star, [(p, c, mode) for c in chunks]))
        keys = np.unique(np.concatenate(parts))

    xs, ys = np.divmod(keys, 2 * p + 1)
    points = np.stack([xs - p, ys - p], axis=1)
    prov = _provenance(p, qs, mode) if provenance else None
    if prov is not None and set(prov) != set(map(tuple, points.tolist())):
        raise AssertionError("provenance and vectorised construction disagree")
    return BezoutSet(p, mode, points, prov)


def _provenance(p: int, qs: np.ndarray, mode: str) -> dict:
    """Point -> list of (P, Q, i) sources, built with bezout_signed one by one."""
    prov: dict[tuple[int, int], list] = {}
    if mode == "full":
        signs = _SIGNS
    else:
        signs = ((1, 1),)
    wanted = {
        "full": _SOURCES,
        "positive": _SOURCES,
        "b1": (("pq", 1),),
        "b1-flip": (("pq", 1), ("qp", 1)),
    }[mode]
    for q in qs.tolist():
        for sp, sq in signs:
            for order, i in wanted:
                src = (sp * p, sq * q) if order == "pq" else (sq * q, sp * p)
                x, y, _ = bezout_signed(i, *src)
                prov.setdefault((x, y), []).append((src[0], src[1], i))
    return prov


@dataclass(frozen=True)
class SetStats:
    cardinality: int
    bbox: tuple[int, int, int, int] | None  # (xmin, ymin, xmax, ymax)
    quadrants: tuple[int, int, int, int]  # counts in quadrants I..IV
    arc_coverage: Fraction | None


def set_stats(bset: BezoutSet, coverage: bool = True) -> SetStats:
    pts = bset.points
    if len(pts) == 0:
        return SetStats(0, None, (0, 0, 0, 0), Fraction(0) if coverage else None)
    x, y = pts[:, 0], pts[:, 1]
    quads = (
        int(np.sum((x > 0) & (y > 0))),
        int(np.sum((x < 0) & (y > 0))),
        int(np.sum((x < 0) & (y < 0))),
        int(np.sum((x > 0) & (y < 0))),
    )
    bbox = (int(x.min()), int(y.min()), int(x.max()), int(y.max()))
    frac = None
    if coverage:
        covered, total = arc_coverage(bset.p)
        frac = Fraction(covered, total) if total else Fraction(0)
    return SetStats(len(pts), bbox, quads, frac)
