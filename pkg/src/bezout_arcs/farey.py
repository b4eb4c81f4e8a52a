"""Farey sequences and the neighbour/Bezout correspondence.

The predecessor b/a of q/p in F_p is B_1(p, q) read as a fraction, and the
successor d/c is B_{-1}(p, q).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bezout import bezout_minus, bezout_plus
from .errors import DomainError, MagnitudeError, NotCoprimeError
from .nt_core import gcd


@dataclass(frozen=True)
class FareySeq:
    order: int
    entries: tuple[Fraction, ...]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def index(self, x: Fraction) -> int:
        return self.entries.index(x)


def _next_term(n: int, left: tuple[int, int], mid: tuple[int, int]) -> tuple[int, int]:
    # (num, den) pairs; consecutive terms of F_n determine the one after them
    (b, a), (q, p) = left, mid
    k = (n + a) // p
    return k * q - b, k * p - a


def farey_sequence(n: int) -> FareySeq:
    """F_n in increasing order, generated term by term (no sorting)."""
    if n < 1:
        raise DomainError(f"Farey order must be >= 1, got {n}")
    left, mid = (0, 1), (1, n)
    terms = [left]
    while left != (1, 1):
        terms.append(mid)
        left, mid = mid, _next_term(n, left, mid)
    return FareySeq(n, tuple(Fraction(num, den) for num, den in terms))


def _check(p: int, q: int):
    if p < 2 or not 1 <= q < p:
        raise MagnitudeError(f"need p >= 2 and 1 <= q < p, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise NotCoprimeError(f"{q}/{p} is not reduced")


def predecessor(p: int, q: int) -> Fraction:
    """Entry just before q/p in F_p."""
    _check(p, q)
    if q == 1:
        return Fraction(0, 1)
    a, b, _ = bezout_plus(p, q)
    return Fraction(b, a)


def successor(p: int, q: int) -> Fraction:
    """Entry just after q/p in F_p."""
    _check(p, q)
    if q == 1:
        num, den = _next_term(p, (0, 1), (1, p))
        return Fraction(num, den)
    c, d, _ = bezout_minus(p, q)
    return Fraction(d, c)


def mediant(x: Fraction, y: Fraction) -> Fraction:
    """(num_x + num_y) / (den_x + den_y), reduced."""
    return Fraction(x.numerator + y.numerator, x.denominator + y.denominator)
