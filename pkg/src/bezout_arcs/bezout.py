"""
Bezout transformations B_{-1}, B_0, B_1 on coprime pairs.

B_i(p, q) is the unique coprime (a, b) with a*q - b*p = i and
0 < a <= p, 0 < b <= q. For i = +-1 this needs p, q >= 2. Signed inputs
are handled by moving the sign of q onto a and the sign of p onto b.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import ConsistencyError, MagnitudeError, NotCoprimeError, ZeroInputError
from .nt_core import extended_euclid, gcd, mod_pow, totient


class BezoutPoint(NamedTuple):
    x: int
    y: int
    index: int

    @property
    def xy(self) -> tuple[int, int]:
        return self.x, self.y


class CoprimePair(NamedTuple):
    p: int
    q: int

    @classmethod
    def checked(cls, p: int, q: int, min_abs: int = 1) -> "CoprimePair":
        if p == 0 or q == 0:
            raise ZeroInputError(f"pair ({p}, {q}) has a zero component")
        if abs(p) < min_abs or abs(q) < min_abs:
            raise MagnitudeError(
                f"pair ({p}, {q}): both |p| and |q| must be at least {min_abs}"
            )
        if gcd(p, q) != 1:
            raise NotCoprimeError(f"pair ({p}, {q}) is not coprime (gcd {gcd(p, q)})")
        return cls(p, q)


def _sign(n: int) -> int:
    return (n > 0) - (n < 0)


def _verified(x: int, y: int, i: int, p: int, q: int) -> BezoutPoint:
    if x * q - y * p != i:
        raise ConsistencyError(f"({x}, {y}) fails x*q - y*p = {i} for ({p}, {q})")
    return BezoutPoint(x, y, i)


def _plus_minus(p: int, q: int) -> tuple[tuple[int, int], tuple[int, int]]:
    # the positive-orthant B_1 and B_{-1}, read off one extended Euclid run
    CoprimePair.checked(p, q, min_abs=2)
    if p < 0 or q < 0:
        raise MagnitudeError(f"({p}, {q}) is not in the positive orthant")
    _, x, y = extended_euclid(p, q)
    if y > 0:
        minus = (-x, y)
        plus = (p + x, q - y)
    else:
        plus = (x, -y)
        minus = (p - x, q + y)
    return plus, minus


def bezout_plus(p: int, q: int) -> BezoutPoint:
    """B_1(p, q) for coprime p, q >= 2.

    >>> bezout_plus(6, 5)
    BezoutPoint(x=5, y=4, index=1)
    """
    (a, b), _ = _plus_minus(p, q)
    if not (0 < a <= p and 0 < b <= q):
        raise ConsistencyError(f"B_1({p}, {q}) = ({a}, {b}) out of bounds")
    return _verified(a, b, 1, p, q)


def bezout_minus(p: int, q: int) -> BezoutPoint:
    """B_{-1}(p, q) for coprime p, q >= 2."""
    _, (a, b) = _plus_minus(p, q)
    if not (0 < a <= p and 0 < b <= q):
        raise ConsistencyError(f"B_-1({p}, {q}) = ({a}, {b}) out of bounds")
    return _verified(a, b, -1, p, q)


def bezout_zero(a: int, b: int) -> BezoutPoint:
    """B_0(a, b): the reduced pair with the same ratio and componentwise signs.

    A zero component reduces to a unit: B_0(a, 0) = (sign a, 0).
    """
    if a == 0 and b == 0:
        raise ZeroInputError("B_0(0, 0) is undefined")
    g = gcd(a, b)
    r, s = abs(a) // g, abs(b) // g
    return _verified(r * _sign(a) if a else 0, s * _sign(b) if b else 0, 0, a, b)


def bezout_signed(i: int, p: int, q: int) -> BezoutPoint:
    """B_i(p, q) for i = +-1 and any coprime p, q with |p|, |q| >= 2."""
    if i == 1:
        a, b, _ = bezout_plus(abs(p), abs(q))
    elif i == -1:
        a, b, _ = bezout_minus(abs(p), abs(q))
    else:
        raise ValueError(f"bezout_signed index must be +1 or -1, got {i}")
    return _verified(a * _sign(q), b * _sign(p), i, p, q)


def bezout(i: int, p: int, q: int) -> BezoutPoint:
    """Dispatch on the index: B_0 for i == 0, the signed B_{+-1} otherwise."""
    if i == 0:
        return bezout_zero(p, q)
    return bezout_signed(i, p, q)


def flip(pair):
    """F(p, q) = (q, p)."""
    p, q = pair[0], pair[1]
    return type(pair)(q, p) if isinstance(pair, CoprimePair) else (q, p)


def theta(p: int, q: int) -> int:
    """Inverse of q in (Z/pZ)*, computed as q**(phi(p) - 1) mod p."""
    if p < 2:
        raise MagnitudeError(f"theta needs p >= 2, got {p}")
    if not 1 <= q < p:
        raise MagnitudeError(f"theta needs 1 <= q < p, got q = {q}")
    if gcd(p, q) != 1:
        raise NotCoprimeError(f"{q} is not a unit mod {p}")
    return mod_pow(q, totient(p) - 1, p)


def bezout_plus_via_theta(p: int, q: int) -> BezoutPoint:
    """B_1(p, q) = (theta_p(q), (q*theta_p(q) - 1) / p)."""
    if q < 2:
        raise MagnitudeError(f"B_1 needs q >= 2, got {q}")
    t = theta(p, q)
    num = q * t - 1
    if num % p:
        raise ConsistencyError(f"q*theta - 1 = {num} not divisible by {p}")
    return _verified(t, num // p, 1, p, q)
