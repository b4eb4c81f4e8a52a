"""
Exact integer number theory: gcd, extended Euclid, factorization,
totient, modular powers and squarefree parts.

Python integers are unbounded, so nothing here can overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import DomainError, ZeroInputError


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of |a| and |b|. Raises on gcd(0, 0)."""
    if a == 0 and b == 0:
        raise ZeroInputError("gcd(0, 0) is undefined")
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def extended_euclid(p: int, q: int) -> tuple[int, int, int]:
    """Return (g, x, y) with x*q + y*p == g == gcd(p, q).

    The pair is the one produced by running Euclid on (q, p) and back
    substituting; for p, q >= 2 it satisfies |x| < p and |y| < q. When
    g == 1 exactly one of x, y is positive and the other is <= 0.
    """
    if p < 1 or q < 1:
        raise DomainError(f"extended_euclid needs positive arguments, got ({p}, {q})")
    # invariant: old_r == old_x*q + old_y*p, r == x*q + y*p
    old_r, r = q, p
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        k = old_r // r
        old_r, r = r, old_r - k * r
        old_x, x = x, old_x - k * x
        old_y, y = y, old_y - k * y
    return old_r, old_x, old_y


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of a positive integer as (prime, exponent) pairs."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 1
        for prime, exp in self.factors:
            if prime <= last or exp < 1 or not is_prime(prime):
                raise ValueError(f"invalid factor ({prime}, {exp}) for {self.n}")
            last = prime
            prod *= prime**exp
        if prod != self.n:
            raise ValueError(f"factors multiply to {prod}, not {self.n}")

    def primes(self) -> list[int]:
        return [prime for prime, _ in self.factors]

    def is_squarefree(self) -> bool:
        return all(exp == 1 for _, exp in self.factors)

    def __str__(self):
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


def factorize(n: int) -> Factorization:
    """Factor n by trial division. Fine for n up to about 10**12."""
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    factors = []
    m = n
    for f in (2, 3):
        e = 0
        while m % f == 0:
            m //= f
            e += 1
        if e:
            factors.append((f, e))
    # candidates 6k +/- 1
    f, step = 5, 2
    while f * f <= m:
        e = 0
        while m % f == 0:
            m //= f
            e += 1
        if e:
            factors.append((f, e))
        f += step
        step = 6 - step
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def totient(n: int) -> int:
    """Euler's phi, from the factorization of n."""
    result = n
    for prime, _ in factorize(n).factors:
        result -= result // prime
    return result


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """base**exp mod modulus by left-to-right square and multiply."""
    if modulus < 2:
        raise DomainError(f"modulus must be >= 2, got {modulus}")
    if exp < 0:
        raise DomainError("negative exponents are not supported")
    base %= modulus
    result = 1
    for bit in bin(exp)[2:]:
        result = result * result % modulus
        if bit == "1":
            result = result * base % modulus
    return result


def squarefree_part(n: int) -> tuple[int, int]:
    """Smallest w with n*w a perfect square, and the root sqrt(n*w).

    w is the product of the primes dividing n to an odd power.
    """
    w = 1
    root = 1
    for prime, exp in factorize(n).factors:
        if exp % 2:
            w *= prime
        root *= prime ** ((exp + 1) // 2)
    assert root * root == n * w and isqrt(n * w) == root
    return w, root
