"""
Exhaustive self-checks, one suite per family of identities. Each suite
compares the library against brute force or against the stated identity
and collects every counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd as _gcd

from . import arcs, bezout, farey, nt_core, set_builder

DEFAULT_BOUNDS = {
    "identities": 300,
    "propositions": 300,
    "theta": 500,
    "farey": 150,
    "arcs": 300,
    "sets": 60,
}
MAX_BOUNDS = {
    "identities": 5000,
    "propositions": 5000,
    "theta": 5000,
    "farey": 2000,
    "arcs": 5000,
    "sets": 400,
}


@dataclass
class Report:
    suite: str
    bound: int
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond: bool, what: str):
        self.checked += 1
        if not cond:
            self.failures.append(what)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return (f"{status} {self.suite} (bound {self.bound}): "
                f"{self.checked} checks, {len(self.failures)} failures")


def _seeds(bound: int):
    for p in range(3, bound + 1):
        for q in range(2, p):
            if _gcd(p, q) == 1:
                yield p, q


def _scan_b1(p: int, q: int):
    # smallest a in 1..p with a*q = 1 mod p
    for a in range(1, p + 1):
        if (a * q - 1) % p == 0:
            return a, (a * q - 1) // p
    return None


def identities(bound: int) -> Report:
    rep = Report("identities", bound)
    for p in range(1, bound + 1):
        for q in range(1, min(p, 60) + 1):
            g, x, y = nt_core.extended_euclid(p, q)
            rep.check(x * q + y * p == g == _gcd(p, q), f"extended_euclid({p}, {q})")
    for p, q in _seeds(bound):
        a, b, _ = bezout.bezout_plus(p, q)
        rep.check(a * q - b * p == 1 and 0 < a < p and 0 < b < q, f"B_1({p}, {q}) = {(a, b)}")
        c, d, _ = bezout.bezout_minus(p, q)
        rep.check((c, d) == (p - a, q - b) and 0 < c < p and 0 < d < q,
                  f"B_-1({p}, {q}) = {(c, d)}")
        if p <= 300:
            rep.check((a, b) == _scan_b1(p, q), f"B_1({p}, {q}) vs scan")
        for sp in (1, -1):
            for sq in (1, -1):
                for i in (1, -1):
                    P, Q = sp * p, sq * q
                    x, y, _ = bezout.bezout_signed(i, P, Q)
                    rep.check(x * Q - y * P == i, f"B_{i}{(P, Q)} = {(x, y)}")
    return rep


def propositions(bound: int) -> Report:
    rep = Report("propositions", bound)
    F = bezout.flip
    for p, q in _seeds(bound):
        rep.check(F(F((p, q))) == (p, q), f"(a) at {(p, q)}")
        plus = bezout.bezout_plus(p, q).xy
        minus = bezout.bezout_minus(p, q).xy
        rep.check(bezout.bezout_minus(*F((p, q))).xy == F(plus), f"(b) at {(p, q)}")
        zero = bezout.bezout_zero(p, q).xy
        rep.check((plus[0] + minus[0], plus[1] + minus[1]) == zero == (p, q),
                  f"(c) at {(p, q)}")
        a, b = plus
        if p - q >= 2:
            rep.check(bezout.bezout_minus(p, p - q).xy == (a, a - b), f"(d) at {(p, q)}")
        if a >= 2:
            rep.check(bezout.bezout_plus(p, a).xy == (q, b), f"(e) at {(p, q)}")
        rep.check(bezout.bezout_plus(q, p).xy == (q - b, p - a), f"(f) at {(p, q)}")
    return rep


def theta(bound: int) -> Report:
    rep = Report("theta", bound)
    for p in range(2, bound + 1):
        phi = nt_core.totient(p)
        for q in range(1, p):
            if _gcd(p, q) != 1:
                continue
            t = bezout.theta(p, q)
            rep.check(t * q % p == 1 % p, f"theta_{p}({q}) = {t}")
            rep.check(nt_core.mod_pow(q, phi, p) == 1 % p, f"Euler at {(p, q)}")
            if q >= 2:
                rep.check(bezout.bezout_plus_via_theta(p, q) == bezout.bezout_plus(p, q),
                          f"theta route at {(p, q)}")
    return rep


def _farey_brute(n: int) -> list[Fraction]:
    return sorted({Fraction(h, k) for k in range(1, n + 1) for h in range(k + 1)})


def farey_suite(bound: int) -> Report:
    rep = Report("farey", bound)
    for n in range(1, bound + 1):
        seq = list(farey.farey_sequence(n))
        rep.check(seq == _farey_brute(n), f"F_{n} differs from enumeration")
        for left, mid in zip(seq, seq[1:]):
            b, a = left.numerator, left.denominator
            q, p = mid.numerator, mid.denominator
            rep.check(a * q - b * p == 1, f"F_{n}: {left}, {mid} not unimodular")
        for left, mid, right in zip(seq, seq[1:], seq[2:]):
            rep.check(farey.mediant(left, right) == mid, f"F_{n}: mediant at {mid}")
        if n >= 2:
            pos = {x: k for k, x in enumerate(seq)}
            for q in range(1, n):
                if _gcd(n, q) != 1:
                    continue
                k = pos[Fraction(q, n)]
                rep.check(farey.predecessor(n, q) == seq[k - 1], f"predecessor({n}, {q})")
                rep.check(farey.successor(n, q) == seq[k + 1], f"successor({n}, {q})")
    return rep


def arcs_suite(bound: int) -> Report:
    rep = Report("arcs", bound)
    for p, q in _seeds(bound):
        spec = arcs.build_arc(p, q)
        lo, hi = spec.n_range()
        for n in range(lo, hi + 1):
            qn = q + n * spec.d
            pt = arcs.arc_point(spec, n)
            rep.check(_gcd(p, qn) == 1, f"arc {(p, q)}: q + nd = {qn} not coprime")
            rep.check(pt.xy == _scan_b1(p, qn) if p <= 300 else True,
                      f"arc {(p, q)}, n = {n}: {pt.xy} vs scan")
            rep.check(arcs.curve_residual(spec, pt) == 0, f"arc {(p, q)}, n = {n}: residual")
            rep.check(pt.x + qn == spec.key, f"arc {(p, q)}, n = {n}: key drift")
        if nt_core.factorize(p).is_squarefree():
            rep.check(spec.d >= p and spec.count_in_range() == 1,
                      f"squarefree p = {p}, q = {q}: {spec.count_in_range()} points")
    return rep


def _set_brute(p: int) -> set[tuple[int, int]]:
    out = set()
    for q in range(2, p):
        if _gcd(p, q) != 1:
            continue
        for sp in (1, -1):
            for sq in (1, -1):
                for P, Q in ((sp * p, sq * q), (sq * q, sp * p)):
                    for i in (1, -1):
                        sx, sy = (Q > 0) - (Q < 0), (P > 0) - (P < 0)
                        for ax in range(1, abs(P) + 1):
                            num = ax * abs(Q) - i
                            if num % abs(P) == 0 and 0 < num // abs(P) <= abs(Q):
                                x, y = sx * ax, sy * (num // abs(P))
                                if x * Q - y * P == i:
                                    out.add((x, y))
    return out


def sets_suite(bound: int) -> Report:
    rep = Report("sets", bound)
    for p in range(3, bound + 1):
        got = set_builder.build_bezout_set(p, workers=1).as_set()
        rep.check(got == _set_brute(p), f"Bezout set of {p} differs from brute force")
    return rep


SUITES = {
    "identities": identities,
    "propositions": propositions,
    "theta": theta,
    "farey": farey_suite,
    "arcs": arcs_suite,
    "sets": sets_suite,
}


def run_suite(name: str, bound: int | None = None) -> Report:
    if bound is None:
        bound = DEFAULT_BOUNDS[name]
    if not 1 <= bound <= MAX_BOUNDS[name]:
        raise ValueError(f"bound for {name} must be in 1..{MAX_BOUNDS[name]}")
    return SUITES[name](bound)
