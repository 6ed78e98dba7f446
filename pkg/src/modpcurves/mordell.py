"""Bounded search for S-integral points on Mordell curves Y^2 = X^3 + k.

An S-integral point is written (x_num / d^2, y_num / d^3) with d supported
on S and gcd(x_num, d) = 1.  Clearing denominators, (x_num, y_num) is an
integral point on Y^2 = X^3 + k d^6, so the scan runs over x_num with an
exact integer-square test on x_num^3 + k d^6, pre-filtered by quadratic
residue tables so that only a few percent of candidates reach isqrt.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

_FILTER_MOD = 64 * 63  # residue pre-filter modulus
_EXTRA_MODS = (65, 11)
_SQUARES = {m: {(i * i) % m for i in range(m)}
            for m in (_FILTER_MOD, *_EXTRA_MODS)}


@dataclass(frozen=True)
class SIntegerPoint:
    x_num: int
    y_num: int
    denom: int

    def __post_init__(self):
        assert self.denom > 0 and gcd(self.x_num, self.denom) == 1 or self.denom == 1

    @property
    def x(self) -> Fraction:
        return Fraction(self.x_num, self.denom**2)

    @property
    def y(self) -> Fraction:
        return Fraction(self.y_num, self.denom**3)

    def on_curve(self, k: int) -> bool:
        return self.y**2 == self.x**3 + k


def _denominators(S, exponent_bound):
    primes = sorted(S)
    out = []
    for exps in itertools.product(range(exponent_bound + 1), repeat=len(primes)):
        d = 1
        for p, e in zip(primes, exps):
            d *= p**e
        out.append(d)
    return sorted(set(out))


def _integral_points(K: int, bound: int, coprime_to: int = 1):
    """Integral (x, y), y >= 0, on Y^2 = X^3 + K with |x| <= bound."""
    m = _FILTER_MOD
    sq = _SQUARES[m]
    allowed = [r for r in range(m) if (r * r * r + K) % m in sq]
    hits = []
    start = -bound
    for r in allowed:
        x = start + ((r - start) % m)
        while x <= bound:
            t = x**3 + K
            if t >= 0 and all((t % mm) in _SQUARES[mm] for mm in _EXTRA_MODS):
                y = isqrt(t)
                if y * y == t and (coprime_to == 1 or gcd(x, coprime_to) == 1):
                    hits.append((x, y))
            x += m
    return hits


def search_mordell(k: int, S, height_bound: int,
                   exponent_bound: int) -> list[SIntegerPoint]:
    """All S-integral points on Y^2 = X^3 + k with denominator d^2 | x for
    d = prod p^e (p in S, e <= exponent_bound) and |x_num| <= height_bound.

    Exhaustive within that numerator box; exact arithmetic throughout."""
    assert k != 0
    points = []
    for d in _denominators(S, exponent_bound):
        for x, y in _integral_points(k * d**6, height_bound, coprime_to=d):
            points.append(SIntegerPoint(x, y, d))
            if y:
                points.append(SIntegerPoint(x, -y, d))
    points.sort(key=lambda P: (P.denom, P.x_num, P.y_num))
    assert all(P.on_curve(k) for P in points)
    return points


@dataclass(frozen=True)
class TwistedScanReport:
    N: int
    S: tuple[int, ...]
    height_bound: int
    exponent_bound: int
    cases: tuple[tuple[int, tuple[SIntegerPoint, ...]], ...]

    @property
    def hits(self):
        return tuple((k, pts) for k, pts in self.cases if pts)

    def candidate_c4c6(self):
        """Each point (X, Y) yields a candidate invariant pair c4 = X,
        c6 = Y with 1728 * Delta = X^3 - Y^2 = -k * d^6."""
        out = []
        for k, pts in self.cases:
            for P in pts:
                delta_num = P.x_num**3 - P.y_num**2
                if delta_num % 1728 == 0:
                    out.append((k, P.x_num, P.y_num, delta_num // 1728, P.denom))
        return out


def scan_twisted_mordell(N: int, a_bound: int, b_bound: int, S,
                         height_bound: int,
                         exponent_bound: int = 0) -> TwistedScanReport:
    """Search Y^2 = X^3 + s * 3^a * N^b for S-integral points, for both
    signs s and 0 <= a <= a_bound, 1 <= b <= b_bound."""
    cases = []
    for a in range(a_bound + 1):
        for b in range(1, b_bound + 1):
            for sign in (1, -1):
                k = sign * 3**a * N**b
                pts = search_mordell(k, S, height_bound, exponent_bound)
                cases.append((k, tuple(pts)))
    return TwistedScanReport(N, tuple(sorted(S)), height_bound,
                             exponent_bound, tuple(cases))
