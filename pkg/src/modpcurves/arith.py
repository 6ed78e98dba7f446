"""Exact integer arithmetic shared by every module.

Factorization (trial division + Brent-cycle Pollard rho, with deterministic
Miller-Rabin certification of every reported prime), p-adic valuations and
Legendre symbols.  Everything works on arbitrary-precision ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt


class IncompleteFactorization(Exception):
    """A composite cofactor resisted splitting within the effort bound."""

    def __init__(self, cofactor: int):
        self.cofactor = cofactor
        super().__init__(f"could not split composite cofactor {cofactor}")


# Deterministic for all n < 3.3 * 10^24 (standard base set).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_LIMIT = 10**6


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for the ranges this toolkit meets."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _small_primes(limit: int) -> list[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i in range(limit + 1) if sieve[i]]


_PRIMES_1K = _small_primes(1000)


def primes_below(limit: int) -> list[int]:
    """Ascending list of primes < limit."""
    if limit <= 1001:
        return [p for p in _PRIMES_1K if p < limit]
    return [p for p in _small_primes(limit - 1)]


@dataclass(frozen=True)
class Factorization:
    """Signed factored integer: sign * prod(p^e), primes strictly increasing."""

    sign: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        assert self.sign in (1, -1)
        last = 1
        for p, e in self.factors:
            assert p > last and e >= 1, (p, e)
            last = p

    def value(self) -> int:
        n = self.sign
        for p, e in self.factors:
            n *= p**e
        return n

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1" if self.sign == 1 else "-1"
        body = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)
        return body if self.sign == 1 else "-" + body


def _pollard_rho(n: int, budget: int) -> int | None:
    """Brent-cycle rho on composite odd n.  Returns a nontrivial factor, or
    None if the iteration budget runs out first (factors of size p take on
    the order of sqrt(p) iterations)."""
    if n % 2 == 0:
        return 2
    used = 0
    c = 1
    while used < budget:
        x = y = 2
        d = 1
        f = lambda v: (v * v + c) % n
        # Brent: batch gcds
        q = 1
        m = 128
        r = 1
        while d == 1 and used < budget:
            x = y
            for _ in range(r):
                y = f(y)
            k = 0
            while k < r and d == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = f(y)
                    q = q * abs(x - y) % n
                d = gcd(q, n)
                k += m
            used += 2 * r
            r *= 2
        if d == n:
            # backtrack
            d = 1
            y = ys
            while d == 1:
                y = f(y)
                d = gcd(abs(x - y), n)
        if 1 < d < n:
            return d
        c += 1
    return None


def factor(n: int, effort_bound: int = 10**7) -> Factorization:
    """Complete prime factorization of a nonzero integer.

    Trial division below 10^6, then Pollard rho with an iteration budget of
    effort_bound (enough for prime factors up to roughly effort_bound^2).
    Every reported prime is Miller-Rabin certified.  Raises
    IncompleteFactorization with the remaining cofactor if the budget runs
    out on a composite.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    sign = 1 if n > 0 else -1
    n = abs(n)
    out: dict[int, int] = {}
    for p in _PRIMES_1K:
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n > 1 and n < 10**6:
        out[n] = out.get(n, 0) + 1
        n = 1
    # trial division above 1000 up to 10^6, wheel mod 6
    if n > 1 and not is_prime(n):
        d = 1009
        step = 4  # 1009 % 6 == 1 -> next candidates alternate +4, +2
        while d <= _TRIAL_LIMIT and d * d <= n:
            while n % d == 0:
                out[d] = out.get(d, 0) + 1
                n //= d
            d += step
            step = 6 - step
    # remaining cofactor: prime, or split with rho
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m, effort_bound)
        if d is None:
            raise IncompleteFactorization(m)
        stack.append(d)
        stack.append(m // d)
    factors = tuple(sorted(out.items()))
    return Factorization(sign, factors)


def valuation(n: int, p: int) -> int:
    """Largest e with p^e | n; n must be nonzero."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    e = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        e += 1
    return e


def legendre_symbol(a: int, p: int) -> int:
    """Quadratic residue symbol (a|p) for an odd prime p; values -1, 0, +1."""
    a %= p
    if a == 0:
        return 0
    t = pow(a, (p - 1) // 2, p)
    return 1 if t == 1 else -1
