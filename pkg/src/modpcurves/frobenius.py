"""Traces of Frobenius a_ell by exact point counting over F_ell.

Good primes: a_ell = ell + 1 - #E(F_ell), counted with a Legendre-symbol scan
over x (naive O(ell); the toolkit never needs ell beyond desk scale).
Bad primes follow the standard conventions: +1 split multiplicative,
-1 nonsplit, 0 additive.
"""

from __future__ import annotations

from .arith import legendre_symbol
from .tate import ADDITIVE, GOOD, SPLIT_MULT, tate_local
from .weierstrass import WeierstrassModel, discriminant, invariants, minimal_model


class PrimeTooLarge(Exception):
    pass


DEFAULT_COUNT_BOUND = 10**6


def count_points(E: WeierstrassModel, ell: int) -> int:
    """#E(F_ell) including the point at infinity (any reduction type)."""
    a1, a2, a3, a4, a6 = E.coeffs
    if ell == 2:
        n = 1
        for x in (0, 1):
            for y in (0, 1):
                if (y * y + a1 * x * y + a3 * y
                        - x**3 - a2 * x * x - a4 * x - a6) % 2 == 0:
                    n += 1
        return n
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    # complete the square: (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
    n = 1
    for x in range(ell):
        g = (((4 * x + b2) * x + 2 * b4) * x + b6) % ell
        n += 1 + legendre_symbol(g, ell)
    return n


def ap(E: WeierstrassModel, ell: int, count_bound: int = DEFAULT_COUNT_BOUND) -> int:
    """Trace of Frobenius at ell (minimal model; bad-prime conventions)."""
    if ell > count_bound:
        raise PrimeTooLarge(f"ell = {ell} exceeds counting bound {count_bound}")
    Emin, _ = minimal_model(E)
    if discriminant(Emin) % ell != 0:
        a = ell + 1 - count_points(Emin, ell)
        assert a * a < 4 * ell, (E, ell, a)
        return a
    ld = tate_local(Emin, ell)
    if ld.reduction == GOOD:
        return ell + 1 - count_points(Emin, ell)
    if ld.reduction == ADDITIVE:
        return 0
    return 1 if ld.reduction == SPLIT_MULT else -1
