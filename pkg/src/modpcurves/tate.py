"""Tate's algorithm: reduction types, Kodaira symbols, conductor exponents.

The full case chain is implemented (including the p = 2, 3 subcases and the
I_n* sub-loop), not the p >= 5 shortcuts.  Non-minimal local models are
detected by the final case and rescaled in place, so the reported data always
refers to a model minimal at p.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import Factorization, factor, legendre_symbol, valuation
from .weierstrass import (SingularModel, WeierstrassModel, discriminant,
                          transform)

GOOD = "good"
SPLIT_MULT = "split multiplicative"
NONSPLIT_MULT = "nonsplit multiplicative"
ADDITIVE = "additive"

_F_CAP = {2: 8, 3: 5}


@dataclass(frozen=True)
class LocalData:
    prime: int
    reduction: str
    conductor_exponent: int
    kodaira: str
    discriminant_valuation: int

    def __post_init__(self):
        cap = _F_CAP.get(self.prime, 2)
        assert self.conductor_exponent <= cap, self
        if self.reduction == GOOD:
            assert self.conductor_exponent == 0 and self.discriminant_valuation == 0
        elif self.reduction in (SPLIT_MULT, NONSPLIT_MULT):
            assert self.conductor_exponent == 1


def _val(n: int, p: int, big: int = 10**9) -> int:
    return big if n == 0 else valuation(n, p)


def _roots_with_multiplicity(coeffs: list[int], p: int) -> list[tuple[int, int]]:
    """Roots in F_p of the polynomial with given (ascending) coefficients,
    with multiplicities.  Brute force scan; p stays desk-sized here."""
    out = []
    cs = [c % p for c in coeffs]
    for r in range(p):
        # synthetic division until nonzero remainder
        mult = 0
        work = list(cs)
        while True:
            acc = 0
            quot = []
            for c in reversed(work):
                acc = (acc * r + c) % p
                quot.append(acc)
            if acc != 0:
                break
            mult += 1
            work = list(reversed(quot[:-1]))
            if not work:
                break
        if mult:
            out.append((r, mult))
    return out


def _singular_point(E: WeierstrassModel, p: int) -> tuple[int, int]:
    """The unique singular point of the reduction mod p (exists when p | disc)."""
    a1, a2, a3, a4, a6 = E.coeffs
    if p == 2:
        for x in range(2):
            for y in range(2):
                fy = (2 * y + a1 * x + a3) % 2
                fx = (a1 * y - 3 * x * x - 2 * a2 * x - a4) % 2
                f = (y * y + a1 * x * y + a3 * y - x**3 - a2 * x * x - a4 * x - a6) % 2
                if f == fy == fx == 0:
                    return x, y
        raise SingularModel(f"no singular point mod 2 on {E}")
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    # singular x is a multiple root of 4x^3 + b2 x^2 + 2 b4 x + b6 mod p
    for r, mult in _roots_with_multiplicity([b6, 2 * b4, b2, 4], p):
        if mult >= 2:
            inv2 = pow(2, -1, p)
            y = (-(a1 * r + a3) * inv2) % p
            return r, y
    raise SingularModel(f"no singular point mod {p} on {E}")


def _quadratic_double_root(a: int, b: int, c: int, p: int):
    """For a x^2 + b x + c mod p with a a unit: None if two distinct roots
    in an algebraic closure, else the double root in F_p."""
    if p == 2:
        if b % 2:
            return None
        # x^2 + (c/a): double root sqrt(c/a) = c*a (inverses are identities mod 2)
        return (c * a) % 2
    disc = (b * b - 4 * a * c) % p
    if disc != 0:
        return None
    return (-b * pow(2 * a, -1, p)) % p


def _quadratic_has_root(a: int, b: int, c: int, p: int) -> bool:
    if p == 2:
        return any((a * x * x + b * x + c) % 2 == 0 for x in (0, 1))
    disc = b * b - 4 * a * c
    return legendre_symbol(disc, p) >= 0


def tate_local(E: WeierstrassModel, p: int) -> LocalData:
    """Run Tate's algorithm on E at p.

    Returns reduction type, Kodaira symbol and conductor exponent for a model
    minimal at p (the input is minimized locally first if necessary).
    """
    if discriminant(E) == 0:
        raise SingularModel(str(E))
    while True:
        result = _tate_once(E, p)
        if result is not None:
            return result
        # model was non-minimal at p: u = p rescale and rerun
        E = transform(E, p, 0, 0, 0)


def _tate_once(E, p):
    n = valuation(discriminant(E), p)
    if n == 0:
        return LocalData(p, GOOD, 0, "I0", 0)

    # move the singular point to the origin
    x0, y0 = _singular_point(E, p)
    E = transform(E, 1, x0, 0, y0)
    a1, a2, a3, a4, a6 = E.coeffs
    b2 = a1 * a1 + 4 * a2

    if b2 % p != 0:
        # multiplicative: tangent directions from T^2 + a1 T - a2
        split = _quadratic_has_root(1, a1, -a2, p)
        red = SPLIT_MULT if split else NONSPLIT_MULT
        return LocalData(p, red, 1, f"I{n}", n)

    if _val(a6, p) < 2:
        return LocalData(p, ADDITIVE, n, "II", n)
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    if _val(b8, p) < 3:
        return LocalData(p, ADDITIVE, n - 1, "III", n)
    b6 = a3 * a3 + 4 * a6
    if _val(b6, p) < 3:
        return LocalData(p, ADDITIVE, n - 2, "IV", n)

    # normalize: p | a1, a2;  p^2 | a3, a4;  p^3 | a6
    if p == 2:
        s = a2 % 2
    else:
        s = (-a1 * pow(2, -1, p)) % p
    E = transform(E, 1, 0, s, 0)
    a1, a2, a3, a4, a6 = E.coeffs
    if p == 2:
        t = 2 * ((a6 // 4) % 2)
    else:
        t = p * ((-(a3 // p) * pow(2, -1, p)) % p)
    E = transform(E, 1, 0, 0, t)
    a1, a2, a3, a4, a6 = E.coeffs
    assert a1 % p == 0 and a2 % p == 0
    assert a3 % p**2 == 0 and a4 % p**2 == 0 and a6 % p**3 == 0, (E, p)

    # cubic P(T) = T^3 + a2/p T^2 + a4/p^2 T + a6/p^3 over F_p
    b = a2 // p
    c = a4 // p**2
    d = a6 // p**3
    roots = _roots_with_multiplicity([d, c, b, 1], p)
    max_mult = max((m for _, m in roots), default=1)

    if max_mult == 1:
        return LocalData(p, ADDITIVE, n - 4, "I0*", n)

    if max_mult == 2:
        # type I_m*: move the double root to T = 0 and loop
        alpha = next(r for r, m in roots if m == 2)
        E = transform(E, 1, p * alpha, 0, 0)
        a1, a2, a3, a4, a6 = E.coeffs
        m = 1
        k = 2
        while True:
            # Y-quadratic Y^2 + (a3/p^k) Y - a6/p^(2k)
            rho = _quadratic_double_root(1, a3 // p**k, -(a6 // p ** (2 * k)), p)
            if rho is None:
                return LocalData(p, ADDITIVE, n - 4 - m, f"I{m}*", n)
            E = transform(E, 1, 0, 0, rho * p**k)
            a1, a2, a3, a4, a6 = E.coeffs
            m += 1
            # X-quadratic (a2/p) X^2 + (a4/p^(k+1)) X + a6/p^(2k+1)
            xi = _quadratic_double_root(a2 // p, a4 // p ** (k + 1),
                                        a6 // p ** (2 * k + 1), p)
            if xi is None:
                return LocalData(p, ADDITIVE, n - 4 - m, f"I{m}*", n)
            E = transform(E, 1, xi * p**k, 0, 0)
            a1, a2, a3, a4, a6 = E.coeffs
            m += 1
            k += 1
            assert m <= n, "I_n* loop failed to terminate"

    # triple root: translate it to T = 0
    alpha = next(r for r, m in roots if m == 3)
    E = transform(E, 1, p * alpha, 0, 0)
    a1, a2, a3, a4, a6 = E.coeffs

    # Y^2 + (a3/p^2) Y - a6/p^4
    rho = _quadratic_double_root(1, a3 // p**2, -(a6 // p**4), p)
    if rho is None:
        return LocalData(p, ADDITIVE, n - 6, "IV*", n)
    E = transform(E, 1, 0, 0, rho * p**2)
    a1, a2, a3, a4, a6 = E.coeffs

    if _val(a4, p) < 4:
        return LocalData(p, ADDITIVE, n - 7, "III*", n)
    if _val(a6, p) < 6:
        return LocalData(p, ADDITIVE, n - 8, "II*", n)
    return None  # non-minimal at p; caller rescales


def conductor(E: WeierstrassModel) -> Factorization:
    """Conductor of E as a factorization, from local Tate data."""
    from .weierstrass import minimal_model

    Emin, _ = minimal_model(E)
    disc = discriminant(Emin)
    out = []
    for p, _ in factor(disc).factors:
        ld = tate_local(Emin, p)
        if ld.conductor_exponent:
            out.append((p, ld.conductor_exponent))
    return Factorization(1, tuple(sorted(out)))
