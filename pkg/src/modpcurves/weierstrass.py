"""Long Weierstrass models over Q: invariants, minimal models, twists.

A curve is the integer quintuple [a1,a2,a3,a4,a6] of
y^2 + a1*xy + a3*y = x^3 + a2*x^2 + a4*x + a6.
Global minimization is Laska-Kraus-Connell: strip 12th powers from the
discriminant subject to Kraus' integrality conditions at 2 and 3, then
rebuild the reduced model from (c4, c6).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd

from .arith import Factorization, factor, valuation


class SingularModel(Exception):
    pass


class NotSquarefree(Exception):
    pass


@dataclass(frozen=True)
class WeierstrassModel:
    a1: int
    a2: int
    a3: int
    a4: int
    a6: int

    @property
    def coeffs(self) -> tuple[int, int, int, int, int]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def __str__(self) -> str:
        return "[%d,%d,%d,%d,%d]" % self.coeffs


@dataclass(frozen=True)
class CurveInvariants:
    b2: int
    b4: int
    b6: int
    b8: int
    c4: int
    c6: int
    discriminant: int
    j_numerator: int
    j_denominator: int


def parse_curve(text: str) -> WeierstrassModel:
    """Parse the bracket literal "[a1,a2,a3,a4,a6]" (whitespace tolerated)."""
    m = re.fullmatch(r"\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,"
                     r"\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*", text)
    if not m:
        raise ValueError(f"not a curve literal: {text!r}")
    return WeierstrassModel(*(int(g) for g in m.groups()))


def invariants(E: WeierstrassModel) -> CurveInvariants:
    a1, a2, a3, a4, a6 = E.coeffs
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = (b2 * b6 - b4 * b4) // 4
    assert 4 * b8 == b2 * b6 - b4 * b4
    c4 = b2 * b2 - 24 * b4
    c6 = -b2**3 + 36 * b2 * b4 - 216 * b6
    disc = (c4**3 - c6**2) // 1728
    assert 1728 * disc == c4**3 - c6**2
    if disc == 0:
        raise SingularModel(str(E))
    g = gcd(c4**3, disc)
    jn, jd = c4**3 // g, abs(disc) // g
    if disc < 0:
        jn = -jn
    return CurveInvariants(b2, b4, b6, b8, c4, c6, disc, jn, jd)


def discriminant(E: WeierstrassModel) -> int:
    return invariants(E).discriminant


def transform(E: WeierstrassModel, u: int, r: int, s: int, t: int) -> WeierstrassModel:
    """Apply (x, y) -> (u^2 x + r, u^3 y + u^2 s x + t); u may be rational only
    in the sense that all new coefficients must come out integral."""
    a1, a2, a3, a4, a6 = E.coeffs
    A1 = a1 + 2 * s
    A2 = a2 - s * a1 + 3 * r - s * s
    A3 = a3 + r * a1 + 2 * t
    A4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t
    A6 = a6 + r * a4 + r * r * a2 + r**3 - t * a3 - t * t - r * t * a1
    new = []
    for k, A in ((1, A1), (2, A2), (3, A3), (4, A4), (6, A6)):
        q, rem = divmod(A, u**k)
        if rem:
            raise ValueError(f"transformation (u={u},r={r},s={s},t={t}) not integral")
        new.append(q)
    return WeierstrassModel(*new)


def _kraus_ok(c4: int, c6: int) -> bool:
    """Kraus: (c4, c6) comes from an integral model iff v3(c6) != 2 and
    (c6 = -1 mod 4, or 16 | c4 and c6 = 0 or 8 mod 32)."""
    ok3 = c6 == 0 or valuation(c6, 3) != 2
    ok2 = c6 % 4 == 3 or (c4 % 16 == 0 and c6 % 32 in (0, 8))
    return ok3 and ok2


def _model_from_c4c6(c4: int, c6: int) -> WeierstrassModel:
    """Connell's reconstruction of the reduced model with given invariants."""
    for b2 in range(-5, 7):
        if (b2 * b2 - c4) % 24:
            continue
        b4 = (b2 * b2 - c4) // 24
        if (-(b2**3) + 36 * b2 * b4 - c6) % 216:
            continue
        b6 = (-(b2**3) + 36 * b2 * b4 - c6) // 216
        a1 = b2 % 2
        a2 = (b2 - a1) // 4
        a3 = b6 % 2
        a6 = (b6 - a3) // 4
        if (b4 - a1 * a3) % 2:
            continue
        a4 = (b4 - a1 * a3) // 2
        E = WeierstrassModel(a1, a2, a3, a4, a6)
        iv = invariants(E)
        if (iv.c4, iv.c6) == (c4, c6):
            return E
    raise SingularModel(f"no integral model with c4={c4}, c6={c6}")


def minimal_model(E: WeierstrassModel) -> tuple[WeierstrassModel, tuple[int, int, int, int]]:
    """Globally minimal model and the transformation (u, r, s, t) onto it.

    u^12 * disc(minimal) == disc(E); idempotent on minimal models.
    """
    inv = invariants(E)
    c4, c6, disc = inv.c4, inv.c6, inv.discriminant
    u = 1
    for p, e in factor(disc).factors:
        if e < 12:
            continue
        d = e // 12
        if c4 != 0:
            d = min(d, valuation(c4, p) // 4)
        if c6 != 0:
            d = min(d, valuation(c6, p) // 6)
        if p in (2, 3):
            while d > 0 and not _kraus_ok(c4 // p ** (4 * d), c6 // p ** (6 * d)):
                d -= 1
        u *= p**d
    c4m, c6m = c4 // u**4, c6 // u**6
    Emin = _model_from_c4c6(c4m, c6m)
    # recover (r, s, t) exactly
    s, rem = divmod(u * Emin.a1 - E.a1, 2)
    assert rem == 0
    r, rem = divmod(u * u * Emin.a2 - E.a2 + s * E.a1 + s * s, 3)
    assert rem == 0
    t, rem = divmod(u**3 * Emin.a3 - E.a3 - r * E.a1, 2)
    assert rem == 0
    assert transform(E, u, r, s, t) == Emin
    return Emin, (u, r, s, t)


def quadratic_twist(E: WeierstrassModel, d: int) -> WeierstrassModel:
    """Minimal model of the twist of E by the squarefree integer d."""
    if d == 0:
        raise NotSquarefree("d = 0")
    for p, e in factor(d).factors:
        if e >= 2:
            raise NotSquarefree(f"{d} is divisible by {p}^2")
    inv = invariants(E)
    twisted = WeierstrassModel(0, 0, 0, -27 * d * d * inv.c4, -54 * d**3 * inv.c6)
    return minimal_model(twisted)[0]


def isomorphic(E: WeierstrassModel, F: WeierstrassModel) -> bool:
    """Q-isomorphism test via equality of reduced minimal models."""
    return minimal_model(E)[0] == minimal_model(F)[0]


def discriminant_factorization(E: WeierstrassModel) -> Factorization:
    return factor(discriminant(E))
