"""Mod-p fingerprints of curves: trace vectors, Serre conductors, comparisons.

A trace vector records Trace(rhobar(Frob_ell)) mod p for primes ell up to a
bound.  At a good prime this is a_ell mod p.  At a multiplicative prime where
the mod-p representation is unramified (p | v_ell(Delta_min)) the Frobenius
eigenvalues are a_ell and ell * a_ell, so the trace is a_ell * (1 + ell); a
ramified multiplicative prime and every additive prime is skipped.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import Factorization, factor, primes_below, valuation
from .frobenius import ap
from .tate import ADDITIVE, GOOD, tate_local
from .weierstrass import WeierstrassModel, discriminant, minimal_model

GOOD_Q = "good"
BAD_CONVENTION = "bad-prime-convention"
RAMIFIED_SKIP = "ramified-skip"

IRREDUCIBLE = "irreducible"
UNDETERMINED = "undetermined"


class NotSemistableOutsideP(Exception):
    def __init__(self, ell: int):
        self.ell = ell
        super().__init__(f"additive reduction at {ell}: semistable rule does not apply")


class CharacteristicMismatch(Exception):
    pass


@dataclass(frozen=True)
class TraceVector:
    p: int
    entries: tuple[tuple[int, int, str], ...]  # (ell, trace mod p, quality)

    def trace_at(self, ell: int):
        for l, tr, q in self.entries:
            if l == ell:
                return tr, q
        return None

    def serialize(self) -> str:
        body = " ".join(f"{l}:{t}" if q != RAMIFIED_SKIP else f"{l}:*"
                        for l, t, q in self.entries)
        return f"p={self.p}; {body}"


@dataclass(frozen=True)
class SerreData:
    p: int
    serre_conductor: Factorization
    ramification_notes: tuple[tuple[int, str], ...]


def trace_vector(E: WeierstrassModel, p: int, bound: int) -> TraceVector:
    Emin, _ = minimal_model(E)
    disc = discriminant(Emin)
    entries = []
    for ell in primes_below(bound + 1):
        if ell == p:
            continue
        if disc % ell != 0:
            entries.append((ell, ap(Emin, ell) % p, GOOD_Q))
            continue
        ld = tate_local(Emin, ell)
        if ld.reduction == GOOD:
            entries.append((ell, ap(Emin, ell) % p, GOOD_Q))
        elif ld.reduction == ADDITIVE:
            entries.append((ell, 0, RAMIFIED_SKIP))
        else:
            v = valuation(disc, ell)
            if v % p == 0:
                # unramified: eigenvalues a_ell and ell * a_ell
                entries.append((ell, ap(Emin, ell) * (1 + ell) % p, BAD_CONVENTION))
            else:
                entries.append((ell, 0, RAMIFIED_SKIP))
    return TraceVector(p, tuple(entries))


def serre_conductor_semistable(E: WeierstrassModel, p: int) -> SerreData:
    """Prime-to-p Serre conductor under the semistable-outside-p hypothesis.

    A multiplicative prime ell != p survives in N(rhobar) exactly when
    p does not divide v_ell(Delta_min)."""
    Emin, _ = minimal_model(E)
    disc = discriminant(Emin)
    kept = []
    notes = []
    for ell, _ in factor(disc).factors:
        ld = tate_local(Emin, ell)
        if ld.reduction == GOOD:
            continue
        if ell == p:
            notes.append((ell, "residue characteristic, excluded by definition"))
            continue
        if ld.reduction == ADDITIVE:
            raise NotSemistableOutsideP(ell)
        v = valuation(disc, ell)
        if v % p == 0:
            notes.append((ell, f"dropped: p | v_{ell}(Delta) = {v}"))
        else:
            kept.append((ell, 1))
            notes.append((ell, f"kept: v_{ell}(Delta) = {v} not divisible by {p}"))
    return SerreData(p, Factorization(1, tuple(sorted(kept))), tuple(notes))


def is_reducible_semistable(E: WeierstrassModel, p: int, bound: int) -> str:
    """Sufficient irreducibility test: some good ell <= bound with
    a_ell != 1 + ell mod p rules out the reducible case."""
    Emin, _ = minimal_model(E)
    disc = discriminant(Emin)
    for ell in primes_below(bound + 1):
        if ell == p or disc % ell == 0:
            continue
        if (ap(Emin, ell) - 1 - ell) % p != 0:
            return IRREDUCIBLE
    return UNDETERMINED


def compare_reps(A: TraceVector, B: TraceVector):
    """Compare two trace vectors on their common non-skipped window.

    Returns "match-up-to-bound" or ("mismatch", ell) at the smallest
    disagreeing prime."""
    if A.p != B.p:
        raise CharacteristicMismatch(f"p = {A.p} vs {B.p}")
    db = {l: (t, q) for l, t, q in B.entries}
    for l, t, q in A.entries:
        if q == RAMIFIED_SKIP or l not in db:
            continue
        tb, qb = db[l]
        if qb == RAMIFIED_SKIP:
            continue
        if t != tb:
            return ("mismatch", l)
    return "match-up-to-bound"


def sturm_bound(level: int, weight: int = 2) -> int:
    """Comparison horizon floor(weight/12 * [SL2(Z):Gamma0(level)]), min 1."""
    index = Fraction(level)
    for q, _ in factor(level).factors:
        index *= Fraction(q + 1, q)
    b = int(Fraction(weight, 12) * index)
    return max(b, 1)
