import pytest

from conftest import ALL_CURVES
from modpcurves.arith import legendre_symbol, primes_below
from modpcurves.frobenius import PrimeTooLarge, ap, count_points
from modpcurves.tate import GOOD, tate_local
from modpcurves.weierstrass import (discriminant, minimal_model, parse_curve,
                                    quadratic_twist)


def brute_force_count(E, ell):
    """O(ell^2) affine scan, independent of the Legendre-symbol fast path."""
    a1, a2, a3, a4, a6 = E.coeffs
    n = 1
    for x in range(ell):
        for y in range(ell):
            if (y * y + a1 * x * y + a3 * y
                    - (x**3 + a2 * x * x + a4 * x + a6)) % ell == 0:
                n += 1
    return n


def test_ap_against_brute_force_oracle():
    ells = [ell for ell in primes_below(51)]
    curves = [parse_curve(t) for t in ALL_CURVES]
    curves += [quadratic_twist(E, d) for E, d in
               zip(curves, [-1, 2, -2, 5, -5, 7, -7, 10, -10, 13])]
    assert len(curves) >= 50
    for E in curves:
        Emin, _ = minimal_model(E)
        disc = discriminant(Emin)
        for ell in ells:
            assert count_points(Emin, ell) == brute_force_count(Emin, ell)
            if disc % ell != 0:
                assert ap(E, ell) == ell + 1 - brute_force_count(Emin, ell)


def test_hasse_bound_to_500():
    E = parse_curve("[1,1,0,-22,-812]")
    F = parse_curve("[0,0,1,-1,0]")
    for ell in primes_below(501):
        for C in (E, F):
            if discriminant(C) % ell:
                a = ap(C, ell)
                assert a * a < 4 * ell


def test_bad_prime_conventions():
    E = parse_curve("[1,1,0,-22,-812]")
    assert ap(E, 2) == -1  # nonsplit
    assert ap(E, 353) == 1  # split
    assert ap(parse_curve("[0,0,0,0,1]"), 2) == 0  # additive


def test_known_ap_values():
    X0_11 = parse_curve("[0,-1,1,-10,-20]")
    assert ap(X0_11, 2) == -2
    assert ap(X0_11, 3) == -1
    assert ap(X0_11, 5) == 1
    assert ap(X0_11, 7) == -2
    assert ap(X0_11, 13) == 4


def test_twist_equivariance(rng):
    # ap(E_d, ell) = (d|ell) * ap(E, ell) at good odd ell not dividing d
    pool = [parse_curve(t) for t in ALL_CURVES]
    pairs = 0
    while pairs < 20:
        E = rng.choice(pool)
        d = rng.choice([-1, 2, -2, 3, 5, -5, 7, 10, -11, 13])
        Ed = quadratic_twist(E, d)
        for ell in primes_below(50):
            if ell == 2 or d % ell == 0:
                continue
            if discriminant(minimal_model(E)[0]) % ell == 0:
                continue
            if tate_local(minimal_model(Ed)[0], ell).reduction != GOOD:
                continue
            assert ap(Ed, ell) == legendre_symbol(d, ell) * ap(E, ell), (E, d, ell)
        pairs += 1


def test_prime_too_large():
    with pytest.raises(PrimeTooLarge):
        ap(parse_curve("[0,0,1,-1,0]"), 10**7 + 19)
