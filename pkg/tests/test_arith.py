import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modpcurves.arith import (Factorization, IncompleteFactorization, factor,
                              is_prime, legendre_symbol, primes_below,
                              valuation)


def test_factor_round_trip_exhaustive_to_one_million():
    bad = [n for n in range(1, 10**6 + 1) if factor(n).value() != n]
    assert bad == []


def test_factor_factors_are_prime_sample(rng):
    for _ in range(2000):
        n = rng.randint(2, 10**9)
        f = factor(n)
        assert f.value() == n
        for p, e in f.factors:
            assert e >= 1 and is_prime(p)


def test_factor_negative_and_units():
    assert factor(-12).sign == -1
    assert factor(-12).value() == -12
    assert factor(1).factors == ()
    assert factor(-1) == Factorization(-1, ())
    with pytest.raises(ValueError):
        factor(0)


def test_factor_large_semiprime():
    p, q = 1000003, 1000033
    assert factor(p * q).factors == ((p, 1), (q, 1))


def test_incomplete_factorization_reports_cofactor():
    # product of two 40-digit-ish primes is far beyond the effort bound
    p = 2**127 - 1
    q = 2**89 - 1
    with pytest.raises(IncompleteFactorization) as exc:
        factor(p * q, effort_bound=10**6)
    assert exc.value.cofactor > 1


def test_is_prime_small_exhaustive():
    sieve = set(primes_below(10**4))
    for n in range(10**4):
        assert is_prime(n) == (n in sieve)


def test_is_prime_known_large():
    assert is_prime(2**61 - 1)
    assert not is_prime(2**67 - 1)  # 193707721 * 761838257287


def test_primes_below():
    assert primes_below(2) == []
    assert primes_below(20) == [2, 3, 5, 7, 11, 13, 17, 19]


@given(st.integers(min_value=1, max_value=10**9),
       st.sampled_from([2, 3, 5, 7, 11, 13]))
@settings(max_examples=300, deadline=None)
def test_valuation_definition(n, p):
    v = valuation(n, p)
    assert n % p**v == 0 and n % p**(v + 1) != 0


def test_valuation_of_zero_rejected():
    with pytest.raises(ValueError):
        valuation(0, 2)


@given(st.integers(min_value=-100, max_value=100))
@settings(max_examples=200, deadline=None)
def test_legendre_matches_euler(a):
    for p in (3, 5, 7, 11, 13, 101):
        ls = legendre_symbol(a, p)
        euler = pow(a % p, (p - 1) // 2, p)
        assert ls % p == euler


def test_legendre_multiplicative(rng):
    for _ in range(500):
        p = rng.choice([3, 5, 7, 13, 353, 2063])
        a, b = rng.randint(1, 10**6), rng.randint(1, 10**6)
        assert (legendre_symbol(a * b, p)
                == legendre_symbol(a, p) * legendre_symbol(b, p))


def test_factorization_str():
    assert str(factor(2**3 * 5 * 2063)) == "2^3 * 5 * 2063"
    assert str(factor(353)) == "353"
    assert str(factor(1)) == "1"
