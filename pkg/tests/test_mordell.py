from math import isqrt

from modpcurves.mordell import (SIntegerPoint, scan_twisted_mordell,
                                search_mordell)


def naive_integral_points(k, bound):
    """Direct reference scan without the residue pre-filter."""
    pts = []
    for x in range(-bound, bound + 1):
        t = x**3 + k
        if t < 0:
            continue
        y = isqrt(t)
        if y * y == t:
            pts.append((x, y))
    return pts


def test_k1_exact_point_set():
    pts = search_mordell(1, set(), 100, 0)
    assert {(P.x_num, P.y_num) for P in pts} \
        == {(-1, 0), (0, 1), (0, -1), (2, 3), (2, -3)}


def test_k_minus26():
    pts = search_mordell(-26, set(), 1000, 0)
    coords = {(P.x_num, P.y_num) for P in pts}
    assert (3, 1) in coords and (3, -1) in coords
    assert all(P.on_curve(-26) for P in pts)


def test_k_891216_empty():
    assert search_mordell(891216, {2063}, 10**5, 1) == []


def test_matches_naive_scan():
    for k in (1, -2, 17, -26, 1090, 24, -39):
        got = {(P.x_num, P.y_num) for P in search_mordell(k, set(), 300, 0)}
        want = set()
        for x, y in naive_integral_points(k, 300):
            want.add((x, y))
            if y:
                want.add((x, -y))
        assert got == want, k


def test_s_integral_denominators():
    # Y^2 = X^3 + 17 has the S-integral point (1/4, 33/8) for S = {2}
    pts = search_mordell(17, {2}, 10**4, 2)
    xs = {(P.x_num, P.denom) for P in pts}
    assert (1, 2) in xs
    assert all(P.on_curve(17) for P in pts)
    # denominator 1 points are still found
    assert (-2, 1) in {(P.x_num, P.denom) for P in pts}


def test_point_validation():
    P = SIntegerPoint(1, 33, 2)
    assert P.x.denominator == 4 and P.y.denominator == 8
    assert P.on_curve(17)
    assert not P.on_curve(18)


def test_scan_twisted_shape():
    rep = scan_twisted_mordell(353, 1, 1, set(), 500)
    assert rep.N == 353 and len(rep.cases) == 4  # two signs x a in {0,1}
    ks = {k for k, _ in rep.cases}
    assert ks == {353, -353, 3 * 353, -3 * 353}
    for k, pts, in rep.cases:
        assert all(P.on_curve(k) for P in pts)
    for k, x, y, delta, d in rep.candidate_c4c6():
        assert x**3 - y**2 == 1728 * delta
