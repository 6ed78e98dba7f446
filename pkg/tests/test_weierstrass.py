import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modpcurves.arith import valuation
from modpcurves.weierstrass import (NotSquarefree, SingularModel,
                                    WeierstrassModel, discriminant,
                                    invariants, isomorphic, minimal_model,
                                    parse_curve, quadratic_twist, transform)

coeff = st.integers(min_value=-50, max_value=50)
models = st.builds(WeierstrassModel, coeff, coeff, coeff, coeff, coeff)


def test_parse_curve():
    E = parse_curve("[1, 1, 0, -22, -812]")
    assert E.coeffs == (1, 1, 0, -22, -812)
    with pytest.raises(ValueError):
        parse_curve("[1,2,3]")


def test_invariants_identity_bulk(rng):
    # 10^4 random integral models: 1728 * Delta = c4^3 - c6^2 and the b8 relation
    checked = 0
    while checked < 10**4:
        E = WeierstrassModel(*(rng.randint(-200, 200) for _ in range(5)))
        try:
            inv = invariants(E)
        except SingularModel:
            continue
        assert 1728 * inv.discriminant == inv.c4**3 - inv.c6**2
        assert 4 * inv.b8 == inv.b2 * inv.b6 - inv.b4**2
        checked += 1


@given(models)
@settings(max_examples=200, deadline=None)
def test_invariants_identity_hypothesis(E):
    try:
        inv = invariants(E)
    except SingularModel:
        return
    assert 1728 * inv.discriminant == inv.c4**3 - inv.c6**2


def test_singular_model_raises():
    with pytest.raises(SingularModel):
        invariants(parse_curve("[0,0,0,0,0]"))


@given(models, st.integers(min_value=1, max_value=3),
       st.integers(min_value=-3, max_value=3),
       st.integers(min_value=-2, max_value=2),
       st.integers(min_value=-3, max_value=3))
@settings(max_examples=150, deadline=None)
def test_transform_scales_discriminant(E, u, r, s, t):
    try:
        discriminant(E)
    except SingularModel:
        return
    try:
        F = transform(E, u, r, s, t)
    except ValueError:
        return  # u-scaling demands divisibility; not every model qualifies
    assert discriminant(E) == u**12 * discriminant(F)


def test_minimal_model_known():
    E = parse_curve("[0,-6,0,-136,-408]")
    Emin, (u, r, s, t) = minimal_model(E)
    assert Emin.coeffs == (0, 0, 0, -148, -696)
    assert discriminant(E) == u**12 * discriminant(Emin)


def test_minimal_model_idempotent():
    for text in ("[1,1,0,-22,-812]", "[0,0,0,29,-123]", "[0,0,1,-1,0]"):
        E = parse_curve(text)
        Emin, _ = minimal_model(E)
        again, (u, r, s, t) = minimal_model(Emin)
        assert again == Emin and (u, r, s, t) == (1, 0, 0, 0)


def test_minimal_model_undoes_scaling():
    E = parse_curve("[0,-1,1,-10,-20]")  # already minimal
    blown = transform(E, 1, 6, 2, 9)
    blown = WeierstrassModel(*(c * u for c, u in
                               zip(blown.coeffs, (6, 36, 216, 1296, 46656))))
    Emin, _ = minimal_model(blown)
    assert discriminant(Emin) == discriminant(E)
    assert isomorphic(Emin, E)


def test_kraus_conditions_on_minimal_models():
    # v3(c6) != 2 and the 2-adic condition hold for every minimal model
    for text in ("[1,1,0,-22,-812]", "[0,0,0,-13,-24]", "[0,0,0,0,-26]",
                 "[0,1,0,4,4]", "[0,0,1,0,-7]"):
        Emin, _ = minimal_model(parse_curve(text))
        inv = invariants(Emin)
        if inv.c6 != 0:
            assert valuation(inv.c6, 3) != 2
        ok2 = inv.c6 % 4 == 3 or (inv.c4 % 16 == 0 and inv.c6 % 32 in (0, 8))
        assert ok2


def test_quadratic_twist_invariants():
    E = parse_curve("[0,0,0,-1,1]")
    for d in (-1, 2, 5, -7):
        Ed = quadratic_twist(E, d)
        je, jd = invariants(minimal_model(E)[0]), invariants(Ed)
        # same j-invariant
        assert (je.j_numerator * jd.j_denominator
                == jd.j_numerator * je.j_denominator)
    with pytest.raises(NotSquarefree):
        quadratic_twist(E, 4)


def test_twist_by_one_is_isomorphic():
    E, _ = minimal_model(parse_curve("[1,1,0,-22,-812]"))
    assert isomorphic(quadratic_twist(E, 1), E)
