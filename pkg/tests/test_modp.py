import pytest

from modpcurves.modp import (BAD_CONVENTION, GOOD_Q, IRREDUCIBLE,
                             RAMIFIED_SKIP, UNDETERMINED,
                             CharacteristicMismatch, NotSemistableOutsideP,
                             compare_reps, is_reducible_semistable,
                             serre_conductor_semistable, sturm_bound,
                             trace_vector)
from modpcurves.weierstrass import parse_curve


def test_serre_conductor_values():
    cases = [("[1,1,0,-22,-812]", 3, ((353, 1),)),
             ("[1,0,1,-80,-275]", 5, ((67, 1),)),
             ("[1,0,1,-89,316]", 7, ((5, 1), (11, 1)))]
    for text, p, want in cases:
        sd = serre_conductor_semistable(parse_curve(text), p)
        assert sd.serre_conductor.factors == want


def test_serre_conductor_notes_record_drops():
    sd = serre_conductor_semistable(parse_curve("[1,1,0,-22,-812]"), 3)
    dropped = {ell for ell, note in sd.ramification_notes if "dropped" in note}
    assert dropped == {2}  # v_2(Delta) = 18, divisible by 3


def test_serre_conductor_requires_semistable():
    with pytest.raises(NotSemistableOutsideP) as exc:
        serre_conductor_semistable(parse_curve("[0,0,0,0,1]"), 5)
    assert exc.value.ell in (2, 3)


def test_trace_vector_2118():
    tv = trace_vector(parse_curve("[1,1,0,-22,-812]"), 3, 37)
    traces = [t for _, t, _ in tv.entries]
    assert traces == [0, 1, 2, 1, 1, 0, 1, 0, 0, 1, 0]
    ell2 = tv.trace_at(2)
    assert ell2 == (0, BAD_CONVENTION)  # a_2 * (1 + 2) = -3 = 0 mod 3
    assert tv.trace_at(5) == (1, GOOD_Q)
    assert tv.trace_at(3) is None  # residue characteristic excluded


def test_trace_vector_ramified_skip():
    # at 353, v(Delta) = 1 is not divisible by 3: ramified, skipped
    tv = trace_vector(parse_curve("[1,1,0,-22,-812]"), 3, 353)
    assert tv.trace_at(353)[1] == RAMIFIED_SKIP
    assert "353:*" in tv.serialize()


def test_trace_vector_serialize():
    tv = trace_vector(parse_curve("[1,1,0,-22,-812]"), 3, 7)
    assert tv.serialize() == "p=3; 2:0 5:1 7:2"


def test_compare_reps_mismatch_at_two():
    A = trace_vector(parse_curve("[1,1,0,-22,-812]"), 3, 37)
    B = trace_vector(parse_curve("[1,1,1,-2,16]"), 3, 37)
    assert compare_reps(A, B) == ("mismatch", 2)


def test_compare_reps_match_self():
    A = trace_vector(parse_curve("[1,1,1,-2,16]"), 3, 37)
    assert compare_reps(A, A) == "match-up-to-bound"


def test_compare_reps_isogenous_match():
    # 11a1 and 11a3 are isogenous: identical trace vectors mod 7
    A = trace_vector(parse_curve("[0,-1,1,-10,-20]"), 7, 100)
    B = trace_vector(parse_curve("[0,-1,1,0,0]"), 7, 100)
    assert compare_reps(A, B) == "match-up-to-bound"


def test_compare_reps_characteristic_mismatch():
    A = trace_vector(parse_curve("[1,1,1,-2,16]"), 3, 19)
    B = trace_vector(parse_curve("[1,1,1,-2,16]"), 5, 19)
    with pytest.raises(CharacteristicMismatch):
        compare_reps(A, B)


def test_irreducibility():
    assert is_reducible_semistable(parse_curve("[1,1,0,-22,-812]"), 3, 100) \
        == IRREDUCIBLE
    assert is_reducible_semistable(parse_curve("[1,0,1,-80,-275]"), 5, 100) \
        == IRREDUCIBLE
    # X0(11) has a rational 5-torsion point: reducible mod 5, never ruled out
    assert is_reducible_semistable(parse_curve("[0,-1,1,-10,-20]"), 5, 500) \
        == UNDETERMINED


def test_sturm_bound():
    assert sturm_bound(11) == 2
    assert sturm_bound(1) == 1
    assert sturm_bound(2118) == 708
    assert sturm_bound(11, weight=4) == 4
