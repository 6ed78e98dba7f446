import random

import pytest

from modpcurves.weierstrass import parse_curve

# curves of known conductor (classical small-conductor models)
SMALL_CONDUCTOR = [
    ("[0,-1,1,-10,-20]", 11),
    ("[1,0,1,4,-6]", 14),
    ("[1,1,1,-10,-10]", 15),
    ("[1,-1,1,-1,-14]", 17),
    ("[0,1,0,4,4]", 20),
    ("[0,-1,0,-4,4]", 24),
    ("[0,0,1,0,-7]", 27),
    ("[0,0,0,4,0]", 32),
    ("[0,0,0,0,1]", 36),
    ("[0,0,1,-1,0]", 37),
    ("[1,-1,0,-2,-1]", 49),
]

# the fixture battery: model, conductor as (prime, exponent) pairs
FIXTURE_CONDUCTORS = [
    ("[1,1,0,-22,-812]", ((2, 1), (3, 1), (353, 1))),
    ("[1,0,1,-80,-275]", ((7, 1), (67, 1))),
    ("[1,0,1,-89,316]", ((2, 1), (5, 1), (11, 1))),
    ("[0,1,0,-9,-21]", ((2, 3), (3, 1), (113, 1))),
    ("[0,1,0,-14,-27]", ((2, 2), (3, 1), (13, 1), (41, 1))),
    ("[0,0,0,-13,-24]", ((2, 5), (19, 1), (89, 1))),
    ("[0,-6,0,-136,-408]", ((2, 6), (17, 1), (103, 1))),
    ("[0,0,0,29,-123]", ((2, 4), (17, 1), (103, 1))),
    ("[0,-3,0,-16,51]", ((2, 4), (7, 1), (281, 1))),
    ("[0,-1,0,-17,-27]", ((2, 3), (3, 1), (13, 2))),
    ("[0,0,0,-43,-117]", ((2, 3), (5, 1), (2063, 1))),
    ("[0,-1,0,-2,27]", ((2, 4), (3, 1), (2063, 1))),
    ("[0,0,0,0,-26]", ((2, 6), (3, 2), (13, 2))),
    ("[1,1,1,-2,16]", ((353, 1),)),
    ("[1,1,1,-66,-270]", ((3, 1), (353, 1))),
    ("[1,-1,0,-594,6691]", ((3, 2), (353, 1))),
    ("[1,-1,0,-63,-176]", ((3, 2), (353, 1))),
    ("[0,0,1,3,4]", ((3, 3), (353, 1))),
    ("[0,0,1,-87891,-10029164]", ((3, 3), (353, 1))),
    ("[0,0,1,27,-115]", ((3, 3), (353, 1))),
    ("[0,0,1,-791019,270787421]", ((3, 3), (353, 1))),
    ("[1,-1,1,-2162,-38150]", ((3, 4), (353, 1))),
    ("[1,-1,0,-240,1493]", ((3, 4), (353, 1))),
    ("[0,1,1,-12,-21]", ((67, 1),)),
    ("[0,0,1,-2,2]", ((5, 1), (67, 1))),
    ("[0,0,1,-50,281]", ((5, 2), (67, 1))),
    ("[0,-1,1,-13,23]", ((5, 2), (67, 1))),
    ("[0,-1,1,-308,-1982]", ((5, 2), (67, 1))),
    ("[0,1,1,-333,2244]", ((5, 2), (67, 1))),
]

ALL_CURVES = [t for t, _ in SMALL_CONDUCTOR] + [t for t, _ in FIXTURE_CONDUCTORS]

FIXTURE_CUBICS = [
    ((-1, -9, 21), -1356),
    ((-1, 8, 19), -1599),
    ((-1, 1, -24), -1691),
    ((-1, -6, 27), -1751),
    ((-1, 2, 25), -1967),
    ((-1, 9, -27), -2028),
    ((-1, -2, 27), -2063),
]


@pytest.fixture
def rng():
    return random.Random(20260823)


def curves():
    return [parse_curve(t) for t in ALL_CURVES]
