import random
from fractions import Fraction

import pytest

from helpers import CUBIC_B, CUBIC_S
from rncbetti import (
    BBettiTable,
    NotFiniteColength,
    PureTypeB,
    PureTypeS,
    SBettiTable,
    UnsupportedShape,
    greedy_decompose_b,
    greedy_decompose_s,
    minimal_resolution,
    pure_betti_b,
    pure_betti_s,
    validate_b_table,
    veronese_transfer,
)
from rncbetti.errors import InvalidType
from rncbetti.poly import Poly, parse_polynomial
from rncbetti.veronese import parse_b_generators, s_type_to_b, transfer_decomposition, veronese_substitute

F = Fraction
XY = ["x", "y"]


def test_substitute_cubic_example():
    ideal = veronese_substitute(parse_b_generators("a+c, d^2, c*d", 3), 3)
    assert list(ideal.generators) == [parse_polynomial(s, XY) for s in ("x^3 + x*y^2", "y^6", "x*y^5")]


def test_substitute_letter_and_index_spellings_agree():
    a = veronese_substitute(parse_b_generators("a+c, d^2, c*d", 3), 3)
    b = veronese_substitute(parse_b_generators("a0+a2, a3^2, a2*a3", 3), 3)
    assert a == b


def test_substitute_d1_is_identity():
    ideal = veronese_substitute(parse_b_generators("a^2 - 3*a*b, b^3", 1), 1)
    assert list(ideal.generators) == [parse_polynomial(s, XY) for s in ("x^2 - 3*x*y", "y^3")]


def test_substitute_drops_veronese_relations():
    # a0*a2 - a1^2 vanishes on the conic
    ideal = veronese_substitute(parse_b_generators("a0*a2 - a1^2, a0", 2), 2)
    assert list(ideal.generators) == [parse_polynomial("x^2", XY)]


def test_substitute_rejects_inhomogeneous():
    with pytest.raises(InvalidType):
        veronese_substitute(parse_b_generators("a + c^2", 3), 3)


def test_transfer_cubic_example():
    assert veronese_transfer(SBettiTable(CUBIC_S), 3) == BBettiTable(3, CUBIC_B)


def test_transfer_pure_sextic_type():
    t = veronese_transfer(pure_betti_s(PureTypeS(0, 6, 8)), 2)
    assert t == BBettiTable(2, {(0, 0): 1, (1, 3): 4, (2, 4): 3})
    t = veronese_transfer(pure_betti_s(PureTypeS(0, 6, 8)), 3)
    assert t == BBettiTable(3, {(0, 0): 1, (1, 2): 4, (2, 3): 6, (3, 4): 9})


def test_transfer_unsupported_shape():
    with pytest.raises(UnsupportedShape):
        veronese_transfer(SBettiTable({(0, 0): 1, (1, 4): 1}), 3)
    with pytest.raises(UnsupportedShape):
        s_type_to_b(PureTypeS(0, 5, 7), 3)


def test_transfer_d1_is_relabeling():
    s = SBettiTable(CUBIC_S)
    b = veronese_transfer(s, 1)
    assert dict(b.items()) == dict(s.items())


def test_s_type_to_b():
    p, scale = s_type_to_b(PureTypeS(0, 6, 8), 3)
    assert p == PureTypeB(3, 0, 2, 3, 1)
    assert veronese_transfer(pure_betti_s(PureTypeS(0, 6, 8)), 3) == scale * pure_betti_b(p)


def test_transfer_decomposition_matches_b_side():
    s_terms = greedy_decompose_s(SBettiTable(CUBIC_S))
    b_terms = greedy_decompose_b(BBettiTable(3, CUBIC_B)).terms
    assert transfer_decomposition(s_terms, 3) == b_terms


def test_resolved_transfers_are_integral_tables():
    rng = random.Random(5)
    seen = 0
    while seen < 10:
        d = rng.randint(2, 4)
        gens = []
        for _ in range(rng.randint(2, 3)):
            deg = rng.randint(1, 3)
            terms = {}
            for _ in range(3):
                exps = [0] * (d + 1)
                for _ in range(deg):
                    exps[rng.randint(0, d)] += 1
                terms[tuple(exps)] = rng.randint(-3, 3)
            gens.append(Poly(d + 1, terms))
        try:
            res = minimal_resolution(veronese_substitute(gens, d))
        except NotFiniteColength:
            continue
        t = veronese_transfer(res.betti, d)
        assert validate_b_table(t, integral=True).ok
        seen += 1
