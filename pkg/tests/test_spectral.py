from __future__ import annotations

import random

import pytest

from cospectral_pm.family import build_family, build_pair, intro_fixture
from cospectral_pm.graph import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    path_graph,
)
from cospectral_pm.spectral import (
    CharPoly,
    char_poly,
    cospectral,
    edge_count_from_spectrum,
    spectrum_symmetric,
)
from oracles import minors_char_poly, poly_product, random_graph, random_permutation, two_colorable


def test_small_polynomials():
    assert char_poly(complete_graph(3)).coeffs == (1, 0, -3, -2)
    assert char_poly(cycle_graph(4)).coeffs == (1, 0, -4, 0, 0)
    assert char_poly(empty_graph(3)).coeffs == (1, 0, 0, 0)
    assert char_poly(empty_graph(0)).coeffs == (1,)
    assert str(char_poly(complete_graph(3))) == "x^3 - 3x - 2"


def test_polynomial_vanishes_at_integer_eigenvalues():
    # K_3 has spectrum {2, -1, -1}; C_4 has {2, 0, 0, -2}
    p = char_poly(complete_graph(3))
    assert p(2) == 0 and p(-1) == 0
    q = char_poly(cycle_graph(4))
    assert q(2) == q(0) == q(-2) == 0


def test_intro_pair_is_cospectral():
    a, b = intro_fixture(8)
    assert char_poly(a) == char_poly(b)
    assert char_poly(a).coeffs == minors_char_poly(a)


def test_cospectral():
    g = cycle_graph(7)
    assert cospectral(g, g)
    assert not cospectral(complete_graph(3), path_graph(3))
    assert not cospectral(empty_graph(2), empty_graph(3))


@pytest.mark.parametrize("b", [5, 6])
def test_family_pair_cospectral(b):
    g, gs, _ = build_pair(b)
    assert g != gs
    assert cospectral(g, gs)


def test_spectrum_symmetric():
    assert spectrum_symmetric(char_poly(cycle_graph(4)))
    assert not spectrum_symmetric(char_poly(complete_graph(3)))
    fixture = disjoint_union(cycle_graph(4), path_graph(4))
    assert spectrum_symmetric(char_poly(fixture)) == two_colorable(fixture) is True


def test_symmetric_spectrum_iff_bipartite():
    rng = random.Random(5)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 9), rng.choice([0.15, 0.3, 0.5]))
        assert spectrum_symmetric(char_poly(g)) == two_colorable(g)


def test_edge_count_from_spectrum():
    assert edge_count_from_spectrum(char_poly(complete_graph(4))) == 6
    assert edge_count_from_spectrum(char_poly(empty_graph(5))) == 0
    assert edge_count_from_spectrum(char_poly(build_family(5).graph)) == 105
    with pytest.raises(ValueError):
        edge_count_from_spectrum(char_poly(empty_graph(1)))


def test_matches_minors_oracle():
    rng = random.Random(2024)
    for _ in range(60):
        g = random_graph(rng, rng.randint(0, 7))
        assert char_poly(g).coeffs == minors_char_poly(g)


def test_relabel_invariance():
    rng = random.Random(8)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 14))
        assert char_poly(g.relabel(random_permutation(rng, g.n))) == char_poly(g)


def test_multiplicative_under_union():
    rng = random.Random(9)
    for _ in range(30):
        a = random_graph(rng, rng.randint(0, 6))
        b = random_graph(rng, rng.randint(0, 6))
        union = char_poly(disjoint_union(a, b))
        assert union == char_poly(a) * char_poly(b)
        assert union.coeffs == poly_product(char_poly(a).coeffs, char_poly(b).coeffs)


def test_json_round_trip_keeps_big_integers():
    p = char_poly(build_family(9).graph)
    data = p.to_json()
    assert all(isinstance(c, str) for c in data)
    assert max(abs(c) for c in p.coeffs) > 2**63
    assert CharPoly.from_json(data) == p
    assert len(p.digest()) == 64
