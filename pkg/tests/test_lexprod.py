import itertools
import random

import pytest
from hypothesis import given, settings

from domroots.errors import HypothesisNotMet, TooLarge
from domroots.graph import from_edges
from domroots.lexprod import (
    ProductIndex,
    cross_check_product,
    isolation_profile,
    lex_product_graph,
    lex_product_polynomial,
)
from domroots.polynomial import count_by_enumeration

from conftest import NAMED
from oracles import brute_force_counts, brute_force_product_adjacency, random_graph
from test_graph import graphs_st

SMALL = ["K1", "K2", "K3", "P3", "P4", "C4", "C5"]


def test_identity_product():
    for name in SMALL:
        h = NAMED[name]
        assert lex_product_graph(NAMED["K1"], h) == h


def test_k2_k2_is_k4():
    assert lex_product_graph(NAMED["K2"], NAMED["K2"]) == NAMED["K4"]


def test_k2_p3_is_join_of_two_p3():
    g = lex_product_graph(NAMED["K2"], NAMED["P3"])
    for a, b in itertools.product(range(3), range(3, 6)):
        assert g.has_edge(a, b)
    assert sorted(e for e in g.edges() if e[1] < 3) == [(0, 1), (1, 2)]
    assert g.num_edges() == 9 + 2 + 2


@pytest.mark.parametrize("gname,hname", list(itertools.product(SMALL[:5], SMALL[:5])))
def test_product_matches_definition(gname, hname):
    g, h = NAMED[gname], NAMED[hname]
    prod = lex_product_graph(g, h)
    assert prod.n == g.n * h.n
    assert {tuple(sorted(e)) for e in prod.edges()} == {
        tuple(sorted(e)) for e in brute_force_product_adjacency(g, h)
    }


def test_non_commutative():
    a = lex_product_graph(NAMED["P3"], NAMED["K2"])
    b = lex_product_graph(NAMED["K2"], NAMED["P3"])
    assert a.num_edges() != b.num_edges()


def test_product_cap():
    with pytest.raises(TooLarge):
        lex_product_graph(from_edges(12, []), from_edges(11, []))


def test_product_index_round_trip():
    for flat in range(12):
        idx = ProductIndex.from_flat(flat, 4)
        assert idx.flat == flat and idx.h_index < 4


@pytest.mark.parametrize("gname,hname,coeffs", [
    ("K1", "P3", (0, 1, 3, 1)),
    ("K2", "K2", (0, 4, 6, 4, 1)),
    ("K2", "P3", (0, 2, 15, 20, 15, 6, 1)),
])
def test_formula_examples(gname, hname, coeffs):
    g, h = NAMED[gname], NAMED[hname]
    assert lex_product_polynomial(g, h).coeffs == coeffs
    assert brute_force_counts(lex_product_graph(g, h)) == coeffs


def test_isolation_profile_sums_to_domination_polynomial():
    g = NAMED["P4"]
    prof = isolation_profile(g)
    by_size = [0] * (g.n + 1)
    for (iso, rest), c in prof.items():
        by_size[iso + rest] += c
    assert tuple(by_size) == count_by_enumeration(g).coeffs


def test_composition_form_needs_complete_h():
    g = NAMED["P3"]
    with pytest.raises(HypothesisNotMet):
        lex_product_polynomial(g, NAMED["P3"], form="composition")
    for m in (1, 2, 3):
        h = from_edges(m, [(i, j) for i in range(m) for j in range(i + 1, m)])
        assert lex_product_polynomial(g, h, form="composition") == lex_product_polynomial(g, h)


def test_unknown_form():
    with pytest.raises(ValueError):
        lex_product_polynomial(NAMED["K2"], NAMED["K2"], form="tensor")


@pytest.mark.parametrize("gname,hname", [("K2", "K2"), ("K1", "C4"), ("P3", "K2")])
def test_cross_check_examples(gname, hname):
    rep = cross_check_product(NAMED[gname], NAMED[hname])
    assert rep["equal"] is True and rep["first_difference"] is None


def test_cross_check_reports_failed_hypothesis():
    rep = cross_check_product(NAMED["K2"], NAMED["P3"], form="composition")
    assert rep["hypothesis"] and rep["formula"] is None and rep["equal"] is None
    assert rep["enumeration"]["coeffs"] == ["0", "2", "15", "20", "15", "6", "1"]


@pytest.mark.parametrize("gname,hname", [
    (a, b) for a, b in itertools.product(SMALL, SMALL) if NAMED[a].n * NAMED[b].n <= 20
])
def test_formula_equals_enumeration_on_small_pairs(gname, hname):
    g, h = NAMED[gname], NAMED[hname]
    assert lex_product_polynomial(g, h) == count_by_enumeration(lex_product_graph(g, h))


@settings(max_examples=60, deadline=None)
@given(graphs_st(max_n=5), graphs_st(max_n=4))
def test_formula_equals_enumeration_random(g, h):
    assert lex_product_polynomial(g, h) == count_by_enumeration(lex_product_graph(g, h))


def test_product_polynomial_degree_is_order():
    rng = random.Random(9)
    g, h = random_graph(4, 0.5, rng), random_graph(3, 0.5, rng)
    p = lex_product_polynomial(g, h)
    assert p.degree == p.n == 12
