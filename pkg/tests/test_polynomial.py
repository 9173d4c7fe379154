import json
import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from domroots.errors import InvalidPolynomial, TooLarge
from domroots.graph import from_edges
from domroots.polynomial import (
    DominationPolynomial,
    count_by_enumeration,
    count_by_inclusion_exclusion,
    domination_number,
    evaluate_complex,
    evaluate_exact,
)

from conftest import NAMED
from oracles import all_labeled_graphs, brute_force_counts, complete_closed_form, random_graph
from test_graph import graphs_st


@pytest.mark.parametrize("name,coeffs", [
    ("K1", (0, 1)),
    ("P3", (0, 1, 3, 1)),
    ("P4", (0, 0, 4, 4, 1)),
    ("K2", (0, 2, 1)),
    ("C4", (0, 0, 6, 4, 1)),
    ("K4", (0, 4, 6, 4, 1)),
])
def test_examples_both_algorithms(name, coeffs):
    g = NAMED[name]
    assert brute_force_counts(g) == coeffs
    assert count_by_enumeration(g).coeffs == coeffs
    assert count_by_inclusion_exclusion(g).coeffs == coeffs


@pytest.mark.parametrize("n", range(1, 6))
def test_all_small_graphs_match_oracle(n):
    for g in all_labeled_graphs(n):
        want = brute_force_counts(g)
        assert count_by_enumeration(g, workers=1).coeffs == want
        assert count_by_inclusion_exclusion(g).coeffs == want


def test_random_graphs_match_brute_force():
    rng = random.Random(7)
    for _ in range(60):
        g = random_graph(rng.randint(6, 10), rng.random(), rng)
        assert count_by_enumeration(g).coeffs == brute_force_counts(g)


def test_split_kernel_beyond_low_half():
    # n > 16 exercises the high-half table of the enumeration kernel
    rng = random.Random(3)
    for n in (17, 19):
        g = random_graph(n, 0.25, rng)
        assert count_by_enumeration(g) == count_by_inclusion_exclusion(g)


@pytest.mark.parametrize("n", range(1, 13))
def test_complete_closed_form(n):
    g = from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    assert count_by_enumeration(g).coeffs == complete_closed_form(n)


def test_worker_count_does_not_change_result():
    g = random_graph(20, 0.2, random.Random(11))
    results = {count_by_enumeration(g, workers=w) for w in (1, 2, 3, 8)}
    assert len(results) == 1


def test_cap():
    g = from_edges(29, [])
    with pytest.raises(TooLarge):
        count_by_enumeration(g)
    with pytest.raises(TooLarge):
        count_by_inclusion_exclusion(g)
    with pytest.raises(TooLarge):
        count_by_enumeration(from_edges(5, []), cap=33)


def test_domination_number():
    assert domination_number(count_by_enumeration(NAMED["P4"])) == 2
    assert domination_number(count_by_enumeration(NAMED["K4"])) == 1
    assert domination_number(count_by_enumeration(NAMED["P3"])) == 1
    with pytest.raises(InvalidPolynomial):
        domination_number(DominationPolynomial(2, (0, 0, 0)))


def test_evaluate_complex():
    k2 = count_by_enumeration(NAMED["K2"])
    assert evaluate_complex(k2, -2) == 0
    assert evaluate_complex(k2, 0) == 0
    assert evaluate_complex(count_by_enumeration(NAMED["P3"]), 1) == 5


def test_evaluate_exact():
    assert evaluate_exact(count_by_enumeration(NAMED["P3"]), 1) == 5
    assert evaluate_exact(count_by_enumeration(NAMED["C4"]), -2) == 8
    assert evaluate_exact(count_by_enumeration(NAMED["K2"]), -2) == 0
    assert evaluate_exact(count_by_enumeration(NAMED["K2"]), Fraction(1, 3)) == Fraction(7, 9)


def test_json_round_trip_is_lossless():
    p = DominationPolynomial(3, (0, 2**80 + 1, 3, 1))
    obj = json.loads(json.dumps(p.to_json()))
    assert obj["coeffs"][1] == str(2**80 + 1)
    assert DominationPolynomial.from_json(obj) == p


def test_polynomial_validation():
    with pytest.raises(InvalidPolynomial):
        DominationPolynomial(2, (0, 1))
    with pytest.raises(InvalidPolynomial):
        DominationPolynomial(1, (-1, 1))


def test_str():
    assert str(count_by_enumeration(NAMED["P3"])) == "x^3 + 3x^2 + x"


@settings(max_examples=150, deadline=None)
@given(graphs_st(max_n=10))
def test_polynomial_invariants(g):
    p = count_by_enumeration(g, workers=1)
    c = p.coeffs
    assert c[g.n] == 1 and c[0] == 0
    assert evaluate_exact(p, 1) % 2 == 1
    for i, ci in enumerate(c):
        assert 0 <= ci <= comb(g.n, i)
    for i in range(g.n):
        if c[i]:
            assert c[i + 1]
    assert c == count_by_inclusion_exclusion(g).coeffs


@settings(max_examples=80, deadline=None)
@given(graphs_st(max_n=8), st.fractions(min_value=Fraction(1, 10**6), max_value=100))
def test_positive_on_positive_axis(g, q):
    assert evaluate_exact(count_by_enumeration(g, workers=1), q) > 0
