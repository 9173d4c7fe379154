import math
import random
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from domroots.errors import InvalidPolynomial
from domroots.polynomial import DominationPolynomial, count_by_enumeration
from domroots.roots import (
    CLUSTER_RADIUS,
    ComplexRootSet,
    certificate_report,
    certify_no_nonzero_real_roots,
    classify,
    find_all_roots,
    reconstruction_error,
    sturm_real_root_count,
    sturm_sequence,
)

from conftest import NAMED
from oracles import random_graph
from test_graph import graphs_st

SQRT2 = math.sqrt(2)


def poly(name):
    return count_by_enumeration(NAMED[name])


def test_k2_roots():
    rs = find_all_roots(poly("K2"))
    assert rs.zero_multiplicity == 1
    assert len(rs.roots) == 1 and abs(rs.roots[0] + 2) < 1e-12


def test_p4_double_root_is_flagged():
    rs = find_all_roots(poly("P4"))
    assert rs.zero_multiplicity == 2
    assert len(rs.roots) == 2
    assert all(abs(r + 2) < 1e-6 for r in rs.roots)
    assert rs.clusters == ((0, 1),)
    assert max(rs.residuals) <= 1e-8


def test_c4_roots():
    rs = find_all_roots(poly("C4"))
    assert rs.zero_multiplicity == 2
    want = [complex(-2, SQRT2), complex(-2, -SQRT2)]
    for w in want:
        assert min(abs(r - w) for r in rs.roots) < 1e-9


def test_k1_has_only_the_zero_root():
    rs = find_all_roots(poly("K1"))
    assert rs.zero_multiplicity == 1 and rs.roots == ()


def test_degree_zero_rejected():
    with pytest.raises(InvalidPolynomial):
        find_all_roots(DominationPolynomial(1, (1, 0)))


def test_classify_c4():
    cls = classify(find_all_roots(poly("C4")))
    assert cls.zero_count == 2
    assert cls.negative_real == []
    assert len(cls.nonreal_pairs) == 1
    assert not cls.has_positive_real_part


def test_classify_synthetic_positive_real_part():
    # x^2 - 2x + 2 = (x - 1 - i)(x - 1 + i)
    rs = ComplexRootSet((1 + 1j, 1 - 1j), (0.0, 0.0), 0)
    cls = classify(rs)
    assert cls.nonreal_pairs == [(1 + 1j, 1 - 1j)]
    assert cls.has_positive_real_part


def test_classify_p3():
    cls = classify(find_all_roots(poly("P3")))
    assert cls.zero_count == 1
    want = sorted([(-3 - math.sqrt(5)) / 2, (-3 + math.sqrt(5)) / 2])
    assert np.allclose(cls.negative_real, want, atol=1e-12)
    assert cls.nonreal_pairs == []


def test_classify_p4_cluster_counts_once():
    cls = classify(find_all_roots(poly("P4")))
    assert len(cls.negative_real) == 2
    assert cls.distinct_real_nonzero == 1
    assert len(cls.clusters) == 1 and cls.clusters[0][1] == 2


def test_sturm_examples():
    assert sturm_real_root_count(poly("C4"), "-inf", Fraction(-1, 10**9)).count == 0
    assert sturm_real_root_count(poly("P4"), "-inf", 0).count == 1
    assert sturm_real_root_count(poly("P3"), "-inf", 0).count == 2
    # right-closed interval picks up the root at 0
    assert sturm_real_root_count(poly("P3"), "-inf", 0, right_closed=True).count == 3
    assert sturm_real_root_count(poly("K2"), -2, 0, right_closed=True).count == 1
    assert sturm_real_root_count(poly("K2"), -3, -2, right_closed=True).count == 1
    assert sturm_real_root_count(poly("K2"), -3, -2).count == 0


def test_sturm_needs_ordered_interval():
    with pytest.raises(ValueError):
        sturm_real_root_count(poly("P3"), 1, 0)


def test_sturm_chain_is_exact_integers():
    chain = sturm_sequence(poly("P4").coeffs)
    assert all(isinstance(c, int) for q in chain for c in q)


def _sympy_count(coeffs, a, b, right_closed):
    x = sympy.Symbol("x")
    roots = set(sympy.Poly(list(reversed(coeffs)), x).real_roots())
    lo = -sympy.oo if a == "-inf" else sympy.Rational(a)
    hi = sympy.oo if b == "+inf" else sympy.Rational(b)
    return sum(1 for r in roots if lo < r and (r <= hi if right_closed else r < hi))


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.integers(-6, 6), min_size=2, max_size=7).filter(lambda c: c[-1] != 0),
    st.sampled_from(["-inf", "-3", "-1/2", "0"]),
    st.sampled_from(["1/3", "1", "2", "+inf"]),
    st.booleans(),
)
def test_sturm_matches_sympy(coeffs, a, b, right_closed):
    got = sturm_real_root_count(coeffs, a, b, right_closed=right_closed).count
    assert got == _sympy_count(coeffs, a, b, right_closed)


def test_certify_examples():
    assert certify_no_nonzero_real_roots(poly("C4"))
    assert certify_no_nonzero_real_roots(poly("K1"))
    assert not certify_no_nonzero_real_roots(poly("P3"))
    assert not certify_no_nonzero_real_roots(poly("P4"))
    assert certify_no_nonzero_real_roots(poly("C4"), eps=Fraction(1, 10**9))
    rep = certificate_report(poly("P3"))
    assert rep["negative"]["count"] == 2 and rep["positive"]["count"] == 0


def test_root_set_json():
    obj = find_all_roots(poly("C4")).to_json()
    assert obj["zero_multiplicity"] == 2
    assert set(obj["roots"][0]) == {"re", "im", "residual"}


def test_determinism():
    p = count_by_enumeration(random_graph(12, 0.3, random.Random(5)))
    assert find_all_roots(p) == find_all_roots(p)


@settings(max_examples=120, deadline=None)
@given(graphs_st(max_n=10))
def test_root_set_invariants(g):
    p = count_by_enumeration(g, workers=1)
    rs = find_all_roots(p)
    assert len(rs.roots) + rs.zero_multiplicity == g.n
    assert reconstruction_error(p, rs) < 1e-6
    tol = 1e-9
    for r in rs.roots:
        if abs(r.imag) >= tol:
            assert min(abs(s - r.conjugate()) for s in rs.roots) < 1e-6
    cls = classify(rs)
    assert cls.positive_real == []
    assert cls.zero_count + len(cls.negative_real) + 2 * len(cls.nonreal_pairs) == g.n


def test_numeric_real_count_agrees_with_sturm():
    rng = random.Random(2024)
    checked = 0
    for _ in range(200):
        g = random_graph(rng.randint(1, 10), rng.random(), rng)
        p = count_by_enumeration(g, workers=1)
        rs = find_all_roots(p)
        if rs.clusters:
            continue
        reals = sorted(r.real for r in rs.roots if abs(r.imag) < 1e-9)
        if any(b - a <= 10 * 1e-9 for a, b in zip(reals, reals[1:])):
            continue
        assert len(reals) == sturm_real_root_count(p, "-inf", 0).count
        checked += 1
    assert checked > 100


def test_sturm_with_repeated_root_at_endpoint():
    p = DominationPolynomial(7, (0, 0, 0, 6, 19, 18, 7, 1))  # x^3 (x+2)(x^3+5x^2+8x+3)
    assert sturm_real_root_count(p, "-inf", 0).count == 2
    assert sturm_real_root_count(p, "-inf", 0, right_closed=True).count == 3


@settings(max_examples=80, deadline=None)
@given(
    st.lists(st.tuples(st.integers(-3, 3), st.integers(1, 3)), min_size=1, max_size=4),
    st.integers(-4, 3),
    st.integers(1, 4),
    st.booleans(),
)
def test_sturm_repeated_roots_match_sympy(factors, a, width, right_closed):
    x = sympy.Symbol("x")
    expr = sympy.Integer(1)
    for r, k in factors:
        expr *= (x - r) ** k
    coeffs = [int(c) for c in reversed(sympy.Poly(expr, x).all_coeffs())]
    b = a + width
    got = sturm_real_root_count(coeffs, a, b, right_closed=right_closed).count
    assert got == _sympy_count(coeffs, str(a), str(b), right_closed)
