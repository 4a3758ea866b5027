from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from dompoly.config import CapacityError, Caps, set_caps
from dompoly.graph import (cartesian_product, complete_graph, cycle_graph, disjoint_union, edgeless_graph, members,
                           null_graph, path_graph)
from dompoly.oracle import (both_endpoints_count, domination_number, domination_polynomial,
                            domination_profile, pz_polynomial, relaxed_domination_polynomial)
from dompoly.polynomial import IntPolynomial
from dompoly.verify import pz_identity_holds

from conftest import graphs


def dominating_sets(G):
    closed = G.closed_masks
    for k in range(G.n + 1):
        for S in combinations(range(G.n), k):
            u = 0
            for v in S:
                u |= closed[v]
            if u == G.full_mask:
                yield S


@given(graphs(max_n=7))
def test_matches_set_enumeration(G):
    counts = [0] * (G.n + 1)
    for S in dominating_sets(G):
        counts[len(S)] += 1
    assert domination_polynomial(G) == IntPolynomial(counts)


def test_small_values():
    assert domination_polynomial(null_graph()) == IntPolynomial([1])
    assert domination_polynomial(cycle_graph(5)) == IntPolynomial([0, 0, 5, 10, 5, 1])
    assert domination_polynomial(complete_graph(3)) == IntPolynomial([0, 3, 3, 1])
    assert domination_polynomial(edgeless_graph(3)) == IntPolynomial([0, 0, 0, 1])
    assert domination_number(null_graph()) == 0
    assert domination_number(path_graph(7)) == 3


def test_profile_total():
    prof = domination_profile(path_graph(3))
    assert prof.counts == (0, 1, 3, 1)
    assert prof.total == 5
    assert prof.polynomial == IntPolynomial([0, 1, 3, 1])


@given(graphs(max_n=4), graphs(max_n=4))
def test_multiplicative_over_disjoint_union(G, H):
    assert domination_polynomial(disjoint_union(G, H)) == domination_polynomial(G) * domination_polynomial(H)


@given(graphs(min_n=1, max_n=7))
def test_upward_closed(G):
    # Every superset of a dominating set dominates, so d_i(G) > 0 from gamma(G) up to n.
    D = domination_polynomial(G)
    assert all(D.coefficient(i) > 0 for i in range(D.min_support(), G.n + 1))
    assert D.coefficient(G.n) == 1


@given(graphs(max_n=6), st.integers(0, 63))
def test_relaxed_monotone(G, bits):
    ex = bits & G.full_mask
    relaxed = relaxed_domination_polynomial(G, ex)
    strict = domination_polynomial(G)
    assert all(relaxed.coefficient(i) >= strict.coefficient(i) for i in range(G.n + 1))
    assert relaxed_domination_polynomial(G, 0) == strict


def test_relaxed_all_exempt():
    assert relaxed_domination_polynomial(path_graph(3), 0b111) == IntPolynomial([1, 3, 3, 1])


def test_pz_by_definition():
    G = path_graph(4)
    # Outside N[0] = {0,1}: subsets of {2,3} dominating {1,2,3}: only {2} and {2,3}.
    assert pz_polynomial(G, 0) == IntPolynomial([0, 1, 1])
    with pytest.raises(ValueError):
        pz_polynomial(G, 9)


@given(graphs(min_n=1, max_n=7))
def test_pz_expansion_identity(G):
    for z in range(G.n):
        assert pz_identity_holds(G, z)


def test_both_endpoints_count_by_definition():
    for n in range(1, 5):
        L, pm = cartesian_product(path_graph(n), complete_graph(2))
        rung = set(members(pm.fiber(n - 1)))
        counts = [0] * (2 * n + 1)
        for S in dominating_sets(L):
            if rung <= set(S):
                counts[len(S)] += 1
        assert both_endpoints_count(n) == IntPolynomial(counts)
    with pytest.raises(ValueError):
        both_endpoints_count(0)


def test_brute_cap():
    with pytest.raises(CapacityError) as info:
        domination_polynomial(path_graph(8), cap=7)
    assert (info.value.size, info.value.cap) == (8, 7)
    prev = set_caps(Caps(brute=5))
    try:
        with pytest.raises(CapacityError):
            domination_polynomial(path_graph(6))
    finally:
        set_caps(prev)


def test_workers_do_not_change_result():
    G = cycle_graph(16)
    assert domination_polynomial(G, workers=4) == domination_polynomial(G)
