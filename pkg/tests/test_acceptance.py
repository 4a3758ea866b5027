"""Acceptance criteria, all checked exactly.

Randomized criteria draw from ``random.Random(DEFAULT_SEED + k)`` so runs are
reproducible; the terminal summary prints one PASS/FAIL line per criterion.
"""
import random
from fractions import Fraction
from math import ceil, comb

import pytest

from dompoly import engines as E
from dompoly.config import DEFAULT_SEED
from dompoly.graph import (cartesian_product, complete_graph, contract_vertex, cycle_graph,
                           delete_vertices, neighborhoods, path_graph, random_graph, strong_product)
from dompoly.oracle import (both_endpoints_count, domination_polynomial, pz_polynomial,
                            relaxed_domination_polynomial)
from dompoly.polynomial import IntPolynomial, X, binomial_shift
from dompoly.reduction import (RejectedGammaError, brute_force_oracle, interpolation_reduction,
                               twin_quotient_oracle)
from dompoly.sequences import guess_holonomic, guess_polyx_recurrence, verify_recurrence

pytestmark = pytest.mark.acceptance

# Ladder polynomials D(P_n x K_2), n = 1..6, lowest degree first (published values).
LADDER_TABLE = {
    1: IntPolynomial([0, 2, 1]),
    2: IntPolynomial([0, 0, 6, 4, 1]),
    3: IntPolynomial([0, 0, 3, 16, 15, 6, 1]),
    4: IntPolynomial([0, 0, 0, 12, 48, 52, 28, 8, 1]),
    5: IntPolynomial([0, 0, 0, 2, 47, 148, 178, 116, 45, 10, 1]),
    6: IntPolynomial([0, 0, 0, 0, 17, 168, 470, 604, 453, 216, 66, 12, 1]),
}


def seeded_graphs(k, count, n_max):
    rng = random.Random(DEFAULT_SEED + k)
    return [random_graph(rng.randint(1, n_max), rng.choice((0.2, 0.35, 0.5, 0.7)), rng)
            for _ in range(count)]


def brute_cart(G, H):
    return domination_polynomial(cartesian_product(G, H)[0])


def test_criterion_01_ladder_table_four_way_agreement():
    K2 = complete_graph(2)
    for n, row in LADDER_TABLE.items():
        assert brute_cart(path_graph(n), K2) == row
        assert E.ladder_poly(n) == row
        assert E.gk2_poly(path_graph(n)) == row
        assert E.pn_kr_poly(n, 2) == row


def test_criterion_02_complete_times_complete_closed_form():
    for r in range(2, 6):
        for s in range(2, 5):
            if r * s <= 20:
                assert E.kr_ks_poly(r, s) == brute_cart(complete_graph(r), complete_graph(s)), (r, s)
    for r in range(1, 11):
        y = binomial_shift(r)
        assert E.kr_ks_poly(r, 2) == y ** 2 + X ** r * 2
        assert E.kr_ks_poly(r, 3) == y ** 3 + X ** r * ((X + 2) ** r - 1) * 3


def test_criterion_03_strong_product_composition():
    graphs = seeded_graphs(3, 20, 8)
    assert len(graphs) == 20 and max(G.n for G in graphs) <= 8
    for G in graphs:
        D = domination_polynomial(G)
        for r in (2, 3):
            lhs = domination_polynomial(strong_product(G, complete_graph(r))[0])
            assert lhs == D.compose(binomial_shift(r)), (G.edges(), r)


def test_criterion_04_gk2_decomposition_exact_per_subset():
    graphs = seeded_graphs(4, 20, 9)
    graphs += [path_graph(n) for n in range(1, 10)]
    graphs += [cycle_graph(n) for n in range(3, 10)]
    graphs += [complete_graph(r) for r in range(1, 10)]
    K2 = complete_graph(2)
    for G in graphs:
        total = IntPolynomial.zero()
        for W in range(1 << G.n):
            # gk2_term divides with exact_divide, which raises on any remainder.
            total = total + E.gk2_term(G, W)
        assert total == brute_cart(G, K2), G.edges()
        assert E.gk2_poly(G) == total


def test_criterion_05_path_and_cycle_engines():
    for n in range(0, 13):
        assert E.path_poly(n) == domination_polynomial(path_graph(n))
    for n in range(3, 13):
        assert E.cycle_poly(n) == domination_polynomial(cycle_graph(n))


def _left_exempt(n, r, t):
    # Product index u*r + v, so the first path vertex's clique is 0..r-1.
    return (1 << t) - 1 if n else 0


def test_criterion_06_relaxed_table_bases_and_recursion():
    for r in range(1, 5):
        T = E.MTable(r)
        for n in (0, 1, 2):
            G = cartesian_product(path_graph(n), complete_graph(r))[0]
            for t in range(r + 1):
                assert relaxed_domination_polynomial(G, _left_exempt(n, r, t)) == T.base(n, t), (n, r, t)
    for r in range(1, 4):
        T = E.MTable(r)
        for n in range(3, 6):
            G = cartesian_product(path_graph(n), complete_graph(r))[0]
            for t in range(r + 1):
                assert relaxed_domination_polynomial(G, _left_exempt(n, r, t)) == T.get(n, t), (n, r, t)
    for n in range(0, 7):
        assert E.pn_kr_poly(n, 3) == brute_cart(path_graph(n), complete_graph(3))


def test_criterion_07_ladder_end_rung_count():
    for n in range(1, 11):
        assert E.ladder_A_poly(n) == both_endpoints_count(n), n


def test_criterion_08_pz_expansion_identity():
    graphs = seeded_graphs(8, 50, 9)
    assert len(graphs) == 50
    for G in graphs:
        for z in range(G.n):
            closed, _ = neighborhoods(G, 1 << z)
            rhs = (X * domination_polynomial(contract_vertex(G, z))
                   + X * domination_polynomial(delete_vertices(G, closed)[0])
                   + domination_polynomial(delete_vertices(G, 1 << z)[0])
                   - domination_polynomial(G))
            assert pz_polynomial(G, z) * (X + 1) == rhs, (G.edges(), z)


def test_criterion_09_central_binomial_recurrence():
    terms = [E.kr_ks_poly(n, 2).coefficient(n) for n in range(1, 13)]
    assert terms == [comb(2 * n, n) for n in range(1, 13)]
    rec = guess_holonomic(terms, 1, 1, offset=1)
    assert rec is not None
    assert (rec.order, rec.degree) == (1, 1)
    report = verify_recurrence(terms, rec)
    assert report.passed and report.checked == len(terms) - 1


def test_criterion_10_ladder_domination_number():
    for n in range(1, 15):
        assert E.ladder_poly(n).min_support() == ceil((n + 1) / 2), n


def test_criterion_11_recurrence_mining():
    rec = guess_polyx_recurrence([E.path_poly(n) for n in range(0, 13)], 3, 1)
    assert rec is not None and rec.coefficients == (X, X, X)
    rec = guess_polyx_recurrence([E.ladder_poly(n) for n in range(1, 15)], 5, 3)
    assert rec is not None
    assert rec.coefficients == (X * (X + 2), X * (X + 1), X ** 2 * (X + 1), -X ** 3, -X ** 3)
    checks = E.verify_strong_corollaries(8, 3, z_n_max=9)
    assert {(c.family, max(d.n for d in checks if d.family == c.family)) for c in checks} == \
        {("H", 8), ("C", 8), ("Z", 9)}
    failed = [c for c in checks if not c.passed]
    assert not failed, failed


def test_criterion_12_interpolation_reduction():
    graphs = seeded_graphs(12, 10, 9)
    gammas = (Fraction(1), Fraction(2), Fraction(1, 2), Fraction(-3))
    for G in graphs:
        want = domination_polynomial(G)
        for gamma in gammas:
            oracle = twin_quotient_oracle(gamma)
            # G strong K_{|V|+1} has |V|(|V|+1) vertices, past the default product cap.
            got = interpolation_reduction(G, oracle, product_cap=G.n * (G.n + 1))
            assert got == want, (G.edges(), gamma)
            assert oracle.queries == G.n + 1
            if G.n * (G.n + 1) <= 20:
                brute = brute_force_oracle(gamma)
                assert interpolation_reduction(G, brute) == want
                assert brute.queries == G.n + 1
    for gamma in (0, -1, -2):
        with pytest.raises(RejectedGammaError):
            interpolation_reduction(path_graph(3), twin_quotient_oracle(gamma))
