"""Cross-verification suites: engines and identities against the brute-force oracle."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, comb
from typing import Callable, Dict, List, Optional

from . import engines as E
from .config import default_seed
from .graph import (Graph, cartesian_product, complete_graph, contract_vertex, cycle_graph,
                    delete_vertices, path_graph, random_graph, strong_product)
from .oracle import (both_endpoints_count, domination_polynomial, pz_polynomial,
                     relaxed_domination_polynomial)
from .polynomial import IntPolynomial, InexactDivisionError, binomial_shift
from .reduction import (RejectedGammaError, interpolation_reduction, twin_quotient_oracle)
from .sequences import guess_holonomic, guess_polyx_recurrence, verify_recurrence

X = IntPolynomial.x()


@dataclass
class Check:
    label: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteReport:
    name: str
    checks: List[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, label: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(label, bool(passed), "" if passed else detail))

    def expect_equal(self, label: str, got, want) -> None:
        self.add(label, got == want, f"got {got}, expected {want}")

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "checks": len(self.checks),
            "failures": [{"label": c.label, "detail": c.detail} for c in self.checks if not c.passed],
        }


def _brute_cart(G: Graph, H: Graph) -> IntPolynomial:
    return domination_polynomial(cartesian_product(G, H)[0])


def _ladder(n: int) -> Graph:
    return cartesian_product(path_graph(n), complete_graph(2))[0]


def _random_graphs(rng: random.Random, count: int, n_max: int, n_min: int = 1) -> List[Graph]:
    return [random_graph(rng.randint(n_min, n_max), rng.choice((0.25, 0.4, 0.6)), rng)
            for _ in range(count)]


# Published D(P_n x K_2) for n = 1..6, lowest degree first.
LADDER_ROWS = {
    1: IntPolynomial([0, 2, 1]),
    2: IntPolynomial([0, 0, 6, 4, 1]),
    3: IntPolynomial([0, 0, 3, 16, 15, 6, 1]),
    4: IntPolynomial([0, 0, 0, 12, 48, 52, 28, 8, 1]),
    5: IntPolynomial([0, 0, 0, 2, 47, 148, 178, 116, 45, 10, 1]),
    6: IntPolynomial([0, 0, 0, 0, 17, 168, 470, 604, 453, 216, 66, 12, 1]),
}


def suite_table1(**_) -> SuiteReport:
    rep = SuiteReport("table1")
    for n, want in LADDER_ROWS.items():
        rep.expect_equal(f"brute L_{n}", domination_polynomial(_ladder(n)), want)
        rep.expect_equal(f"ladder_poly({n})", E.ladder_poly(n), want)
        rep.expect_equal(f"gk2_poly(P_{n})", E.gk2_poly(path_graph(n)), want)
        rep.expect_equal(f"pn_kr_poly({n},2)", E.pn_kr_poly(n, 2), want)
    return rep


def suite_kk(max_n: int = 10, **_) -> SuiteReport:
    rep = SuiteReport("kk")
    for r in range(2, 6):
        for s in range(2, 5):
            if r * s <= 20:
                rep.expect_equal(f"K_{r}xK_{s}", E.kr_ks_poly(r, s),
                                 _brute_cart(complete_graph(r), complete_graph(s)))
    for r in range(1, max_n + 1):
        y = binomial_shift(r)
        rep.expect_equal(f"s=2 identity r={r}", E.kr_ks_poly(r, 2), y ** 2 + X ** r * 2)
        rep.expect_equal(f"s=3 identity r={r}", E.kr_ks_poly(r, 3),
                         y ** 3 + X ** r * ((X + 2) ** r - 1) * 3)
    return rep


def suite_strong(trials: int = 20, max_n: int = 8, seed: Optional[int] = None, **_) -> SuiteReport:
    rep = SuiteReport("strong")
    rng = random.Random(default_seed() if seed is None else seed)
    for i, G in enumerate(_random_graphs(rng, trials, max_n)):
        D = domination_polynomial(G)
        for r in (2, 3):
            got = domination_polynomial(strong_product(G, complete_graph(r))[0])
            rep.expect_equal(f"graph {i} edges={G.edges()} r={r}", got, E.strong_with_complete(D, r))
    return rep


def suite_gk2(trials: int = 20, max_n: int = 9, seed: Optional[int] = None, **_) -> SuiteReport:
    rep = SuiteReport("gk2")
    rng = random.Random(default_seed() if seed is None else seed)
    K2 = complete_graph(2)
    cases = [(f"random {i} edges={G.edges()}", G) for i, G in enumerate(_random_graphs(rng, trials, max_n))]
    cases += [(f"P_{n}", path_graph(n)) for n in range(1, max_n + 1)]
    cases += [(f"C_{n}", cycle_graph(n)) for n in range(3, max_n + 1)]
    cases += [(f"K_{n}", complete_graph(n)) for n in range(1, max_n + 1)]
    for label, G in cases:
        try:
            got = E.gk2_poly(G)
        except InexactDivisionError as exc:
            rep.add(label, False, f"inexact per-subset division: {exc}")
            continue
        rep.expect_equal(label, got, _brute_cart(G, K2))
    return rep


def suite_pathcycle(max_n: int = 12, **_) -> SuiteReport:
    rep = SuiteReport("pathcycle")
    for n in range(0, max_n + 1):
        rep.expect_equal(f"P_{n}", E.path_poly(n), domination_polynomial(path_graph(n)))
    for n in range(3, max_n + 1):
        rep.expect_equal(f"C_{n}", E.cycle_poly(n), domination_polynomial(cycle_graph(n)))
    return rep


def _left_end(n: int, r: int, t: int) -> int:
    """Mask of ``t`` vertices of the first ``K_r`` column of ``P_n x K_r``."""
    return sum(1 << v for v in range(t)) if n else 0


def suite_mtable(**_) -> SuiteReport:
    rep = SuiteReport("mtable")
    for r in range(1, 5):
        T = E.MTable(r)
        for n in (0, 1, 2):
            G = cartesian_product(path_graph(n), complete_graph(r))[0]
            for t in range(r + 1):
                rep.expect_equal(f"base m^{t}_{n},{r}", T.base(n, t),
                                 relaxed_domination_polynomial(G, _left_end(n, r, t)))
    for r in range(1, 4):
        T = E.MTable(r)
        for n in range(3, 6):
            G = cartesian_product(path_graph(n), complete_graph(r))[0]
            for t in range(r + 1):
                rep.expect_equal(f"recursion m^{t}_{n},{r}", T.get(n, t),
                                 relaxed_domination_polynomial(G, _left_end(n, r, t)))
    for n in range(0, 7):
        rep.expect_equal(f"P_{n}xK_3", E.pn_kr_poly(n, 3),
                         _brute_cart(path_graph(n), complete_graph(3)))
    return rep


def suite_lemma(max_n: int = 10, **_) -> SuiteReport:
    rep = SuiteReport("lemma")
    for n in range(1, max_n + 1):
        rep.expect_equal(f"A_{n}", E.ladder_A_poly(n), both_endpoints_count(n))
    return rep


def pz_identity_holds(G: Graph, z: int) -> bool:
    lhs = pz_polynomial(G, z) * (X + 1)
    contracted = contract_vertex(G, z)
    minus_closed, _ = delete_vertices(G, G.closed_masks[z])
    minus_z, _ = delete_vertices(G, 1 << z)
    rhs = (X * domination_polynomial(contracted) + X * domination_polynomial(minus_closed)
           + domination_polynomial(minus_z) - domination_polynomial(G))
    return lhs == rhs


def suite_pz(trials: int = 50, max_n: int = 9, seed: Optional[int] = None, **_) -> SuiteReport:
    rep = SuiteReport("pz")
    rng = random.Random(default_seed() if seed is None else seed)
    for i, G in enumerate(_random_graphs(rng, trials, max_n)):
        for z in range(G.n):
            rep.add(f"graph {i} z={z}", pz_identity_holds(G, z), f"edges={G.edges()}")
    return rep


def suite_central(max_n: int = 12, **_) -> SuiteReport:
    rep = SuiteReport("central")
    terms = [E.kr_ks_poly(n, 2).coefficient(n) for n in range(1, max_n + 1)]
    for n, t in enumerate(terms, 1):
        rep.expect_equal(f"d_{n}(K_{n}xK_2)", t, comb(2 * n, n))
    rec = guess_holonomic(terms, 1, 1, offset=1)
    rep.add("holonomic guess found", rec is not None, "no recurrence found")
    if rec is not None:
        rep.add("order 1, degree 1", rec.order == 1 and rec.degree == 1, str(rec))
        rep.add("re-verifies", verify_recurrence(terms, rec).passed, str(rec))
    return rep


def suite_ladder_gamma(max_n: int = 14, **_) -> SuiteReport:
    rep = SuiteReport("ladder-gamma")
    for n in range(1, max_n + 1):
        rep.expect_equal(f"gamma(L_{n})", E.ladder_poly(n).min_support(), ceil((n + 1) / 2))
    return rep


def suite_mining(**_) -> SuiteReport:
    rep = SuiteReport("mining")
    rec = guess_polyx_recurrence([E.path_poly(n) for n in range(13)], 3, 1)
    rep.add("path recurrence", rec is not None and list(rec.coefficients) == [X, X, X], str(rec))
    rec = guess_polyx_recurrence([E.ladder_poly(n) for n in range(1, 15)], 5, 3)
    want = [X * (X + 2), X * (X + 1), X ** 2 * (X + 1), -X ** 3, -X ** 3]
    rep.add("ladder recurrence", rec is not None and list(rec.coefficients) == want, str(rec))
    checks = E.verify_strong_corollaries(8, 3, z_n_max=9)
    for c in checks:
        rep.add(f"{c.family}_{c.n},{c.r}", c.passed, "strong-family recurrence fails")
    return rep


def suite_reduction(trials: int = 10, max_n: int = 9, seed: Optional[int] = None, **_) -> SuiteReport:
    rep = SuiteReport("reduction")
    rng = random.Random(default_seed() if seed is None else seed)
    graphs = _random_graphs(rng, trials, max_n)
    for i, G in enumerate(graphs):
        want = domination_polynomial(G)
        for gamma in (Fraction(1), Fraction(2), Fraction(1, 2), Fraction(-3)):
            oracle = twin_quotient_oracle(gamma)
            got = interpolation_reduction(G, oracle, product_cap=G.n * (G.n + 1))
            rep.expect_equal(f"graph {i} gamma={gamma}", got, want)
            rep.expect_equal(f"graph {i} gamma={gamma} queries", oracle.queries, G.n + 1)
    for gamma in (0, -1, -2):
        try:
            twin_quotient_oracle(gamma)
        except RejectedGammaError:
            rep.add(f"gamma={gamma} rejected", True)
        else:
            rep.add(f"gamma={gamma} rejected", False, "accepted a forbidden gamma")
    return rep


SUITES: Dict[str, Callable[..., SuiteReport]] = {
    "table1": suite_table1,
    "kk": suite_kk,
    "strong": suite_strong,
    "gk2": suite_gk2,
    "pathcycle": suite_pathcycle,
    "mtable": suite_mtable,
    "lemma": suite_lemma,
    "pz": suite_pz,
    "central": suite_central,
    "ladder-gamma": suite_ladder_gamma,
    "mining": suite_mining,
    "reduction": suite_reduction,
}


def run_suite(name: str, **bounds) -> List[SuiteReport]:
    """Run one suite, or every suite for ``"all"``; ``None`` bounds take suite defaults."""
    bounds = {k: v for k, v in bounds.items() if v is not None}
    if name == "all":
        return [fn(**bounds_for(n, bounds)) for n, fn in SUITES.items()]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
    return [SUITES[name](**bounds)]


def bounds_for(name: str, bounds: dict) -> dict:
    # Under "all", size bounds are suite-specific; only the seed carries over.
    return {k: v for k, v in bounds.items() if k == "seed"}
