"""Recover ``D(G, x)`` from an evaluation oracle for ``D(-, gamma)``.

For ``r = 1..|V|+1`` the oracle is asked for ``D(G strong K_r, gamma)``,
which equals ``D(G, (1+gamma)^r - 1)``; interpolating through those points
gives back the whole polynomial.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from .config import CapacityError
from .graph import Graph, complete_graph, members, strong_product
from .oracle import domination_polynomial
from .polynomial import IntPolynomial, NonIntegralError, eval_rational, lagrange_interpolate

FORBIDDEN_GAMMAS = (Fraction(0), Fraction(-1), Fraction(-2))
# Two tables of 2**classes entries are built.
TWIN_CAP = 20


class RejectedGammaError(ValueError):
    """Evaluation point for which the reduction's abscissae collide."""


class OracleInconsistencyError(ArithmeticError):
    """Oracle answers do not come from any integer polynomial of the right degree."""


def _check_gamma(gamma) -> Fraction:
    g = Fraction(gamma)
    if g in FORBIDDEN_GAMMAS:
        raise RejectedGammaError(
            f"gamma={g} rejected: the reduction needs gamma not in {{0, -1, -2}}, "
            "otherwise the values (1+gamma)^r - 1 are not pairwise distinct")
    return g


def abscissae(gamma, count: int) -> List[Fraction]:
    """``[(1+gamma)^r - 1 for r = 1..count]``."""
    g = _check_gamma(gamma)
    if count < 1:
        raise ValueError("count must be >= 1")
    pts = [(1 + g) ** r - 1 for r in range(1, count + 1)]
    if len(set(pts)) != len(pts):
        raise AssertionError(f"abscissae collide for gamma={g}")
    return pts


@dataclass
class EvaluationOracle:
    """Callable answering ``D(H, gamma)`` for a fixed ``gamma``; counts its queries."""

    gamma: Fraction
    evaluate: Callable[[Graph], Fraction]
    name: str = "oracle"
    queries: int = 0

    def __post_init__(self):
        self.gamma = _check_gamma(self.gamma)

    def __call__(self, H: Graph) -> Fraction:
        self.queries += 1
        return Fraction(self.evaluate(H))


def brute_force_oracle(gamma, cap: Optional[int] = None) -> EvaluationOracle:
    """Enumerates all subsets of the queried graph, then evaluates at ``gamma``."""
    g = Fraction(gamma)
    return EvaluationOracle(g, lambda H: eval_rational(domination_polynomial(H, cap=cap), g),
                            name="brute")


def twin_classes(H: Graph) -> List[int]:
    """Partition of the vertices into closed-twin classes (equal ``N[v]``), as masks."""
    classes: Dict[int, int] = {}
    for v, nb in enumerate(H.closed_masks):
        classes[nb] = classes.get(nb, 0) | (1 << v)
    return list(classes.values())


def twin_quotient_value(H: Graph, t: Fraction, cap: Optional[int] = None) -> Fraction:
    """``D(H, t)`` for any graph, enumerating subsets of closed-twin classes.

    Whether a vertex set dominates depends only on which classes it meets,
    and a class of size ``s`` is met by ``(1+t)^s - 1`` weighted choices.
    """
    t = Fraction(t)
    classes = twin_classes(H)
    m = len(classes)
    cap = TWIN_CAP if cap is None else cap
    if m > cap:
        raise CapacityError("twin-class enumeration", m, cap)
    closed = H.closed_masks
    cover = [closed[members(c)[0]] for c in classes]
    weight = [(1 + t) ** bin(c).count("1") - 1 for c in classes]
    full = H.full_mask
    union = [0] * (1 << m)
    prod = [Fraction(1)] * (1 << m)
    total = Fraction(1) if full == 0 else Fraction(0)
    for s in range(1, 1 << m):
        low = s & -s
        i = low.bit_length() - 1
        union[s] = union[s ^ low] | cover[i]
        prod[s] = prod[s ^ low] * weight[i]
        if union[s] == full:
            total += prod[s]
    return total


def twin_quotient_oracle(gamma, cap: Optional[int] = None) -> EvaluationOracle:
    g = Fraction(gamma)
    return EvaluationOracle(g, lambda H: twin_quotient_value(H, g, cap), name="twin-quotient")


@dataclass
class ReductionTrace:
    gamma: Fraction
    oracle: str
    rows: List[Tuple[int, Fraction, Fraction]] = field(default_factory=list)
    polynomial: Optional[IntPolynomial] = None
    queries: int = 0

    def to_dict(self) -> dict:
        return {
            "gamma": str(self.gamma),
            "oracle": self.oracle,
            "queries": [{"r": r, "abscissa": str(a), "value": str(v)} for r, a, v in self.rows],
            "query_count": self.queries,
            "coefficients": [str(c) for c in self.polynomial.coeffs] if self.polynomial is not None else None,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def reduction_trace(G: Graph, oracle: EvaluationOracle,
                    product_cap: Optional[int] = None) -> ReductionTrace:
    gamma = _check_gamma(oracle.gamma)
    n = G.n
    xs = abscissae(gamma, n + 1)
    trace = ReductionTrace(gamma, oracle.name)
    before = oracle.queries
    for r, x0 in enumerate(xs, 1):
        H, _ = strong_product(G, complete_graph(r), cap=product_cap)
        trace.rows.append((r, x0, oracle(H)))
    trace.queries = oracle.queries - before
    interp = lagrange_interpolate([(x0, val) for _, x0, val in trace.rows])
    try:
        trace.polynomial = interp.to_int()
    except NonIntegralError as exc:
        raise OracleInconsistencyError(f"interpolated polynomial is not integral: {exc}") from None
    return trace


def interpolation_reduction(G: Graph, oracle: EvaluationOracle,
                            product_cap: Optional[int] = None) -> IntPolynomial:
    """``D(G, x)`` from exactly ``|V(G)| + 1`` oracle queries on ``G strong K_r``."""
    return reduction_trace(G, oracle, product_cap).polynomial
