"""Brute-force ground truth: every count here comes from enumerating vertex subsets."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .config import CapacityError, get_caps
from .graph import Graph, VertexLike, _check_set, cartesian_product, complete_graph, members, path_graph
from .kernel import count_subsets
from .polynomial import IntPolynomial


@dataclass(frozen=True)
class DominationProfile:
    n: int
    counts: Tuple[int, ...]

    @property
    def polynomial(self) -> IntPolynomial:
        return IntPolynomial(self.counts)

    @property
    def total(self) -> int:
        return sum(self.counts)


def _check_cap(size: int, cap: Optional[int]) -> None:
    cap = get_caps().brute if cap is None else cap
    if size > cap:
        raise CapacityError("brute-force enumeration", size, cap)


def _count(G: Graph, candidates: int, target: int, forced: int = 0,
           cap: Optional[int] = None, workers: int = 1) -> list:
    """Counts by size of ``S`` with ``forced <= S <= forced | candidates``
    whose closed neighborhood covers ``target``; sizes include ``forced``."""
    cand = members(candidates)
    _check_cap(len(cand), cap)
    closed = G.closed_masks
    base = 0
    for v in members(forced):
        base |= closed[v]
    raw = count_subsets([closed[v] for v in cand], target, base, workers=workers)
    shift = bin(forced).count("1")
    return [0] * shift + raw


def domination_profile(G: Graph, cap: Optional[int] = None, workers: int = 1) -> DominationProfile:
    counts = _count(G, G.full_mask, G.full_mask, cap=cap, workers=workers)
    return DominationProfile(G.n, tuple(counts))


def domination_polynomial(G: Graph, cap: Optional[int] = None, workers: int = 1) -> IntPolynomial:
    """``D(G, x)`` by enumerating all ``2**n`` vertex subsets."""
    return IntPolynomial(_count(G, G.full_mask, G.full_mask, cap=cap, workers=workers))


def relaxed_domination_polynomial(G: Graph, exempt: VertexLike,
                                  cap: Optional[int] = None) -> IntPolynomial:
    """Counts subsets dominating every vertex outside ``exempt``."""
    ex = _check_set(G, exempt)
    return IntPolynomial(_count(G, G.full_mask, G.full_mask & ~ex, cap=cap))


def domination_number(G: Graph, cap: Optional[int] = None) -> int:
    if G.n == 0:
        return 0
    return domination_polynomial(G, cap=cap).min_support()


def pz_polynomial(G: Graph, z: int, cap: Optional[int] = None) -> IntPolynomial:
    """Sets ``S`` outside ``N[z]`` dominating every vertex except ``z``.

    No factor for ``z`` itself is included.
    """
    if not 0 <= z < G.n:
        raise ValueError(f"vertex {z} not in graph")
    outside = G.full_mask & ~G.closed_masks[z]
    return IntPolynomial(_count(G, outside, G.full_mask & ~(1 << z), cap=cap))


def both_endpoints_count(n: int, cap: Optional[int] = None) -> IntPolynomial:
    """Dominating sets of the ladder ``P_n x K_2`` containing both last-rung vertices."""
    if n < 1:
        raise ValueError("n must be >= 1")
    _check_cap(2 * n, cap)
    L, pm = cartesian_product(path_graph(n), complete_graph(2))
    rung = pm.fiber(n - 1)
    return IntPolynomial(_count(L, L.full_mask & ~rung, L.full_mask, forced=rung, cap=cap))
