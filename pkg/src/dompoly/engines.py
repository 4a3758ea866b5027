"""Closed forms and recurrences for domination polynomials of product families."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Optional, Tuple

from .config import CapacityError, get_caps
from .graph import (Graph, build_JW, contract_vertex, delete_vertices,
                    neighborhoods)
from .oracle import domination_polynomial
from .polynomial import IntPolynomial, binomial_shift

X = IntPolynomial.x()
ONE = IntPolynomial.one()


class EngineError(ValueError):
    """Parameter outside an engine's domain."""


def _P(*coeffs: int) -> IntPolynomial:
    return IntPolynomial(coeffs)


# D(P_n x K_2) for n = 1..5, lowest degree first.
LADDER_BASES: Tuple[IntPolynomial, ...] = (
    _P(0, 2, 1),
    _P(0, 0, 6, 4, 1),
    _P(0, 0, 3, 16, 15, 6, 1),
    _P(0, 0, 0, 12, 48, 52, 28, 8, 1),
    _P(0, 0, 0, 2, 47, 148, 178, 116, 45, 10, 1),
)

# D(C_n) for n = 3, 4, 5; the last two were produced by brute force and are
# re-checked in the test suite.
CYCLE_BASES: Tuple[IntPolynomial, ...] = (
    _P(0, 3, 3, 1),
    _P(0, 0, 6, 4, 1),
    _P(0, 0, 5, 10, 5, 1),
)


def _linear3(bases: List[IntPolynomial], n: int, first: int) -> IntPolynomial:
    """Run ``a_{k+1} = x(a_k + a_{k-1} + a_{k-2})`` from three bases at ``first``."""
    vals = list(bases)
    k = first + 2
    while k < n:
        vals = [vals[1], vals[2], X * (vals[0] + vals[1] + vals[2])]
        k += 1
    return vals[n - k + 2]


def path_poly(n: int) -> IntPolynomial:
    if n < 0:
        raise EngineError("path length must be >= 0")
    return _linear3([ONE, X, _P(0, 2, 1)], n, 0)


def cycle_poly(n: int) -> IntPolynomial:
    if n < 3:
        raise EngineError(f"cycle requires n >= 3, got {n}")
    return _linear3(list(CYCLE_BASES), n, 3)


def complete_poly(r: int) -> IntPolynomial:
    """``(x+1)^r - 1``; for ``r = 0`` the null graph's ``1`` instead."""
    if r < 0:
        raise EngineError("r must be >= 0")
    if r == 0:
        return ONE
    return binomial_shift(r)


def kr_k2_poly(r: int) -> IntPolynomial:
    return binomial_shift(r) ** 2 + X ** r * 2


def kr_ks_poly(r: int, s: int) -> IntPolynomial:
    """Inclusion-exclusion over empty columns of the ``r x s`` rook grid."""
    if r < 1 or s < 1:
        raise EngineError("r and s must be >= 1")
    total = binomial_shift(r) ** s
    for k in range(1, s):
        sign = -1 if k % 2 else 1
        total = total - binomial_shift(s - k) ** r * (comb(s, k) * sign)
    return total


def strong_with_complete(D_G: IntPolynomial, r: int) -> IntPolynomial:
    """``D(G strong K_r)`` from ``D(G)``: substitute ``(x+1)^r - 1`` for ``x``."""
    if r < 1:
        raise EngineError("r must be >= 1")
    return D_G.compose(binomial_shift(r))


def ladder_poly(n: int) -> IntPolynomial:
    if n < 1:
        raise EngineError("ladder length must be >= 1")
    if n <= 5:
        return LADDER_BASES[n - 1]
    c1 = X * (X + 2)
    c2 = X * (X + 1)
    c3 = X ** 2 * (X + 1)
    c45 = -(X ** 3)
    window = list(LADDER_BASES)
    for _ in range(6, n + 1):
        nxt = (c1 * window[4] + c2 * window[3] + c3 * window[2]
               + c45 * window[1] + c45 * window[0])
        window = window[1:] + [nxt]
    return window[-1]


def ladder_A_poly(n: int) -> IntPolynomial:
    """Dominating sets of ``P_n x K_2`` containing both vertices of the last rung."""
    if n < 1:
        raise EngineError("n must be >= 1")
    A = {1: X ** 2, 2: X ** 2 * (X + 1) ** 2}
    for k in range(3, n + 1):
        A[k] = X ** 2 * (ladder_poly(k - 1) + ladder_poly(k - 2) - A[k - 2])
    return A[n]


def gk2_term(G: Graph, W: int) -> IntPolynomial:
    """Contribution of the first-copy vertex set ``W`` to ``D(G x K_2)``."""
    J, z = build_JW(G, W)
    _, open_nb = neighborhoods(G, W)
    J_contract = contract_vertex(J, z)
    J_minus_closed, _ = delete_vertices(J, J.closed_masks[z])
    J_minus_z, _ = delete_vertices(J, 1 << z)
    bracket = (domination_polynomial(J_contract) + domination_polynomial(J_minus_closed)
               + domination_polynomial(J) - domination_polynomial(J_minus_z))
    return bracket.exact_divide(X + 1).shift(G.n - bin(open_nb).count("1"))


def gk2_poly(G: Graph, cap: Optional[int] = None) -> IntPolynomial:
    """``D(G x K_2)`` as a sum over vertex subsets ``W`` of the first copy."""
    if G.n == 0:
        raise EngineError("G must be non-null")
    cap = get_caps().gk2 if cap is None else cap
    if G.n > cap:
        raise CapacityError("G x K_2 decomposition", G.n, cap)
    total = IntPolynomial.zero()
    for W in range(1 << G.n):
        total = total + gk2_term(G, W)
    return total


@dataclass
class MTable:
    """Memo of ``m^t_{n,r}``: ``P_n x K_r`` with ``t`` left-end vertices exempt."""

    r: int
    _memo: Dict[Tuple[int, int], IntPolynomial] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.r < 1:
            raise EngineError("r must be >= 1")
        self._y = binomial_shift(self.r)

    def delta(self, t: int) -> int:
        return 1 if t == self.r else 0

    def base(self, n: int, t: int) -> IntPolynomial:
        r = self.r
        if n == 0:
            return ONE
        if n == 1:
            return self._y + self.delta(t)
        if n == 2:
            xp1 = X + 1
            return (xp1 ** (2 * r) - xp1 ** r * 2 + X ** r + 1
                    + X ** (r - t) * xp1 ** t - self.delta(t))
        raise EngineError("base cases exist for n <= 2 only")

    def get(self, n: int, t: int) -> IntPolynomial:
        r = self.r
        if n < 0 or not 0 <= t <= r:
            raise EngineError(f"need n >= 0 and 0 <= t <= {r}")
        key = (n, t)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if n <= 2:
            val = self.base(n, t)
        else:
            lo = 0 if t == r else 1
            val = IntPolynomial.zero()
            for i in range(lo, r + 1):
                val = val + X ** i * self.get(n - 1, i) * comb(r, i)
            if t < r:
                inner = IntPolynomial.zero()
                for i in range(t + 1):
                    inner = inner + X ** i * self.get(n - 2, r - t + i) * comb(t, i)
                val = val + X ** (r - t) * inner
        self._memo[key] = val
        return val


def m_poly(n: int, t: int, r: int, table: Optional[MTable] = None) -> IntPolynomial:
    return (table or MTable(r)).get(n, t)


def pn_kr_poly(n: int, r: int) -> IntPolynomial:
    """``D(P_n x K_r)`` as ``m^0_{n,r}``."""
    if n < 0 or r < 1:
        raise EngineError("need n >= 0 and r >= 1")
    return MTable(r).get(n, 0)


# -- strong-product family corollaries --------------------------------------

@dataclass(frozen=True)
class CorollaryCheck:
    family: str
    n: int
    r: int
    passed: bool


def _h_family(n: int, r: int) -> IntPolynomial:
    return strong_with_complete(path_poly(n), r)


def _c_family(n: int, r: int) -> IntPolynomial:
    return strong_with_complete(cycle_poly(n), r)


def _z_family(n: int, r: int) -> IntPolynomial:
    return strong_with_complete(ladder_poly(n), r)


def verify_strong_corollaries(n_max: int, r_max: int,
                              z_n_max: Optional[int] = None) -> List[CorollaryCheck]:
    """Check the path, cycle and ladder strong-product recurrences exactly.

    ``n`` is the index of the left-hand side in each recurrence: paths from
    4, cycles from 6, ladders from 6.
    """
    z_n_max = n_max if z_n_max is None else z_n_max
    out = []
    for r in range(1, r_max + 1):
        y = binomial_shift(r)
        yp1 = (X + 1) ** r
        for n in range(4, n_max + 1):
            rhs = y * (_h_family(n - 1, r) + _h_family(n - 2, r) + _h_family(n - 3, r))
            out.append(CorollaryCheck("H", n, r, _h_family(n, r) == rhs))
        for n in range(6, n_max + 1):
            rhs = y * (_c_family(n - 1, r) + _c_family(n - 2, r) + _c_family(n - 3, r))
            out.append(CorollaryCheck("C", n, r, _c_family(n, r) == rhs))
        for n in range(6, z_n_max + 1):
            rhs = ((X + 1) ** (2 * r) - 1) * _z_family(n - 1, r) \
                + y * yp1 * _z_family(n - 2, r) \
                + y ** 2 * yp1 * _z_family(n - 3, r) \
                - y ** 3 * (_z_family(n - 4, r) + _z_family(n - 5, r))
            out.append(CorollaryCheck("Z", n, r, _z_family(n, r) == rhs))
    return out
