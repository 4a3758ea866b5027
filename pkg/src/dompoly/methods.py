"""Map a graph expression to the engines able to compute its domination polynomial."""
from __future__ import annotations

from typing import Callable, Dict, Optional, Tuple, Union

from . import engines
from .expr import Expr, Family, Product, build_graph, parse_expr, substitute
from .config import CapacityError
from .oracle import domination_polynomial
from .polynomial import IntPolynomial

METHODS = ("auto", "brute", "recurrence", "formula", "gk2", "pnkr", "strong-compose")
AUTO_ORDER = ("formula", "recurrence", "pnkr", "strong-compose", "gk2", "brute")


class MethodError(ValueError):
    """The requested method does not apply to the expression's shape."""


def _clique_order(e: Expr) -> Optional[int]:
    # P:1 and P:2 are K_1 and K_2.
    if isinstance(e, Family):
        if e.kind == "K":
            return e.params[0].b
        if e.kind == "P" and e.params[0].b in (1, 2):
            return e.params[0].b
    return None


def _path_len(e: Expr) -> Optional[int]:
    if isinstance(e, Family) and e.kind == "P":
        return e.params[0].b
    return None


def _split_product(e: Expr, op: str, factor) -> Optional[Tuple[Expr, object]]:
    """``(other, factor(x))`` for whichever side of ``op(., .)`` matches."""
    if not (isinstance(e, Product) and e.op == op):
        return None
    f = factor(e.right)
    if f is not None:
        return e.left, f
    f = factor(e.left)
    if f is not None:
        return e.right, f
    return None


def _strong_with_clique(e: Expr):
    hit = _split_product(e, "strong", _clique_order)
    if hit is None or hit[1] < 1:
        return None
    return hit


def _formula(e: Expr, cap) -> Optional[IntPolynomial]:
    if isinstance(e, Family) and e.kind == "K":
        return engines.complete_poly(e.params[0].b)
    if isinstance(e, Product) and e.op == "cart":
        r, s = _clique_order(e.left), _clique_order(e.right)
        if r and s:
            return engines.kr_ks_poly(r, s)
    hit = _strong_with_clique(e)
    if hit is not None:
        inner = _formula(hit[0], cap)
        if inner is not None:
            return engines.strong_with_complete(inner, hit[1])
    return None


def _recurrence(e: Expr, cap) -> Optional[IntPolynomial]:
    if isinstance(e, Family) and e.kind == "P":
        return engines.path_poly(e.params[0].b)
    if isinstance(e, Family) and e.kind == "C":
        return engines.cycle_poly(e.params[0].b)
    hit = _split_product(e, "cart", _clique_order)
    if hit is not None and hit[1] == 2:
        n = _path_len(hit[0])
        if n is not None and n >= 1:
            return engines.ladder_poly(n)
    hit = _strong_with_clique(e)
    if hit is not None:
        inner = _recurrence(hit[0], cap)
        if inner is not None:
            return engines.strong_with_complete(inner, hit[1])
    return None


def _pnkr(e: Expr, cap) -> Optional[IntPolynomial]:
    hit = _split_product(e, "cart", _clique_order)
    if hit is not None and hit[1] >= 1:
        n = _path_len(hit[0])
        if n is not None:
            return engines.pn_kr_poly(n, hit[1])
    return None


def _strong_compose(e: Expr, cap) -> Optional[IntPolynomial]:
    hit = _strong_with_clique(e)
    if hit is None:
        return None
    inner, _ = compute(hit[0], "auto", cap=cap)
    return engines.strong_with_complete(inner, hit[1])


def _gk2(e: Expr, cap) -> Optional[IntPolynomial]:
    hit = _split_product(e, "cart", _clique_order)
    if hit is None or hit[1] != 2:
        return None
    G = build_graph(hit[0], cap=cap)
    if G.n == 0:
        return None
    return engines.gk2_poly(G)


def _brute(e: Expr, cap) -> Optional[IntPolynomial]:
    return domination_polynomial(build_graph(e, cap=cap))


_ENGINES: Dict[str, Callable] = {
    "formula": _formula,
    "recurrence": _recurrence,
    "pnkr": _pnkr,
    "strong-compose": _strong_compose,
    "gk2": _gk2,
    "brute": _brute,
}


def applicable(e: Expr, method: str) -> bool:
    try:
        return _ENGINES[method](e, None) is not None
    except (MethodError, CapacityError):
        return False


def compute(e: Union[Expr, str], method: str = "auto", n: Optional[int] = None,
            cap: Optional[int] = None) -> Tuple[IntPolynomial, str]:
    """Return ``(D(G, x), method_used)``.

    ``auto`` tries formula, recurrence, pnkr, strong-compose and gk2 before
    falling back to brute force.
    """
    if isinstance(e, str):
        e = parse_expr(e)
    e = substitute(e, n)
    if method not in METHODS:
        raise MethodError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    if method == "auto":
        for name in AUTO_ORDER[:-1]:
            try:
                poly = _ENGINES[name](e, cap)
            except CapacityError:
                continue
            if poly is not None:
                return poly, name
        return _brute(e, cap), "brute"
    poly = _ENGINES[method](e, cap)
    if poly is None:
        raise MethodError(f"method {method!r} does not apply to {e}")
    return poly, method
