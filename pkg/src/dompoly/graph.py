"""Finite simple undirected graphs, family builders, products and local operations.

Vertex subsets are plain Python ints used as bitmasks (bit ``i`` set means
vertex ``i`` is a member).  Every function taking a vertex set also accepts
any iterable of vertex indices.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .config import CapacityError, get_caps

VertexSet = int
VertexLike = Union[int, Iterable[int]]


class GraphError(ValueError):
    """Invalid graph data or parameters."""


class GraphParseError(GraphError):
    """Malformed edge list."""


def as_mask(vs: VertexLike) -> VertexSet:
    if isinstance(vs, int):
        if vs < 0:
            raise GraphError("vertex mask must be nonnegative")
        return vs
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def members(mask: VertexSet) -> List[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: VertexSet) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``."""

    n: int
    neighbors: Tuple[frozenset, ...]
    labels: Optional[Tuple[str, ...]] = None
    _adj: Tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        if self.n < 0 or len(self.neighbors) != self.n:
            raise GraphError("neighbor table length must equal n")
        adj = []
        for v, nb in enumerate(self.neighbors):
            for u in nb:
                if not 0 <= u < self.n:
                    raise GraphError(f"neighbor {u} of vertex {v} out of range")
                if u == v:
                    raise GraphError(f"self-loop at vertex {v}")
                if v not in self.neighbors[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
            adj.append(as_mask(nb))
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("label count must equal n")
        object.__setattr__(self, "_adj", tuple(adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]],
                   labels: Optional[Sequence[str]] = None) -> "Graph":
        nb = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            nb[u].add(v)
            nb[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nb),
                   tuple(labels) if labels is not None else None)

    @property
    def adjacency_masks(self) -> Tuple[int, ...]:
        return self._adj

    @property
    def closed_masks(self) -> Tuple[int, ...]:
        return tuple(a | (1 << v) for v, a in enumerate(self._adj))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.neighbors[u]) if u < v]

    def num_edges(self) -> int:
        return sum(len(nb) for nb in self.neighbors) // 2

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors[u]

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def __eq__(self, other):
        # Labelled equality; isomorphism is a separate question.
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self):
        return hash((self.n, self._adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges()})"


def null_graph() -> Graph:
    return Graph(0, ())


def path_graph(n: int) -> Graph:
    if n < 0:
        raise GraphError("path size must be >= 0")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle requires n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(r: int) -> Graph:
    if r < 0:
        raise GraphError("complete graph size must be >= 0")
    return Graph.from_edges(r, combinations(range(r), 2))


def complete_bipartite_graph(m: int, t: int) -> Graph:
    if m < 0 or t < 0:
        raise GraphError("part sizes must be >= 0")
    return Graph.from_edges(m + t, [(i, m + j) for i in range(m) for j in range(t)])


def edgeless_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n <count>`` header plus ``u v`` lines format.

    Duplicate and reversed edges collapse; self-loops are rejected.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise GraphParseError(f"line {lineno}: expected header 'n <count>', got {raw!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphParseError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
            if n < 0:
                raise GraphParseError(f"line {lineno}: negative vertex count")
            continue
        if len(parts) != 2:
            raise GraphParseError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"line {lineno}: non-integer vertex in {raw!r}") from None
        if u == v:
            raise GraphParseError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"line {lineno}: vertex out of range [0, {n})")
        edges.append((u, v))
    if n is None:
        raise GraphParseError("missing 'n <count>' header")
    return Graph.from_edges(n, edges)


def format_edge_list(G: Graph) -> str:
    lines = [f"n {G.n}"]
    lines += [f"{u} {v}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def build_family(kind: str, *params: int, edges: Optional[str] = None) -> Graph:
    """Build a named graph: ``P``, ``C``, ``K``, ``KB`` or ``edge_list``."""
    if kind == "P":
        return path_graph(*params)
    if kind == "C":
        return cycle_graph(*params)
    if kind == "K":
        return complete_graph(*params)
    if kind == "KB":
        return complete_bipartite_graph(*params)
    if kind == "edge_list":
        if edges is None:
            raise GraphError("edge_list family needs edge text")
        return parse_edge_list(edges)
    raise GraphError(f"unknown family {kind!r}")


# -- products ---------------------------------------------------------------

@dataclass(frozen=True)
class ProductVertexMap:
    """Bijection between product vertex indices and factor pairs ``(u, v)``."""

    left_n: int
    right_n: int

    def index(self, u: int, v: int) -> int:
        if not (0 <= u < self.left_n and 0 <= v < self.right_n):
            raise GraphError(f"pair ({u}, {v}) outside the product")
        return u * self.right_n + v

    def pair(self, i: int) -> Tuple[int, int]:
        if not 0 <= i < self.left_n * self.right_n:
            raise GraphError(f"index {i} outside the product")
        return divmod(i, self.right_n)

    def fiber(self, u: int) -> VertexSet:
        """Vertices ``(u, *)``: the copy of the right factor over ``u``."""
        return as_mask(self.index(u, v) for v in range(self.right_n))

    def layer(self, v: int) -> VertexSet:
        """Vertices ``(*, v)``: the copy of the left factor at ``v``."""
        return as_mask(self.index(u, v) for u in range(self.left_n))


def _product(G: Graph, H: Graph, cartesian: bool, tensor: bool,
             cap: Optional[int]) -> Tuple[Graph, ProductVertexMap]:
    size = G.n * H.n
    cap = get_caps().product if cap is None else cap
    if size > cap:
        raise CapacityError("graph product", size, cap)
    pm = ProductVertexMap(G.n, H.n)
    edges = []
    for u1 in range(G.n):
        for v1 in range(H.n):
            a = pm.index(u1, v1)
            if cartesian:
                edges += [(a, pm.index(u1, v2)) for v2 in H.neighbors[v1] if v2 > v1]
                edges += [(a, pm.index(u2, v1)) for u2 in G.neighbors[u1] if u2 > u1]
            if tensor:
                edges += [(a, pm.index(u2, v2)) for u2 in G.neighbors[u1] if u2 > u1
                          for v2 in H.neighbors[v1]]
    labels = None
    if G.labels is not None or H.labels is not None:
        labels = [f"({G.label(u)},{H.label(v)})" for u in range(G.n) for v in range(H.n)]
    return Graph.from_edges(size, edges, labels), pm


def cartesian_product(G: Graph, H: Graph, cap: Optional[int] = None):
    return _product(G, H, cartesian=True, tensor=False, cap=cap)


def strong_product(G: Graph, H: Graph, cap: Optional[int] = None):
    return _product(G, H, cartesian=True, tensor=True, cap=cap)


def tensor_product(G: Graph, H: Graph, cap: Optional[int] = None):
    return _product(G, H, cartesian=False, tensor=True, cap=cap)


def disjoint_union(G: Graph, H: Graph) -> Graph:
    shift = G.n
    return Graph.from_edges(G.n + H.n, G.edges() + [(u + shift, v + shift) for u, v in H.edges()])


# -- local operations -------------------------------------------------------

def _check_set(G: Graph, vs: VertexLike) -> VertexSet:
    m = as_mask(vs)
    if m >> G.n:
        raise GraphError(f"vertex set {members(m)} not contained in a graph on {G.n} vertices")
    return m


def induced_subgraph(G: Graph, keep: VertexLike) -> Tuple[Graph, Dict[int, int]]:
    """Induced subgraph on ``keep``, reindexed densely in increasing order."""
    keep_m = _check_set(G, keep)
    kept = members(keep_m)
    old_to_new = {old: new for new, old in enumerate(kept)}
    edges = [(old_to_new[u], old_to_new[v]) for u, v in G.edges()
             if u in old_to_new and v in old_to_new]
    labels = [G.label(v) for v in kept] if G.labels is not None else None
    return Graph.from_edges(len(kept), edges, labels), old_to_new


def delete_vertices(G: Graph, S: VertexLike) -> Tuple[Graph, Dict[int, int]]:
    """``G - S`` together with the old-to-new index map of surviving vertices."""
    s = _check_set(G, S)
    return induced_subgraph(G, G.full_mask & ~s)


def neighborhoods(G: Graph, W: VertexLike) -> Tuple[VertexSet, VertexSet]:
    """Closed and open neighborhoods ``(N[W], N(W))`` as masks."""
    w = _check_set(G, W)
    closed = w
    for v in members(w):
        closed |= G.adjacency_masks[v]
    return closed, closed & ~w


def contract_vertex(G: Graph, v: int) -> Graph:
    """``G / v``: drop ``v`` and make its neighborhood a clique."""
    if not 0 <= v < G.n:
        raise GraphError(f"vertex {v} not in graph on {G.n} vertices")
    nb = sorted(G.neighbors[v])
    H, old_to_new = delete_vertices(G, 1 << v)
    extra = [(old_to_new[a], old_to_new[b]) for a, b in combinations(nb, 2)]
    return Graph.from_edges(H.n, H.edges() + extra, H.labels)


def build_JW(G: Graph, W: VertexLike) -> Tuple[Graph, int]:
    """The auxiliary graph used by the ``G x K_2`` decomposition.

    Induced subgraph on ``N[W]`` plus a new last vertex ``z`` joined to every
    vertex of ``N[W]`` lying in ``W`` or adjacent to something outside ``N[W]``.
    Returns the graph and the index of ``z``.
    """
    w = _check_set(G, W)
    closed, _ = neighborhoods(G, w)
    outside = G.full_mask & ~closed
    _, touching = neighborhoods(G, outside)
    attach = (w | touching) & closed
    J, old_to_new = induced_subgraph(G, closed)
    z = J.n
    edges = J.edges() + [(old_to_new[u], z) for u in members(attach)]
    return Graph.from_edges(J.n + 1, edges), z


def random_graph(n: int, p: float, rng) -> Graph:
    """Erdos-Renyi ``G(n, p)`` drawn from ``rng`` (a ``random.Random``)."""
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                                if rng.random() < p])
