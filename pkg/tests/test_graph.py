import pytest
from hypothesis import given, strategies as st

from dompoly.config import CapacityError
from dompoly.graph import (Graph, GraphError, GraphParseError, ProductVertexMap, build_JW,
                           build_family, cartesian_product, complete_bipartite_graph, complete_graph,
                           contract_vertex, cycle_graph, delete_vertices, disjoint_union,
                           format_edge_list, induced_subgraph, members, neighborhoods,
                           parse_edge_list, path_graph, strong_product, tensor_product)

from conftest import graphs


def test_builders():
    assert path_graph(4).edges() == [(0, 1), (1, 2), (2, 3)]
    assert cycle_graph(3).num_edges() == 3
    assert complete_graph(5).num_edges() == 10
    assert complete_bipartite_graph(2, 3).num_edges() == 6
    assert path_graph(0).n == 0
    with pytest.raises(GraphError):
        cycle_graph(2)
    with pytest.raises(GraphError):
        build_family("Q", 3)
    assert build_family("KB", 1, 2) == complete_bipartite_graph(1, 2)


def test_validation():
    with pytest.raises(GraphError):
        Graph(2, (frozenset({1}), frozenset()))
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 2)])


def test_edge_list_parsing():
    text = "# triangle plus pendant\nn 4\n0 1\n1 2\n2 0\n1 0  # duplicate\n2 3\n"
    G = parse_edge_list(text)
    assert G.n == 4 and G.num_edges() == 4
    assert parse_edge_list(format_edge_list(G)) == G


@pytest.mark.parametrize("text", ["0 1\n", "n 3\n0 0\n", "n 3\n0 5\n", "n x\n", "n 3\n0 1 2\n", ""])
def test_edge_list_errors(text):
    with pytest.raises(GraphParseError):
        parse_edge_list(text)


def test_edge_list_reports_line():
    with pytest.raises(GraphParseError, match="line 3"):
        parse_edge_list("n 3\n0 1\n1 1\n")


def test_product_vertex_map():
    pm = ProductVertexMap(3, 2)
    assert pm.index(2, 1) == 5
    assert pm.pair(5) == (2, 1)
    assert members(pm.fiber(1)) == [2, 3]
    assert members(pm.layer(0)) == [0, 2, 4]


@given(graphs(max_n=5), graphs(max_n=4))
def test_product_edge_counts(G, H):
    m, k = G.num_edges(), H.num_edges()
    cart, _ = cartesian_product(G, H)
    strong, _ = strong_product(G, H)
    tensor, _ = tensor_product(G, H)
    assert cart.num_edges() == G.n * k + H.n * m
    assert tensor.num_edges() == 2 * m * k
    assert strong.num_edges() == cart.num_edges() + tensor.num_edges()


def test_product_cap():
    with pytest.raises(CapacityError) as info:
        cartesian_product(path_graph(10), path_graph(7))
    assert info.value.cap == 63
    G, _ = cartesian_product(path_graph(10), path_graph(7), cap=70)
    assert G.n == 70


def test_ladder_shape():
    L, pm = cartesian_product(path_graph(3), complete_graph(2))
    assert L.n == 6 and L.num_edges() == 7
    assert L.has_edge(pm.index(0, 0), pm.index(0, 1))
    assert L.has_edge(pm.index(0, 0), pm.index(1, 0))


def test_local_operations():
    G = cycle_graph(5)
    H, old_to_new = delete_vertices(G, {0})
    assert H == path_graph(4)
    assert old_to_new == {1: 0, 2: 1, 3: 2, 4: 3}
    S, _ = induced_subgraph(G, [0, 1, 2])
    assert S == path_graph(3)
    closed, open_ = neighborhoods(G, {0})
    assert members(closed) == [0, 1, 4] and members(open_) == [1, 4]
    C = contract_vertex(G, 0)
    assert C.n == 4 and C.num_edges() == 4
    assert disjoint_union(path_graph(2), path_graph(3)).num_edges() == 3


def test_contract_joins_neighbors():
    star = complete_bipartite_graph(1, 3)
    assert contract_vertex(star, 0) == complete_graph(3)


def test_jw_examples():
    G = path_graph(3)
    J, z = build_JW(G, {0})
    assert (J.n, z) == (3, 2)
    assert J.edges() == [(0, 1), (0, 2), (1, 2)]
    J, z = build_JW(G, 0)
    assert J == Graph.from_edges(1, []) and z == 0
    J, z = build_JW(G, {0, 1, 2})
    assert sorted(J.neighbors[z]) == [0, 1, 2]


@given(graphs(max_n=6), st.integers(min_value=0, max_value=63))
def test_jw_size_and_attachment(G, bits):
    W = bits & G.full_mask
    J, z = build_JW(G, W)
    closed, _ = neighborhoods(G, W)
    assert J.n == bin(closed).count("1") + 1
    assert z == J.n - 1
    assert z not in J.neighbors[z]


@given(graphs(min_n=1, max_n=6))
def test_contraction_shape(G):
    for v in range(G.n):
        C = contract_vertex(G, v)
        assert C.n == G.n - 1
        for u in range(C.n):
            assert u not in C.neighbors[u]
