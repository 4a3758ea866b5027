import pytest

from dompoly.config import CapacityError
from dompoly.expr import (Affine, ExprParseError, Family, FileRef, Product, build_graph, has_free_n,
                          parse_expr, substitute)
from dompoly.graph import GraphError, cartesian_product, complete_graph, format_edge_list, path_graph
from dompoly.methods import AUTO_ORDER, METHODS, MethodError, applicable, compute
from dompoly.oracle import domination_polynomial
from dompoly.verify import LADDER_ROWS


def test_parse_shapes():
    assert parse_expr("P:4") == Family("P", (Affine(0, 4),))
    assert parse_expr(" cart( P:n , K:2 ) ") == Product("cart", Family("P", (Affine(1, 0),)),
                                                        Family("K", (Affine(0, 2),)))
    assert parse_expr("KB:2,3") == Family("KB", (Affine(0, 2), Affine(0, 3)))
    assert parse_expr("C:2*n+1").params[0] == Affine(2, 1)
    assert parse_expr("P:3n-1").params[0] == Affine(3, -1)
    assert parse_expr("file(g.txt)") == FileRef("g.txt")


@pytest.mark.parametrize("text", ["cart(P:3", "Q:3", "P:", "P:3 junk", "strong(P:2 K:2)", "file(x"])
def test_parse_errors_have_position(text):
    with pytest.raises(ExprParseError) as info:
        parse_expr(text)
    assert "position" in str(info.value)


def test_free_n():
    e = parse_expr("tensor(P:n,C:n+3)")
    assert has_free_n(e)
    assert not has_free_n(substitute(e, 2))
    assert build_graph(e, 2).n == 10
    with pytest.raises(GraphError):
        build_graph(e)


def test_round_trip_through_str():
    for text in ["cart(P:n,K:2)", "strong(C:5,K:3)", "KB:2,n+1", "tensor(P:2n-1,K:3)"]:
        e = parse_expr(text)
        assert parse_expr(str(e)) == e


def test_file_reference(tmp_path):
    f = tmp_path / "ladder.txt"
    f.write_text(format_edge_list(cartesian_product(path_graph(3), complete_graph(2))[0]))
    poly, used = compute(f"file({f})")
    assert poly == LADDER_ROWS[3] and used == "brute"
    with pytest.raises(OSError):
        build_graph(parse_expr(f"file({tmp_path / 'missing.txt'})"))


def test_product_cap_in_expressions():
    with pytest.raises(CapacityError):
        build_graph("cart(P:10,P:7)")


def test_auto_precedence():
    assert compute("K:4")[1] == "formula"
    assert compute("cart(K:3,K:4)")[1] == "formula"
    assert compute("C:7")[1] == "recurrence"
    assert compute("cart(P:5,K:2)")[1] == "recurrence"
    assert compute("cart(K:3,P:5)")[1] == "pnkr"
    assert compute("strong(KB:2,2,K:3)")[1] == "strong-compose"
    assert compute("cart(KB:2,3,K:2)")[1] == "gk2"
    assert compute("tensor(P:3,P:3)")[1] == "brute"
    assert AUTO_ORDER[-1] == "brute"


def test_auto_skips_engines_over_cap():
    # gk2 on 13 vertices exceeds its cap, so auto falls through to brute force.
    poly, used = compute("cart(KB:6,7,K:2)")
    assert used == "brute"


def test_explicit_method_mismatch():
    with pytest.raises(MethodError):
        compute("P:4", "pnkr")
    with pytest.raises(MethodError):
        compute("P:4", "nonsense")


AGREEMENT = [
    "P:7", "C:8", "K:5", "KB:2,3", "cart(P:4,K:2)", "cart(K:2,P:6)", "cart(K:3,K:3)",
    "cart(P:3,K:3)", "strong(P:4,K:2)", "strong(C:5,K:3)", "strong(K:3,P:2)",
    "cart(C:5,K:2)", "strong(cart(P:3,K:2),K:2)", "cart(P:1,K:4)", "tensor(C:4,K:3)",
]


@pytest.mark.parametrize("text", AGREEMENT)
def test_every_applicable_method_agrees(text):
    e = parse_expr(text)
    want = domination_polynomial(build_graph(e))
    used = [m for m in METHODS[1:] if applicable(e, m)]
    assert "brute" in used
    for m in used:
        assert compute(e, m)[0] == want, m
