"""Exact domination polynomials of graphs and graph products."""

from .graph import Graph, cartesian_product, parse_edge_list, strong_product, tensor_product
from .methods import compute
from .oracle import domination_number, domination_polynomial
from .polynomial import IntPolynomial, RatPolynomial

__version__ = "0.1.0"

__all__ = [
    "Graph", "IntPolynomial", "RatPolynomial", "cartesian_product", "compute",
    "domination_number", "domination_polynomial", "parse_edge_list", "strong_product",
    "tensor_product",
]
