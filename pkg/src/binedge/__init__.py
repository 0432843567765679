"""Exact tools for binomial edge ideals: Groebner bases, minimal primes,
support complexes, arithmetical rank bounds and radical certificates."""

__version__ = "0.1.0"

from .polyring import DEGREVLEX, LEX, Grading, Monomial, MonomialOrder, Polynomial, parse_polynomial
from .groebner import (
    GroebnerBasis,
    GroebnerConfig,
    Ideal,
    buchberger,
    ideal_member,
    macaulay_member,
    normal_form,
    radical_equal,
    radical_member,
)
from .graphs import Graph, FamilyTag, parse_graph, print_graph, recognize_family, vertex_connectivity
from .edgeideal import EdgeIdeal, PrimeComponent, build_edge_ideal, height_and_unmixed, minimal_primes
from .complexes import SimplicialComplex, QMatching, b_and_r, build_complex_edge_ideal, delta_Q
from .bounds import (
    BoundsReport,
    Certificate,
    bounds_report,
    build_triangle_chain,
    classify_unicyclic,
    generate_certificate,
    verify_certificate,
)

__all__ = [
    "DEGREVLEX", "LEX", "Grading", "Monomial", "MonomialOrder", "Polynomial", "parse_polynomial",
    "GroebnerBasis", "GroebnerConfig", "Ideal", "buchberger", "ideal_member", "macaulay_member",
    "normal_form", "radical_equal", "radical_member",
    "Graph", "FamilyTag", "parse_graph", "print_graph", "recognize_family", "vertex_connectivity",
    "EdgeIdeal", "PrimeComponent", "build_edge_ideal", "height_and_unmixed", "minimal_primes",
    "SimplicialComplex", "QMatching", "b_and_r", "build_complex_edge_ideal", "delta_Q",
    "BoundsReport", "Certificate", "bounds_report", "build_triangle_chain", "classify_unicyclic",
    "generate_certificate", "verify_certificate",
]
