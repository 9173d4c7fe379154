"""Exact domination polynomials of simple graphs and their complex roots."""

from .errors import (
    DomRootsError,
    HypothesisNotMet,
    InvalidEdge,
    InvalidPolynomial,
    InvalidSpec,
    InvalidVertex,
    NoConvergence,
    ParseError,
    SelfLoop,
    TooLarge,
)
from .families import FamilySpec, RootCloud, collect_roots, coverage, generate
from .graph import (
    Graph,
    VertexSet,
    closed_neighborhood,
    every_vertex_in_triangle,
    from_edges,
    is_dominating,
    parse_graph6,
    to_graph6,
)
from .lexprod import cross_check_product, lex_product_graph, lex_product_polynomial
from .polynomial import (
    DominationPolynomial,
    count_by_enumeration,
    count_by_inclusion_exclusion,
    domination_number,
    evaluate_complex,
    evaluate_exact,
)
from .roots import (
    ComplexRootSet,
    RealRootCertificate,
    RootClassification,
    certify_no_nonzero_real_roots,
    classify,
    find_all_roots,
    sturm_real_root_count,
)

__version__ = "0.1.0"
