"""Combinatorial invariants and monodromy certificates for positive braids."""

from .braid import (
    BraidWord,
    ClosureSummary,
    Move,
    apply_move,
    closure_summary,
    half_twist_divides,
    parse_braid,
    strand_reduce,
)
from .certify import Budget, CertifyOutcome, certify, verify_certificate
from .divides import OrderedMorseDivide, divide_to_braid, parse_divide, validate_divide
from .linking import (
    Brick,
    LinkingGraph,
    contains_E6_subtree,
    dynkin_type,
    induced_path,
    is_prime,
    linking_graph,
)
from .seifert import alexander_polynomial, arf_invariant, seifert_matrix
from .surface import BrickSurface, CurveConfiguration, verify_assemblage

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "Brick",
    "BrickSurface",
    "Budget",
    "CertifyOutcome",
    "ClosureSummary",
    "CurveConfiguration",
    "LinkingGraph",
    "Move",
    "OrderedMorseDivide",
    "alexander_polynomial",
    "apply_move",
    "arf_invariant",
    "certify",
    "closure_summary",
    "contains_E6_subtree",
    "divide_to_braid",
    "dynkin_type",
    "half_twist_divides",
    "induced_path",
    "is_prime",
    "linking_graph",
    "parse_braid",
    "parse_divide",
    "seifert_matrix",
    "strand_reduce",
    "validate_divide",
    "verify_assemblage",
    "verify_certificate",
]
