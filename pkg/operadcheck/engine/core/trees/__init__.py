"""
Rooted trees with (r, n)-markings: the reduced condition, canonical codes,
automorphism groups and the enumeration of reduced isomorphism classes.
"""

from .canonical import (
    automorphisms,
    canonical_code,
    canonical_preorder,
    has_nullary_o_vertex,
    has_unary_o_vertex,
    is_automorphism,
    is_reduced,
    sorted_children,
    vertex_codes,
)
from .enumeration import (
    ReducedTreeEnumerator,
    StructuralBound,
    enumerate_reduced,
    structural_bound,
)
from .exceptions import InvalidMarkingError, InvalidTreeError
from .models import AutGroup, CanonicalCode, Marking, MarkedTree, Tree, VertexKind
from .rendering import render

__all__ = [
    "AutGroup",
    "CanonicalCode",
    "InvalidMarkingError",
    "InvalidTreeError",
    "MarkedTree",
    "Marking",
    "ReducedTreeEnumerator",
    "StructuralBound",
    "Tree",
    "VertexKind",
    "automorphisms",
    "canonical_code",
    "canonical_preorder",
    "enumerate_reduced",
    "has_nullary_o_vertex",
    "has_unary_o_vertex",
    "is_automorphism",
    "is_reduced",
    "render",
    "sorted_children",
    "structural_bound",
    "vertex_codes",
]
