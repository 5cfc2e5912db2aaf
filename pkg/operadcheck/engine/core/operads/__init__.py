"""
Symmetric collections, the built-in operads and the tree components of the
coproduct of an operad with a free operad on a complex of n-ary generators.
"""

from .base import GeneratorCollection, SymmetricCollection, adjacent_word, make_generator_collection
from .builtins import AssociativeOperad, CommutativeOperad, UnitOperad
from .components import (
    ComponentVerdict,
    CoproductTruncation,
    InclusionVerdict,
    TreeComponent,
    check_inclusion_qiso,
    coproduct_component,
    factor_order,
    injection_of,
    projection_of,
    tensor_all,
    tree_component,
    verdict_for,
)
from .exceptions import (
    ComponentTooLargeError,
    DescriptionFileError,
    InvalidCollectionError,
    OperadNotFound,
)
from .loaders import TabulatedCollection, load_collection, load_collections, parse_collection
from .registries import OPERAD_REGISTRY, builtin_operad, normalize_operad_name

__all__ = [
    "AssociativeOperad",
    "CommutativeOperad",
    "ComponentTooLargeError",
    "ComponentVerdict",
    "CoproductTruncation",
    "DescriptionFileError",
    "GeneratorCollection",
    "InclusionVerdict",
    "InvalidCollectionError",
    "OPERAD_REGISTRY",
    "OperadNotFound",
    "SymmetricCollection",
    "TabulatedCollection",
    "TreeComponent",
    "UnitOperad",
    "adjacent_word",
    "builtin_operad",
    "check_inclusion_qiso",
    "coproduct_component",
    "factor_order",
    "injection_of",
    "load_collection",
    "load_collections",
    "make_generator_collection",
    "normalize_operad_name",
    "parse_collection",
    "projection_of",
    "tensor_all",
    "tree_component",
    "verdict_for",
]
