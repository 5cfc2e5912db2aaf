"""
Bounded chain complexes of free modules with labeled bases, and the
constructions and homology computations used to assemble and test
coproduct components.
"""

from .constructions import (
    block_projection,
    coinvariants,
    cone,
    direct_sum,
    relabel,
    shift,
    tensor,
    unit_complex,
    zero_complex,
)
from .exceptions import ChainMapError, DifferentialError, GroupActionError
from .homology import homology, is_acyclic, is_quasi_iso
from .models import ChainMap, Complex, GroupAction, HomologyProfile, Label

__all__ = [
    "ChainMap",
    "ChainMapError",
    "Complex",
    "DifferentialError",
    "GroupAction",
    "GroupActionError",
    "HomologyProfile",
    "Label",
    "block_projection",
    "coinvariants",
    "cone",
    "direct_sum",
    "homology",
    "is_acyclic",
    "is_quasi_iso",
    "relabel",
    "shift",
    "tensor",
    "unit_complex",
    "zero_complex",
]
