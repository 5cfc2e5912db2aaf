from functools import partial
from typing import Callable

from core.algebra import RingDescriptor

from .base import SymmetricCollection
from .builtins import AssociativeOperad, CommutativeOperad, UnitOperad
from .exceptions import OperadNotFound

OPERAD_REGISTRY: dict[str, Callable[[RingDescriptor], SymmetricCollection]] = {
    "UNIT": UnitOperad,
    "COM": partial(CommutativeOperad, unital=True),
    "COM_NONUNITAL": partial(CommutativeOperad, unital=False),
    "ASSOC_NONUNITAL": AssociativeOperad,
}


def normalize_operad_name(name: str) -> str:
    return (name or "").strip().upper().replace("-", "_")


def builtin_operad(name: str, ring: RingDescriptor) -> SymmetricCollection:
    """
    Retrieves a built-in operad by name ("com", "COM-NONUNITAL", ...)
    """
    OperadClass = OPERAD_REGISTRY.get(normalize_operad_name(name))

    if OperadClass is None:
        raise OperadNotFound(
            f"Unknown operad {name!r}; expected one of {', '.join(OPERAD_REGISTRY)}"
        )
    return OperadClass(ring)
