from __future__ import annotations

from itertools import permutations

from core.algebra import ExactMatrix, RingDescriptor
from core.complexes import ChainMap, Complex, Label, zero_complex

from .base import SymmetricCollection


class UnitOperad(SymmetricCollection):
    """
    k in arity 1 and nothing else: coproducts with it are free operads
    """

    name = "UNIT"

    @property
    def unit_label(self) -> Label:
        return "id"

    def build_component(self, m: int) -> Complex:
        if m == 1:
            return Complex(self.ring, {0: ("id",)})
        return zero_complex(self.ring)

    def build_transposition(self, m: int, i: int) -> ChainMap:
        return ChainMap.identity(self.component(m))


class CommutativeOperad(SymmetricCollection):
    """
    One operation mu_m in degree 0 for every arity, with trivial actions.
    The non-unital variant has O(0) = 0.
    """

    def __init__(self, ring: RingDescriptor, unital: bool = True) -> None:
        super().__init__(ring)
        self.unital = unital
        self.name = "COM" if unital else "COM_NONUNITAL"

    @property
    def unit_label(self) -> Label:
        return "mu1"

    def build_component(self, m: int) -> Complex:
        if m == 0 and not self.unital:
            return zero_complex(self.ring)
        return Complex(self.ring, {0: (f"mu{m}",)})

    def build_transposition(self, m: int, i: int) -> ChainMap:
        return ChainMap.identity(self.component(m))


class AssociativeOperad(SymmetricCollection):
    """
    Non-unital associative operad: O(m) is free on the orderings of m inputs,
    a tuple w standing for the product x_{w[0]} x_{w[1]} ... Permutations
    relabel the inputs, which is the regular representation.
    """

    name = "ASSOC_NONUNITAL"

    @property
    def unit_label(self) -> Label:
        return (0,)

    def build_component(self, m: int) -> Complex:
        if m == 0:
            return zero_complex(self.ring)
        return Complex(self.ring, {0: tuple(permutations(range(m)))})

    def build_transposition(self, m: int, i: int) -> ChainMap:
        c = self.component(m)
        entries = {}
        for column, word in enumerate(c.labels(0)):
            image = tuple(i + 1 if x == i else i if x == i + 1 else x for x in word)
            entries[(c.index(0, image), column)] = 1
        return ChainMap(c, c, {0: ExactMatrix(self.ring, c.dim(0), c.dim(0), entries)})
