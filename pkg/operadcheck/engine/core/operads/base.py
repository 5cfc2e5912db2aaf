from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Sequence

from core.algebra import RingDescriptor
from core.complexes import ChainMap, Complex, Label, cone, relabel, shift, unit_complex

from .exceptions import InvalidCollectionError


def adjacent_word(permutation: Sequence[int]) -> list[int]:
    """
    Indices i_1, ..., i_k with permutation = s_{i_1} o ... o s_{i_k}, where
    s_i exchanges i and i + 1
    """
    current = list(permutation)
    word = []
    while True:
        position = {value: k for k, value in enumerate(current)}
        i = next((i for i in range(len(current) - 1) if position[i + 1] < position[i]), None)
        if i is None:
            return word
        word.append(i)
        current = [i + 1 if x == i else i if x == i + 1 else x for x in current]


class SymmetricCollection(ABC):
    """
    Arity-indexed complexes O(m) with a left action of the symmetric group.

    Permutations act by moving input j to position sigma(j). Subclasses give
    the action of the adjacent transpositions; arity 1 carries a designated
    unit in degree 0 whose complement is the reduced part.
    """

    name: str = "collection"

    def __init__(self, ring: RingDescriptor) -> None:
        self.ring = ring
        self._components: dict[int, Complex] = {}
        self._transpositions: dict[tuple[int, int], ChainMap] = {}
        self._reduced_unary: Complex | None = None

    @abstractmethod
    def build_component(self, m: int) -> Complex: ...

    @abstractmethod
    def build_transposition(self, m: int, i: int) -> ChainMap: ...

    @property
    @abstractmethod
    def unit_label(self) -> Label | None: ...

    def component(self, m: int) -> Complex:
        if m not in self._components:
            self._components[m] = self.build_component(m)
        return self._components[m]

    def transposition(self, m: int, i: int) -> ChainMap:
        """The action of s_i = (i, i + 1) on O(m)"""
        if not 0 <= i < m - 1:
            raise InvalidCollectionError(f"No transposition s_{i} in arity {m}")
        key = (m, i)
        if key not in self._transpositions:
            self._transpositions[key] = self.build_transposition(m, i)
        return self._transpositions[key]

    def permutation_action(self, permutation: Sequence[int]) -> ChainMap:
        m = len(permutation)
        action = ChainMap.identity(self.component(m))
        for i in adjacent_word(permutation):
            action = action.compose(self.transposition(m, i))
        return action

    def reduced_unary(self) -> Complex:
        """O(1) with the unit line removed"""
        if self._reduced_unary is None:
            c = self.component(1)
            label = self.unit_label
            if label is None:
                self._reduced_unary = c
            else:
                keep = {
                    i: [k for k, x in enumerate(c.labels(i)) if not (i == 0 and x == label)]
                    for i in c.degrees()
                }
                self._reduced_unary = Complex(
                    self.ring,
                    {i: [c.labels(i)[k] for k in kept] for i, kept in keep.items()},
                    {
                        i: c.d(i).submatrix(keep.get(i - 1, []), keep[i])
                        for i in c.differentials
                    },
                )
        return self._reduced_unary

    def factor(self, valence: int) -> Complex:
        """The tensor factor of an operad vertex with the given valence"""
        if valence == 1:
            return self.reduced_unary()
        return self.component(valence)

    def factor_action(self, permutation: Sequence[int]) -> ChainMap:
        if len(permutation) == 1:
            return ChainMap.identity(self.reduced_unary())
        return self.permutation_action(permutation)

    def has_nullary(self) -> bool:
        return not self.component(0).is_zero()

    def has_reduced_unary(self) -> bool:
        return not self.reduced_unary().is_zero()

    def validate(self, max_arity: int = 4) -> None:
        """
        Check that the transpositions are involutions satisfying the braid
        relations, and that the unit is a degree-0 cycle split off from O(1)
        """
        for m in range(2, max_arity + 1):
            if self.component(m).is_zero():
                continue
            for i in range(m - 1):
                t = self.transposition(m, i)
                if not t.compose(t).is_identity():
                    raise InvalidCollectionError(f"s_{i} does not square to 1 in arity {m}")
                if i + 1 < m - 1:
                    u = self.transposition(m, i + 1)
                    if not _same_map(t.compose(u).compose(t), u.compose(t).compose(u)):
                        raise InvalidCollectionError(f"Braid relation fails in arity {m}")
                for j in range(i + 2, m - 1):
                    u = self.transposition(m, j)
                    if not _same_map(t.compose(u), u.compose(t)):
                        raise InvalidCollectionError(f"s_{i} and s_{j} do not commute")

        label = self.unit_label
        if label is None:
            return
        unary = self.component(1)
        if label not in unary.labels(0):
            raise InvalidCollectionError(f"Unit {label!r} is not a degree-0 generator of O(1)")
        position = unary.index(0, label)
        if any(unary.d(0).column(position)):
            raise InvalidCollectionError("The unit must be a cycle")
        if unary.d(1).row(position):
            raise InvalidCollectionError("The unit line must split off as a subcomplex")


def _same_map(f: ChainMap, g: ChainMap) -> bool:
    return all(f.component(i) == g.component(i) for i in f.source.degrees())


@dataclass(frozen=True)
class GeneratorCollection:
    """
    The complex M of n-ary generators with the trivial symmetric action
    """

    n: int
    m_complex: Complex
    s: int = 0

    @property
    def ring(self) -> RingDescriptor:
        return self.m_complex.ring


def make_generator_collection(ring: RingDescriptor, n: int, s: int = 0) -> GeneratorCollection:
    """
    M = cone(id_k)[s] with generators a in degree s + 1 and b in degree s,
    d a = b
    """
    m = shift(cone(ChainMap.identity(unit_complex(ring))), s)
    names = {"tgt": "b", "src": "a"}
    m = relabel(m, lambda _, label: names[label[0]])
    return GeneratorCollection(n=n, m_complex=m, s=s)
