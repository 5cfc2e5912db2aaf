from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Hashable, Iterator, Mapping, Sequence

from core.algebra import ExactMatrix, RingDescriptor, rank, smith_normal_form

from .exceptions import ChainMapError, DifferentialError, GroupActionError

Label = Hashable


@dataclass(frozen=True, eq=False)
class Complex:
    """
    A bounded chain complex of finitely generated free modules.

    `basis[i]` lists the labels of degree i and `differentials[i]` is the
    matrix of d_i: C_i -> C_{i-1}. Degrees with an empty basis and zero
    matrices are dropped at construction, and d_{i-1} d_i = 0 is checked.
    """

    ring: RingDescriptor
    basis: Mapping[int, tuple[Label, ...]]
    differentials: Mapping[int, ExactMatrix] = field(default_factory=dict)

    def __post_init__(self) -> None:
        basis = {
            int(degree): tuple(labels)
            for degree, labels in self.basis.items()
            if len(labels)
        }
        for degree, labels in basis.items():
            if len(set(labels)) != len(labels):
                raise DifferentialError(f"Duplicate basis labels in degree {degree}")
        differentials = {}
        for degree, matrix in self.differentials.items():
            self.ring.require_same(matrix.ring)
            expected = (len(basis.get(degree - 1, ())), len(basis.get(degree, ())))
            if matrix.shape != expected:
                raise DifferentialError(
                    f"d_{degree} has shape {matrix.shape}, expected {expected}"
                )
            if not matrix.is_zero():
                differentials[degree] = matrix
        object.__setattr__(self, "basis", MappingProxyType(basis))
        object.__setattr__(self, "differentials", MappingProxyType(differentials))

        for degree in differentials:
            if degree - 1 in differentials:
                if not (differentials[degree - 1] @ differentials[degree]).is_zero():
                    raise DifferentialError(f"d_{degree - 1} d_{degree} is not zero")

    def degrees(self) -> list[int]:
        return sorted(self.basis)

    def dim(self, degree: int) -> int:
        return len(self.basis.get(degree, ()))

    @property
    def dims(self) -> dict[int, int]:
        return {degree: self.dim(degree) for degree in self.degrees()}

    @property
    def total_dim(self) -> int:
        return sum(len(labels) for labels in self.basis.values())

    def labels(self, degree: int) -> tuple[Label, ...]:
        return self.basis.get(degree, ())

    @cached_property
    def _positions(self) -> dict[int, dict[Label, int]]:
        return {
            degree: {label: k for k, label in enumerate(labels)}
            for degree, labels in self.basis.items()
        }

    def index(self, degree: int, label: Label) -> int:
        try:
            return self._positions[degree][label]
        except KeyError:
            raise DifferentialError(f"No basis element {label!r} in degree {degree}")

    def d(self, degree: int) -> ExactMatrix:
        matrix = self.differentials.get(degree)
        if matrix is None:
            return ExactMatrix.zeros(self.ring, self.dim(degree - 1), self.dim(degree))
        return matrix

    def is_zero(self) -> bool:
        return not self.basis

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Complex):
            return NotImplemented
        return (
            self.ring == other.ring
            and dict(self.basis) == dict(other.basis)
            and dict(self.differentials) == dict(other.differentials)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Complex({self.ring}, dims={self.dims})"


@dataclass(frozen=True, eq=False)
class ChainMap:
    """
    Degreewise maps f_i: source_i -> target_i commuting with the differentials
    """

    source: Complex
    target: Complex
    components: Mapping[int, ExactMatrix] = field(default_factory=dict)

    def __post_init__(self) -> None:
        ring = self.source.ring
        ring.require_same(self.target.ring)
        components = {}
        for degree, matrix in self.components.items():
            ring.require_same(matrix.ring)
            expected = (self.target.dim(degree), self.source.dim(degree))
            if matrix.shape != expected:
                raise ChainMapError(
                    f"f_{degree} has shape {matrix.shape}, expected {expected}"
                )
            if not matrix.is_zero():
                components[degree] = matrix
        object.__setattr__(self, "components", MappingProxyType(components))

        for degree in set(self.source.basis) | set(self.target.basis):
            left = self.target.d(degree) @ self.component(degree)
            right = self.component(degree - 1) @ self.source.d(degree)
            if left != right:
                raise ChainMapError(f"Map does not commute with d in degree {degree}")

    @classmethod
    def identity(cls, c: Complex) -> ChainMap:
        return cls(c, c, {i: ExactMatrix.identity(c.ring, c.dim(i)) for i in c.degrees()})

    @classmethod
    def zero(cls, source: Complex, target: Complex) -> ChainMap:
        return cls(source, target)

    def component(self, degree: int) -> ExactMatrix:
        matrix = self.components.get(degree)
        if matrix is None:
            return ExactMatrix.zeros(
                self.source.ring, self.target.dim(degree), self.source.dim(degree)
            )
        return matrix

    def compose(self, other: ChainMap) -> ChainMap:
        """
        self after other
        """
        if other.target is not self.source and other.target != self.source:
            raise ChainMapError("Composable maps must share the middle complex")
        degrees = set(other.source.basis) & set(self.target.basis)
        return ChainMap(
            other.source,
            self.target,
            {i: self.component(i) @ other.component(i) for i in degrees},
        )

    def is_identity(self) -> bool:
        return self.source == self.target and all(
            self.component(i).is_identity() for i in self.source.degrees()
        )

    def is_zero(self) -> bool:
        return not self.components


def _same(a: Complex, b: Complex) -> bool:
    return a is b or a == b


def _is_invertible(matrix: ExactMatrix) -> bool:
    if matrix.rows != matrix.cols:
        return False
    if matrix.ring.is_field:
        return rank(matrix) == matrix.rows
    return all(d == 1 for d in smith_normal_form(matrix).diagonal)


@dataclass(frozen=True)
class GroupAction:
    """
    A finite group acting on a complex through chain automorphisms, given by
    generators and the order of the group they generate
    """

    complex: Complex
    generators: Sequence[ChainMap]
    declared_order: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(self.generators))
        if self.declared_order < 1:
            raise GroupActionError("The group order must be positive")
        for g in self.generators:
            if not (_same(g.source, self.complex) and _same(g.target, self.complex)):
                raise GroupActionError("Generators must be endomorphisms of the complex")
            for degree in self.complex.degrees():
                if not _is_invertible(g.component(degree)):
                    raise GroupActionError(
                        f"Generator is not invertible in degree {degree}"
                    )

    def is_trivial(self) -> bool:
        return all(g.is_identity() for g in self.generators)


@dataclass(frozen=True)
class HomologyProfile:
    """
    Free ranks and torsion invariant factors of H_i, keyed by degree.
    Torsion is only ever non-empty over Z.
    """

    ring: RingDescriptor
    free_ranks: Mapping[int, int] = field(default_factory=dict)
    torsion: Mapping[int, tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        free_ranks = {i: r for i, r in self.free_ranks.items() if r}
        torsion = {i: tuple(t) for i, t in self.torsion.items() if t}
        if torsion and self.ring.is_field:
            raise DifferentialError("Torsion is meaningless over a field")
        object.__setattr__(self, "free_ranks", MappingProxyType(free_ranks))
        object.__setattr__(self, "torsion", MappingProxyType(torsion))

    def rank(self, degree: int) -> int:
        return self.free_ranks.get(degree, 0)

    def torsion_at(self, degree: int) -> tuple[int, ...]:
        return self.torsion.get(degree, ())

    def degrees(self) -> list[int]:
        return sorted(set(self.free_ranks) | set(self.torsion))

    def is_zero(self) -> bool:
        return not self.free_ranks and not self.torsion

    def shifted(self, s: int) -> HomologyProfile:
        return HomologyProfile(
            self.ring,
            {i + s: r for i, r in self.free_ranks.items()},
            {i + s: t for i, t in self.torsion.items()},
        )

    def __iter__(self) -> Iterator[tuple[int, int, tuple[int, ...]]]:
        for degree in self.degrees():
            yield degree, self.rank(degree), self.torsion_at(degree)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomologyProfile):
            return NotImplemented
        return (
            self.ring == other.ring
            and dict(self.free_ranks) == dict(other.free_ranks)
            and dict(self.torsion) == dict(other.torsion)
        )

    def __hash__(self) -> int:
        return hash((self.ring, tuple(self)))
