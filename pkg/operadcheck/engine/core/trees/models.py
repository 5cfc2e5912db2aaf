from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Sequence

from .exceptions import InvalidMarkingError, InvalidTreeError

Arrow = tuple[int, int]


class VertexKind(str, Enum):
    S = "S"  # an M-slot
    ARG = "A"  # an argument leaf
    O = "O"  # an operad vertex

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Tree:
    """
    A rooted tree on the vertices 0..len(parent)-1.

    Every vertex but the root has exactly one outgoing arrow v -> parent[v];
    the root is the unique vertex whose parent is None.
    """

    parent: tuple[int | None, ...]

    def __post_init__(self) -> None:
        parent = tuple(self.parent)
        object.__setattr__(self, "parent", parent)
        size = len(parent)
        if size == 0:
            raise InvalidTreeError("A tree needs at least one vertex")
        roots = [v for v, p in enumerate(parent) if p is None]
        if len(roots) != 1:
            raise InvalidTreeError(f"Expected exactly one root, found {len(roots)}")
        for v, p in enumerate(parent):
            if p is not None and (not 0 <= p < size or p == v):
                raise InvalidTreeError(f"Vertex {v} has an invalid parent {p!r}")
        # every walk towards the root must end there
        for v in range(size):
            seen = 0
            u: int | None = v
            while u is not None:
                u = parent[u]
                seen += 1
                if seen > size:
                    raise InvalidTreeError(f"Cycle through vertex {v}")

    @classmethod
    def from_arrows(cls, size: int, arrows: Iterable[Arrow]) -> Tree:
        parent: list[int | None] = [None] * size
        for source, target in arrows:
            if parent[source] is not None:
                raise InvalidTreeError(f"Vertex {source} has two outgoing arrows")
            parent[source] = target
        return cls(tuple(parent))

    @property
    def size(self) -> int:
        return len(self.parent)

    @property
    def vertices(self) -> range:
        return range(len(self.parent))

    @cached_property
    def root(self) -> int:
        return self.parent.index(None)

    @property
    def arrows(self) -> tuple[Arrow, ...]:
        return tuple((v, p) for v, p in enumerate(self.parent) if p is not None)

    @cached_property
    def _children(self) -> tuple[tuple[int, ...], ...]:
        children: list[list[int]] = [[] for _ in self.parent]
        for v, p in enumerate(self.parent):
            if p is not None:
                children[p].append(v)
        return tuple(tuple(c) for c in children)

    def children(self, v: int) -> tuple[int, ...]:
        """The sources of the incoming arrows of v"""
        return self._children[v]

    def valence(self, v: int) -> int:
        return len(self._children[v])

    def initial_vertices(self) -> frozenset[int]:
        return frozenset(v for v in self.vertices if not self._children[v])

    def depth(self, v: int) -> int:
        d = 0
        while self.parent[v] is not None:
            v = self.parent[v]  # type: ignore[assignment]
            d += 1
        return d

    @property
    def height(self) -> int:
        """Number of vertices on the longest root-to-leaf path"""
        return 1 + max(self.depth(v) for v in self.vertices)


@dataclass(frozen=True)
class Marking:
    """
    An (r, n)-marking: argument labels 1..r placed on initial vertices
    (arg_map[i - 1] is the vertex labelled i) and a set S of valence-n vertices
    """

    r: int
    n: int
    arg_map: tuple[int, ...] = ()
    S: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "arg_map", tuple(self.arg_map))
        object.__setattr__(self, "S", frozenset(self.S))
        if self.r < 0 or self.n < 0:
            raise InvalidMarkingError("r and n must be non-negative")
        if len(self.arg_map) != self.r:
            raise InvalidMarkingError(f"Expected {self.r} argument vertices")
        if len(set(self.arg_map)) != self.r:
            raise InvalidMarkingError("The argument map is not injective")

    @property
    def args(self) -> frozenset[int]:
        return frozenset(self.arg_map)

    def validate(self, tree: Tree) -> None:
        vertices = set(tree.vertices)
        if not self.args <= vertices or not self.S <= vertices:
            raise InvalidMarkingError("Marking refers to vertices outside the tree")
        if not self.args <= tree.initial_vertices():
            raise InvalidMarkingError("Argument vertices must be initial")
        for v in self.S:
            if tree.valence(v) != self.n:
                raise InvalidMarkingError(
                    f"S-vertex {v} has valence {tree.valence(v)}, expected {self.n}"
                )
        if self.S & self.args:
            raise InvalidMarkingError("S and the argument vertices must be disjoint")


@dataclass(frozen=True)
class MarkedTree:
    tree: Tree
    marking: Marking

    def __post_init__(self) -> None:
        self.marking.validate(self.tree)

    @classmethod
    def build(
        cls,
        parent: Sequence[int | None],
        r: int = 0,
        n: int = 0,
        arg_map: Sequence[int] = (),
        S: Iterable[int] = (),
    ) -> MarkedTree:
        return cls(Tree(tuple(parent)), Marking(r, n, tuple(arg_map), frozenset(S)))

    @property
    def r(self) -> int:
        return self.marking.r

    @property
    def n(self) -> int:
        return self.marking.n

    @property
    def S(self) -> frozenset[int]:
        return self.marking.S

    @property
    def s_count(self) -> int:
        return len(self.marking.S)

    @cached_property
    def _labels(self) -> dict[int, int]:
        return {v: i + 1 for i, v in enumerate(self.marking.arg_map)}

    def arg_label(self, v: int) -> int | None:
        return self._labels.get(v)

    def kind(self, v: int) -> VertexKind:
        if v in self.marking.S:
            return VertexKind.S
        if v in self._labels:
            return VertexKind.ARG
        return VertexKind.O

    def vertices_of(self, kind: VertexKind) -> list[int]:
        return [v for v in self.tree.vertices if self.kind(v) is kind]

    @property
    def o_vertices(self) -> list[int]:
        return self.vertices_of(VertexKind.O)


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """
    A serialized isomorphism invariant of a marked tree. Each vertex is
    written as "(" tag children ")" with tag S, O or A<label> and child codes
    in ascending byte order.
    """

    value: bytes

    @classmethod
    def parse(cls, text: str) -> CanonicalCode:
        return cls(text.strip().encode("ascii"))

    def __str__(self) -> str:
        return self.value.decode("ascii")


Permutation = tuple[int, ...]


@dataclass(frozen=True)
class AutGroup:
    generators: tuple[Permutation, ...]
    order: int

    def is_trivial(self) -> bool:
        return self.order == 1
