"""
Enumeration of isomorphism classes of reduced (r, n)-marked trees.

Trees are grown top-down from the constraints the reduced condition forces:
an operad vertex (O) only has S-vertices and argument leaves as children,
and a non-root O-vertex always hangs from an S-vertex. Children are produced
as multisets in ascending code order, so every class appears once.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .canonical import (
    canonical_code,
    encode,
    has_nullary_o_vertex,
    has_unary_o_vertex,
    is_reduced,
)
from .models import MarkedTree, VertexKind

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StructuralBound:
    max_vertices: int
    max_valence: int
    max_o_vertices: int
    max_depth: int


def structural_bound(
    r: int, n: int, s_count: int, allow_nullary: bool = True, allow_unary: bool = True
) -> StructuralBound:
    """
    Bounds satisfied by every reduced (r, n)-marked tree with |S| = s_count.

    O-vertices other than the root hang from S-vertices, so there are at most
    1 + n * s_count of them; their children are S-vertices or argument leaves.
    A root-to-leaf path alternates S-vertices with O-vertices and may end in an
    argument leaf below the last O-vertex.
    """
    max_o = 1 + n * s_count
    if not allow_nullary:
        # each non-root O-vertex then owns at least one S or argument child
        max_o = 1 + min(n * s_count, r + s_count)
    if n == 0 or s_count == 0:
        max_depth = 2
    else:
        max_depth = 2 * s_count + 2
    return StructuralBound(
        max_vertices=max_o + s_count + r,
        max_valence=r + s_count + n * s_count,
        max_o_vertices=max_o,
        max_depth=max_depth,
    )


@dataclass(frozen=True)
class _Node:
    kind: VertexKind
    label: int | None
    children: tuple[_Node, ...]
    code: bytes
    args: frozenset[int]
    s_count: int
    size: int

    @classmethod
    def make(cls, kind: VertexKind, label: int | None, children: tuple[_Node, ...]) -> _Node:
        tag = kind.value.encode("ascii")
        if kind is VertexKind.ARG:
            tag += str(label).encode("ascii")
        args = frozenset({label}) if label is not None else frozenset()
        for child in children:
            args |= child.args
        return cls(
            kind=kind,
            label=label,
            children=children,
            code=encode(tag, [c.code for c in children]),
            args=args,
            s_count=(kind is VertexKind.S) + sum(c.s_count for c in children),
            size=1 + sum(c.size for c in children),
        )


_CHILD_KINDS = {
    VertexKind.S: (VertexKind.O, VertexKind.S, VertexKind.ARG),
    VertexKind.O: (VertexKind.S, VertexKind.ARG),
}


class ReducedTreeEnumerator:
    """
    Memoized generator of reduced subtrees for fixed (n, flags).

    `subtrees(kind, args, s)` lists every subtree whose root has the given
    kind, which carries exactly the argument labels `args` and exactly `s`
    S-vertices, sorted by code.
    """

    def __init__(
        self,
        n: int,
        allow_nullary: bool,
        allow_unary: bool,
        vertex_limit: int | None = None,
    ) -> None:
        self.n = n
        self.allow_nullary = allow_nullary
        self.allow_unary = allow_unary
        self.vertex_limit = vertex_limit
        self._memo: dict[tuple[VertexKind, frozenset[int], int], list[_Node]] = {}
        self._candidate_memo: dict[tuple, list[_Node]] = {}

    def subtrees(self, kind: VertexKind, args: frozenset[int], s: int) -> list[_Node]:
        key = (kind, args, s)
        if key not in self._memo:
            nodes = [
                node
                for node in self._build(kind, args, s)
                if self.vertex_limit is None or node.size <= self.vertex_limit
            ]
            self._memo[key] = sorted(nodes, key=lambda node: node.code)
        return self._memo[key]

    def _build(self, kind: VertexKind, args: frozenset[int], s: int) -> Iterator[_Node]:
        if kind is VertexKind.ARG:
            if len(args) == 1 and s == 0:
                (label,) = args
                yield _Node.make(kind, label, ())
            return
        if kind is VertexKind.S:
            if s < 1:
                return
            for children in self._multisets(_CHILD_KINDS[kind], args, s - 1, self.n, None):
                yield _Node.make(kind, None, children)
            return
        for children in self._multisets(_CHILD_KINDS[kind], args, s, None, None):
            if len(children) == 0 and not self.allow_nullary:
                continue
            if len(children) == 1 and not self.allow_unary:
                continue
            yield _Node.make(kind, None, children)

    def _candidates(
        self, kinds: tuple[VertexKind, ...], args: frozenset[int], s: int
    ) -> list[_Node]:
        key = (kinds, args, s)
        if key in self._candidate_memo:
            return self._candidate_memo[key]
        found = []
        labels = sorted(args)
        for size in range(len(labels) + 1):
            for subset in combinations(labels, size):
                for s_child in range(s + 1):
                    for kind in kinds:
                        found.extend(self.subtrees(kind, frozenset(subset), s_child))
        self._candidate_memo[key] = sorted(found, key=lambda node: node.code)
        return self._candidate_memo[key]

    def _multisets(
        self,
        kinds: tuple[VertexKind, ...],
        args: frozenset[int],
        s: int,
        count: int | None,
        lower: bytes | None,
    ) -> Iterator[tuple[_Node, ...]]:
        """
        Tuples of children in ascending code order using up exactly `args`
        and `s`; exactly `count` children, or any number when count is None
        """
        if count == 0 or (count is None and not args and s == 0):
            if not args and s == 0:
                yield ()
            return
        for child in self._candidates(kinds, args, s):
            if lower is not None and child.code < lower:
                continue
            rest = None if count is None else count - 1
            for tail in self._multisets(
                kinds, args - child.args, s - child.s_count, rest, child.code
            ):
                yield (child,) + tail

    def roots(self, args: frozenset[int], s: int) -> list[_Node]:
        found = []
        for kind in (VertexKind.O, VertexKind.S, VertexKind.ARG):
            found.extend(self.subtrees(kind, args, s))
        return found


def _to_marked_tree(node: _Node, r: int, n: int) -> MarkedTree:
    parent: list[int | None] = []
    arg_map: dict[int, int] = {}
    S: set[int] = set()

    def visit(current: _Node, up: int | None) -> None:
        v = len(parent)
        parent.append(up)
        if current.kind is VertexKind.S:
            S.add(v)
        elif current.kind is VertexKind.ARG:
            arg_map[current.label] = v  # type: ignore[index]
        for child in current.children:
            visit(child, v)

    visit(node, None)
    return MarkedTree.build(
        parent, r=r, n=n, arg_map=[arg_map[i] for i in range(1, r + 1)], S=S
    )


def enumerate_reduced(
    r: int,
    n: int,
    max_s: int,
    allow_nullary: bool = True,
    allow_unary: bool = True,
    vertex_limit: int | None = None,
) -> dict[int, list[MarkedTree]]:
    """
    One representative per isomorphism class of reduced (r, n)-marked trees
    with |S| <= max_s, keyed by |S| and sorted by canonical code.

    `vertex_limit` caps the size of the generated trees; it defaults to the
    structural bound for max_s, which every class already satisfies.
    """
    if vertex_limit is None:
        vertex_limit = structural_bound(r, n, max_s, allow_nullary, allow_unary).max_vertices
    enumerator = ReducedTreeEnumerator(n, allow_nullary, allow_unary, vertex_limit)
    args = frozenset(range(1, r + 1))

    classes: dict[int, list[MarkedTree]] = {}
    for s in range(max_s + 1):
        seen: set[bytes] = set()
        trees = []
        for node in enumerator.roots(args, s):
            tree = _to_marked_tree(node, r, n)
            code = canonical_code(tree).value
            if code in seen or not is_reduced(tree):
                continue
            if not allow_nullary and has_nullary_o_vertex(tree):
                continue
            if not allow_unary and has_unary_o_vertex(tree):
                continue
            seen.add(code)
            trees.append(tree)
        classes[s] = sorted(trees, key=lambda t: canonical_code(t).value)
        logger.debug(
            f"Trees | r={r} | n={n} | |S|={s} | classes={len(classes[s])}"
        )
    return classes
