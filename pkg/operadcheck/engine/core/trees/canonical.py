"""
Canonical codes, the reduced condition and automorphism groups of marked
trees.
"""

from __future__ import annotations

from collections import Counter
from math import factorial, prod

from .models import AutGroup, CanonicalCode, MarkedTree, Permutation, VertexKind


def vertex_tag(t: MarkedTree, v: int) -> bytes:
    kind = t.kind(v)
    if kind is VertexKind.ARG:
        return b"A" + str(t.arg_label(v)).encode("ascii")
    return kind.value.encode("ascii")


def encode(tag: bytes, child_codes: list[bytes]) -> bytes:
    return b"(" + tag + b"".join(sorted(child_codes)) + b")"


def vertex_codes(t: MarkedTree) -> dict[int, bytes]:
    """
    The code of the subtree hanging from every vertex, built bottom-up
    """
    tree = t.tree
    codes: dict[int, bytes] = {}
    order = sorted(tree.vertices, key=tree.depth, reverse=True)
    for v in order:
        codes[v] = encode(vertex_tag(t, v), [codes[c] for c in tree.children(v)])
    return codes


def canonical_code(t: MarkedTree) -> CanonicalCode:
    return CanonicalCode(vertex_codes(t)[t.tree.root])


def sorted_children(
    t: MarkedTree, v: int, codes: dict[int, bytes] | None = None
) -> list[int]:
    codes = codes if codes is not None else vertex_codes(t)
    return sorted(t.tree.children(v), key=lambda c: (codes[c], c))


def canonical_preorder(t: MarkedTree) -> list[int]:
    """
    Vertices in preorder, visiting children by ascending (code, vertex id)
    """
    codes = vertex_codes(t)
    order: list[int] = []
    stack = [t.tree.root]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(reversed(sorted_children(t, v, codes)))
    return order


def is_reduced(t: MarkedTree) -> bool:
    """
    Every arrow a: u -> w has u in S, u an argument vertex, or w in S
    """
    S = t.marking.S
    args = t.marking.args
    return all(
        source in S or source in args or target in S for source, target in t.tree.arrows
    )


def has_nullary_o_vertex(t: MarkedTree) -> bool:
    return any(t.tree.valence(v) == 0 for v in t.o_vertices)


def has_unary_o_vertex(t: MarkedTree) -> bool:
    return any(t.tree.valence(v) == 1 for v in t.o_vertices)


def _subtree_isomorphism(
    t: MarkedTree, u: int, w: int, codes: dict[int, bytes]
) -> dict[int, int]:
    # pairs equal-code children in (code, id) order
    mapping = {u: w}
    for a, b in zip(sorted_children(t, u, codes), sorted_children(t, w, codes)):
        mapping.update(_subtree_isomorphism(t, a, b, codes))
    return mapping


def automorphisms(t: MarkedTree) -> AutGroup:
    """
    Generators swap adjacent isomorphic sibling subtrees; the order is the
    product over vertices of the factorials of repeated child codes.
    """
    codes = vertex_codes(t)
    size = t.tree.size
    generators: list[Permutation] = []
    order = 1
    for v in t.tree.vertices:
        children = sorted_children(t, v, codes)
        order *= prod(factorial(k) for k in Counter(codes[c] for c in children).values())
        for left, right in zip(children, children[1:]):
            if codes[left] != codes[right]:
                continue
            image = list(range(size))
            forward = _subtree_isomorphism(t, left, right, codes)
            for a, b in forward.items():
                image[a] = b
                image[b] = a
            generators.append(tuple(image))
    return AutGroup(tuple(generators), order)


def is_automorphism(t: MarkedTree, permutation: Permutation) -> bool:
    tree = t.tree
    if sorted(permutation) != list(tree.vertices):
        return False
    for v in tree.vertices:
        w = permutation[v]
        p = tree.parent[v]
        if (p is None) != (tree.parent[w] is None):
            return False
        if p is not None and permutation[p] != tree.parent[w]:
            return False
        if t.kind(v) is not t.kind(w) or t.arg_label(v) != t.arg_label(w):
            return False
    return True
