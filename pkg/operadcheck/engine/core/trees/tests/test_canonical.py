from functools import cache
from math import factorial
from random import Random

import pytest

from core.trees import (
    InvalidMarkingError,
    InvalidTreeError,
    MarkedTree,
    Tree,
    automorphisms,
    canonical_code,
    canonical_preorder,
    is_automorphism,
    is_reduced,
    render,
)

from .factories import (
    MarkedTreeFactory,
    all_markings,
    brute_force_aut_order,
    brute_force_classes,
    brute_force_isomorphic,
    relabel,
    tree_shapes,
)


def corolla(m: int, n: int = 0) -> MarkedTree:
    return MarkedTree.build([None] + [0] * m, n=n, S=range(1, m + 1))


@cache
def every_marked_tree(size: int) -> tuple[MarkedTree, ...]:
    return tuple(MarkedTree(tree, m) for tree in tree_shapes(size) for m in all_markings(tree))


# every marking of every shape; 6 and 7 vertices run in the slow lane
EXHAUSTIVE_SIZES = [
    1,
    2,
    3,
    4,
    5,
    pytest.param(6, marks=pytest.mark.slow),
    pytest.param(7, marks=pytest.mark.slow),
]


class TestTreeModel:
    def test_root_and_arrows(self):
        tree = Tree((1, None, 1))
        assert tree.root == 1
        assert tree.arrows == ((0, 1), (2, 1))
        assert tree.initial_vertices() == {0, 2}
        assert tree.height == 2

    @pytest.mark.parametrize("parent", [(), (None, None), (1, 0), (None, 5), (None, 1)])
    def test_invalid_parent_maps(self, parent):
        with pytest.raises(InvalidTreeError):
            Tree(parent)

    def test_from_arrows(self):
        assert Tree.from_arrows(3, [(1, 0), (2, 1)]).parent == (None, 0, 1)

    def test_s_vertices_need_valence_n(self):
        with pytest.raises(InvalidMarkingError):
            MarkedTree.build([None, 0], n=1, S=[1])

    def test_arguments_must_be_initial(self):
        with pytest.raises(InvalidMarkingError):
            MarkedTree.build([None, 0], r=1, arg_map=[0])

    def test_s_and_arguments_are_disjoint(self):
        with pytest.raises(InvalidMarkingError):
            MarkedTree.build([None, 0], r=1, n=0, arg_map=[1], S=[1])


class TestIsReduced:
    def test_single_vertex(self):
        assert is_reduced(MarkedTree.build([None]))

    def test_plain_child_of_operad_vertex(self):
        assert not is_reduced(MarkedTree.build([None, 0]))

    def test_corolla_of_s_children(self):
        assert is_reduced(corolla(3))

    def test_argument_children(self):
        assert is_reduced(MarkedTree.build([None, 0, 0], r=2, arg_map=[2, 1]))


class TestCanonicalCode:
    def test_format(self):
        assert str(canonical_code(corolla(2))) == "(O(S)(S))"
        t = MarkedTree.build([None, 0, 0], r=2, arg_map=[2, 1])
        assert str(canonical_code(t)) == "(O(A1)(A2))"

    def test_relabelings_share_a_code(self, seed):
        rng = Random(seed)
        for _ in range(50):
            t = MarkedTreeFactory()
            assert canonical_code(relabel(t, rng)) == canonical_code(t)

    def test_different_shapes(self):
        chain = MarkedTree.build([None, 0, 1], n=1, S=[0, 1])
        two_s = MarkedTree.build([None, 0, 0, 1, 2], n=1, S=[1, 2])
        assert canonical_code(chain) != canonical_code(two_s)

    @pytest.mark.parametrize("size", EXHAUSTIVE_SIZES)
    def test_matches_brute_force_isomorphism(self, size):
        trees = every_marked_tree(size)
        by_code: dict = {}
        for t in trees:
            by_code.setdefault((t.n, canonical_code(t)), []).append(t)
        for members in by_code.values():
            assert all(brute_force_isomorphic(members[0], t) for t in members[1:])
        assert len(by_code) == len(brute_force_classes(list(trees)))

    @pytest.mark.parametrize("size, count", [(1, 1), (2, 1), (3, 2), (4, 4), (5, 9), (6, 20)])
    def test_every_shape_is_enumerated(self, size, count):
        # unlabeled rooted trees on `size` vertices
        assert len(tree_shapes(size)) == count


class TestAutomorphisms:
    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_corolla(self, m):
        group = automorphisms(corolla(m))
        assert group.order == factorial(m) == brute_force_aut_order(corolla(m))
        assert len(group.generators) == m - 1

    def test_distinct_labels_rigidify(self):
        t = MarkedTree.build([None, 0, 0, 0], r=3, arg_map=[1, 2, 3])
        assert automorphisms(t).order == 1

    def test_chain(self):
        t = MarkedTree.build([None, 0, 1, 2], n=1, S=[1])
        assert automorphisms(t).order == 1

    def test_generators_are_automorphisms(self):
        for _ in range(50):
            t = MarkedTreeFactory()
            for g in automorphisms(t).generators:
                assert is_automorphism(t, g)
                assert all(g[g[v]] == v for v in t.tree.vertices)

    @pytest.mark.parametrize("size", EXHAUSTIVE_SIZES)
    def test_order_matches_brute_force(self, size):
        for t in every_marked_tree(size):
            assert automorphisms(t).order == brute_force_aut_order(t)


class TestTraversal:
    def test_preorder_visits_every_vertex_once(self):
        for _ in range(20):
            t = MarkedTreeFactory()
            order = canonical_preorder(t)
            assert sorted(order) == list(t.tree.vertices)
            assert order[0] == t.tree.root

    def test_preorder_is_relabeling_invariant(self, seed):
        rng = Random(seed)
        for _ in range(20):
            t = MarkedTreeFactory()
            twin = relabel(t, rng)
            kinds = [(t.kind(v), t.tree.valence(v)) for v in canonical_preorder(t)]
            twin_kinds = [(twin.kind(v), twin.tree.valence(v)) for v in canonical_preorder(twin)]
            assert kinds == twin_kinds

    def test_render(self):
        text = render(MarkedTree.build([None, 0, 0], r=1, n=0, arg_map=[2], S=[1]))
        assert text.splitlines() == ["# (O(A1)(S))", "O |v|=2", "  A[1] |v|=0", "  S |v|=0"]
