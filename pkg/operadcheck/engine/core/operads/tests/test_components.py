from itertools import product

import pytest

from core.algebra import RingDescriptor, UnsupportedRingError, rank
from core.complexes import homology, is_acyclic
from core.operads import (
    AssociativeOperad,
    CommutativeOperad,
    ComponentTooLargeError,
    InvalidCollectionError,
    UnitOperad,
    builtin_operad,
    check_inclusion_qiso,
    coproduct_component,
    factor_order,
    tree_component,
)
from core.operads.components import automorphism_action
from core.trees import MarkedTree, automorphisms, canonical_code, enumerate_reduced

from .factories import generators

Q = RingDescriptor.rationals()
F2 = RingDescriptor.prime_field(2)
Z = RingDescriptor.integers()

# root O with two S leaves
CHERRY = MarkedTree.build([None, 0, 0], r=0, n=0, S={1, 2})


class TestTreeComponent:
    def test_square_of_cone_in_characteristic_two(self):
        part = tree_component(CommutativeOperad(F2), generators("Fp:2"), CHERRY)
        assert part.raw.dims == {0: 1, 1: 2, 2: 1}
        assert part.component.dims == {0: 1, 1: 1, 2: 1}
        profile = homology(part.component)
        assert [profile.rank(i) for i in (0, 1, 2)] == [0, 0, 1]

    def test_square_of_cone_over_rationals(self):
        part = tree_component(CommutativeOperad(Q), generators("Q"), CHERRY)
        assert part.component.dims == {0: 1, 1: 1}
        assert is_acyclic(part.component)

    def test_bare_operad_root_is_the_ground_ring(self):
        t = MarkedTree.build([None], r=0, n=0)
        part = tree_component(CommutativeOperad(Q), generators("Q"), t)
        assert part.component.dims == {0: 1}
        assert homology(part.component).rank(0) == 1

    def test_regular_action_frees_the_swap(self):
        # k[S_2] (x) M (x) M modulo the swap is M (x) M again
        for selector in ("Q", "Fp:2"):
            ring = RingDescriptor.parse(selector)
            part = tree_component(AssociativeOperad(ring), generators(selector), CHERRY)
            assert part.raw.dims == {0: 2, 1: 4, 2: 2}
            assert part.component.dims == {0: 1, 1: 2, 2: 1}
            assert is_acyclic(part.component)

    def test_factor_order_puts_operad_vertices_first(self):
        t = MarkedTree.build([1, None, 1, 0], r=1, n=1, arg_map=[3], S={0})
        order = factor_order(t)
        assert order == (1, 2, 0)

    def test_unary_operad_vertex_vanishes(self):
        t = MarkedTree.build([None, 0], r=0, n=0, S={1})
        part = tree_component(CommutativeOperad(Q), generators("Q"), t)
        assert part.component.is_zero()

    def test_nontrivial_automorphisms_over_integers_are_refused(self):
        with pytest.raises(UnsupportedRingError):
            tree_component(CommutativeOperad(Z), generators("Z"), CHERRY)

    def test_size_limit(self, settings):
        settings.ENGINE_LIMITS = {"MAX_COMPONENT_DIM": 3}
        with pytest.raises(ComponentTooLargeError):
            tree_component(CommutativeOperad(Q), generators("Q"), CHERRY)
        settings.ENGINE_LIMITS = {"MAX_COMPONENT_DIM": 4}
        tree_component(CommutativeOperad(Q), generators("Q"), CHERRY)


class TestAutomorphismAction:
    @pytest.mark.parametrize("operad", [CommutativeOperad, AssociativeOperad])
    def test_generators_are_involutions(self, operad):
        o = operad(Q)
        gen = generators("Q", n=0)
        classes = enumerate_reduced(1, 0, 3, allow_nullary=o.has_nullary(), allow_unary=False)
        checked = 0
        for trees in classes.values():
            for t in trees:
                aut = automorphisms(t)
                order = factor_order(t)
                factors = [gen.m_complex if v in t.S else o.factor(t.tree.valence(v)) for v in order]
                part = tree_component(o, gen, t)
                if part.raw.is_zero():
                    continue
                for image in aut.generators:
                    g = automorphism_action(o, t, order, factors, part.raw, image)
                    assert g.compose(g).is_identity()
                    checked += 1
        assert checked > 0


class TestCoproductComponent:
    def test_unit_operad_counts_binary_trees(self):
        gen = generators("Q", n=2)
        truncation = coproduct_component(UnitOperad(Q), gen, 2, 4, 3)
        nonzero = [p for p in truncation.parts_with(3) if not p.component.is_zero()]
        assert len(nonzero) == 15
        assert all(p.component.dims == {0: 1, 1: 3, 2: 3, 3: 1} for p in nonzero)

    def test_commutative_arity_zero_has_one_power_per_size(self):
        truncation = coproduct_component(CommutativeOperad(Q), generators("Q"), 0, 0, 3)
        nonzero = [str(p.code) for p in truncation.parts if not p.component.is_zero()]
        assert nonzero == ["(O)", "(S)", "(O(S)(S))", "(O(S)(S)(S))"]

    def test_nonunital_without_generators_is_the_operad(self):
        o = CommutativeOperad(Q, unital=False)
        truncation = coproduct_component(o, generators("Q", n=1), 1, 2, 0)
        assert truncation.total.dims == {0: 1}
        assert truncation.inclusion.component(0).to_rows() == [[1]]

    def test_mismatched_arity_is_rejected(self):
        with pytest.raises(InvalidCollectionError):
            coproduct_component(CommutativeOperad(Q), generators("Q", n=1), 2, 0, 1)


class TestStructuralIdentity:
    @pytest.mark.parametrize("name", ["UNIT", "COM", "COM_NONUNITAL", "ASSOC_NONUNITAL"])
    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_base_block_is_the_operad(self, name, n):
        o = builtin_operad(name, Q)
        gen = generators("Q", n=n)
        for r in range(4):
            truncation = coproduct_component(o, gen, n, r, 1)
            assert truncation.base.dims == o.component(r).dims
            composite = truncation.base_projection().compose(truncation.inclusion)
            for i in o.component(r).degrees():
                matrix = composite.component(i)
                assert matrix.rows == matrix.cols == rank(matrix)


class TestInclusionVerdicts:
    def test_nonunital_with_positive_arity_generators(self):
        o = CommutativeOperad(F2, unital=False)
        verdict = check_inclusion_qiso(o, generators("Fp:2", n=1), 1, 1, 2)
        assert verdict.quasi_iso
        assert verdict.by_s == {1: True, 2: True}

    def test_commutative_over_rationals(self):
        verdict = check_inclusion_qiso(CommutativeOperad(Q), generators("Q"), 0, 0, 3)
        assert verdict.quasi_iso

    def test_commutative_in_characteristic_two_fails_at_squares(self):
        verdict = check_inclusion_qiso(CommutativeOperad(F2), generators("Fp:2"), 0, 0, 2)
        assert not verdict.quasi_iso
        assert verdict.by_s == {1: True, 2: False}
        assert [str(w.code) for w in verdict.witnesses()] == ["(O(S)(S))"]
        assert verdict.witnesses()[0].homology.rank(2) == 1

    @pytest.mark.parametrize("selector", ["Fp:2", "Z"])
    @pytest.mark.parametrize("operad", [CommutativeOperad, AssociativeOperad])
    @pytest.mark.parametrize("n", [1, 2])
    def test_no_automorphisms_without_nullary_operations(self, operad, n, selector):
        ring = RingDescriptor.parse(selector)
        o = operad(ring) if operad is AssociativeOperad else operad(ring, unital=False)
        for r in range(4):
            truncation = coproduct_component(o, generators(selector, n=n), n, r, 3)
            for part in truncation.parts:
                assert part.aut.order == 1
                assert part.component is part.raw
                if part.s_count:
                    assert is_acyclic(part.component)

    def test_rationals_make_every_generated_component_acyclic(self):
        for n in (0, 1, 2):
            for r in range(3):
                verdict = check_inclusion_qiso(CommutativeOperad(Q), generators("Q", n=n), n, r, 2)
                assert verdict.quasi_iso, (n, r)


class TestShiftCovariance:
    @pytest.mark.parametrize("selector", ["Q", "Fp:2"])
    def test_homology_moves_with_the_shift(self, selector):
        o = CommutativeOperad(RingDescriptor.parse(selector))
        sizes = set()
        for n, r in product((0, 1, 2), (0, 1)):
            unshifted = coproduct_component(o, generators(selector, n=n, s=0), n, r, 3)
            shifted = coproduct_component(o, generators(selector, n=n, s=1), n, r, 3)
            assert [p.code for p in unshifted.parts] == [p.code for p in shifted.parts]
            for before, after in zip(unshifted.parts, shifted.parts):
                assert homology(after.component) == homology(before.component).shifted(
                    before.s_count
                )
                sizes.add(before.s_count)
        assert sizes == {0, 1, 2, 3}

    def test_codes_are_canonical(self):
        truncation = coproduct_component(CommutativeOperad(Q), generators("Q"), 0, 0, 2)
        assert [p.code for p in truncation.parts] == [
            canonical_code(p.tree) for p in truncation.parts
        ]
