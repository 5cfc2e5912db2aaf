from functools import reduce
from itertools import permutations

import pytest

from core.algebra import RingDescriptor
from core.complexes import is_acyclic
from core.operads import (
    AssociativeOperad,
    CommutativeOperad,
    OperadNotFound,
    UnitOperad,
    adjacent_word,
    builtin_operad,
    make_generator_collection,
)

Q = RingDescriptor.rationals()
F2 = RingDescriptor.prime_field(2)


def transposition(i):
    return lambda j: i + 1 if j == i else i if j == i + 1 else j


class TestAdjacentWord:
    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_word_composes_to_the_permutation(self, m):
        for permutation in permutations(range(m)):
            word = adjacent_word(permutation)
            # s_{w0} o s_{w1} o ... applied to j
            for j in range(m):
                image = reduce(lambda x, i: transposition(i)(x), reversed(word), j)
                assert image == permutation[j]

    def test_identity_has_empty_word(self):
        assert adjacent_word((0, 1, 2)) == []


class TestBuiltinOperads:
    def test_registry_lookup_normalizes_names(self):
        assert builtin_operad("com-nonunital", Q).name == "COM_NONUNITAL"
        assert builtin_operad(" assoc_nonunital ", F2).name == "ASSOC_NONUNITAL"

    def test_unknown_operad(self):
        with pytest.raises(OperadNotFound):
            builtin_operad("lie", Q)

    def test_commutative_arity_zero(self):
        assert builtin_operad("COM", F2).component(0).dims == {0: 1}
        assert builtin_operad("COM_NONUNITAL", F2).component(0).is_zero()

    def test_associative_arity_three(self):
        assert AssociativeOperad(Q).component(3).dims == {0: 6}

    @pytest.mark.parametrize("operad", [UnitOperad, CommutativeOperad, AssociativeOperad])
    @pytest.mark.parametrize("ring", [Q, F2, RingDescriptor.integers()])
    def test_builtins_validate(self, operad, ring):
        o = operad(ring)
        o.validate(max_arity=4)
        assert o.reduced_unary().is_zero()
        assert not o.has_reduced_unary()

    def test_nullary_parts(self):
        assert CommutativeOperad(Q).has_nullary()
        assert not CommutativeOperad(Q, unital=False).has_nullary()
        assert not AssociativeOperad(Q).has_nullary()
        assert not UnitOperad(Q).has_nullary()

    def test_unit_operad_is_concentrated_in_arity_one(self):
        o = UnitOperad(Q)
        assert o.component(1).dims == {0: 1}
        assert all(o.component(m).is_zero() for m in (0, 2, 3))

    def test_associative_permutations_act_on_values(self):
        o = AssociativeOperad(Q)
        c = o.component(3)
        for permutation in permutations(range(3)):
            action = o.permutation_action(permutation).component(0)
            for column, word in enumerate(c.labels(0)):
                image = tuple(permutation[x] for x in word)
                assert action.column(column) == [
                    1 if label == image else 0 for label in c.labels(0)
                ]


class TestGeneratorCollection:
    def test_unshifted_cone(self):
        gen = make_generator_collection(Q, n=2, s=0)
        m = gen.m_complex
        assert gen.n == 2
        assert m.dims == {0: 1, 1: 1}
        assert m.labels(0) == ("b",) and m.labels(1) == ("a",)
        assert m.d(1).to_rows() == [[1]]

    def test_shifted_cone(self):
        assert make_generator_collection(Q, n=0, s=2).m_complex.dims == {2: 1, 3: 1}

    @pytest.mark.parametrize("s", [0, 1, 2, 5])
    def test_always_acyclic(self, s):
        for ring in (Q, F2, RingDescriptor.integers()):
            assert is_acyclic(make_generator_collection(ring, n=1, s=s).m_complex)
