import pytest

from core.algebra import ExactMatrix, RingDescriptor, kernel_basis, rank
from core.complexes import (
    ChainMap,
    Complex,
    coinvariants,
    cone,
    direct_sum,
    homology,
    is_acyclic,
    is_quasi_iso,
    unit_complex,
    zero_complex,
)

from .factories import ComplexFactory, swap_action

Q = RingDescriptor.rationals()
Z = RingDescriptor.integers()
F3 = RingDescriptor.prime_field(3)


def contractible(ring):
    return cone(ChainMap.identity(unit_complex(ring)))


def columns(ring, rows, vectors):
    if not vectors:
        return ExactMatrix.zeros(ring, rows, 0)
    return ExactMatrix.from_blocks(ring, [list(vectors)])


def cycles(c: Complex, i: int) -> ExactMatrix:
    return columns(c.ring, c.dim(i), kernel_basis(c.d(i)))


def induced_rank(f: ChainMap, i: int) -> int:
    """
    Rank of H_i(f), as rank[f(Z_i) | B_i] - rank B_i in the target
    """
    target = f.target
    image = f.component(i) @ cycles(f.source, i)
    boundaries = target.d(i + 1)
    both = ExactMatrix.from_blocks(target.ring, [[image, boundaries]])
    return rank(both) - rank(boundaries)


def quasi_iso_by_homology(f: ChainMap) -> bool:
    hs, ht = homology(f.source), homology(f.target)
    degrees = set(f.source.basis) | set(f.target.basis)
    return all(hs.rank(i) == ht.rank(i) == induced_rank(f, i) for i in degrees)


class TestHomology:
    @pytest.mark.parametrize("ring", [Q, F3, Z])
    def test_contractible(self, ring):
        assert homology(contractible(ring)).is_zero()

    def test_torsion_from_multiplication_by_two(self):
        c = Complex(Z, {0: ("x",), 1: ("y",)}, {1: ExactMatrix.from_rows(Z, [[2]])})
        profile = homology(c)
        assert profile.torsion == {0: (2,)}
        assert profile.free_ranks == {}

    def test_unit(self):
        assert homology(unit_complex(Q)).free_ranks == {0: 1}
        assert not is_acyclic(unit_complex(Q))

    def test_euler_characteristic(self):
        for _ in range(30):
            c = ComplexFactory(ring=F3)
            profile = homology(c)
            assert sum((-1) ** i * c.dim(i) for i in c.degrees()) == sum(
                (-1) ** i * profile.rank(i) for i in profile.degrees()
            )

    def test_integer_ranks_agree_with_rationals(self):
        for _ in range(30):
            c = ComplexFactory(ring=Z)
            as_rational = Complex(
                Q,
                c.basis,
                {
                    i: ExactMatrix.from_rows(Q, m.to_rows(), cols=m.cols)
                    for i, m in c.differentials.items()
                },
            )
            assert dict(homology(c).free_ranks) == dict(homology(as_rational).free_ranks)


class TestQuasiIsomorphism:
    def test_identity(self):
        c = ComplexFactory()
        assert is_quasi_iso(ChainMap.identity(c))

    def test_zero_into_contractible(self):
        assert is_quasi_iso(ChainMap.zero(zero_complex(Q), contractible(Q)))

    def test_multiplication_by_two_over_z(self):
        unit = unit_complex(Z)
        assert not is_quasi_iso(ChainMap(unit, unit, {0: ExactMatrix.from_rows(Z, [[2]])}))

    def test_agrees_with_induced_maps(self):
        for _ in range(40):
            c = ComplexFactory(ring=F3)
            other = ComplexFactory(ring=F3)
            total, (into_first, into_second) = direct_sum([c, other])
            for f in (into_first, into_second):
                assert is_quasi_iso(f) == quasi_iso_by_homology(f)
            with_contractible, (inclusion, _) = direct_sum([c, contractible(F3)])
            assert is_quasi_iso(inclusion)


class TestCoinvariantHomology:
    def test_coinvariants_commute_with_homology_over_q(self):
        for _ in range(15):
            act = swap_action(ComplexFactory(ring=Q))
            x = act.complex
            quotient, _ = coinvariants(act)
            (g,) = act.generators
            for i in x.degrees():
                z = cycles(x, i)
                moved = (ExactMatrix.identity(Q, x.dim(i)) - g.component(i)) @ z
                spanned = ExactMatrix.from_blocks(Q, [[x.d(i + 1), moved]])
                homology_coinvariants = z.cols - rank(spanned)
                assert homology(quotient).rank(i) == homology_coinvariants
