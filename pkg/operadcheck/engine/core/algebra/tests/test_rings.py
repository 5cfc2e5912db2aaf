from fractions import Fraction
from random import Random

import pytest

from core.algebra import (
    InvalidRingError,
    RingDescriptor,
    RingKind,
    RingMismatchError,
    Scalar,
    UnsupportedRingError,
)


class TestRingDescriptor:
    @pytest.mark.parametrize(
        "selector, expected",
        [
            ("Q", RingDescriptor.rationals()),
            ("qq", RingDescriptor.rationals()),
            ("Z", RingDescriptor.integers()),
            ("Fp:2", RingDescriptor.prime_field(2)),
            ("F3", RingDescriptor.prime_field(3)),
            ("GF(7)", RingDescriptor.prime_field(7)),
        ],
    )
    def test_parse(self, selector, expected):
        assert RingDescriptor.parse(selector) == expected

    @pytest.mark.parametrize("selector", ["", "R", "Fp:4", "Fp:1", "Fp:x"])
    def test_parse_rejects_bad_selectors(self, selector):
        with pytest.raises(InvalidRingError):
            RingDescriptor.parse(selector)

    def test_modulus_only_for_prime_fields(self):
        with pytest.raises(InvalidRingError):
            RingDescriptor(RingKind.RATIONALS, 5)

    def test_label_round_trips_through_parse(self):
        for ring in (
            RingDescriptor.rationals(),
            RingDescriptor.integers(),
            RingDescriptor.prime_field(5),
        ):
            assert RingDescriptor.parse(ring.label) == ring

    def test_characteristic(self):
        assert RingDescriptor.rationals().characteristic == 0
        assert RingDescriptor.prime_field(3).characteristic == 3
        assert not RingDescriptor.integers().is_field


class TestNormalization:
    def test_prime_field_reduces_residues(self):
        f3 = RingDescriptor.prime_field(3)
        assert f3.normalize(-1) == 2
        assert f3.normalize(Fraction(1, 2)) == 2
        assert f3.normalize("4") == 1

    def test_prime_field_rejects_bad_denominator(self):
        with pytest.raises(InvalidRingError):
            RingDescriptor.prime_field(3).normalize(Fraction(1, 3))

    def test_integers_reject_proper_fractions(self):
        with pytest.raises(InvalidRingError):
            RingDescriptor.integers().normalize("1/2")

    def test_rationals_keep_fractions(self):
        assert RingDescriptor.rationals().normalize("6/4") == Fraction(3, 2)


class TestScalar:
    def test_arithmetic_in_f5(self):
        f5 = RingDescriptor.prime_field(5)
        a = Scalar(f5, 3)
        b = Scalar(f5, 4)
        assert (a + b).value == 2
        assert (a * b).value == 2
        assert (a - b).value == 4
        assert (a / b).value == 2
        assert (-a).value == 2
        assert (a * a.inverse()).value == 1

    def test_division_by_non_unit_in_z(self):
        z = RingDescriptor.integers()
        assert (Scalar(z, 6) / Scalar(z, -1)).value == -6
        with pytest.raises(UnsupportedRingError):
            Scalar(z, 6) / Scalar(z, 2)

    def test_mixing_rings_is_rejected(self):
        with pytest.raises(RingMismatchError):
            Scalar(RingDescriptor.rationals(), 1) + Scalar(RingDescriptor.integers(), 1)

    def test_sign(self):
        f2 = RingDescriptor.prime_field(2)
        assert f2.sign(1) == f2.sign(0) == 1
        assert RingDescriptor.integers().sign(3) == -1


class TestRingAxioms:
    @pytest.mark.parametrize(
        "ring",
        [
            RingDescriptor.rationals(),
            RingDescriptor.integers(),
            RingDescriptor.prime_field(7),
        ],
    )
    def test_random_triples(self, ring, seed):
        rng = Random(seed)

        def draw() -> Scalar:
            denominator = rng.randint(1, 9) if ring == RingDescriptor.rationals() else 1
            return Scalar(ring, Fraction(rng.randint(-20, 20), denominator))

        for _ in range(200):
            a, b, c = draw(), draw(), draw()
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a + b == b + a
            assert a - a == Scalar(ring, 0)
