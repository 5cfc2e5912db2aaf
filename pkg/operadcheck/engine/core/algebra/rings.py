"""
Coefficient rings: the rationals, prime fields and the integers.

Values are stored in canonical form so that equality of scalars is plain
equality of representatives: reduced `Fraction` over Q, a residue in
[0, p) over F_p and a Python `int` over Z.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Union

from sympy import isprime

from .exceptions import InvalidRingError, RingMismatchError, UnsupportedRingError

Value = Union[int, Fraction]

_SELECTOR = re.compile(r"^\s*(?:(?P<q>Q|QQ)|(?P<z>Z|ZZ)|(?:Fp|F|GF)[:(]?(?P<p>\d+)\)?)\s*$", re.I)


class RingKind(str, Enum):
    RATIONALS = "Q"
    PRIME_FIELD = "Fp"
    INTEGERS = "Z"


@dataclass(frozen=True)
class RingDescriptor:
    kind: RingKind
    p: int | None = None

    def __post_init__(self) -> None:
        if self.kind is RingKind.PRIME_FIELD:
            if self.p is None or self.p < 2 or not isprime(self.p):
                raise InvalidRingError(f"F_p requires a prime p, got {self.p!r}")
        elif self.p is not None:
            raise InvalidRingError(f"{self.kind.value} takes no modulus")

    # constructors

    @classmethod
    def rationals(cls) -> RingDescriptor:
        return cls(RingKind.RATIONALS)

    @classmethod
    def integers(cls) -> RingDescriptor:
        return cls(RingKind.INTEGERS)

    @classmethod
    def prime_field(cls, p: int) -> RingDescriptor:
        return cls(RingKind.PRIME_FIELD, p)

    @classmethod
    def parse(cls, selector: str) -> RingDescriptor:
        """
        Parse a ring selector: "Q", "Z" or "Fp:<p>"
        """
        match = _SELECTOR.match(selector or "")
        if not match:
            raise InvalidRingError(
                f"Unrecognised ring selector {selector!r}; expected Q, Z or Fp:<p>"
            )
        if match.group("q"):
            return cls.rationals()
        if match.group("z"):
            return cls.integers()
        return cls.prime_field(int(match.group("p")))

    # properties

    @property
    def is_field(self) -> bool:
        return self.kind is not RingKind.INTEGERS

    @property
    def characteristic(self) -> int:
        return self.p if self.kind is RingKind.PRIME_FIELD else 0

    @property
    def label(self) -> str:
        if self.kind is RingKind.PRIME_FIELD:
            return f"Fp:{self.p}"
        return self.kind.value

    def __str__(self) -> str:
        return self.label

    # arithmetic on canonical representatives

    def normalize(self, value: Any) -> Value:
        """
        Bring an int, Fraction, Scalar or "p/q" string into canonical form
        """
        if isinstance(value, Scalar):
            self.require_same(value.ring)
            return value.value
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, str):
            try:
                value = Fraction(value.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise InvalidRingError(f"Cannot parse scalar {value!r}") from exc
        if not isinstance(value, (int, Fraction)):
            raise InvalidRingError(f"Unsupported scalar type {type(value).__name__}")

        if self.kind is RingKind.RATIONALS:
            return Fraction(value)
        if self.kind is RingKind.INTEGERS:
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise InvalidRingError(f"{value} is not an integer")
                return value.numerator
            return value
        p = self.p
        assert p is not None
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise InvalidRingError(f"{value} has no image in F_{p}")
            return value.numerator * pow(value.denominator, -1, p) % p
        return value % p

    def zero(self) -> Value:
        return Fraction(0) if self.kind is RingKind.RATIONALS else 0

    def one(self) -> Value:
        return Fraction(1) if self.kind is RingKind.RATIONALS else 1

    def is_zero(self, a: Value) -> bool:
        return a == 0

    def add(self, a: Value, b: Value) -> Value:
        if self.kind is RingKind.PRIME_FIELD:
            return (a + b) % self.p  # type: ignore[operator]
        return a + b

    def sub(self, a: Value, b: Value) -> Value:
        if self.kind is RingKind.PRIME_FIELD:
            return (a - b) % self.p  # type: ignore[operator]
        return a - b

    def neg(self, a: Value) -> Value:
        if self.kind is RingKind.PRIME_FIELD:
            return -a % self.p  # type: ignore[operator]
        return -a

    def mul(self, a: Value, b: Value) -> Value:
        if self.kind is RingKind.PRIME_FIELD:
            return a * b % self.p  # type: ignore[operator]
        return a * b

    def inv(self, a: Value) -> Value:
        if not self.is_field:
            if a in (1, -1):
                return a
            raise UnsupportedRingError(f"{a} is not a unit of Z")
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.kind is RingKind.PRIME_FIELD:
            return pow(int(a), -1, self.p)
        return 1 / Fraction(a)

    def sign(self, exponent: int) -> Value:
        """
        (-1)^exponent as a canonical element
        """
        return self.one() if exponent % 2 == 0 else self.neg(self.one())

    def require_same(self, other: RingDescriptor) -> None:
        if other != self:
            raise RingMismatchError(f"Expected {self}, got {other}")

    def require_field(self, operation: str) -> None:
        if not self.is_field:
            raise UnsupportedRingError(
                f"{operation} requires a field; use smith_normal_form over Z"
            )


@dataclass(frozen=True)
class Scalar:
    """
    An element of a coefficient ring
    """

    ring: RingDescriptor
    value: Value

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.ring.normalize(self.value))

    def _other(self, other: Any) -> Value:
        if isinstance(other, Scalar):
            self.ring.require_same(other.ring)
            return other.value
        return self.ring.normalize(other)

    def __add__(self, other: Any) -> Scalar:
        return Scalar(self.ring, self.ring.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other: Any) -> Scalar:
        return Scalar(self.ring, self.ring.sub(self.value, self._other(other)))

    def __rsub__(self, other: Any) -> Scalar:
        return Scalar(self.ring, self.ring.sub(self._other(other), self.value))

    def __mul__(self, other: Any) -> Scalar:
        return Scalar(self.ring, self.ring.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __neg__(self) -> Scalar:
        return Scalar(self.ring, self.ring.neg(self.value))

    def __truediv__(self, other: Any) -> Scalar:
        return Scalar(
            self.ring, self.ring.mul(self.value, self.ring.inv(self._other(other)))
        )

    def inverse(self) -> Scalar:
        return Scalar(self.ring, self.ring.inv(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self) -> str:
        return str(self.value)
