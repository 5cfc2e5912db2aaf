"""
Symmetric powers computed straight from the tensor powers of a complex,
without trees: the reference the arity-0 coproduct is checked against.
"""

from __future__ import annotations

from math import factorial

from core.algebra import ExactMatrix, UnsupportedRingError
from core.complexes import ChainMap, Complex, GroupAction, coinvariants, tensor, unit_complex


def tensor_power(c: Complex, m: int) -> Complex:
    power = unit_complex(c.ring)
    for _ in range(m):
        power = tensor(power, c)
    # labels nest as ((("1", x1), x2), x3); flatten them
    basis = {}
    for degree, labels in power.basis.items():
        flat = []
        for label in labels:
            word = []
            for _ in range(m):
                label, last = label
                word.append(last)
            flat.append(tuple(reversed(word)))
        basis[degree] = flat
    return Complex(c.ring, basis, power.differentials)


def factor_swap(c: Complex, power: Complex, i: int) -> ChainMap:
    """x1 ... xi x(i+1) ... -> (-1)^{|xi||x(i+1)|} x1 ... x(i+1) xi ..."""
    ring = c.ring
    degree_of = {label: d for d in c.degrees() for label in c.labels(d)}
    components = {}
    for degree in power.degrees():
        entries = {}
        for column, word in enumerate(power.labels(degree)):
            swapped = word[:i] + (word[i + 1], word[i]) + word[i + 2 :]
            sign = ring.sign(degree_of[word[i]] * degree_of[word[i + 1]])
            entries[(power.index(degree, swapped), column)] = sign
        components[degree] = ExactMatrix(ring, power.dim(degree), power.dim(degree), entries)
    return ChainMap(power, power, components)


def symmetric_power_oracle(m_complex: Complex, m: int) -> Complex:
    if m == 0:
        return unit_complex(m_complex.ring)
    if m == 1:
        return m_complex
    if not m_complex.ring.is_field:
        raise UnsupportedRingError(f"Symmetric powers over {m_complex.ring} are not supported")
    power = tensor_power(m_complex, m)
    swaps = [factor_swap(m_complex, power, i) for i in range(m - 1)]
    quotient, _ = coinvariants(GroupAction(power, swaps, factorial(m)))
    return quotient
