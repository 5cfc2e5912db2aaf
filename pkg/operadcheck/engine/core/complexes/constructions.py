"""
Constructors on complexes: unit, shift, cone, tensor product, direct sum and
coinvariants of a finite group action.
"""

from __future__ import annotations

import logging
from typing import Callable, Sequence

from core.algebra import ExactMatrix, RingDescriptor, UnsupportedRingError, row_echelon
from core.algebra.rings import Value

from .models import ChainMap, Complex, GroupAction, Label

logger = logging.getLogger(__name__)

UNIT_LABEL = "1"
SOURCE_TAG = "src"
TARGET_TAG = "tgt"


def unit_complex(ring: RingDescriptor) -> Complex:
    """
    The ground ring as a complex concentrated in degree 0
    """
    return Complex(ring, {0: (UNIT_LABEL,)})


def zero_complex(ring: RingDescriptor) -> Complex:
    return Complex(ring, {})


def shift(c: Complex, s: int) -> Complex:
    """
    c[s]: degree i of the result is degree i - s of c; d is not twisted
    """
    if s == 0:
        return c
    return Complex(
        c.ring,
        {i + s: labels for i, labels in c.basis.items()},
        {i + s: matrix for i, matrix in c.differentials.items()},
    )


def relabel(c: Complex, rename: Callable[[int, Label], Label]) -> Complex:
    return Complex(
        c.ring,
        {i: tuple(rename(i, label) for label in labels) for i, labels in c.basis.items()},
        c.differentials,
    )


def cone(f: ChainMap) -> Complex:
    """
    Mapping cone of f: A -> B.

    Degree i is B_i followed by A_{i-1}, with d(y, x) = (dy + f(x), -dx).
    """
    a, b = f.source, f.target
    ring = a.ring
    degrees = set(b.basis) | {i + 1 for i in a.basis}
    basis = {
        i: tuple((TARGET_TAG, y) for y in b.labels(i))
        + tuple((SOURCE_TAG, x) for x in a.labels(i - 1))
        for i in degrees
    }
    differentials = {}
    for i in degrees:
        if i - 1 not in degrees:
            continue
        differentials[i] = ExactMatrix.from_blocks(
            ring,
            [
                [b.d(i), f.component(i - 1)],
                [ExactMatrix.zeros(ring, a.dim(i - 2), b.dim(i)), -a.d(i - 1)],
            ],
        )
    return Complex(ring, basis, differentials)


def tensor(a: Complex, b: Complex) -> Complex:
    """
    Tensor product with the Koszul sign d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy.

    Degree n lists the pairs (x, y) with |x| + |y| = n, ordered by the degree
    of x, then by the position of x, then by the position of y.
    """
    ring = a.ring
    ring.require_same(b.ring)
    if a.is_zero() or b.is_zero():
        return zero_complex(ring)

    basis: dict[int, list[Label]] = {}
    offsets: dict[tuple[int, int], int] = {}
    a_degrees = a.degrees()
    for n in range(a_degrees[0] + b.degrees()[0], a_degrees[-1] + b.degrees()[-1] + 1):
        labels: list[Label] = []
        for i in a_degrees:
            j = n - i
            if not b.dim(j):
                continue
            offsets[(n, i)] = len(labels)
            labels.extend((x, y) for x in a.labels(i) for y in b.labels(j))
        if labels:
            basis[n] = labels

    differentials = {}
    for n in basis:
        if n - 1 not in basis:
            continue
        entries: dict[tuple[int, int], Value] = {}
        for i in a_degrees:
            if (n, i) not in offsets:
                continue
            j = n - i
            column0 = offsets[(n, i)]
            width = b.dim(j)
            if (n - 1, i - 1) in offsets:
                row0 = offsets[(n - 1, i - 1)]
                for (x_out, x_in), value in a.d(i).items():
                    for y in range(width):
                        entries[(row0 + x_out * width + y, column0 + x_in * width + y)] = value
            if (n - 1, i) in offsets:
                row0 = offsets[(n - 1, i)]
                lower = b.dim(j - 1)
                sign = ring.sign(i)
                for (y_out, y_in), value in b.d(j).items():
                    signed = ring.mul(sign, value)
                    for x in range(a.dim(i)):
                        entries[(row0 + x * lower + y_out, column0 + x * width + y_in)] = signed
        differentials[n] = ExactMatrix(ring, len(basis[n - 1]), len(basis[n]), entries)
    return Complex(ring, basis, differentials)


def direct_sum(
    cs: Sequence[Complex], ring: RingDescriptor | None = None
) -> tuple[Complex, tuple[ChainMap, ...]]:
    """
    Degreewise concatenation of the summands, labels tagged by summand index,
    together with the split injections
    """
    if not cs:
        if ring is None:
            raise UnsupportedRingError("An empty direct sum needs an explicit ring")
        return zero_complex(ring), ()
    ring = ring or cs[0].ring
    for c in cs:
        ring.require_same(c.ring)

    degrees = sorted({i for c in cs for i in c.basis})
    basis = {
        i: tuple((k, label) for k, c in enumerate(cs) for label in c.labels(i))
        for i in degrees
    }
    differentials = {
        i: ExactMatrix.block_diagonal(ring, [c.d(i) for c in cs])
        for i in degrees
        if i - 1 in basis
    }
    total = Complex(ring, basis, differentials)

    injections = []
    offsets = {i: 0 for i in degrees}
    for c in cs:
        components = {}
        for i in c.degrees():
            components[i] = ExactMatrix(
                ring,
                total.dim(i),
                c.dim(i),
                {(offsets[i] + t, t): 1 for t in range(c.dim(i))},
            )
            offsets[i] += c.dim(i)
        injections.append(ChainMap(c, total, components))
    return total, tuple(injections)


def block_projection(injection: ChainMap) -> ChainMap:
    """
    The retraction of a direct-sum injection, onto its summand
    """
    return ChainMap(
        injection.target,
        injection.source,
        {i: matrix.transpose() for i, matrix in injection.components.items()},
    )


def coinvariants(act: GroupAction) -> tuple[Complex, ChainMap]:
    """
    The quotient of a complex by the span of x - g.x, with its projection.

    The quotient basis is the set of non-pivot positions of the reduced
    relation matrix, so it is a subset of the original labels. Over Z only
    the trivial action is accepted.
    """
    c = act.complex
    if act.is_trivial():
        return c, ChainMap.identity(c)
    ring = c.ring
    if not ring.is_field:
        raise UnsupportedRingError(
            "Coinvariants of a non-trivial action are only supported over a field"
        )

    projections: dict[int, ExactMatrix] = {}
    sections: dict[int, ExactMatrix] = {}
    basis: dict[int, tuple[Label, ...]] = {}
    for i in c.degrees():
        size = c.dim(i)
        identity = ExactMatrix.identity(ring, size)
        relations = ExactMatrix.from_blocks(
            ring, [[(identity - g.component(i)).transpose()] for g in act.generators]
        )
        reduced, pivots = row_echelon(relations)
        pivot_set = set(pivots)
        free = [j for j in range(size) if j not in pivot_set]

        entries: dict[tuple[int, int], Value] = {}
        for t, f in enumerate(free):
            entries[(t, f)] = ring.one()
            for k, p in enumerate(pivots):
                value = reduced.value(k, f)
                if value != 0:
                    entries[(t, p)] = ring.neg(value)
        projections[i] = ExactMatrix(ring, len(free), size, entries)
        sections[i] = ExactMatrix(ring, size, len(free), {(f, t): 1 for t, f in enumerate(free)})
        basis[i] = tuple(c.labels(i)[f] for f in free)

    differentials = {
        i: projections[i - 1] @ c.d(i) @ sections[i]
        for i in c.degrees()
        if i - 1 in projections
    }
    quotient = Complex(ring, basis, differentials)
    logger.debug(
        f"Coinvariants | generators={len(act.generators)} | dims {c.dims} -> {quotient.dims}"
    )
    projection = ChainMap(
        c, quotient, {i: m for i, m in projections.items() if quotient.dim(i)}
    )
    return quotient, projection
