"""
Tree components of the coproduct of an operad with a free operad.

For a reduced (r, n)-marked tree T the component is the tensor product of
O(|v|) over the operad vertices and of M over the S-vertices, taken modulo
Aut(T). Valence-1 operad vertices carry the reduced part of O(1); the unit
line of O(1) is carried by the one-vertex argument tree instead.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import product
from math import prod
from typing import Sequence

from django.conf import settings

from core.algebra import ExactMatrix, RingDescriptor
from core.algebra.rings import Value
from core.complexes import (
    ChainMap,
    Complex,
    GroupAction,
    HomologyProfile,
    block_projection,
    coinvariants,
    direct_sum,
    homology,
    relabel,
    tensor,
    unit_complex,
)
from core.trees import (
    AutGroup,
    CanonicalCode,
    MarkedTree,
    VertexKind,
    automorphisms,
    canonical_code,
    canonical_preorder,
    enumerate_reduced,
    sorted_children,
    vertex_codes,
)

from .base import GeneratorCollection, SymmetricCollection
from .exceptions import ComponentTooLargeError, InvalidCollectionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TreeComponent:
    tree: MarkedTree
    code: CanonicalCode
    aut: AutGroup
    factor_order: tuple[int, ...]
    raw: Complex
    component: Complex
    projection: ChainMap

    @property
    def s_count(self) -> int:
        return self.tree.s_count


def factor_order(t: MarkedTree) -> tuple[int, ...]:
    """Operad vertices then S-vertices, each in canonical preorder"""
    order = canonical_preorder(t)
    return tuple(v for v in order if t.kind(v) is VertexKind.O) + tuple(
        v for v in order if t.kind(v) is VertexKind.S
    )


def _factor(o: SymmetricCollection, gen: GeneratorCollection, t: MarkedTree, v: int) -> Complex:
    if t.kind(v) is VertexKind.S:
        return gen.m_complex
    return o.factor(t.tree.valence(v))


def tensor_all(factors: Sequence[Complex], ring: RingDescriptor) -> Complex:
    """
    Left-folded tensor product with flat tuple labels; the empty product is
    the ground ring with label ()
    """
    result = relabel(unit_complex(ring), lambda i, label: ())
    for f in factors:
        result = relabel(tensor(result, f), lambda i, label: label[0] + (label[1],))
    return result


def _check_size(factors: Sequence[Complex], code: CanonicalCode) -> None:
    limit = settings.ENGINE_LIMITS["MAX_COMPONENT_DIM"]
    size = prod(f.total_dim for f in factors)
    if size > limit:
        raise ComponentTooLargeError(
            f"Component {code} would have {size} basis elements (limit {limit})"
        )


def _degree_table(c: Complex) -> dict:
    table = {}
    for degree in c.degrees():
        for label in c.labels(degree):
            if label in table:
                raise InvalidCollectionError(
                    f"Label {label!r} is used in degrees {table[label]} and {degree}"
                )
            table[label] = degree
    return table


def _local_action(
    o: SymmetricCollection,
    t: MarkedTree,
    v: int,
    image: Sequence[int],
    codes: dict[int, bytes],
    factor: Complex,
) -> ChainMap:
    # the input fed by the j-th child of v moves to the input fed by its image
    if t.kind(v) is VertexKind.S:
        return ChainMap.identity(factor)
    source = sorted_children(t, v, codes)
    target = sorted_children(t, image[v], codes)
    position = {c: k for k, c in enumerate(target)}
    return o.factor_action(tuple(position[image[c]] for c in source))


def _koszul_exponent(degrees: Sequence[int], targets: Sequence[int]) -> int:
    return sum(
        degrees[k] * degrees[l]
        for k in range(len(targets))
        for l in range(k + 1, len(targets))
        if targets[k] > targets[l]
    )


def automorphism_action(
    o: SymmetricCollection,
    t: MarkedTree,
    order: Sequence[int],
    factors: Sequence[Complex],
    raw: Complex,
    image: Sequence[int],
) -> ChainMap:
    """
    The chain automorphism of the tensor product induced by a tree
    automorphism: the factor of v moves to the slot of image[v] and operad
    factors are acted on by the permutation induced on incoming arrows
    """
    ring = raw.ring
    codes = vertex_codes(t)
    slot = {v: k for k, v in enumerate(order)}
    targets = [slot[image[v]] for v in order]
    local = [_local_action(o, t, v, image, codes, f) for v, f in zip(order, factors)]
    degree_of = [_degree_table(f) for f in factors]

    components: dict[int, ExactMatrix] = {}
    for n in raw.degrees():
        entries: dict[tuple[int, int], Value] = {}
        for column, label in enumerate(raw.labels(n)):
            degrees = [degree_of[k][x] for k, x in enumerate(label)]
            sign = ring.sign(_koszul_exponent(degrees, targets))
            images = []
            for k, x in enumerate(label):
                f = factors[k]
                values = local[k].component(degrees[k]).column(f.index(degrees[k], x))
                images.append(
                    [(f.labels(degrees[k])[row], value) for row, value in enumerate(values) if value]
                )
            for choice in product(*images):
                new_label: list = [None] * len(choice)
                value = sign
                for k, (y, coefficient) in enumerate(choice):
                    new_label[targets[k]] = y
                    value = ring.mul(value, coefficient)
                row = raw.index(n, tuple(new_label))
                entries[(row, column)] = ring.add(entries.get((row, column), ring.zero()), value)
        components[n] = ExactMatrix(ring, raw.dim(n), raw.dim(n), entries)
    return ChainMap(raw, raw, components)


def tree_component(
    o: SymmetricCollection, gen: GeneratorCollection, t: MarkedTree
) -> TreeComponent:
    code = canonical_code(t)
    if t.n != gen.n:
        raise InvalidCollectionError(f"Tree {code} has n={t.n} but M sits in arity {gen.n}")
    o.ring.require_same(gen.ring)

    order = factor_order(t)
    factors = [_factor(o, gen, t, v) for v in order]
    aut = automorphisms(t)
    _check_size(factors, code)
    raw = tensor_all(factors, o.ring)

    if raw.is_zero() or aut.is_trivial():
        component, projection = raw, ChainMap.identity(raw)
    else:
        generators = [automorphism_action(o, t, order, factors, raw, g) for g in aut.generators]
        component, projection = coinvariants(GroupAction(raw, generators, aut.order))

    logger.debug(
        f"Tree component | {code} | |S|={t.s_count} | |Aut|={aut.order} "
        f"| raw={raw.dims} | component={component.dims}"
    )
    return TreeComponent(t, code, aut, order, raw, component, projection)


@dataclass(frozen=True)
class CoproductTruncation:
    """
    The components of (O coproduct F(M, n))(r) for |S| <= max_s, their direct
    sum, and the inclusion of O(r) onto the |S| = 0 block
    """

    r: int
    max_s: int
    parts: tuple[TreeComponent, ...]
    total: Complex
    injections: tuple[ChainMap, ...]
    base: Complex
    inclusion: ChainMap

    def parts_with(self, s_count: int) -> list[TreeComponent]:
        return [part for part in self.parts if part.s_count == s_count]

    def part(self, code: CanonicalCode | str) -> TreeComponent | None:
        text = str(code)
        return next((part for part in self.parts if str(part.code) == text), None)

    def base_projection(self) -> ChainMap:
        """The retraction of the total complex onto the |S| = 0 block"""
        return ChainMap(
            self.total,
            self.base,
            {
                i: ExactMatrix(
                    self.total.ring,
                    self.base.dim(i),
                    self.total.dim(i),
                    {(j, j): 1 for j in range(self.base.dim(i))},
                )
                for i in self.base.degrees()
            },
        )


def _inclusion(
    o: SymmetricCollection,
    r: int,
    parts: Sequence[TreeComponent],
    total: Complex,
) -> ChainMap:
    source = o.component(r)
    blocks = {}
    for k, part in enumerate(parts):
        if part.s_count == 0:
            root_kind = part.tree.kind(part.tree.tree.root)
            blocks[root_kind] = k

    components = {}
    for i in source.degrees():
        entries = {}
        for column, label in enumerate(source.labels(i)):
            if r == 1 and label == o.unit_label and i == 0:
                target = (blocks[VertexKind.ARG], ())
            else:
                target = (blocks[VertexKind.O], (label,))
            entries[(total.index(i, target), column)] = 1
        components[i] = ExactMatrix(o.ring, total.dim(i), source.dim(i), entries)
    return ChainMap(source, total, components)


def coproduct_component(
    o: SymmetricCollection, gen: GeneratorCollection, n: int, r: int, max_s: int
) -> CoproductTruncation:
    if n != gen.n:
        raise InvalidCollectionError(f"M sits in arity {gen.n}, not {n}")
    classes = enumerate_reduced(
        r,
        n,
        max_s,
        allow_nullary=o.has_nullary(),
        allow_unary=o.has_reduced_unary(),
    )
    parts = tuple(
        tree_component(o, gen, t) for s in sorted(classes) for t in classes[s]
    )
    total, injections = direct_sum([part.component for part in parts], ring=o.ring)
    base, _ = direct_sum(
        [part.component for part in parts if part.s_count == 0], ring=o.ring
    )
    inclusion = _inclusion(o, r, parts, total)
    logger.debug(
        f"Coproduct | {o.name} | n={n} | r={r} | max_s={max_s} "
        f"| classes={len(parts)} | total={total.dims}"
    )
    return CoproductTruncation(r, max_s, parts, total, injections, base, inclusion)


@dataclass(frozen=True)
class ComponentVerdict:
    code: CanonicalCode
    s_count: int
    aut_order: int
    dims: dict[int, int]
    homology: HomologyProfile

    @property
    def acyclic(self) -> bool:
        return self.homology.is_zero()


@dataclass(frozen=True)
class InclusionVerdict:
    r: int
    max_s: int
    components: tuple[ComponentVerdict, ...]
    by_s: dict[int, bool] = field(default_factory=dict)

    @property
    def quasi_iso(self) -> bool:
        return all(self.by_s.values())

    def witnesses(self) -> list[ComponentVerdict]:
        return [c for c in self.components if not c.acyclic]


def verdict_for(part: TreeComponent) -> ComponentVerdict:
    return ComponentVerdict(
        code=part.code,
        s_count=part.s_count,
        aut_order=part.aut.order,
        dims=part.component.dims,
        homology=homology(part.component),
    )


def check_inclusion_qiso(
    o: SymmetricCollection, gen: GeneratorCollection, n: int, r: int, max_s: int
) -> InclusionVerdict:
    """
    The inclusion of O(r) is split onto the |S| = 0 block, so it is a
    quasi-isomorphism up to truncation iff every |S| >= 1 component is acyclic
    """
    truncation = coproduct_component(o, gen, n, r, max_s)
    components = tuple(verdict_for(part) for part in truncation.parts if part.s_count >= 1)
    by_s = {
        s: all(c.acyclic for c in components if c.s_count == s) for s in range(1, max_s + 1)
    }
    return InclusionVerdict(r, max_s, components, by_s)


def injection_of(truncation: CoproductTruncation, code: CanonicalCode | str) -> ChainMap:
    """The summand injection of one tree component into the total complex"""
    text = str(code)
    for part, injection in zip(truncation.parts, truncation.injections):
        if str(part.code) == text:
            return injection
    raise InvalidCollectionError(f"No component with code {text}")


def projection_of(truncation: CoproductTruncation, code: CanonicalCode | str) -> ChainMap:
    return block_projection(injection_of(truncation, code))
