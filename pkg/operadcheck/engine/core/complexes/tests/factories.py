import factory
from faker import Faker

from core.algebra import ExactMatrix, RingDescriptor, kernel_basis
from core.complexes import ChainMap, Complex, GroupAction, tensor

fake = Faker()


def _random_matrix(ring: RingDescriptor, rows: int, cols: int) -> ExactMatrix:
    return ExactMatrix(
        ring,
        rows,
        cols,
        {
            (i, j): fake.random_int(min=-3, max=3)
            for i in range(rows)
            for j in range(cols)
            if fake.boolean(chance_of_getting_true=60)
        },
    )


def random_differentials(ring: RingDescriptor, dims: list[int], offset: int) -> dict:
    """
    d_1 at random; d_2 from random combinations of the kernel of d_1 over a
    field. Over Z one of the two is left zero.
    """
    d1 = _random_matrix(ring, dims[0], dims[1])
    if not ring.is_field:
        if fake.boolean():
            return {offset + 1: d1}
        return {offset + 2: _random_matrix(ring, dims[1], dims[2])}

    kernel = kernel_basis(d1)
    columns = []
    for _ in range(dims[2]):
        column = ExactMatrix.zeros(ring, dims[1], 1)
        for vector in kernel:
            column = column + vector.scale(fake.random_int(min=-2, max=2))
        columns.append(column.column(0))
    d2 = ExactMatrix.from_columns(ring, columns, rows=dims[1])
    return {offset + 1: d1, offset + 2: d2}


class ComplexFactory(factory.Factory):
    """
    A random complex in three consecutive degrees with at most two basis
    elements in each
    """

    class Meta:
        model = Complex

    ring = RingDescriptor.rationals()
    basis = factory.LazyAttribute(
        lambda o: {
            o.offset + i: tuple(f"e{o.offset + i}_{k}" for k in range(dim))
            for i, dim in enumerate(o.dims)
        }
    )
    differentials = factory.LazyAttribute(
        lambda o: random_differentials(o.ring, o.dims, o.offset)
    )

    class Params:
        dims = factory.LazyFunction(lambda: [fake.random_int(min=0, max=2) for _ in range(3)])
        offset = factory.LazyFunction(lambda: fake.random_int(min=-1, max=1))


def swap_action(c: Complex) -> GroupAction:
    """
    The Koszul-signed transposition x (x) y -> (-1)^{|x||y|} y (x) x on c (x) c
    """
    square = tensor(c, c)
    ring = c.ring
    degree_of = {label: i for i in c.degrees() for label in c.labels(i)}
    components = {}
    for n in square.degrees():
        entries = {}
        for column, (x, y) in enumerate(square.labels(n)):
            sign = ring.sign(degree_of[x] * degree_of[y])
            entries[(square.index(n, (y, x)), column)] = sign
        components[n] = ExactMatrix(ring, square.dim(n), square.dim(n), entries)
    return GroupAction(square, [ChainMap(square, square, components)], declared_order=2)
