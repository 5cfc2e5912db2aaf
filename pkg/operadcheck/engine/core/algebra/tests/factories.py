import factory
from faker import Faker

from core.algebra import ExactMatrix, RingDescriptor, RingKind

fake = Faker()


class RingFactory(factory.Factory):
    class Meta:
        model = RingDescriptor

    kind = RingKind.RATIONALS
    p = None

    class Params:
        integers = factory.Trait(kind=RingKind.INTEGERS)
        f2 = factory.Trait(kind=RingKind.PRIME_FIELD, p=2)
        f3 = factory.Trait(kind=RingKind.PRIME_FIELD, p=3)


def _random_entries(rows: int, cols: int, low: int, high: int, density: int) -> dict:
    return {
        (i, j): fake.random_int(min=low, max=high)
        for i in range(rows)
        for j in range(cols)
        if fake.boolean(chance_of_getting_true=density)
    }


class ExactMatrixFactory(factory.Factory):
    class Meta:
        model = ExactMatrix

    ring = factory.SubFactory(RingFactory)
    rows = factory.LazyFunction(lambda: fake.random_int(min=1, max=6))
    cols = factory.LazyFunction(lambda: fake.random_int(min=1, max=6))
    entries = factory.LazyAttribute(
        lambda o: _random_entries(o.rows, o.cols, o.low, o.high, o.density)
    )

    class Params:
        low = -4
        high = 4
        density = 60
