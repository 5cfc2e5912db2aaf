"""
Sparse exact matrices and the elimination routines built on them.

Storage is row-major and sparse; absent entries are zero. Field elimination
stays sparse, the Smith normal form over Z works on dense integer rows.
"""

from __future__ import annotations

import logging
from typing import Any, Iterable, Iterator, Mapping, NamedTuple, Sequence

from .exceptions import ShapeMismatchError, UnsupportedRingError
from .rings import RingDescriptor, RingKind, Scalar, Value

logger = logging.getLogger(__name__)


class ExactMatrix:
    """
    A rows x cols matrix over a coefficient ring, immutable after construction
    """

    __slots__ = ("ring", "rows", "cols", "_data")

    def __init__(
        self,
        ring: RingDescriptor,
        rows: int,
        cols: int,
        entries: Mapping[tuple[int, int], Any] | None = None,
    ) -> None:
        if rows < 0 or cols < 0:
            raise ShapeMismatchError(f"Negative shape ({rows}, {cols})")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        data: dict[int, dict[int, Value]] = {}
        for (i, j), raw in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise ShapeMismatchError(
                    f"Entry ({i}, {j}) outside a {rows}x{cols} matrix"
                )
            value = ring.normalize(raw)
            if value != 0:
                data.setdefault(i, {})[j] = value
        self._data = data

    @classmethod
    def _from_rows_unchecked(
        cls, ring: RingDescriptor, rows: int, cols: int, data: dict[int, dict[int, Value]]
    ) -> ExactMatrix:
        # data must already be canonical and free of zeros
        matrix = cls.__new__(cls)
        matrix.ring = ring
        matrix.rows = rows
        matrix.cols = cols
        matrix._data = data
        return matrix

    # constructors

    @classmethod
    def zeros(cls, ring: RingDescriptor, rows: int, cols: int) -> ExactMatrix:
        return cls(ring, rows, cols)

    @classmethod
    def identity(cls, ring: RingDescriptor, n: int) -> ExactMatrix:
        one = ring.one()
        return cls._from_rows_unchecked(ring, n, n, {i: {i: one} for i in range(n)})

    @classmethod
    def from_rows(
        cls, ring: RingDescriptor, rows: Sequence[Sequence[Any]], cols: int | None = None
    ) -> ExactMatrix:
        width = cols if cols is not None else (len(rows[0]) if rows else 0)
        entries = {}
        for i, row in enumerate(rows):
            if len(row) != width:
                raise ShapeMismatchError("Ragged rows")
            for j, value in enumerate(row):
                entries[(i, j)] = value
        return cls(ring, len(rows), width, entries)

    @classmethod
    def from_columns(
        cls, ring: RingDescriptor, columns: Sequence[Sequence[Any]], rows: int
    ) -> ExactMatrix:
        entries = {}
        for j, column in enumerate(columns):
            if len(column) != rows:
                raise ShapeMismatchError("Column of wrong length")
            for i, value in enumerate(column):
                entries[(i, j)] = value
        return cls(ring, rows, len(columns), entries)

    @classmethod
    def block_diagonal(
        cls, ring: RingDescriptor, blocks: Sequence[ExactMatrix]
    ) -> ExactMatrix:
        data: dict[int, dict[int, Value]] = {}
        row_offset = col_offset = 0
        for block in blocks:
            ring.require_same(block.ring)
            for i, row in block._data.items():
                data[i + row_offset] = {j + col_offset: v for j, v in row.items()}
            row_offset += block.rows
            col_offset += block.cols
        return cls._from_rows_unchecked(ring, row_offset, col_offset, data)

    @classmethod
    def from_blocks(
        cls,
        ring: RingDescriptor,
        grid: Sequence[Sequence[ExactMatrix]],
    ) -> ExactMatrix:
        """
        Assemble a block matrix; blocks in a row share their height and
        blocks in a column share their width
        """
        heights = [row[0].rows for row in grid] if grid else []
        widths = [block.cols for block in grid[0]] if grid else []
        data: dict[int, dict[int, Value]] = {}
        row_offset = 0
        for r, row in enumerate(grid):
            col_offset = 0
            for c, block in enumerate(row):
                ring.require_same(block.ring)
                if block.rows != heights[r] or block.cols != widths[c]:
                    raise ShapeMismatchError("Inconsistent block sizes")
                for i, entries in block._data.items():
                    target = data.setdefault(i + row_offset, {})
                    for j, v in entries.items():
                        target[j + col_offset] = v
                col_offset += block.cols
            row_offset += heights[r]
        return cls._from_rows_unchecked(ring, sum(heights), sum(widths), data)

    # access

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def value(self, i: int, j: int) -> Value:
        return self._data.get(i, {}).get(j, self.ring.zero())

    def entry(self, i: int, j: int) -> Scalar:
        return Scalar(self.ring, self.value(i, j))

    def items(self) -> Iterator[tuple[tuple[int, int], Value]]:
        for i in sorted(self._data):
            row = self._data[i]
            for j in sorted(row):
                yield (i, j), row[j]

    def row(self, i: int) -> dict[int, Value]:
        return dict(self._data.get(i, {}))

    def column(self, j: int) -> list[Value]:
        zero = self.ring.zero()
        return [self._data.get(i, {}).get(j, zero) for i in range(self.rows)]

    def to_rows(self) -> list[list[Value]]:
        zero = self.ring.zero()
        return [
            [self._data.get(i, {}).get(j, zero) for j in range(self.cols)]
            for i in range(self.rows)
        ]

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self._data.values())

    def is_zero(self) -> bool:
        return not self._data

    def is_identity(self) -> bool:
        if self.rows != self.cols or self.nnz != self.rows:
            return False
        return all(self._data.get(i) == {i: 1} for i in range(self.rows))

    # algebra

    def _require_compatible(self, other: ExactMatrix) -> None:
        self.ring.require_same(other.ring)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.shape == other.shape
            and self._data == other._data
        )

    __hash__ = None  # type: ignore[assignment]

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        self._require_compatible(other)
        if self.cols != other.rows:
            raise ShapeMismatchError(f"Cannot multiply {self.shape} by {other.shape}")
        ring = self.ring
        data: dict[int, dict[int, Value]] = {}
        for i, row in self._data.items():
            acc: dict[int, Value] = {}
            for k, a in row.items():
                for j, b in other._data.get(k, {}).items():
                    acc[j] = ring.add(acc.get(j, ring.zero()), ring.mul(a, b))
            acc = {j: v for j, v in acc.items() if v != 0}
            if acc:
                data[i] = acc
        return ExactMatrix._from_rows_unchecked(ring, self.rows, other.cols, data)

    def _combine(self, other: ExactMatrix, negate: bool) -> ExactMatrix:
        self._require_compatible(other)
        if self.shape != other.shape:
            raise ShapeMismatchError(f"Shapes differ: {self.shape} vs {other.shape}")
        ring = self.ring
        data = {i: dict(row) for i, row in self._data.items()}
        for i, row in other._data.items():
            target = data.setdefault(i, {})
            for j, v in row.items():
                v = ring.neg(v) if negate else v
                total = ring.add(target.get(j, ring.zero()), v)
                if total == 0:
                    target.pop(j, None)
                else:
                    target[j] = total
            if not target:
                del data[i]
        return ExactMatrix._from_rows_unchecked(ring, self.rows, self.cols, data)

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        return self._combine(other, negate=False)

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        return self._combine(other, negate=True)

    def scale(self, factor: Any) -> ExactMatrix:
        ring = self.ring
        c = ring.normalize(factor)
        if c == 0:
            return ExactMatrix.zeros(ring, self.rows, self.cols)
        data = {
            i: {j: ring.mul(c, v) for j, v in row.items()}
            for i, row in self._data.items()
        }
        return ExactMatrix._from_rows_unchecked(ring, self.rows, self.cols, data)

    def __neg__(self) -> ExactMatrix:
        return self.scale(-1)

    def transpose(self) -> ExactMatrix:
        data: dict[int, dict[int, Value]] = {}
        for i, row in self._data.items():
            for j, v in row.items():
                data.setdefault(j, {})[i] = v
        return ExactMatrix._from_rows_unchecked(self.ring, self.cols, self.rows, data)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> ExactMatrix:
        col_index = {j: k for k, j in enumerate(cols)}
        data: dict[int, dict[int, Value]] = {}
        for new_i, i in enumerate(rows):
            picked = {
                col_index[j]: v for j, v in self._data.get(i, {}).items() if j in col_index
            }
            if picked:
                data[new_i] = picked
        return ExactMatrix._from_rows_unchecked(self.ring, len(rows), len(cols), data)

    def apply(self, vector: Sequence[Any]) -> list[Value]:
        if len(vector) != self.cols:
            raise ShapeMismatchError("Vector length does not match column count")
        ring = self.ring
        values = [ring.normalize(x) for x in vector]
        out = [ring.zero()] * self.rows
        for i, row in self._data.items():
            acc = ring.zero()
            for j, a in row.items():
                acc = ring.add(acc, ring.mul(a, values[j]))
            out[i] = acc
        return out

    def __repr__(self) -> str:
        return f"ExactMatrix({self.ring}, {self.rows}x{self.cols}, nnz={self.nnz})"


def _require_field(m: ExactMatrix, operation: str) -> None:
    m.ring.require_field(operation)


def _nonzero_rows(m: ExactMatrix) -> list[dict[int, Value]]:
    return [dict(m._data[i]) for i in sorted(m._data)]


def _eliminate(
    ring: RingDescriptor, target: dict[int, Value], source: dict[int, Value], factor: Value
) -> None:
    # target -= factor * source, in place
    for j, b in source.items():
        value = ring.sub(target.get(j, ring.zero()), ring.mul(factor, b))
        if value == 0:
            target.pop(j, None)
        else:
            target[j] = value


def _rref_sparse(
    ring: RingDescriptor, rows: list[dict[int, Value]]
) -> tuple[list[dict[int, Value]], list[int]]:
    """
    Reduced row echelon form of sparse rows; returns the nonzero rows and the
    pivot columns, both ordered by pivot
    """
    echelon: dict[int, dict[int, Value]] = {}
    for original in rows:
        row = dict(original)
        while row:
            lead = min(row)
            pivot_row = echelon.get(lead)
            if pivot_row is None:
                inverse = ring.inv(row[lead])
                echelon[lead] = {j: ring.mul(inverse, v) for j, v in row.items()}
                break
            _eliminate(ring, row, pivot_row, row[lead])
    pivots = sorted(echelon)
    for c in reversed(pivots):
        source = echelon[c]
        for other in pivots:
            if other >= c:
                break
            target = echelon[other]
            if c in target:
                _eliminate(ring, target, source, target[c])
    return [echelon[c] for c in pivots], pivots


def row_echelon(m: ExactMatrix) -> tuple[ExactMatrix, tuple[int, ...]]:
    """
    Reduced row echelon form of a matrix over a field, with pivot columns
    """
    _require_field(m, "row_echelon")
    reduced, pivots = _rref_sparse(m.ring, _nonzero_rows(m))
    data = {i: row for i, row in enumerate(reduced)}
    return (
        ExactMatrix._from_rows_unchecked(m.ring, len(reduced), m.cols, data),
        tuple(pivots),
    )


def rank(m: ExactMatrix) -> int:
    """
    Dimension of the column space over a field
    """
    _require_field(m, "rank")
    if m.is_zero():
        return 0
    _, pivots = _rref_sparse(m.ring, _nonzero_rows(m))
    return len(pivots)


def kernel_basis(m: ExactMatrix) -> list[ExactMatrix]:
    """
    Basis of the null space, as cols x 1 column vectors
    """
    _require_field(m, "kernel_basis")
    ring = m.ring
    reduced, pivots = _rref_sparse(ring, _nonzero_rows(m))
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        entries: dict[tuple[int, int], Value] = {(free, 0): ring.one()}
        for row, pivot in zip(reduced, pivots):
            if free in row:
                entries[(pivot, 0)] = ring.neg(row[free])
        basis.append(ExactMatrix(ring, m.cols, 1, entries))
    return basis


class SmithForm(NamedTuple):
    """
    U @ m @ V == D with U, V unimodular and D diagonal, d_1 | d_2 | ...
    """

    D: ExactMatrix
    U: ExactMatrix
    V: ExactMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(
            int(self.D.value(i, i)) for i in range(min(self.D.rows, self.D.cols))
        )

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d != 0)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def _smallest_nonzero(
    a: list[list[int]], rows: Iterable[int], cols: Sequence[int]
) -> tuple[int, int] | None:
    best: tuple[int, int] | None = None
    best_abs = 0
    for i in rows:
        row = a[i]
        for j in cols:
            v = row[j]
            if v and (best is None or abs(v) < best_abs):
                best, best_abs = (i, j), abs(v)
                if best_abs == 1:
                    return best
    return best


def smith_normal_form(m: ExactMatrix) -> SmithForm:
    """
    Smith normal form over Z with the unimodular transforms

    Pivots are chosen by smallest absolute value; U and V accumulate the
    row and column operations so that U @ m @ V == D.
    """
    if m.ring.kind is not RingKind.INTEGERS:
        raise UnsupportedRingError("smith_normal_form is only defined over Z")
    ring = m.ring
    nrows, ncols = m.shape
    a = [[int(x) for x in row] for row in m.to_rows()]
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    v = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def swap_rows(i: int, k: int) -> None:
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j: int, k: int) -> None:
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]

    def add_row(target: int, source: int, factor: int) -> None:
        # row_target += factor * row_source
        a[target] = [x + factor * y for x, y in zip(a[target], a[source])]
        u[target] = [x + factor * y for x, y in zip(u[target], u[source])]

    def add_col(target: int, source: int, factor: int) -> None:
        for row in a:
            row[target] += factor * row[source]
        for row in v:
            row[target] += factor * row[source]

    for t in range(min(nrows, ncols)):
        position = _smallest_nonzero(a, range(t, nrows), range(t, ncols))
        if position is None:
            break
        while True:
            i, j = position
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            pivot = a[t][t]
            for i in range(t + 1, nrows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // pivot))
            for j in range(t + 1, ncols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // pivot))
            # floor-division remainders are strictly smaller than the pivot
            leftover = _smallest_nonzero(a, range(t + 1, nrows), [t])
            leftover = leftover or _smallest_nonzero(a, [t], range(t + 1, ncols))
            if leftover is not None:
                position = leftover
                continue
            # the pivot must divide the rest of the submatrix
            offender = next(
                (
                    i
                    for i in range(t + 1, nrows)
                    if any(a[i][j] % pivot for j in range(t + 1, ncols))
                ),
                None,
            )
            if offender is None:
                break
            add_row(t, offender, 1)
            position = (t, t)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    D = ExactMatrix.from_rows(ring, a, cols=ncols)
    U = ExactMatrix.from_rows(ring, u, cols=nrows)
    V = ExactMatrix.from_rows(ring, v, cols=ncols)
    logger.debug(f"SNF | shape={m.shape} | diagonal={[a[k][k] for k in range(min(nrows, ncols))]}")
    return SmithForm(D, U, V)
