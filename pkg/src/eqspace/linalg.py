"""Exact dense linear algebra over the rationals.

Scalars are Python ints and ``fractions.Fraction`` values; every operation
is exact, so equality tests carry zero tolerance.  Maps act on column
coordinate vectors, images are column spaces, and subspaces are stored as
reduced row-echelon bases, which makes the RREF the unique canonical form
for subspace equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


class Matrix:
    """Immutable dense matrix with exact rational entries."""

    __slots__ = ("_cells", "_rows", "_cols")

    def __init__(self, cells: Iterable[Iterable[Scalar]], cols: int | None = None):
        rows = tuple(tuple(row) for row in cells)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
            if cols is not None and cols != width:
                raise ValueError("cols does not match row width")
            cols = width
        elif cols is None:
            raise ValueError("empty matrix needs an explicit column count")
        self._cells = rows
        self._rows = len(rows)
        self._cols = cols

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def cells(self) -> tuple[tuple[Scalar, ...], ...]:
        return self._cells

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self._cells[i]

    def __getitem__(self, key: tuple[int, int]) -> Scalar:
        i, j = key
        return self._cells[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self._rows == other._rows
            and self._cols == other._cols
            and self._cells == other._cells
        )

    def __hash__(self) -> int:
        return hash((self._rows, self._cols, self._cells))

    def __repr__(self) -> str:
        return f"Matrix({self._rows}x{self._cols})"

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(
            tuple(x + y for x, y in zip(ra, rb))
            for ra, rb in zip(self._cells, other._cells)
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(
            tuple(x - y for x, y in zip(ra, rb))
            for ra, rb in zip(self._cells, other._cells)
        )

    def __neg__(self) -> "Matrix":
        return Matrix(tuple(-x for x in r) for r in self._cells)

    def scale(self, c: Scalar) -> "Matrix":
        return Matrix(tuple(c * x for x in r) for r in self._cells)

    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self._cols != other._rows:
            raise ValueError(
                f"shape mismatch: {self._rows}x{self._cols} * {other._rows}x{other._cols}"
            )
        out = [[0] * other._cols for _ in range(self._rows)]
        bcells = other._cells
        for i, arow in enumerate(self._cells):
            orow = out[i]
            for k, a in enumerate(arow):
                if a == 0:
                    continue
                brow = bcells[k]
                for j, b in enumerate(brow):
                    if b != 0:
                        orow[j] += a * b
        return Matrix(out, cols=other._cols)

    def apply(self, vec: Sequence[Scalar]) -> tuple[Scalar, ...]:
        """Matrix times column coordinate vector."""
        if len(vec) != self._cols:
            raise ValueError("vector length does not match column count")
        out = [0] * self._rows
        for i, row in enumerate(self._cells):
            acc = 0
            for a, x in zip(row, vec):
                if a != 0 and x != 0:
                    acc += a * x
            out[i] = acc
        return tuple(out)

    def transpose(self) -> "Matrix":
        if self._rows == 0:
            return Matrix(((),) * self._cols, cols=0)
        return Matrix(zip(*self._cells), cols=self._rows)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._cells for x in r)

    def _check_same_shape(self, other: "Matrix") -> None:
        if self._rows != other._rows or self._cols != other._cols:
            raise ValueError("shape mismatch")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls((tuple(int(i == j) for j in range(n)) for i in range(n)), cols=n)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(((0,) * cols for _ in range(rows)), cols=cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Scalar]], rows: int) -> "Matrix":
        if not columns:
            return cls.zero(rows, 0)
        return cls(zip(*columns), cols=len(columns))


def transpose(m: Matrix) -> Matrix:
    return m.transpose()


def kronecker(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product, left factor major: (a⊗b)[(i,k),(j,l)] = a[i,j]·b[k,l]."""
    out = [[0] * (a.cols * b.cols) for _ in range(a.rows * b.rows)]
    for i, arow in enumerate(a.cells):
        for j, av in enumerate(arow):
            if av == 0:
                continue
            roff = i * b.rows
            coff = j * b.cols
            for k, brow in enumerate(b.cells):
                orow = out[roff + k]
                for l, bv in enumerate(brow):
                    if bv != 0:
                        orow[coff + l] = av * bv
    return Matrix(out, cols=a.cols * b.cols)


def _clear_denominators(row: Sequence[Scalar]) -> list[int]:
    """Scale a rational row to integers (row space is unchanged)."""
    lcm = 1
    for x in row:
        d = x.denominator
        if d != 1:
            lcm = lcm * d // gcd(lcm, d)
    if lcm == 1:
        return [int(x) for x in row]
    return [int(x * lcm) for x in row]


_CONTENT_BOUND = 1 << 96


def _reduce_content(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def _rref_rows(raw_rows: Iterable[Sequence[Scalar]], ncols: int) -> list[list[Scalar]]:
    """Canonical reduced row echelon form; zero rows dropped.

    Elimination runs over integers: denominators are cleared per row,
    pivots are chosen with minimal magnitude to limit growth, and content
    is divided out once entries pass a size gate.  Only the final pivot
    normalization divides, so everything stays exact.  The pivot strategy
    never affects the result, which is the unique RREF of the row space.
    """
    work: list[list[int]] = []
    for r in raw_rows:
        row = _clear_denominators(r)
        if any(row):
            work.append(_reduce_content(row))
    pivots: list[int] = []
    rank = 0
    # Forward pass: integer echelon form.  Rows at index >= rank are zero
    # left of the current column, so row operations run on tails only.
    for col in range(ncols):
        piv = None
        best = None
        for r in range(rank, len(work)):
            v = work[r][col]
            if v != 0:
                a = abs(v)
                if best is None or a < best:
                    piv, best = r, a
                    if a == 1:
                        break
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        prow = work[rank]
        a = prow[col]
        ptail = prow[col:]
        for r in range(rank + 1, len(work)):
            wr = work[r]
            b = wr[col]
            if b == 0:
                continue
            tail = [a * x - b * y for x, y in zip(wr[col:], ptail)]
            if max(map(abs, tail), default=0) > _CONTENT_BOUND:
                tail = _reduce_content(tail)
            work[r] = [0] * col + tail
        pivots.append(col)
        rank += 1
    # Backward pass: clear above the pivots, still over integers.
    for i in range(rank - 2, -1, -1):
        wi = work[i]
        for j in range(i + 1, rank):
            b = wi[pivots[j]]
            if b == 0:
                continue
            a = work[j][pivots[j]]
            wi = [a * x - b * y for x, y in zip(wi, work[j])]
            if max(map(abs, wi)) > _CONTENT_BOUND:
                wi = _reduce_content(wi)
        work[i] = wi
    out: list[list[Scalar]] = []
    for row, col in zip(work[:rank], pivots):
        lead = row[col]
        if lead == 1:
            out.append(list(row))
        else:
            out.append([Fraction(x, lead) for x in row])
    return out


def rref(m: Matrix) -> Matrix:
    """Reduced row-echelon form; preserves the row space, drops zero rows."""
    return Matrix(_rref_rows(m.cells, m.cols), cols=m.cols)


def rank(m: Matrix) -> int:
    return rref(m).rows


def _pivot_columns(basis: Matrix) -> list[int]:
    cols = []
    for row in basis.cells:
        for c, x in enumerate(row):
            if x != 0:
                cols.append(c)
                break
    return cols


def _is_canonical_basis(basis: Matrix) -> bool:
    """Cheap structural check that a matrix is an RREF with no zero rows."""
    prev = -1
    pivots = []
    for row in basis.cells:
        lead = next((c for c, x in enumerate(row) if x != 0), None)
        if lead is None or lead <= prev or row[lead] != 1:
            return False
        pivots.append(lead)
        prev = lead
    for i, row in enumerate(basis.cells):
        for p in pivots[:i] + pivots[i + 1 :]:
            if row[p] != 0:
                return False
    return True


@dataclass(frozen=True)
class Subspace:
    """Subspace of k^ambient_dim with canonical reduced row-echelon basis.

    Construct through :meth:`from_rows`; equality of subspaces is plain
    equality of the canonical bases.
    """

    ambient_dim: int
    basis: Matrix

    def __post_init__(self) -> None:
        if self.basis.cols != self.ambient_dim:
            raise ValueError("basis width does not match ambient dimension")
        if not _is_canonical_basis(self.basis):
            raise ValueError("basis is not in reduced row-echelon form")

    @classmethod
    def from_rows(cls, ambient_dim: int, rows: Iterable[Sequence[Scalar]]) -> "Subspace":
        return cls(ambient_dim, Matrix(_rref_rows(rows, ambient_dim), cols=ambient_dim))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix((), cols=ambient_dim))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def pivot_columns(self) -> list[int]:
        return _pivot_columns(self.basis)

    def reduce_vector(self, vec: Sequence[Scalar]) -> tuple[Scalar, ...]:
        """Residue of vec after eliminating all pivot coordinates."""
        if len(vec) != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        res = list(vec)
        for row, p in zip(self.basis.cells, self.pivot_columns()):
            c = res[p]
            if c != 0:
                res = [x - c * y for x, y in zip(res, row)]
        return tuple(res)

    def contains_vector(self, vec: Sequence[Scalar]) -> bool:
        return all(x == 0 for x in self.reduce_vector(vec))


def _check_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError(
            f"ambient dimension mismatch: {a.ambient_dim} vs {b.ambient_dim}"
        )


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    return Subspace.from_rows(a.ambient_dim, a.basis.cells + b.basis.cells)


def subspace_contains(a: Subspace, b: Subspace) -> bool:
    """True when b is contained in a."""
    _check_ambient(a, b)
    return all(a.contains_vector(row) for row in b.basis.cells)


def subspace_equal(a: Subspace, b: Subspace) -> bool:
    _check_ambient(a, b)
    return a.basis == b.basis


def kernel(m: Matrix) -> Subspace:
    """Canonical form of {x : m·x = 0}."""
    red = _rref_rows(m.cells, m.cols)
    pivots = []
    for row in red:
        for c, x in enumerate(row):
            if x != 0:
                pivots.append(c)
                break
    pivot_set = set(pivots)
    vectors = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        vec: list[Scalar] = [0] * m.cols
        vec[free] = 1
        for row, p in zip(red, pivots):
            if row[free] != 0:
                vec[p] = -row[free]
        vectors.append(vec)
    return Subspace.from_rows(m.cols, vectors)


def column_space(m: Matrix) -> Subspace:
    """Canonical span of the columns of m (the image of the map)."""
    return Subspace.from_rows(m.rows, m.transpose().cells)
