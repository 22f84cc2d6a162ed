"""Exact linear algebra over the rationals.

Everything is built on :class:`fractions.Fraction`; there is no floating
point anywhere.  Vectors are tuples of scalars, matrices are immutable
row-major grids, and a subspace always carries the unique reduced
row echelon basis of its span, so two subspaces are equal as sets exactly
when they compare equal structurally.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

Scalar = Fraction
Vector = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class NotNilpotentError(ValueError):
    """Raised when a map required to be nilpotent has d^dim != 0."""


def as_scalar(value: object) -> Fraction:
    """Coerce an int, Fraction or exact "p/q" string to a rational.

    Floats are rejected: this library is exact by contract.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def as_vector(entries: Iterable[object]) -> Vector:
    return tuple(as_scalar(x) for x in entries)


def zero_vector(n: int) -> Vector:
    return (_ZERO,) * n


def vec_add(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y, strict=True))


def vec_sub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y, strict=True))


def vec_scale(c: Fraction, x: Vector) -> Vector:
    return tuple(c * a for a in x)


def vec_is_zero(x: Vector) -> bool:
    return all(a == 0 for a in x)


@dataclass(frozen=True)
class Matrix:
    """Immutable rows x cols grid of rationals."""

    rows: int
    cols: int
    entries: tuple[Vector, ...]

    @staticmethod
    def from_rows(rows: Sequence[Sequence[object]], cols: int | None = None) -> "Matrix":
        data = tuple(as_vector(r) for r in rows)
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise ValueError("ragged rows")
        else:
            width = 0 if cols is None else cols
        if cols is not None and data and width != cols:
            raise ValueError(f"expected {cols} columns, got {width}")
        return Matrix(len(data), width, data)

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(n, n, tuple(
            tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n)
        ))

    @staticmethod
    def zeros(rows: int, cols: int) -> "Matrix":
        return Matrix(rows, cols, ((_ZERO,) * cols,) * rows)

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def is_zero(self) -> bool:
        return all(vec_is_zero(r) for r in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      tuple(self.column(j) for j in range(self.cols)))

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        return sum((self.entries[i][i] for i in range(self.rows)), _ZERO)

    def scale(self, c: Fraction) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(vec_scale(c, r) for r in self.entries))

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols, tuple(
            vec_add(a, b) for a, b in zip(self.entries, other.entries)
        ))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-_ONE)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            acc = [_ZERO] * other.cols
            for k, a in enumerate(self.entries[i]):
                if a == 0:
                    continue
                orow = other.entries[k]
                for j, b in enumerate(orow):
                    if b != 0:
                        acc[j] += a * b
            out.append(tuple(acc))
        return Matrix(self.rows, other.cols, tuple(out))

    def apply(self, v: Sequence[object]) -> Vector:
        """Matrix times column vector."""
        vv = as_vector(v)
        if len(vv) != self.cols:
            raise ValueError("shape mismatch")
        acc = [_ZERO] * self.rows
        for j, c in enumerate(vv):
            if c == 0:
                continue
            for i in range(self.rows):
                e = self.entries[i][j]
                if e != 0:
                    acc[i] += e * c
        return tuple(acc)


def _rref_in_place(rows: list[list[Fraction]]) -> tuple[list[int], int]:
    """Gauss-Jordan reduction; returns (pivot columns, rank)."""
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        src = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if src is None:
            continue
        rows[r], rows[src] = rows[src], rows[r]
        p = rows[r][c]
        if p != 1:
            inv = _ONE / p
            rows[r] = [x * inv for x in rows[r]]
        prow = rows[r]
        for i in range(n_rows):
            if i == r:
                continue
            f = rows[i][c]
            if f == 0:
                continue
            irow = rows[i]
            for j in range(c, n_cols):
                if prow[j] != 0:
                    irow[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return pivots, r


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...], int]:
    """Unique reduced row echelon form of m, with pivot columns and rank."""
    rows = [list(r) for r in m.entries]
    pivots, rank = _rref_in_place(rows)
    return (Matrix(m.rows, m.cols, tuple(tuple(r) for r in rows)),
            tuple(pivots), rank)


class Subspace:
    """A subspace of Q^n held by its canonical RREF basis.

    The basis rows are the reduced row echelon form of any spanning set,
    with zero rows dropped, so equal subspaces have identical bases and
    ``==`` decides equality of spans.
    """

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, spanning_rows: Iterable[Sequence[object]] = ()):
        rows = [list(as_vector(r)) for r in spanning_rows]
        for r in rows:
            if len(r) != ambient_dim:
                raise ValueError("row length differs from ambient dimension")
        pivots, rank = _rref_in_place(rows)
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis",
                           Matrix(rank, ambient_dim, tuple(tuple(r) for r in rows[:rank])))
        object.__setattr__(self, "pivots", tuple(pivots))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Subspace is immutable")

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim)

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, Matrix.identity(ambient_dim).entries)

    @property
    def dim(self) -> int:
        return self.basis.rows

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def rows(self) -> tuple[Vector, ...]:
        return self.basis.entries

    def reduce(self, v: Sequence[object]) -> Vector:
        """Residual of v after eliminating against the basis."""
        w = list(as_vector(v))
        if len(w) != self.ambient_dim:
            raise ValueError("vector length differs from ambient dimension")
        for row, p in zip(self.basis.entries, self.pivots):
            f = w[p]
            if f == 0:
                continue
            for j, e in enumerate(row):
                if e != 0:
                    w[j] -= f * e
        return tuple(w)

    def contains(self, v: Sequence[object]) -> bool:
        return vec_is_zero(self.reduce(v))

    def coordinates(self, v: Sequence[object]) -> Vector | None:
        """Coefficients of v over the basis rows, or None if v is outside."""
        w = list(as_vector(v))
        if len(w) != self.ambient_dim:
            raise ValueError("vector length differs from ambient dimension")
        coeffs = []
        for row, p in zip(self.basis.entries, self.pivots):
            f = w[p]
            coeffs.append(f)
            if f == 0:
                continue
            for j, e in enumerate(row):
                if e != 0:
                    w[j] -= f * e
        if not vec_is_zero(tuple(w)):
            return None
        return tuple(coeffs)

    def contains_subspace(self, other: "Subspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return all(self.contains(r) for r in other.rows())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        rows = [[str(x) for x in r] for r in self.basis.entries]
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim}, rows={rows})"


def kernel_basis(m: Matrix) -> Subspace:
    """Null space of m as a canonical subspace of Q^cols."""
    reduced, pivots, rank = rref(m)
    pivot_set = set(pivots)
    free_cols = [c for c in range(m.cols) if c not in pivot_set]
    rows = []
    for f in free_cols:
        v = [_ZERO] * m.cols
        v[f] = _ONE
        for t, p in enumerate(pivots):
            v[p] = -reduced.entries[t][f]
        rows.append(v)
    return Subspace(m.cols, rows)


def solve_affine(a: Matrix, b: Sequence[object]) -> tuple[Vector, Subspace] | None:
    """Solve a @ x = b exactly.

    Returns (particular solution with every free variable set to zero,
    kernel of a), or None when the system is inconsistent.
    """
    bb = as_vector(b)
    if len(bb) != a.rows:
        raise ValueError("right-hand side length differs from row count")
    aug = [list(r) + [c] for r, c in zip(a.entries, bb)]
    pivots, _ = _rref_in_place(aug)
    if a.cols in pivots:
        return None
    x = [_ZERO] * a.cols
    for t, p in enumerate(pivots):
        x[p] = aug[t][a.cols]
    left = Matrix(a.rows, a.cols, tuple(tuple(r[: a.cols]) for r in aug))
    hom = _kernel_from_rref(left, tuple(pivots))
    return tuple(x), hom


def _kernel_from_rref(reduced: Matrix, pivots: tuple[int, ...]) -> Subspace:
    pivot_set = set(pivots)
    rows = []
    for f in range(reduced.cols):
        if f in pivot_set:
            continue
        v = [_ZERO] * reduced.cols
        v[f] = _ONE
        for t, p in enumerate(pivots):
            v[p] = -reduced.entries[t][f]
        rows.append(v)
    return Subspace(reduced.cols, rows)


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    if u.ambient_dim != v.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    return Subspace(u.ambient_dim, u.rows() + v.rows())


def subspace_intersection(u: Subspace, v: Subspace) -> Subspace:
    """Intersection via the kernel of the stacked coefficient system."""
    if u.ambient_dim != v.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    k, m = u.dim, v.dim
    if k == 0 or m == 0:
        return Subspace.zero(u.ambient_dim)
    # columns: coefficients on u's basis, then on v's basis
    stacked = Matrix(u.ambient_dim, k + m, tuple(
        tuple(u.basis.entries[t][i] for t in range(k))
        + tuple(-v.basis.entries[t][i] for t in range(m))
        for i in range(u.ambient_dim)
    ))
    rows = []
    for coeffs in kernel_basis(stacked).rows():
        w = [_ZERO] * u.ambient_dim
        for t in range(k):
            c = coeffs[t]
            if c == 0:
                continue
            for j, e in enumerate(u.basis.entries[t]):
                if e != 0:
                    w[j] += c * e
        rows.append(w)
    return Subspace(u.ambient_dim, rows)


def subspace_contains(u: Subspace, v: Sequence[object]) -> bool:
    """Membership by residual elimination against the canonical basis."""
    return u.contains(v)


def apply_to_subspace(m: Matrix, u: Subspace) -> Subspace:
    """Canonical span of the images of u's basis under the column map m."""
    return Subspace(m.rows, [m.apply(r) for r in u.rows()])


@dataclass(frozen=True)
class LinearMap:
    """A square matrix acting on column vectors.

    Column convention: the image of the j-th basis vector is column j.
    """

    dim: int
    matrix: Matrix

    def __post_init__(self) -> None:
        if self.matrix.rows != self.dim or self.matrix.cols != self.dim:
            raise ValueError("matrix is not dim x dim")

    @staticmethod
    def from_matrix(m: Matrix) -> "LinearMap":
        if m.rows != m.cols:
            raise ValueError("linear map matrix must be square")
        return LinearMap(m.rows, m)

    @staticmethod
    def identity(n: int) -> "LinearMap":
        return LinearMap(n, Matrix.identity(n))

    @staticmethod
    def zero(n: int) -> "LinearMap":
        return LinearMap(n, Matrix.zeros(n, n))

    def __call__(self, v: Sequence[object]) -> Vector:
        return self.matrix.apply(v)

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self after other."""
        return LinearMap(self.dim, self.matrix @ other.matrix)

    def is_zero(self) -> bool:
        return self.matrix.is_zero()


def exp_nilpotent(d: LinearMap) -> LinearMap:
    """Exact exponential of a nilpotent map via its terminating series.

    Raises NotNilpotentError when d^dim != 0; by Cayley-Hamilton a
    nilpotent map on dim-space vanishes at the dim-th power, so no
    further probing is needed.
    """
    n = d.dim
    total = Matrix.zeros(n, n)
    power = Matrix.identity(n)
    k = 0
    while not power.is_zero():
        if k == n:
            raise NotNilpotentError(f"map has nonzero {n}-th power")
        total = total + power.scale(Fraction(1, factorial(k)))
        power = power @ d.matrix
        k += 1
    return LinearMap(n, total)
