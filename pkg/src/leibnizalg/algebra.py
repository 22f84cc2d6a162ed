"""Left Leibniz algebras presented by structure constants.

An algebra on an ordered basis b_0..b_{n-1} is a dense tensor c with
b_i . b_j = sum_k c[i][j][k] b_k.  Antisymmetry is never assumed; Lie
algebras are the special case where it holds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exactlin import (
    Matrix,
    LinearMap,
    Subspace,
    Vector,
    as_scalar,
    as_vector,
    vec_add,
)

_ZERO = Fraction(0)


class LeibnizIdentityError(ValueError):
    """Construction of an algebra whose table violates the left Leibniz law."""

    def __init__(self, report: "ViolationReport"):
        self.report = report
        first = report.violations[0]
        super().__init__(
            f"left Leibniz identity fails on basis triple "
            f"({first.i},{first.j},{first.k}) and {len(report.violations) - 1} more"
        )


class NotLieError(ValueError):
    """An operation that needs an antisymmetric table got a non-Lie algebra."""


class NotAnIdealError(ValueError):
    pass


class NotASubalgebraError(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    """One failing basis triple (a,b,c): a(bc) != (ab)c + b(ac)."""

    i: int
    j: int
    k: int
    lhs: Vector
    rhs: Vector


@dataclass(frozen=True)
class ViolationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class StructureTable:
    """The tensor c[i][j][k] of basis products b_i . b_j = sum_k c[i][j][k] b_k."""

    dim: int
    c: tuple[tuple[Vector, ...], ...]

    def __post_init__(self) -> None:
        n = self.dim
        if len(self.c) != n or any(
            len(plane) != n or any(len(row) != n for row in plane) for plane in self.c
        ):
            raise ValueError("structure tensor shape differs from dim")

    @staticmethod
    def from_rows(rows: Sequence[Sequence[Sequence[object]]]) -> "StructureTable":
        n = len(rows)
        return StructureTable(n, tuple(
            tuple(as_vector(row) for row in plane) for plane in rows
        ))

    @staticmethod
    def from_map(dim: int, products: Mapping[tuple[int, int], Mapping[int, object]]) -> "StructureTable":
        """Build a dense table from a sparse {(i,j): {k: coeff}} description."""
        grid = [[[_ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), row in products.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"index pair ({i},{j}) out of range")
            for k, coeff in row.items():
                if not 0 <= k < dim:
                    raise ValueError(f"target index {k} out of range")
                grid[i][j][k] = as_scalar(coeff)
        return StructureTable(dim, tuple(
            tuple(tuple(row) for row in plane) for plane in grid
        ))

    def row(self, i: int, j: int) -> Vector:
        """Coordinates of the basis product b_i . b_j."""
        return self.c[i][j]


class LeibnizAlgebra:
    """An algebra over Q with a fixed ordered basis and structure table.

    The left Leibniz identity is checked at construction unless
    ``validate=False`` (used by the CLI path that must report violations
    instead of refusing to build).
    """

    __slots__ = ("dim", "labels", "table")

    def __init__(self, table: StructureTable, labels: Sequence[str] | None = None,
                 validate: bool = True):
        if labels is None:
            labels = tuple(f"x{i}" for i in range(table.dim))
        else:
            labels = tuple(labels)
            if len(labels) != table.dim:
                raise ValueError("label count differs from dim")
        object.__setattr__(self, "dim", table.dim)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "table", table)
        if validate:
            report = check_left_leibniz(self)
            if not report.ok:
                raise LeibnizIdentityError(report)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("LeibnizAlgebra is immutable")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LeibnizAlgebra):
            return NotImplemented
        return (self.dim, self.labels, self.table) == (other.dim, other.labels, other.table)

    def __hash__(self) -> int:
        return hash((self.dim, self.labels, self.table))

    def __repr__(self) -> str:
        return f"LeibnizAlgebra(dim={self.dim}, labels={list(self.labels)})"

    def basis_vector(self, i: int) -> Vector:
        v = [_ZERO] * self.dim
        v[i] = Fraction(1)
        return tuple(v)


def product(alg: LeibnizAlgebra, x: Sequence[object], y: Sequence[object]) -> Vector:
    """Bilinear extension of the table: (x.y)_k = sum_{i,j} x_i y_j c[i][j][k]."""
    xv = as_vector(x)
    yv = as_vector(y)
    if len(xv) != alg.dim or len(yv) != alg.dim:
        raise ValueError("vector length differs from algebra dimension")
    acc = [_ZERO] * alg.dim
    c = alg.table.c
    for i, xi in enumerate(xv):
        if xi == 0:
            continue
        plane = c[i]
        for j, yj in enumerate(yv):
            if yj == 0:
                continue
            f = xi * yj
            for k, e in enumerate(plane[j]):
                if e != 0:
                    acc[k] += f * e
    return tuple(acc)


def _scaled_table_row_sum(alg: LeibnizAlgebra, coeffs: Vector, side: str, other: int) -> Vector:
    """sum_m coeffs[m] * (b_m . b_other) or (b_other . b_m), skipping zeros."""
    acc = [_ZERO] * alg.dim
    c = alg.table.c
    for m, cm in enumerate(coeffs):
        if cm == 0:
            continue
        row = c[m][other] if side == "left" else c[other][m]
        for k, e in enumerate(row):
            if e != 0:
                acc[k] += cm * e
    return tuple(acc)


def check_left_leibniz(alg: LeibnizAlgebra) -> ViolationReport:
    """Evaluate a(bc) = (ab)c + b(ac) on every basis triple.

    The report is empty exactly when the identity holds; otherwise it
    lists each violating triple with both sides.
    """
    n = alg.dim
    c = alg.table.c
    violations = []
    for i in range(n):
        for j in range(n):
            cij = c[i][j]
            for k in range(n):
                lhs = _scaled_table_row_sum(alg, c[j][k], "right", i)
                rhs = vec_add(
                    _scaled_table_row_sum(alg, cij, "left", k),
                    _scaled_table_row_sum(alg, c[i][k], "right", j),
                )
                if lhs != rhs:
                    violations.append(Violation(i, j, k, lhs, rhs))
    return ViolationReport(tuple(violations))


def is_lie(alg: LeibnizAlgebra) -> bool:
    """Antisymmetry of the table; with the Leibniz identity this gives Jacobi."""
    n = alg.dim
    c = alg.table.c
    for i in range(n):
        for j in range(i, n):
            if any(a != -b for a, b in zip(c[i][j], c[j][i])):
                return False
    return True


def left_multiplication(alg: LeibnizAlgebra, a: Sequence[object]) -> LinearMap:
    """The operator x -> a.x; column j is the product a . b_j."""
    av = as_vector(a)
    if len(av) != alg.dim:
        raise ValueError("vector length differs from algebra dimension")
    n = alg.dim
    c = alg.table.c
    cols = []
    for j in range(n):
        acc = [_ZERO] * n
        for i, ai in enumerate(av):
            if ai == 0:
                continue
            for k, e in enumerate(c[i][j]):
                if e != 0:
                    acc[k] += ai * e
        cols.append(acc)
    rows = tuple(tuple(cols[j][k] for j in range(n)) for k in range(n))
    return LinearMap(n, Matrix(n, n, rows))


def subspace_product(alg: LeibnizAlgebra, u: Subspace, v: Subspace) -> Subspace:
    """Canonical span of all products of basis vectors of u with those of v."""
    if u.ambient_dim != alg.dim or v.ambient_dim != alg.dim:
        raise ValueError("ambient dimension differs from algebra dimension")
    rows = [product(alg, x, y) for x in u.rows() for y in v.rows()]
    return Subspace(alg.dim, rows)


def is_subalgebra(alg: LeibnizAlgebra, u: Subspace) -> bool:
    return u.contains_subspace(subspace_product(alg, u, u))


def is_left_ideal(alg: LeibnizAlgebra, u: Subspace) -> bool:
    full = Subspace.full(alg.dim)
    return u.contains_subspace(subspace_product(alg, full, u))


def is_ideal(alg: LeibnizAlgebra, u: Subspace) -> bool:
    full = Subspace.full(alg.dim)
    return (u.contains_subspace(subspace_product(alg, full, u))
            and u.contains_subspace(subspace_product(alg, u, full)))


def quotient(alg: LeibnizAlgebra, ideal: Subspace) -> tuple[LeibnizAlgebra, Matrix, Matrix]:
    """Quotient algebra by an ideal, with projection and section maps.

    The quotient basis is the non-pivot coordinates of the ideal in index
    order, so the construction is deterministic.  Returns (quotient,
    projection, section) with projection composed with section equal to
    the identity on the quotient.
    """
    if ideal.ambient_dim != alg.dim:
        raise ValueError("ambient dimension differs from algebra dimension")
    if not is_ideal(alg, ideal):
        raise NotAnIdealError("quotient by a subspace that is not an ideal")
    n = alg.dim
    pivot_set = set(ideal.pivots)
    free = [c for c in range(n) if c not in pivot_set]
    q = len(free)

    section = Matrix(n, q, tuple(
        tuple(Fraction(1) if i == free[t] else _ZERO for t in range(q))
        for i in range(n)
    ))
    proj_rows = []
    for t in range(q):
        row = [_ZERO] * n
        row[free[t]] = Fraction(1)
        for r, p in enumerate(ideal.pivots):
            row[p] = -ideal.basis.entries[r][free[t]]
        proj_rows.append(tuple(row))
    projection = Matrix(q, n, tuple(proj_rows))

    grid = []
    for i in range(q):
        plane = []
        for j in range(q):
            plane.append(projection.apply(alg.table.row(free[i], free[j])))
        grid.append(tuple(plane))
    qalg = LeibnizAlgebra(
        StructureTable(q, tuple(grid)),
        labels=[alg.labels[f] for f in free],
    )
    return qalg, projection, section


def restrict_to_subalgebra(alg: LeibnizAlgebra, u: Subspace) -> LeibnizAlgebra:
    """The algebra induced on a subalgebra's canonical basis.

    Coordinates of the restricted algebra are coefficients over u's RREF
    basis rows; map them back with ``u.basis``.
    """
    if not is_subalgebra(alg, u):
        raise NotASubalgebraError("restriction to a subspace that is not a subalgebra")
    rows = u.rows()
    q = len(rows)
    grid = []
    for x in rows:
        plane = []
        for y in rows:
            coords = u.coordinates(product(alg, x, y))
            assert coords is not None
            plane.append(coords)
        grid.append(tuple(plane))
    return LeibnizAlgebra(
        StructureTable(q, tuple(grid)),
        labels=[alg.labels[p] for p in u.pivots],
    )


def embed_rows(u: Subspace, rows: Iterable[Sequence[object]]) -> Subspace:
    """Subspace of the ambient space spanned by u-coordinate vectors."""
    out = []
    for r in rows:
        rv = as_vector(r)
        w = [_ZERO] * u.ambient_dim
        for t, c in enumerate(rv):
            if c == 0:
                continue
            for j, e in enumerate(u.basis.entries[t]):
                if e != 0:
                    w[j] += c * e
        out.append(w)
    return Subspace(u.ambient_dim, out)
