"""Builders: simple Lie algebra catalog, adjoint modules, split extensions
with zero right action, and the two-complements bundle they produce."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    LeibnizAlgebra,
    NotLieError,
    StructureTable,
    is_lie,
    left_multiplication,
    product,
)
from .exactlin import (
    LinearMap,
    Matrix,
    Subspace,
    as_scalar,
    kernel_basis,
    solve_affine,
    vec_is_zero,
)
from .levi import ModuleAction, verify_levi
from .structure import leibniz_kernel

_ZERO = Fraction(0)
_ONE = Fraction(1)

CATALOG = ("sl2", "sl3", "so3")


class UnknownAlgebraError(ValueError):
    """Catalog lookup with a name that is not in it."""


@dataclass(frozen=True)
class CounterexampleBundle:
    """A split extension carrying two distinct semisimple complements.

    ``L`` has the simple algebra as its first coordinate block and a copy
    of it (as a left module, primes in the labels) as the second block.
    ``S`` is the first block, ``S1`` the diagonal, and ``prime_map`` sends
    the first block onto the second.
    """

    name: str
    L: LeibnizAlgebra
    K: Subspace
    S: Subspace
    S1: Subspace
    prime_map: LinearMap


def _table_from_matrices(mats: list[Matrix]) -> StructureTable:
    """Structure constants of a matrix Lie algebra spanned by ``mats``,
    with the commutator as product."""
    n = len(mats)
    size = mats[0].rows
    flat_cols = Matrix(size * size, n, tuple(
        tuple(mats[t].entries[i][j] for t in range(n))
        for i in range(size) for j in range(size)
    ))
    grid = []
    for a in mats:
        plane = []
        for b in mats:
            bracket = (a @ b) - (b @ a)
            flat = tuple(bracket.entries[i][j] for i in range(size) for j in range(size))
            solved = solve_affine(flat_cols, flat)
            if solved is None:
                raise ValueError("bracket escapes the span of the generators")
            plane.append(solved[0])
        grid.append(tuple(plane))
    return StructureTable(n, tuple(grid))


def _sl2() -> LeibnizAlgebra:
    # basis (e, h, f): h.e = 2e, h.f = -2f, e.f = h, antisymmetric
    table = StructureTable.from_map(3, {
        (0, 1): {0: -2},
        (1, 0): {0: 2},
        (0, 2): {1: 1},
        (2, 0): {1: -1},
        (1, 2): {2: -2},
        (2, 1): {2: 2},
    })
    return LeibnizAlgebra(table, labels=("e", "h", "f"))


def _so3() -> LeibnizAlgebra:
    # basis (x, y, z): x.y = z cyclically, antisymmetric
    table = StructureTable.from_map(3, {
        (0, 1): {2: 1},
        (1, 0): {2: -1},
        (1, 2): {0: 1},
        (2, 1): {0: -1},
        (2, 0): {1: 1},
        (0, 2): {1: -1},
    })
    return LeibnizAlgebra(table, labels=("x", "y", "z"))


def _sl3() -> LeibnizAlgebra:
    def unit(i: int, j: int) -> Matrix:
        return Matrix(3, 3, tuple(
            tuple(_ONE if (r, c) == (i, j) else _ZERO for c in range(3))
            for r in range(3)
        ))

    mats = [unit(0, 1), unit(0, 2), unit(1, 2),
            unit(1, 0), unit(2, 0), unit(2, 1),
            unit(0, 0) - unit(1, 1), unit(1, 1) - unit(2, 2)]
    labels = ["e12", "e13", "e23", "e21", "e31", "e32", "h1", "h2"]
    return LeibnizAlgebra(_table_from_matrices(mats), labels=labels)


def simple_algebra(name: str) -> LeibnizAlgebra:
    """One of the catalog simple Lie algebras: sl2, sl3 or so3."""
    if name == "sl2":
        return _sl2()
    if name == "sl3":
        return _sl3()
    if name == "so3":
        return _so3()
    raise UnknownAlgebraError(f"unknown algebra {name!r}; catalog: {', '.join(CATALOG)}")


def adjoint_module(alg: LeibnizAlgebra) -> ModuleAction:
    """The algebra acting on its own space by left multiplication."""
    if not is_lie(alg):
        raise NotLieError("adjoint module of a non-Lie algebra")
    rho = tuple(
        left_multiplication(alg, alg.basis_vector(i)) for i in range(alg.dim)
    )
    return ModuleAction(alg.dim, alg.dim, rho)


def split_extension_zero_right(salg: LeibnizAlgebra, action: ModuleAction,
                               module_labels: tuple[str, ...] | None = None) -> LeibnizAlgebra:
    """Split extension of a module by a Lie algebra with zero right action.

    Basis is the algebra block then the module block; products are
    (s,0)(t,0) = (st,0), (s,0)(0,m) = (0, s acting on m), and the module
    block multiplies everything to zero.  The result is validated against
    the left Leibniz identity rather than trusted.
    """
    if action.acting_dim != salg.dim:
        raise ValueError("action acting_dim differs from algebra dimension")
    if not is_lie(salg):
        raise NotLieError("split extension base must be a Lie algebra here")
    sd, md = salg.dim, action.space_dim
    n = sd + md
    grid = [[[_ZERO] * n for _ in range(n)] for _ in range(n)]
    for i in range(sd):
        for j in range(sd):
            for k, e in enumerate(salg.table.row(i, j)):
                grid[i][j][k] = e
        rho = action.rho[i].matrix
        for j in range(md):
            for k in range(md):
                e = rho.entries[k][j]
                if e != 0:
                    grid[i][sd + j][sd + k] = e
    table = StructureTable(n, tuple(
        tuple(tuple(row) for row in plane) for plane in grid
    ))
    if module_labels is None:
        module_labels = tuple(f"m{i}" for i in range(md))
    elif len(module_labels) != md:
        raise ValueError("one label per module basis vector required")
    return LeibnizAlgebra(table, labels=tuple(salg.labels) + tuple(module_labels))


def counterexample(name: str) -> CounterexampleBundle:
    """The bundle over a catalog algebra: split extension of its adjoint
    module with zero right action, first block and diagonal complements."""
    salg = simple_algebra(name)
    action = adjoint_module(salg)
    sd = salg.dim
    alg = split_extension_zero_right(
        salg, action, module_labels=tuple(f"{lbl}'" for lbl in salg.labels)
    )
    n = alg.dim

    s_block = Subspace(n, [alg.basis_vector(i) for i in range(sd)])
    k_block = Subspace(n, [alg.basis_vector(sd + i) for i in range(sd)])
    diagonal = Subspace(n, [
        tuple(_ONE if j == i or j == sd + i else _ZERO for j in range(n))
        for i in range(sd)
    ])
    prime = LinearMap(n, Matrix(n, n, tuple(
        tuple(_ONE if (i >= sd and j == i - sd) else _ZERO for j in range(n))
        for i in range(n)
    )))

    if leibniz_kernel(alg) != k_block:
        raise AssertionError("squares ideal differs from the module block")
    for i in range(sd):
        for j in range(sd):
            left = product(alg, diagonal.rows()[i], diagonal.rows()[j])
            st = product(salg, salg.basis_vector(i), salg.basis_vector(j))
            expected = tuple(st) + tuple(st)
            if left != expected:
                raise AssertionError("diagonal block violates the product identity")
    for cand in (s_block, diagonal):
        if not verify_levi(alg, cand).all_pass:
            raise AssertionError("complement witness failed at construction")
    if s_block == diagonal:
        raise AssertionError("complements coincide")
    return CounterexampleBundle(name=name, L=alg, K=k_block, S=s_block,
                                S1=diagonal, prime_map=prime)


def diagonal_complement(bundle: CounterexampleBundle, lam: object) -> Subspace:
    """The complement {(v, lam*v')}; lam=0 gives S and lam=1 gives S1."""
    lam = as_scalar(lam)
    n = bundle.L.dim
    sd = n // 2
    rows = []
    for i in range(sd):
        row = [_ZERO] * n
        row[i] = _ONE
        row[sd + i] = lam
        rows.append(row)
    return Subspace(n, rows)


def equivariant_hom_basis(act1: ModuleAction, act2: ModuleAction) -> list[Matrix]:
    """Basis of the space of maps intertwining two actions of one algebra.

    Solves phi o rho1(x) = rho2(x) o phi for all acting basis x; each
    kernel basis vector is reshaped into a space2 x space1 matrix.
    """
    if act1.acting_dim != act2.acting_dim:
        raise ValueError("actions have different acting algebras")
    d1, d2 = act1.space_dim, act2.space_dim
    rows = []
    for r1, r2 in zip(act1.rho, act2.rho):
        m1, m2 = r1.matrix, r2.matrix
        for i in range(d2):
            for j in range(d1):
                row = [_ZERO] * (d2 * d1)
                for t in range(d1):
                    e = m1.entries[t][j]
                    if e != 0:
                        row[i * d1 + t] += e
                for t in range(d2):
                    e = m2.entries[i][t]
                    if e != 0:
                        row[t * d1 + j] -= e
                if not vec_is_zero(tuple(row)):
                    rows.append(tuple(row))
    if rows:
        kern = kernel_basis(Matrix(len(rows), d2 * d1, tuple(rows)))
    else:
        kern = Subspace.full(d2 * d1)
    out = []
    for flat in kern.rows():
        out.append(Matrix(d2, d1, tuple(
            tuple(flat[i * d1 + j] for j in range(d1)) for i in range(d2)
        )))
    return out
