"""Shared fixtures: catalog algebras, bundles, a zoo of small valid
algebras, and builders for Lie semidirect sums used as Levi test inputs."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from leibnizalg import (
    LeibnizAlgebra,
    Matrix,
    ModuleAction,
    StructureTable,
    counterexample,
    simple_algebra,
    solve_affine,
    split_extension_zero_right,
)
from leibnizalg.exactlin import LinearMap

F = Fraction


def table_from_map(dim, products):
    return StructureTable.from_map(dim, products)


def algebra(dim, products, labels=None):
    return LeibnizAlgebra(table_from_map(dim, products), labels=labels)


@pytest.fixture(scope="session")
def sl2():
    return simple_algebra("sl2")


@pytest.fixture(scope="session")
def so3():
    return simple_algebra("so3")


@pytest.fixture(scope="session")
def sl3():
    return simple_algebra("sl3")


@pytest.fixture(scope="session")
def bundle_sl2():
    return counterexample("sl2")


@pytest.fixture(scope="session")
def bundle_so3():
    return counterexample("so3")


@pytest.fixture(scope="session")
def bundle_sl3():
    return counterexample("sl3")


@pytest.fixture(scope="session")
def square_algebra():
    """Two dimensions, a.a = b, everything else zero."""
    return algebra(2, {(0, 0): {1: 1}}, labels=("a", "b"))


@pytest.fixture(scope="session")
def abelian2():
    return algebra(2, {})


@pytest.fixture(scope="session")
def nonabelian2():
    """[x,y] = y, the smallest nonabelian Lie algebra."""
    return algebra(2, {(0, 1): {1: 1}, (1, 0): {1: -1}}, labels=("x", "y"))


@pytest.fixture(scope="session")
def heisenberg():
    return algebra(3, {(0, 1): {2: 1}, (1, 0): {2: -1}}, labels=("x", "y", "z"))


@pytest.fixture(scope="session")
def gl2_style(sl2):
    """sl2 plus a one-dimensional center."""
    products = {}
    for i in range(3):
        for j in range(3):
            row = {k: e for k, e in enumerate(sl2.table.row(i, j)) if e != 0}
            if row:
                products[(i, j)] = row
    return algebra(4, products, labels=("e", "h", "f", "z"))


def sl2_irrep(m: int) -> ModuleAction:
    """The irreducible representation of dimension m+1, acting basis (e,h,f)."""
    n = m + 1
    e_rows = [[F(0)] * n for _ in range(n)]
    h_rows = [[F(0)] * n for _ in range(n)]
    f_rows = [[F(0)] * n for _ in range(n)]
    for j in range(n):
        h_rows[j][j] = F(m - 2 * j)
        if j > 0:
            e_rows[j - 1][j] = F(j * (m - j + 1))
        if j < m:
            f_rows[j + 1][j] = F(1)
    maps = tuple(
        LinearMap(n, Matrix.from_rows(rows))
        for rows in (e_rows, h_rows, f_rows)
    )
    return ModuleAction(3, n, maps)


def trivial_action(acting_dim: int, space_dim: int) -> ModuleAction:
    return ModuleAction(acting_dim, space_dim,
                        tuple(LinearMap.zero(space_dim) for _ in range(acting_dim)))


def direct_sum_actions(a: ModuleAction, b: ModuleAction) -> ModuleAction:
    assert a.acting_dim == b.acting_dim
    n = a.space_dim + b.space_dim
    maps = []
    for ma, mb in zip(a.rho, b.rho):
        rows = []
        for i in range(a.space_dim):
            rows.append(tuple(ma.matrix.entries[i]) + (F(0),) * b.space_dim)
        for i in range(b.space_dim):
            rows.append((F(0),) * a.space_dim + tuple(mb.matrix.entries[i]))
        maps.append(LinearMap(n, Matrix.from_rows(rows)))
    return ModuleAction(a.acting_dim, n, tuple(maps))


def matrix_inverse(m: Matrix) -> Matrix:
    cols = []
    for j in range(m.rows):
        rhs = [F(1) if i == j else F(0) for i in range(m.rows)]
        solved = solve_affine(m, rhs)
        assert solved is not None and solved[1].is_zero()
        cols.append(solved[0])
    return Matrix.from_rows([
        [cols[j][i] for j in range(m.rows)] for i in range(m.rows)
    ])


def random_invertible(rng: random.Random, n: int) -> Matrix:
    from leibnizalg import rref
    while True:
        m = Matrix.from_rows([
            [F(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)
        ])
        if rref(m)[2] == n:
            return m


def conjugate_action(act: ModuleAction, g: Matrix) -> ModuleAction:
    g_inv = matrix_inverse(g)
    maps = tuple(
        LinearMap(act.space_dim, (g @ m.matrix) @ g_inv) for m in act.rho
    )
    return ModuleAction(act.acting_dim, act.space_dim, maps)


def lie_semidirect(salg: LeibnizAlgebra, action: ModuleAction) -> LeibnizAlgebra:
    """Lie semidirect sum: [(s,k),(t,m)] = ([s,t], s.m - t.k)."""
    sd, md = salg.dim, action.space_dim
    n = sd + md
    grid = [[[F(0)] * n for _ in range(n)] for _ in range(n)]
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
                    grid[sd + j][i][sd + k] = -e
    return LeibnizAlgebra(StructureTable.from_rows(grid))


@pytest.fixture(scope="session")
def mixed_radical_algebra(sl2):
    """sl2 acting on a copy of itself plus a central line z, with an extra
    generator t whose square is z.  The pulled-back subalgebra in the
    splitting pipeline then has a squares ideal strictly smaller than its
    radical, exercising the explicit-ideal path."""
    products = {}
    for i in range(3):
        for j in range(3):
            row = {k: e for k, e in enumerate(sl2.table.row(i, j)) if e != 0}
            if row:
                products[(i, j)] = row
            arow = {3 + k: e for k, e in enumerate(sl2.table.row(i, j)) if e != 0}
            if arow:
                products[(i, 3 + j)] = arow
    products[(7, 7)] = {6: 1}
    return algebra(8, products,
                   labels=("e", "h", "f", "e'", "h'", "f'", "z", "t"))


@pytest.fixture(scope="session")
def zoo(sl2, so3, square_algebra, abelian2, nonabelian2, heisenberg, gl2_style,
        bundle_sl2, bundle_so3, mixed_radical_algebra):
    """Small valid algebras covering soluble, semisimple and mixed cases."""
    extension = split_extension_zero_right(sl2, sl2_irrep(1))
    semidirect = lie_semidirect(sl2, sl2_irrep(2))
    return [
        ("abelian2", abelian2),
        ("square", square_algebra),
        ("nonabelian2", nonabelian2),
        ("heisenberg", heisenberg),
        ("sl2", sl2),
        ("so3", so3),
        ("gl2_style", gl2_style),
        ("bundle_sl2", bundle_sl2.L),
        ("bundle_so3", bundle_so3.L),
        ("ext_sl2_irrep2", extension),
        ("semidirect_sl2_adjointish", semidirect),
        ("mixed_radical", mixed_radical_algebra),
    ]
