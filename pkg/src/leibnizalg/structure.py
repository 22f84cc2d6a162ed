"""Structural invariants: squares ideal, derived series, Killing form,
soluble radical, semisimplicity."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    LeibnizAlgebra,
    NotASubalgebraError,
    NotLieError,
    is_lie,
    is_subalgebra,
    left_multiplication,
    quotient,
    subspace_product,
)
from .exactlin import Matrix, Subspace, kernel_basis, rref, subspace_sum, vec_add

_ZERO = Fraction(0)


@dataclass(frozen=True)
class DerivedSeries:
    """terms[0] = U, terms[i+1] = terms[i].terms[i], truncated at stabilization."""

    terms: tuple[Subspace, ...]

    @property
    def reaches_zero(self) -> bool:
        return self.terms[-1].is_zero()

    def dims(self) -> tuple[int, ...]:
        return tuple(t.dim for t in self.terms)


@dataclass(frozen=True)
class BilinearForm:
    dim: int
    gram: Matrix

    def evaluate(self, x, y):
        return sum(
            (a * b for a, b in zip(self.gram.apply(y), x, strict=True)), _ZERO
        )

    def is_nondegenerate(self) -> bool:
        _, _, rank = rref(self.gram)
        return rank == self.dim


def leibniz_kernel(alg: LeibnizAlgebra) -> Subspace:
    """Canonical span of all squares x.x.

    Computed by polarization as span{b_i.b_j + b_j.b_i : i <= j}, which
    equals the span of squares in characteristic zero.
    """
    rows = []
    c = alg.table.c
    for i in range(alg.dim):
        for j in range(i, alg.dim):
            rows.append(vec_add(c[i][j], c[j][i]))
    return Subspace(alg.dim, rows)


def derived_series(alg: LeibnizAlgebra, u: Subspace) -> DerivedSeries:
    """Successive self-products of a subalgebra until they stabilize."""
    if not is_subalgebra(alg, u):
        raise NotASubalgebraError("derived series of a non-subalgebra")
    terms = [u]
    while True:
        nxt = subspace_product(alg, terms[-1], terms[-1])
        if nxt.is_zero():
            if not terms[-1].is_zero():
                terms.append(nxt)
            break
        if nxt == terms[-1]:
            terms.append(nxt)
            break
        terms.append(nxt)
    return DerivedSeries(tuple(terms))


def is_soluble(alg: LeibnizAlgebra, u: Subspace) -> bool:
    return derived_series(alg, u).reaches_zero


def killing_form(alg: LeibnizAlgebra) -> BilinearForm:
    """gram[i][j] = trace(ad b_i o ad b_j); defined for Lie algebras only."""
    if not is_lie(alg):
        raise NotLieError("Killing form of a non-Lie algebra")
    n = alg.dim
    ads = [left_multiplication(alg, alg.basis_vector(i)).matrix for i in range(n)]
    gram = []
    for i in range(n):
        row = []
        for j in range(n):
            a, b = ads[i], ads[j]
            t = _ZERO
            for r in range(n):
                arow = a.entries[r]
                for s, e in enumerate(arow):
                    if e != 0:
                        f = b.entries[s][r]
                        if f != 0:
                            t += e * f
            row.append(t)
        gram.append(tuple(row))
    return BilinearForm(n, Matrix(n, n, tuple(gram)))


def _lie_radical(alg: LeibnizAlgebra) -> Subspace:
    """Radical of a Lie algebra: Killing-orthogonal complement of the
    derived subalgebra (the characteristic-zero criterion)."""
    derived = subspace_product(alg, Subspace.full(alg.dim), Subspace.full(alg.dim))
    if derived.is_zero():
        return Subspace.full(alg.dim)
    gram = killing_form(alg).gram
    constraints = Matrix(derived.dim, alg.dim, tuple(
        gram.apply(row) for row in derived.rows()
    ))
    return kernel_basis(constraints)


def soluble_radical(alg: LeibnizAlgebra) -> Subspace:
    """Largest soluble ideal.

    Reduce modulo the squares ideal (a soluble ideal contained in every
    candidate), take the Lie quotient's radical by the Killing criterion,
    and pull back along the section.
    """
    kern = leibniz_kernel(alg)
    if kern.is_full():
        return kern
    qalg, _, section = quotient(alg, kern)
    rad_q = _lie_radical(qalg)
    lifted = [section.apply(row) for row in rad_q.rows()]
    return subspace_sum(Subspace(alg.dim, lifted), kern)


def is_semisimple(alg: LeibnizAlgebra) -> bool:
    """Lie with nondegenerate Killing form (equivalently, zero radical)."""
    return is_lie(alg) and killing_form(alg).is_nondegenerate()
