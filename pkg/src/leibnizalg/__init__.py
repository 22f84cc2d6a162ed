"""Exact-arithmetic toolkit for finite-dimensional left Leibniz algebras
over the rationals: squares ideal, soluble radical, semisimple
complements of the radical, and certificates that such complements need
not be conjugate."""

from .exactlin import (
    LinearMap,
    Matrix,
    NotNilpotentError,
    Scalar,
    Subspace,
    Vector,
    exp_nilpotent,
    kernel_basis,
    rref,
    solve_affine,
    subspace_contains,
    subspace_intersection,
    subspace_sum,
)
from .algebra import (
    LeibnizAlgebra,
    LeibnizIdentityError,
    NotAnIdealError,
    NotASubalgebraError,
    NotLieError,
    StructureTable,
    ViolationReport,
    check_left_leibniz,
    is_ideal,
    is_left_ideal,
    is_lie,
    is_subalgebra,
    left_multiplication,
    product,
    quotient,
    restrict_to_subalgebra,
    subspace_product,
)
from .structure import (
    BilinearForm,
    DerivedSeries,
    derived_series,
    is_semisimple,
    is_soluble,
    killing_form,
    leibniz_kernel,
    soluble_radical,
)
from .levi import (
    LeviDecomposition,
    LeviWitnesses,
    ModuleAction,
    NoSolutionError,
    NotReducedError,
    leibniz_levi,
    lie_levi,
    module_complement,
    module_from_kernel,
    verify_levi,
)
from .constructions import (
    CATALOG,
    CounterexampleBundle,
    UnknownAlgebraError,
    adjoint_module,
    counterexample,
    diagonal_complement,
    equivariant_hom_basis,
    simple_algebra,
    split_extension_zero_right,
)
from .conjugacy import (
    DistinctnessError,
    InvarianceError,
    NonConjugacyCertificate,
    NotAComplementError,
    exp_inner_automorphism,
    inner_derivation,
    invariance_check,
    is_derivation,
    non_conjugacy_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "BilinearForm",
    "CATALOG",
    "CounterexampleBundle",
    "DerivedSeries",
    "DistinctnessError",
    "InvarianceError",
    "LeibnizAlgebra",
    "LeibnizIdentityError",
    "LeviDecomposition",
    "LeviWitnesses",
    "LinearMap",
    "Matrix",
    "ModuleAction",
    "NonConjugacyCertificate",
    "NoSolutionError",
    "NotAComplementError",
    "NotAnIdealError",
    "NotASubalgebraError",
    "NotLieError",
    "NotNilpotentError",
    "NotReducedError",
    "Scalar",
    "StructureTable",
    "Subspace",
    "UnknownAlgebraError",
    "Vector",
    "ViolationReport",
    "adjoint_module",
    "check_left_leibniz",
    "counterexample",
    "derived_series",
    "diagonal_complement",
    "equivariant_hom_basis",
    "exp_inner_automorphism",
    "exp_nilpotent",
    "inner_derivation",
    "invariance_check",
    "is_derivation",
    "is_ideal",
    "is_left_ideal",
    "is_lie",
    "is_semisimple",
    "is_soluble",
    "is_subalgebra",
    "kernel_basis",
    "killing_form",
    "left_multiplication",
    "leibniz_kernel",
    "leibniz_levi",
    "lie_levi",
    "module_complement",
    "module_from_kernel",
    "non_conjugacy_certificate",
    "product",
    "quotient",
    "restrict_to_subalgebra",
    "rref",
    "simple_algebra",
    "soluble_radical",
    "solve_affine",
    "split_extension_zero_right",
    "subspace_contains",
    "subspace_intersection",
    "subspace_product",
    "subspace_sum",
    "verify_levi",
]
