"""Elliptic maps of infinite order: kernels, conjugacy and normal forms."""
from .snf import smith_normal_form, check_snf, integer_kernel, solve_integer, det
from .diagonal import (
    DiagonalAuto, AlmostDiagonalAuto, KernelLattice, Conjugate, NotConjugate, Undecided,
    ContextMismatch, FiniteOrderError, kernel_lattice, monomial_conjugate, normalize_diagonal,
    diag_conjugacy, almost_diag_conjugacy, iterate_conjugacy_constraints, lattice_basis_2d,
)
from .qtorus import rational_torus, prime_exponents
from .centralizer import EllipticMap, InForm, NotInForm, centralizer_shape_check
from .triangular import reduce_triangular, parse_triangular, TriangularReduction, ShapeError, Conjugator

__all__ = [
    "smith_normal_form", "check_snf", "integer_kernel", "solve_integer", "det", "DiagonalAuto",
    "AlmostDiagonalAuto", "KernelLattice", "Conjugate", "NotConjugate", "Undecided",
    "ContextMismatch", "FiniteOrderError", "kernel_lattice", "monomial_conjugate",
    "normalize_diagonal", "diag_conjugacy", "almost_diag_conjugacy",
    "iterate_conjugacy_constraints", "lattice_basis_2d", "rational_torus", "prime_exponents",
    "EllipticMap", "InForm", "NotInForm", "centralizer_shape_check", "reduce_triangular",
    "parse_triangular", "TriangularReduction", "ShapeError", "Conjugator",
]
