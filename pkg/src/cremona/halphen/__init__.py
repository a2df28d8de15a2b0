"""Picard lattice computations for Halphen twists."""
from .lattice import (
    PicClass, HalphenData, LatticeMap, LatticeError, inner, parse_class, halphen_translation,
    translate, kappa, degree_growth_closed_form, degree_growth_matrix, parity_check,
    is_multiple_of_K, permutation_map, permute_class, example_9_4_pipeline, Example94Result,
    ALPHA_HAT, gram,
)

__all__ = [
    "PicClass", "HalphenData", "LatticeMap", "LatticeError", "inner", "parse_class",
    "halphen_translation", "translate", "kappa", "degree_growth_closed_form",
    "degree_growth_matrix", "parity_check", "is_multiple_of_K", "permutation_map",
    "permute_class", "example_9_4_pipeline", "Example94Result", "ALPHA_HAT", "gram",
]
