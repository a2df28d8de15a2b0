"""Birational maps of P^2: construction, composition, iteration, conjugation."""
from .maps import (
    RationalMapP2, AffineBirMap, CompositionError, BitCapExceeded, InverseError,
    make_map, compose, compose_python, equals, iterate, power, iterate_maps, iterate_degrees,
    conjugated_iterate_degrees, verify_inverse, conjugate, commutes, inverse_low_degree,
    affine, parse_map_text, DEFAULT_BIT_CAP,
)
from .fixtures import sigma, f_alpha_beta, delpezzo_h, jordan_psi, jordan_psi_inverse, generic_linear

__all__ = [
    "RationalMapP2", "AffineBirMap", "CompositionError", "BitCapExceeded", "InverseError",
    "make_map", "compose", "compose_python", "equals", "iterate", "power", "iterate_maps",
    "iterate_degrees", "conjugated_iterate_degrees", "verify_inverse", "conjugate", "commutes",
    "inverse_low_degree", "affine", "parse_map_text", "DEFAULT_BIT_CAP",
    "sigma", "f_alpha_beta", "delpezzo_h", "jordan_psi", "jordan_psi_inverse", "generic_linear",
]
