"""Exact scalars, torus constants and homogeneous polynomials."""
from .fields import QQ, NumberField, NFElement, FieldMismatchError, scalar_arith, field_of
from .torus import TorusGroup, TorusConstant, torus_op, parse_torus_header, parse_torus_constant
from .hompoly import HomPoly, poly_arith, chart_at
from .gcd import gcd3, gcd2_python, bivariate_gcd
from .parsing import parse_poly, parse_hompoly, parse_ratfunc, parse_field, ParseError

__all__ = [
    "QQ", "NumberField", "NFElement", "FieldMismatchError", "scalar_arith", "field_of",
    "TorusGroup", "TorusConstant", "torus_op", "parse_torus_header", "parse_torus_constant",
    "HomPoly", "poly_arith", "chart_at", "gcd3", "gcd2_python", "bivariate_gcd",
    "parse_poly", "parse_hompoly", "parse_ratfunc", "parse_field", "ParseError",
]
