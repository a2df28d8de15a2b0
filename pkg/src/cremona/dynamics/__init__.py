"""Degree growth, base-points and persistence."""
from .growth import (
    GrowthReport, LambdaEstimate, classify_growth, lambda_estimate, theil_sen_slope,
    root_bracket, least_squares, CLASSES,
)
from .basepoints import BasePoint, BaseLocusError, proper_base_points, multiplicity_at, is_base_point
from .jonquieres import (
    MultiplicityProfile, MuReport, NonIntegralMu, validate_profile, jonquieres_bp_count,
    jonquieres_profile, preserves_pencil, mu_estimate, mu_from_degrees,
)
from .persistence import PersistenceReport, persistence_scan, CLASS_NAMES

__all__ = [
    "GrowthReport", "LambdaEstimate", "classify_growth", "lambda_estimate", "theil_sen_slope",
    "root_bracket", "least_squares", "CLASSES", "BasePoint", "BaseLocusError",
    "proper_base_points", "multiplicity_at", "is_base_point", "MultiplicityProfile", "MuReport",
    "NonIntegralMu", "validate_profile", "jonquieres_bp_count", "jonquieres_profile",
    "preserves_pencil", "mu_estimate", "mu_from_degrees", "PersistenceReport",
    "persistence_scan", "CLASS_NAMES",
]
