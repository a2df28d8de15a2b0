"""Exact computations with birational maps of the projective plane."""
__version__ = "0.1.0"
