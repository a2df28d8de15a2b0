"""Baumslag-Solitar verdicts and embeddings of GL(2, Q)."""
from .bs import BSVerdict, bs_check, bs_witness, verify_bs_relation
from .gl2q import (
    GL2QEmbedding, GL2QReport, EmbeddingError, InjectivityCertificate, gl2q_build, gl2q_verify,
    gl2q_injectivity, rho_map, chi_value, parse_chi, sample_pairs, M_ROT, T1,
)

__all__ = [
    "BSVerdict", "bs_check", "bs_witness", "verify_bs_relation", "GL2QEmbedding", "GL2QReport",
    "EmbeddingError", "InjectivityCertificate", "gl2q_build", "gl2q_verify", "gl2q_injectivity",
    "rho_map", "chi_value", "parse_chi", "sample_pairs", "M_ROT", "T1",
]
