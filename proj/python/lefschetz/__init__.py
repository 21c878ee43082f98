"""Weak Lefschetz property, Togliatti systems and their toric geometry."""

from ._lefschetz import (
    ConsistencyError,
    DegenerateHullError,
    Ideal,
    NotArtinianError,
    ParseError,
    PreconditionError,
    apolar_system,
    certify,
    classify,
    fails_in_degree_dminus1,
    h_vector,
    has_wlp,
    is_artinian,
    is_togliatti,
    named_examples,
    osculating_dimension,
    perkinson_quadric,
    polytope,
    rank,
    splitting_type,
)

__all__ = [
    "ConsistencyError",
    "DegenerateHullError",
    "Ideal",
    "NotArtinianError",
    "ParseError",
    "PreconditionError",
    "apolar_system",
    "certify",
    "classify",
    "fails_in_degree_dminus1",
    "h_vector",
    "has_wlp",
    "is_artinian",
    "is_togliatti",
    "named_examples",
    "osculating_dimension",
    "perkinson_quadric",
    "polytope",
    "rank",
    "splitting_type",
]
