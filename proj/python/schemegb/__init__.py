"""Exact character tables, P-polynomiality and generators of association schemes."""

from ._core import (
    AttemptsExhausted,
    Error,
    NotExpressible,
    ParseError,
    RealNumber,
    Scheme,
    SchemeError,
    character_table,
    check_p_polynomial,
    express,
    find_generic_element,
    minimal_generating_sets,
    multiplicative_orbits,
)

__all__ = [
    "AttemptsExhausted",
    "Error",
    "NotExpressible",
    "ParseError",
    "RealNumber",
    "Scheme",
    "SchemeError",
    "character_table",
    "check_p_polynomial",
    "express",
    "find_generic_element",
    "minimal_generating_sets",
    "multiplicative_orbits",
]
