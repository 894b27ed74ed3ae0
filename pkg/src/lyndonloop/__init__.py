"""Standard Lyndon loop words for simple Lie types under weighted and generalized orders."""
from .leclerc import Engine, compute_word, engine_for
from .oracle import WindowExhausted, bracket_nonzero, enumerate_lyndon, oracle_word
from .order import GeneralizedOrder, UnsupportedOperation, WeightedOrder, parse_order
from .rootsys import ConfigurationError, RootSystem, build
from .words import (
    canonical_factorization,
    cmp_words,
    costandard_factorization,
    is_exponent_tight,
    is_lyndon,
    parse_word,
    render,
    upsilon,
)

__all__ = [
    "ConfigurationError",
    "Engine",
    "GeneralizedOrder",
    "RootSystem",
    "UnsupportedOperation",
    "WeightedOrder",
    "WindowExhausted",
    "bracket_nonzero",
    "build",
    "canonical_factorization",
    "cmp_words",
    "compute_word",
    "costandard_factorization",
    "engine_for",
    "enumerate_lyndon",
    "is_exponent_tight",
    "is_lyndon",
    "oracle_word",
    "parse_order",
    "parse_word",
    "render",
    "upsilon",
]
