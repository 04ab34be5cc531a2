"""Reduced Groebner bases, standard monomials and separators of finite sets
of points over GF(p)."""

from .bm import bm_gb
from .core import GBResult, PointSet, ess_gb
from .estimator import VanishingIdeal
from .exceptions import (
    DuplicatePointError,
    EssGBError,
    GenerationError,
    NotPrimeError,
    ParseError,
    RankDeficientError,
)
from .field import PrimeField
from .monomials import GREVLEX, LEX, Monomial, Polynomial, TermOrder, format_polynomial, parse_polynomial
from .verify import VerificationReport, check_reduced_gb, check_separators, cross_check, verify_result

__version__ = "0.1.0"

__all__ = [
    "GBResult",
    "GREVLEX",
    "LEX",
    "Monomial",
    "PointSet",
    "Polynomial",
    "PrimeField",
    "TermOrder",
    "VanishingIdeal",
    "VerificationReport",
    "bm_gb",
    "check_reduced_gb",
    "check_separators",
    "cross_check",
    "ess_gb",
    "format_polynomial",
    "parse_polynomial",
    "verify_result",
    "DuplicatePointError",
    "EssGBError",
    "GenerationError",
    "NotPrimeError",
    "ParseError",
    "RankDeficientError",
]
