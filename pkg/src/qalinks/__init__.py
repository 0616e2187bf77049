"""Kauffman bracket, Jones polynomial and determinant of PD link diagrams,
with quasi-alternating certificate search and Jones-polynomial obstructions."""

from .diagram import Diagram, parse_pd, serialize, simplify, smooth
from .errors import CrossingLimitError, InvariantViolation, PDParseError
from .invariants import bracket_skein, bracket_statesum, determinant, jones
from .laurent import HalfLaurent, parse_poly, render
from .qa import SearchBudget, certify, verify_certificate

__all__ = [
    "Diagram", "parse_pd", "serialize", "simplify", "smooth",
    "CrossingLimitError", "InvariantViolation", "PDParseError",
    "bracket_skein", "bracket_statesum", "determinant", "jones",
    "HalfLaurent", "parse_poly", "render",
    "SearchBudget", "certify", "verify_certificate",
]
__version__ = "0.1.0"
