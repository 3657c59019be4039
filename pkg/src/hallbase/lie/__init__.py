"""Exact polynomial arithmetic in q and certificates for the exceptional families."""

from .families import (
    FAMILIES,
    FamilyCase,
    FamilyReport,
    family_case,
    verify_all,
    verify_case,
    verify_family,
)
from .poly import IntPolynomial, RationalExpr
from .positivity import PositivityCertificate, recheck_certificate, verify_positive_for_all_q

__all__ = [
    "FAMILIES",
    "FamilyCase",
    "FamilyReport",
    "IntPolynomial",
    "PositivityCertificate",
    "RationalExpr",
    "family_case",
    "recheck_certificate",
    "verify_all",
    "verify_case",
    "verify_family",
    "verify_positive_for_all_q",
]
