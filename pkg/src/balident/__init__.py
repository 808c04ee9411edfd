"""Exact Bernoulli, Fibonacci/Lucas and balancing sequences, and an identity verifier."""

from .exact import ALPHA, BETA, I, Q5, QI, SQRT5, QuadraticField, QuadraticNumber, Rational
from .identities import REGISTRY, VerificationResult, series_check, verify, verify_grid
from .polyring import Poly, SqrtExtElem
from .sequences import SequenceCache, binomial, falling_factorial

__version__ = "0.1.0"

__all__ = [
    "ALPHA",
    "BETA",
    "I",
    "Q5",
    "QI",
    "SQRT5",
    "QuadraticField",
    "QuadraticNumber",
    "Rational",
    "REGISTRY",
    "VerificationResult",
    "series_check",
    "verify",
    "verify_grid",
    "Poly",
    "SqrtExtElem",
    "SequenceCache",
    "binomial",
    "falling_factorial",
]
