"""Exact symbolic calculus for the Nica-Toeplitz algebra of the product
system over N^x with fibres C(T), and for its quotient Q_N."""

from .laurent import GaussianRational, LaurentPoly, Z, cond_exp, inflate, transfer
from .models import equal, is_zero_nt, is_zero_qn
from .word_algebra import Element, Monomial, mono_canon, mono_mul, mono_star

__all__ = [
    "Element", "GaussianRational", "LaurentPoly", "Monomial", "Z", "cond_exp", "equal",
    "inflate", "is_zero_nt", "is_zero_qn", "mono_canon", "mono_mul", "mono_star", "transfer",
]
