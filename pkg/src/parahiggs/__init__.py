"""Exact-arithmetic toolkit for symplectic/orthogonal parabolic Higgs fields.

Everything is computed over Q with no floating point: characteristic
polynomials and Pfaffians of matrices over rational function fields,
spectral plane curves, and the integer dimension/genus identity chain
relating the invariant-section space, the moduli dimension and the Prym
dimension for Sp(2m), SO(2m) and SO(2m+1).
"""

from .poly import Q, RationalFunction, UniPoly

__all__ = ["Q", "RationalFunction", "UniPoly"]
__version__ = "0.1.0"
