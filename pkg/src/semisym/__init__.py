"""Semisymmetric interpolation polynomials over Q(r).

Subpackages: ``exactalg`` (exact arithmetic), ``combinatorics`` (partitions
and orders), ``interpolation`` (R_lam and bases), ``diffops`` (the operators
X(t), Y(t)) and ``identities`` (closed forms and verification suites).
"""
from .exactalg import MultiPoly, ParamScalar, scalar
from .interpolation import build_R, build_r

__all__ = ["MultiPoly", "ParamScalar", "build_R", "build_r", "scalar"]
__version__ = "0.1.0"
