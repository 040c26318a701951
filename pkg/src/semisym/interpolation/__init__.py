"""Interpolation polynomials R_lam and their companions."""
from .construct import build_R, build_r, clear_cache, column_factor, interpolate
from .elementary import (e_basis_element, elementary_semisym, elementary_symmetric,
                         generator_values, semisym_generator, shifted_elementary)

__all__ = [
    "build_R", "build_r", "clear_cache", "column_factor", "e_basis_element",
    "elementary_semisym", "elementary_symmetric", "generator_values", "interpolate",
    "semisym_generator", "shifted_elementary",
]
