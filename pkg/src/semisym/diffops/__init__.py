"""Difference operators X(t), Y(t) and their top-degree parts."""
from .operators import (KINDS, ExpansionTooLarge, OperatorExpansion, apply, apply_top, component,
                        components, cutoff_violations, eigenvalue, expansion, phi)

__all__ = ["ExpansionTooLarge", "KINDS", "OperatorExpansion", "apply", "apply_top", "component",
           "components", "cutoff_violations", "eigenvalue", "expansion", "phi"]
