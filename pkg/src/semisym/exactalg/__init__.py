"""Exact arithmetic over Q(r): scalars, univariate and multivariate polynomials."""
from .linalg import SingularSystem, determinant, matmul, solve
from .multipoly import InexactDivision, MultiPoly
from .rpoly import RPoly
from .scalar import NonGenericParameter, ONE_S, R_S, ZERO_S, ParamScalar, scalar

__all__ = [
    "InexactDivision", "MultiPoly", "NonGenericParameter", "ONE_S", "ParamScalar", "R_S",
    "RPoly", "SingularSystem", "ZERO_S", "determinant", "matmul", "scalar", "solve",
    "variables",
]


def variables(n: int) -> list[MultiPoly]:
    """The coordinate functions z_1..z_n."""
    return [MultiPoly.variable(n, i) for i in range(1, n + 1)]
