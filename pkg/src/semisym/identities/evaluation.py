"""Values of R_lam at the points -(rho + alpha) and of its top component at (1, ..., 1)."""
from __future__ import annotations

from typing import Sequence

from ..combinatorics import (bracket_one, eval_factor_a_boxes, eval_factor_a_rows,
                             eval_factor_b_boxes, eval_factor_b_rows, evaluation_closed_form,
                             partition, rho_alpha)
from ..exactalg import ParamScalar
from ..interpolation import build_R
from ..interpolation.basis import build_Rbar


def special_value(lam: Sequence[int], n: int, alpha) -> ParamScalar:
    """Closed form for R_lam(-rho - alpha)."""
    return evaluation_closed_form(partition(lam, n), alpha)


def special_value_direct(lam: Sequence[int], n: int, alpha) -> ParamScalar:
    point = [-x for x in rho_alpha(n, alpha)]
    return build_R(lam, n).evaluate(point)


def factor_forms_agree(lam: Sequence[int], n: int, alpha) -> bool:
    """Row-pair and box forms of both evaluation factors coincide."""
    lam = partition(lam, n)
    return (eval_factor_a_rows(lam, alpha) == eval_factor_a_boxes(lam, alpha)
            and eval_factor_b_rows(lam) == eval_factor_b_boxes(lam))


def homogeneous_evaluation(lam: Sequence[int], n: int) -> ParamScalar:
    """Predicted value of the top component of R_lam at (1, ..., 1)."""
    lam = partition(lam, n)
    if n % 2 == 1 or bracket_one(lam) == 0:
        return eval_factor_b_rows(lam)
    return ParamScalar(0)


def homogeneous_evaluation_direct(lam: Sequence[int], n: int) -> ParamScalar:
    return build_Rbar(lam, n).evaluate([1] * n)
