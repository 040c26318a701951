"""Partitions, orders on them, and closed-form box products."""
from .factors import (eval_factor_a_boxes, eval_factor_a_rows, eval_factor_b_boxes,
                      eval_factor_b_rows, evaluation_closed_form, generalized_binomial,
                      hook_even, hook_even_prime, pieri_coefficient, pieri_coefficient_boxes,
                      rising)
from .partitions import (Partition, arm, arm_colength, boxes, bracket, bracket_inverse,
                         bracket_one, componentwise_le, conjugate, contained, dominated,
                         even_part, even_weight, in_phi_plus, in_psi0, in_psi0_by_generators,
                         in_psi1, in_psi1_by_generators, is_partition, leg, leg_colength, n_even,
                         n_odd, node, odd_part, odd_weight, parse_parts, partition,
                         partitions_of_odd_weight, partitions_upto, preceq, preceq_hom, rho,
                         rho_alpha, sqsubseteq)

__all__ = [
    "Partition", "arm", "arm_colength", "boxes", "bracket", "bracket_inverse", "bracket_one",
    "componentwise_le", "conjugate", "contained", "dominated", "eval_factor_a_boxes",
    "eval_factor_a_rows", "eval_factor_b_boxes", "eval_factor_b_rows", "evaluation_closed_form",
    "even_part", "even_weight", "generalized_binomial", "hook_even", "hook_even_prime",
    "in_phi_plus", "in_psi0", "in_psi0_by_generators", "in_psi1", "in_psi1_by_generators",
    "is_partition", "leg", "leg_colength", "n_even", "n_odd", "node", "odd_part", "odd_weight",
    "parse_parts", "partition", "partitions_of_odd_weight", "partitions_upto",
    "pieri_coefficient", "pieri_coefficient_boxes", "preceq", "preceq_hom", "rho", "rho_alpha",
    "rising", "sqsubseteq",
]
