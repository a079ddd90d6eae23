"""Exact h-vector computations for artinian level algebras of type 2.

Forms and inverse-system modules cross the boundary as text in the
generator grammar: one form per line, terms like ``3/2*y1^2*y2 - y3^3``,
``#`` starts a comment.
"""

from levelalg._core import (
    GenericityFailure,
    a_range,
    annihilator_component,
    augmented_level_hvector,
    b_bound,
    binomial_expand,
    check_a_lower_bound,
    decide,
    diesel_check,
    diesel_params,
    entry_upper,
    enumerate_rrr2,
    expected_generic_hvector,
    first_difference,
    generic_power_sum,
    gorenstein_hvectors,
    gotzmann_check,
    hvector_of_module,
    iarrobino_bound,
    is_differentiable,
    is_gorenstein_hvector,
    is_o_sequence,
    is_si_sequence,
    koszul_betti,
    lemma34_bruteforce,
    lemma34_max,
    lex_growth_oracle,
    macaulay_upper,
    max_hvector,
    pencil_derivative_rank,
    realize_max,
    remark26_witness,
    reverse_window,
    screen_cor22,
    screen_thm23,
    socle_vector,
    third_difference,
    thm29_check,
    thm44_first_module,
    three_part_decomposition,
    two_part_decompositions,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
