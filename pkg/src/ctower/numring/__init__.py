"""Rings of integers presented by an integral basis."""

from .arithmetic import (
    mult_matrix,
    norm,
    nr_add,
    nr_divides,
    nr_is_prime,
    nr_is_unit,
    nr_mul,
    nr_sub,
    quotient_reps,
    quotient_table,
    radius_bound,
    reduce,
)
from .presentation import (
    AlgInt,
    NumberRingPresentation,
    list_bundled,
    load_bundled,
    load_presentation,
    load_presentation_file,
)

__all__ = [
    "AlgInt",
    "NumberRingPresentation",
    "list_bundled",
    "load_bundled",
    "load_presentation",
    "load_presentation_file",
    "mult_matrix",
    "norm",
    "nr_add",
    "nr_divides",
    "nr_is_prime",
    "nr_is_unit",
    "nr_mul",
    "nr_sub",
    "quotient_reps",
    "quotient_table",
    "radius_bound",
    "reduce",
]
