"""Repair plans for brain-swap scrambles.

Plans are products of cycles with the leftmost factor applied last.
"""

from ._core import (
    Cycle,
    FactorSequence,
    InvalidArgument,
    ParityError,
    ParseError,
    Permutation,
    SizeError,
    VerifyReport,
    compose,
    format_cycles,
    invert_permutation_3cycles,
    invert_permutation_as_transpositions,
    invert_permutation_pcycles,
    parse_cycles,
    search_min_sequence,
    simulate,
    solve,
    verify,
)

__all__ = [
    "Cycle",
    "FactorSequence",
    "InvalidArgument",
    "ParityError",
    "ParseError",
    "Permutation",
    "SizeError",
    "VerifyReport",
    "compose",
    "format_cycles",
    "invert_permutation_3cycles",
    "invert_permutation_as_transpositions",
    "invert_permutation_pcycles",
    "parse_cycles",
    "search_min_sequence",
    "simulate",
    "solve",
    "verify",
]
