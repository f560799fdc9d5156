"""Barred permutation patterns, avoider structure, and exact sequence transforms.

The package centres on the barred pattern ~2413~5: a permutation avoids it
when every occurrence of 312 (the unbarred letters, standardized) extends to
an occurrence of 24135.  Avoiders of ~2413~5 decompose into lists of end-max
avoiders, which are counted by Bell numbers, so their counting sequence is
the Invert transform of the Bell numbers; :func:`verify_invert_identity`
checks that identity three independent ways, exactly.
"""

from .patterns import (
    BARRED_2413,
    BARRED_24135,
    BarredPattern,
    avoids_barred,
    contains,
    extends,
    first_violation,
    format_pattern,
    format_permutation,
    is_permutation,
    occurrences,
    parse_pattern,
    parse_permutation,
    standardize,
)
from .decomposition import (
    Decomposition,
    InvalidBlockError,
    NotAnAvoiderError,
    compose,
    decompose,
    format_block_list,
    is_end_max_avoider,
    parse_block_list,
    to_list,
)
from .enumeration import (
    DEFAULT_BRUTE_CAP,
    DEFAULT_CONSTRUCT_CAP,
    CapExceededError,
    CountReport,
    UnsupportedMethodError,
    brute_force_avoiders,
    construct_avoiders,
    count_avoiders,
    counting_sequence,
    end_max_avoiders,
)
from .transforms import (
    IdentityReport,
    IdentityRow,
    SequenceOverflowError,
    bell_numbers,
    format_report,
    format_sequence,
    invert_inverse,
    invert_transform,
    parse_sequence,
    verify_invert_identity,
)

__all__ = [
    "BARRED_2413",
    "BARRED_24135",
    "BarredPattern",
    "CapExceededError",
    "CountReport",
    "Decomposition",
    "DEFAULT_BRUTE_CAP",
    "DEFAULT_CONSTRUCT_CAP",
    "IdentityReport",
    "IdentityRow",
    "InvalidBlockError",
    "NotAnAvoiderError",
    "SequenceOverflowError",
    "UnsupportedMethodError",
    "avoids_barred",
    "bell_numbers",
    "brute_force_avoiders",
    "compose",
    "construct_avoiders",
    "contains",
    "count_avoiders",
    "counting_sequence",
    "decompose",
    "end_max_avoiders",
    "extends",
    "first_violation",
    "format_block_list",
    "format_pattern",
    "format_permutation",
    "format_report",
    "format_sequence",
    "invert_inverse",
    "invert_transform",
    "is_end_max_avoider",
    "is_permutation",
    "occurrences",
    "parse_block_list",
    "parse_pattern",
    "parse_permutation",
    "parse_sequence",
    "standardize",
    "to_list",
    "verify_invert_identity",
]
