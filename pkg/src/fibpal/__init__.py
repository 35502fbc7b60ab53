"""Exact palindrome queries on prefixes of the infinite Fibonacci word.

Closed-form, logarithmic-time answers for occurrence positions, per-position
and cumulative occurrence counts, and canonical palindrome coordinates, all
in exact integer arithmetic, with a palindromic-tree oracle for independent
verification at desk scale.
"""

from .chain import (
    ChainInterval,
    OccurrenceSpan,
    chain_interval,
    distinct_count,
    new_pal_at,
    pal_end_pos,
    pal_span,
    pal_start_pos,
    singular_end_pos,
    singular_start_pos,
)
from .counting import (
    CellSplit,
    block_prefix_total,
    block_sum,
    convolution_identity_holds,
    end_count,
    end_count_block,
    end_count_near_fib,
    expand_cell,
    expand_leaves,
    fib_prefix_total,
    occurrence_count,
    occurrence_count_trace,
    reduce_cell,
    split_cell,
    tail_sum,
)
from .cylinder import (
    PalCoord,
    coord_from_pal,
    cylinder_table,
    cylinder_tag,
    pal_from_coord,
    palindromic_conjugates,
    pals_of_length,
    prefix_palindrome_lengths,
)
from .errors import DomainError, NotAFactorError, ResourceError
from .fibword import (
    check_floor_identities,
    count_a,
    count_b,
    fib,
    floor_inv_phi,
    floor_phi,
    letter_at,
    prefix,
    prefix_array,
)
from .oracle import (
    Eertree,
    ReturnWordSeq,
    eertree_distinct,
    eertree_end_counts,
    eertree_total,
    kernel_correspondence,
    occurrences,
    return_words,
)
from .singular import KernelResult, is_factor, kernel, singular_word

__version__ = "0.1.0"

__all__ = [
    "CellSplit",
    "ChainInterval",
    "DomainError",
    "Eertree",
    "KernelResult",
    "NotAFactorError",
    "OccurrenceSpan",
    "PalCoord",
    "ResourceError",
    "ReturnWordSeq",
    "block_prefix_total",
    "block_sum",
    "chain_interval",
    "check_floor_identities",
    "convolution_identity_holds",
    "coord_from_pal",
    "count_a",
    "count_b",
    "cylinder_table",
    "cylinder_tag",
    "distinct_count",
    "eertree_distinct",
    "eertree_end_counts",
    "eertree_total",
    "end_count",
    "end_count_block",
    "end_count_near_fib",
    "expand_cell",
    "expand_leaves",
    "fib",
    "fib_prefix_total",
    "floor_inv_phi",
    "floor_phi",
    "is_factor",
    "kernel",
    "kernel_correspondence",
    "letter_at",
    "new_pal_at",
    "occurrence_count",
    "occurrence_count_trace",
    "occurrences",
    "pal_end_pos",
    "pal_from_coord",
    "pal_span",
    "pal_start_pos",
    "palindromic_conjugates",
    "pals_of_length",
    "prefix",
    "prefix_array",
    "prefix_palindrome_lengths",
    "reduce_cell",
    "return_words",
    "singular_end_pos",
    "singular_start_pos",
    "singular_word",
    "split_cell",
    "tail_sum",
    "__version__",
]
