"""Occurrence counting: per-position and cumulative palindrome counts.

``end_count(n)`` is the number of palindrome occurrences ending exactly at
position n; ``occurrence_count(n)`` is its running sum, the number of
palindrome occurrences (with repetition) inside the length-n prefix.

Blocks and recursion
--------------------
Written as blocks over the position ranges [fib(m)-1, fib(m+1)-2], the
end-count sequence obeys, for m >= 3,

    block(m) = (block(m-2) ++ block(m-1)) + 1   (pointwise, ++ = concat)

with base blocks [1] and [1, 2].  The two source blocks cover the contiguous
range [fib(m-2)-1, fib(m)-2], which sits exactly fib(m-1) positions below
block(m), so the per-index form is the single-branch

    end_count(n) = end_count(n - fib(m-1)) + 1

for every n in block m.  That gives O(log n) evaluation without building
blocks; agreement with the block form and with the palindromic-tree oracle
is enforced by the test suite.

The cumulative count comes from closed forms at block boundaries plus a
two-case tail recursion; all fractional-looking /5 coefficients combine to
integers, which is asserted on every division.

Interval splitting
------------------
The interval of p-th-occurrence ending positions for kernel index m >= 1
splits exactly into the intervals of its two child cells,

    cell(m, p) = cell(m-2, end_b(p) + 1)  |_|  cell(m-1, end_a(p) + 1)

where end_a/end_b are the ending positions of the p-th single letters, and
the m = 0 cell reduces to the singleton holding its maximum.  Expanding the
first cells down to kernel indices {-1, 0} tiles every interval.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .chain import ChainInterval, chain_interval, singular_end_pos
from .errors import DomainError
from .fibword import check_cap, fib, fib_floor_index

# end_count(1) .. end_count(6); the recursion bottoms out here.
_END_BASE = (1, 1, 2, 2, 2, 3)


def _div5(x: int) -> int:
    assert x % 5 == 0, f"coefficient sum {x} is not divisible by 5"
    return x // 5


def _locate_block(n: int) -> int:
    """Block index m with fib(m) - 1 <= n <= fib(m+1) - 2."""
    return fib_floor_index(n + 1)


def end_count(n: int) -> int:
    """Number of palindrome occurrences ending exactly at position n."""
    if n < 1:
        raise DomainError(f"positions are 1-based, got {n}")
    add = 0
    while n > 3:
        n -= fib(_locate_block(n) - 1)
        add += 1
    return _END_BASE[n - 1] + add


def end_count_block(m: int) -> list[int]:
    """The end counts over positions fib(m)-1 .. fib(m+1)-2, for m >= 3."""
    if m < 3:
        raise DomainError(f"blocks start at index 3, got {m}")
    check_cap(fib(m - 1), "end-count block")
    blocks = {1: [1], 2: [1, 2]}
    for k in range(3, m + 1):
        blocks[k] = [x + 1 for x in blocks[k - 2] + blocks[k - 1]]
        del blocks[k - 2]
    return blocks[m]


@lru_cache(maxsize=None)
def tail_sum(n: int) -> int:
    """Sum of end_count over the containing block's start through n.

    With m the block index of n, this is sum(end_count(i) for i in
    [fib(m)-1, n]), computed by the two-case recursion: below the block's
    halfway point 2*fib(m-1)-1 the whole range is a shifted copy of a lower
    block; past it a closed form for the copied head joins a shifted tail.
    """
    if n < 1:
        raise DomainError(f"positions are 1-based, got {n}")
    m = _locate_block(n)
    if n <= 6:
        return sum(_END_BASE[i - 1] for i in range(fib(m) - 1, n + 1))
    if n + 1 < 2 * fib(m - 1):
        return tail_sum(n - fib(m - 1)) + n - fib(m) + 2
    head = _div5((m - 11) * fib(m - 1) + (m + 1) * fib(m - 3))
    return tail_sum(n - fib(m - 1)) + n + head + 2


def block_prefix_total(m: int) -> int:
    """Closed form of occurrence_count(fib(m) - 2), the total before block m."""
    if m < 2:
        raise DomainError(f"defined for m >= 2, got {m}")
    return _div5((m - 3) * fib(m + 2) + (m - 1) * fib(m)) + 2


def fib_prefix_total(m: int) -> int:
    """Closed form of occurrence_count(fib(m)), for m >= 2."""
    if m < 2:
        raise DomainError(f"defined for m >= 2, got {m}")
    return _div5((m - 3) * fib(m + 2) + (m - 1) * fib(m)) + m + 3


def block_sum(m: int) -> int:
    """Closed form of the sum of block m's end counts, for m >= 1.

    Also satisfies block_sum(m) = block_sum(m-1) + block_sum(m-2) + fib(m-1).
    """
    if m < 1:
        raise DomainError(f"defined for m >= 1, got {m}")
    return _div5((m + 1) * fib(m + 1) + (m - 2) * fib(m - 1))


def end_count_near_fib(m: int) -> tuple[int, int, int]:
    """Closed forms of end_count at fib(m)-2, fib(m)-1 and fib(m), m >= 2.

    The last two sum to m + 1.
    """
    if m < 2:
        raise DomainError(f"defined for m >= 2, got {m}")
    return (m - 1, (m + 1) // 2, (m + 2) // 2)


def occurrence_count(n: int) -> int:
    """Number of palindrome occurrences (with repetition) in the length-n prefix.

    occurrence_count(0) is 0 by convention.  O(log^2 n): block location plus
    the tail recursion, all in exact integer arithmetic with no prefix
    materialization.
    """
    if n < 0:
        raise DomainError(f"prefix lengths are >= 0, got {n}")
    if n == 0:
        return 0
    if n <= 3:
        return (1, 2, 4)[n - 1]
    return block_prefix_total(_locate_block(n)) + tail_sum(n)


def occurrence_count_trace(n: int) -> tuple[int, dict]:
    """occurrence_count(n) plus the recursion path taken to compute it."""
    if n < 0:
        raise DomainError(f"prefix lengths are >= 0, got {n}")
    if n <= 3:
        return occurrence_count(n), {"base_table": True, "value": occurrence_count(n)}
    m = _locate_block(n)
    steps = []
    k = n
    while True:
        mk = _locate_block(k)
        if k <= 6:
            steps.append({"n": k, "m": mk, "case": "table", "value": tail_sum(k)})
            break
        case = "copy" if k + 1 < 2 * fib(mk - 1) else "head+tail"
        steps.append({"n": k, "m": mk, "case": case, "value": tail_sum(k)})
        k -= fib(mk - 1)
    trace = {
        "m": m,
        "before_block": block_prefix_total(m),
        "tail": tail_sum(n),
        "tail_steps": steps,
    }
    return block_prefix_total(m) + tail_sum(n), trace


def convolution_identity_holds(m: int) -> bool:
    """Check sum(fib(i) * fib(m-i-1), i = -1..m) against its closed form."""
    if m < 1:
        raise DomainError(f"defined for m >= 1, got {m}")
    lhs = sum(fib(i) * fib(m - i - 1) for i in range(-1, m + 1))
    return lhs == _div5((m + 2) * fib(m + 2) + (m + 4) * fib(m))


@dataclass(frozen=True)
class CellSplit:
    """One splitting step: a cell and the two child cells tiling it."""

    parent: ChainInterval
    left: ChainInterval
    right: ChainInterval


def split_cell(m: int, p: int) -> CellSplit:
    """Split cell (m, p), m >= 1, into its two children and verify the tiling."""
    if m < 1:
        raise DomainError(f"splitting needs kernel index >= 1, got {m} (index 0 reduces)")
    parent = chain_interval(m, p)
    left = chain_interval(m - 2, singular_end_pos(0, p) + 1)
    right = chain_interval(m - 1, singular_end_pos(-1, p) + 1)
    assert left.lo == parent.lo and right.hi == parent.hi and left.hi + 1 == right.lo, (
        f"cell split misaligned for (m={m}, p={p})"
    )
    return CellSplit(parent, left, right)


def reduce_cell(p: int) -> ChainInterval:
    """Reduce cell (0, p) to the singleton cell holding its maximum."""
    if p < 1:
        raise DomainError(f"occurrence index must be >= 1, got {p}")
    child = chain_interval(-1, singular_end_pos(-1, p) + 1)
    assert child.lo == chain_interval(0, p).hi, f"cell reduction misaligned for p={p}"
    return child


def expand_cell(m: int, p: int, depth: int | None = None, include_reduce: bool = False) -> dict:
    """Expand cell (m, p) into its splitting tree.

    Cells with kernel index >= 1 split; indices -1 and 0 are leaves (with the
    optional singleton reduction attached to index-0 leaves).  ``depth``
    limits the number of splitting levels; None expands to the leaves.
    """
    node: dict = {"m": m, "p": p}
    iv = chain_interval(m, p)
    node["lo"], node["hi"] = iv.lo, iv.hi
    if m >= 1 and (depth is None or depth > 0):
        nxt = None if depth is None else depth - 1
        step = split_cell(m, p)
        node["children"] = [
            expand_cell(step.left.m, step.left.p, nxt, include_reduce),
            expand_cell(step.right.m, step.right.p, nxt, include_reduce),
        ]
    elif m == 0 and include_reduce:
        child = reduce_cell(p)
        node["reduces_to"] = {"m": child.m, "p": child.p, "lo": child.lo, "hi": child.hi}
    return node


def expand_leaves(m: int, p: int) -> list[ChainInterval]:
    """Leaf cells (kernel index in {-1, 0}) tiling cell (m, p), in order."""
    if m <= 0:
        return [chain_interval(m, p)]
    step = split_cell(m, p)
    return expand_leaves(step.left.m, step.left.p) + expand_leaves(step.right.m, step.right.p)
