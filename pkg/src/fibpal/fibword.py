"""Exact arithmetic on the infinite Fibonacci word.

The infinite word is the fixed point, starting from ``a``, of the morphism
a -> ab, b -> a.  Positions are 1-based and unbounded, so everything here is
integer-exact: golden-ratio floors are computed with ``math.isqrt`` on
arbitrary-precision integers, and no float ever reaches a result.

Conventions used throughout the package:

* ``fib(m)`` is the length of the m-th morphism iterate, with
  ``fib(-1) == fib(0) == 1`` and ``fib(m+1) == fib(m) + fib(m-1)``.
* ``floor_phi(p)`` is the floor of ``p * (sqrt(5)-1)/2``; it equals the number
  of letters ``a`` in the prefix of length ``p - 1``.
* The prefix of length 0 is the empty word.
"""

from __future__ import annotations

import math
import os
import threading
from bisect import bisect_right

import numpy as np

from .errors import DomainError, ResourceError

LETTER_A = "a"
LETTER_B = "b"

DEFAULT_MATERIALIZE_CAP = 10**8

# Fibonacci numbers, index shifted by one: _fibs[i] holds fib(i - 1).
_fibs = [1, 1]
_fibs_lock = threading.Lock()


def materialize_cap() -> int:
    """Maximum number of letters a single call may materialize.

    Overridden with the ``FIBPAL_MAX_MATERIALIZE`` environment variable.
    """
    raw = os.environ.get("FIBPAL_MAX_MATERIALIZE")
    if raw is None:
        return DEFAULT_MATERIALIZE_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ResourceError(f"FIBPAL_MAX_MATERIALIZE is not an integer: {raw!r}") from exc
    if cap < 1:
        raise ResourceError(f"FIBPAL_MAX_MATERIALIZE must be positive, got {cap}")
    return cap


def check_cap(n: int, what: str = "word") -> None:
    """Raise ResourceError if materializing ``n`` letters exceeds the cap."""
    cap = materialize_cap()
    if n > cap:
        raise ResourceError(f"{what} of length {n} exceeds materialization cap {cap}")


def fib(m: int) -> int:
    """The m-th Fibonacci number with fib(-1) = fib(0) = 1.

    Memoized; exact for arbitrarily large m.  Growth of the shared table is
    serialized, reads of already-cached entries are lock-free.
    """
    if m < -1:
        raise DomainError(f"fib index must be >= -1, got {m}")
    idx = m + 1
    if idx >= len(_fibs):
        with _fibs_lock:
            while idx >= len(_fibs):
                _fibs.append(_fibs[-1] + _fibs[-2])
    return _fibs[idx]


def fib_floor_index(x: int) -> int:
    """Largest m with fib(m) <= x, for x >= 1.

    Because fib(-1) == fib(0) == 1, the *largest* such m is returned
    (so fib_floor_index(1) == 0).
    """
    if x < 1:
        raise DomainError(f"fib_floor_index needs x >= 1, got {x}")
    while _fibs[-1] <= x:
        fib(len(_fibs))  # extend the table past x
    return bisect_right(_fibs, x) - 2


def floor_phi(p: int) -> int:
    """Exact floor(phi * p) where phi = (sqrt(5) - 1) / 2.

    Computed as (isqrt(5 p^2) - p) // 2.  sqrt(5) * p is irrational for
    p >= 1, so the floor is recovered exactly from the integer square root;
    no floating point is involved.  Equals the number of ``a`` letters in the
    prefix of length p - 1.
    """
    if p < 0:
        raise DomainError(f"floor_phi needs p >= 0, got {p}")
    return (math.isqrt(5 * p * p) - p) // 2


def floor_inv_phi(p: int) -> int:
    """Exact floor(p / phi) = p + floor_phi(p), for p >= 1."""
    if p < 1:
        raise DomainError(f"floor_inv_phi needs p >= 1, got {p}")
    return p + floor_phi(p)


def count_a(n: int) -> int:
    """Number of ``a`` letters in the prefix of length n (exact)."""
    if n < 0:
        raise DomainError(f"count_a needs n >= 0, got {n}")
    return floor_phi(n + 1)


def count_b(n: int) -> int:
    """Number of ``b`` letters in the prefix of length n."""
    return n - count_a(n)


def letter_at(n: int) -> str:
    """The letter at 1-based position n, without materializing the prefix.

    Uses the Beatty-difference characterization: the letter is ``a`` exactly
    when floor_phi(n+1) - floor_phi(n) == 1, i.e. when position n contributes
    an ``a`` to the running letter count.
    """
    if n < 1:
        raise DomainError(f"positions are 1-based, got {n}")
    return LETTER_A if floor_phi(n + 1) - floor_phi(n) == 1 else LETTER_B


def prefix(n: int) -> str:
    """The prefix of length n as a string over {a, b}; prefix(0) is empty.

    Built by the concatenation recursion of the morphism iterates: once the
    buffer holds an iterate, the next iterate is the buffer followed by a
    copy of its own previous-iterate prefix.
    """
    if n < 0:
        raise DomainError(f"prefix length must be >= 0, got {n}")
    check_cap(n, "prefix")
    if n == 0:
        return ""
    if n == 1:
        return LETTER_A
    buf = bytearray(n)
    buf[0:2] = b"ab"
    cur, prev = 2, 1
    while cur < n:
        take = min(prev, n - cur)
        buf[cur:cur + take] = buf[:take]
        cur, prev = cur + take, cur
    return buf.decode("ascii")


def prefix_array(n: int) -> np.ndarray:
    """The prefix of length n as a uint8 array with a -> 0, b -> 1."""
    if n < 0:
        raise DomainError(f"prefix length must be >= 0, got {n}")
    check_cap(n, "prefix")
    out = np.empty(n, dtype=np.uint8)
    if n == 0:
        return out
    out[0] = 0
    if n == 1:
        return out
    out[1] = 1
    cur, prev = 2, 1
    while cur < n:
        take = min(prev, n - cur)
        out[cur:cur + take] = out[:take]
        cur, prev = cur + take, cur
    return out


def iterate(m: int) -> str:
    """The m-th morphism iterate, of length fib(m); iterate(-1) is ``b``."""
    if m < -1:
        raise DomainError(f"iterate index must be >= -1, got {m}")
    if m == -1:
        return LETTER_B
    return prefix(fib(m))


def check_floor_identities(p: int) -> dict[str, bool]:
    """Evaluate the four golden-floor identities at p >= 1.

    With q = floor_phi(p), the arguments p + q and 2p + q are the ending
    positions of the p-th ``a`` and the p-th ``b``; the identities say

    * at_a_end:      floor_phi(p + q)      == p - 1
    * at_b_end:      floor_phi(2p + q)     == p + q
    * after_a_end:   floor_phi(p + q + 1)  == p
    * after_b_end:   floor_phi(2p + q + 1) == p + q

    All four hold for every p >= 1; each is evaluated independently so a
    violation pinpoints the failing identity.
    """
    if p < 1:
        raise DomainError(f"check_floor_identities needs p >= 1, got {p}")
    q = floor_phi(p)
    return {
        "at_a_end": floor_phi(p + q) == p - 1,
        "at_b_end": floor_phi(2 * p + q) == p + q,
        "after_a_end": floor_phi(p + q + 1) == p,
        "after_b_end": floor_phi(2 * p + q + 1) == p + q,
    }
