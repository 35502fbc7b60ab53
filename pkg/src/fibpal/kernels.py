"""Hot inner loops: palindromic-tree fill and bulk floor-identity sweeps.

Each kernel exists twice: a plain-Python/NumPy implementation and, when numba
is importable, an ``@njit``-compiled twin of the same source.  The active
variant is chosen once at import time from the ``FIBPAL_BACKEND`` environment
variable:

* unset or ``numba``  -- use the jitted kernels when numba is available
* ``python``          -- force the pure fallback

``FIBPAL_BACKEND=numba`` with numba missing raises at import.  The fallback
implementations are also exported under ``*_py`` names so benchmarks and
parity tests can time both paths regardless of the active backend.

These kernels work on machine-width integers only; callers guard the input
ranges and escalate to exact big-int arithmetic beyond them.
"""

from __future__ import annotations

import math
import os

import numpy as np


def _pick_backend():
    choice = os.environ.get("FIBPAL_BACKEND", "").strip().lower()
    if choice not in ("", "numba", "python"):
        raise ValueError(f"FIBPAL_BACKEND must be 'numba' or 'python', got {choice!r}")
    if choice == "python":
        return "python", None
    try:
        from numba import njit
    except ImportError:
        if choice == "numba":
            raise
        return "python", None
    return "numba", njit


BACKEND, _njit = _pick_backend()


def active_backend() -> str:
    return BACKEND


# Machine-width guards.  floor arguments up to FAST_FLOOR_MAX keep 5*p*p and
# the root-correction squares inside int64 (the float64 sqrt seed may be a few
# ulps off there; the correction loops repair it).  The identity sweep feeds
# derived arguments up to ~2.62*p, hence its tighter input bound.
FAST_FLOOR_MAX = 10**9
FAST_SCAN_MAX = 3 * 10**8


def _floor_identity_scan(lo, hi):
    """First p in [lo, hi] violating any of the four floor identities, else 0."""

    def fphi(x):
        # exact floor(phi*x) in int64: float sqrt seed, then correction steps
        n = 5 * x * x
        s = int(math.sqrt(n))
        while s * s > n:
            s -= 1
        while (s + 1) * (s + 1) <= n:
            s += 1
        return (s - x) // 2

    for p in range(lo, hi + 1):
        q = fphi(p)
        if fphi(p + q) != p - 1:
            return p
        if fphi(2 * p + q) != p + q:
            return p
        if fphi(p + q + 1) != p:
            return p
        if fphi(2 * p + q + 1) != p + q:
            return p
    return 0


def _eertree_fill(text, lens, link, trans, depth, a_out, max_out, dist_out):
    """Feed ``text`` (uint8 letters) into a palindromic tree.

    Arrays are preallocated by the caller: one node per distinct palindrome
    plus the two roots (node 0 of virtual length -1, node 1 of length 0).
    Writes, per position, the number of palindromic suffixes (``a_out``), the
    length of the longest palindromic suffix (``max_out``) and the running
    count of distinct palindromes (``dist_out``).  Returns the node count.
    """
    lens[0] = -1
    link[0] = 0
    lens[1] = 0
    link[1] = 0
    depth[0] = 0
    depth[1] = 0
    num = 2
    last = 1
    n = text.shape[0]
    for pos in range(n):
        c = text[pos]
        v = last
        while True:
            l = lens[v]
            if pos - l - 1 >= 0 and text[pos - l - 1] == c:
                break
            v = link[v]
        if trans[v, c] != 0:
            last = trans[v, c]
        else:
            cur = num
            num += 1
            lens[cur] = lens[v] + 2
            if lens[cur] == 1:
                link[cur] = 1
            else:
                u = link[v]
                while True:
                    l = lens[u]
                    if pos - l - 1 >= 0 and text[pos - l - 1] == c:
                        break
                    u = link[u]
                link[cur] = trans[u, c]
            depth[cur] = depth[link[cur]] + 1
            trans[v, c] = cur
            last = cur
        a_out[pos] = depth[last]
        max_out[pos] = lens[last]
        dist_out[pos] = num - 2
    return num


# Fallback (plain Python) and jitted twins.
floor_identity_scan_py = _floor_identity_scan
eertree_fill_py = _eertree_fill

if _njit is not None:
    floor_identity_scan_jit = _njit(cache=True)(_floor_identity_scan)
    eertree_fill_jit = _njit(cache=True)(_eertree_fill)
else:
    floor_identity_scan_jit = None
    eertree_fill_jit = None

eertree_fill = eertree_fill_jit if BACKEND == "numba" else eertree_fill_py


def floor_phi_block(p: np.ndarray) -> np.ndarray:
    """Vectorized exact floor(phi * p) for an int64 array with p <= FAST_FLOOR_MAX.

    float64 square roots seed the integer root; the correction loops make the
    result exact.  NumPy path only; the jitted scan above does the same
    arithmetic scalar-wise.
    """
    if p.size and int(p.max()) > FAST_FLOOR_MAX:
        raise OverflowError("floor_phi_block input exceeds machine-width guard")
    n = 5 * p.astype(np.int64) * p
    s = np.sqrt(n.astype(np.float64)).astype(np.int64)
    while True:
        over = s * s > n
        if not over.any():
            break
        s[over] -= 1
    while True:
        under = (s + 1) * (s + 1) <= n
        if not under.any():
            break
        s[under] += 1
    return (s - p) >> 1


def floor_identity_scan_np(lo: int, hi: int, chunk: int = 1 << 19) -> int:
    """NumPy twin of floor_identity_scan: first failing p in [lo, hi], else 0."""
    for start in range(lo, hi + 1, chunk):
        stop = min(start + chunk - 1, hi)
        p = np.arange(start, stop + 1, dtype=np.int64)
        q = floor_phi_block(p)
        bad = (
            (floor_phi_block(p + q) != p - 1)
            | (floor_phi_block(2 * p + q) != p + q)
            | (floor_phi_block(p + q + 1) != p)
            | (floor_phi_block(2 * p + q + 1) != p + q)
        )
        if bad.any():
            return int(p[bad][0])
    return 0


# The bulk identity sweep: jitted scalar loop under numba, vectorized NumPy
# otherwise (the plain scalar loop stays available for parity tests).
floor_identity_scan = (
    floor_identity_scan_jit if BACKEND == "numba" else floor_identity_scan_np
)
