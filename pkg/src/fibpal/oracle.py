"""Independent ground truth at desk scale.

Two tiers: a palindromic tree (eertree) built letter by letter, and naive
scanners (center expansion, substring slicing, plain substring search) that
validate the tree itself.  Nothing here shares code with the closed-form
modules, so agreement between the two paths is meaningful evidence.

Bulk scans over long prefixes go through the kernels module (numba or the
pure fallback per FIBPAL_BACKEND); the readable ``Eertree`` class is the
reference the kernel is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .chain import OccurrenceSpan
from .errors import DomainError
from .fibword import check_cap, prefix, prefix_array
from .singular import kernel, singular_word


class Eertree:
    """Palindromic tree: one node per distinct palindromic factor plus two roots.

    Node 0 is the root of virtual length -1, node 1 the empty-word root.
    ``depth`` counts the suffix-link chain length, i.e. the number of
    palindromic suffixes the node's palindrome has.
    """

    def __init__(self):
        self.lens = [-1, 0]
        self.link = [0, 0]
        self.to: list[dict[str, int]] = [{}, {}]
        self.depth = [0, 0]
        self.text: list[str] = []
        self.last = 1
        self.end_counts: list[int] = []
        self.max_suffix: list[int] = []
        self.node_at: list[int] = []

    def _extend_down(self, v: int, pos: int) -> int:
        while True:
            l = self.lens[v]
            if pos - l - 1 >= 0 and self.text[pos - l - 1] == self.text[pos]:
                return v
            v = self.link[v]

    def add(self, ch: str) -> int:
        """Feed one letter; returns the palindromic-suffix count at the new position."""
        pos = len(self.text)
        self.text.append(ch)
        v = self._extend_down(self.last, pos)
        cur = self.to[v].get(ch)
        if cur is None:
            cur = len(self.lens)
            self.lens.append(self.lens[v] + 2)
            if self.lens[cur] == 1:
                self.link.append(1)
            else:
                u = self._extend_down(self.link[v], pos)
                self.link.append(self.to[u][ch])
            self.depth.append(self.depth[self.link[cur]] + 1)
            self.to.append({})
            self.to[v][ch] = cur
        self.last = cur
        self.end_counts.append(self.depth[cur])
        self.max_suffix.append(self.lens[cur])
        self.node_at.append(cur)
        return self.depth[cur]

    def feed(self, word: str) -> None:
        for ch in word:
            self.add(ch)

    def distinct(self) -> int:
        return len(self.lens) - 2

    def palindromic_suffix_lengths(self, pos: int) -> list[int]:
        """Lengths of all palindromic suffixes of the prefix ending at 1-based pos."""
        v = self.node_at[pos - 1]
        out = []
        while self.lens[v] > 0:
            out.append(self.lens[v])
            v = self.link[v]
        return out

    def words(self) -> set[str]:
        # every node was the longest palindromic suffix at its creation
        # position, so collecting those suffixes covers all distinct factors
        text = "".join(self.text)
        return {
            text[pos + 1 - self.lens[v]: pos + 1] for pos, v in enumerate(self.node_at)
        }


@dataclass
class PrefixScan:
    """Per-position facts from one palindromic-tree pass over a prefix."""

    n: int
    end_counts: np.ndarray  # occurrences ending at each position (1-based shift)
    max_suffix: np.ndarray  # longest palindromic suffix length per position
    distinct: np.ndarray  # distinct palindromic factors so far per position
    nodes: int

    def end_count(self, i: int) -> int:
        return int(self.end_counts[i - 1])


def scan_prefix(n: int, fill=None) -> PrefixScan:
    """Run the (backend-selected) tree kernel over the length-n prefix."""
    check_cap(n, "prefix scan")
    text = prefix_array(n)
    cap = n + 3
    lens = np.empty(cap, dtype=np.int64)
    link = np.empty(cap, dtype=np.int32)
    trans = np.zeros((cap, 2), dtype=np.int32)
    depth = np.empty(cap, dtype=np.int32)
    a_out = np.empty(n, dtype=np.int32)
    max_out = np.empty(n, dtype=np.int64)
    dist_out = np.empty(n, dtype=np.int64)
    if fill is None:
        fill = kernels.eertree_fill
    nodes = fill(text, lens, link, trans, depth, a_out, max_out, dist_out)
    return PrefixScan(n, a_out, max_out, dist_out, int(nodes))


def eertree_end_counts(n_max: int) -> np.ndarray:
    """Occurrence counts per ending position over the length-n_max prefix."""
    return scan_prefix(n_max).end_counts


def eertree_total(n: int) -> int:
    """Total palindrome occurrences in the length-n prefix (tree-counted)."""
    if n == 0:
        return 0
    return int(scan_prefix(n).end_counts.sum())


def eertree_distinct(n: int) -> int:
    """Distinct palindromic factors of the length-n prefix (tree node count)."""
    return scan_prefix(n).nodes - 2


def occurrences(w: str, n: int) -> list[OccurrenceSpan]:
    """All (possibly overlapping) occurrence spans of w in the length-n prefix."""
    if not w:
        raise DomainError("occurrences of the empty word are undefined")
    s = prefix(n)
    out = []
    idx = s.find(w)
    while idx >= 0:
        out.append(OccurrenceSpan(idx + 1, idx + len(w)))
        idx = s.find(w, idx + 1)
    return out


@dataclass
class ReturnWordSeq:
    """Consecutive-occurrence gap words of a factor, over its two-word alphabet."""

    factor: str
    returns: list[str]
    alphabet: tuple[str, str]  # (first return word, first differing one)
    reduced: str  # returns rewritten over {a, b}


def return_words(w: str, n: int) -> ReturnWordSeq:
    """Return words of w within the length-n prefix (needs >= 3 occurrences).

    The p-th return word stretches from the start of the p-th occurrence up
    to just before the (p+1)-th.  Exactly two distinct return words occur,
    and rewriting the sequence over {a, b} (first word -> a) again yields a
    prefix of the Fibonacci word; both facts are enforced here.
    """
    spans = occurrences(w, n)
    if len(spans) < 3:
        raise DomainError(f"{w[:40]!r} occurs only {len(spans)} times in prefix({n})")
    s = prefix(n)
    rets = [
        s[spans[k].start - 1: spans[k + 1].start - 1] for k in range(len(spans) - 1)
    ]
    first = rets[0]
    second = next((r for r in rets if r != first), None)
    distinct = set(rets)
    if second is None or len(distinct) != 2:
        raise DomainError(f"expected exactly two distinct return words, got {len(distinct)}")
    reduced = "".join("a" if r == first else "b" for r in rets)
    return ReturnWordSeq(w, rets, (first, second), reduced)


def kernel_correspondence(w: str, p_max: int, n: int) -> bool:
    """Check that the kernel inside the p-th occurrence of w is the p-th
    occurrence of w's kernel, for every p <= p_max."""
    ker = kernel(w)
    spans_w = occurrences(w, n)
    if len(spans_w) < p_max:
        raise DomainError(f"{w[:40]!r} has only {len(spans_w)} occurrences in prefix({n})")
    spans_k = occurrences(singular_word(ker.m), n)
    for p in range(p_max):
        if spans_w[p].start + ker.offset - 1 != spans_k[p].start:
            return False
    return True


# --- naive scanners (second-level oracle, validate the tree itself) ---


def center_palindrome_spans(s: str, max_len: int | None = None):
    """Yield the span of every palindromic substring, by center expansion."""
    n = len(s)
    cap = n if max_len is None else max_len
    for c in range(n):  # odd lengths, center c
        r = 0
        while c - r - 1 >= 0 and c + r + 1 < n and s[c - r - 1] == s[c + r + 1]:
            r += 1
        for k in range(min(r, (cap - 1) // 2) + 1):
            yield (c - k, c + k)
    for c in range(n - 1):  # even lengths, center between c and c+1
        if s[c] != s[c + 1]:
            continue
        r = 0
        while c - r - 1 >= 0 and c + r + 2 < n and s[c - r - 1] == s[c + r + 2]:
            r += 1
        for k in range(min(r, cap // 2 - 1) + 1):
            yield (c - k, c + k + 1)


def center_palindrome_set(s: str, max_len: int | None = None) -> set[str]:
    """Distinct palindromic substrings of s (optionally length-capped)."""
    return {s[i: j + 1] for i, j in center_palindrome_spans(s, max_len)}


def center_end_counts(s: str) -> list[int]:
    """Palindromic-substring occurrences ending at each 1-based position."""
    counts = [0] * (len(s) + 1)
    for _, j in center_palindrome_spans(s):
        counts[j + 1] += 1
    return counts[1:]


def naive_palindrome_set(s: str) -> set[str]:
    """Distinct palindromic substrings by checking every substring slice.

    Quadratic in len(s) with a first-letter/last-letter prefilter; meant for
    validating the other scanners, not for production sizes.
    """
    n = len(s)
    out = set()
    for i in range(n):
        ci = s[i]
        for j in range(i, n):
            if s[j] != ci:
                continue
            t = s[i: j + 1]
            if t == t[::-1]:
                out.add(t)
    return out
