"""Singular words and kernel extraction.

The m-th singular word is the m-th morphism iterate with its last letter
moved to the front, i.e. last-letter-of-iterate(m+1) + iterate(m) minus its
final letter.  Singular words are palindromes of length fib(m), satisfy the
three-part recursion S(m) = S(m-2) S(m-3) S(m-2) for m >= 2, and the maximal
singular word occurring in a factor (its kernel) occurs there exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import fibword
from .errors import DomainError, NotAFactorError
from .fibword import fib, prefix

# Factor membership is decided by scanning a prefix window.  Measured over
# all factors up to length 2000, the first occurrence of a length-L factor
# ends by ~2.62*L, so a 4*L window (with a floor for short factors) is safe.
FACTOR_WINDOW_MULT = 4
FACTOR_WINDOW_MIN = 10**4


@dataclass(frozen=True)
class KernelResult:
    """Kernel index plus the 1-based offset of its unique occurrence."""

    m: int
    offset: int


def last_letter(m: int) -> str:
    """Last letter of the m-th morphism iterate: ``a`` iff m is even."""
    if m < -1:
        raise DomainError(f"iterate index must be >= -1, got {m}")
    return fibword.LETTER_A if m % 2 == 0 else fibword.LETTER_B


def singular_word(m: int) -> str:
    """The m-th singular word, a palindrome of length fib(m), for m >= -1."""
    if m < -1:
        raise DomainError(f"singular index must be >= -1, got {m}")
    if m == -1:
        return "a"
    if m == 0:
        return "b"
    fibword.check_cap(fib(m), "singular word")
    return last_letter(m + 1) + fibword.iterate(m)[:-1]


def factor_window(length: int) -> int:
    """Prefix length scanned when deciding factor membership."""
    return max(FACTOR_WINDOW_MULT * length, FACTOR_WINDOW_MIN)


def is_factor(w: str) -> bool:
    """Whether w occurs in the infinite word (scan of a sufficient prefix)."""
    if not w:
        raise DomainError("the empty word is not handled")
    if set(w) - {"a", "b"}:
        return False
    return w in prefix(factor_window(len(w)))


def kernel(w: str, require_factor: bool = True) -> KernelResult:
    """The maximal singular word occurring in w, with its occurrence offset.

    Candidates are tested for decreasing index starting from the largest m
    with fib(m) <= len(w); singular-word lengths bound the search.  With
    ``require_factor`` (the default) membership in the infinite word is
    checked first and the uniqueness of the kernel occurrence is verified.
    """
    if not w:
        raise DomainError("kernel of the empty word is undefined")
    if require_factor and not is_factor(w):
        raise NotAFactorError(f"{w[:40]!r} does not occur in the Fibonacci word")
    m = fibword.fib_floor_index(len(w))
    while m >= -1:
        idx = w.find(singular_word(m))
        if idx >= 0:
            if require_factor and w.find(singular_word(m), idx + 1) >= 0:
                raise NotAFactorError(
                    f"kernel candidate occurs twice in {w[:40]!r}; not a factor"
                )
            return KernelResult(m, idx + 1)
        m -= 1
    raise DomainError(f"no singular word occurs in {w[:40]!r}")  # unreachable over {a,b}
