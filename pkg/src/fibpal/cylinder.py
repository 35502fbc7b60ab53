"""Canonical coordinates and enumeration of palindromic factors.

Every palindrome occurring in the infinite word is a centered extension of
its kernel: with kernel index m there is a unique i in [1, fib(m+1)] such
that the palindrome equals

    S(m+1)[i+1 ..] + S(m) + S(m+1)[.. fib(m+1)-i]
    == S(m+3)[i+1 .. fib(m+3)-i]

where S(k) is the k-th singular word.  The pair (m, i) is the palindrome's
coordinate; its length is fib(m+3) - 2i.  Palindromes split into three
cylinders by kernel index mod 3, equivalently by length parity and middle
letter.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import fibword, singular
from .errors import DomainError
from .fibword import fib
from .singular import kernel, singular_word

CYLINDER_BY_MOD = {2: "a", 0: "b", 1: "aa"}


@dataclass(frozen=True, order=True)
class PalCoord:
    """Coordinate (m, i) of a palindromic factor; i in [1, fib(m+1)]."""

    m: int
    i: int

    def length(self) -> int:
        return fib(self.m + 3) - 2 * self.i

    def is_singular(self) -> bool:
        return self.i == fib(self.m + 1)


def validate_coord(c: PalCoord) -> None:
    if c.m < -1:
        raise DomainError(f"kernel index must be >= -1, got {c.m}")
    if not 1 <= c.i <= fib(c.m + 1):
        raise DomainError(f"i must lie in [1, fib({c.m + 1})={fib(c.m + 1)}], got {c.i}")


def cylinder_tag(c: PalCoord | int) -> str:
    """Cylinder of a palindrome: 'a' / 'b' (odd length, middle letter) or 'aa'."""
    m = c.m if isinstance(c, PalCoord) else c
    if m < -1:
        raise DomainError(f"kernel index must be >= -1, got {m}")
    return CYLINDER_BY_MOD[m % 3]


def pal_from_coord(c: PalCoord) -> str:
    """Materialize the palindrome with coordinate c.

    Both defining forms (two-singular-word concatenation and the slice of the
    (m+3)-rd singular word) are built and must agree.
    """
    validate_coord(c)
    fibword.check_cap(fib(c.m + 3), "palindrome construction")
    s_next = singular_word(c.m + 1)
    word = s_next[c.i:] + singular_word(c.m) + s_next[: fib(c.m + 1) - c.i]
    alt = singular_word(c.m + 3)[c.i: fib(c.m + 3) - c.i]
    if word != alt:
        raise AssertionError(f"coordinate forms disagree for {c}")
    return word


def coord_from_pal(w: str) -> PalCoord:
    """The unique coordinate of a palindromic factor w."""
    if not w:
        raise DomainError("the empty word has no coordinates")
    if w != w[::-1]:
        raise DomainError(f"{w[:40]!r} is not a palindrome")
    m = kernel(w).m  # raises NotAFactorError for non-factors
    num = fib(m + 3) - len(w)
    if num <= 0 or num % 2:
        raise DomainError(f"{w[:40]!r} has no valid coordinate")
    c = PalCoord(m, num // 2)
    validate_coord(c)
    return c


def pals_of_length(n: int) -> list[PalCoord]:
    """All palindrome coordinates of length n: two for odd n, one for even.

    A kernel index m realizes the lengths fib(m), fib(m)+2, ..., fib(m+3)-2,
    so scanning m while fib(m) <= n is logarithmic in n.
    """
    if n < 1:
        raise DomainError("palindrome lengths start at 1; the empty word is excluded")
    out = []
    m = -1
    while fib(m) <= n:
        num = fib(m + 3) - n
        if num >= 2 and num % 2 == 0 and num // 2 <= fib(m + 1):
            out.append(PalCoord(m, num // 2))
        m += 1
    return out


def conjugates(w: str) -> list[str]:
    return [w[i:] + w[:i] for i in range(len(w))]


def palindromic_conjugates(m: int) -> set[str]:
    """Palindromes among the rotations of the m-th morphism iterate.

    Empty exactly when m = 1 mod 3 (even iterate length), a singleton
    otherwise.
    """
    if m < -1:
        raise DomainError(f"iterate index must be >= -1, got {m}")
    fibword.check_cap(fib(m), "conjugate enumeration")
    return {c for c in conjugates(fibword.iterate(m)) if c == c[::-1]}


def prefix_palindrome_lengths(max_n: int) -> list[int]:
    """All n <= max_n whose length-n prefix is a palindrome: n = fib(m) - 2."""
    if max_n < 1:
        raise DomainError(f"need max_n >= 1, got {max_n}")
    out = []
    m = 2
    while fib(m) - 2 <= max_n:
        if fib(m) - 2 >= 1:
            out.append(fib(m) - 2)
        m += 1
    return out


def cylinder_table(rows: int) -> dict[str, list[tuple[str, bool]]]:
    """First ``rows`` palindromes per cylinder, each with its singular flag.

    Row r holds the length 2r-1 palindrome of the 'a' and 'b' cylinders and
    the length 2r palindrome of the 'aa' cylinder.
    """
    if rows < 1:
        raise DomainError(f"need rows >= 1, got {rows}")
    table: dict[str, list[tuple[str, bool]]] = {"a": [], "b": [], "aa": []}
    for r in range(1, rows + 1):
        for n in (2 * r - 1, 2 * r):
            for c in pals_of_length(n):
                table[cylinder_tag(c)].append((pal_from_coord(c), c.is_singular()))
    return table
