import pytest

from fibpal import DomainError, NotAFactorError, fib, is_factor, kernel, prefix, singular_word
from fibpal import oracle, singular


def test_singular_examples():
    assert singular_word(-1) == "a"
    assert singular_word(0) == "b"
    assert singular_word(1) == "aa"
    assert singular_word(2) == "bab"
    assert singular_word(4) == "babaabab"
    with pytest.raises(DomainError):
        singular_word(-2)


def test_singular_three_part_recursion():
    for m in range(2, 21):
        assert singular_word(m) == singular_word(m - 2) + singular_word(m - 3) + singular_word(m - 2)


def test_singular_palindrome_of_fib_length():
    for m in range(-1, 21):
        w = singular_word(m)
        assert len(w) == fib(m)
        assert w == w[::-1]


def test_last_letter():
    assert singular.last_letter(-1) == "b"  # iterate(-1) is the letter b
    for m in range(0, 15):
        assert singular.last_letter(m) == prefix(fib(m))[-1]


def test_kernel_examples():
    res = kernel("aba")
    assert (res.m, res.offset) == (0, 2)
    res = kernel(singular_word(5))
    assert (res.m, res.offset) == (5, 1)
    res = kernel("abaab")
    assert (res.m, res.offset) == (1, 3)
    # even-length palindromes cannot center an odd-length singular word
    res = kernel("ababaababa")
    assert res.m == 4 and singular_word(4) == "ababaababa"[res.offset - 1: res.offset + 7]


def test_kernel_errors():
    with pytest.raises(DomainError):
        kernel("")
    with pytest.raises(NotAFactorError):
        kernel("bb")
    with pytest.raises(NotAFactorError):
        kernel("aaa")
    # without the membership check a non-factor still gets a best-effort answer
    res = kernel("bb", require_factor=False)
    assert res.m == 0


def test_is_factor():
    assert is_factor("abaab")
    assert is_factor(singular_word(10))
    assert not is_factor("bb")
    assert not is_factor("abc")


def test_kernel_uniqueness_over_short_factors(prefix_10k):
    # every factor of length <= 50 contains its kernel exactly once
    for length in range(1, 51):
        factors = {prefix_10k[i: i + length] for i in range(len(prefix_10k) - length + 1)}
        assert len(factors) == length + 1  # Sturmian complexity
        for w in factors:
            res = kernel(w, require_factor=False)
            assert w.count(singular_word(res.m)) == 1
            # no larger singular word occurs
            for bigger in range(res.m + 1, 12):
                if fib(bigger) > length:
                    break
                assert singular_word(bigger) not in w


def test_kernel_occurrence_correspondence(prefix_10k):
    # the kernel inside the p-th occurrence is the p-th kernel occurrence
    for w in ["a", "b", "aa", "aba", "abaab", "ababa", singular_word(4), "abaababaab"]:
        spans = oracle.occurrences(w, 10**4)
        assert oracle.kernel_correspondence(w, min(50, len(spans)), 10**4)


def test_kernel_correspondence_example():
    # the third occurrence of aba sits at positions 6..8 around the third b
    spans = oracle.occurrences("aba", 100)
    assert (spans[2].start, spans[2].end) == (6, 8)
    b_spans = oracle.occurrences("b", 100)
    assert b_spans[2].start == 7
    assert oracle.kernel_correspondence("aba", 3, 100)
