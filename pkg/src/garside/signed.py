"""
Signed permutations in window notation, and the word operators built on them.

A signed permutation of rank n is stored as the tuple (sigma(1), ..., sigma(n));
sigma(-i) = -sigma(i) and sigma(0) = 0 are implicit. Signed words are tuples of
nonzero integers that need not be windows.
"""

from __future__ import annotations

import itertools
import re
from functools import lru_cache
from typing import Iterator, Sequence

SignedPermutation = tuple[int, ...]
SignedWord = tuple[int, ...]


def is_window(word: Sequence[int]) -> bool:
    return sorted(abs(x) for x in word) == list(range(1, len(word) + 1))


def _check(sigma: Sequence[int]) -> None:
    if not is_window(sigma):
        raise ValueError(f"{tuple(sigma)} is not a signed permutation window")


def parse_window(text: str) -> SignedPermutation:
    """Parse "(-2,1)", "-2,1" or "-2 1"."""
    body = text.strip().strip("()[]")
    if not body:
        return ()
    w = tuple(int(tok) for tok in re.split(r"[,\s]+", body) if tok)
    _check(w)
    return w


def format_window(sigma: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in sigma) + ")"


def identity(n: int) -> SignedPermutation:
    return tuple(range(1, n + 1))


def coxeter_element(n: int) -> SignedPermutation:
    """The longest element (-1, ..., -n)."""
    return tuple(-i for i in range(1, n + 1))


def generator(i: int, n: int) -> SignedPermutation:
    """s_0 = (-1, 2, ..., n); s_i swaps the values i and i+1."""
    if not 0 <= i < n:
        raise ValueError(f"generator index {i} out of range for rank {n}")
    w = list(range(1, n + 1))
    if i == 0:
        w[0] = -1
    else:
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def _apply(sigma: Sequence[int], x: int) -> int:
    return sigma[x - 1] if x > 0 else -sigma[-x - 1]


def compose(sigma: Sequence[int], tau: Sequence[int]) -> SignedPermutation:
    """sigma∘tau, i.e. (sigma tau)(i) = sigma(tau(i))."""
    if len(sigma) != len(tau):
        raise ValueError("rank mismatch")
    return tuple(_apply(sigma, x) for x in tau)


def inverse(sigma: Sequence[int]) -> SignedPermutation:
    out = [0] * len(sigma)
    for i, x in enumerate(sigma, start=1):
        out[abs(x) - 1] = i if x > 0 else -i
    return tuple(out)


def descent_set(sigma: Sequence[int]) -> int:
    """Bitmask of {i in [0, n-1] : sigma(i) > sigma(i+1)} with sigma(0) = 0."""
    mask = 0
    prev = 0
    for i, x in enumerate(sigma):
        if prev > x:
            mask |= 1 << i
        prev = x
    return mask


def length(sigma: Sequence[int]) -> int:
    """Coxeter length: window inversions plus the sum of |sigma(i)| over negative entries."""
    n = len(sigma)
    inv = sum(1 for a in range(n) for b in range(a + 1, n) if sigma[a] > sigma[b])
    return inv + sum(-x for x in sigma if x < 0)


def embed(sigma: Sequence[int]) -> SignedPermutation:
    return tuple(sigma) + (len(sigma) + 1,)


def windows(n: int) -> Iterator[SignedPermutation]:
    for p in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield tuple(s * x for s, x in zip(signs, p))


@lru_cache(maxsize=None)
def all_windows(n: int) -> tuple[SignedPermutation, ...]:
    """Every element of rank n, ordered by (length, window)."""
    return tuple(sorted(windows(n), key=lambda w: (length(w), w)))


# ---------------------------------------------------------------- word operators

def std(word: Sequence[int]) -> SignedWord:
    """Relabel absolute values to 1..k by the increasing bijection, keeping signs."""
    absolute = [abs(x) for x in word]
    if len(set(absolute)) != len(absolute):
        raise ValueError(f"std needs distinct absolute values, got {tuple(word)}")
    rank = {a: r for r, a in enumerate(sorted(absolute), start=1)}
    return tuple(rank[abs(x)] if x > 0 else -rank[abs(x)] for x in word)


def shift(word: Sequence[int], k: int) -> SignedWord:
    return tuple(x + k if x > 0 else x - k for x in word)


def dec(word: Sequence[int], k: int) -> SignedWord:
    """Close the gap left by the letter +-k (which must be absent)."""
    out = []
    for x in word:
        if x == k or x == -k:
            raise ValueError(f"dec by {k} on a word containing {x}")
        if x > k:
            out.append(x - 1)
        elif x < -k:
            out.append(x + 1)
        else:
            out.append(x)
    return tuple(out)


def dec_set(values, k: int) -> frozenset[int]:
    """Set version of dec on non-negative integers: drop k, lower everything above k."""
    return frozenset(x - 1 if x > k else x for x in values if x != k)


def _position(word: Sequence[int], i: int) -> int:
    for j, x in enumerate(word):
        if x == i or x == -i:
            return j
    raise ValueError(f"letter +-{i} not in {tuple(word)}")


def delete(word: Sequence[int], i: int) -> SignedWord:
    """Remove the letter of absolute value i, then dec by i."""
    if not 1 <= i <= len(word):
        raise ValueError(f"index {i} out of range for a word of length {len(word)}")
    j = _position(word, i)
    return dec(tuple(word[:j]) + tuple(word[j + 1:]), i)


def _eps(a, b) -> int:
    return 1 if a < b else -1


def sign_at(word: Sequence[int], i: int) -> int:
    """eps(u_{j-1}, u_j, u_{j+1}) for the position j of +-i; u_0 = 0 and u_{n+1} = -infinity."""
    j = _position(word, i)
    b = word[j]
    left = _eps(word[j - 1] if j > 0 else 0, b)
    # b is always above the -infinity sentinel
    right = _eps(b, word[j + 1]) if j + 1 < len(word) else -1
    return (left + right) // 2


# ---------------------------------------------------------------- group model

class HyperoctahedralGroup:
    """Window-based model of W(B_n), interchangeable with the root engine."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("rank must be >= 1")
        self.rank = n
        self.label = f"B{n}"

    def identity(self) -> SignedPermutation:
        return identity(self.rank)

    def generator(self, i: int) -> SignedPermutation:
        return generator(i, self.rank)

    def multiply(self, w, v) -> SignedPermutation:
        return compose(w, v)

    def inverse(self, w) -> SignedPermutation:
        return inverse(w)

    def apply_generator(self, w, i: int) -> SignedPermutation:
        return compose(w, generator(i, self.rank))

    def length(self, w) -> int:
        return length(w)

    def descents(self, w) -> int:
        return descent_set(w)

    def left_descents(self, w) -> int:
        return descent_set(inverse(w))

    def longest(self) -> SignedPermutation:
        return coxeter_element(self.rank)

    def elements(self) -> list[SignedPermutation]:
        return list(all_windows(self.rank))

    def reduced_word(self, w) -> list[int]:
        word = []
        while True:
            d = descent_set(w)
            if not d:
                break
            i = (d & -d).bit_length() - 1
            word.append(i)
            w = self.apply_generator(w, i)
        return word[::-1]

    def from_word(self, word: Sequence[int]) -> SignedPermutation:
        w = self.identity()
        for i in word:
            w = self.apply_generator(w, i)
        return w
