"""
Left Garside normal forms of positive braids.

Simple braids are represented by their group elements, so any group model with
`descents`, `left_descents`, `apply_generator`, `multiply` and `generator` works:
windows for type B, root-index tuples for the generic engine, the dihedral model.
"""

from __future__ import annotations

from typing import Sequence


def parse_braid_word(text: str, rank: int | None = None) -> list[int]:
    """Whitespace- or comma-separated generator indices, e.g. "1 1 0 1 0 1"."""
    letters = [int(tok) for tok in text.replace(",", " ").split()]
    if rank is not None:
        bad = [i for i in letters if not 0 <= i < rank]
        if bad:
            raise ValueError(f"generator indices {bad} outside [0, {rank})")
    return letters


def is_normal_pair(group, sigma, tau) -> bool:
    """(sigma, tau) is normal iff Des(tau^-1) ⊆ Des(sigma)."""
    return group.left_descents(tau) & ~group.descents(sigma) == 0


def normalize_pair(group, sigma, tau):
    """Slide generators from the front of tau onto sigma until the pair is normal."""
    while True:
        bad = group.left_descents(tau) & ~group.descents(sigma)
        if not bad:
            return sigma, tau
        i = (bad & -bad).bit_length() - 1
        s = group.generator(i)
        sigma = group.apply_generator(sigma, i)
        tau = group.multiply(s, tau)


def left_normal_form(group, word: Sequence[int]) -> list:
    """Factors of the left Garside normal form; the empty word gives []."""
    identity = group.identity()
    factors = [group.generator(i) for i in word]
    changed = True
    while changed:
        changed = False
        for k in range(len(factors) - 1, 0, -1):
            a, b = factors[k - 1], factors[k]
            na, nb = normalize_pair(group, a, b)
            if (na, nb) != (a, b):
                factors[k - 1], factors[k] = na, nb
                changed = True
        factors = [f for f in factors if f != identity]
    return factors


def garside_length(group, word: Sequence[int]) -> int:
    return len(left_normal_form(group, word))


def first_factor(group, word: Sequence[int]):
    if not word:
        raise ValueError("the empty braid has no first factor")
    return left_normal_form(group, word)[0]


def is_normal_sequence(group, factors: Sequence) -> bool:
    return all(is_normal_pair(group, a, b) for a, b in zip(factors, factors[1:]))
