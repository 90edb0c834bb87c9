from __future__ import annotations

import itertools

import pytest

from garside.coxeter import make_group
from garside.exact import Polynomial, charpoly, series_coeffs
from garside.normal_form import left_normal_form
from garside.signed import HyperoctahedralGroup, all_windows, descent_set, inverse
from garside.spectra import (CapExceeded, DescentClassMatrix, build_descent_class_matrix,
                             build_full_adjacency, charpoly_full, charpoly_reduced,
                             count_braids, count_braids_fixed_endpoints, count_sequence,
                             divisibility_verdict, generating_series)

X = Polynomial.x()
COMPRESSION_TAGS = ["A1", "A2", "A3", "B2", "B3", "D3", "I5", "I6", "I7"]


@pytest.mark.parametrize("tag", COMPRESSION_TAGS)
def test_compression_lemma(tag, adjp):
    group = make_group(tag)
    full = build_full_adjacency(group)
    reduced = adjp(tag)
    k = len(full.elements) - reduced.size
    assert charpoly(full.matrix) == X ** k * charpoly(reduced.matrix)


@pytest.mark.parametrize("tag", ["A2", "A3", "B2", "B3", "D4", "H3", "I5"])
def test_counts_match_full_adjacency(tag, adjp):
    group = make_group(tag)
    full = build_full_adjacency(group)
    nontrivial = [w for w in full.elements if w != group.identity()]
    seq = count_sequence(adjp(tag), 4)
    assert seq[0] == 1
    for d in range(1, 5):
        total = 0
        v = [1 if w != group.identity() else 0 for w in full.elements]
        for _ in range(d - 1):
            v = [sum(a * b for a, b in zip(row, v)) for row in full.matrix]
        total = sum(x for w, x in zip(full.elements, v) if w != group.identity())
        assert total == seq[d]
    sigma, tau = nontrivial[0], nontrivial[-1]
    direct = count_braids_fixed_endpoints(group, sigma, tau, 2, full)
    assert direct == full.matrix[full.elements.index(sigma)][full.elements.index(tau)]


@pytest.mark.parametrize("tag,depth", [("A2", 2), ("B2", 2), ("I5", 2)])
def test_counts_against_word_enumeration(tag, depth):
    group = make_group(tag)
    delta = group.length(group.longest())
    forms = set()
    for size in range(depth * delta + 1):
        for word in itertools.product(range(group.rank), repeat=size):
            forms.add(tuple(left_normal_form(group, list(word))))
    by_length = [0] * (depth + 1)
    for f in forms:
        if len(f) <= depth:
            by_length[len(f)] += 1
    assert by_length == count_sequence(build_descent_class_matrix(group), depth)


def test_b2_closed_form(adjp):
    assert count_sequence(adjp("B2"), 15) == [3 ** (d + 1) - 2 for d in range(16)]


@pytest.mark.parametrize("tag", ["A3", "B3", "B4", "D4", "F4", "H3", "I7"])
def test_series_matches_counts(tag, adjp):
    f = generating_series(adjp(tag))
    assert series_coeffs(f, 13) == count_sequence(adjp(tag), 12)


@pytest.mark.parametrize("m", range(2, 11))
def test_dihedral_matrix(m, adjp):
    odd, even = m // 2, (m - 1) // 2
    assert adjp(f"I{m}").matrix == [[1, 0, 0, 0],
                                    [m - 1, odd, even, 0],
                                    [m - 1, even, odd, 0],
                                    [1, 1, 1, 1]]


@pytest.mark.parametrize("tag", ["A3", "B3", "D4", "H3", "F4"])
def test_matrix_structure(tag, adjp):
    a = adjp(tag)
    size = a.size
    assert a.matrix[0] == [1] + [0] * (size - 1)
    assert a.matrix[size - 1] == [1] * size
    assert sum(row[0] for row in a.matrix) == a.order
    for i, row in enumerate(a.matrix):
        for j in range(size):
            for k in range(size):
                if j & k == j:
                    assert row[j] >= row[k]


def b_oracle(n):
    """Descent-class matrix straight from windows."""
    size = 1 << n
    matrix = [[0] * size for _ in range(size)]
    for w in all_windows(n):
        left, right = descent_set(inverse(w)), descent_set(w)
        for j in range(size):
            if j & right == j:
                matrix[left][j] += 1
    return matrix


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_b_window_oracle(n, adjp):
    assert adjp(f"B{n}").matrix == b_oracle(n)
    assert build_descent_class_matrix(HyperoctahedralGroup(n)).matrix == b_oracle(n)
    engine, model = make_group(f"B{n}"), HyperoctahedralGroup(n)
    for w in model.elements():
        v = engine.from_word(model.reduced_word(w))
        assert engine.length(v) == model.length(w)
        assert engine.descents(v) == model.descents(w)
        assert engine.left_descents(v) == model.left_descents(w)


def d_windows(n):
    for w in all_windows(n):
        if sum(1 for x in w if x < 0) % 2 == 0:
            yield w


def d_descents(w):
    """Generator 0 is the fork node: w(1) + w(2) < 0; generator i >= 1 compares w(i), w(i+1)."""
    mask = 1 if w[0] + w[1] < 0 else 0
    for i in range(1, len(w)):
        if w[i - 1] > w[i]:
            mask |= 1 << i
    return mask


def d_oracle(n):
    size = 1 << n
    matrix = [[0] * size for _ in range(size)]
    count = 0
    for w in d_windows(n):
        count += 1
        left, right = d_descents(inverse(w)), d_descents(w)
        for j in range(size):
            if j & right == j:
                matrix[left][j] += 1
    return DescentClassMatrix(n, matrix, count)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_d_window_oracle(n, adjp):
    oracle = d_oracle(n)
    ours = adjp(f"D{n}")
    assert oracle.order == ours.order
    assert charpoly_reduced(oracle) == charpoly_reduced(ours)
    assert count_sequence(oracle, 8) == count_sequence(ours, 8)


def test_count_braids_errors(adjp):
    assert count_braids(adjp("B2"), 0) == 1
    with pytest.raises(ValueError):
        count_braids(adjp("B2"), -1)
    group = make_group("B2")
    with pytest.raises(ValueError):
        count_braids_fixed_endpoints(group, group.identity(), group.longest(), 2)
    with pytest.raises(ValueError):
        count_braids_fixed_endpoints(group, group.longest(), group.longest(), 0)


def test_full_cap():
    with pytest.raises(CapExceeded):
        build_full_adjacency(make_group("B3"), cap=10)


def test_json_round_trip(adjp):
    a = adjp("H3")
    assert DescentClassMatrix.from_json(a.to_json()) == a


def test_charpoly_full_direct_check():
    assert charpoly_full(make_group("B2")) == X ** 4 * (X - 1) ** 3 * (X - 3)


def test_divisibility_small():
    assert divisibility_verdict("B", 1).divides
    assert divisibility_verdict("B", 2).divides
    verdict = divisibility_verdict("D", 4)
    assert not verdict.divides and not verdict.remainder.is_zero()
