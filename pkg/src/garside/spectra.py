"""
Adjacency matrices of normal pairs, their characteristic polynomials, braid counts
by Garside length, and generating series.

Subsets of generators are bitmasks: the subset I has index sum(2**i for i in I).
The descent-class matrix has entries

    a'[I][J] = #{w : Des(w^-1) = I and J ⊆ Des(w)}

and the number of braids of Garside length d is Y . A'^d . Z for every d >= 0,
with Y_I = [I != ∅] and Z_I = (-1)^(|I|+1) [I != ∅].
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .coxeter import iter_submasks, make_group, parse_type
from .exact import (Polynomial, RationalFunction, charpoly, mat_vec, poly_divides,
                    poly_divmod, solve_rational_series, vec_mat)

FULL_CAP = 10 ** 4


class CapExceeded(RuntimeError):
    pass


@dataclass
class FullAdjacency:
    elements: list
    matrix: list[list[int]]


@dataclass
class DescentClassMatrix:
    rank: int
    matrix: list[list[int]]
    order: int  # |W|

    @property
    def size(self) -> int:
        return len(self.matrix)

    def to_json(self) -> dict:
        return {"rank": self.rank, "order": str(self.order),
                "matrix": [[str(x) for x in row] for row in self.matrix]}

    @classmethod
    def from_json(cls, doc: dict) -> DescentClassMatrix:
        return cls(doc["rank"], [[int(x) for x in row] for row in doc["matrix"]],
                   int(doc["order"]))


def build_full_adjacency(group, elements: Sequence | None = None,
                         cap: int = FULL_CAP) -> FullAdjacency:
    """a[s][t] = 1 iff Des(t^-1) ⊆ Des(s), rows and columns in element order."""
    elems = list(group.elements() if elements is None else elements)
    if len(elems) > cap:
        raise CapExceeded(f"{len(elems)} elements exceeds the full-matrix cap {cap}")
    right = [group.descents(w) for w in elems]
    left = [group.left_descents(w) for w in elems]
    matrix = [[int(lt & ~r == 0) for lt in left] for r in right]
    return FullAdjacency(elems, matrix)


def build_descent_class_matrix(group) -> DescentClassMatrix:
    size = 1 << group.rank
    pairs: Counter = Counter()
    elems = group.elements()
    for w in elems:
        pairs[group.left_descents(w), group.descents(w)] += 1
    matrix = [[0] * size for _ in range(size)]
    for (i_mask, d_mask), count in pairs.items():
        row = matrix[i_mask]
        for j in iter_submasks(d_mask):
            row[j] += count
    return DescentClassMatrix(group.rank, matrix, len(elems))


def boundary_vectors(rank: int) -> tuple[list[int], list[int]]:
    size = 1 << rank
    y = [0] + [1] * (size - 1)
    z = [0] + [1 if bin(i).count("1") % 2 else -1 for i in range(1, size)]
    return y, z


def _adjp(source) -> DescentClassMatrix:
    return source if isinstance(source, DescentClassMatrix) else build_descent_class_matrix(source)


def charpoly_reduced(source) -> Polynomial:
    return charpoly(_adjp(source).matrix)


def charpoly_full(source, direct_check_limit: int = 64) -> Polynomial:
    """chi(Adj) = x^(|W| - 2^rank) chi(Adj'); the full matrix is used as a cross-check when small."""
    adjp = _adjp(source)
    chi = Polynomial.monomial(adjp.order - adjp.size) * charpoly(adjp.matrix)
    if not isinstance(source, DescentClassMatrix) and adjp.order <= direct_check_limit:
        direct = charpoly(build_full_adjacency(source).matrix)
        if direct != chi:
            raise AssertionError("full and compressed characteristic polynomials disagree")
    return chi


def count_sequence(source, dmax: int) -> list[int]:
    """[b(0), ..., b(dmax)]."""
    adjp = _adjp(source)
    y, z = boundary_vectors(adjp.rank)
    out = []
    row = y
    for _ in range(dmax + 1):
        out.append(sum(a * b for a, b in zip(row, z)))
        row = vec_mat(row, adjp.matrix)
    return out


def count_braids(source, d: int) -> int:
    """Number of positive braids of Garside length d."""
    if d < 0:
        raise ValueError("Garside length must be >= 0")
    return count_sequence(source, d)[d]


def count_braids_fixed_endpoints(group, sigma, tau, d: int,
                                 adjacency: FullAdjacency | None = None) -> int:
    """Normal sequences of length d from sigma to tau: e_sigma^T Adj^(d-1) e_tau."""
    identity = group.identity()
    if sigma == identity or tau == identity:
        raise ValueError("endpoints must differ from the identity")
    if d < 1:
        raise ValueError("d must be >= 1")
    adj = adjacency or build_full_adjacency(group)
    index = {w: k for k, w in enumerate(adj.elements)}
    v = [0] * len(adj.elements)
    v[index[tau]] = 1
    for _ in range(d - 1):
        v = mat_vec(adj.matrix, v)
    return v[index[sigma]]


def generating_series(source) -> RationalFunction:
    """F(t) = sum_{d >= 0} b(d) t^d."""
    adjp = _adjp(source)
    y, z = boundary_vectors(adjp.rank)
    return solve_rational_series(adjp.matrix, y, z)


@dataclass
class Verdict:
    divides: bool
    quotient: Polynomial | None
    remainder: Polynomial | None
    small: Polynomial
    large: Polynomial


def divisibility_verdict(family: str, n: int, m: int | None = None, **kw) -> Verdict:
    """Does chi of rank n divide chi of rank m (default n + 1)?"""
    m = n + 1 if m is None else m
    small = charpoly_full(make_group(family, n, **kw))
    large = charpoly_full(make_group(family, m, **kw))
    ok, quot = poly_divides(small, large)
    rem = None if ok else poly_divmod(large, small)[1]
    return Verdict(ok, quot, rem, small, large)


# ---------------------------------------------------------------- cache

def cache_key(family: str, rank: int | None = None) -> str:
    fam, n = parse_type(family, rank)
    return f"adjp-{fam}{n}.json"


def dump_descent_class_matrix(adjp: DescentClassMatrix) -> str:
    return json.dumps(adjp.to_json(), separators=(",", ":")) + "\n"
