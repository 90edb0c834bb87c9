"""
The Hopf algebra of signed permutations: shuffle and convolution products,
coproduct, the special vectors I, J, P, Q, the endomorphism Phi and the
derivation partial, plus finite-rank verification of their identities.

Basis elements are windows (tuples); the empty tuple is the rank-0 unit.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .exact import matrix_rank_exact
from .signed import (all_windows, delete, descent_set, format_window, inverse, is_window,
                     shift, sign_at, std)

Window = tuple[int, ...]
SignFunction = Callable[[Sequence[int], int], int]


class PermVector:
    """Finitely supported rational combination of signed permutations."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Window, object] | Iterable[tuple[Window, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Window, Fraction] = {}
        for w, c in items:
            w = tuple(w)
            acc[w] = acc.get(w, Fraction(0)) + Fraction(c)
        self._terms = {w: c for w, c in acc.items() if c}

    @classmethod
    def basis(cls, sigma: Sequence[int], coeff=1) -> PermVector:
        if not is_window(sigma):
            raise ValueError(f"{tuple(sigma)} is not a signed permutation window")
        return cls({tuple(sigma): coeff})

    @classmethod
    def sum_of(cls, windows: Iterable[Sequence[int]]) -> PermVector:
        return cls((w, 1) for w in windows)

    @property
    def terms(self) -> dict[Window, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, sigma: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(sigma), Fraction(0))

    def ranks(self) -> set[int]:
        return {len(w) for w in self._terms}

    def rank(self) -> int | None:
        """The common rank, or None for the zero vector; mixed ranks are an error."""
        ranks = self.ranks()
        if len(ranks) > 1:
            raise ValueError(f"inhomogeneous vector with ranks {sorted(ranks)}")
        return next(iter(ranks), None)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Window]:
        return iter(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PermVector):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: PermVector) -> PermVector:
        if not isinstance(other, PermVector):
            return NotImplemented
        return PermVector(itertools.chain(self._terms.items(), other._terms.items()))

    def __neg__(self) -> PermVector:
        return PermVector({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: PermVector) -> PermVector:
        return self + (-other)

    def __mul__(self, scalar) -> PermVector:
        if isinstance(scalar, PermVector):
            return NotImplemented
        s = Fraction(scalar)
        return PermVector({w: c * s for w, c in self._terms.items()})

    __rmul__ = __mul__

    def sorted_items(self) -> list[tuple[Window, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for w, c in self.sorted_items():
            name = format_window(w) if w else "∅"
            if c == 1:
                parts.append(f"+ {name}")
            elif c == -1:
                parts.append(f"- {name}")
            else:
                parts.append(f"{'-' if c < 0 else '+'} {abs(c)}*{name}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def to_json(self) -> list[dict]:
        return [{"window": list(w), "coeff": str(c)} for w, c in self.sorted_items()]


def _as_vector(x) -> PermVector:
    return x if isinstance(x, PermVector) else PermVector.basis(x)


def _bilinear(basis_op: Callable[[Window, Window], Iterable[Window]], a, b) -> PermVector:
    a, b = _as_vector(a), _as_vector(b)
    acc: dict[Window, Fraction] = {}
    for u, cu in a.items():
        for v, cv in b.items():
            c = cu * cv
            for w in basis_op(u, v):
                acc[w] = acc.get(w, Fraction(0)) + c
    return PermVector(acc)


# ---------------------------------------------------------------- products

def x_shuffle(u: Sequence[int], v: Sequence[int], positions: Iterable[int]) -> Window:
    """Place u at the (1-based) positions, and v shifted by len(u) everywhere else."""
    k, n = len(u), len(u) + len(v)
    chosen = sorted(positions)
    if len(chosen) != k or len(set(chosen)) != k or any(not 1 <= p <= n for p in chosen):
        raise ValueError(f"positions {chosen} are not a {k}-subset of [1, {n}]")
    out: list[int] = []
    us, vs = iter(u), iter(shift(v, k))
    slots = set(chosen)
    for p in range(1, n + 1):
        out.append(next(us) if p in slots else next(vs))
    return tuple(out)


@lru_cache(maxsize=None)
def _shuffle_basis(u: Window, v: Window) -> tuple[Window, ...]:
    n = len(u) + len(v)
    return tuple(x_shuffle(u, v, xs) for xs in itertools.combinations(range(1, n + 1), len(u)))


def shuffle(a, b) -> PermVector:
    """The shuffle product, bilinear; windows are promoted to basis vectors."""
    return _bilinear(_shuffle_basis, a, b)


def _place(sigma: Window, values: Sequence[int]) -> Window:
    return tuple(values[x - 1] if x > 0 else -values[-x - 1] for x in sigma)


@lru_cache(maxsize=None)
def _convolution_basis(u: Window, v: Window) -> tuple[Window, ...]:
    n = len(u) + len(v)
    out = []
    for prefix in itertools.combinations(range(1, n + 1), len(u)):
        rest = [x for x in range(1, n + 1) if x not in prefix]
        out.append(_place(u, prefix) + _place(v, rest))
    return tuple(out)


def convolution(a, b) -> PermVector:
    """The product * dual to the coproduct: prefix and suffix standardize to the factors."""
    return _bilinear(_convolution_basis, a, b)


def coproduct(sigma: Sequence[int]) -> list[tuple[Window, Window, Fraction]]:
    sigma = tuple(sigma)
    return [(std(sigma[:k]), std(sigma[k:]), Fraction(1)) for k in range(len(sigma) + 1)]


def coproduct_vector(v: PermVector) -> list[tuple[Window, Window, Fraction]]:
    acc: dict[tuple[Window, Window], Fraction] = {}
    for sigma, c in v.items():
        for left, right, d in coproduct(sigma):
            acc[left, right] = acc.get((left, right), Fraction(0)) + c * d
    return [(left, right, c) for (left, right), c in sorted(acc.items()) if c]


def iota(v) -> PermVector:
    return PermVector((inverse(w), c) for w, c in _as_vector(v).items())


def pairing(a: PermVector, b: PermVector) -> Fraction:
    return sum((c * b.coefficient(w) for w, c in a.items()), Fraction(0))


# ---------------------------------------------------------------- special vectors

@dataclass(frozen=True)
class SpecialVectors:
    I: PermVector
    J: PermVector
    P: PermVector
    Q: PermVector


def identity_vector(n: int) -> PermVector:
    return PermVector.basis(tuple(range(1, n + 1)))


def j_vector(n: int) -> PermVector:
    return PermVector.basis(tuple(range(-n, 0)))


def p_vector(n: int) -> PermVector:
    return phi_tilde(0b1 if n else 0, n)


def q_vector(n: int) -> PermVector:
    return PermVector.sum_of(w for w in all_windows(n) if descent_set(w) & ~1 == 0)


def special_vectors(n: int) -> SpecialVectors:
    if n < 0:
        raise ValueError("rank must be >= 0")
    return SpecialVectors(identity_vector(n), j_vector(n), p_vector(n), q_vector(n))


# ---------------------------------------------------------------- Phi

def _mask(d: int | Iterable[int]) -> int:
    if isinstance(d, int):
        return d
    mask = 0
    for i in d:
        mask |= 1 << i
    return mask


@lru_cache(maxsize=None)
def _phi_tilde_windows(mask: int, n: int) -> tuple[Window, ...]:
    return tuple(w for w in all_windows(n) if descent_set(inverse(w)) & ~mask == 0)


def phi_tilde(d: int | Iterable[int], n: int) -> PermVector:
    """Sum of tau of rank n with Des(tau^-1) inside d (bitmask or iterable)."""
    mask = _mask(d)
    if mask >> n if n else mask:
        raise ValueError(f"descent set {mask:b} does not fit rank {n}")
    return PermVector.sum_of(_phi_tilde_windows(mask, n))


def phi(v) -> PermVector:
    acc: dict[Window, Fraction] = {}
    for sigma, c in _as_vector(v).items():
        for w in _phi_tilde_windows(descent_set(sigma), len(sigma)):
            acc[w] = acc.get(w, Fraction(0)) + c
    return PermVector(acc)


def block_sizes(mask: int, n: int) -> list[int]:
    """Sizes of the blocks cut by the nonzero elements of the descent set; they sum to n."""
    cuts = [d for d in range(1, n) if mask >> d & 1]
    bounds = [0] + cuts + [n]
    return [b - a for a, b in zip(bounds, bounds[1:])]


def phi_tilde_product(d: int | Iterable[int], n: int) -> PermVector:
    """Phi~(D) as I_{k1} (or P_{k1} when 0 is in D) shuffled with P_{k2}, ..., P_{kl}."""
    mask = _mask(d)
    sizes = block_sizes(mask, n)
    first = p_vector if mask & 1 else identity_vector
    acc = first(sizes[0])
    for k in sizes[1:]:
        acc = shuffle(acc, p_vector(k))
    return acc


def phi_matrix(n: int, order: Sequence[Window] | None = None) -> list[list[int]]:
    """Column sigma holds the coordinates of Phi(sigma)."""
    elems = list(order or all_windows(n))
    cols = [phi(s) for s in elems]
    return [[int(col.coefficient(t)) for col in cols] for t in elems]


# ---------------------------------------------------------------- derivation

def partial_i(sigma: Sequence[int], i: int, sign: SignFunction = sign_at) -> PermVector:
    sigma = tuple(sigma)
    if not 1 <= i <= len(sigma):
        raise ValueError(f"index {i} out of range for rank {len(sigma)}")
    s = sign(sigma, i)
    return PermVector({delete(sigma, i): s}) if s else PermVector()


def partial(v, sign: SignFunction = sign_at) -> PermVector:
    v = _as_vector(v)
    acc: dict[Window, Fraction] = {}
    for sigma, c in v.items():
        if not sigma:
            raise ValueError("the derivation is not defined on rank 0")
        for i in range(1, len(sigma) + 1):
            s = sign(sigma, i)
            if s:
                w = delete(sigma, i)
                acc[w] = acc.get(w, Fraction(0)) + c * s
    return PermVector(acc)


def faulty_sign(word: Sequence[int], i: int) -> int:
    """Fault-injection variant: the right-hand sentinel is +infinity instead of -infinity."""
    j = next(k for k, x in enumerate(word) if abs(x) == i)
    if j + 1 < len(word):
        return sign_at(word, i)
    left = 1 if (word[j - 1] if j else 0) < word[j] else -1
    return (left + 1) // 2


def partial_matrix(n: int, source: Sequence[Window] | None = None,
                   target: Sequence[Window] | None = None) -> list[list[Fraction]]:
    """Matrix of the derivation from rank n to rank n - 1 (rows: target basis)."""
    src = list(source or all_windows(n))
    tgt = list(target or all_windows(n - 1))
    cols = [partial(s) for s in src]
    return [[col.coefficient(t) for col in cols] for t in tgt]


def descent_linear(v) -> dict[int, Fraction]:
    """Des extended linearly; keys are descent bitmasks."""
    acc: dict[int, Fraction] = {}
    for sigma, c in _as_vector(v).items():
        d = descent_set(sigma)
        acc[d] = acc.get(d, Fraction(0)) + c
    return {d: c for d, c in acc.items() if c}


# ---------------------------------------------------------------- verification

@dataclass
class Report:
    check: str
    rank: int
    status: str = "pass"
    counterexample: list | None = None
    detail: str | None = None
    cases: int = 0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def fail(self, counterexample: list, detail: str) -> Report:
        self.status = "fail"
        self.counterexample = counterexample
        self.detail = detail
        return self

    def to_json(self) -> dict:
        doc = {"check": self.check, "rank": self.rank, "status": self.status,
               "cases": self.cases}
        if self.counterexample is not None:
            doc["counterexample"] = [format_window(w) for w in self.counterexample]
        if self.detail:
            doc["detail"] = self.detail
        return doc


def verify_leibniz(k: int, l: int, trials: int | None = None, seed: int = 0,
                   sign: SignFunction = sign_at) -> Report:
    """Leibniz rule and its per-letter refinement on pairs of ranks (k, l).

    Exhaustive when trials is None, otherwise `trials` random pairs.
    """
    report = Report("leibniz", k + l)
    left, right = all_windows(k), all_windows(l)
    if trials is None:
        pairs: Iterable = itertools.product(left, right)
    else:
        rng = random.Random(seed)
        pairs = [(rng.choice(left), rng.choice(right)) for _ in range(trials)]
    for sigma, tau in pairs:
        report.cases += 1
        prod = shuffle(sigma, tau)
        for i in range(1, k + l + 1):
            lhs = _sum(partial_i(w, i, sign) * c for w, c in prod.items())
            if i <= k:
                rhs = shuffle(partial_i(sigma, i, sign), tau)
            else:
                rhs = shuffle(sigma, partial_i(tau, i - k, sign))
            if lhs != rhs:
                return report.fail([sigma, tau], f"letter {i} fails the per-letter rule")
        lhs = partial(prod, sign)
        rhs = shuffle(partial(sigma, sign), tau) + shuffle(sigma, partial(tau, sign))
        if lhs != rhs:
            return report.fail([sigma, tau], "Leibniz rule fails")
    return report


def _sum(vectors: Iterable[PermVector]) -> PermVector:
    acc = PermVector()
    for v in vectors:
        acc = acc + v
    return acc


def verify_leibniz_suite(max_total: int = 6, exhaustive_total: int = 4, trials: int = 200,
                         seed: int = 0, sign: SignFunction = sign_at) -> list[Report]:
    reports = []
    for total in range(2, max_total + 1):
        for k in range(1, total):
            t = None if total <= exhaustive_total else trials
            reports.append(verify_leibniz(k, total - k, t, seed + 7919 * total + k, sign))
    return reports


def verify_commutation(n: int, sign: SignFunction = sign_at) -> Report:
    report = Report("commutation", n)
    for sigma in all_windows(n):
        report.cases += 1
        if partial(phi(sigma), sign) != phi(partial(sigma, sign)):
            return report.fail([sigma], "partial(Phi(sigma)) != Phi(partial(sigma))")
    return report


def verify_surjectivity(n: int) -> Report:
    """The derivation from rank n + 1 onto rank n has rank 2^n n!."""
    report = Report("surjectivity", n)
    m = partial_matrix(n + 1)
    r = matrix_rank_exact(m)
    report.cases = len(m[0]) if m else 0
    expected = len(all_windows(n))
    if r != expected:
        return report.fail([], f"rank {r}, expected {expected}")
    report.detail = f"rank {r}"
    return report


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    for cut in range(1 << max(n - 1, 0)):
        parts, last = [], 0
        for d in range(1, n):
            if cut >> (d - 1) & 1:
                parts.append(d - last)
                last = d
        parts.append(n - last)
        yield tuple(parts)


def _fold(op, vectors: Sequence[PermVector]) -> PermVector:
    acc = vectors[0]
    for v in vectors[1:]:
        acc = op(acc, v)
    return acc


def verify_product_lemmas(n: int) -> Report:
    """Descent-class sums as products of I, P, Q, the P = sum J shuffle I identity,
    and the shuffle formula for Phi~, over every composition of n."""
    report = Report("product-lemmas", n)
    elems = all_windows(n)
    for comp in compositions(n):
        report.cases += 1
        d = 0
        acc = 0
        for k in comp[:-1]:
            acc += k
            d |= 1 << acc
        qs = [q_vector(k) for k in comp]
        ps = [p_vector(k) for k in comp]
        expected = {
            "Q*...*Q": PermVector.sum_of(w for w in elems if descent_set(w) & ~(d | 1) == 0),
            "I*Q*...*Q": PermVector.sum_of(w for w in elems if descent_set(w) & ~d == 0),
            "P sh ... sh P": phi_tilde(d | 1, n),
            "I sh P sh ... sh P": phi_tilde(d, n),
        }
        computed = {
            "Q*...*Q": _fold(convolution, qs),
            "I*Q*...*Q": _fold(convolution, [identity_vector(comp[0])] + qs[1:]),
            "P sh ... sh P": _fold(shuffle, ps),
            "I sh P sh ... sh P": _fold(shuffle, [identity_vector(comp[0])] + ps[1:]),
        }
        for name, value in computed.items():
            if value != expected[name]:
                return report.fail([], f"{name} fails for composition {comp}")
    pj = _sum(shuffle(j_vector(k), identity_vector(n - k)) for k in range(n + 1))
    if pj != p_vector(n):
        return report.fail([], "P_n != sum of J_k shuffle I_(n-k)")
    for mask in range(1 << n):
        if phi_tilde_product(mask, n) != phi_tilde(mask, n):
            return report.fail([], f"product formula for Phi~ fails at descent mask {mask:b}")
    return report


def verify_derivative_identities(n: int, sign: SignFunction = sign_at) -> Report:
    """partial(I_n) = (n-1) I_(n-1), partial(J_n) = (n-2) J_(n-1), partial(P_n) = (n-2) P_(n-1)."""
    report = Report("derivative-identities", n)
    cases = [("I", identity_vector, n - 1), ("J", j_vector, n - 2), ("P", p_vector, n - 2)]
    for name, make, factor in cases:
        report.cases += 1
        if partial(make(n), sign) != make(n - 1) * factor:
            return report.fail([], f"partial({name}_{n}) != {factor} {name}_{n - 1}")
    return report


def deletion_descents(sigma: Sequence[int], i: int) -> int:
    """Predicted Des(del_{|sigma(i)|}(sigma)) from Des(sigma) and the neighbours of position i."""
    n = len(sigma)
    des = descent_set(sigma)
    d = 0
    for k in range(n):
        if des >> k & 1:
            if k <= i - 2:
                d |= 1 << k
            elif k >= i + 1:
                d |= 1 << (k - 1)
    if i < n:
        before = sigma[i - 2] if i >= 2 else 0
        if before > sigma[i]:
            d |= 1 << (i - 1)
    return d


def verify_deletion_descents(n: int) -> Report:
    report = Report("deletion-descents", n)
    for sigma in all_windows(n):
        for i in range(1, n + 1):
            report.cases += 1
            actual = descent_set(delete(sigma, abs(sigma[i - 1])))
            if actual != deletion_descents(sigma, i):
                return report.fail([sigma], f"position {i}")
    return report


def lower_from(mask: int, k: int) -> int:
    """Keep the elements below k and lower every element >= k by one."""
    low = mask & ((1 << k) - 1)
    return low | (mask >> k << (k - 1)) if k else mask >> 1


def block_descent_terms(sigma: Sequence[int]) -> list[tuple[int, int, dict[int, Fraction], dict[int, Fraction]]]:
    """For each block (a, b] between consecutive nonzero descents (the first block
    starts at 0, the last ends at n): the actual Des of the summed derivative
    terms, and the prediction coeff * lower_from(Des sigma, b) restricted to rank n - 1."""
    n = len(sigma)
    des = descent_set(sigma)
    bounds = [0] + [d for d in range(1, n) if des >> d & 1] + [n]
    out = []
    for a, b in zip(bounds, bounds[1:]):
        terms = _sum(partial_i(sigma, abs(sigma[e - 1])) for e in range(a + 1, b + 1))
        actual = descent_linear(terms)
        if a == 0:
            coeff = b - 2 if des & 1 else b - 1
        else:
            coeff = b - a - 2
        target = lower_from(des, b) & ((1 << (n - 1)) - 1)
        predicted = {target: Fraction(coeff)} if coeff else {}
        out.append((a, b, actual, predicted))
    return out


def verify_descent_blocks(n: int) -> Report:
    report = Report("descent-blocks", n)
    for sigma in all_windows(n):
        for a, b, actual, predicted in block_descent_terms(sigma):
            report.cases += 1
            if actual != predicted:
                return report.fail([sigma], f"block ({a}, {b}]")
    return report


CHECKS = ("leibniz", "commutation", "surjectivity", "product-lemmas",
          "derivative-identities", "deletion-descents", "descent-blocks")


def run_suite(max_rank: int = 3, checks: Iterable[str] | None = None,
              sign: SignFunction = sign_at, seed: int = 0) -> list[Report]:
    """Run the selected checks at every rank up to max_rank."""
    selected = list(checks or CHECKS)
    unknown = set(selected) - set(CHECKS)
    if unknown:
        raise ValueError(f"unknown checks {sorted(unknown)}; choose from {list(CHECKS)}")
    reports: list[Report] = []
    for name in selected:
        if name == "leibniz":
            reports += verify_leibniz_suite(max_total=max_rank, sign=sign, seed=seed)
        for n in range(1, max_rank + 1):
            if name == "commutation":
                reports.append(verify_commutation(n, sign))
            elif name == "surjectivity" and n < max_rank:
                reports.append(verify_surjectivity(n))
            elif name == "product-lemmas":
                reports.append(verify_product_lemmas(n))
            elif name == "derivative-identities":
                reports.append(verify_derivative_identities(n, sign))
            elif name == "deletion-descents":
                reports.append(verify_deletion_descents(n))
            elif name == "descent-blocks":
                reports.append(verify_descent_blocks(n))
    return reports
