from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from garside import bfqsym
from garside.bfqsym import (PermVector, convolution, coproduct, coproduct_vector, iota,
                            pairing, partial, partial_i, phi, phi_matrix, phi_tilde,
                            phi_tilde_product, shuffle, special_vectors, x_shuffle)
from garside.exact import transpose
from garside.signed import HyperoctahedralGroup, all_windows, descent_set
from garside.spectra import build_full_adjacency


def windows_of(max_n=3):
    return st.integers(min_value=0, max_value=max_n).flatmap(
        lambda n: st.sampled_from(all_windows(n)) if n else st.just(()))


def test_perm_vector_arithmetic():
    a = PermVector.sum_of([(1, 2), (-2, 1)])
    b = PermVector.basis((1, 2), 3)
    assert (a + b).coefficient((1, 2)) == 4
    assert a - a == 0
    assert 2 * a == a + a
    assert a.rank() == 2 and PermVector().rank() is None
    assert repr(a - 2 * b) == "(-2,1) - 5*(1,2)"
    assert repr(PermVector()) == "0"
    with pytest.raises(ValueError):
        PermVector.basis((1, 1))
    with pytest.raises(ValueError):
        (a + PermVector.basis((1,))).rank()
    assert a.to_json()[0]["coeff"] == "1"


def test_x_shuffle_validation():
    assert x_shuffle((1,), (1,), [2]) == (2, 1)
    with pytest.raises(ValueError):
        x_shuffle((1,), (1,), [3])


@given(windows_of(), windows_of(), windows_of(2))
def test_products_associative(a, b, c):
    assert shuffle(shuffle(a, b), c) == shuffle(a, shuffle(b, c))
    assert convolution(convolution(a, b), c) == convolution(a, convolution(b, c))


@given(windows_of(), windows_of())
def test_unit_and_sizes(a, b):
    assert shuffle(a, ()) == PermVector.basis(a) == convolution((), a)
    k, n = len(a), len(a) + len(b)
    size = 1
    for i in range(k):
        size = size * (n - i) // (i + 1)
    assert sum(shuffle(a, b).terms.values()) == size == sum(convolution(a, b).terms.values())


@given(windows_of(), windows_of())
def test_iota_exchanges_products(a, b):
    assert iota(shuffle(a, b)) == convolution(iota(a), iota(b))
    assert iota(iota(shuffle(a, b))) == shuffle(a, b)


def test_duality_convolution_coproduct():
    # <u * v, w> equals the coefficient of u (x) v in the coproduct of w
    for total in range(0, 5):
        dual: dict[tuple, dict] = {}
        for w in (all_windows(total) if total else [()]):
            for left, right, c in coproduct(w):
                dual.setdefault((left, right), {})[w] = c
        for k in range(total + 1):
            left = all_windows(k) if k else [()]
            right = all_windows(total - k) if total - k else [()]
            for u, v in itertools.product(left, right):
                assert convolution(u, v) == PermVector(dual.get((u, v), {}))


def test_pairing():
    a = PermVector.sum_of([(1, 2), (-2, 1)])
    assert pairing(a, a) == 2 and pairing(a, PermVector.basis((2, 1))) == 0


def test_coproduct_vector_merges():
    v = PermVector.sum_of([(1, 2), (2, 1)])
    terms = coproduct_vector(v)
    assert ((), (1, 2), Fraction(1)) in terms
    assert ((1,), (1,), Fraction(2)) in terms


@pytest.mark.parametrize("n", [1, 2, 3])
def test_phi_depends_only_on_descents(n):
    seen: dict[int, PermVector] = {}
    for w in all_windows(n):
        d = descent_set(w)
        assert phi(w) == phi_tilde(d, n)
        assert phi_tilde(d, n) == phi_tilde_product(d, n)
        seen.setdefault(d, phi(w))
    assert len(set(seen.values())) == 2 ** n


@pytest.mark.parametrize("n", [1, 2, 3])
def test_phi_matrix_is_adjacency_transpose(n):
    order = list(all_windows(n))
    adj = build_full_adjacency(HyperoctahedralGroup(n), order)
    assert phi_matrix(n, order) == transpose(adj.matrix)


def test_special_vectors_small():
    sv = special_vectors(1)
    assert sv.I == PermVector.basis((1,)) and sv.J == PermVector.basis((-1,))
    assert sv.P == PermVector.sum_of([(1,), (-1,)]) == sv.Q
    assert special_vectors(0).P == PermVector.basis(())
    with pytest.raises(ValueError):
        special_vectors(-1)


def test_partial_basics():
    assert partial((1,)) == PermVector.basis((), 0) == 0
    assert partial((-1,)) == PermVector.basis((), -1)
    assert partial_i((1, 2), 1) == PermVector.basis((1,))
    with pytest.raises(ValueError):
        partial_i((1, 2), 3)
    with pytest.raises(ValueError):
        partial(())


@given(windows_of(3), windows_of(3))
def test_partial_is_a_derivation(a, b):
    if not a or not b:
        return
    lhs = partial(shuffle(a, b))
    assert lhs == shuffle(partial(a), b) + shuffle(a, partial(b))


def test_hopf_fixtures():
    from garside.fixtures import hopf_comparisons
    failures = [c.item for c in hopf_comparisons() if not c.ok]
    assert failures == []


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_commutation(n):
    assert bfqsym.verify_commutation(n).passed


def test_fault_injection_is_detected():
    reports = [bfqsym.verify_commutation(n, bfqsym.faulty_sign) for n in range(1, 4)]
    assert not all(r.passed for r in reports)
    failed = next(r for r in reports if not r.passed)
    assert failed.counterexample and "counterexample" in failed.to_json()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_surjectivity(n):
    report = bfqsym.verify_surjectivity(n)
    assert report.passed and report.detail == f"rank {len(all_windows(n))}"


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_product_lemmas(n):
    assert bfqsym.verify_product_lemmas(n).passed


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_derivative_identities(n):
    assert bfqsym.verify_derivative_identities(n).passed


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_descent_lemmas(n):
    assert bfqsym.verify_deletion_descents(n).passed
    assert bfqsym.verify_descent_blocks(n).passed


def test_lower_from():
    assert bfqsym.lower_from(0b1011, 2) == 0b0111
    assert bfqsym.lower_from(0b11, 5) == 0b11


def test_compositions():
    assert sorted(bfqsym.compositions(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert list(bfqsym.compositions(1)) == [(1,)]


def test_run_suite():
    reports = bfqsym.run_suite(max_rank=3)
    assert reports and all(r.passed for r in reports)
    with pytest.raises(ValueError):
        bfqsym.run_suite(checks=["nope"])
