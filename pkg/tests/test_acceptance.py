"""
Acceptance criteria, one test each. Every test prints a single PASS/FAIL line to
the terminal before asserting, so `pytest -v` shows the verdicts even when
output is captured. Comparisons are exact; runtime limits are wall-clock.
"""

from __future__ import annotations

import random
import time

import pytest

from garside import bfqsym, fixtures
from garside.coxeter import make_group
from garside.exact import Polynomial, charpoly, series_coeffs
from garside.normal_form import (is_normal_sequence, left_normal_form, parse_braid_word)
from garside.signed import HyperoctahedralGroup, format_window
from garside.spectra import (build_descent_class_matrix, build_full_adjacency, charpoly_full,
                             count_braids, count_sequence, divisibility_verdict,
                             generating_series)

X = Polynomial.x()


@pytest.fixture
def report(capsys):
    def emit(number: int, ok: bool, summary: str) -> None:
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {summary}")
        assert ok, summary
    return emit


def test_criterion_01_golden_matrix(report):
    start = time.perf_counter()
    adj = build_full_adjacency(HyperoctahedralGroup(2), fixtures.b2_order())
    elapsed = time.perf_counter() - start
    ok = adj.matrix == fixtures.load()["b2_adjacency"] and elapsed < 1
    report(1, ok, f"B2 8x8 adjacency in reference order, {elapsed:.3f} s")


def test_criterion_02_count_tables(report):
    start = time.perf_counter()
    mismatched, shifted_ok = [], []
    for tag in ("B2", "B3", "B4", "D2", "D3", "D4"):
        printed = [int(v) for v in fixtures.load()["counts"][tag]["values"]]
        adjp = build_descent_class_matrix(make_group(tag))
        computed = [count_braids(adjp, d) for d in range(6)]
        if computed != printed:
            mismatched.append(tag)
            if count_sequence(adjp, 6)[1:] == printed:
                shifted_ok.append(tag)
    elapsed = time.perf_counter() - start
    ok = not mismatched and elapsed < 5
    detail = (f"columns {mismatched} differ at their printed labels"
              f" (rows {shifted_ok} hold b(d+1))" if mismatched else "all columns match")
    report(2, ok, f"count tables d <= 5: {detail}; count_braids(B4, 5) = "
                  f"{count_braids(build_descent_class_matrix(make_group('B4')), 5)}, "
                  f"{elapsed:.2f} s")


def test_criterion_03_closed_form(report):
    adjp = build_descent_class_matrix(HyperoctahedralGroup(2))
    ok = all(count_braids(adjp, d) == 3 ** (d + 1) - 2 for d in range(16))
    report(3, ok, "count_braids(B2, d) = 3^(d+1) - 2 for d <= 15")


def test_criterion_04_charpolys(report):
    failures = []
    e6_time = None
    for tag in fixtures.CHARPOLY_TAGS:
        start = time.perf_counter()
        computed = charpoly_full(make_group(tag))
        if tag == "E6":
            e6_time = time.perf_counter() - start
        if computed != fixtures.expected_charpoly(tag):
            failures.append(tag)
    ok = not failures and e6_time < 300
    report(4, ok, f"{len(fixtures.CHARPOLY_TAGS) - len(failures)}/{len(fixtures.CHARPOLY_TAGS)} "
                  f"printed polynomials reproduced; mismatches {failures}; E6 {e6_time:.1f} s")


def test_criterion_05_divisibility(report):
    start = time.perf_counter()
    b_ok = [divisibility_verdict("B", n).divides for n in range(1, 5)]
    d5 = divisibility_verdict("D", 4).divides
    d6_start = time.perf_counter()
    d6 = divisibility_verdict("D", 4, 6).divides
    d6_time = time.perf_counter() - d6_start
    ok = all(b_ok) and not d5 and not d6 and d6_time < 60
    report(5, ok, f"B_n | B_(n+1) for n=1..4: {b_ok}; D4 | D5: {d5}; D4 | D6: {d6} "
                  f"({d6_time:.1f} s); total {time.perf_counter() - start:.1f} s")


def test_criterion_06_series(report):
    failures, offset_only = [], []
    reexpansion = True
    for tag in fixtures.SERIES_TAGS:
        adjp = build_descent_class_matrix(make_group(tag))
        computed = generating_series(adjp)
        printed, offset = fixtures.expected_series(tag)
        if computed != printed:
            failures.append(tag)
            if offset and fixtures.shifted(computed) == printed:
                offset_only.append(tag)
        reexpansion &= series_coeffs(computed, 13) == count_sequence(adjp, 12)
    ok = not failures and reexpansion
    report(6, ok, f"mismatches {failures} (of which {offset_only} equal the printed form of "
                  f"sum b(d+1) t^d); re-expansion to d = 12 {'ok' if reexpansion else 'broken'}")


def test_criterion_07_compression(report):
    bad = []
    for tag in ("A1", "A2", "A3", "B2", "B3", "D3", "I5", "I6", "I7"):
        group = make_group(tag)
        full = build_full_adjacency(group)
        reduced = build_descent_class_matrix(group)
        k = len(full.elements) - reduced.size
        if charpoly(full.matrix) != X ** k * charpoly(reduced.matrix):
            bad.append(tag)
    report(7, not bad, f"chi(Adj) = x^k chi(Adj') for 9 types; failures {bad}")


def _braid_variants(m, word):
    out = []
    for s in range(len(m)):
        for t in range(len(m)):
            k = m[s][t]
            if s == t:
                continue
            pattern = ([s, t] * k)[:k]
            for pos in range(len(word) - k + 1):
                if word[pos:pos + k] == pattern:
                    out.append(word[:pos] + ([t, s] * k)[:k] + word[pos + k:])
    return out


def test_criterion_08_normal_form(report):
    start = time.perf_counter()
    b2 = HyperoctahedralGroup(2)
    nf = fixtures.load()["normal_form"]
    factors = [format_window(f) for f in left_normal_form(b2, parse_braid_word(nf["word"], 2))]
    example_ok = factors == nf["factors"]

    from garside.coxeter import coxeter_graph
    rng = random.Random(8)
    tags = ["A1", "A2", "A3", "A4", "B1", "B2", "B3", "B4", "D2", "D3", "D4"]
    groups = {t: make_group(t) for t in tags}
    graphs = {t: coxeter_graph(t[0], int(t[1:])).m for t in tags}
    bad = 0
    for _ in range(10 ** 4):
        tag = rng.choice(tags)
        group = groups[tag]
        word = [rng.randrange(group.rank) for _ in range(rng.randrange(16))]
        nfw = left_normal_form(group, word)
        flat = [i for f in nfw for i in group.reduced_word(f)]
        good = (is_normal_sequence(group, nfw)
                and sum(group.length(f) for f in nfw) == len(word)
                and left_normal_form(group, flat) == nfw
                and all(left_normal_form(group, v) == nfw for v in _braid_variants(graphs[tag], word)))
        bad += not good
    elapsed = time.perf_counter() - start
    ok = example_ok and bad == 0 and elapsed < 30
    report(8, ok, f"word {nf['word']!r} gives {factors} (expected {nf['factors']}); "
                  f"{bad} property failures on 10^4 words; {elapsed:.1f} s")


def test_criterion_09_hopf_fixtures(report):
    items = fixtures.hopf_comparisons()
    bad = [c.item for c in items if not c.ok]
    report(9, not bad, f"{len(items) - len(bad)}/{len(items)} printed Hopf examples match")


def test_criterion_10_hopf_theorems(report):
    start = time.perf_counter()
    reports = bfqsym.verify_leibniz_suite(max_total=6, exhaustive_total=4)
    reports += [bfqsym.verify_commutation(n) for n in range(1, 5)]
    reports += [bfqsym.verify_surjectivity(n) for n in range(1, 4)]
    reports += [bfqsym.verify_product_lemmas(n) for n in range(1, 6)]
    reports += [bfqsym.verify_derivative_identities(n) for n in range(1, 7)]
    elapsed = time.perf_counter() - start
    bad = [f"{r.check}@{r.rank}" for r in reports if not r.passed]
    ok = not bad and elapsed < 300
    report(10, ok, f"{len(reports)} finite verifications, failures {bad}, {elapsed:.1f} s")


def test_criterion_11_oracle_equivalence(report):
    bad = []
    for n in range(1, 5):
        engine, model = make_group(f"B{n}"), HyperoctahedralGroup(n)
        for w in model.elements():
            v = engine.from_word(model.reduced_word(w))
            if (engine.length(v), engine.descents(v), engine.left_descents(v)) != \
                    (model.length(w), model.descents(w), model.left_descents(w)):
                bad.append(format_window(w))
        if build_descent_class_matrix(engine).matrix != build_descent_class_matrix(model).matrix:
            bad.append(f"Adj' B{n}")
    report(11, not bad, f"window model equals root engine for B1..B4; mismatches {bad[:5]}")
