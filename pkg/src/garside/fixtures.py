"""
Published reference values (characteristic polynomials in factored form, generating
series, count tables, Hopf algebra examples) and the comparisons against them.

Factors are stored as [multiplicity, descending coefficients]. Series with
offset 1 are printed as sum b(d+1) t^d rather than sum b(d) t^d; count columns
with offset 1 start at d = 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .coxeter import make_group
from .exact import Polynomial, RationalFunction
from .signed import parse_window
from .spectra import (DescentClassMatrix, build_descent_class_matrix, charpoly_full,
                      count_sequence, generating_series)


@lru_cache(maxsize=1)
def load() -> dict:
    with resources.files("garside").joinpath("data/reference.json").open(encoding="utf-8") as fh:
        return json.load(fh)


def expand(factors: list) -> Polynomial:
    out = Polynomial([1])
    for mult, coeffs in factors:
        out = out * Polynomial.from_descending([int(c) for c in coeffs]) ** int(mult)
    return out


def dihedral_charpoly(m: int) -> Polynomial:
    x = Polynomial.x()
    if m % 2 == 0:
        return Polynomial.monomial(2 * m - 4) * (x - 1) ** 3 * (x - (m - 1))
    return Polynomial.monomial(2 * m - 3) * (x - 1) ** 2 * (x - (m - 1))


def dihedral_series(m: int) -> RationalFunction:
    t = Polynomial.x()
    return RationalFunction(t * (m - 1) + 1, (t * (m - 1) - 1) * (t - 1))


def _entry(section: str, tag: str, corrected: bool) -> dict:
    data = load()
    if corrected and tag in data["corrections"][section]:
        return data["corrections"][section][tag]
    return data[section][tag]


def expected_charpoly(tag: str, corrected: bool = False) -> Polynomial:
    """The printed polynomial; with corrected=True, known misprints are replaced."""
    if tag.startswith("I"):
        return dihedral_charpoly(int(tag[1:]))
    entry = _entry("charpolys", tag, corrected)
    base = expected_charpoly(entry["extends"], corrected) if "extends" in entry else Polynomial([1])
    return base * expand(entry["factors"])


def expected_series(tag: str, corrected: bool = False) -> tuple[RationalFunction, int]:
    if tag.startswith("I"):
        return dihedral_series(int(tag[1:])), 0
    entry = _entry("series", tag, corrected)
    return RationalFunction(expand(entry["num"]), expand(entry["den"])), entry["offset"]


def corrected_tags() -> dict[str, list[str]]:
    corr = load()["corrections"]
    return {section: sorted(corr[section]) for section in ("charpolys", "series")}


def shifted(f: RationalFunction) -> RationalFunction:
    """(F - 1) / t for a series with F(0) = 1."""
    top = f.num - f.den
    if top[0] != 0:
        raise ValueError("series does not start with 1")
    return RationalFunction(Polynomial(top.coeffs[1:]), f.den)


def b2_order() -> list[tuple[int, ...]]:
    return [parse_window(w) for w in load()["b2_order"]]


@dataclass
class Comparison:
    item: str
    ok: bool
    expected: object
    computed: object

    def to_json(self) -> dict:
        return {"item": self.item, "status": "pass" if self.ok else "fail",
                "expected": _text(self.expected), "computed": _text(self.computed)}


def _text(value) -> object:
    if isinstance(value, list):
        return [str(v) for v in value]
    return str(value)


def _adjp(tag: str, provider) -> DescentClassMatrix:
    if provider is not None:
        return provider(tag)
    return build_descent_class_matrix(make_group(tag))


def compare_charpoly(tag: str, provider=None, corrected: bool = False) -> Comparison:
    computed = charpoly_full(_adjp(tag, provider))
    expected = expected_charpoly(tag, corrected)
    return Comparison(f"charpoly {tag}", computed == expected, expected, computed)


def compare_series(tag: str, provider=None, corrected: bool = False) -> Comparison:
    expected, offset = expected_series(tag, corrected)
    computed = generating_series(_adjp(tag, provider))
    if offset:
        computed = shifted(computed)
    return Comparison(f"series {tag}", computed == expected, expected, computed)


def compare_counts(tag: str, provider=None) -> Comparison:
    entry = load()["counts"][tag]
    expected = [int(v) for v in entry["values"]]
    offset = entry["offset"]
    seq = count_sequence(_adjp(tag, provider), offset + len(expected) - 1)
    computed = seq[offset:]
    return Comparison(f"counts {tag}", computed == expected, expected, computed)


CHARPOLY_TAGS = ["B1", "B2", "B3", "B4", "B5", "D1", "D2", "D3", "D4", "D5"] + \
    [f"I{m}" for m in range(2, 11)] + ["F4", "H3", "H4", "E6"]
SERIES_TAGS = ["B2", "B3", "D2", "D3", "D4"] + [f"I{m}" for m in range(2, 11)] + \
    ["F4", "H3", "H4", "E6"]
COUNT_TAGS = ["B2", "B3", "B4", "D2", "D3", "D4", "F4", "H3", "H4", "E6"]


def all_comparisons(provider=None, skip: set[str] = frozenset(),
                    corrected: bool = False) -> list[Comparison]:
    """Every stored table item; `provider` maps a type tag to its descent-class matrix."""
    out = []
    for tag in CHARPOLY_TAGS:
        if tag not in skip:
            out.append(compare_charpoly(tag, provider, corrected))
    for tag in SERIES_TAGS:
        if tag not in skip:
            out.append(compare_series(tag, provider, corrected))
    for tag in COUNT_TAGS:
        if tag not in skip:
            out.append(compare_counts(tag, provider))
    return out


def _windows(rows) -> set[tuple[int, ...]]:
    return {tuple(r) for r in rows}


def hopf_comparisons() -> list[Comparison]:
    from . import bfqsym
    from .signed import dec, delete, descent_set, shift, sign_at

    h = load()["hopf"]
    out = []

    def add(item, expected, computed):
        out.append(Comparison(item, expected == computed, expected, computed))

    add("shift", tuple(h["shift"]["result"]), shift(h["shift"]["word"], h["shift"]["k"]))
    add("dec", tuple(h["dec"]["result"]), dec(h["dec"]["word"], h["dec"]["k"]))
    for ex in h["x_shuffle"]:
        add(f"x-shuffle {ex['positions']}", tuple(ex["result"]),
            bfqsym.x_shuffle(ex["u"], ex["v"], ex["positions"]))
    for name, op in (("shuffle", bfqsym.shuffle), ("convolution", bfqsym.convolution)):
        ex = h[name]
        add(name, bfqsym.PermVector.sum_of(ex["terms"]), op(tuple(ex["left"]), tuple(ex["right"])))
    ex = h["coproduct"]
    add("coproduct", [(tuple(a), tuple(b)) for a, b in ex["terms"]],
        [(a, b) for a, b, _ in bfqsym.coproduct(ex["sigma"])])
    add("P2", bfqsym.PermVector.sum_of(h["P2"]), bfqsym.p_vector(2))
    add("Q2", bfqsym.PermVector.sum_of(h["Q2"]), bfqsym.q_vector(2))
    add("P4", bfqsym.PermVector.sum_of(h["P4"]), bfqsym.p_vector(4))
    word = tuple(h["word"])
    add("descent set", sum(1 << d for d in h["descents"]), descent_set(word))
    for i, s in h["signs"].items():
        add(f"sign {i}", s, sign_at(word, int(i)))
    for i, w in h["deletions"].items():
        add(f"del {i}", tuple(w), delete(word, int(i)))
    add("derivative", bfqsym.PermVector((tuple(w), int(c)) for w, c in h["derivative"]),
        bfqsym.partial(word))
    dm = h["derivative_matrix"]
    computed = bfqsym.partial_matrix(2, [parse_window(w) for w in dm["source"]],
                                     [parse_window(w) for w in dm["target"]])
    add("derivative matrix", dm["matrix"], [[int(c) for c in row] for row in computed])
    return out


def golden_comparisons(corrected: bool = False) -> list[Comparison]:
    from .normal_form import left_normal_form, parse_braid_word
    from .signed import HyperoctahedralGroup, format_window
    from .spectra import build_full_adjacency

    data = load()
    group = HyperoctahedralGroup(2)
    adj = build_full_adjacency(group, b2_order())
    out = [Comparison("adjacency B2", adj.matrix == data["b2_adjacency"],
                      data["b2_adjacency"], adj.matrix)]
    nf = data["normal_form"]
    word = data["corrections"]["normal_form"]["word"] if corrected else nf["word"]
    factors = left_normal_form(group, parse_braid_word(word, 2))
    out.append(Comparison("normal form B2", [format_window(f) for f in factors] == nf["factors"],
                          nf["factors"], [format_window(f) for f in factors]))
    return out
