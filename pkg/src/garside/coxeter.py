"""
Finite Coxeter groups realized on their root systems.

A Coxeter graph is realized by a Cartan-type matrix over Z (m in {2, 3, 4, 6}) or
Z[phi] (m = 5). The positive roots are closed under the simple reflections and a
group element is stored as the tuple of root indices w(beta) for each positive
root beta. Roots are indexed 0..2N-1 where index r + N is the negative of root r
and indices 0..rank-1 are the simple roots.

Generator numbering (fixed, descent bitmasks depend on it):
  A_n  chain 0 - 1 - ... - (n-1)
  B_n  0 =4= 1 - 2 - ... - (n-1)          (node 0 is s_0, the sign change)
  D_n  0 - 2, 1 - 2, 2 - 3 - ... - (n-1)  (node 0 is s'_0, node 1 is s_1)
  E_n  Bourbaki numbering shifted by one: 0 - 2 - 3 - 4 - ..., 1 - 3
  F_4  0 - 1 =4= 2 - 3
  H_n  0 =5= 1 - 2 - ...
  I_2(m)  0 =m= 1
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import factorial
from typing import Iterator, Sequence

from .exact import GoldenNumber, PHI, sign

Element = tuple[int, ...]


class ResourceRefusal(RuntimeError):
    """Enumeration refused because it exceeds the desk-scale budget."""


class NotSphericalError(ValueError):
    pass


# ---------------------------------------------------------------- graphs

@dataclass(frozen=True)
class CoxeterGraph:
    family: str
    rank: int
    m: tuple[tuple[int, ...], ...]

    @property
    def label(self) -> str:
        if self.family == "I":
            return f"I2({self.m[0][1]})"
        return f"{self.family}{self.rank}"

    def __post_init__(self):
        n = self.rank
        if len(self.m) != n or any(len(row) != n for row in self.m):
            raise ValueError("Coxeter matrix has the wrong shape")
        for i in range(n):
            if self.m[i][i] != 1:
                raise ValueError("diagonal of a Coxeter matrix must be 1")
            for j in range(n):
                if self.m[i][j] != self.m[j][i]:
                    raise ValueError("Coxeter matrix must be symmetric")
                if i != j and self.m[i][j] < 2:
                    raise ValueError("off-diagonal orders must be >= 2")


def _from_edges(family: str, n: int, edges: dict[tuple[int, int], int]) -> CoxeterGraph:
    m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for (i, j), order in edges.items():
        m[i][j] = m[j][i] = order
    return CoxeterGraph(family, n, tuple(tuple(r) for r in m))


def coxeter_graph(family: str, rank: int) -> CoxeterGraph:
    """Standard graph for a type tag; for family "I" the second argument is m."""
    family = family.upper()
    if family == "I":
        m = rank
        if m < 2:
            raise ValueError("I2(m) needs m >= 2")
        return _from_edges("I", 2, {(0, 1): m})
    n = rank
    if n < 1:
        raise ValueError("rank must be >= 1")
    chain = {(i, i + 1): 3 for i in range(n - 1)}
    if family == "A":
        return _from_edges("A", n, chain)
    if family == "B":
        if n >= 2:
            chain[(0, 1)] = 4
        return _from_edges("B", n, chain)
    if family == "D":
        edges = {(i, i + 1): 3 for i in range(1, n - 1)}
        if n >= 3:
            edges[(0, 2)] = 3
        return _from_edges("D", n, edges)
    if family == "E":
        if n not in (6, 7, 8):
            raise ValueError("E_n exists for n in 6, 7, 8")
        edges = {(0, 2): 3, (1, 3): 3}
        edges.update({(i, i + 1): 3 for i in range(2, n - 1)})
        return _from_edges("E", n, edges)
    if family == "F":
        if n != 4:
            raise ValueError("F_n exists only for n = 4")
        return _from_edges("F", 4, {(0, 1): 3, (1, 2): 4, (2, 3): 3})
    if family == "H":
        if n not in (2, 3, 4):
            raise ValueError("H_n exists for n in 2, 3, 4")
        chain[(0, 1)] = 5
        return _from_edges("H", n, chain)
    raise ValueError(f"unknown Coxeter type {family!r}; supported: A B D E F H I")


_TAG = re.compile(r"^\s*([A-Za-z])\s*(?:2\((\d+)\)|_?(\d+))?\s*$")


def parse_type(tag: str, rank: int | None = None) -> tuple[str, int]:
    """Parse tags such as "B3", "E6", "I7", "I2(7)", or ("B", 3)."""
    mt = _TAG.match(tag)
    if not mt:
        raise ValueError(f"unrecognized type tag {tag!r}; expected e.g. A3 B4 D5 E6 F4 H3 H4 I7")
    family = mt.group(1).upper()
    num = mt.group(2) or mt.group(3)
    if num is not None and rank is not None:
        raise ValueError(f"rank given twice for {tag!r}")
    if num is None and rank is None:
        raise ValueError(f"missing rank for type {tag!r}")
    value = int(num) if num is not None else int(rank)
    if family not in "ABDEFHI":
        raise ValueError(f"unknown Coxeter type {family!r}; supported: A B D E F H I")
    return family, value


# known group orders, used for the memory guard and closure bounds
def group_order(family: str, n: int) -> int:
    family = family.upper()
    if family == "A":
        return factorial(n + 1)
    if family == "B":
        return 2 ** n * factorial(n)
    if family == "D":
        if n == 1:
            return 2
        return 2 ** (n - 1) * factorial(n)
    if family == "I":
        return 2 * n
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
            ("F", 4): 1152, ("H", 2): 10, ("H", 3): 120, ("H", 4): 14400}[(family, n)]


def positive_root_count(family: str, n: int) -> int:
    family = family.upper()
    if family == "A":
        return n * (n + 1) // 2
    if family == "B":
        return n * n
    if family == "D":
        return 1 if n == 1 else n * (n - 1)
    if family == "I":
        return n
    return {("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24,
            ("H", 2): 5, ("H", 3): 15, ("H", 4): 60}[(family, n)]


# ---------------------------------------------------------------- roots

def _cartan_entries(m: int):
    """(A_ij, A_ji) for an edge of order m; product is 4cos^2(pi/m)."""
    if m == 2:
        return 0, 0
    if m == 3:
        return -1, -1
    if m == 4:
        return -2, -1
    if m == 6:
        return -3, -1
    if m == 5:
        return -PHI, -PHI
    raise ValueError(f"unsupported edge order {m} for a root realization")


@dataclass
class RootSystem:
    graph: CoxeterGraph
    ring: str                        # "Z" or "Z[phi]"
    roots: list[tuple]               # positive roots, simple roots first
    action: list[tuple[int, ...]]    # action[i][r] = index of s_i(root r), r over all 2N

    @property
    def rank(self) -> int:
        return self.graph.rank

    @property
    def num_positive(self) -> int:
        return len(self.roots)


def build_root_system(g: CoxeterGraph, max_roots: int = 512) -> RootSystem:
    n = g.rank
    golden = any(g.m[i][j] == 5 for i in range(n) for j in range(n))
    cartan = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            cartan[i][j], cartan[j][i] = _cartan_entries(g.m[i][j])
    zero = GoldenNumber(0) if golden else 0

    def reflect(i: int, v: tuple) -> tuple:
        c = zero
        for j, vj in enumerate(v):
            if cartan[i][j] != 0 and vj != 0:
                c = c + cartan[i][j] * vj
        if c == 0:
            return v
        return tuple(vj - c if j == i else vj for j, vj in enumerate(v))

    def is_positive(v: tuple) -> bool:
        return all(sign(x) >= 0 for x in v)

    def norm(v: tuple) -> tuple:
        # canonical hashable key
        return tuple((x.a, x.b) if isinstance(x, GoldenNumber) else (x, 0) for x in v)

    simple = []
    for i in range(n):
        one = GoldenNumber(1) if golden else 1
        simple.append(tuple(one if j == i else zero for j in range(n)))
    roots = list(simple)
    index = {norm(r): k for k, r in enumerate(roots)}
    frontier = list(roots)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(n):
                w = reflect(i, v)
                if not is_positive(w):
                    continue
                key = norm(w)
                if key not in index:
                    index[key] = len(roots)
                    roots.append(w)
                    nxt.append(w)
                    if len(roots) > max_roots:
                        raise NotSphericalError(
                            f"root closure exceeded {max_roots} positive roots; graph is not spherical")
        frontier = nxt
    big = len(roots)
    action = []
    for i in range(n):
        row = []
        for v in roots:
            w = reflect(i, v)
            if is_positive(w):
                row.append(index[norm(w)])
            else:
                row.append(index[norm(tuple(-x for x in w))] + big)
        row += [(x + big) % (2 * big) for x in row]
        action.append(tuple(row))
    return RootSystem(g, "Z[phi]" if golden else "Z", roots, action)


# ---------------------------------------------------------------- groups

class CoxeterGroup:
    """Finite Coxeter group acting on the indices of its roots."""

    def __init__(self, graph: CoxeterGraph, allow_huge: bool = False,
                 max_elements: int = 10 ** 6):
        self.graph = graph
        self.rank = graph.rank
        order = None
        if graph.family in "ABDEFHI":
            try:
                order = group_order(graph.family, graph.rank if graph.family != "I" else graph.m[0][1])
            except KeyError:
                order = None
        self.expected_order = order
        if order is not None and order > max_elements and not allow_huge:
            raise ResourceRefusal(
                f"{graph.label} has {order} elements; enumeration needs roughly "
                f"{memory_estimate(graph) // 2**20} MiB. Pass allow_huge to proceed.")
        self.roots = build_root_system(graph)
        self.N = self.roots.num_positive
        self._gens = [self._gen_element(i) for i in range(self.rank)]
        self._elements: list[Element] | None = None

    @property
    def label(self) -> str:
        return self.graph.label

    def _gen_element(self, i: int) -> Element:
        return self.roots.action[i][: self.N]

    def identity(self) -> Element:
        return tuple(range(self.N))

    def generator(self, i: int) -> Element:
        return self._gens[i]

    def _image(self, w: Element, x: int) -> int:
        N = self.N
        return w[x] if x < N else (w[x - N] + N) % (2 * N)

    def multiply(self, w: Element, v: Element) -> Element:
        """Composition w∘v."""
        N = self.N
        return tuple(w[x] if x < N else (w[x - N] + N) % (2 * N) for x in v)

    def inverse(self, w: Element) -> Element:
        N = self.N
        out = [0] * N
        for r, x in enumerate(w):
            if x < N:
                out[x] = r
            else:
                out[x - N] = r + N
        return tuple(out)

    def apply_generator(self, w: Element, i: int) -> Element:
        """w * s_i."""
        return self.multiply(w, self._gens[i])

    def length(self, w: Element) -> int:
        N = self.N
        return sum(1 for x in w if x >= N)

    def descents(self, w: Element) -> int:
        """Right descent set as a bitmask: i with w(alpha_i) negative."""
        N = self.N
        mask = 0
        for i in range(self.rank):
            if w[i] >= N:
                mask |= 1 << i
        return mask

    def left_descents(self, w: Element) -> int:
        """Des(w^-1): i with alpha_i = w(beta) for some negative beta."""
        N = self.N
        mask = 0
        for x in w:
            if x >= N and x - N < self.rank:
                mask |= 1 << (x - N)
        return mask

    def longest(self) -> Element:
        N = self.N
        # w0 sends every positive root to a negative one; find it by climbing
        w = self.identity()
        while True:
            d = self.descents(w)
            free = [i for i in range(self.rank) if not d >> i & 1]
            if not free:
                return w
            w = self.apply_generator(w, free[0])

    def elements(self) -> list[Element]:
        """All elements, ordered by (length, image tuple)."""
        if self._elements is None:
            self._elements = self._enumerate()
        return self._elements

    def _enumerate(self) -> list[Element]:
        N = self.N
        perms = []
        for i in range(self.rank):
            g = self.roots.action[i]
            perms.append([g[r] for r in range(N)])
        layer = [self.identity()]
        out = list(layer)
        seen = set(layer)
        while layer:
            nxt = set()
            for w in layer:
                for i in range(self.rank):
                    if w[i] >= N:
                        continue
                    p = perms[i]
                    v = tuple(w[x] if x < N else (w[x - N] + N) % (2 * N) for x in p)
                    if v not in seen:
                        nxt.add(v)
            seen.update(nxt)
            layer = sorted(nxt)
            out.extend(layer)
        if self.expected_order is not None and len(out) != self.expected_order:
            raise AssertionError(f"enumerated {len(out)} elements, expected {self.expected_order}")
        return out

    def reduced_word(self, w: Element) -> list[int]:
        word = []
        while True:
            d = self.descents(w)
            if not d:
                break
            i = (d & -d).bit_length() - 1
            word.append(i)
            w = self.apply_generator(w, i)
        return word[::-1]

    def from_word(self, word: Sequence[int]) -> Element:
        w = self.identity()
        for i in word:
            w = self.apply_generator(w, i)
        return w


def memory_estimate(graph: CoxeterGraph) -> int:
    """Rough bytes needed to hold every element as a tuple of root indices."""
    fam = graph.family
    n = graph.rank if fam != "I" else graph.m[0][1]
    order = group_order(fam, n)
    roots = positive_root_count(fam, n)
    return order * (56 + 8 * roots + 32)


# ---------------------------------------------------------------- dihedral

@dataclass
class DihedralGroup:
    """W(I_2(m)) acting on Z/m: element (e, a) is x -> (-1)^e x + a; s = (1, 0), t = (1, 1)."""

    m: int
    rank: int = 2
    _lengths: dict = field(default_factory=dict, repr=False)
    _words: dict = field(default_factory=dict, repr=False)
    _elements: list = field(default_factory=list, repr=False)

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("dihedral group needs m >= 2")
        gens = [(1, 0), (1, 1)]
        layer = [self.identity()]
        self._lengths[self.identity()] = 0
        self._words[self.identity()] = ()
        self._elements = [self.identity()]
        k = 0
        while layer:
            k += 1
            nxt = {}
            for w in layer:
                for i, g in enumerate(gens):
                    v = self.multiply(w, g)
                    if v not in self._lengths and v not in nxt:
                        nxt[v] = self._words[w] + (i,)
            for v, word in nxt.items():
                self._lengths[v] = k
                self._words[v] = word
            layer = sorted(nxt)
            self._elements.extend(layer)

    @property
    def label(self) -> str:
        return f"I2({self.m})"

    def identity(self):
        return (0, 0)

    def generator(self, i: int):
        return (1, i)

    def multiply(self, w, v):
        e1, a1 = w
        e2, a2 = v
        return ((e1 + e2) % 2, (a1 + (-a2 if e1 else a2)) % self.m)

    def inverse(self, w):
        e, a = w
        return w if e else (0, (-a) % self.m)

    def apply_generator(self, w, i: int):
        return self.multiply(w, self.generator(i))

    def length(self, w) -> int:
        return self._lengths[w]

    def descents(self, w) -> int:
        lw = self._lengths[w]
        return sum(1 << i for i in range(2)
                   if self._lengths[self.apply_generator(w, i)] < lw)

    def left_descents(self, w) -> int:
        return self.descents(self.inverse(w))

    def longest(self):
        return max(self._elements, key=self.length)

    def elements(self) -> list:
        return list(self._elements)

    def word(self, w) -> tuple[int, ...]:
        """The alternating reduced word (0 = s, 1 = t)."""
        return self._words[w]

    def reduced_word(self, w) -> list[int]:
        return list(self._words[w])

    def from_word(self, word: Sequence[int]):
        w = self.identity()
        for i in word:
            w = self.apply_generator(w, i)
        return w


def dihedral_group(m: int) -> DihedralGroup:
    return DihedralGroup(m)


def make_group(family: str, rank: int | None = None, allow_huge: bool = False):
    """Group model for a type tag; I_2(m) always uses the dihedral model."""
    family, n = parse_type(family, rank)
    if family == "I":
        return DihedralGroup(n)
    return CoxeterGroup(coxeter_graph(family, n), allow_huge=allow_huge)


def iter_submasks(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask
