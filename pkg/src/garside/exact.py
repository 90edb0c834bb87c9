"""
Exact arithmetic: integer polynomials, the golden ring Z[phi], integer matrices,
division-free characteristic polynomials, exact rank and rational generating series.

Integers are Python ints and rationals are `fractions.Fraction`; everything below
stays exact. Matrices are plain lists of rows.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]
Matrix = list[list[int]]


def _normalize(c: Number) -> Number:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Polynomial:
    """Dense univariate polynomial with exact (int or Fraction) coefficients, ascending powers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [_normalize(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Number, ...] = tuple(cs)

    @classmethod
    def from_descending(cls, coeffs: Sequence[Number]) -> Polynomial:
        return cls(reversed(list(coeffs)))

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> Polynomial:
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> Polynomial:
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    @property
    def leading(self) -> Number:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k: int) -> Number:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Polynomial([other])
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: Polynomial | int) -> Polynomial:
        if isinstance(other, int):
            other = Polynomial([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: Polynomial | int) -> Polynomial:
        return self + (-other)

    def __rsub__(self, other: int) -> Polynomial:
        return Polynomial([other]) - self

    def __mul__(self, other: Polynomial | Number) -> Polynomial:
        if not isinstance(other, Polynomial):
            return Polynomial(c * other for c in self.coeffs)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        result = Polynomial([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reversed(self, n: int | None = None) -> Polynomial:
        """t^n p(1/t); with n defaulting to the degree."""
        n = self.degree if n is None else n
        return Polynomial(self[n - k] for k in range(n + 1))

    def content(self) -> int:
        return reduce(math.gcd, (int(c) for c in self.coeffs), 0)

    def primitive_part(self) -> Polynomial:
        c = self.content()
        if c == 0:
            return self
        if self.leading < 0:
            c = -c
        return Polynomial(x // c for x in self.coeffs)

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, doc: dict) -> Polynomial:
        return cls(Fraction(c) for c in doc["coeffs"])

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return format_polynomial(self)


IntPolynomial = Polynomial


def format_polynomial(p: Polynomial, var: str = "x") -> str:
    """Human rendering in descending powers, e.g. ``x^2 - 3*x + 1``."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for k in range(p.degree, -1, -1):
        c = p[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append(f"{sign} {body}")
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.is_zero() or q.is_zero():
        return Polynomial()
    out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return Polynomial(out)


def poly_divmod(q: Polynomial, p: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Division with remainder over Q; stays in Z when p is monic up to sign."""
    if p.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    lead = p.leading
    integral = lead in (1, -1) and all(isinstance(c, int) for c in q.coeffs)
    rem = list(q.coeffs) if integral else [Fraction(c) for c in q.coeffs]
    if not integral:
        lead = Fraction(lead)
    dp = p.degree
    quot = [0] * max(len(rem) - dp, 0)
    pc = p.coeffs
    for k in range(len(rem) - 1, dp - 1, -1):
        c = rem[k] * lead if integral else rem[k] / lead
        if c:
            quot[k - dp] = c
            base = k - dp
            for j, b in enumerate(pc):
                if b:
                    rem[base + j] -= c * b
    return Polynomial(quot), Polynomial(rem[:dp])


def _valuation(p: Polynomial) -> int:
    return next(i for i, c in enumerate(p.coeffs) if c != 0)


def poly_divides(p: Polynomial, q: Polynomial) -> tuple[bool, Polynomial | None]:
    """Whether p divides q over Q; the quotient is returned when it does."""
    if p.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if q.is_zero():
        return True, Polynomial()
    # x is coprime to the x-free part, so powers of x split off exactly
    a, b = _valuation(p), _valuation(q)
    if a > b:
        return False, None
    quot, rem = poly_divmod(Polynomial(q.coeffs[b:]), Polynomial(p.coeffs[a:]))
    if rem.is_zero():
        return True, Polynomial([0] * (b - a) + list(quot.coeffs))
    return False, None


def _pseudo_rem(a: Polynomial, b: Polynomial) -> Polynomial:
    # lc(b)^(deg a - deg b + 1) * a mod b, all in Z
    r = list(a.coeffs)
    db, lb = b.degree, b.leading
    while len(r) - 1 >= db and any(r):
        k = len(r) - 1
        c = r[k]
        r = [x * lb for x in r]
        for j, y in enumerate(b.coeffs):
            r[k - db + j] -= c * y
        while r and r[-1] == 0:
            r.pop()
    return Polynomial(r)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Primitive gcd over Z[x] (positive leading coefficient), via primitive remainder sequences."""
    a, b = a.primitive_part(), b.primitive_part()
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = _pseudo_rem(a, b)
        a, b = b, r.primitive_part()
    return a.primitive_part()


# ---------------------------------------------------------------- golden ring

class GoldenNumber:
    """a + b*phi with phi^2 = phi + 1."""

    __slots__ = ("a", "b")

    def __init__(self, a: int = 0, b: int = 0):
        self.a = a
        self.b = b

    @staticmethod
    def _lift(x) -> GoldenNumber:
        return x if isinstance(x, GoldenNumber) else GoldenNumber(x, 0)

    def __add__(self, other) -> GoldenNumber:
        o = self._lift(other)
        return GoldenNumber(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> GoldenNumber:
        return GoldenNumber(-self.a, -self.b)

    def __sub__(self, other) -> GoldenNumber:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> GoldenNumber:
        return self._lift(other) - self

    def __mul__(self, other) -> GoldenNumber:
        o = self._lift(other)
        a, b, c, d = self.a, self.b, o.a, o.b
        return GoldenNumber(a * c + b * d, a * d + b * c + b * d)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = GoldenNumber(other)
        return isinstance(other, GoldenNumber) and (self.a, self.b) == (other.a, other.b)

    def __hash__(self) -> int:
        return hash((self.a, self.b)) if self.b else hash(self.a)

    def sign(self) -> int:
        # a + b*phi = ((2a + b) + b*sqrt5) / 2
        u, v = 2 * self.a + self.b, self.b
        su = (u > 0) - (u < 0)
        sv = (v > 0) - (v < 0)
        if su == sv or sv == 0:
            return su
        if su == 0:
            return sv
        # opposite signs: the larger magnitude wins
        lhs, rhs = u * u, 5 * v * v
        if lhs == rhs:
            return 0
        return su if lhs > rhs else sv

    def __float__(self) -> float:
        return self.a + self.b * (1 + 5 ** 0.5) / 2

    def __repr__(self) -> str:
        return f"GoldenNumber({self.a}, {self.b})"


PHI = GoldenNumber(0, 1)


def sign(x) -> int:
    if isinstance(x, GoldenNumber):
        return x.sign()
    return (x > 0) - (x < 0)


# ---------------------------------------------------------------- matrices

def identity_matrix(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def mat_vec(m: Sequence[Sequence[Number]], v: Sequence[Number]) -> list[Number]:
    return [sum(a * b for a, b in zip(row, v) if a) for row in m]


def vec_mat(v: Sequence[Number], m: Sequence[Sequence[Number]]) -> list[Number]:
    cols = len(m[0]) if m else 0
    out = [0] * cols
    for a, row in zip(v, m):
        if a:
            for j, b in enumerate(row):
                if b:
                    out[j] += a * b
    return out


def mat_mul(a: Sequence[Sequence[Number]], b: Sequence[Sequence[Number]]) -> list[list[Number]]:
    return [vec_mat(row, b) for row in a]


def transpose(m: Sequence[Sequence[Number]]) -> list[list[Number]]:
    return [list(col) for col in zip(*m)]


def _check_square(m: Sequence[Sequence[Number]]) -> int:
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    return n


def charpoly(m: Sequence[Sequence[int]]) -> Polynomial:
    """det(xI - m) by Berkowitz's division-free recurrence."""
    n = _check_square(m)
    # p holds coefficients highest degree first
    p: list[int] = [1]
    for r in range(1, n + 1):
        a = m[r - 1][r - 1]
        col = [m[i][r - 1] for i in range(r - 1)]
        row = m[r - 1][: r - 1]
        sub = [mi[: r - 1] for mi in m[: r - 1]]
        # first column of the Toeplitz factor: 1, -a, -R C, -R A C, ...
        t = [1, -a]
        v = col
        for _ in range(r - 1):
            t.append(-sum(x * y for x, y in zip(row, v)))
            v = mat_vec(sub, v)
        q = [0] * (r + 1)
        for i in range(r + 1):
            s = 0
            for j in range(min(i + 1, r)):
                s += t[i - j] * p[j]
            q[i] = s
        p = q
    return Polynomial.from_descending(p)


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free elimination."""
    n = _check_square(m)
    a = [list(row) for row in m]
    sign_ = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign_ = -sign_
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign_ * a[n - 1][n - 1] if n else 1


def matrix_rank_exact(m: Sequence[Sequence[Number]]) -> int:
    """Rank over Q, by fraction-free elimination after clearing row denominators."""
    rows = []
    for row in m:
        den = reduce(lambda x, y: x * y // math.gcd(x, y),
                     (Fraction(c).denominator for c in row), 1)
        rows.append([int(Fraction(c) * den) for c in row])
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pr = rows[rank]
        p = pr[c]
        for i in range(rank + 1, len(rows)):
            f = rows[i][c]
            if f == 0:
                continue
            ri = rows[i]
            new = [ri[j] * p - f * pr[j] for j in range(ncols)]
            g = reduce(math.gcd, new, 0)
            rows[i] = [x // g for x in new] if g > 1 else new
        rank += 1
        if rank == len(rows):
            break
    return rank


# ---------------------------------------------------------------- series

class RationalFunction:
    """num/den over Z, reduced; den has positive leading coefficient."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial, reduce_: bool = True):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if reduce_:
            num, den = _clear_denominators(num), _clear_denominators(den)
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, _ = poly_divmod(num, g)
                den, _ = poly_divmod(den, g)
            c = math.gcd(num.content(), den.content())
            if den.leading < 0:
                c = -c
            num = Polynomial(int(x) // c for x in num.coeffs)
            den = Polynomial(int(x) // c for x in den.coeffs)
        self.num = num
        self.den = den

    def __eq__(self, other: object) -> bool:
        # equality as rational functions: cross-multiplication
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __add__(self, other: RationalFunction) -> RationalFunction:
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        return f"({format_polynomial(self.num, 't')}) / ({format_polynomial(self.den, 't')})"


def _clear_denominators(p: Polynomial) -> Polynomial:
    den = reduce(lambda x, y: x * y // math.gcd(x, y),
                 (Fraction(c).denominator for c in p.coeffs), 1)
    return Polynomial(int(Fraction(c) * den) for c in p.coeffs)


def solve_rational_series(a: Sequence[Sequence[int]], y: Sequence[int],
                          z: Sequence[int]) -> RationalFunction:
    """The rational function whose Taylor coefficients are y^T a^d z, d >= 0."""
    n = _check_square(a)
    if len(y) != n or len(z) != n:
        raise ValueError("dimension mismatch")
    den = charpoly(a).reversed(n)  # det(I - t a)
    coeffs = []
    v = list(z)
    for _ in range(n):
        coeffs.append(sum(p * q for p, q in zip(y, v)))
        v = mat_vec(a, v)
    # numerator = den * series mod t^n
    num = [sum(den[j] * coeffs[k - j] for j in range(k + 1)) for k in range(n)]
    return RationalFunction(Polynomial(num), den)


def series_coeffs(f: RationalFunction, n: int) -> list[int]:
    """First n Taylor coefficients at 0; they must be integers."""
    d0 = f.den[0]
    if d0 == 0:
        raise ZeroDivisionError("denominator vanishes at 0")
    out: list[int] = []
    for k in range(n):
        s = f.num[k] - sum(f.den[j] * out[k - j] for j in range(1, min(k, f.den.degree) + 1))
        c, r = divmod(s, d0)
        if r:
            raise ValueError(f"non-integral coefficient at t^{k}")
        out.append(c)
    return out
