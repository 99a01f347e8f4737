"""Integer polynomial utilities: cyclotomics, resultants, factorization.

Polynomials live in Z[x] as dense ascending coefficient tuples.  Complete
factorization is by squarefree decomposition followed by Kronecker's
interpolation method, which is exponential but entirely deterministic and
dependency-free; the degree cap keeps it at desk scale.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

FACTOR_DEGREE_LIMIT = 24


class DegreeLimitError(ValueError):
    """Factorization was asked for beyond the configured degree cap."""


class IntPoly:
    """Dense integer polynomial; coeffs[i] is the coefficient of x^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(int(c) for c in cs)

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def x_power(cls, n: int, c: int = 1) -> "IntPoly":
        return cls((0,) * n + (c,))

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(
            (self.coeffs[i] if i < len(self.coeffs) else 0)
            + (other.coeffs[i] if i < len(other.coeffs) else 0)
            for i in range(n)
        )

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not self or not other:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def evaluate(self, v: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * v + c
        return out

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def content(self) -> int:
        """gcd of the coefficients, nonnegative; 0 for the zero polynomial."""
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive(self) -> "IntPoly":
        """Primitive part with positive leading coefficient."""
        c = self.content()
        if not c:
            return self
        if self.lc() < 0:
            c = -c
        return IntPoly(a // c for a in self.coeffs)

    def __divmod__(self, other: "IntPoly"):
        """Euclidean division, valid when every quotient step divides exactly
        (always true when `other` is monic, or when self = other * q over Z)."""
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        q = [0] * max(0, len(self.coeffs) - len(other.coeffs) + 1)
        r = list(self.coeffs)
        d = other.coeffs
        while len(r) >= len(d) and any(r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) < len(d):
                break
            if r[-1] % d[-1] != 0:
                raise ArithmeticError("non-exact integer quotient step")
            c = r[-1] // d[-1]
            k = len(r) - len(d)
            q[k] = c
            for i, dc in enumerate(d):
                r[k + i] -= c * dc
        return IntPoly(q), IntPoly(r)

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("not divisible")
        return q

    def reversed(self) -> "IntPoly":
        """Coefficient reversal x^deg * p(1/x); meaningful when p(0) != 0."""
        return IntPoly(reversed(self.coeffs))

    def __repr__(self):
        return f"IntPoly({self.coeffs})"


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """gcd in Z[x] (primitive, positive leading coefficient) times the
    integer content gcd, via the subresultant remainder sequence."""
    if not a:
        return b.primitive() * abs(b.content()) if b else IntPoly()
    if not b:
        return a.primitive() * abs(a.content())
    ca, cb = a.content(), b.content()
    c = math.gcd(ca, cb)
    a, b = a.primitive(), b.primitive()
    if a.degree() < b.degree():
        a, b = b, a
    if b.degree() == 0:
        return IntPoly.const(c)
    g, h = 1, 1
    while True:
        delta = a.degree() - b.degree()
        # pseudo-remainder lc(b)^(delta+1) * a mod b
        r = a
        e = delta + 1
        lb = b.lc()
        while r and r.degree() >= b.degree():
            r = r * lb - IntPoly.x_power(r.degree() - b.degree(), r.lc()) * b
            e -= 1
        if e:
            r = r * (lb ** e)
        if not r:
            break
        if r.degree() == 0:
            return IntPoly.const(c)
        a, b = b, IntPoly(x // (g * h ** delta) for x in r.coeffs)
        g = a.lc()
        if delta >= 1:
            h = g ** delta if delta == 1 else g ** delta // h ** (delta - 1)
    return b.primitive() * c


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPoly:
    """The d-th cyclotomic polynomial, by dividing x^d - 1 by the earlier ones."""
    if not 1 <= d <= 1000:
        raise ValueError("cyclotomic index must be between 1 and 1000")
    poly = IntPoly((-1,) + (0,) * (d - 1) + (1,))
    for e in range(1, d):
        if d % e == 0:
            poly = poly.exact_div(cyclotomic(e))
    return poly


def _int_det_bareiss(m: list[list[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k]), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Resultant of f and g: the Sylvester determinant, computed fraction-free.

    Zero exactly when f and g share a complex root.  Requires f != 0.
    """
    if not f:
        raise ValueError("resultant requires a nonzero first argument")
    n, m = f.degree(), g.degree()
    if not g:
        return 1 if n == 0 else 0
    if n == 0 and m == 0:
        return 1
    if n == 0:
        return f.coeffs[0] ** m
    if m == 0:
        return g.coeffs[0] ** n
    size = n + m
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(m):
        rows.append([0] * i + fc + [0] * (size - n - 1 - i))
    for i in range(n):
        rows.append([0] * i + gc + [0] * (size - m - 1 - i))
    return _int_det_bareiss(rows)


def is_perfect_square(n: int) -> bool:
    """True iff n is a square of an integer (0 and 1 included)."""
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


# ---------------------------------------------------------------------------
# factorization
# ---------------------------------------------------------------------------

def _squarefree_decomposition(f: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun's algorithm on a primitive positive-lc polynomial: returns
    [(part, multiplicity)] with f = prod part^mult, parts squarefree coprime."""
    parts = []
    df = f.derivative()
    a = poly_gcd(f, df).primitive()
    w = f.exact_div(a)
    y = df.exact_div(a)
    i = 1
    while w.degree() > 0:
        z = y - w.derivative()
        if not z:
            parts.append((w.primitive(), i))
            break
        g = poly_gcd(w, z).primitive()
        if g.degree() > 0:
            parts.append((g, i))
        w = w.exact_div(g)
        y = z.exact_div(g)
        i += 1
    return parts


def _eval_points():
    yield 0
    k = 1
    while True:
        yield k
        yield -k
        k += 1


def _signed_divisors(v: int) -> list[int]:
    """All divisors of v, positive and negative, smallest magnitude first."""
    v = abs(v)
    out = []
    for d in range(1, math.isqrt(v) + 1):
        if v % d == 0:
            out.append(d)
            if d * d != v:
                out.append(v // d)
    out.sort()
    return [s * d for d in out for s in (1, -1)]


def _lagrange_basis(points: list[int]) -> list[list[Fraction]]:
    """Lagrange basis polynomials for the given points, as Fraction coeff lists."""
    n = len(points)
    out = []
    for i, xi in enumerate(points):
        basis = [Fraction(1)]
        denom = 1
        for j, xj in enumerate(points):
            if j == i:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for k, b in enumerate(basis):
                new[k] += b * (-xj)
                new[k + 1] += b
            basis = new
            denom *= xi - xj
        out.append([b / denom for b in basis])
    return out


def _interpolate(basis: list[list[Fraction]], values) -> IntPoly | None:
    """Combine precomputed basis polys; None unless the result is integral."""
    n = len(basis)
    coeffs = [Fraction(0)] * n
    for v, b in zip(values, basis):
        if v:
            for k, bk in enumerate(b):
                coeffs[k] += v * bk
    out = []
    for c in coeffs:
        if c.denominator != 1:
            return None
        out.append(int(c))
    return IntPoly(out)


def _divisor_tuples(divisor_lists: list[list[int]], points: list[int]):
    """Divisor combinations in product order, pruned by the congruence
    h(a) = h(b) mod (a - b) that every integer polynomial satisfies."""
    n = len(points)
    prefix: list[int] = []

    def rec(k: int):
        if k == n:
            yield tuple(prefix)
            return
        ak = points[k]
        for v in divisor_lists[k]:
            ok = True
            for j in range(k):
                m = ak - points[j]
                if (v - prefix[j]) % m != 0:
                    ok = False
                    break
            if ok:
                prefix.append(v)
                yield from rec(k + 1)
                prefix.pop()

    yield from rec(0)


def _kronecker_split(g: IntPoly) -> tuple[IntPoly, IntPoly] | None:
    """One nontrivial factorization of a primitive squarefree positive-lc
    polynomial, or None if it is irreducible over Q.

    Candidate factors of each degree d are interpolated through divisor
    tuples of the values of g at 0, 1, -1, 2, ...; the first divisor found
    (degrees ascending, divisor tuples in a fixed order) wins, which makes
    the whole factorization deterministic.
    """
    n = g.degree()
    if n <= 1:
        return None
    points: list[int] = []
    values: list[int] = []
    gen = _eval_points()
    for d in range(1, n // 2 + 1):
        while len(points) < d + 1:
            a = next(gen)
            v = g.evaluate(a)
            if v == 0:
                root_factor = IntPoly((-a, 1))
                return root_factor, g.exact_div(root_factor)
            points.append(a)
            values.append(v)
        pts = points[: d + 1]
        divisor_lists = [_signed_divisors(v) for v in values[: d + 1]]
        divisor_lists[0] = [d0 for d0 in divisor_lists[0] if d0 > 0]  # sign symmetry
        basis = _lagrange_basis(pts)
        for combo in _divisor_tuples(divisor_lists, pts):
            h = _interpolate(basis, combo)
            if h is None or h.degree() != d:
                continue
            h = h.primitive()
            try:
                q = g.exact_div(h)
            except ArithmeticError:
                continue
            return h, q
    return None


def _factor_squarefree(g: IntPoly) -> list[IntPoly]:
    split = _kronecker_split(g)
    if split is None:
        return [g]
    h, q = split
    return _factor_squarefree(h.primitive()) + _factor_squarefree(q.primitive())


def factor_univariate(f: IntPoly) -> tuple[int, list[tuple[IntPoly, int]]]:
    """Complete factorization over Q scaled to Z: f = content * prod q_i^m_i.

    Every q_i is primitive, irreducible over Q, with positive leading
    coefficient; the sign of f lives in the content.  Factors are listed by
    (degree, coefficient tuple), which fixes the output order.
    """
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    if f.degree() > FACTOR_DEGREE_LIMIT:
        raise DegreeLimitError(
            f"degree {f.degree()} exceeds the factorization cap {FACTOR_DEGREE_LIMIT}"
        )
    content = f.content()
    if f.lc() < 0:
        content = -content
    prim = f.primitive()
    if prim.degree() == 0:
        return content, []
    out: list[tuple[IntPoly, int]] = []
    for part, mult in _squarefree_decomposition(prim):
        for q in _factor_squarefree(part):
            out.append((q, mult))
    out.sort(key=lambda qm: (qm[0].degree(), qm[0].coeffs))
    return content, out
