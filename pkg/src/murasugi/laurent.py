"""Exact sparse Laurent polynomials over the integers, in one and two variables.

Polynomials are stored as maps from exponents (or exponent pairs) to nonzero
integer coefficients, so supports straddling zero cost nothing and all
arithmetic is exact.  The two-variable ring Z[x^+-1, y^+-1] carries the bar
involution x -> 1/x, y -> 1/y, a canonical representative for each orbit
under the trivial units +-x^r*y^s, exact division, a gcd (it is a UFD), and
fraction-free determinants of polynomial matrices.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass


class NotDivisibleError(ArithmeticError):
    """Exact division was requested but the divisor does not divide."""


class PolyParseError(ValueError):
    """Malformed polynomial text."""


# ---------------------------------------------------------------------------
# univariate
# ---------------------------------------------------------------------------

class LaurentPoly1:
    """Element of Z[t^+-1]: a map {exponent: nonzero int coefficient}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for e, c in terms.items():
                if c:
                    t[int(e)] = int(c)
        self.terms = t

    @classmethod
    def zero(cls) -> "LaurentPoly1":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly1":
        return cls({0: 1})

    @classmethod
    def term(cls, coeff: int, exp: int = 0) -> "LaurentPoly1":
        return cls({exp: coeff})

    @classmethod
    def from_coeffs(cls, coeffs, shift: int = 0) -> "LaurentPoly1":
        """Build from an ascending coefficient list starting at exponent `shift`."""
        return cls({shift + i: c for i, c in enumerate(coeffs)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, LaurentPoly1) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = LaurentPoly1.__new__(LaurentPoly1)
        res.terms = out
        return res

    def __neg__(self):
        res = LaurentPoly1.__new__(LaurentPoly1)
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = LaurentPoly1.term(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        res = LaurentPoly1.__new__(LaurentPoly1)
        res.terms = out
        return res

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly1":
        """Multiply by t^k."""
        return LaurentPoly1({e + k: c for e, c in self.terms.items()})

    def conj(self) -> "LaurentPoly1":
        """The bar involution t -> 1/t."""
        return LaurentPoly1({-e: c for e, c in self.terms.items()})

    def min_exp(self) -> int:
        return min(self.terms)

    def max_exp(self) -> int:
        return max(self.terms)

    def span(self) -> int:
        """max exponent - min exponent; 0 for monomials and for the zero poly."""
        return (max(self.terms) - min(self.terms)) if self.terms else 0

    def coeff_sum(self) -> int:
        """Evaluation at 1."""
        return sum(self.terms.values())

    def eval_at(self, v: int) -> int:
        """Exact evaluation at +1 or -1 (the only unit integer points)."""
        if v == 1:
            return self.coeff_sum()
        if v == -1:
            return sum(c if e % 2 == 0 else -c for e, c in self.terms.items())
        raise ValueError("exact Laurent evaluation only at +1 or -1")

    def coeffs(self) -> list[int]:
        """Dense ascending coefficient list from min_exp to max_exp."""
        if not self.terms:
            return []
        lo, hi = min(self.terms), max(self.terms)
        return [self.terms.get(e, 0) for e in range(lo, hi + 1)]

    def canonical(self) -> "LaurentPoly1":
        """Representative of the orbit {+-t^s * P}: min exponent 0, top coefficient > 0."""
        if not self.terms:
            return self
        lo = min(self.terms)
        out = {e - lo: c for e, c in self.terms.items()}
        if out[max(out)] < 0:
            out = {e: -c for e, c in out.items()}
        res = LaurentPoly1.__new__(LaurentPoly1)
        res.terms = out
        return res

    def __repr__(self):
        return f"LaurentPoly1({format_poly1(self)!r})"


def equal_up_to_unit1(p: LaurentPoly1, q: LaurentPoly1) -> bool:
    return p.canonical() == q.canonical()


# ---------------------------------------------------------------------------
# bivariate
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UnitMonomial2:
    """The unit +-x^r*y^s of Z[x^+-1, y^+-1]."""

    sign: int
    r: int
    s: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +-1")

    def apply(self, p: "LaurentPoly2") -> "LaurentPoly2":
        return LaurentPoly2(
            {(ex + self.r, ey + self.s): self.sign * c for (ex, ey), c in p.terms.items()}
        )

    def compose(self, other: "UnitMonomial2") -> "UnitMonomial2":
        return UnitMonomial2(self.sign * other.sign, self.r + other.r, self.s + other.s)

    def inverse(self) -> "UnitMonomial2":
        return UnitMonomial2(self.sign, -self.r, -self.s)


class LaurentPoly2:
    """Element of Z[x^+-1, y^+-1]: a map {(x_exp, y_exp): nonzero int coefficient}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for k, c in terms.items():
                if c:
                    t[(int(k[0]), int(k[1]))] = int(c)
        self.terms = t

    @classmethod
    def zero(cls) -> "LaurentPoly2":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly2":
        return cls({(0, 0): 1})

    @classmethod
    def term(cls, coeff: int, ex: int = 0, ey: int = 0) -> "LaurentPoly2":
        return cls({(ex, ey): coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, LaurentPoly2) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        res = LaurentPoly2.__new__(LaurentPoly2)
        res.terms = out
        return res

    def __neg__(self):
        res = LaurentPoly2.__new__(LaurentPoly2)
        res.terms = {k: -c for k, c in self.terms.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2.term(other)
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        res = LaurentPoly2.__new__(LaurentPoly2)
        res.terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers only for monomials; not supported")
        out = LaurentPoly2.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> "LaurentPoly2":
        """The bar involution x -> 1/x, y -> 1/y."""
        return LaurentPoly2({(-a, -b): c for (a, b), c in self.terms.items()})

    def min_x(self) -> int:
        return min(a for a, _ in self.terms)

    def min_y(self) -> int:
        return min(b for _, b in self.terms)

    def shift(self, r: int, s: int) -> "LaurentPoly2":
        """Multiply by x^r*y^s."""
        return LaurentPoly2({(a + r, b + s): c for (a, b), c in self.terms.items()})

    def canonical(self) -> "LaurentPoly2":
        """Representative of the orbit {+-x^r*y^s * P}.

        Both minimum exponents are shifted to 0 and the sign is fixed so that
        the coefficient of the lexicographically greatest exponent pair
        (x-exponent first) is positive.  Idempotent; canonical(0) = 0.
        """
        if not self.terms:
            return self
        dx = min(a for a, _ in self.terms)
        dy = min(b for _, b in self.terms)
        out = {(a - dx, b - dy): c for (a, b), c in self.terms.items()}
        if out[max(out)] < 0:
            out = {k: -c for k, c in out.items()}
        res = LaurentPoly2.__new__(LaurentPoly2)
        res.terms = out
        return res

    def specialize(self, which: str, value: int) -> LaurentPoly1:
        """Substitute +1 or -1 for one variable; returns a univariate Laurent poly.

        Only the unit values +-1 keep the result inside the integer Laurent
        ring, so anything else is rejected.
        """
        if value not in (1, -1):
            raise ValueError("specialization value must be +1 or -1")
        if which not in ("x", "y"):
            raise ValueError("variable must be 'x' or 'y'")
        out = {}
        for (a, b), c in self.terms.items():
            if which == "x":
                e, dead = b, a
            else:
                e, dead = a, b
            v = c if (value == 1 or dead % 2 == 0) else -c
            s = out.get(e, 0) + v
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = LaurentPoly1.__new__(LaurentPoly1)
        res.terms = out
        return res

    def __repr__(self):
        return f"LaurentPoly2({format_poly2(self)!r})"


def equal_up_to_unit2(p: LaurentPoly2, q: LaurentPoly2) -> bool:
    """True iff p = (+-x^r*y^s) * q for some trivial unit."""
    return p.canonical() == q.canonical()


# ---------------------------------------------------------------------------
# exact division and gcd
# ---------------------------------------------------------------------------

def exact_div2(p: LaurentPoly2, q: LaurentPoly2) -> LaurentPoly2:
    """Return r with p = q*r, or raise NotDivisibleError.

    Works in the Laurent ring: monomial shifts are units, so both operands are
    normalized into Z[x,y] first.  Division there is greedy on the leading
    term under lex order, which succeeds exactly when q divides p.
    """
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    if not p:
        return LaurentPoly2.zero()
    px, py = p.min_x(), p.min_y()
    qx, qy = q.min_x(), q.min_y()
    a = p.shift(-px, -py)
    b = q.shift(-qx, -qy)
    lead_b = max(b.terms)
    cb = b.terms[lead_b]
    quot: dict[tuple[int, int], int] = {}
    rem = a
    while rem:
        lead_r = max(rem.terms)
        ex, ey = lead_r[0] - lead_b[0], lead_r[1] - lead_b[1]
        cr = rem.terms[lead_r]
        if ex < 0 or ey < 0 or cr % cb != 0:
            raise NotDivisibleError(format_poly2(q) + " does not divide " + format_poly2(p))
        c = cr // cb
        quot[(ex, ey)] = c
        rem = rem - b.shift(ex, ey) * c
    return LaurentPoly2(quot).shift(px - qx, py - qy)


def _int_content2(p: LaurentPoly2) -> int:
    return math.gcd(*p.terms.values())


def _deg_y(p: LaurentPoly2) -> int:
    return max(b for _, b in p.terms)


def _lc_y(p: LaurentPoly2) -> LaurentPoly2:
    """Leading coefficient wrt y, as an x-only polynomial."""
    d = _deg_y(p)
    return LaurentPoly2({(a, 0): c for (a, b), c in p.terms.items() if b == d})


def _pow_poly(p: LaurentPoly2, n: int) -> LaurentPoly2:
    out = LaurentPoly2.one()
    for _ in range(n):
        out = out * p
    return out


def _prem_y(a: LaurentPoly2, b: LaurentPoly2) -> LaurentPoly2:
    """Pseudo-remainder of a by b wrt y: lc_y(b)^(da-db+1) * a reduced mod b."""
    db = _deg_y(b)
    d = _lc_y(b)
    r = a
    e = _deg_y(a) - db + 1
    while r and _deg_y(r) >= db:
        lr = _lc_y(r).shift(0, _deg_y(r) - db)
        r = d * r - lr * b
        e -= 1
    for _ in range(e):
        r = d * r
    return r


def _gcd_zx(a: LaurentPoly2, b: LaurentPoly2) -> LaurentPoly2:
    """gcd of two nonzero x-only polynomials (y-exponent 0 throughout).

    Integer content gcd times primitive-part gcd, the latter by the
    subresultant polynomial remainder sequence over Z.  Monomial factors are
    units here, so the result is normalized to min exponent 0 and positive
    leading coefficient.
    """
    ca, cb = _int_content2(a), _int_content2(b)
    c = math.gcd(ca, cb)
    a = exact_div2(a, LaurentPoly2.term(ca)).shift(-a.min_x(), 0)
    b = exact_div2(b, LaurentPoly2.term(cb)).shift(-b.min_x(), 0)

    def deg(p):
        return max(e for e, _ in p.terms)

    def lc(p):
        return p.terms[(deg(p), 0)]

    if deg(a) == 0 or deg(b) == 0:
        return LaurentPoly2.term(c)
    if deg(a) < deg(b):
        a, b = b, a
    g, h = 1, 1
    while True:
        delta = deg(a) - deg(b)
        # pseudo-remainder lc(b)^(delta+1) * a mod b
        r = a
        e = delta + 1
        lb = lc(b)
        while r and deg(r) >= deg(b):
            r = LaurentPoly2.term(lb) * r - LaurentPoly2.term(r.terms[(deg(r), 0)], deg(r) - deg(b)) * b
            e -= 1
        if e:
            r = LaurentPoly2.term(lb ** e) * r
        if not r:
            break
        if deg(r) == 0:
            return LaurentPoly2.term(c)
        a, b = b, exact_div2(r, LaurentPoly2.term(g * h ** delta))
        g = lc(a)
        if delta >= 1:
            h = g ** delta if delta == 1 else g ** delta // h ** (delta - 1)
    b = exact_div2(b, LaurentPoly2.term(_int_content2(b)))
    if lc(b) < 0:
        b = -b
    return LaurentPoly2.term(c) * b


def _cont_y(p: LaurentPoly2) -> LaurentPoly2:
    """Content wrt y: gcd in Z[x] of the y-slice coefficients."""
    slices: dict[int, dict] = {}
    for (a, b), c in p.terms.items():
        slices.setdefault(b, {})[(a, 0)] = c
    polys = [LaurentPoly2(s) for s in slices.values()]
    if len(polys) == 1:
        g = polys[0].shift(-polys[0].min_x(), 0)
        if g.terms[max(g.terms)] < 0:
            g = -g
        return g
    g = polys[0]
    one = LaurentPoly2.one()
    for q in polys[1:]:
        g = _gcd_zx(g, q)
        if g == one:
            break
    return g


def gcd2(p: LaurentPoly2, q: LaurentPoly2) -> LaurentPoly2:
    """gcd in the UFD Z[x^+-1, y^+-1], returned in canonical form.

    Strip integer and Z[x] contents, then run a subresultant remainder
    sequence in y over Z[x] on the y-primitive parts.  All division steps are
    exact, so no rational arithmetic appears anywhere.
    """
    if not p and not q:
        raise ValueError("gcd2 requires at least one nonzero argument")
    if not p:
        return q.canonical()
    if not q:
        return p.canonical()
    a = p.shift(-p.min_x(), -p.min_y())
    b = q.shift(-q.min_x(), -q.min_y())
    if _deg_y(a) == 0 and _deg_y(b) == 0:
        return _gcd_zx(a, b).canonical()
    ca, cb = _cont_y(a), _cont_y(b)
    c = _gcd_zx(ca, cb)
    a = exact_div2(a, ca)
    b = exact_div2(b, cb)
    if _deg_y(a) == 0 or _deg_y(b) == 0:
        # a y-primitive polynomial of y-degree 0 is a unit
        return c.canonical()
    if _deg_y(a) < _deg_y(b):
        a, b = b, a
    g = LaurentPoly2.one()
    h = LaurentPoly2.one()
    while True:
        delta = _deg_y(a) - _deg_y(b)
        r = _prem_y(a, b)
        if not r:
            break
        if _deg_y(r) == 0:
            return c.canonical()
        a, b = b, exact_div2(r, g * _pow_poly(h, delta))
        g = _lc_y(a)
        if delta >= 1:
            h = g if delta == 1 else exact_div2(_pow_poly(g, delta), _pow_poly(h, delta - 1))
    pp = exact_div2(b, _cont_y(b))
    return (c * pp).canonical()


# ---------------------------------------------------------------------------
# determinants
# ---------------------------------------------------------------------------

def _det_cofactor(m: list[list[LaurentPoly2]]) -> LaurentPoly2:
    n = len(m)
    if n == 1:
        return m[0][0]
    total = LaurentPoly2.zero()
    for j in range(n):
        if not m[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _det_bareiss(m: list[list[LaurentPoly2]]) -> LaurentPoly2:
    n = len(m)
    a = [row[:] for row in m]
    sign = 1
    prev = LaurentPoly2.one()
    for k in range(n - 1):
        if not a[k][k]:
            pivot = next((i for i in range(k + 1, n) if a[i][k]), None)
            if pivot is None:
                return LaurentPoly2.zero()
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = exact_div2(num, prev) if num else LaurentPoly2.zero()
            a[i][k] = LaurentPoly2.zero()
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign == 1 else -d


def matrix_det(m: list[list[LaurentPoly2]]) -> LaurentPoly2:
    """Exact determinant of a square matrix of Laurent polynomials.

    Cofactor expansion up to 4x4; Bareiss fraction-free elimination above
    (the divisions it performs are exact by construction).
    """
    n = len(m)
    if n == 0 or any(len(row) != n for row in m):
        raise ValueError("matrix_det requires a square matrix of dimension >= 1")
    if n <= 4:
        return _det_cofactor(m)
    return _det_bareiss(m)


# ---------------------------------------------------------------------------
# text grammar
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z])|(\*)|(\^)|(\+)|(-))")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            rest = text[pos:].strip()
            if not rest:
                break
            raise PolyParseError(f"unexpected character {rest[0]!r} in polynomial")
        pos = m.end()
        if m.group(1):
            out.append(("int", int(m.group(1))))
        elif m.group(2):
            out.append(("var", m.group(2)))
        elif m.group(3):
            out.append(("mul", "*"))
        elif m.group(4):
            out.append(("pow", "^"))
        elif m.group(5):
            out.append(("sign", 1))
        else:
            out.append(("sign", -1))
    return out


def _parse_terms(text: str, variables: tuple[str, ...]) -> dict[tuple[int, ...], int]:
    toks = _tokenize(text)
    if not toks:
        raise PolyParseError("empty polynomial text")
    terms: dict[tuple[int, ...], int] = {}
    i = 0
    first = True
    while i < len(toks):
        sign = 1
        if toks[i][0] == "sign":
            sign = toks[i][1]
            i += 1
        elif not first:
            raise PolyParseError("expected '+' or '-' between terms")
        if i >= len(toks):
            raise PolyParseError("dangling sign at end of polynomial")
        coeff = None
        if toks[i][0] == "int":
            coeff = toks[i][1]
            i += 1
            if i < len(toks) and toks[i][0] == "mul":
                i += 1
        exps = [0] * len(variables)
        saw_var = False
        while i < len(toks) and toks[i][0] == "var":
            name = toks[i][1]
            i += 1
            if name not in variables:
                expected = " or ".join(repr(v) for v in variables)
                raise PolyParseError(f"unknown variable {name!r}; expected {expected}")
            idx = variables.index(name)
            e = 1
            if i < len(toks) and toks[i][0] == "pow":
                i += 1
                esign = 1
                if i < len(toks) and toks[i][0] == "sign":
                    esign = toks[i][1]
                    i += 1
                if i >= len(toks) or toks[i][0] != "int":
                    raise PolyParseError("exponent expected after '^'")
                e = esign * toks[i][1]
                i += 1
            exps[idx] += e
            saw_var = True
            if i < len(toks) and toks[i][0] == "mul":
                i += 1
        if coeff is None:
            if not saw_var:
                raise PolyParseError("empty term")
            coeff = 1
        key = tuple(exps)
        s = terms.get(key, 0) + sign * coeff
        if s:
            terms[key] = s
        else:
            terms.pop(key, None)
        first = False
    return terms


def parse_poly2(text: str, variables: tuple[str, str] = ("x", "y")) -> LaurentPoly2:
    """Parse `1 - x*y^-1 + 3*x^2` style text into a two-variable Laurent poly.

    Terms are [integer]['*']?[var['^'int]]* chains over the two given variable
    letters; whitespace is insignificant.
    """
    return LaurentPoly2(_parse_terms(text, variables))


def parse_poly1(text: str, variable: str = "t") -> LaurentPoly1:
    """Parse univariate Laurent text such as `-2*t^-3 + t`."""
    return LaurentPoly1({k[0]: c for k, c in _parse_terms(text, (variable,)).items()})


def _format_term(c: int, parts: list[str], first: bool) -> str:
    body = "*".join(parts)
    mag = abs(c)
    if body:
        coeff = "" if mag == 1 else f"{mag}*"
        core = coeff + body
    else:
        core = str(mag)
    if first:
        return ("-" if c < 0 else "") + core
    return (" - " if c < 0 else " + ") + core


def format_poly2(p: LaurentPoly2, variables: tuple[str, str] = ("x", "y")) -> str:
    """Render with terms in ascending lex exponent order (first variable major)."""
    if not p.terms:
        return "0"
    vx, vy = variables
    out = []
    for (a, b) in sorted(p.terms):
        c = p.terms[(a, b)]
        parts = []
        if a:
            parts.append(vx if a == 1 else f"{vx}^{a}")
        if b:
            parts.append(vy if b == 1 else f"{vy}^{b}")
        out.append(_format_term(c, parts, not out))
    return "".join(out)


def format_poly1(p: LaurentPoly1, variable: str = "t") -> str:
    if not p.terms:
        return "0"
    out = []
    for e in sorted(p.terms):
        c = p.terms[e]
        parts = []
        if e:
            parts.append(variable if e == 1 else f"{variable}^{e}")
        out.append(_format_term(c, parts, not out))
    return "".join(out)


def random_poly2(rng, max_terms=6, exp_range=(-5, 5), coeff_range=(-9, 9)) -> LaurentPoly2:
    """Small random polynomial for property tests (shared by the test suite)."""
    n = rng.randint(0, max_terms)
    terms = {}
    for _ in range(n):
        k = (rng.randint(*exp_range), rng.randint(*exp_range))
        c = rng.randint(*coeff_range)
        terms[k] = terms.get(k, 0) + c
    return LaurentPoly2(terms)
