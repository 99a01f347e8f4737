"""Exact arithmetic in the group ring Z[Z/p x Z].

An element is stored as p univariate Laurent polynomials in t, one per power
of the finite generator g.  The ring carries the involution g -> 1/g,
t -> 1/t, the augmentation t := 1 landing in Z[Z/p], and a canonical
representative for each orbit under the trivial units +-g^r*t^s.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import LaurentPoly1, LaurentPoly2, _format_term, _parse_terms


@dataclass(frozen=True)
class UnitGR:
    """The unit +-g^r*t^s of Z[Z/p x Z]; r is reduced mod p at use sites."""

    sign: int
    r: int
    s: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +-1")

    def as_elem(self, p: int) -> "GroupRingElem":
        return GroupRingElem.from_terms(p, {(self.r % p, self.s): self.sign})


class GroupRingElem:
    """Element of Z[Z/p x Z]: comps[i] is the t-polynomial coefficient of g^i."""

    __slots__ = ("p", "comps")

    def __init__(self, p: int, comps):
        if p < 2:
            raise ValueError("the period p must be at least 2")
        comps = tuple(comps)
        if len(comps) != p:
            raise ValueError("need exactly p component polynomials")
        self.p = p
        self.comps = comps

    @classmethod
    def zero(cls, p: int) -> "GroupRingElem":
        return cls(p, [LaurentPoly1.zero()] * p)

    @classmethod
    def one(cls, p: int) -> "GroupRingElem":
        return cls(p, [LaurentPoly1.one()] + [LaurentPoly1.zero()] * (p - 1))

    @classmethod
    def from_terms(cls, p: int, terms: dict) -> "GroupRingElem":
        """Build from {(g_index, t_exp): coeff}; g indices are reduced mod p."""
        comps = [dict() for _ in range(p)]
        for (i, e), c in terms.items():
            if not c:
                continue
            d = comps[i % p]
            s = d.get(e, 0) + c
            if s:
                d[e] = s
            else:
                d.pop(e, None)
        return cls(p, [LaurentPoly1(d) for d in comps])

    def _check_same_p(self, other: "GroupRingElem"):
        if self.p != other.p:
            raise ValueError(f"mismatched periods {self.p} and {other.p}")

    def __bool__(self):
        return any(self.comps)

    def __eq__(self, other):
        return (
            isinstance(other, GroupRingElem)
            and self.p == other.p
            and self.comps == other.comps
        )

    def __hash__(self):
        return hash((self.p, self.comps))

    def __add__(self, other):
        self._check_same_p(other)
        return GroupRingElem(self.p, [a + b for a, b in zip(self.comps, other.comps)])

    def __neg__(self):
        return GroupRingElem(self.p, [-a for a in self.comps])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Convolution of g-indices mod p; t-polynomials multiply."""
        self._check_same_p(other)
        p = self.p
        out = [LaurentPoly1.zero() for _ in range(p)]
        for i, a in enumerate(self.comps):
            if not a:
                continue
            for j, b in enumerate(other.comps):
                if not b:
                    continue
                k = (i + j) % p
                out[k] = out[k] + a * b
        return GroupRingElem(p, out)

    def conj(self) -> "GroupRingElem":
        """The involution g -> 1/g, t -> 1/t."""
        p = self.p
        return GroupRingElem(p, [self.comps[(p - i) % p].conj() for i in range(p)])

    def augment(self) -> list[int]:
        """Evaluation t := 1, as the coefficient vector of an element of Z[Z/p]."""
        return [c.coeff_sum() for c in self.comps]

    def lift_at_minus_one(self) -> LaurentPoly1:
        """Evaluate t := -1 and lift to a polynomial of degree < p in one variable.

        The result represents the image in Z[x]/(x^p - 1), so g^i contributes
        its t = -1 value as the coefficient of x^i.
        """
        return LaurentPoly1({i: c.eval_at(-1) for i, c in enumerate(self.comps) if c})

    def t_min(self) -> int:
        return min(c.min_exp() for c in self.comps if c)

    def t_max(self) -> int:
        return max(c.max_exp() for c in self.comps if c)

    def t_span(self) -> int:
        """Global max minus min t-exponent across all components; 0 if zero."""
        return (self.t_max() - self.t_min()) if self else 0

    def t_shift(self, s: int) -> "GroupRingElem":
        return GroupRingElem(self.p, [c.shift(s) for c in self.comps])

    def g_rotate(self, r: int) -> "GroupRingElem":
        """Multiply by g^r."""
        p = self.p
        return GroupRingElem(p, [self.comps[(i - r) % p] for i in range(p)])

    def terms(self):
        """Sorted (g_index, t_exp, coeff) triples, g-index major."""
        out = []
        for i, c in enumerate(self.comps):
            for e in sorted(c.terms):
                out.append((i, e, c.terms[e]))
        return out

    def g_one_specialization(self) -> LaurentPoly1:
        """The image under g := 1 (sum of all components)."""
        s = LaurentPoly1.zero()
        for c in self.comps:
            s = s + c
        return s

    def g_minus_one_specialization(self) -> LaurentPoly1:
        """The image under g := -1; a ring map only when p is even."""
        if self.p % 2 != 0:
            raise ValueError("g := -1 requires even p")
        s = LaurentPoly1.zero()
        for i, c in enumerate(self.comps):
            s = (s + c) if i % 2 == 0 else (s - c)
        return s

    def canonical(self) -> "GroupRingElem":
        """Representative of the orbit {+-g^r*t^s * self}.

        The minimum t-exponent is shifted to 0; among the p cyclic rotations
        the one whose sorted (g_index, t_exp, coeff) term sequence is
        lexicographically smallest wins, after each rotation's sign is fixed
        so that its first term has positive coefficient.  Idempotent.
        """
        if not self:
            return self
        m = self.t_min()
        best = None
        best_stream = None
        for r in range(self.p):
            cand = self.g_rotate(r).t_shift(-m)
            stream = cand.terms()
            if stream[0][2] < 0:
                cand = -cand
                stream = [(i, e, -c) for i, e, c in stream]
            if best_stream is None or stream < best_stream:
                best, best_stream = cand, stream
        return best

    def __repr__(self):
        return f"GroupRingElem(p={self.p}, {format_group_elem(self)!r})"


def project(poly: LaurentPoly2, p: int) -> GroupRingElem:
    """Ring projection Z[Z x Z] -> Z[Z/p x Z]: x -> g (mod p), y -> t."""
    if p < 2:
        raise ValueError("the period p must be at least 2")
    return GroupRingElem.from_terms(p, {(a, b): c for (a, b), c in poly.terms.items()})


def equal_up_to_unit(a: GroupRingElem, b: GroupRingElem) -> bool:
    """True iff a = (+-g^r*t^s) * b."""
    a._check_same_p(b)
    return a.canonical() == b.canonical()


def unit_between(a: GroupRingElem, b: GroupRingElem) -> UnitGR | None:
    """A unit u with a = u * b, if one exists (None otherwise)."""
    a._check_same_p(b)
    if not a or not b:
        return None
    s = a.t_min() - b.t_min()
    for sign in (1, -1):
        for r in range(a.p):
            cand = b.g_rotate(r).t_shift(s)
            if sign < 0:
                cand = -cand
            if cand == a:
                return UnitGR(sign, r, s)
    return None


def parse_group_elem(text: str, p: int) -> GroupRingElem:
    """Parse g,t polynomial text (same grammar as the x,y one) with period p."""
    if p < 2:
        raise ValueError("the period p must be at least 2")
    terms = _parse_terms(text, ("g", "t"))
    return GroupRingElem.from_terms(p, terms)


def format_group_elem(elem: GroupRingElem) -> str:
    """Render in the g,t grammar, terms ascending (g index major)."""
    trips = elem.terms()
    if not trips:
        return "0"
    out = []
    for i, e, c in trips:
        parts = []
        if i:
            parts.append("g" if i == 1 else f"g^{i}")
        if e:
            parts.append("t" if e == 1 else f"t^{e}")
        out.append(_format_term(c, parts, not out))
    return "".join(out)
