"""Two-component link input, Fox calculus, and the Alexander polynomial.

Links arrive either as braid words (closure taken) or as explicit group
presentations with abelianization data.  A Wirtinger-style presentation is
built from the braid diagram: one generator per arc, one relation per
crossing, with the closure identifications folded in, and the Alexander
polynomial is the gcd of the column-deleted minors of the Fox Jacobian after
dropping one (redundant) relator.

Meridians of the first component abelianize to x, those of the second to y.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import (
    LaurentPoly1,
    LaurentPoly2,
    equal_up_to_unit1,
    gcd2,
    matrix_det,
)


class BraidSyntaxError(ValueError):
    """Malformed braid word text."""


class ComponentCountError(ValueError):
    """The braid closure does not have exactly two components."""


class PresentationError(ValueError):
    """Malformed or inconsistent group presentation."""


@dataclass(frozen=True)
class BraidWord:
    """A braid on `strands` strands; letters k > 0 mean sigma_k, k < 0 inverses."""

    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strands < 2:
            raise BraidSyntaxError("a braid needs at least 2 strands")
        for k in self.letters:
            if k == 0 or abs(k) >= self.strands:
                raise BraidSyntaxError(
                    f"letter {k} out of range for {self.strands} strands"
                )


@dataclass(frozen=True)
class LinkInfo:
    """Closure data: component count, linking number, component per strand."""

    components: int
    linking_number: int
    strand_component: tuple[int, ...]


def parse_braid(text: str) -> BraidWord:
    """Parse `n; k1 k2 ... km` braid text."""
    if ";" not in text:
        raise BraidSyntaxError("expected `n; k1 k2 ...` with a semicolon")
    head, _, tail = text.partition(";")
    try:
        n = int(head.strip())
    except ValueError:
        raise BraidSyntaxError(f"bad strand count {head.strip()!r}") from None
    try:
        letters = tuple(int(w) for w in tail.split())
    except ValueError:
        raise BraidSyntaxError(f"bad braid letters {tail.strip()!r}") from None
    return BraidWord(n, letters)


def analyze_closure(braid: BraidWord) -> LinkInfo:
    """Component structure and linking number of the braid closure.

    Components are the cycles of the underlying permutation.  The linking
    number is half the signed count of crossings whose two strands lie on
    different components.
    """
    n = braid.strands
    # track which strand occupies each position while reading the word
    pos_strand = list(range(n))
    crossings = []  # (strand_a, strand_b, sign)
    for k in braid.letters:
        i = abs(k) - 1
        sa, sb = pos_strand[i], pos_strand[i + 1]
        crossings.append((sa, sb, 1 if k > 0 else -1))
        pos_strand[i], pos_strand[i + 1] = sb, sa
    # closure: bottom position i rejoins top position i, so strand s ends where
    # pos_strand places it; the permutation sends s to the strand index of the
    # top position it reconnects to
    nxt = {}
    for i, s in enumerate(pos_strand):
        nxt[s] = i
    comp = [-1] * n
    count = 0
    for s in range(n):
        if comp[s] >= 0:
            continue
        cur = s
        while comp[cur] < 0:
            comp[cur] = count
            cur = nxt[cur]
        count += 1
    signed = sum(sign for sa, sb, sign in crossings if comp[sa] != comp[sb])
    return LinkInfo(count, signed // 2, tuple(comp))


@dataclass(frozen=True)
class GroupPresentation:
    """Generators, relator words, and the abelianization of each generator.

    Relators are sequences of signed 1-based generator indices (sign encodes
    inversion).  `abmap[i]` is the exponent pair (a, b) of the image
    x^a * y^b of generator i.  Every relator must abelianize to (0, 0).
    """

    generators: tuple[str, ...]
    relators: tuple[tuple[int, ...], ...]
    abmap: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(self.abmap) != len(self.generators):
            raise PresentationError("abelianization data must cover every generator")
        for word in self.relators:
            a = b = 0
            for k in word:
                if k == 0 or abs(k) > len(self.generators):
                    raise PresentationError(f"relator letter {k} out of range")
                da, db = self.abmap[abs(k) - 1]
                if k > 0:
                    a, b = a + da, b + db
                else:
                    a, b = a - da, b - db
            if (a, b) != (0, 0):
                raise PresentationError(
                    "relator does not abelianize to the identity: "
                    + " ".join(str(k) for k in word)
                )


def fox_derivative(word: tuple[int, ...], j: int, abmap) -> LaurentPoly2:
    """Abelianized Fox derivative of `word` with respect to generator j (0-based).

    Follows the free-calculus rules d(uv) = du + ab(u) dv, d(x_j) = 1,
    d(x_j^-1) = -ab(x_j)^-1, with ab(.) the image in Z[x^+-1, y^+-1].
    """
    result = LaurentPoly2.zero()
    prefix = LaurentPoly2.one()
    for k in word:
        idx = abs(k) - 1
        if idx >= len(abmap):
            raise PresentationError(f"unknown generator index {idx}")
        a, b = abmap[idx]
        if k > 0:
            if idx == j:
                result = result + prefix
            prefix = prefix.shift(a, b)
        else:
            prefix = prefix.shift(-a, -b)
            if idx == j:
                result = result - prefix
    return result


def alexander_matrix(pres: GroupPresentation) -> list[list[LaurentPoly2]]:
    """Fox Jacobian: rows are relators, columns are generators."""
    return [
        [fox_derivative(word, j, pres.abmap) for j in range(len(pres.generators))]
        for word in pres.relators
    ]


def alexander_polynomial(pres: GroupPresentation, drop_relator: int | None = None) -> LaurentPoly2:
    """gcd of the column-deleted minors of the Jacobian, in canonical form.

    Requires the Wirtinger shape (as many relators as generators, one of them
    redundant); one relator is dropped (the last by default) and all n
    column-deleted (n-1)x(n-1) determinants are folded by gcd.
    """
    n = len(pres.generators)
    if len(pres.relators) != n:
        raise PresentationError(
            f"need as many relators as generators, got {len(pres.relators)} and {n}"
        )
    if n < 2:
        raise PresentationError("need at least two generators")
    drop = n - 1 if drop_relator is None else drop_relator
    if not 0 <= drop < n:
        raise PresentationError(f"relator index {drop} out of range")
    rows = [r for i, r in enumerate(alexander_matrix(pres)) if i != drop]
    minors = []
    for j in range(n):
        sub = [row[:j] + row[j + 1:] for row in rows]
        minors.append(matrix_det(sub))
    g = LaurentPoly2.zero()
    for d in minors:
        if not d:
            continue
        g = d if not g else gcd2(g, d)
    return g.canonical()


def column_minors(pres: GroupPresentation, drop_relator: int | None = None) -> list[LaurentPoly2]:
    """The column-deleted determinants D_j themselves (for the identities tests)."""
    n = len(pres.generators)
    drop = n - 1 if drop_relator is None else drop_relator
    rows = [r for i, r in enumerate(alexander_matrix(pres)) if i != drop]
    out = []
    for j in range(n):
        sub = [row[:j] + row[j + 1:] for row in rows]
        out.append(matrix_det(sub))
    return out


def torres_residual(delta: LaurentPoly2, linking_number: int) -> bool:
    """Classical sanity check for a 2-component link with unknotted first
    component: delta(x, 1) must be 1 + x + ... + x^(|lk|-1) up to a unit."""
    if linking_number == 0:
        raise ValueError("the residual test needs a nonzero linking number")
    target = LaurentPoly1({e: 1 for e in range(abs(linking_number))})
    return equal_up_to_unit1(delta.specialize("y", 1), target)


# ---------------------------------------------------------------------------
# braid closure -> Wirtinger presentation
# ---------------------------------------------------------------------------

class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, a):
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # keep the smaller id as representative for stable generator order
            if ra > rb:
                ra, rb = rb, ra
            self.parent[rb] = ra


def braid_to_presentation(braid: BraidWord) -> GroupPresentation:
    """Wirtinger presentation of the braid closure (two components required).

    Arc bookkeeping: top positions start arcs 0..n-1; each crossing breaks the
    under-strand and starts one new arc, contributing the relation
    new = over * under * over^-1 (positive crossing; conjugation by the
    inverse for negative).  Closing the braid identifies each bottom arc with
    the top arc of the same position.  Components with no undercrossings keep
    their single arc and contribute an empty relator, so the presentation
    always has exactly as many relators as generators, one redundant.
    """
    info = analyze_closure(braid)
    if info.components != 2:
        raise ComponentCountError(
            f"closure has {info.components} component(s); need exactly 2"
        )
    n = braid.strands
    pos_arc = list(range(n))
    pos_strand = list(range(n))
    arc_strand = {i: i for i in range(n)}
    next_arc = n
    raw_relations = []  # (new_arc, over_arc, under_arc, positive)
    for k in braid.letters:
        i = abs(k) - 1
        if k > 0:
            over_pos, under_pos = i, i + 1
        else:
            over_pos, under_pos = i + 1, i
        over_arc = pos_arc[over_pos]
        under_arc = pos_arc[under_pos]
        new_arc = next_arc
        next_arc += 1
        arc_strand[new_arc] = pos_strand[under_pos]
        raw_relations.append((new_arc, over_arc, under_arc, k > 0))
        sa, sb = pos_strand[i], pos_strand[i + 1]
        pos_strand[i], pos_strand[i + 1] = sb, sa
        if k > 0:
            pos_arc[i], pos_arc[i + 1] = new_arc, over_arc
        else:
            pos_arc[i], pos_arc[i + 1] = over_arc, new_arc

    uf = _UnionFind(next_arc)
    for i in range(n):
        uf.union(pos_arc[i], i)

    reps = []
    rep_index = {}
    for arc in range(next_arc):
        r = uf.find(arc)
        if r not in rep_index:
            rep_index[r] = len(reps)
            reps.append(r)

    def gen(arc) -> int:
        return rep_index[uf.find(arc)] + 1  # 1-based

    relators = []
    for new_arc, over_arc, under_arc, positive in raw_relations:
        w, u, v = gen(new_arc), gen(over_arc), gen(under_arc)
        if positive:
            relators.append((w, u, -v, -u))  # w (u v u^-1)^-1
        else:
            relators.append((w, -u, -v, u))  # w (u^-1 v u)^-1

    # a component whose strands are never undercrossed produced no relation;
    # pad with an empty (vacuous) relator to keep the square shape
    undercrossed = {info.strand_component[arc_strand[new]] for new, _, _, _ in raw_relations}
    for comp in range(info.components):
        if comp not in undercrossed:
            relators.append(())

    comp0 = info.strand_component[0]
    names = []
    abmap = []
    for r in reps:
        names.append(f"a{rep_index[r] + 1}")
        comp = info.strand_component[arc_strand[r]]
        abmap.append((1, 0) if comp == comp0 else (0, 1))

    if len(relators) != len(names):
        raise PresentationError(
            f"internal arc bookkeeping error: {len(names)} generators, {len(relators)} relators"
        )
    return GroupPresentation(tuple(names), tuple(relators), tuple(abmap))


# ---------------------------------------------------------------------------
# presentation file format
# ---------------------------------------------------------------------------

def parse_presentation(text: str) -> GroupPresentation:
    """Parse the presentation file format:

        gens: a b c
        ab: a=x b=y c=x*y^2
        rel: a b a^-1 b^-1

    One `rel:` line per relator (empty tail allowed for a vacuous relator);
    `^<int>` powers on relator letters are expanded.
    """
    gens: list[str] = []
    abmap: dict[str, tuple[int, int]] = {}
    relators: list[tuple[int, ...]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, tail = line.partition(":")
        key = key.strip().lower()
        if key == "gens":
            gens.extend(tail.split())
        elif key == "ab":
            for item in tail.split():
                name, _, mono = item.partition("=")
                if not mono:
                    raise PresentationError(f"bad ab entry {item!r}")
                abmap[name.strip()] = _parse_monomial(mono.strip())
        elif key == "rel":
            relators.append(_parse_relator(tail, gens))
        else:
            raise PresentationError(f"unknown line {line!r}")
    if not gens:
        raise PresentationError("no generators declared")
    missing = [g for g in gens if g not in abmap]
    if missing:
        raise PresentationError(f"no abelianization for generator(s) {missing}")
    return GroupPresentation(
        tuple(gens), tuple(relators), tuple(abmap[g] for g in gens)
    )


def _parse_monomial(text: str) -> tuple[int, int]:
    from .laurent import parse_poly2

    p = parse_poly2(text, ("x", "y"))
    if len(p.terms) != 1:
        raise PresentationError(f"abelianization image must be a monomial: {text!r}")
    (a, b), c = next(iter(p.terms.items()))
    if c != 1:
        raise PresentationError(f"abelianization image must have coefficient 1: {text!r}")
    return a, b


def _parse_relator(tail: str, gens: list[str]) -> tuple[int, ...]:
    word: list[int] = []
    for tok in tail.split():
        name, _, power = tok.partition("^")
        if name not in gens:
            raise PresentationError(f"unknown generator {name!r} in relator")
        idx = gens.index(name) + 1
        e = 1
        if power:
            try:
                e = int(power)
            except ValueError:
                raise PresentationError(f"bad power in relator token {tok!r}") from None
        if e == 0:
            continue
        letter = idx if e > 0 else -idx
        word.extend([letter] * abs(e))
    return tuple(word)
