"""Decide whether an element of Z[Z/p x Z] is a norm a * conj(a) up to +-g^r*t^s.

The decision runs in three stages:

1. an exact battery of necessary conditions (self-conjugacy, augmentation,
   span parity, square conditions at the characters of Z/p, and complete
   univariate norm tests of the g := +-1 specializations);
2. a complete factorization-based norm decision in Z[t^+-1] for the
   univariate specializations;
3. a bounded witness search over Z[Z/p x Z].

The search is exhaustive within its bounds: candidates are normalized to
have t-support starting at 0 and augmentation vector (1, 0, ..., 0), the
ambient unit is pinned by exact self-conjugacy, and the t-layer equations of
a * conj(a) = target are solved slice by slice (the extreme layers are linear
in the unknown slice once the opposite one is fixed).  A vectorized character
prefilter discards almost all of the coefficient box before any exact work;
it is conservative, so no in-bounds witness can be missed.  The verdict is
three-valued because the battery plus a bounded search need not decide the
general case.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .groupring import (
    GroupRingElem,
    UnitGR,
    equal_up_to_unit,
    format_group_elem,
)
from .intpoly import IntPoly, cyclotomic, factor_univariate, is_perfect_square, resultant
from .laurent import LaurentPoly1, format_poly1


# ---------------------------------------------------------------------------
# univariate norm decision
# ---------------------------------------------------------------------------

def univ_norm_test(poly: LaurentPoly1) -> LaurentPoly1 | None:
    """Complete decision of P = f * conj(f) up to +-t^s in Z[t^+-1].

    Shift to an ordinary polynomial and factor: P is a norm exactly when the
    integer content is a perfect square (in absolute value; the sign is a
    unit), every self-reciprocal irreducible factor has even multiplicity,
    and the reciprocal pairs {q, qbar} occur with equal multiplicities.
    Returns a verifying witness (None if the test fails).
    """
    if not poly:
        raise ValueError("the zero polynomial is not testable")
    if poly.span() % 2 != 0:
        return None
    shifted = IntPoly(poly.coeffs())
    content, factors = factor_univariate(shifted)
    root = math.isqrt(abs(content))
    if root * root != abs(content):
        return None
    witness = IntPoly.const(root)
    seen: dict[tuple, int] = {q.coeffs: m for q, m in factors}
    for q, mult in factors:
        qbar = q.reversed().primitive()
        if qbar == q:
            if mult % 2 != 0:
                return None
            for _ in range(mult // 2):
                witness = witness * q
        else:
            if seen.get(qbar.coeffs) != mult:
                return None
            # take one member per pair: the lexicographically greater one
            if q.coeffs > qbar.coeffs:
                for _ in range(mult):
                    witness = witness * q
    f = LaurentPoly1.from_coeffs(witness.coeffs)
    if (f.coeff_sum() < 0) or (f.coeff_sum() == 0 and witness.lc() < 0):
        f = -f
    return f


# ---------------------------------------------------------------------------
# battery of necessary conditions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BatteryCheck:
    name: str
    status: str  # "pass" | "fail" | "skip"
    evidence: str


@dataclass(frozen=True)
class BatteryReport:
    checks: tuple[BatteryCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def first_failure(self) -> BatteryCheck | None:
        return next((c for c in self.checks if c.status == "fail"), None)


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def battery(elem: GroupRingElem) -> BatteryReport:
    """Evaluate every exact necessary condition for being a norm up to unit.

    B1 self-conjugacy up to unit; B2 augmentation is +-g^r; B3 even t-span;
    B4 square condition at the trivial character (g=1, t=-1); B5 square
    cyclotomic resultants for each divisor d > 1 of p; B6 univariate norm
    test at g=1; B7 univariate norm test at g=-1 (even p only).
    """
    if not elem:
        raise ValueError("battery requires a nonzero element")
    p = elem.p
    checks: list[BatteryCheck] = []

    conj_ok = equal_up_to_unit(elem, elem.conj())
    checks.append(
        BatteryCheck(
            "B1",
            "pass" if conj_ok else "fail",
            "self-conjugate up to unit"
            if conj_ok
            else f"canonical form differs from conjugate: {format_group_elem(elem.canonical())}"
            f" vs {format_group_elem(elem.conj().canonical())}",
        )
    )

    aug = elem.augment()
    aug_ok = sorted(map(abs, aug)) == [0] * (p - 1) + [1]
    checks.append(
        BatteryCheck(
            "B2",
            "pass" if aug_ok else "fail",
            f"augmentation {aug}",
        )
    )

    span = elem.t_span()
    checks.append(
        BatteryCheck("B3", "pass" if span % 2 == 0 else "fail", f"t-span {span}")
    )

    triv = sum(c.eval_at(-1) for c in elem.comps)
    checks.append(
        BatteryCheck(
            "B4",
            "pass" if is_perfect_square(abs(triv)) else "fail",
            str(abs(triv)),
        )
    )

    lift = IntPoly([elem.lift_at_minus_one().terms.get(i, 0) for i in range(p)])
    for d in _divisors(p):
        if d == 1:
            continue
        r = abs(resultant(cyclotomic(d), lift))
        checks.append(
            BatteryCheck(
                f"B5[d={d}]",
                "pass" if is_perfect_square(r) else "fail",
                str(r),
            )
        )

    checks.append(_univ_check("B6", elem.g_one_specialization()))
    if p % 2 == 0:
        checks.append(_univ_check("B7", elem.g_minus_one_specialization()))
    else:
        checks.append(BatteryCheck("B7", "skip", "p odd"))

    return BatteryReport(tuple(checks))


def _univ_check(name: str, specialization: LaurentPoly1) -> BatteryCheck:
    if not specialization:
        return BatteryCheck(name, "fail", "specialization vanishes")
    w = univ_norm_test(specialization)
    if w is None:
        return BatteryCheck(
            name, "fail", f"{format_poly1(specialization)} is not a univariate norm"
        )
    return BatteryCheck(name, "pass", f"witness {format_poly1(w)}")


# ---------------------------------------------------------------------------
# bounded witness search
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SearchBounds:
    """Box for the witness search.

    max_t_degree None means half the t-span of the input.  The budget counts
    candidate work units: box vectors examined by the sweep plus exact solves
    and verifications.
    """

    max_abs_coeff: int = 3
    max_t_degree: int | None = None
    budget: int = 10_000_000

    def __post_init__(self):
        if self.max_abs_coeff < 0:
            raise ValueError("max_abs_coeff must be >= 0")
        if self.max_t_degree is not None and self.max_t_degree < 0:
            raise ValueError("max_t_degree must be >= 0")
        if self.budget < 1:
            raise ValueError("budget must be positive")


@dataclass(frozen=True)
class SearchOutcome:
    witness: GroupRingElem | None
    budget_exhausted: bool
    nodes: int
    max_t_degree: int


class _BudgetOut(Exception):
    pass


class _Budget:
    __slots__ = ("left", "used")

    def __init__(self, amount: int):
        self.left = amount
        self.used = 0

    def spend(self, n: int):
        self.used += n
        self.left -= n
        if self.left < 0:
            raise _BudgetOut


def _sigma(v: tuple[int, ...]) -> tuple[int, ...]:
    p = len(v)
    return tuple(v[(-i) % p] for i in range(p))


def _conv(u, v) -> tuple[int, ...]:
    p = len(u)
    return tuple(sum(u[m] * v[(k - m) % p] for m in range(p)) for k in range(p))


def _layer(elem: GroupRingElem, ell: int) -> tuple[int, ...]:
    return tuple(c.terms.get(ell, 0) for c in elem.comps)


def _column_echelon(matrix: list[list[int]]):
    """Column echelon form by unimodular column operations: H = A*U."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    h = [list(r) for r in matrix]
    u = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]
    pivots: list[tuple[int, int]] = []
    c = 0
    for r in range(rows):
        if c >= cols:
            break
        while True:
            nz = [j for j in range(c, cols) if h[r][j]]
            if len(nz) <= 1:
                break
            j0 = min(nz, key=lambda j: abs(h[r][j]))
            for j in nz:
                if j == j0:
                    continue
                q = h[r][j] // h[r][j0]
                if q:
                    for i in range(rows):
                        h[i][j] -= q * h[i][j0]
                    for i in range(cols):
                        u[i][j] -= q * u[i][j0]
        nz = [j for j in range(c, cols) if h[r][j]]
        if not nz:
            continue
        j0 = nz[0]
        if j0 != c:
            for i in range(rows):
                h[i][c], h[i][j0] = h[i][j0], h[i][c]
            for i in range(cols):
                u[i][c], u[i][j0] = u[i][j0], u[i][c]
        if h[r][c] < 0:
            for i in range(rows):
                h[i][c] = -h[i][c]
            for i in range(cols):
                u[i][c] = -u[i][c]
        pivots.append((r, c))
        c += 1
    return h, u, pivots


def _solve_integer(matrix: list[list[int]], rhs) -> tuple[list[int] | None, list[list[int]]]:
    """One integer solution of matrix*x = rhs (or None) plus a kernel basis."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    h, u, pivots = _column_echelon(matrix)
    rank = len(pivots)
    kernel = [[u[i][j] for i in range(cols)] for j in range(rank, cols)]
    y = [0] * cols
    pc = dict(pivots)
    for r in range(rows):
        s = rhs[r] - sum(h[r][c] * y[c] for c in range(rank) if h[r][c])
        if r in pc:
            c = pc[r]
            if s % h[r][c] != 0:
                return None, kernel
            y[c] = s // h[r][c]
        elif s != 0:
            return None, kernel
    x = [sum(u[i][j] * y[j] for j in range(cols)) for i in range(cols)]
    return x, kernel


def _bounded_lattice_points(origin: list[int], basis: list[list[int]], bound: int):
    """All points origin + integer combinations of basis with sup-norm <= bound.

    The basis is echelonized first so coordinates can be boxed one pivot row
    at a time; enumeration order is deterministic (combination coefficients
    ascending)."""
    if not basis:
        if all(abs(v) <= bound for v in origin):
            yield tuple(origin)
        return
    p = len(origin)
    cols = [[basis[j][i] for j in range(len(basis))] for i in range(p)]
    h, _, pivots = _column_echelon(cols)
    dim = len(pivots)
    if dim == 0:
        if all(abs(v) <= bound for v in origin):
            yield tuple(origin)
        return

    piv_rows = [r for r, _ in pivots]

    def rec(j: int, coeffs: list[int]):
        if j == dim:
            point = list(origin)
            for jj, m in enumerate(coeffs):
                if m:
                    for i in range(p):
                        point[i] += m * h[i][jj]
            if all(abs(v) <= bound for v in point):
                yield tuple(point)
            return
        r = piv_rows[j]
        base = origin[r] + sum(coeffs[jj] * h[r][jj] for jj in range(j))
        step = h[r][j]
        # exact integer ceil/floor: ceil(a/b) == -((-a) // b) for any nonzero b
        if step > 0:
            lo, hi = -((bound + base) // step), (bound - base) // step
        else:
            lo, hi = -((base - bound) // step), (-bound - base) // step
        for m in range(lo, hi + 1):
            yield from rec(j + 1, coeffs + [m])

    yield from rec(0, [])


def _solve_conv_bounded(weight, rhs, bound: int):
    """Bounded integer solutions x of x (*) weight = rhs (cyclic convolution)."""
    p = len(weight)
    matrix = [[weight[(k - m) % p] for m in range(p)] for k in range(p)]
    x0, kernel = _solve_integer(matrix, list(rhs))
    if x0 is None:
        return []
    return list(_bounded_lattice_points(x0, kernel, bound))


def _char_matrix(p: int) -> np.ndarray:
    k = np.arange(p)
    return np.exp(2j * np.pi * np.outer(k, k) / p)


def _box_chunks(p: int, bound: int, budget: _Budget, chunk_size: int = 131072):
    vals = range(-bound, bound + 1)
    it = itertools.product(vals, repeat=p)
    while True:
        chunk = list(itertools.islice(it, chunk_size))
        if not chunk:
            return
        budget.spend(len(chunk))
        yield np.array(chunk, dtype=np.int64)


def _e0(p: int) -> tuple[int, ...]:
    return tuple([1] + [0] * (p - 1))


def _vec_sub(u, v) -> tuple[int, ...]:
    return tuple(a - b for a, b in zip(u, v))


class _Searcher:
    """Complete-in-bounds witness enumeration against one exact target T.

    Candidates a = sum alpha_j t^j (0 <= j <= top) must satisfy
    a * conj(a) = T exactly; the augmentation pins one middle slice and the
    extreme t-layers of the product pin the rest, so only alpha_0 (plus, for
    top degree >= 4, the slices below the middle) is enumerated over the box.
    """

    def __init__(self, target: GroupRingElem, bound: int, budget: _Budget):
        self.T = target
        self.p = target.p
        self.C = bound
        self.budget = budget
        self.found: list[GroupRingElem] = []
        self.chars = _char_matrix(self.p)
        t0 = np.array(_layer(target, 0), dtype=np.float64)
        self.t0c = (self.chars @ t0).real

    def feasible(self) -> bool:
        tol = 1e-6 * (1.0 + np.abs(self.t0c).max())
        return bool((self.t0c >= -tol).all())

    def _full_check(self, slices: list[tuple[int, ...]]):
        self.budget.spend(1)
        p = self.p
        terms = {}
        for j, alpha in enumerate(slices):
            for i, c in enumerate(alpha):
                if c:
                    terms[(i, j)] = c
        cand = GroupRingElem.from_terms(p, terms)
        if not cand:
            return
        if cand.augment() != [1] + [0] * (p - 1):
            return
        if cand * cand.conj() == self.T:
            self.found.append(cand)

    def sweep(self, top: int):
        p, C = self.p, self.C
        if C == 0:
            return
        if top == 0:
            # augmentation forces a = 1
            self.budget.spend(1)
            self._full_check([_e0(p)])
            return
        t_top = _layer(self.T, top)
        td = np.array(t_top, dtype=np.float64)
        tdc = self.chars @ td
        td2 = np.abs(tdc) ** 2
        tol = 1e-6 * (1.0 + np.abs(self.t0c).max() + td2.max())
        for chunk in _box_chunks(p, C, self.budget):
            evals = chunk.astype(np.float64) @ self.chars.T
            a2 = np.abs(evals) ** 2
            mask = (a2 <= self.t0c + tol).all(axis=1)
            mask &= (td2 <= a2 * self.t0c + tol).all(axis=1)
            mask &= (chunk != 0).any(axis=1)
            for row in chunk[mask]:
                self._process_alpha0(tuple(int(v) for v in row), top, t_top)

    def _process_alpha0(self, alpha0: tuple[int, ...], top: int, t_top):
        self.budget.spend(1)
        p, C = self.p, self.C
        e0 = _e0(p)
        s0 = _sigma(alpha0)
        if top == 1:
            alpha1 = _vec_sub(e0, alpha0)
            if all(abs(v) <= C for v in alpha1):
                self._full_check([alpha0, alpha1])
            return
        for alpha_top in _solve_conv_bounded(s0, t_top, C):
            if top == 2:
                alpha1 = _vec_sub(_vec_sub(e0, alpha0), alpha_top)
                if all(abs(v) <= C for v in alpha1):
                    self._full_check([alpha0, alpha1, alpha_top])
            elif top == 3:
                self._solve_top3(alpha0, alpha_top)
            else:
                self._enumerate_middle(alpha0, alpha_top, top)

    def _solve_top3(self, alpha0, alpha3):
        # layer 2 equation with alpha2 = S - alpha1 substituted is linear in alpha1
        p, C = self.p, self.C
        s = _vec_sub(_vec_sub(_e0(p), alpha0), alpha3)
        rhs = _vec_sub(_layer(self.T, 2), _conv(s, _sigma(alpha0)))
        matrix = [
            [-alpha0[(m - k) % p] + alpha3[(k + m) % p] for m in range(p)]
            for k in range(p)
        ]
        x0, kernel = _solve_integer(matrix, list(rhs))
        if x0 is None:
            return
        for alpha1 in _bounded_lattice_points(x0, kernel, C):
            alpha2 = _vec_sub(s, alpha1)
            if all(abs(v) <= C for v in alpha2):
                self._full_check([alpha0, alpha1, alpha2, alpha3])

    def _enumerate_middle(self, alpha0, alpha_top, top: int):
        # generic fallback: enumerate slices 1..top-2, fix one by augmentation
        p, C = self.p, self.C
        free = top - 2
        partial = _vec_sub(_vec_sub(_e0(p), alpha0), alpha_top)
        for combo in itertools.product(
            itertools.product(range(-C, C + 1), repeat=p), repeat=free
        ):
            self.budget.spend(1)
            rest = partial
            for v in combo:
                rest = _vec_sub(rest, v)
            if any(abs(v) > C for v in rest):
                continue
            slices = [alpha0, *combo, rest, alpha_top]
            self._full_check(slices)


def _self_conjugating_targets(elem: GroupRingElem) -> list[GroupRingElem]:
    """All unit multiples u*P that are exactly self-conjugate with total sum 1."""
    p = elem.p
    m, mx = elem.t_min(), elem.t_max()
    if (m + mx) % 2 != 0:
        return []
    s = -(m + mx) // 2
    out = []
    for sign in (1, -1):
        for r in range(p):
            t = UnitGR(sign, r, s).as_elem(p) * elem
            if sum(t.augment()) == 1 and t.conj() == t:
                out.append(t)
    return out


def witness_search(elem: GroupRingElem, bounds: SearchBounds | None = None) -> SearchOutcome:
    """Exhaustive-within-bounds search for a with a*conj(a) = elem up to unit.

    Among all verifying candidates in the box the one with the
    lexicographically smallest coefficient stream (g-index major, then
    ascending t-exponent) is returned.  Budget exhaustion is reported
    separately from a fully exhausted search space.
    """
    if not elem:
        raise ValueError("cannot search for a witness of zero")
    if bounds is None:
        bounds = SearchBounds()
    span = elem.t_span()
    max_deg = bounds.max_t_degree if bounds.max_t_degree is not None else span // 2
    budget = _Budget(bounds.budget)
    half_span = (span + 1) // 2
    found: list[GroupRingElem] = []
    exhausted = False
    try:
        for target in _self_conjugating_targets(elem):
            searcher = _Searcher(target, bounds.max_abs_coeff, budget)
            if not searcher.feasible():
                continue
            for top in range(half_span, max_deg + 1):
                searcher.sweep(top)
            found.extend(searcher.found)
    except _BudgetOut:
        exhausted = True

    witness = None
    if found:
        witness = min(found, key=lambda a: _stream(a, max_deg))
    return SearchOutcome(witness, exhausted, budget.used, max_deg)


def _stream(elem: GroupRingElem, max_deg: int) -> tuple[int, ...]:
    return tuple(
        elem.comps[i].terms.get(j, 0)
        for i in range(elem.p)
        for j in range(max_deg + 1)
    )


# ---------------------------------------------------------------------------
# verdicts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Norm:
    witness: GroupRingElem


@dataclass(frozen=True)
class NotNorm:
    check: str
    evidence: str


@dataclass(frozen=True)
class Inconclusive:
    max_abs_coeff: int
    max_t_degree: int
    budget: int
    reason: str  # "search-exhausted" | "budget-exhausted"


Verdict = Norm | NotNorm | Inconclusive


def realize(a: GroupRingElem) -> GroupRingElem:
    """The canonical norm a * conj(a) of a witness with a(g, 1) = 1."""
    expected = [1] + [0] * (a.p - 1)
    if a.augment() != expected:
        raise ValueError(
            f"realize requires a(g,1) = 1, i.e. augmentation {expected}; got {a.augment()}"
        )
    return (a * a.conj()).canonical()


def verify_witness(elem: GroupRingElem, a: GroupRingElem) -> bool:
    """True iff a has augmentation (1,0,...,0) and a*conj(a) = elem up to unit."""
    elem._check_same_p(a)
    if a.augment() != [1] + [0] * (a.p - 1):
        return False
    return equal_up_to_unit(a * a.conj(), elem)


def decide(elem: GroupRingElem, bounds: SearchBounds | None = None) -> tuple[Verdict, BatteryReport]:
    """Full decision: battery first, then bounded witness search.

    NotNorm cites the first failing battery check; Norm carries a witness
    that has been re-verified; a passing battery with an empty-handed search
    yields Inconclusive with the bounds that were used.
    """
    if not elem:
        raise ValueError("cannot decide the zero element")
    if bounds is None:
        bounds = SearchBounds()
    report = battery(elem)
    if not report.passed:
        bad = report.first_failure()
        return NotNorm(bad.name, bad.evidence), report
    outcome = witness_search(elem, bounds)
    if outcome.witness is not None:
        if not verify_witness(elem, outcome.witness):
            raise AssertionError("internal error: witness failed re-verification")
        return Norm(outcome.witness), report
    reason = "budget-exhausted" if outcome.budget_exhausted else "search-exhausted"
    return (
        Inconclusive(bounds.max_abs_coeff, outcome.max_t_degree, bounds.budget, reason),
        report,
    )
