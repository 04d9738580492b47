"""Multivariate polynomials over a cyclotomic field, term orders, and a
desk-scale Buchberger engine producing unique reduced Groebner bases.

Monomials are dense exponent tuples over variables x_1..x_nvars.  All
coefficient arithmetic is exact (CycloElem over Q), so a zero test is a
hard equality: any nonzero remainder is meaningful, never noise.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from fractions import Fraction

from . import cyclo
from .cyclo import CycloElem
from .graphs import GuardExceeded

Exps = tuple[int, ...]


class BudgetExceeded(Exception):
    """Buchberger ran past its configured time budget."""


@dataclass(frozen=True)
class TermOrder:
    """lex or graded-lex order with an explicit variable priority.

    `priority` lists variables from largest to smallest, so
    TermOrder("lex", (1, 2, 3)) is lex with x3 < x2 < x1.
    """

    kind: str
    priority: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in ("lex", "grlex"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if sorted(self.priority) != list(range(1, len(self.priority) + 1)):
            raise ValueError("priority must be a permutation of 1..nvars")

    @classmethod
    def lex(cls, nvars: int) -> "TermOrder":
        return cls("lex", tuple(range(1, nvars + 1)))

    @classmethod
    def grlex(cls, nvars: int) -> "TermOrder":
        return cls("grlex", tuple(range(1, nvars + 1)))

    @classmethod
    def for_cycle(cls, vertices, nvars: int, kind: str = "lex") -> "TermOrder":
        """Order with x_{v_1} > ... > x_{v_k}; leftover variables smallest."""
        rest = [v for v in range(1, nvars + 1) if v not in set(vertices)]
        return cls(kind, tuple(vertices) + tuple(rest))

    @property
    def nvars(self) -> int:
        return len(self.priority)

    def key(self, m: Exps) -> tuple:
        lexpart = tuple(m[v - 1] for v in self.priority)
        if self.kind == "lex":
            return lexpart
        return (sum(m), lexpart)


def exps_mul(a: Exps, b: Exps) -> Exps:
    return tuple(x + y for x, y in zip(a, b))


def exps_divides(a: Exps, b: Exps) -> bool:
    return all(x <= y for x, y in zip(a, b))


def exps_div(a: Exps, b: Exps) -> Exps:
    return tuple(x - y for x, y in zip(a, b))


def exps_lcm(a: Exps, b: Exps) -> Exps:
    return tuple(max(x, y) for x, y in zip(a, b))


def exps_degree(a: Exps) -> int:
    return sum(a)


class CycloPoly:
    """Sparse polynomial: dict from exponent tuple to nonzero CycloElem."""

    __slots__ = ("n", "nvars", "terms")

    def __init__(self, n: int, nvars: int, terms: dict[Exps, CycloElem] | None = None):
        self.n = n
        self.nvars = nvars
        self.terms = {m: c for m, c in (terms or {}).items() if not c.is_zero()}

    @classmethod
    def zero(cls, n: int, nvars: int) -> "CycloPoly":
        return cls(n, nvars, {})

    @classmethod
    def constant(cls, n: int, nvars: int, value) -> "CycloPoly":
        c = value if isinstance(value, CycloElem) else cyclo.rational(n, value)
        return cls(n, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, n: int, nvars: int, v: int, exp: int = 1) -> "CycloPoly":
        e = [0] * nvars
        e[v - 1] = exp
        return cls(n, nvars, {tuple(e): cyclo.one(n)})

    def _check(self, other: "CycloPoly"):
        if (self.n, self.nvars) != (other.n, other.nvars):
            raise ValueError("polynomials from different rings")

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(exps_degree(m) == 0 for m in self.terms)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(exps_degree(m) for m in self.terms)

    def __add__(self, other: "CycloPoly") -> "CycloPoly":
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            acc = terms.get(m)
            terms[m] = c if acc is None else acc + c
        return CycloPoly(self.n, self.nvars, terms)

    def __sub__(self, other: "CycloPoly") -> "CycloPoly":
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            acc = terms.get(m)
            terms[m] = -c if acc is None else acc - c
        return CycloPoly(self.n, self.nvars, terms)

    def __neg__(self) -> "CycloPoly":
        return CycloPoly(self.n, self.nvars, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other: "CycloPoly") -> "CycloPoly":
        self._check(other)
        terms: dict[Exps, CycloElem] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = exps_mul(m1, m2)
                c = c1 * c2
                acc = terms.get(m)
                terms[m] = c if acc is None else acc + c
        return CycloPoly(self.n, self.nvars, terms)

    def scaled(self, c: CycloElem) -> "CycloPoly":
        if c.is_zero():
            return CycloPoly.zero(self.n, self.nvars)
        return CycloPoly(self.n, self.nvars, {m: t * c for m, t in self.terms.items()})

    def mul_term(self, coeff: CycloElem, exps: Exps) -> "CycloPoly":
        if coeff.is_zero():
            return CycloPoly.zero(self.n, self.nvars)
        return CycloPoly(self.n, self.nvars, {exps_mul(m, exps): c * coeff for m, c in self.terms.items()})

    def leading(self, order: TermOrder) -> tuple[Exps, CycloElem]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def monic(self, order: TermOrder) -> "CycloPoly":
        _, lc = self.leading(order)
        if lc == cyclo.one(self.n):
            return self
        return self.scaled(lc.inverse())

    def evaluate(self, point) -> CycloElem:
        """point[v-1] is the value of x_v."""
        total = cyclo.zero(self.n)
        for m, c in self.terms.items():
            val = c
            for v, e in enumerate(m):
                if e:
                    val = val * (point[v] ** e)
            total = total + val
        return total

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CycloPoly)
            and (self.n, self.nvars) == (other.n, other.nvars)
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, self.nvars, frozenset(self.terms.items())))

    def render(self, order: TermOrder | None = None) -> str:
        if not self.terms:
            return "0"
        order = order or TermOrder.grlex(self.nvars)
        parts = []
        for m in sorted(self.terms, key=order.key, reverse=True):
            c = self.terms[m]
            factors = [f"x{v + 1}^{e}" if e > 1 else f"x{v + 1}" for v, e in enumerate(m) if e]
            cstr = cyclo.render(c)
            needs_parens = cstr.startswith("-") or "+" in cstr or " " in cstr
            if not factors:
                parts.append(f"({cstr})" if needs_parens else cstr)
            elif cstr == "1":
                parts.append("*".join(factors))
            else:
                parts.append(f"({cstr})*" + "*".join(factors))
        return " + ".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"CycloPoly({self.render()})"


def normal_form(p: CycloPoly, basis: list[CycloPoly], order: TermOrder) -> CycloPoly:
    """Remainder of multivariate division of p by the basis (in list order)."""
    if not basis:
        return p
    n, nvars = p.n, p.nvars
    leads = [g.leading(order) for g in basis]
    work = dict(p.terms)
    remainder: dict[Exps, CycloElem] = {}
    while work:
        m = max(work, key=order.key)
        c = work.pop(m)
        if c.is_zero():
            continue
        for g, (lm, lc) in zip(basis, leads):
            if exps_divides(lm, m):
                factor = c * lc.inverse()
                shift = exps_div(m, lm)
                for gm, gc in g.terms.items():
                    if gm == lm:
                        continue
                    mm = exps_mul(gm, shift)
                    acc = work.get(mm)
                    val = gc * factor
                    work[mm] = -val if acc is None else acc - val
                    if work[mm].is_zero():
                        del work[mm]
                break
        else:
            remainder[m] = c
    return CycloPoly(n, nvars, remainder)


def s_polynomial(f: CycloPoly, g: CycloPoly, order: TermOrder) -> CycloPoly:
    fm, fc = f.leading(order)
    gm, gc = g.leading(order)
    lcm = exps_lcm(fm, gm)
    left = f.mul_term(fc.inverse(), exps_div(lcm, fm))
    right = g.mul_term(gc.inverse(), exps_div(lcm, gm))
    return left - right


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis: monic, pairwise irreducible generators,
    sorted by ascending leading monomial."""

    n: int
    nvars: int
    order: TermOrder
    generators: tuple[CycloPoly, ...]

    def leading_monomials(self) -> list[Exps]:
        return [g.leading(self.order)[0] for g in self.generators]

    def normal_form(self, p: CycloPoly) -> CycloPoly:
        return normal_form(p, list(self.generators), self.order)

    def contains(self, p: CycloPoly) -> bool:
        return self.normal_form(p).is_zero()

    def is_unit_ideal(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.generators)


def buchberger(
    gens: list[CycloPoly],
    order: TermOrder,
    max_variables: int = 8,
    max_degree: int | None = None,
    timeout_s: float | None = None,
) -> GroebnerBasis:
    """Reduced Groebner basis via Buchberger with the product and chain criteria.

    Pairs are selected by the normal strategy (smallest lcm in the term
    order), which together with the final inter-reduction makes the output
    deterministic and independent of the input generator order.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("cannot take a Groebner basis of the zero ideal presentation")
    n, nvars = gens[0].n, gens[0].nvars
    if nvars > max_variables:
        raise GuardExceeded(f"Buchberger guard: {nvars} variables > {max_variables}")
    degree_cap = max_degree if max_degree is not None else nvars
    if max(g.degree() for g in gens) > degree_cap:
        raise GuardExceeded(f"Buchberger guard: generator degree exceeds {degree_cap}")
    deadline = time.monotonic() + timeout_s if timeout_s else None

    basis = [g.monic(order) for g in gens]
    leads = [g.leading(order)[0] for g in basis]
    pending: set[tuple[int, int]] = {(i, j) for j in range(len(basis)) for i in range(j)}

    def lcm_key(pair):
        i, j = pair
        return (order.key(exps_lcm(leads[i], leads[j])), pair)

    while pending:
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceeded(f"Buchberger exceeded its {timeout_s}s budget with {len(pending)} pairs left")
        i, j = min(pending, key=lcm_key)
        pending.discard((i, j))
        lm_i, lm_j = leads[i], leads[j]
        lcm = exps_lcm(lm_i, lm_j)
        # product criterion: coprime leading monomials reduce to zero
        if lcm == exps_mul(lm_i, lm_j):
            continue
        # chain criterion: a third generator dividing the lcm whose pairs
        # with i and j were both already treated makes this pair redundant
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not exps_divides(leads[k], lcm):
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                skip = True
                break
        if skip:
            continue
        remainder = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if remainder.is_zero():
            continue
        remainder = remainder.monic(order)
        basis.append(remainder)
        leads.append(remainder.leading(order)[0])
        new = len(basis) - 1
        pending.update((k, new) for k in range(new))
    return _reduce_basis(n, nvars, order, basis)


def _reduce_basis(n: int, nvars: int, order: TermOrder, basis: list[CycloPoly]) -> GroebnerBasis:
    # minimalize: drop generators whose leading monomial another one divides
    keep: list[CycloPoly] = []
    leads = [g.leading(order)[0] for g in basis]
    for idx, g in enumerate(basis):
        lm = leads[idx]
        redundant = any(
            other != idx
            and exps_divides(leads[other], lm)
            and (leads[other] != lm or other < idx)
            for other in range(len(basis))
        )
        if not redundant:
            keep.append(g)
    # tail-reduce each survivor against the others
    reduced: list[CycloPoly] = []
    for idx, g in enumerate(keep):
        others = keep[:idx] + keep[idx + 1 :]
        r = normal_form(g, others, order) if others else g
        reduced.append(r.monic(order))
    reduced.sort(key=lambda g: order.key(g.leading(order)[0]))
    return GroebnerBasis(n, nvars, order, tuple(reduced))


def is_reduced_basis(gb: GroebnerBasis) -> bool:
    one = cyclo.one(gb.n)
    gens = gb.generators
    leads = gb.leading_monomials()
    for idx, g in enumerate(gens):
        if g.leading(gb.order)[1] != one:
            return False
        for m in g.terms:
            for other, lm in enumerate(leads):
                if other != idx and exps_divides(lm, m):
                    return False
    return True


def verify_groebner(gb: GroebnerBasis) -> bool:
    """Re-verify the defining property: every S-polynomial reduces to zero."""
    gens = list(gb.generators)
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            s = s_polynomial(gens[i], gens[j], gb.order)
            if not normal_form(s, gens, gb.order).is_zero():
                return False
    return True


# ---------------------------------------------------------------------------
# staircase combinatorics


def standard_monomials(gb: GroebnerBasis) -> list[Exps] | None:
    """Monomials not divisible by any leading monomial; None when infinite."""
    if gb.is_unit_ideal():
        return []
    leads = gb.leading_monomials()
    box = []
    for v in range(gb.nvars):
        pures = [m[v] for m in leads if sum(m) == m[v]]
        if not pures:
            return None  # x_v has no pure power among the leads
        box.append(min(pures))
    out = []
    for exps in itertools.product(*(range(b) for b in box)):
        if not any(exps_divides(lm, exps) for lm in leads):
            out.append(exps)
    return out


def standard_monomial_count(gb: GroebnerBasis) -> int | float:
    """Number of standard monomials, or math.inf for a non-zero-dimensional ideal."""
    monos = standard_monomials(gb)
    if monos is None:
        return math.inf
    return len(monos)


def hilbert_series(gb: GroebnerBasis) -> tuple[int, ...]:
    """Coefficients (by degree) of the Hilbert series of the quotient ring.

    Computed from the staircase of leading monomials; requires a
    zero-dimensional ideal so the series is a polynomial.
    """
    monos = standard_monomials(gb)
    if monos is None:
        raise ValueError("Hilbert series as a polynomial needs a zero-dimensional ideal")
    if not monos:
        return (0,)
    top = max(exps_degree(m) for m in monos)
    coeffs = [0] * (top + 1)
    for m in monos:
        coeffs[exps_degree(m)] += 1
    return tuple(coeffs)


def series_closed_form(factors_num: list[int], factor_den: int) -> tuple[int, ...]:
    """Expand prod (1 - t^k) / (1 - t)^d as a polynomial, for cross-checks.

    `factors_num` lists the exponents k of the numerator factors and
    `factor_den` is d; the division must be exact.
    """
    num = [Fraction(1)]
    for k in factors_num:
        factor = [Fraction(0)] * (k + 1)
        factor[0], factor[k] = Fraction(1), Fraction(-1)
        num = _mul_series(num, factor)
    den = [Fraction(1)]
    for _ in range(factor_den):
        den = _mul_series(den, [Fraction(1), Fraction(-1)])
    q, r = _divmod_series(num, den)
    if any(c != 0 for c in r):
        raise ValueError("non-exact series division")
    out = [int(c) for c in q]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _mul_series(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _divmod_series(num, den):
    num = list(num)
    while den and den[-1] == 0:
        den.pop()
    q = [Fraction(0)] * max(0, len(num) - len(den) + 1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1] / den[-1]
        q[k] = c
        for i in range(len(den)):
            num[k + i] -= c * den[i]
    return q, num
