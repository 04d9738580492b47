"""Sparse multivariate polynomial arithmetic over GF(2).

A monomial is a sorted tuple of (variable, exponent) pairs with positive
exponents; variables are positive integers.  Because the coefficient field
is GF(2), a polynomial is just a frozenset of monomials: addition is
symmetric difference, and duplicate monomials created by multiplication
cancel in pairs.

The module also builds the edge / partial-3-cycle / chordless-4-cycle
polynomial system used by the degree-one certificate characterization.
The support of every cycle polynomial equals the cycle's arc set through
the identification  x_i * x_j^2  <->  arc (i, j).
"""

from __future__ import annotations

from .gf2 import GF2Matrix, GF2Vector

Mono = tuple[tuple[int, int], ...]

MONO_ONE: Mono = ()


def mono(*pairs: tuple[int, int]) -> Mono:
    """Normalize (variable, exponent) pairs into a monomial."""
    acc: dict[int, int] = {}
    for var, exp in pairs:
        if var < 1:
            raise ValueError("variables are indexed from 1")
        if exp < 0:
            raise ValueError("exponents must be nonnegative")
        if exp:
            acc[var] = acc.get(var, 0) + exp
    return tuple(sorted(acc.items()))


def mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    acc = dict(a)
    for var, exp in b:
        acc[var] = acc.get(var, 0) + exp
    return tuple(sorted(acc.items()))


def mono_degree(m: Mono) -> int:
    return sum(exp for _, exp in m)


def mono_key(m: Mono) -> tuple:
    """Graded-lex sort key: higher key = larger monomial (x1 largest variable)."""
    # Lex on exponents with x1 most significant == lex on (-var, exp) pairs
    # read from the smallest variable index outward.
    return (mono_degree(m), tuple((-var, exp) for var, exp in m))


def mono_str(m: Mono) -> str:
    if not m:
        return "1"
    return "*".join(f"x{var}^{exp}" if exp > 1 else f"x{var}" for var, exp in m)


class F2Polynomial:
    """Polynomial over GF(2) as a frozenset of monomials (all coefficients 1)."""

    __slots__ = ("monomials",)

    def __init__(self, monomials=()):
        self.monomials = frozenset(monomials)

    @classmethod
    def zero(cls) -> "F2Polynomial":
        return cls()

    @classmethod
    def one(cls) -> "F2Polynomial":
        return cls((MONO_ONE,))

    @classmethod
    def variable(cls, var: int, exp: int = 1) -> "F2Polynomial":
        return cls((mono((var, exp)),))

    def __add__(self, other: "F2Polynomial") -> "F2Polynomial":
        return F2Polynomial(self.monomials ^ other.monomials)

    def __mul__(self, other: "F2Polynomial") -> "F2Polynomial":
        acc: set[Mono] = set()
        for a in self.monomials:
            for b in other.monomials:
                acc ^= {mono_mul(a, b)}
        return F2Polynomial(acc)

    def is_zero(self) -> bool:
        return not self.monomials

    def degree(self) -> int:
        """Total degree; the zero polynomial reports -1."""
        if not self.monomials:
            return -1
        return max(mono_degree(m) for m in self.monomials)

    def variables(self) -> set[int]:
        return {var for m in self.monomials for var, _ in m}

    def sorted_monomials(self) -> list[Mono]:
        return sorted(self.monomials, key=mono_key, reverse=True)

    def __eq__(self, other) -> bool:
        return isinstance(other, F2Polynomial) and self.monomials == other.monomials

    def __hash__(self):
        return hash(self.monomials)

    def __bool__(self) -> bool:
        return bool(self.monomials)

    def __str__(self):
        if not self.monomials:
            return "0"
        return " + ".join(mono_str(m) for m in self.sorted_monomials())

    def __repr__(self):
        return f"F2Polynomial({self})"


def add(p: F2Polynomial, q: F2Polynomial) -> F2Polynomial:
    return p + q


def mul(p: F2Polynomial, q: F2Polynomial) -> F2Polynomial:
    return p * q


def poly_sum(polys) -> F2Polynomial:
    acc: set[Mono] = set()
    for p in polys:
        acc ^= p.monomials
    return F2Polynomial(acc)


def span_membership(basis: list[F2Polynomial], target: F2Polynomial) -> list[int] | None:
    """Indices of basis elements whose GF(2) sum equals target, or None.

    Membership in the GF(2) linear span is one exact linear solve: index
    every monomial appearing anywhere, one equation per monomial.
    """
    monomials: set[Mono] = set(target.monomials)
    for p in basis:
        monomials |= p.monomials
    index = {m: i for i, m in enumerate(sorted(monomials, key=mono_key))}
    nrows = len(index)
    rows = [0] * nrows
    for j, p in enumerate(basis):
        for m in p.monomials:
            rows[index[m]] |= 1 << j
    rhs = 0
    for m in target.monomials:
        rhs |= 1 << index[m]
    matrix = GF2Matrix(nrows, len(basis), rows)
    solution = matrix.solve(GF2Vector(nrows, rhs))
    if solution is None:
        return None
    return solution.support()


def edge_polynomial(i: int, j: int) -> F2Polynomial:
    """x_i^2 x_j + x_i x_j^2 + 1 for an edge {i, j}."""
    return F2Polynomial((mono((i, 2), (j, 1)), mono((i, 1), (j, 2)), MONO_ONE))


def arc_monomial(i: int, j: int) -> Mono:
    """The monomial x_i x_j^2 identified with the arc (i, j)."""
    return mono((i, 1), (j, 2))


def cycle_polynomial(cycle) -> F2Polynomial:
    """Sum of arc monomials over an oriented cycle's arcs."""
    acc: set[Mono] = set()
    for (a, b) in cycle.arcs:
        acc ^= {arc_monomial(a, b)}
    return F2Polynomial(acc)


def build_H_system(g) -> list[F2Polynomial]:
    """Edge, partial-3-cycle and chordless-4-cycle polynomials of a graph.

    Order is deterministic: edges sorted, then oriented partial 3-cycles,
    then oriented chordless 4-cycles, both in enumeration order.
    """
    from . import graphs  # local import; graphs also imports nothing from here

    if g.directed:
        raise ValueError("the H system is defined for undirected graphs")
    polys = [edge_polynomial(i, j) for i, j in sorted(g.edges)]
    polys.extend(cycle_polynomial(c) for c in graphs.oriented_partial_3cycles(g))
    polys.extend(cycle_polynomial(c) for c in graphs.oriented_chordless_4cycles(g))
    return polys
