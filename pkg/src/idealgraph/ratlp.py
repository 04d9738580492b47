"""Exact rational linear programming in standard form: Ax = b, x >= 0.

Everything runs over Fraction, so feasibility, optimality and vertex
coordinates are exact statements, never tolerance calls.  The simplex
uses Bland's anti-cycling rule in both phases; vertex enumeration walks
all column bases (with early pruning of dependent prefixes), which is
plenty at desk scale where the polytopes have at most 16 coordinates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction


class LPError(Exception):
    pass


class LPInfeasible(LPError):
    pass


class LPUnbounded(LPError):
    pass


@dataclass(frozen=True)
class LPSolution:
    value: Fraction
    x: tuple[Fraction, ...]
    basis: tuple[int, ...]


_STALL_LIMIT = 40  # degenerate pivots tolerated before switching to Bland's rule


def simplex_solve(a: list[list[Fraction]], b: list[Fraction], c: list[Fraction]) -> LPSolution:
    """Maximize c.x subject to a.x = b, x >= 0 (b must be nonnegative).

    Returns an optimal basic feasible solution, i.e. a vertex of the
    feasible polytope together with its defining basis.  Pricing is
    largest-coefficient until the objective stalls on degenerate pivots,
    after which Bland's rule takes over permanently, so termination is
    guaranteed and the pivot sequence is deterministic.
    """
    m, n = len(a), len(c)
    if any(len(row) != n for row in a) or len(b) != m:
        raise LPError("dimension mismatch")
    if any(bi < 0 for bi in b):
        raise LPError("standard-form solver expects b >= 0")

    # independent rows only: fewer artificials and no redundant constraints
    a, b = independent_equalities(a, b)
    for i in range(len(a)):
        if b[i] < 0:
            a[i] = [-v for v in a[i]]
            b[i] = -b[i]
    m = len(a)

    # phase 1: artificials n..n+m-1, maximize minus their sum
    tableau = [[Fraction(x) for x in row] + [Fraction(0)] * m + [Fraction(bi)] for row, bi in zip(a, b)]
    for i in range(m):
        tableau[i][n + i] = Fraction(1)
    basis = [n + i for i in range(m)]
    # objective row convention: z[j] = reduced cost, z[-1] = minus the value
    z = [Fraction(0)] * (n + m + 1)
    for j in range(n):
        z[j] = sum(row[j] for row in tableau)
    z[-1] = sum(row[-1] for row in tableau)
    zero = Fraction(0)

    def pivot(r: int, col: int):
        prow = tableau[r]
        piv = prow[col]
        if piv != 1:
            inv = 1 / piv
            for j in range(len(prow)):
                if prow[j]:
                    prow[j] *= inv
        nz = [j for j in range(len(prow)) if prow[j]]
        for row in tableau:
            if row is not prow and row[col]:
                f = row[col]
                for j in nz:
                    row[j] -= f * prow[j]
        if z[col]:
            f = z[col]
            for j in nz:
                z[j] -= f * prow[j]
        basis[r] = col

    def solve_loop(active_cols: int):
        bland = False
        stall = 0
        while True:
            if bland:
                col = next((j for j in range(active_cols) if z[j] > zero), None)
            else:
                col = None
                best = zero
                for j in range(active_cols):
                    if z[j] > best:
                        best = z[j]
                        col = j
            if col is None:
                return
            best_ratio = None
            leave = None
            for r in range(m):
                arc = tableau[r][col]
                if arc > zero:
                    ratio = tableau[r][-1] / arc
                    if best_ratio is None or ratio < best_ratio or (
                        ratio == best_ratio and basis[r] < basis[leave]
                    ):
                        best_ratio = ratio
                        leave = r
            if leave is None:
                raise LPUnbounded("improving direction with no blocking constraint")
            pivot(leave, col)
            if not bland:
                stall = stall + 1 if best_ratio == 0 else 0
                if stall > _STALL_LIMIT:
                    bland = True

    solve_loop(n + m)
    if z[-1] != 0:
        raise LPInfeasible("phase-1 optimum nonzero; system Ax=b, x>=0 infeasible")

    # drive any artificial stuck at zero out of the basis (rows are independent,
    # so a pivot column always exists)
    for r in range(m):
        if basis[r] >= n:
            col = next(j for j in range(n) if tableau[r][j] != 0)
            pivot(r, col)

    # phase 2 on original columns only
    tableau = [row[:n] + row[-1:] for row in tableau]
    z = [Fraction(0)] * (n + 1)
    for j in range(n):
        z[j] = Fraction(c[j]) - sum(Fraction(c[basis[r]]) * tableau[r][j] for r in range(m))
    z[-1] = -sum(Fraction(c[basis[r]]) * tableau[r][-1] for r in range(m))
    solve_loop(n)

    x = [Fraction(0)] * n
    for r, col in enumerate(basis):
        x[col] = tableau[r][-1]
    value = sum(Fraction(cj) * xj for cj, xj in zip(c, x))
    return LPSolution(value, tuple(x), tuple(sorted(basis)))


# ---------------------------------------------------------------------------
# exact rank / echelon helpers


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    work = [list(map(Fraction, row)) for row in rows]
    ncols = len(work[0]) if work else 0
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(r, len(work)) if work[i][col] != 0), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = 1 / work[r][col]
        work[r] = [v * inv for v in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col]:
                f = work[i][col]
                work[i] = [v - f * w for v, w in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
    return work[:r], pivots


def rank(rows: list[list[Fraction]]) -> int:
    if not rows:
        return 0
    return len(rref(rows)[0])


def independent_equalities(a: list[list[Fraction]], b: list[Fraction]):
    """Row-reduce [A | b]; return (A', b') with independent rows.

    Raises LPInfeasible if the system contains a row 0 = nonzero.
    """
    augmented = [list(row) + [bi] for row, bi in zip(a, b)]
    reduced, pivots = rref(augmented)
    ncols = len(a[0])
    for row, piv in zip(reduced, pivots):
        if piv == ncols:
            raise LPInfeasible("equality system is inconsistent")
    return [row[:-1] for row in reduced], [row[-1] for row in reduced]


# ---------------------------------------------------------------------------
# vertex enumeration and the 1-skeleton


def enumerate_vertices(a: list[list[Fraction]], b: list[Fraction]) -> list[tuple[Fraction, ...]]:
    """All vertices of {x : ax = b, x >= 0} as basic feasible solutions.

    Walks column subsets of size rank(a), pruning prefixes that are already
    linearly dependent; each independent basis is solved exactly and kept
    when the basic solution is nonnegative.
    """
    a2, b2 = independent_equalities(a, b)
    r = len(a2)
    ncols = len(a[0])
    if r == 0:
        return [tuple(Fraction(0) for _ in range(ncols))] if all(x == 0 for x in b) else []
    columns = [tuple(a2[i][j] for i in range(r)) for j in range(ncols)]
    found: set[tuple[Fraction, ...]] = set()

    # pivots: list of (lead index, reduced column vector) for the chosen prefix
    def reduce_col(col, pivots):
        vec = list(col)
        for lead, pvec in pivots:
            f = vec[lead]
            if f:
                for i in range(r):
                    vec[i] -= f * pvec[i]
        return vec

    def descend(start: int, chosen: list[int], pivots):
        if len(chosen) == r:
            _try_basis(chosen)
            return
        # range end leaves enough columns to still complete a basis
        for j in range(start, ncols - (r - len(chosen)) + 1):
            vec = reduce_col(columns[j], pivots)
            lead = next((i for i in range(r) if vec[i] != 0), None)
            if lead is None:
                continue
            inv = 1 / vec[lead]
            pvec = [v * inv for v in vec]
            descend(j + 1, chosen + [j], pivots + [(lead, pvec)])

    def _try_basis(cols: list[int]):
        mat = [[a2[i][j] for j in cols] + [b2[i]] for i in range(r)]
        reduced, pivots = rref(mat)
        if len(reduced) < r or r in pivots:
            return
        xb = [row[-1] for row in reduced]
        if any(v < 0 for v in xb):
            return
        x = [Fraction(0)] * ncols
        for idx, j in enumerate(cols):
            x[j] = xb[idx]
        found.add(tuple(x))

    descend(0, [], [])
    return sorted(found)


def vertices_adjacent(
    a_indep: list[list[Fraction]], u: tuple[Fraction, ...], v: tuple[Fraction, ...]
) -> bool:
    """1-skeleton test: the constraints tight at both endpoints have rank n-1."""
    ncols = len(u)
    rows = [list(row) for row in a_indep]
    for i in range(ncols):
        if u[i] == 0 and v[i] == 0:
            unit = [Fraction(0)] * ncols
            unit[i] = Fraction(1)
            rows.append(unit)
    return rank(rows) == ncols - 1
