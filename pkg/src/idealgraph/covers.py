"""Degree-one certificates as cycle covers.

A graph's 3-colorability encoding admits a degree-one infeasibility
certificate exactly when there is a set C of oriented partial 3-cycles and
oriented chordless 4-cycles such that

  1. every edge {i,j} is covered by an even number of arcs from C
     (|C_(i,j)| + |C_(j,i)| even), and
  2. the total number of arc incidences (i,j) with i < j over all cycles
     of C is odd.

Finding such a C is one GF(2) linear solve with a variable per candidate
cycle, which is why this route is polynomial-time while the general
certificate search grows with the degree.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import graphs
from .f2poly import F2Polynomial, build_H_system, cycle_polynomial, edge_polynomial, poly_sum
from .gf2 import GF2Matrix, GF2Vector
from .graphs import Graph, OrientedCycle


@dataclass(frozen=True)
class CycleCover:
    """A set of oriented cycles, interpreted as a mod-2 arc covering.

    Duplicates are rejected: coefficients live in GF(2), so a repeated
    cycle would silently cancel itself.
    """

    cycles: tuple[OrientedCycle, ...]

    def __post_init__(self):
        if len(set(self.cycles)) != len(self.cycles):
            raise ValueError("a cycle cover is a set; duplicate cycles are not allowed")

    def arc_incidence(self) -> dict[tuple[int, int], int]:
        counts: dict[tuple[int, int], int] = {}
        for c in self.cycles:
            for arc in c.arcs:
                counts[arc] = counts.get(arc, 0) + 1
        return counts

    def __len__(self):
        return len(self.cycles)


def candidate_cycles(g: Graph) -> list[OrientedCycle]:
    """All oriented partial 3-cycles followed by all chordless 4-cycles."""
    return graphs.oriented_partial_3cycles(g) + graphs.oriented_chordless_4cycles(g)


def build_cover_system(g: Graph) -> tuple[GF2Matrix, GF2Vector, list[OrientedCycle]]:
    """GF(2) system whose 0/1 solutions are exactly the valid covers.

    One column per candidate cycle; one row per edge (condition 1, rhs 0)
    plus one final parity row (condition 2, rhs 1).
    """
    cycles = candidate_cycles(g)
    edges = sorted(g.edges)
    edge_row = {e: idx for idx, e in enumerate(edges)}
    nrows = len(edges) + 1
    rows = [0] * nrows
    for col, cyc in enumerate(cycles):
        parity = 0
        for a, b in cyc.arcs:
            rows[edge_row[(min(a, b), max(a, b))]] ^= 1 << col
            if a < b:
                parity ^= 1
        if parity:
            rows[-1] ^= 1 << col
    rhs = GF2Vector(nrows, 1 << (nrows - 1))
    return GF2Matrix(nrows, len(cycles), rows), rhs, cycles


def find_deg1_cover(g: Graph) -> CycleCover | None:
    """Solve the cover system; None iff no cover (hence no degree-1 certificate)."""
    matrix, rhs, cycles = build_cover_system(g)
    solution = matrix.solve(rhs)
    if solution is None:
        return None
    cover = CycleCover(tuple(cycles[i] for i in solution.support()))
    assert verify_cover(g, cover)
    return cover


def verify_cover(g: Graph, cover: CycleCover) -> bool:
    """Check cycle validity plus both parity conditions, independently of the solver."""
    if g.directed:
        return False
    if any(not c.valid_in(g) for c in cover.cycles):
        return False
    counts = cover.arc_incidence()
    for i, j in g.edges:
        if (counts.get((i, j), 0) + counts.get((j, i), 0)) % 2 != 0:
            return False
    total = sum(cnt for (a, b), cnt in counts.items() if a < b)
    return total % 2 == 1


def cover_to_H_combination(g: Graph, cover: CycleCover) -> list[F2Polynomial]:
    """The explicit subset H' of the H system that sums to 1 for a valid cover.

    H' holds the cycle polynomial of every cycle in the cover plus the edge
    polynomial of every edge whose arcs have odd incidence counts.
    """
    if not verify_cover(g, cover):
        raise ValueError("cover fails verification; no combination exists")
    polys = [cycle_polynomial(c) for c in cover.cycles]
    counts = cover.arc_incidence()
    for i, j in sorted(g.edges):
        if counts.get((i, j), 0) % 2 == 1:
            polys.append(edge_polynomial(i, j))
    assert poly_sum(polys) == F2Polynomial.one()
    return polys


def h_span_has_one(g: Graph) -> bool:
    """Direct check that 1 lies in the GF(2) span of the H system."""
    from .f2poly import span_membership

    return span_membership(build_H_system(g), F2Polynomial.one()) is not None


def groetzsch_example_cover() -> CycleCover:
    """The canonical chordless-4-cycle cover of the built-in Grotzsch graph.

    Five cycles walk the outer rim with one twin vertex each, five more go
    through the hub; every edge of the graph is covered by exactly two
    4-cycles.
    """
    quads = [
        (1, 2, 3, 7),
        (2, 3, 4, 8),
        (3, 4, 5, 9),
        (4, 5, 1, 10),
        (5, 1, 2, 6),
        (1, 10, 11, 7),
        (2, 6, 11, 8),
        (3, 7, 11, 9),
        (4, 8, 11, 10),
        (5, 9, 11, 6),
    ]
    return CycleCover(tuple(OrientedCycle("chordless4", q) for q in quads))


def wheel_example_cover(rim: int) -> CycleCover:
    """The spoke-fan cover of an odd wheel: {(i,1,i+1)} plus the closing cycle.

    Only odd rims verify: each spoke is covered twice, and the rim length
    is the orientation-parity total, which condition 2 needs odd.
    """
    n = rim + 1
    tris = [(i, 1, i + 1) for i in range(2, n)] + [(n, 1, 2)]
    return CycleCover(tuple(OrientedCycle("partial3", t) for t in tris))


# ---------------------------------------------------------------------------
# serialization


def cover_to_dict(g: Graph, cover: CycleCover) -> dict:
    counts = cover.arc_incidence()
    incidence = []
    for i, j in sorted(g.edges):
        fwd = counts.get((i, j), 0)
        rev = counts.get((j, i), 0)
        incidence.append({"edge": [i, j], "forward": fwd, "reverse": rev, "even": (fwd + rev) % 2 == 0})
    total = sum(cnt for (a, b), cnt in counts.items() if a < b)
    return {
        "cycles": [{"kind": c.kind, "vertices": list(c.vertices)} for c in cover.cycles],
        "edge_incidence": incidence,
        "edge_parity_ok": all(row["even"] for row in incidence),
        "orientation_parity": total % 2,
        "orientation_parity_ok": total % 2 == 1,
    }


def cover_from_dict(data: dict) -> CycleCover:
    cycles = tuple(OrientedCycle(c["kind"], tuple(c["vertices"])) for c in data["cycles"])
    return CycleCover(cycles)
