"""Acceptance suite: one test per criterion, each printing a PASS line with
its runtime (run with -s to see them).  Budgets are asserted, not aspirational.
"""

import itertools
import math
import time
from fractions import Fraction

from corpus import connected_atlas_graphs, decomposition_corpus
from idealgraph import ratlp
from idealgraph.autpoly import (
    build_polytope,
    compactness_probe,
    cyclic_group,
    enumerate_automorphisms,
    klein_four_group,
    perm_matrix,
    permutation_summable_pairs,
    polytope_vertices,
    strongly_fixed_point_free,
    symmetric_group,
)
from idealgraph.covers import (
    find_deg1_cover,
    groetzsch_example_cover,
    verify_cover,
    wheel_example_cover,
)
from idealgraph.cyclopoly import (
    TermOrder,
    buchberger,
    hilbert_series,
    series_closed_form,
    standard_monomial_count,
    verify_groebner,
)
from idealgraph.graphs import (
    Graph,
    brute_force_3colorable,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    groetzsch_graph,
    petersen_graph,
    wheel_graph,
)
from idealgraph.hamilton import (
    cycle_encoding,
    cycle_groebner_basis,
    encode_hamiltonian,
    hamiltonian_groebner_basis,
    is_uniquely_hamiltonian,
    variety_points,
)
from idealgraph.nulla import encode_3col, find_certificate, verify_certificate


class budget:
    def __init__(self, criterion: str, seconds: float):
        self.criterion = criterion
        self.seconds = seconds

    def __enter__(self):
        self.start = time.monotonic()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.monotonic() - self.start
        if exc_type is None:
            print(f"[{self.criterion}] PASS ({elapsed:.2f}s, budget {self.seconds:.0f}s)")
            assert elapsed < self.seconds, f"{self.criterion} exceeded its {self.seconds}s budget"
        else:
            print(f"[{self.criterion}] FAIL ({elapsed:.2f}s)")
        return False


def test_criterion_01_groetzsch_certificate():
    with budget("criterion 1: groetzsch degree-1 certificate", 5):
        g = groetzsch_graph()
        cert = find_certificate(encode_3col(g), 1)
        assert cert is not None and verify_certificate(cert)
        cover = groetzsch_example_cover()
        assert verify_cover(g, cover)
        # the ten four-cycles cover every edge exactly twice
        counts = cover.arc_incidence()
        for i, j in g.edges:
            assert counts.get((i, j), 0) + counts.get((j, i), 0) == 2


def test_criterion_02_odd_wheel_family():
    with budget("criterion 2: odd wheels rim 3,5,7,9", 5):
        for rim in (3, 5, 7, 9):
            w = wheel_graph(rim)
            assert find_deg1_cover(w) is not None
            assert verify_cover(w, wheel_example_cover(rim))


def test_criterion_03_equivalence_sweep():
    with budget("criterion 3: degree-1 equivalence over connected n<=6", 600):
        graphs = connected_atlas_graphs(6)
        assert len(graphs) == 143  # 1+1+2+6+21+112 isomorphism classes
        disagreements = 0
        for g in graphs:
            cover = find_deg1_cover(g)
            cert = find_certificate(encode_3col(g), 1)
            if (cover is None) != (cert is None):
                disagreements += 1
            if cover is not None or cert is not None:
                assert not brute_force_3colorable(g)
        assert disagreements == 0


def test_criterion_04_groebner_reproduction():
    with budget("criterion 4: five-vertex digraph reduced basis", 10):
        g = Graph.digraph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 3), (1, 4)])
        gb = hamiltonian_groebner_basis(g, TermOrder.lex(5))
        expected = cycle_encoding((1, 2, 3, 4, 5), "directed", nvars=5)
        assert set(gb.generators) == set(expected)
        assert list(gb.generators) == sorted(expected, key=lambda p: gb.order.key(p.leading(gb.order)[0]))


def test_criterion_05_cycle_ideal_laws():
    with budget("criterion 5: cycle encodings k=3..7", 30):
        for k in range(3, 8):
            verts = tuple(range(1, k + 1))
            for mode, count, closed in (
                ("directed", k, series_closed_form([k], 1)),
                ("doubly_covered", 2 * k, series_closed_form([2, k], 2)),
            ):
                gb = cycle_groebner_basis(verts, mode)
                assert verify_groebner(gb)
                assert standard_monomial_count(gb) == count
                assert hilbert_series(gb) == closed


def test_criterion_06_decomposition_desk_scale():
    with budget("criterion 6: ideal decomposition over the corpus", 600):
        from idealgraph.graphs import enumerate_hamiltonian_cycles
        from idealgraph.hamilton import cycle_groebner_basis

        corpus = decomposition_corpus() + [("k5_double_cover", complete_graph(5))]
        failures = []
        for name, g in corpus:
            gens = encode_hamiltonian(g)
            points = variety_points(g)
            for p in points:
                if not all(gen.evaluate(p).is_zero() for gen in gens):
                    failures.append((name, "point fails generator"))
            # containment in every cycle ideal
            mode = "directed" if g.directed else "doubly_covered"
            for cyc in enumerate_hamiltonian_cycles(g):
                gb_cycle = cycle_groebner_basis(cyc, mode, nvars=g.n)
                if not all(gb_cycle.contains(gen) for gen in gens):
                    failures.append((name, "generator escapes a cycle ideal"))
                    break
            # quotient dimension equals the point count (radicality)
            gb = hamiltonian_groebner_basis(g)
            count = standard_monomial_count(gb)
            if count == math.inf or count != len(points):
                failures.append((name, f"count {count} vs {len(points)} points"))
            if not enumerate_hamiltonian_cycles(g) and not gb.is_unit_ideal():
                failures.append((name, "non-Hamiltonian ideal is not the unit ideal"))
        assert failures == []


def test_criterion_07_unique_hamiltonicity():
    with budget("criterion 7: unique-Hamiltonicity verdicts", 60):
        for n in range(4, 9):
            verdict = is_uniquely_hamiltonian(cycle_graph(n))
            assert verdict.kind == "unique" and verdict.point_count == 2 * n
        k4 = is_uniquely_hamiltonian(complete_graph(4))
        assert k4.kind == "not_unique" and k4.point_count == 24
        assert is_uniquely_hamiltonian(petersen_graph()).kind == "non_hamiltonian"


def test_criterion_08_petersen_fractional_vertex():
    with budget("criterion 8: petersen polytope non-integrality", 120):
        g = petersen_graph()
        probe = compactness_probe(g, trials=10, seed=0)
        assert probe.verdict == "fractional_vertex"
        model = build_polytope(g)
        assert model.satisfied_by(probe.point)  # exact rational equality rows
        assert any(v.denominator > 1 for v in probe.point)


def test_criterion_09_birkhoff_sanity():
    with budget("criterion 9: edgeless n=3 is the Birkhoff polytope", 10):
        g = empty_graph(3)
        assert compactness_probe(g).verdict == "integral_verified"
        verts = set(polytope_vertices(build_polytope(g)))
        perms = {
            tuple(Fraction(v) for row in perm_matrix(p) for v in row)
            for p in itertools.permutations(range(3))
        }
        assert verts == perms and len(verts) == 6


def test_criterion_10_exactness_conditions():
    with budget("criterion 10: exactness sufficient conditions", 120):
        assert permutation_summable_pairs(symmetric_group(3))
        assert permutation_summable_pairs(symmetric_group(4))
        for n in range(3, 8):
            assert strongly_fixed_point_free(cyclic_group(n))
        assert strongly_fixed_point_free(klein_four_group())
        g = disjoint_union(cycle_graph(3), cycle_graph(4))
        probe = compactness_probe(g, trials=10, seed=0)
        assert probe.verdict == "fractional_vertex"


def _graphs_up_to_iso(n: int) -> list[Graph]:
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    perms = list(itertools.permutations(range(1, n + 1)))
    seen = set()
    out = []
    for bits in itertools.product((0, 1), repeat=len(pairs)):
        edges = frozenset(e for e, b in zip(pairs, bits) if b)
        canon = min(
            tuple(sorted((min(p[a - 1], p[b - 1]), max(p[a - 1], p[b - 1])) for a, b in edges))
            for p in perms
        )
        if canon in seen:
            continue
        seen.add(canon)
        out.append(Graph.undirected(n, edges))
    return out


def test_criterion_11_quasi_integrality():
    with budget("criterion 11: quasi-integrality for all n<=4", 300):
        checked = 0
        for n in range(1, 5):
            for g in _graphs_up_to_iso(n):
                model = build_polytope(g)
                a, b = model.matrix()
                verts = ratlp.enumerate_vertices(a, b)
                integer = [v for v in verts if all(x.denominator == 1 for x in v)]
                # the integer vertices are exactly the automorphism matrices
                auts = {
                    tuple(Fraction(x) for row in perm_matrix(p) for x in row)
                    for p in enumerate_automorphisms(g).elements
                }
                assert set(integer) == auts
                a_ind, _ = ratlp.independent_equalities(a, b)
                index = {v: i for i, v in enumerate(integer)}
                # connectivity of the induced subgraph on integer vertices
                reached = {0}
                frontier = [0]
                while frontier:
                    u = frontier.pop()
                    for v, i in index.items():
                        if i not in reached and ratlp.vertices_adjacent(a_ind, integer[u], v):
                            reached.add(i)
                            frontier.append(i)
                assert reached == set(range(len(integer))), f"disconnected for n={n}"
                checked += 1
        assert checked == 1 + 2 + 4 + 11
