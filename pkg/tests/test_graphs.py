import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from idealgraph.graphs import (
    Graph,
    GraphError,
    GuardExceeded,
    HamCycle,
    ParseError,
    brute_force_3colorable,
    complete_graph,
    cycle_graph,
    disjoint_union,
    enumerate_hamiltonian_cycles,
    groetzsch_graph,
    named_graph,
    oriented_chordless_4cycles,
    oriented_partial_3cycles,
    parse_graph,
    petersen_graph,
    wheel_graph,
    write_edgelist,
)

# ---------------------------------------------------------------------------
# independent oracles


def oracle_partial3(g: Graph):
    out = []
    for i, j, k in itertools.permutations(range(1, g.n + 1), 3):
        if g.has_edge(i, j) and g.has_edge(j, k) and g.has_edge(k, i):
            out.append((i, j, k))
    return sorted(out)


def oracle_chordless4(g: Graph):
    out = []
    for i, j, k, l in itertools.permutations(range(1, g.n + 1), 4):
        if (
            g.has_edge(i, j)
            and g.has_edge(j, k)
            and g.has_edge(k, l)
            and g.has_edge(l, i)
            and not g.has_edge(i, k)
            and not g.has_edge(j, l)
        ):
            out.append((i, j, k, l))
    return sorted(out)


def oracle_ham_arc_sets(g: Graph):
    """Directed Hamiltonian cycles as arc sets, via raw vertex permutations."""
    found = set()
    for perm in itertools.permutations(range(2, g.n + 1)):
        seq = (1,) + perm
        arcs = [(seq[i], seq[(i + 1) % g.n]) for i in range(g.n)]
        if all(g.has_arc(a, b) for a, b in arcs):
            found.add(frozenset(arcs))
    return found


# ---------------------------------------------------------------------------
# parsing


def test_parse_edgelist():
    g = parse_graph("1 2\n2 3\n")
    assert g.n == 3 and g.edges == frozenset({(1, 2), (2, 3)})


def test_parse_edgelist_relabels_in_order():
    g = parse_graph("5 7\n7 9\n")
    assert g.n == 3 and g.edges == frozenset({(1, 2), (2, 3)})


def test_parse_dimacs_k4():
    text = "c comment\np edge 4 6\n" + "".join(
        f"e {i} {j}\n" for i, j in itertools.combinations(range(1, 5), 2)
    )
    g = parse_graph(text, fmt="dimacs")
    assert g.n == 4 and len(g.edges) == 6


def test_parse_self_loop_rejected():
    with pytest.raises(ParseError, match="line 1"):
        parse_graph("5 5\n")


def test_parse_malformed_line_number():
    with pytest.raises(ParseError, match="line 2"):
        parse_graph("1 2\n1 2 3\n")


def test_parse_dimacs_out_of_range():
    with pytest.raises(ParseError, match="exceeds"):
        parse_graph("p edge 2 1\ne 1 3\n", fmt="dimacs")


def test_edgelist_writer_roundtrip():
    g = wheel_graph(5)
    assert parse_graph(write_edgelist(g)) == g


# ---------------------------------------------------------------------------
# named graphs


def test_complete_graph():
    assert len(complete_graph(4).edges) == 6


def test_wheel_labeling():
    w = wheel_graph(5)
    assert w.n == 6 and len(w.edges) == 10
    assert w.degree(1) == 5  # hub
    assert sorted(w.neighbors(1)) == [2, 3, 4, 5, 6]


def test_groetzsch_shape():
    g = groetzsch_graph()
    assert g.n == 11 and len(g.edges) == 20
    assert oracle_partial3(g) == []  # triangle-free
    # hub adjacent exactly to the inner ring
    assert sorted(g.neighbors(11)) == [6, 7, 8, 9, 10]


def test_named_graph_dispatch():
    assert named_graph("petersen") == petersen_graph()
    assert named_graph("wheel", 5) == wheel_graph(5)
    with pytest.raises(GraphError):
        named_graph("moebius")
    with pytest.raises(GraphError):
        named_graph("wheel")


# ---------------------------------------------------------------------------
# oriented cycles


def test_partial3_k3():
    cycles = oriented_partial_3cycles(complete_graph(3))
    assert [c.vertices for c in cycles] == oracle_partial3(complete_graph(3))
    assert len(cycles) == 6


def test_partial3_closing_arc_invariant():
    for g in (complete_graph(4), wheel_graph(5)):
        for c in oriented_partial_3cycles(g):
            i, j, k = c.vertices
            assert g.has_arc(i, j) and g.has_arc(j, k) and g.has_arc(k, i)


def test_partial3_empty_cases():
    assert oriented_partial_3cycles(cycle_graph(4)) == []
    assert oriented_partial_3cycles(groetzsch_graph()) == []


def test_chordless4_c4():
    g = cycle_graph(4)
    cycles = oriented_chordless_4cycles(g)
    assert [c.vertices for c in cycles] == oracle_chordless4(g)
    assert len(cycles) == 8  # 4 rotations x 2 directions


def test_chordless4_k4_empty():
    assert oriented_chordless_4cycles(complete_graph(4)) == []


def test_chordless4_groetzsch_contains_example():
    quads = {c.vertices for c in oriented_chordless_4cycles(groetzsch_graph())}
    assert (1, 2, 3, 7) in quads
    g = groetzsch_graph()
    for c in oriented_chordless_4cycles(g):
        i, j, k, l = c.vertices
        assert not g.has_edge(i, k) and not g.has_edge(j, l)


# ---------------------------------------------------------------------------
# Hamiltonian cycles


def test_directed_5cycle_single():
    g = Graph.digraph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])
    cycles = enumerate_hamiltonian_cycles(g)
    assert len(cycles) == 1
    assert cycles[0].vertices == (1, 2, 3, 4, 5)


def test_k4_ham_cycles_match_oracle():
    g = complete_graph(4)
    cycles = enumerate_hamiltonian_cycles(g)
    assert len(cycles) == 6
    assert {c.arcs for c in cycles} == oracle_ham_arc_sets(g)


def test_petersen_non_hamiltonian():
    assert enumerate_hamiltonian_cycles(petersen_graph()) == []


def test_petersen_non_hamiltonian_oracle():
    # independent exhaustive permutation scan (slow path, ~10! / 10 sequences)
    assert oracle_ham_arc_sets(petersen_graph()) == set()


def test_canonical_rotation():
    c = HamCycle.from_sequence((3, 4, 1, 2))
    assert c.vertices == (1, 2, 3, 4)


def test_undirected_count_even():
    for g in (complete_graph(4), cycle_graph(5), wheel_graph(5)):
        assert len(enumerate_hamiltonian_cycles(g)) % 2 == 0


@given(st.integers(4, 6), st.randoms(use_true_random=False))
def test_ham_count_relabeling_invariant(n, rng):
    edges = [(i, j) for i, j in itertools.combinations(range(1, n + 1), 2) if rng.random() < 0.6]
    g = Graph.undirected(n, edges)
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    h = g.relabeled({i + 1: perm[i] for i in range(n)})
    assert len(enumerate_hamiltonian_cycles(g)) == len(enumerate_hamiltonian_cycles(h))


# ---------------------------------------------------------------------------
# 3-colorability oracle


def test_three_colorable_examples():
    assert not brute_force_3colorable(complete_graph(4))
    assert brute_force_3colorable(cycle_graph(5))
    assert not brute_force_3colorable(groetzsch_graph())
    assert brute_force_3colorable(petersen_graph())


def test_three_colorable_guard():
    g = Graph.undirected(21, [(1, 2)])
    with pytest.raises(GuardExceeded):
        brute_force_3colorable(g)


def test_disjoint_union():
    g = disjoint_union(cycle_graph(3), cycle_graph(4))
    assert g.n == 7 and len(g.edges) == 7
    assert not brute_force_3colorable(disjoint_union(complete_graph(4), cycle_graph(3)))


def test_graph_invariants():
    with pytest.raises(GraphError):
        Graph.undirected(3, [(1, 1)])
    with pytest.raises(GraphError):
        Graph.undirected(2, [(1, 3)])
    assert complete_graph(3).arcs == frozenset(
        {(1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2)}
    )
