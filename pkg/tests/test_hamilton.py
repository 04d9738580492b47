import itertools
import math

import pytest

from corpus import decomposition_corpus, directed_cycle, five_vertex_chorded_digraph
from idealgraph import cyclo
from idealgraph.cyclopoly import (
    CycloPoly,
    TermOrder,
    buchberger,
    exps_lcm,
    exps_mul,
    hilbert_series,
    is_reduced_basis,
    series_closed_form,
    standard_monomial_count,
    verify_groebner,
)
from idealgraph.graphs import Graph, GuardExceeded, complete_graph, cycle_graph, petersen_graph
from idealgraph.hamilton import (
    cycle_encoding,
    cycle_groebner_basis,
    cycle_order,
    decomposition_check,
    encode_hamiltonian,
    hamiltonian_groebner_basis,
    is_uniquely_hamiltonian,
    variety_points,
)

# ---------------------------------------------------------------------------
# encodings


def test_encode_directed_3cycle():
    g = directed_cycle(3)
    gens = encode_hamiltonian(g)
    w = cyclo.omega(3)
    x = lambda v, e=1: CycloPoly.variable(3, 3, v, e)
    expected_powers = [x(i, 3) - CycloPoly.constant(3, 3, 1) for i in (1, 2, 3)]
    expected_edges = [
        x(1).scaled(w) - x(2),
        x(2).scaled(w) - x(3),
        x(3).scaled(w) - x(1),
    ]
    assert gens == expected_powers + expected_edges


def test_encode_chorded_digraph_contains_product():
    gens = encode_hamiltonian(five_vertex_chorded_digraph())
    w = cyclo.omega(5)
    x = lambda v: CycloPoly.variable(5, 5, v)
    product = (x(1).scaled(w) - x(2)) * (x(1).scaled(w) - x(3)) * (x(1).scaled(w) - x(4))
    assert product in gens
    assert (x(2).scaled(w) - x(3)) in gens


def test_encode_out_degree_zero_gives_constant_one():
    gens = encode_hamiltonian(Graph.digraph(3, [(1, 2), (2, 3)]))
    assert CycloPoly.constant(3, 3, 1) in gens


def test_encode_needs_three_vertices():
    with pytest.raises(ValueError):
        encode_hamiltonian(Graph.digraph(2, [(1, 2), (2, 1)]))


def test_directed_cycle_encoding_matches_expected():
    gens = cycle_encoding((1, 2, 3, 4, 5), "directed")
    w = cyclo.omega(5)
    x = lambda v, e=1: CycloPoly.variable(5, 5, v, e)
    expected = [
        x(4) - x(5).scaled(w**4),
        x(3) - x(5).scaled(w**3),
        x(2) - x(5).scaled(w**2),
        x(1) - x(5).scaled(w),
        x(5, 5) - CycloPoly.constant(5, 5, 1),
    ]
    assert gens == expected


def test_doubly_covered_encoding_k4_quadratic():
    gens = cycle_encoding((1, 2, 3, 4), "doubly_covered")
    w = cyclo.omega(4)
    x = lambda v, e=1: CycloPoly.variable(4, 4, v, e)
    quad = (x(3) - x(4).scaled(w)) * (x(3) - x(4).scaled(w ** (-1)))
    assert quad in gens
    assert (x(4, 4) - CycloPoly.constant(4, 4, 1)) in gens


def test_doubly_covered_labelings_are_zeroes():
    for k in range(3, 8):
        gens = cycle_encoding(tuple(range(1, k + 1)), "doubly_covered")
        forward = tuple(cyclo.omega(k, i) for i in range(1, k + 1))
        backward = tuple(cyclo.omega(k, 1 - i) for i in range(1, k + 1))
        for g in gens:
            assert g.evaluate(forward).is_zero()
            assert g.evaluate(backward).is_zero()


def test_cycle_encoding_validation():
    with pytest.raises(ValueError):
        cycle_encoding((1, 2), "directed")
    with pytest.raises(ValueError):
        cycle_encoding((1, 2, 2), "directed")
    with pytest.raises(ValueError):
        cycle_encoding((1, 2, 3), "sideways")


# ---------------------------------------------------------------------------
# cycle encodings are reduced Groebner bases


def test_cycle_encodings_are_reduced_bases():
    for k in range(3, 8):
        verts = tuple(range(1, k + 1))
        for mode in ("directed", "doubly_covered"):
            gb = cycle_groebner_basis(verts, mode)
            assert is_reduced_basis(gb)
            assert verify_groebner(gb)
            again = buchberger(list(gb.generators), gb.order)
            assert set(again.generators) == set(gb.generators)


def test_cycle_leading_monomials():
    k = 5
    verts = tuple(range(1, k + 1))
    for mode, tail in (("directed", [(0, 0, 0, 1, 0)]), ("doubly_covered", [(0, 0, 0, 2, 0)])):
        gb = cycle_groebner_basis(verts, mode)
        leads = set(gb.leading_monomials())
        expected = {(1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (0, 0, 1, 0, 0), (0, 0, 0, 0, 5)}
        expected |= {tuple(t) for t in tail}
        assert leads == expected
        # pairwise relatively prime supports
        for a, b in itertools.combinations(leads, 2):
            assert exps_lcm(a, b) == exps_mul(a, b)


def test_cycle_hilbert_series():
    for k in range(3, 8):
        verts = tuple(range(1, k + 1))
        assert hilbert_series(cycle_groebner_basis(verts, "directed")) == series_closed_form([k], 1)
        assert hilbert_series(cycle_groebner_basis(verts, "doubly_covered")) == series_closed_form(
            [2, k], 2
        )
    assert hilbert_series(cycle_groebner_basis((1, 2, 3, 4), "doubly_covered")) == (1, 2, 2, 2, 1)


# ---------------------------------------------------------------------------
# variety points


def test_directed_cycle_point_count():
    for n in (3, 5, 7):
        assert len(variety_points(directed_cycle(n))) == n


def test_undirected_cycle_point_count():
    for n in (4, 6):
        assert len(variety_points(cycle_graph(n))) == 2 * n


def test_k4_variety_against_exhaustive_oracle():
    g = complete_graph(4)
    points = variety_points(g)
    assert len(points) == 24
    # oracle: all 4^4 assignments of the 4th roots of unity
    gens = encode_hamiltonian(g)
    roots = [cyclo.omega(4, k) for k in range(4)]
    solutions = set()
    for combo in itertools.product(roots, repeat=4):
        if all(gen.evaluate(combo).is_zero() for gen in gens):
            solutions.add(combo)
    assert solutions == set(points)


def test_variety_guard():
    with pytest.raises(GuardExceeded):
        variety_points(cycle_graph(11))


# ---------------------------------------------------------------------------
# Buchberger on Hamiltonian ideals


def test_chorded_digraph_reduced_basis_is_cycle_encoding():
    g = five_vertex_chorded_digraph()
    gb = hamiltonian_groebner_basis(g, TermOrder.lex(5))
    expected = cycle_encoding((1, 2, 3, 4, 5), "directed")
    assert set(gb.generators) == set(expected)
    assert is_reduced_basis(gb)


def test_unique_hamiltonicity_verdicts():
    assert is_uniquely_hamiltonian(cycle_graph(6)).kind == "unique"
    assert is_uniquely_hamiltonian(cycle_graph(6)).point_count == 12
    chorded = is_uniquely_hamiltonian(five_vertex_chorded_digraph(), cross_check=True)
    assert chorded.kind == "unique" and chorded.point_count == 5
    k4 = is_uniquely_hamiltonian(complete_graph(4))
    assert k4.kind == "not_unique" and k4.point_count == 24
    assert is_uniquely_hamiltonian(petersen_graph()).kind == "non_hamiltonian"
    assert str(k4) == "not_unique(24)"


def test_decomposition_corpus():
    for name, g in decomposition_corpus():
        assert decomposition_check(g), name


def test_radicality_counts_match():
    for name, g in decomposition_corpus():
        gb = hamiltonian_groebner_basis(g)
        count = standard_monomial_count(gb)
        assert count != math.inf, name
        assert count == len(variety_points(g)), name


def test_all_digraphs_on_three_vertices():
    # exhaustive: quotient dimension equals the variety size for every digraph
    arcs_universe = [(a, b) for a in range(1, 4) for b in range(1, 4) if a != b]
    for bits in itertools.product((0, 1), repeat=6):
        g = Graph.digraph(3, [arc for arc, b in zip(arcs_universe, bits) if b])
        points = variety_points(g)
        gb = hamiltonian_groebner_basis(g)
        assert standard_monomial_count(gb) == len(points)


def test_sampled_digraphs_on_four_vertices():
    import random

    rng = random.Random(2024)
    arcs_universe = [(a, b) for a in range(1, 5) for b in range(1, 5) if a != b]
    for _ in range(40):
        arcs = [arc for arc in arcs_universe if rng.random() < 0.45]
        g = Graph.digraph(4, arcs)
        points = variety_points(g)
        gb = hamiltonian_groebner_basis(g)
        assert standard_monomial_count(gb) == len(points), sorted(arcs)


def _to_sympy(poly, xs, walg):
    import sympy as sp

    expr = sp.Integer(0)
    for exps, coeff in poly.terms.items():
        c = sum(sp.Rational(q) * walg**k for k, q in enumerate(coeff.coeffs))
        monomial = sp.Integer(1)
        for v, e in enumerate(exps):
            if e:
                monomial *= xs[v] ** e
        expr += c * monomial
    return expr


def _from_sympy(expr, xs, walg, n):
    from fractions import Fraction

    import sympy as sp

    poly = sp.Poly(sp.expand(expr), *xs)
    terms = {}
    for exps, coeff in poly.terms():
        coeff = sp.expand(coeff)
        if coeff.has(walg):
            rationals = [sp.Rational(c) for c in sp.Poly(coeff, walg).all_coeffs()[::-1]]
        else:
            rationals = [sp.Rational(coeff)]
        value = cyclo.CycloElem.from_coeffs(n, [Fraction(c.p, c.q) for c in rationals])
        terms[tuple(exps)] = value
    return CycloPoly(n, len(xs), terms)


def test_buchberger_matches_independent_cas():
    # cross-engine oracle: an independent CAS computes the same reduced basis
    import sympy as sp

    cases = [
        five_vertex_chorded_digraph(),
        cycle_graph(4),
        complete_graph(4),
    ]
    for g in cases:
        n = g.n
        walg = sp.CRootOf(sp.cyclotomic_poly(n, sp.Symbol("t")), 0)
        dom = sp.QQ.algebraic_field(walg)
        xs = sp.symbols(" ".join(f"x{i}" for i in range(1, n + 1)))
        theirs = sp.groebner(
            [_to_sympy(p, xs, walg) for p in encode_hamiltonian(g)], *xs, order="lex", domain=dom
        ).exprs
        mine = hamiltonian_groebner_basis(g, TermOrder.lex(n)).generators
        converted = {_from_sympy(b, xs, walg, n) for b in theirs}
        assert converted == set(mine)


def test_cycle_order_priorities():
    order = cycle_order((2, 3, 1), nvars=3)
    # x2 largest, then x3, then x1
    assert order.priority == (2, 3, 1)
    assert order.key((0, 1, 0)) > order.key((0, 0, 1)) > order.key((1, 0, 0))
