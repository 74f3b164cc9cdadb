from fractions import Fraction
from itertools import product

import networkx as nx
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from girthkiss.graph_core import Walk, from_edge_list, geodesic_walks
from girthkiss.invariants import (
    INFINITE,
    bounds_report,
    check_fellow_travel,
    compute_invariants,
    corollary_bound,
    count_based_shortest_geodesics,
    depth,
    diameter,
    girth,
    is_moore,
    kissing_number,
    moore_bound,
    moore_surjective,
    prefixes_injective,
    shortest_closed_geodesics,
    teokoh_bound,
    thm1_numerator,
)

from conftest import from_nx
from test_graph_core import multigraphs


def brute_closed_geodesics(g, length):
    """Closed cyclically non-backtracking walks of the given length, by exhaustive walk listing."""
    return [w for w in geodesic_walks(g, length) if Walk(g.tails[w[0]], w).is_geodesic(g, cyclic=True)]


def brute_girth(g, limit=12):
    for length in range(1, limit + 1):
        if brute_closed_geodesics(g, length):
            return length
    return None


def nx_kiss(G, g):
    return 2 * sum(1 for _ in nx.simple_cycles(G, length_bound=g) if len(_) == g)


def brute_depth(G, g):
    """Depth of a simple graph from vertex sequences of g-cycles (networkx cycles)."""
    cycles = [c for c in nx.simple_cycles(G, length_bound=g) if len(c) == g]
    best = 0
    for length in range(1, g // 2 + 2):
        windows = set()
        for c in cycles:
            for seq in (c, c[::-1]):
                for r in range(g):
                    rot = seq[r:] + seq[:r]
                    windows.add(tuple((rot * (length // g + 2))[: length + 1]))
        ok = True
        for v in G:
            stack = [(v,)]
            while stack and ok:
                path = stack.pop()
                if len(path) == length + 1:
                    ok = path in windows
                    continue
                for w in G[path[-1]]:
                    if len(path) < 2 or w != path[-2]:
                        stack.append(path + (w,))
            if not ok:
                break
        if ok:
            best = length
    return best


NAMED = {
    "K4": (nx.complete_graph(4), 3, 8),
    "K33": (nx.complete_bipartite_graph(3, 3), 4, 18),
    "Petersen": (nx.petersen_graph(), 5, 24),
    "Heawood": (nx.heawood_graph(), 6, 56),
    "Q3": (nx.hypercube_graph(3), 4, 12),
    "C7": (nx.cycle_graph(7), 7, 2),
    "dodecahedron": (nx.dodecahedral_graph(), 5, 24),
}


class TestGirthAndKiss:
    @pytest.mark.parametrize("name", sorted(NAMED))
    def test_named(self, name):
        G, gi, kiss = NAMED[name]
        g = from_nx(G)
        assert girth(g) == gi == nx.girth(G)
        assert kissing_number(g) == kiss == nx_kiss(G, gi)

    def test_forest(self):
        g = from_nx(nx.balanced_tree(2, 3))
        assert girth(g) is INFINITE
        assert kissing_number(g) == 0
        assert count_based_shortest_geodesics(g) == 0

    @pytest.mark.parametrize(
        "edges,n,gi,kiss",
        [
            ([(0, 0)], 1, 1, 2),
            ([(0, 0), (0, 0)], 1, 1, 4),
            ([(0, 1), (0, 1)], 2, 2, 2),
            ([(0, 1), (0, 1), (0, 1)], 2, 2, 6),
            ([(0, 0), (0, 1), (1, 1)], 2, 1, 4),
        ],
        ids=["loop", "two-loops", "digon", "theta", "dumbbell"],
    )
    def test_multigraphs(self, edges, n, gi, kiss):
        g = from_edge_list(n, edges)
        assert girth(g) == gi
        assert kissing_number(g) == kiss

    @settings(max_examples=80, deadline=None)
    @given(multigraphs(max_n=6, max_m=8))
    def test_matches_brute_force(self, g):
        gi = brute_girth(g, limit=9)
        got = girth(g)
        if gi is None:
            assume(got is INFINITE or got > 9)
            return
        assert got == gi
        assert count_based_shortest_geodesics(g) == len(brute_closed_geodesics(g, gi))

    @settings(max_examples=40, deadline=None)
    @given(st.integers(6, 14), st.integers(0, 10**6))
    def test_random_simple_against_networkx(self, n, seed):
        G = nx.gnm_random_graph(n, 2 * n, seed=seed)
        g = from_nx(G)
        gi = girth(g)
        assume(gi is not INFINITE)
        assert gi == nx.girth(G)
        assert kissing_number(g) == nx_kiss(G, gi)

    def test_based_at_vertex(self):
        g = from_nx(nx.petersen_graph())
        # vertex-transitive: each vertex lies on 12 of the 120 oriented based geodesics' cycles
        counts = {sum(1 for _ in shortest_closed_geodesics(g, v)) for v in range(10)}
        assert counts == {12}


class TestLemma:
    @pytest.mark.parametrize("name", sorted(NAMED))
    def test_fellow_travel(self, name):
        g = from_nx(NAMED[name][0])
        assert check_fellow_travel(g)
        assert prefixes_injective(g)

    @settings(max_examples=60, deadline=None)
    @given(multigraphs(max_n=6, max_m=9))
    def test_fellow_travel_random(self, g):
        assert check_fellow_travel(g)
        assert prefixes_injective(g)


class TestDepth:
    @pytest.mark.parametrize(
        "name,expected",
        [("K4", 2), ("K33", 3), ("Petersen", 3), ("Heawood", 4), ("Q3", 2), ("dodecahedron", 2)],
    )
    def test_values_against_brute_force(self, name, expected):
        G, gi, _ = NAMED[name]
        assert depth(from_nx(G)) == expected == brute_depth(G, gi)

    def test_cycle_infinite(self):
        assert depth(from_nx(nx.cycle_graph(5))) is INFINITE

    def test_tree_zero(self):
        assert depth(from_nx(nx.path_graph(4))) == 0

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            depth(from_edge_list(4, [(0, 1), (2, 3)]))

    @settings(max_examples=30, deadline=None)
    @given(st.integers(6, 12), st.integers(0, 10**6))
    def test_random_against_brute_force(self, n, seed):
        G = nx.gnm_random_graph(n, n + 4, seed=seed)
        assume(nx.is_connected(G))
        g = from_nx(G)
        gi = girth(g)
        assume(gi is not INFINITE)
        assert depth(g) == brute_depth(G, gi)


class TestMoore:
    @pytest.mark.parametrize(
        "d,g,value",
        [(3, 3, 4), (3, 4, 6), (3, 5, 10), (3, 6, 14), (3, 8, 30), (7, 5, 50), (57, 5, 3250), (2, 9, 9), (3, 1, 1), (3, 2, 2)],
    )
    def test_bound(self, d, g, value):
        assert moore_bound(d, g) == value

    def test_bound_overflow(self):
        with pytest.raises(OverflowError):
            moore_bound(1000, 20)

    def test_cubic_moore_graphs(self, moore_graph):
        name, g = moore_graph
        assert is_moore(g)
        assert moore_surjective(g)
        rep = bounds_report(g)
        assert rep.thm1_equality and rep.corollary_equality

    @pytest.mark.parametrize("n", range(3, 13))
    def test_cycles_are_moore(self, n):
        g = from_nx(nx.cycle_graph(n))
        assert is_moore(g) and moore_surjective(g)

    def test_bouquet_and_dipole_are_moore(self):
        assert is_moore(from_edge_list(1, [(0, 0), (0, 0)]))
        assert is_moore(from_edge_list(2, [(0, 1)] * 3))

    @pytest.mark.parametrize("G", [nx.hypercube_graph(3), nx.dodecahedral_graph(), nx.moebius_kantor_graph()], ids=["Q3", "dodeca", "MK"])
    def test_non_moore(self, G):
        g = from_nx(G)
        assert not is_moore(g)
        assert not moore_surjective(g)
        assert not bounds_report(g).thm1_equality


class TestBounds:
    def test_petersen_report(self):
        rep = bounds_report(from_nx(nx.petersen_graph()))
        assert rep.thm1_rhs == 24
        assert rep.teokoh_rhs == 24
        assert rep.corollary_rhs == pytest.approx(24, rel=1e-9)

    def test_q3_report(self):
        rep = bounds_report(from_nx(nx.hypercube_graph(3)))
        # g=4, n=8, m=12: thm1 = 8*3*4/4 = 24, Teo-Koh = 2*12*5/4 = 30
        assert rep.thm1_rhs == 24
        assert rep.teokoh_rhs == 30
        assert rep.thm1_holds and not rep.thm1_equality

    def test_teokoh_odd_even(self):
        assert teokoh_bound(10, 15, 5) == Fraction(2 * 10 * 6, 5)
        assert teokoh_bound(14, 21, 6) == Fraction(2 * 21 * 8, 6)

    @pytest.mark.parametrize("n,d,g", [(4, 3, 3), (6, 3, 4), (10, 3, 5), (14, 3, 6), (50, 7, 5), (3250, 57, 5)])
    def test_corollary_equals_thm1_on_moore_parameters(self, n, d, g):
        # at n = moore_bound(d, g) the girth-free bound collapses to the girth bound
        assert n == moore_bound(d, g)
        assert corollary_bound(n, d, g) == pytest.approx(thm1_numerator(n, d, g) / g, rel=1e-9)

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            bounds_report(from_edge_list(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))

    @settings(max_examples=120, deadline=None)
    @given(multigraphs(max_n=7, max_m=11))
    def test_thm1_on_random_multigraphs(self, g):
        assume(g.is_connected())
        gi = girth(g)
        assume(gi is not INFINITE)
        d = max(g.degrees())
        based = count_based_shortest_geodesics(g)
        assert based <= thm1_numerator(g.n, d, gi)
        if based == thm1_numerator(g.n, d, gi):
            assert is_moore(g)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(6, 14), st.integers(0, 10**6))
    def test_report_consistency(self, n, seed):
        G = nx.connected_watts_strogatz_graph(n, 4, 0.4, seed=seed)
        g = from_nx(G)
        inv = compute_invariants(g)
        rep = bounds_report(g, inv)
        assert rep.thm1_lhs == inv.girth * inv.kiss
        assert rep.thm1_holds
        if nx.is_biconnected(G):
            assert rep.teokoh_holds
        # undefined (None) when the depth is 0
        assert rep.eq10_lhs_ok is not False


def test_diameter_matches_networkx():
    for G in (nx.petersen_graph(), nx.heawood_graph(), nx.path_graph(5)):
        assert diameter(from_nx(G)) == nx.diameter(G)
    assert diameter(from_edge_list(2, [])) is INFINITE


def test_infinite_ordering():
    assert INFINITE > 10**100 and str(INFINITE) == "INF"
    assert not INFINITE < 3
