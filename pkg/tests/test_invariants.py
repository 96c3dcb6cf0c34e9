import random
from fractions import Fraction

import pytest

import kemtree as kt
from kemtree.errors import RouteRequiresTreeError
from kemtree.invariants import KemenyRoute

import helpers


def tree(g):
    return kt.tree_from_graph(g)


def test_wiener_path3():
    d = kt.all_pairs_distances(helpers.path_graph(3))
    assert kt.wiener_distance_route(d) == 4


def test_wiener_double_stars_both_routes():
    for name, expected in [("double_star_1_3", 28), ("double_star_2_2", 29)]:
        t = helpers.load_tree(name)
        d = kt.all_pairs_distances(t.graph)
        assert kt.wiener_distance_route(d) == expected
        assert kt.wiener_edge_cut_route(t) == expected


def test_wiener_star_closed_form():
    for n in range(2, 12):
        t = tree(helpers.star_graph(n))
        assert kt.wiener_edge_cut_route(t) == (n - 1) ** 2


def test_wiener_path_closed_form():
    for n in range(2, 51):
        t = tree(helpers.path_graph(n))
        w = n * (n * n - 1) // 6
        assert kt.wiener_edge_cut_route(t) == w
        assert kt.wiener_distance_route(t.dist) == w


def test_omega_double_stars():
    t1 = helpers.load_tree("double_star_1_3")
    t2 = helpers.load_tree("double_star_2_2")
    w1, w2 = kt.omega_weights(t1), kt.omega_weights(t2)
    assert w1.multiset() == (5, 5, 5, 5, 8)
    assert w2.multiset() == (5, 5, 5, 5, 9)
    assert w1.weights[(0, 1)] == 8
    assert w2.weights[(0, 1)] == 9
    # every edge touching a degree-1 vertex weighs n - 1 = 5
    for t, wmap in [(t1, w1), (t2, w2)]:
        for (u, v), w in wmap.weights.items():
            if t.degree(u) == 1 or t.degree(v) == 1:
                assert w == 5


def test_omega_p4():
    t = tree(helpers.path_graph(4))
    assert kt.omega_weights(t).multiset() == (3, 3, 4)


def test_omega_split_sizes_sum_to_n():
    rng = random.Random(17)
    for _ in range(20):
        t = helpers.random_tree(rng, rng.randrange(2, 12))
        for (u, v), w in kt.omega_weights(t).weights.items():
            # w = n1 * (n - n1) for some 1 <= n1 < n
            assert any(
                w == s * (t.n - s) for s in range(1, t.n)
            )


def test_omega_mates15_marked_edges():
    t = helpers.load_tree("mates15_b")
    weights = kt.omega_weights(t).weights
    assert weights[(0, 1)] == 56  # 7 * 8
    assert weights[(1, 2)] == 44  # 11 * 4


def test_omega_matches_path_enumeration_up_to_8():
    for n in range(2, 9):
        for t in kt.enumerate_trees(n).members:
            assert kt.omega_weights(t).weights == helpers.omega_by_path_enumeration(t)


def test_gutman_small_cases():
    g2 = kt.Graph(2, [(0, 1)])
    assert kt.gutman_index(g2, kt.all_pairs_distances(g2)) == 1
    g3 = helpers.path_graph(3)
    assert kt.gutman_index(g3, kt.all_pairs_distances(g3)) == 6
    g5 = helpers.star_graph(5)
    assert kt.gutman_index(g5, kt.all_pairs_distances(g5)) == 28


def test_gutman_matches_direct_expansion():
    rng = random.Random(23)
    for _ in range(20):
        g = helpers.random_connected_graph(rng, rng.randrange(2, 8))
        d = helpers.floyd_warshall(g)
        deg = g.degrees
        grand = sum(
            deg[i] * deg[j] * d[i][j] for i in range(g.n) for j in range(g.n)
        )
        assert kt.gutman_index(g, kt.all_pairs_distances(g)) == grand // 2


def test_kemeny_forest_k2():
    assert kt.kemeny_forest_route(kt.Graph(2, [(0, 1)])) == Fraction(1, 2)


def test_kemeny_forest_unicycles():
    k1 = kt.kemeny_forest_route(helpers.load_graph("unicycle_balanced"))
    k2 = kt.kemeny_forest_route(helpers.load_graph("unicycle_lopsided"))
    assert k1 == Fraction(65, 12)
    assert k2 == Fraction(73, 12)
    assert kt.format_exact(k1) == "5.4167"
    assert kt.format_exact(k2) == "6.0833"


def test_kemeny_wiener_route_double_stars():
    t1 = helpers.load_tree("double_star_1_3")
    t2 = helpers.load_tree("double_star_2_2")
    k1, k2 = kt.kemeny_wiener_route(t1), kt.kemeny_wiener_route(t2)
    assert k1 == Fraction(57, 10)
    assert k2 == Fraction(61, 10)
    assert k2 > k1


def test_kemeny_edge_cut_small_cases():
    assert kt.kemeny_edge_cut_route(tree(kt.Graph(2, [(0, 1)]))) == Fraction(1, 2)
    assert kt.kemeny_edge_cut_route(tree(helpers.path_graph(3))) == Fraction(3, 2)
    t = tree(helpers.star_graph(10))
    expected = Fraction(17, 2)  # n - 3/2 at n = 10
    assert kt.kemeny_edge_cut_route(t) == expected
    assert kt.kemeny_wiener_route(t) == expected
    assert kt.kemeny_forest_route(t.graph) == expected


def test_three_routes_agree_up_to_8():
    for n in range(2, 9):
        for t in kt.enumerate_trees(n).members:
            a = kt.kemeny_forest_route(t.graph)
            b = kt.kemeny_wiener_route(t)
            c = kt.kemeny_edge_cut_route(t)
            assert a == b == c
            assert a > 0


def test_wiener_relation_fails_on_cycles():
    for name in ["unicycle_balanced", "unicycle_lopsided"]:
        g = helpers.load_graph(name)
        d = kt.all_pairs_distances(g)
        w = kt.wiener_distance_route(d)
        pretend = Fraction(2 * w, g.n - 1) - g.n + Fraction(1, 2)
        assert kt.kemeny_forest_route(g) != pretend


def test_degree_distance_identity_on_trees_up_to_9():
    # column sums: deg^T F == 1^T (2F - (n-1) I) entrywise when F is the
    # tree distance matrix
    for n in range(2, 10):
        for t in kt.enumerate_trees(n).members:
            deg = t.degrees
            for j in range(n):
                lhs = sum(deg[i] * t.dist[i][j] for i in range(n))
                rhs = 2 * sum(t.dist[i][j] for i in range(n)) - (n - 1)
                assert lhs == rhs


def test_comparison_transfers_between_kemeny_and_wiener():
    rng = random.Random(31)
    for _ in range(25):
        n = rng.randrange(4, 9)
        t1, t2 = helpers.random_tree(rng, n), helpers.random_tree(rng, n)
        w1, w2 = kt.wiener_edge_cut_route(t1), kt.wiener_edge_cut_route(t2)
        k1 = kt.kemeny_forest_route(t1.graph)
        k2 = kt.kemeny_forest_route(t2.graph)
        assert (k1 < k2) == (w1 < w2)
        assert (k1 == k2) == (w1 == w2)


def test_kemeny_needs_two_vertices():
    single = kt.tree_from_edges(1, [])
    with pytest.raises(ValueError):
        kt.kemeny_wiener_route(single)
    with pytest.raises(ValueError):
        kt.kemeny_edge_cut_route(single)
    with pytest.raises(ValueError):
        kt.kemeny_forest_route(single.graph)
    assert kt.wiener_edge_cut_route(single) == 0


def test_wiener_lower_bound_complete_graphs():
    for n in range(2, 6):
        comp = helpers.complete_graph(n)
        d = kt.all_pairs_distances(comp)
        assert kt.wiener_distance_route(d) == n * (n - 1) // 2
    g = helpers.path_graph(4)
    assert kt.wiener_distance_route(kt.all_pairs_distances(g)) > 6


def test_compute_invariants_route_selection():
    t_report = kt.compute_invariants(helpers.path_graph(4))
    assert t_report.route is KemenyRoute.EDGE_CUT
    g_report = kt.compute_invariants(helpers.cycle_graph(4))
    assert g_report.route is KemenyRoute.FOREST
    forced = kt.compute_invariants(helpers.path_graph(4), "forest")
    assert forced.kemeny == t_report.kemeny
    with pytest.raises(RouteRequiresTreeError):
        kt.compute_invariants(helpers.cycle_graph(4), "wiener")
    with pytest.raises(RouteRequiresTreeError):
        kt.compute_invariants(helpers.cycle_graph(4), "edgecut")


def test_format_exact_rounding():
    assert kt.format_exact(Fraction(1, 20)) == "0.0500"
    assert kt.format_exact(Fraction(1, 20), places=1) == "0.0"
    assert kt.format_exact(Fraction(3, 20), places=1) == "0.2"
    assert kt.format_exact(Fraction(-65, 12)) == "-5.4167"
    assert kt.format_exact(Fraction(5, 2), places=0) == "2"
    assert kt.format_exact(Fraction(7, 2), places=0) == "4"
    assert kt.format_exact(7) == "7.0000"


def test_format_rational():
    assert kt.format_rational(Fraction(65, 12)) == "65/12"
    assert kt.format_rational(Fraction(4, 2)) == "2"
    assert kt.format_rational(3) == "3"
