import math

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from admatrix.graph_core import (
    GraphError,
    ad_relation_graph,
    complete,
    cycle,
    frucht,
    hexagonal_prism,
    hypercube,
    path,
    petersen,
    star,
)
from admatrix.invariants import (
    BoundReport,
    ad_chromatic_number,
    ad_independence_number,
    ad_regular_eigenvector_check,
    all_bounds,
    bipartite_least_eig_bound,
    chromatic_lower_bound,
    clique_bound,
    degree_profile,
    induced_subgraph_bound,
    inertia_bound,
    invariants_summary,
    is_ad_regular,
    mean_degree_sandwich,
    planar_fourcolor_check,
    regular_independence_bound,
    spectral_radius_bound,
    trace_moment_check,
)
from admatrix.solvers import chromatic_number, clique_number, independence_number
from admatrix.spectra import ad_spectrum, is_distance_regular

from conftest import connected_graphs
from oracles import brute_chromatic, brute_clique, brute_independence


def test_bound_report_semantics():
    assert BoundReport("x", 1.0, 1.0 - 1e-10).holds
    assert not BoundReport("x", 1.0, 0.9).holds
    assert BoundReport("x", 5.0, 1.0, applicable=False).holds
    assert BoundReport("x", 2.0, 2.0, relation="==").gap == 0


def test_degree_profile_examples():
    c6 = degree_profile(cycle(6))
    assert c6.addegrees == (5,) * 6 and c6.ad_regular
    p5 = degree_profile(path(5))
    assert p5.diameter == 4 and p5.d_hat_sum == 2
    k4 = degree_profile(complete(4))
    assert k4.addegrees == (3,) * 4 and k4.d_hat_sum == 0


@given(connected_graphs(max_n=9))
@settings(max_examples=60, deadline=None)
def test_degree_profile_identities(g):
    from admatrix.graph_core import ad_matrix

    prof = degree_profile(g)
    m = ad_matrix(g)
    assert list(prof.addegrees) == m.sum(axis=1).tolist()
    d = prof.diameter
    assert sum(prof.addegrees) == 2 * g.m + (d * prof.d_hat_sum if d > 1 else 0)


def test_regularity_remarks():
    assert is_ad_regular(cycle(6))
    assert frucht().is_regular() and not is_ad_regular(frucht())
    assert is_ad_regular(hexagonal_prism()) and is_distance_regular(hexagonal_prism()) is None
    for g in (cycle(7), petersen(), hypercube(3), hypercube(4), complete(5)):
        assert is_distance_regular(g) is not None and is_ad_regular(g)


def test_p5_invariants():
    g = path(5)
    assert ad_chromatic_number(g) == 3 > chromatic_number(g) == 2
    assert ad_independence_number(g) == 2 < independence_number(g) == 3


def test_complete_and_c4_invariants():
    assert ad_independence_number(cycle(4)) == 1
    assert ad_chromatic_number(cycle(4)) == 4
    assert ad_independence_number(complete(6)) == 1
    assert ad_chromatic_number(complete(4)) == 4


@given(connected_graphs(max_n=7))
@settings(max_examples=60, deadline=None)
def test_exact_solvers_match_brute_force(g):
    a = g.adjacency_matrix()
    rel = ad_relation_graph(g).adjacency_matrix()
    assert independence_number(g) == brute_independence(a)
    assert clique_number(g) == brute_clique(a)
    assert chromatic_number(g) == brute_chromatic(a)
    assert ad_independence_number(g) == brute_independence(rel)
    assert ad_chromatic_number(g) == brute_chromatic(rel)
    assert ad_independence_number(g) <= independence_number(g)
    assert chromatic_number(g) <= ad_chromatic_number(g)


def test_solvers_match_networkx_on_named_graphs():
    for g in (petersen(), frucht(), hypercube(4), hexagonal_prism()):
        h = nx.Graph(g.edges())
        assert clique_number(g) == max(len(c) for c in nx.find_cliques(h))
        assert independence_number(g) == max(len(c) for c in nx.find_cliques(nx.complement(h)))


def test_trace_moments_examples():
    for g, squares in ((cycle(4), 24), (path(4), 24), (complete(3), 6)):
        first, second = trace_moment_check(g)
        assert first.holds and second.holds
        assert second.left == squares
        assert sum(ad_spectrum(g).values ** 2) == pytest.approx(squares)


def test_spectral_radius_examples():
    c4 = spectral_radius_bound(cycle(4))
    assert c4.left == pytest.approx(4) and c4.right == pytest.approx(math.sqrt(18))
    k4 = spectral_radius_bound(complete(4))
    assert k4.holds and k4.left == pytest.approx(k4.right)
    assert spectral_radius_bound(path(4)).left == pytest.approx(2 + math.sqrt(2))


def test_least_eigenvalue_examples():
    mag, literal = bipartite_least_eig_bound(path(4))
    assert mag.left == pytest.approx(2 + math.sqrt(2)) and mag.right == pytest.approx(math.sqrt(12))
    assert mag.holds and literal.holds
    assert bipartite_least_eig_bound(cycle(6))[0].right == pytest.approx(math.sqrt(6 + 9 * 6 / 2))
    # diameter 1: no diametrical term, so the bound is exactly |-1| <= 1
    p2 = bipartite_least_eig_bound(path(2))[0]
    assert p2.right == pytest.approx(1) and p2.holds
    with pytest.raises(GraphError):
        bipartite_least_eig_bound(cycle(4))


def test_inertia_examples():
    c4 = inertia_bound(cycle(4))
    assert (c4.left, c4.right) == (1, 2)
    assert c4.details == {"n_plus": 1, "n_minus": 2}
    assert inertia_bound(path(4)).right == 2
    k3 = inertia_bound(complete(3))
    assert k3.left == k3.right == 1


def test_chromatic_bound_examples():
    assert chromatic_lower_bound(cycle(4)).left == pytest.approx(3)
    k4 = chromatic_lower_bound(complete(4))
    assert k4.left == pytest.approx(4) and k4.right == 4
    assert chromatic_lower_bound(path(5)).holds


def test_planar_examples():
    assert planar_fourcolor_check(cycle(6), True).applicable
    assert planar_fourcolor_check(path(6), True).applicable
    p5 = planar_fourcolor_check(path(5), True)
    assert not p5.applicable and p5.details["chi"] == 2 and p5.details["chi_ad"] == 3
    assert not planar_fourcolor_check(cycle(6), False).applicable


def test_mean_degree_examples():
    c6 = mean_degree_sandwich(cycle(6))
    assert c6.holds and c6.details["all_equal"]
    assert c6.details["lambda_1"] == pytest.approx(5)
    p4 = mean_degree_sandwich(path(4))
    assert p4.holds and not p4.details["all_equal"]
    k5 = mean_degree_sandwich(complete(5))
    assert k5.holds and k5.left == pytest.approx(4)


@pytest.mark.parametrize("g", [cycle(6), frucht(), hexagonal_prism(), star(5), path(3)],
                         ids=lambda g: g.name)
def test_all_ones_eigenvector_iff_ad_regular(g):
    rep = ad_regular_eigenvector_check(g)
    assert rep.holds
    assert bool(rep.left) == is_ad_regular(g)


def test_induced_subgraph_examples():
    lam6 = ad_spectrum(cycle(6)).smallest
    full = induced_subgraph_bound(cycle(6), range(6))
    assert full.left == pytest.approx(5) and full.right == pytest.approx(5)
    single = induced_subgraph_bound(cycle(6), [0])
    assert single.right == 0 and single.left == pytest.approx((5 - lam6) / 6 + lam6)
    pair = induced_subgraph_bound(cycle(6), [0, 3])
    assert pair.right == pytest.approx(3) and pair.holds
    with pytest.raises(GraphError):
        induced_subgraph_bound(path(4), [0])


def test_ratio_independence_examples():
    c4 = regular_independence_bound(cycle(4))
    assert c4.left == 1 and c4.right == pytest.approx(4 / 3)
    k6 = regular_independence_bound(complete(6))
    assert k6.left == 1 and k6.right == pytest.approx(1)
    assert regular_independence_bound(cycle(6)).holds
    with pytest.raises(GraphError):
        regular_independence_bound(path(4))


def test_clique_examples():
    k4 = clique_bound(complete(4))
    assert (k4.left, k4.right) == (4, 4)
    assert (k4.details["t_zero"], k4.details["t_minus"], k4.details["t_plus"]) == (3, 0, 1)
    c4 = clique_bound(cycle(4))
    assert (c4.left, c4.right) == (2, 2)
    assert (c4.details["t_minus"], c4.details["t_zero"], c4.details["t_plus"]) == (2, 0, 2)
    assert clique_bound(path(4)).holds


def test_clique_sharpening_on_p3():
    rep = clique_bound(path(3))
    assert rep.holds
    assert rep.details["sharpened_applies"]
    assert not rep.details["sharpened_holds"]


@given(connected_graphs(max_n=8))
@settings(max_examples=40, deadline=None)
def test_all_bounds_hold(g):
    planar, _ = nx.check_planarity(nx.Graph(g.edges()))
    for rep in all_bounds(g, planar_assertion=planar):
        assert rep.holds, rep


def test_summary_schema():
    s = invariants_summary(cycle(6))
    for key in ("degrees", "ddegrees", "addegrees", "d_hat_sum", "ad_regular", "alpha_ad",
                "chi_ad", "bounds"):
        assert key in s
    assert all({"name", "left", "right", "holds"} <= set(b) for b in s["bounds"])
    assert np.isclose(s["bounds"][0]["left"], 0, atol=1e-8)
