
import pytest
from hypothesis import given, settings

from admatrix.enumeration import exhaustive_population
from admatrix.graph_core import (
    GraphError,
    ad_matrix,
    ad_relation_graph,
    complete,
    cycle,
    path,
    star,
)
from admatrix.partitions import (
    ENUMERATION_CAP,
    ad_cycles,
    c2_closed,
    c3_closed,
    charpoly_coeff_via_partitions,
    charpoly_via_partitions,
    det_via_partitions,
    enumerate_ad_cycles,
    enumerate_ad_partitions,
    is_diametrical_bipartite,
    odd_ad_cycle_count_from_coeffs,
    spanning_ad_partitions,
    triple_profile,
    weighted_ad_cycle_sum,
)
from admatrix.spectra import CharPoly, ad_charpoly, determinant_exact

from conftest import connected_graphs
from oracles import brute_cycle_count, charpoly_by_minors, leibniz_det


def test_star_spanning_partitions():
    parts = list(enumerate_ad_partitions(star(4), 4))
    assert len(parts) == 6
    assert sum(1 for s in parts if s.p1 == 1) == 3
    assert sum(1 for s in parts if s.p == 2) == 3
    for s in parts:
        assert s.vertices == frozenset(range(4))


def test_small_spanning_partitions():
    parts = list(enumerate_ad_partitions(path(2), 2))
    assert [s.blocks for s in parts] == [((0, 1),)]
    assert len(list(spanning_ad_partitions(path(4)))) == 3


def test_partition_blocks_are_valid():
    g = cycle(6)
    rel = ad_relation_graph(g)
    anti = ad_matrix(g) == 3
    for s in enumerate_ad_partitions(g, 6):
        pairs = [b for b in s.blocks if len(b) == 2]
        cycles = [b for b in s.blocks if len(b) > 2]
        assert (s.p, s.p1) == (len(pairs), len(cycles))
        assert s.a == sum(anti[u, v] for u, v in pairs)
        for b in s.blocks:
            steps = zip(b, b[1:] + b[:1]) if len(b) > 2 else [b]
            assert all(rel.has_edge(u, v) for u, v in steps)


def test_partition_enumeration_cap_and_range():
    with pytest.raises(GraphError):
        list(enumerate_ad_partitions(path(ENUMERATION_CAP + 1), 4))
    with pytest.raises(GraphError):
        list(enumerate_ad_partitions(path(4), 5))
    with pytest.raises(GraphError):
        list(enumerate_ad_partitions(path(4), 1))


@pytest.mark.parametrize("g, det", [(star(4), -12), (path(5), 8), (path(4), 4), (path(2), -1),
                                    (path(6), -36)], ids=lambda x: getattr(x, "name", str(x)))
def test_determinant_examples(g, det):
    assert det_via_partitions(g) == det
    assert determinant_exact(ad_matrix(g)) == det


@given(connected_graphs(max_n=7))
@settings(max_examples=60, deadline=None)
def test_determinant_matches_leibniz(g):
    assert det_via_partitions(g) == leibniz_det(ad_matrix(g))


@given(connected_graphs(max_n=7))
@settings(max_examples=60, deadline=None)
def test_coefficients_match_principal_minors(g):
    expected = charpoly_by_minors(ad_matrix(g))
    assert charpoly_via_partitions(g).coeffs == expected
    for k in range(g.n + 1):
        assert charpoly_coeff_via_partitions(g, k) == expected[k]


def test_coefficient_examples():
    assert charpoly_coeff_via_partitions(path(4), 4) == 4
    assert charpoly_coeff_via_partitions(path(4), 2) == -12
    assert charpoly_coeff_via_partitions(cycle(7), 1) == 0
    assert charpoly_coeff_via_partitions(cycle(7), 0) == 1


def test_c2_c3_examples():
    assert c2_closed(path(4)) == -12
    assert c2_closed(cycle(4)) == -12
    assert c2_closed(cycle(6)) == -33
    assert c3_closed(cycle(6)) == 0
    assert c3_closed(complete(4)) == -8
    # one triple with a single antipodal pair and three with all pairs antipodal
    assert triple_profile(star(4)) == (0, 3, 0, 1)
    assert c3_closed(star(4)) == -28 == ad_charpoly(star(4))[3]


@given(connected_graphs(min_n=3, max_n=9))
@settings(max_examples=80, deadline=None)
def test_c2_c3_closed_forms(g):
    cp = ad_charpoly(g)
    assert c2_closed(g) == cp[2]
    assert c3_closed(g) == cp[3]


def test_cycle_examples():
    assert enumerate_ad_cycles(star(4), 4) == 3
    assert enumerate_ad_cycles(path(4), 4) == 1   # the weighted view of P4 is C4
    assert enumerate_ad_cycles(complete(3), 3) == 1
    with pytest.raises(GraphError):
        enumerate_ad_cycles(path(4), 2)


@given(connected_graphs(min_n=3, max_n=7))
@settings(max_examples=50, deadline=None)
def test_cycle_counts_match_brute_force(g):
    rel = ad_relation_graph(g).adjacency_matrix()
    for length in range(3, g.n + 1):
        assert enumerate_ad_cycles(g, length) == brute_cycle_count(rel, length)
    cycles = list(ad_cycles(g))
    assert len(cycles) == len({frozenset(zip(c, c[1:] + c[:1])) | frozenset(zip(c[1:] + c[:1], c))
                               for c in cycles})


def test_odd_cycle_coefficient_examples():
    assert odd_ad_cycle_count_from_coeffs(CharPoly((1, 0, -3, -2))) == (1, 1)
    assert odd_ad_cycle_count_from_coeffs(ad_charpoly(path(4))) is None
    cp = ad_charpoly(cycle(5))
    k, value = odd_ad_cycle_count_from_coeffs(cp)
    assert k == 1 and value == weighted_ad_cycle_sum(cycle(5), 3) == 30
    with pytest.raises(ValueError):
        odd_ad_cycle_count_from_coeffs(CharPoly((1, 1, 0)))
    with pytest.raises(ValueError):
        odd_ad_cycle_count_from_coeffs(CharPoly((1, 0, -3, 3)))


def test_first_odd_coefficient_is_weighted_cycle_sum():
    for g in exhaustive_population(6):
        res = odd_ad_cycle_count_from_coeffs(ad_charpoly(g))
        if res is None:
            assert not any(len(c) % 2 for c in ad_cycles(g))
            continue
        k, value = res
        for short in range(3, 2 * k + 1, 2):
            assert enumerate_ad_cycles(g, short) == 0
        assert value == weighted_ad_cycle_sum(g, 2 * k + 1)


def test_odd_cycle_count_equals_plain_count_without_diametrical_steps():
    # on complete graphs every step is an edge, so the weights are all one
    for n in range(3, 8):
        k, value = odd_ad_cycle_count_from_coeffs(ad_charpoly(complete(n)))
        assert (k, value) == (1, enumerate_ad_cycles(complete(n), 3))


@pytest.mark.parametrize("g, expected", [(path(4), True), (cycle(6), True), (cycle(4), False),
                                         (path(5), False), (cycle(5), False), (path(2), True)],
                         ids=lambda x: getattr(x, "name", str(x)))
def test_diametrical_bipartite_examples(g, expected):
    assert is_diametrical_bipartite(g) is expected


def test_diametrical_bipartite_equivalences():
    for g in exhaustive_population(6):
        db = is_diametrical_bipartite(g)
        cp = ad_charpoly(g)
        assert db == all(c == 0 for c in cp.odd_coefficients().values())
        assert db == (not any(len(c) % 2 for c in ad_cycles(g)))
