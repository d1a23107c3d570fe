import pytest

from rigikit import (
    graph_from_edges,
    is_kl_sparse,
    is_kl_tight,
    named_graph,
    pebble_components,
)
from rigikit.errors import ParameterRangeError
from rigikit.pebble import pebble_rank, spans_tight_subgraph

from helpers import (
    SparsityRankOracle,
    graphs_up_to,
    sparse_oracle,
    tight_components_oracle,
    tight_oracle,
)

PAIRS = [(1, 0), (1, 1), (2, 2), (2, 3), (3, 3)]


def comps_as_lists(comps):
    return sorted(map(sorted, comps))


def test_sparse_examples():
    assert is_kl_sparse(named_graph("Cycle", 4), 2, 3)
    assert not is_kl_sparse(named_graph("Complete", 4), 2, 3)  # 6 > 2*4-3
    assert is_kl_sparse(named_graph("ThreePrism"), 2, 3)


def test_tight_examples():
    assert is_kl_tight(named_graph("ThreePrism"), 2, 3)  # 9 = 2*6-3
    assert not is_kl_tight(named_graph("Cycle", 4), 2, 3)  # 4 != 5
    assert not is_kl_tight(named_graph("Complete", 4), 2, 3)


def test_parameter_range():
    g = named_graph("Cycle", 4)
    with pytest.raises(ParameterRangeError):
        is_kl_sparse(g, 2, 4)
    with pytest.raises(ParameterRangeError):
        is_kl_sparse(g, 0, 0)


def test_component_examples():
    two_triangles = graph_from_edges([(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    assert comps_as_lists(pebble_components(two_triangles, 2, 3)) == [
        [0, 1, 2],
        [2, 3, 4],
    ]
    assert comps_as_lists(pebble_components(named_graph("ThreePrism"), 2, 3)) == [
        [0, 1, 2, 3, 4, 5]
    ]
    assert comps_as_lists(pebble_components(named_graph("Cycle", 4), 2, 3)) == [
        [0, 1],
        [0, 3],
        [1, 2],
        [2, 3],
    ]


def test_component_hard_cases():
    # a triangle-free tight graph: detection must still report the whole set
    k33 = named_graph("CompleteBipartite", 3, 3)
    assert comps_as_lists(pebble_components(k33, 2, 3)) == [[0, 1, 2, 3, 4, 5]]
    # at (1,0) the union of vertex sets spanning tight subgraphs can be disconnected
    two_triangles = graph_from_edges([(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
    assert comps_as_lists(pebble_components(two_triangles, 1, 0)) == [[0, 1, 2, 3, 4, 5]]


def test_verdicts_match_subset_oracle_small():
    for g in graphs_up_to(6):
        for k, l in PAIRS:
            assert is_kl_sparse(g, k, l) == sparse_oracle(g, k, l), (g.sorted_edges, k, l)
            assert is_kl_tight(g, k, l) == tight_oracle(g, k, l), (g.sorted_edges, k, l)


def test_tight_implies_sparse():
    for g in graphs_up_to(5):
        for k, l in PAIRS:
            if is_kl_tight(g, k, l):
                assert is_kl_sparse(g, k, l)


def test_components_match_exhaustive_oracle():
    for g in graphs_up_to(5):
        for k, l in PAIRS:
            got = comps_as_lists(pebble_components(g, k, l))
            want = comps_as_lists(tight_components_oracle(g, k, l))
            assert got == want, (g.sorted_edges, k, l, got, want)


def test_components_edgewise_maximal_on_six_vertices():
    for g in graphs_up_to(6):
        if g.n != 6:
            continue
        for k, l in PAIRS:
            oracle = SparsityRankOracle(g, k, l)
            for comp in pebble_components(g, k, l):
                if len(comp) < 2:
                    continue
                assert oracle.saturated(comp)
                for w in set(g.vertices) - comp:
                    assert not oracle.saturated(comp | {w})


def test_spanning_component_iff_rank_saturates():
    for g in graphs_up_to(5):
        if g.n < 2:
            continue
        comps = pebble_components(g, 2, 3)
        single_spanning = len(comps) == 1 and comps[0] == set(g.vertices)
        assert single_spanning == spans_tight_subgraph(g, 2, 3)


def test_rank_is_edge_count_for_sparse_graphs():
    prism = named_graph("ThreePrism")
    assert pebble_rank(prism, 2, 3) == prism.m
    k4 = named_graph("Complete", 4)
    assert pebble_rank(k4, 2, 3) == 5
