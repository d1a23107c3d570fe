import pytest

from rigikit import (
    NacColoring,
    graph_from_edges,
    is_nac_coloring,
    monochromatic_classes,
    nac_colorings,
    named_graph,
    stable_separating_set,
)
from rigikit.errors import NotAPartitionError

from helpers import graphs_up_to, nac_bruteforce

TWO_TRIANGLES = graph_from_edges([(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def test_monochromatic_classes():
    assert len(monochromatic_classes(named_graph("Complete", 4))) == 1
    c4 = named_graph("Cycle", 4)
    assert [sorted(c) for c in monochromatic_classes(c4)] == [
        [(0, 1)], [(0, 3)], [(1, 2)], [(2, 3)],
    ]
    prism = monochromatic_classes(named_graph("ThreePrism"))
    sizes = sorted(len(c) for c in prism)
    assert sizes == [1, 1, 1, 3, 3]


def test_is_nac_coloring():
    c4 = named_graph("Cycle", 4)
    opposite = NacColoring(
        frozenset({(0, 1), (2, 3)}), frozenset({(1, 2), (0, 3)})
    )
    assert is_nac_coloring(c4, opposite)
    lonely = NacColoring(frozenset({(0, 1)}), frozenset({(1, 2), (2, 3), (0, 3)}))
    assert not is_nac_coloring(c4, lonely)
    monochromatic = NacColoring(frozenset(c4.edges), frozenset())
    assert not is_nac_coloring(c4, monochromatic)
    with pytest.raises(NotAPartitionError):
        is_nac_coloring(c4, NacColoring(frozenset({(0, 1)}), frozenset({(0, 1)})))


def test_enumeration_examples():
    assert nac_colorings(named_graph("Complete", 4)) == []
    assert len(nac_colorings(named_graph("Cycle", 4))) == 3
    assert len(nac_colorings(named_graph("ThreePrism"))) > 0


def test_enumeration_limit_and_canonical_red():
    c4 = named_graph("Cycle", 4)
    some = nac_colorings(c4, limit=2)
    assert len(some) == 2
    smallest = c4.sorted_edges[0]
    for coloring in nac_colorings(c4):
        assert smallest in coloring.red


def test_enumeration_matches_bruteforce():
    for g in graphs_up_to(5, max_edges=8):
        got = {c.red for c in nac_colorings(g)}
        assert got == nac_bruteforce(g), g.sorted_edges


def test_classes_monochromatic_in_every_coloring():
    for g in (named_graph("ThreePrism"), TWO_TRIANGLES):
        classes = monochromatic_classes(g)
        for coloring in nac_colorings(g):
            for cls in classes:
                assert cls <= coloring.red or cls <= coloring.blue


def test_stable_separating_set_examples():
    assert stable_separating_set(named_graph("Cycle", 4)) == {0, 2}
    assert stable_separating_set(named_graph("Complete", 4)) is None
    assert stable_separating_set(TWO_TRIANGLES) == {2}


def test_separating_set_implies_coloring_exists():
    from rigikit import is_connected

    for g in graphs_up_to(5, max_edges=8):
        if g.m < 2 or not is_connected(g):
            continue
        if stable_separating_set(g) is not None:
            assert nac_colorings(g, limit=1), g.sorted_edges
