"""Red/blue edge colorings in which no cycle sees one color exactly once.

Such a coloring exists for a connected graph exactly when the graph has a
flexible planar realization, so the enumeration here is the combinatorial
gateway to non-generic flexibility.  Enumeration reduces the search space to
the classes of edges forced monochromatic (edges sharing a triangle), then
filters candidate colorings with a connected-component test.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import worklimit
from .errors import NotAPartitionError
from .graphs import Edge, Graph, connected_components, from_vertices_and_edges


@dataclass(frozen=True)
class NacColoring:
    red: frozenset[Edge]
    blue: frozenset[Edge]


def monochromatic_classes(graph: Graph) -> list[frozenset[Edge]]:
    """Partition of the edges into triangle-connected classes.

    Two edges of a common triangle are forced to share a color in every
    valid coloring (a triangle cannot carry a color exactly once); classes
    are the transitive closure of that relation, sorted by smallest edge.
    """
    edges = graph.sorted_edges
    parent = {e: e for e in edges}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    adjacency = graph.adjacency()
    for u, v in edges:
        for w in adjacency[u]:
            if w != v and graph.has_edge(v, w):
                union((u, v), (min(u, w), max(u, w)))
                union((u, v), (min(v, w), max(v, w)))
    groups: dict[Edge, set[Edge]] = {}
    for e in edges:
        groups.setdefault(find(e), set()).add(e)
    return sorted((frozenset(g) for g in groups.values()), key=min)


def _component_ids(graph: Graph, edges) -> dict[int, int]:
    sub = from_vertices_and_edges(graph.vertices, edges)
    ids: dict[int, int] = {}
    for i, comp in enumerate(connected_components(sub)):
        for v in comp:
            ids[v] = i
    return ids


def is_nac_coloring(graph: Graph, coloring: NacColoring) -> bool:
    """Check the cycle condition via connected components.

    A cycle carries one color exactly once iff some edge of that color joins
    two vertices lying in one connected component of the other color's
    subgraph.  Colorings that do not partition the edge set raise; a coloring
    missing one of the colors returns False.
    """
    red, blue = frozenset(coloring.red), frozenset(coloring.blue)
    if red | blue != graph.edges or red & blue:
        raise NotAPartitionError("coloring must split the edge set into red and blue")
    if not red or not blue:
        return False
    blue_comp = _component_ids(graph, blue)
    if any(blue_comp[u] == blue_comp[v] for u, v in red):
        return False
    red_comp = _component_ids(graph, red)
    return not any(red_comp[u] == red_comp[v] for u, v in blue)


def nac_colorings(graph: Graph, limit: int | None = None) -> list[NacColoring]:
    """All valid colorings up to swapping the two colors.

    Canonical representative: the class containing the smallest edge is red.
    """
    classes = monochromatic_classes(graph)
    if len(classes) < 2:
        return []
    found: list[NacColoring] = []
    for picks in itertools.product((True, False), repeat=len(classes) - 1):
        worklimit.check()
        red: set[Edge] = set(classes[0])
        blue: set[Edge] = set()
        for cls, is_red in zip(classes[1:], picks):
            (red if is_red else blue).update(cls)
        if not blue:
            continue
        coloring = NacColoring(frozenset(red), frozenset(blue))
        if is_nac_coloring(graph, coloring):
            found.append(coloring)
            if limit is not None and len(found) >= limit:
                break
    return found


def stable_separating_set(graph: Graph) -> set[int] | None:
    """A smallest independent vertex set whose removal disconnects the graph.

    Exhaustive search in order of size, then lexicographically; None when no
    such set exists.
    """
    vertices = graph.vertices
    for size in range(0, graph.n):
        for subset in itertools.combinations(vertices, size):
            worklimit.check()
            if any(graph.has_edge(u, v) for u, v in itertools.combinations(subset, 2)):
                continue
            remaining = graph.without_vertices(subset)
            if len(connected_components(remaining)) > 1:
                return set(subset)
    return None
