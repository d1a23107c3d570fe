"""Simple loopless undirected graphs over integer vertex labels.

Graphs are immutable; edit-style operations return new values.  Connectivity
queries here are the backbone for the one-dimensional rigidity criteria and
for the combinatorial global-rigidity test.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import LoopEdgeError, UnknownVertexError

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    if u == v:
        raise LoopEdgeError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    vertices: tuple[int, ...]
    edges: frozenset[Edge]

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_vertex(self, v: int) -> bool:
        return v in set(self.vertices)

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and _norm_edge(u, v) in self.edges

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for nbrs in adj.values():
            nbrs.sort()
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def induced(self, subset) -> "Graph":
        keep = set(subset)
        unknown = keep - set(self.vertices)
        if unknown:
            raise UnknownVertexError(f"vertices {sorted(unknown)} not in graph")
        edges = frozenset(e for e in self.edges if e[0] in keep and e[1] in keep)
        return Graph(tuple(sorted(keep)), edges)

    def with_edge(self, u: int, v: int) -> "Graph":
        edge = _norm_edge(u, v)
        vertices = tuple(sorted(set(self.vertices) | {u, v}))
        return Graph(vertices, self.edges | {edge})

    def without_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.vertices, self.edges - {_norm_edge(u, v)})

    def with_vertex(self, v: int) -> "Graph":
        return Graph(tuple(sorted(set(self.vertices) | {v})), self.edges)

    def without_vertices(self, targets) -> "Graph":
        drop = set(targets)
        vertices = tuple(v for v in self.vertices if v not in drop)
        edges = frozenset(e for e in self.edges if e[0] not in drop and e[1] not in drop)
        return Graph(vertices, edges)


def graph_from_edges(edges) -> Graph:
    """Graph whose vertex set is the union of the edge endpoints."""
    normalized = frozenset(_norm_edge(u, v) for u, v in edges)
    vertices = tuple(sorted({v for e in normalized for v in e}))
    return Graph(vertices, normalized)


def from_vertices_and_edges(vertices, edges) -> Graph:
    """Graph with an explicit vertex list, keeping isolated vertices."""
    vertex_set = set(vertices)
    normalized = set()
    for u, v in edges:
        edge = _norm_edge(u, v)
        if edge[0] not in vertex_set or edge[1] not in vertex_set:
            raise UnknownVertexError(f"edge {edge} has an endpoint outside the vertex list")
        normalized.add(edge)
    return Graph(tuple(sorted(vertex_set)), frozenset(normalized))


def connected_components(graph: Graph) -> list[set[int]]:
    """Partition of the vertex set into connected components (sorted by minimum label)."""
    adj = graph.adjacency()
    seen: set[int] = set()
    components = []
    for start in graph.vertices:
        if start in seen:
            continue
        stack = [start]
        comp = {start}
        seen.add(start)
        while stack:
            node = stack.pop()
            for nbr in adj[node]:
                if nbr not in comp:
                    comp.add(nbr)
                    seen.add(nbr)
                    stack.append(nbr)
        components.append(comp)
    return sorted(components, key=min)


def is_connected(graph: Graph) -> bool:
    return len(connected_components(graph)) <= 1


def is_vertex_connected(graph: Graph, k: int) -> bool:
    """Whether the graph is k-vertex-connected.

    Complete-graph convention: K_n counts as (n-1)-connected.  Checked by
    exhaustive removal of all vertex subsets smaller than k, which is cheap
    for the k <= 3 queries the rigidity tests need.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if graph.n <= k:
        return False
    for size in range(k):
        for subset in itertools.combinations(graph.vertices, size):
            remaining = graph.without_vertices(subset)
            if len(connected_components(remaining)) > 1:
                return False
    return True
