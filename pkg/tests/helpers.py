"""Independent oracles and small-graph corpora shared by the test suite.

Everything here is deliberately written from first principles (subset
counting, greedy matroid ranks over a counting oracle, union-find
connectivity, cycle enumeration) so the package's algorithms are checked
against genuinely different code paths.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

import numpy as np

from rigikit import Graph, from_vertices_and_edges


# -- corpus: all graphs on <= n vertices up to isomorphism -----------------------


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


@lru_cache(maxsize=None)
def noniso_masks(n: int) -> tuple[int, ...]:
    """Canonical edge-bitmask representatives of all graphs on n labeled vertices."""
    pairs = _pairs(n)
    index = {p: i for i, p in enumerate(pairs)}
    masks = np.arange(2 ** len(pairs), dtype=np.int64)
    canon = masks.copy()
    for perm in itertools.permutations(range(n)):
        remap = [
            index[tuple(sorted((perm[u], perm[v])))] for (u, v) in pairs
        ]
        permuted = np.zeros_like(masks)
        for src, dst in enumerate(remap):
            permuted |= ((masks >> src) & 1) << dst
        np.minimum(canon, permuted, out=canon)
    return tuple(sorted(set(canon.tolist())))


def mask_to_graph(n: int, mask: int) -> Graph:
    pairs = _pairs(n)
    edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
    return from_vertices_and_edges(range(n), edges)


def graphs_up_to(n_max: int, max_edges: int | None = None):
    """All non-isomorphic graphs with 1..n_max vertices (no isolated-vertex dedup)."""
    for n in range(1, n_max + 1):
        for mask in noniso_masks(n):
            if max_edges is not None and bin(mask).count("1") > max_edges:
                continue
            yield mask_to_graph(n, mask)


# -- sparsity oracles -------------------------------------------------------------


def _edge_masks_inside(graph: Graph) -> dict[frozenset, int]:
    edges = graph.sorted_edges
    inside = {}
    for size in range(1, graph.n + 1):
        for subset in itertools.combinations(graph.vertices, size):
            keep = set(subset)
            mask = 0
            for i, (u, v) in enumerate(edges):
                if u in keep and v in keep:
                    mask |= 1 << i
            inside[frozenset(subset)] = mask
    return inside


def sparse_oracle(graph: Graph, k: int, l: int) -> bool:
    """Subset-counting definition of (k,l)-sparsity."""
    for subset, mask in _edge_masks_inside(graph).items():
        count = bin(mask).count("1")
        if count >= 1 and count > k * len(subset) - l:
            return False
    return True


def tight_oracle(graph: Graph, k: int, l: int) -> bool:
    return graph.m == k * graph.n - l and sparse_oracle(graph, k, l)


class SparsityRankOracle:
    """Greedy matroid rank using only the subset-counting independence test."""

    def __init__(self, graph: Graph, k: int, l: int):
        self.graph = graph
        self.k = k
        self.l = l
        self.edges = graph.sorted_edges
        self.inside = _edge_masks_inside(graph)

    def _is_sparse_mask(self, mask: int) -> bool:
        for subset, inner in self.inside.items():
            count = bin(mask & inner).count("1")
            if count >= 1 and count > self.k * len(subset) - self.l:
                return False
        return True

    def rank_of_vertex_set(self, subset) -> int:
        keep = frozenset(subset)
        chosen = 0
        for i, (u, v) in enumerate(self.edges):
            if u in keep and v in keep:
                candidate = chosen | (1 << i)
                if self._is_sparse_mask(candidate):
                    chosen = candidate
        return bin(chosen).count("1")

    def saturated(self, subset) -> bool:
        subset = set(subset)
        target = self.k * len(subset) - self.l
        return target >= 1 and self.rank_of_vertex_set(subset) == target


def tight_components_oracle(graph: Graph, k: int, l: int) -> list[set[int]]:
    """Maximal vertex sets spanning a tight subgraph, by exhaustive search."""
    oracle = SparsityRankOracle(graph, k, l)
    saturated = [
        set(subset)
        for size in range(2, graph.n + 1)
        for subset in itertools.combinations(graph.vertices, size)
        if oracle.saturated(subset)
    ]
    maximal = [s for s in saturated if not any(s < t for t in saturated)]
    covered = set().union(*maximal) if maximal else set()
    maximal.extend({v} for v in graph.vertices if v not in covered)
    return sorted(maximal, key=lambda c: (min(c), len(c)))


# -- connectivity oracle (union-find, unlike the BFS in the package) ----------------


def connected_oracle(graph: Graph) -> bool:
    if graph.n == 0:
        return True
    parent = {v: v for v in graph.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in graph.edges:
        parent[find(u)] = find(v)
    roots = {find(v) for v in graph.vertices}
    return len(roots) == 1


# -- cycle enumeration and the brute-force coloring oracle ---------------------------


def all_cycles(graph: Graph) -> list[frozenset]:
    """Every simple cycle, as a frozenset of edges (edge subsets that are
    connected with all degrees equal to two)."""
    edges = graph.sorted_edges
    cycles = []
    for mask in range(1, 2 ** len(edges)):
        subset = [edges[i] for i in range(len(edges)) if (mask >> i) & 1]
        degree: dict[int, int] = {}
        for u, v in subset:
            degree[u] = degree.get(u, 0) + 1
            degree[v] = degree.get(v, 0) + 1
        if any(d != 2 for d in degree.values()):
            continue
        sub = from_vertices_and_edges(sorted(degree), subset)
        if connected_oracle(sub):
            cycles.append(frozenset(subset))
    return cycles


def nac_bruteforce(graph: Graph) -> set[frozenset]:
    """Red edge sets of all valid colorings, canonicalized up to color swap.

    A coloring is valid when every cycle is monochromatic or carries each
    color at least twice.  Canonical form: the smallest edge is red.
    """
    edges = graph.sorted_edges
    cycles = all_cycles(graph)
    found = set()
    for mask in range(1, 2 ** len(edges) - 1):
        red = frozenset(edges[i] for i in range(len(edges)) if (mask >> i) & 1)
        ok = True
        for cycle in cycles:
            red_count = len(cycle & red)
            if 0 < red_count < 2 or 0 < len(cycle) - red_count < 2:
                ok = False
                break
        if ok:
            blue = frozenset(edges) - red
            found.add(red if edges[0] in red else blue)
    return found


# -- independent exact rank (plain fraction row echelon) ------------------------------


def echelon_rank_oracle(rows) -> int:
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(n_rows):
            if r != rank and m[r][col] != 0:
                f = m[r][col] / m[rank][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def framework_rigidity_rows(points: dict, edges) -> list[list[Fraction]]:
    """Rigidity-matrix rows built independently of the package, for oracles."""
    order = sorted(points)
    index = {v: i for i, v in enumerate(order)}
    d = len(next(iter(points.values())))
    rows = []
    for u, v in sorted(edges):
        row = [Fraction(0)] * (d * len(order))
        for i in range(d):
            diff = Fraction(points[u][i]) - Fraction(points[v][i])
            row[index[u] * d + i] = diff
            row[index[v] * d + i] = -diff
        rows.append(row)
    return rows
