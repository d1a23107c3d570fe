"""(k,l)-pebble game: sparsity certification and tight components.

The game keeps k pebbles per vertex and an orientation of the accepted
edges, with the invariant pebbles(v) + outdegree(v) = k.  An edge is
accepted when l+1 pebbles can be gathered onto its endpoints; the accepted
edges always form a maximal (k,l)-sparse subgraph of the edges seen so far.

Components here are the maximal vertex sets W whose induced subgraph spans a
(k,l)-tight subgraph, i.e. the sparsity-matroid rank of the edges inside W
equals k|W| - l.  Detection works on the final orientation: gather pebbles
onto an edge's endpoints; if the count caps at l, the component is the set
of vertices that cannot reach any remaining free pebble.
"""

from __future__ import annotations

from . import worklimit
from .errors import ParameterRangeError
from .graphs import Graph


def _validate(k: int, l: int) -> None:
    if k < 1 or l < 0 or l >= 2 * k:
        raise ParameterRangeError(f"pebble game needs k >= 1 and 0 <= l < 2k, got ({k},{l})")


class PebbleGame:
    """Mutable game state over a fixed vertex set."""

    def __init__(self, vertices, k: int, l: int):
        _validate(k, l)
        self.k = k
        self.l = l
        self.vertices = tuple(sorted(vertices))
        self.pebbles = {v: k for v in self.vertices}
        self.out: dict[int, set[int]] = {v: set() for v in self.vertices}
        self.accepted: list[tuple[int, int]] = []

    def _reach_with_parents(self, starts):
        """Forward reachability along the orientation, with DFS parents."""
        parents: dict[int, int | None] = {s: None for s in starts}
        stack = sorted(starts, reverse=True)
        order = []
        while stack:
            node = stack.pop()
            order.append(node)
            for nbr in sorted(self.out[node], reverse=True):
                if nbr not in parents:
                    parents[nbr] = node
                    stack.append(nbr)
        return order, parents

    def _collect_one(self, target: int, excluded: set[int]) -> bool:
        """Move one free pebble onto ``target`` if any is reachable.

        Among all reachable pebble-bearing vertices the lowest label wins.
        """
        order, parents = self._reach_with_parents([target])
        candidates = [w for w in order if w not in excluded and self.pebbles[w] > 0]
        if not candidates:
            return False
        source = min(candidates)
        path = [source]
        while parents[path[-1]] is not None:
            path.append(parents[path[-1]])
        path.reverse()  # target ... source
        for a, b in zip(path, path[1:]):
            self.out[a].remove(b)
            self.out[b].add(a)
        self.pebbles[source] -= 1
        self.pebbles[target] += 1
        return True

    def collect_pair(self, u: int, v: int, target: int) -> int:
        """Gather pebbles onto u and v until ``target`` many sit there (or no more move)."""
        excluded = {u, v}
        while self.pebbles[u] + self.pebbles[v] < target:
            worklimit.check()
            if not (self._collect_one(u, excluded) or self._collect_one(v, excluded)):
                break
        return self.pebbles[u] + self.pebbles[v]

    def try_insert(self, u: int, v: int) -> bool:
        if self.collect_pair(u, v, self.l + 1) < self.l + 1:
            return False
        tail, head = (u, v) if self.pebbles[u] > 0 else (v, u)
        self.pebbles[tail] -= 1
        self.out[tail].add(head)
        self.accepted.append((u, v) if u < v else (v, u))
        return True

    def play(self, edges) -> int:
        for u, v in edges:
            worklimit.check()
            self.try_insert(u, v)
        return len(self.accepted)

    def free_pebble_holders(self, excluded: set[int]) -> set[int]:
        return {w for w in self.vertices if w not in excluded and self.pebbles[w] > 0}

    def vertices_reaching(self, targets: set[int]) -> set[int]:
        """All vertices with a directed path into ``targets`` (including them)."""
        incoming: dict[int, list[int]] = {v: [] for v in self.vertices}
        for a, nbrs in self.out.items():
            for b in nbrs:
                incoming[b].append(a)
        seen = set(targets)
        stack = list(targets)
        while stack:
            node = stack.pop()
            for src in incoming[node]:
                if src not in seen:
                    seen.add(src)
                    stack.append(src)
        return seen


def pebble_rank(graph: Graph, k: int, l: int) -> int:
    """Rank of the edge set in the (k,l)-sparsity matroid (accepted edge count)."""
    game = PebbleGame(graph.vertices, k, l)
    return game.play(graph.sorted_edges)


def is_kl_sparse(graph: Graph, k: int, l: int) -> bool:
    """Every subset spanning an edge spans at most k*n' - l edges."""
    return pebble_rank(graph, k, l) == graph.m


def is_kl_tight(graph: Graph, k: int, l: int) -> bool:
    """Sparse with exactly k|V| - l edges overall."""
    return graph.m == k * graph.n - l and is_kl_sparse(graph, k, l)


def spans_tight_subgraph(graph: Graph, k: int, l: int) -> bool:
    """Whether some spanning subgraph is (k,l)-tight (rank saturates k|V| - l)."""
    if graph.n == 0:
        return True
    return pebble_rank(graph, k, l) == k * graph.n - l


def pebble_components(graph: Graph, k: int, l: int) -> list[set[int]]:
    """Maximal vertex sets spanning (k,l)-tight subgraphs, singletons elsewhere.

    After playing the game on every edge, a pair {u,v} joined by an edge lies
    in such a set exactly when the gathered pebble count on u,v caps at l;
    the maximal set is then everything that cannot reach a free pebble.
    Components may overlap (two triangles sharing a vertex at (2,3)).
    """
    _validate(k, l)
    game = PebbleGame(graph.vertices, k, l)
    game.play(graph.sorted_edges)
    components: list[set[int]] = []
    for u, v in graph.sorted_edges:
        worklimit.check()
        if any(u in comp and v in comp for comp in components):
            continue
        if game.collect_pair(u, v, l + 1) >= l + 1:
            continue
        holders = game.free_pebble_holders({u, v})
        blocked = game.vertices_reaching(holders) if holders else set()
        component = set(game.vertices) - blocked
        components.append(component)
    covered = set().union(*components) if components else set()
    for v in graph.vertices:
        if v not in covered:
            components.append({v})
    return sorted(components, key=lambda c: (min(c), len(c)))
