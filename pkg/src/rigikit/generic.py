"""Generic rigidity of graphs: plain, minimal, redundant, global, matroidal.

Dimension 1 reduces to connectivity and dimension 2 to (2,3)-sparsity; every
dimension also has a randomized route that evaluates the rigidity matrix at
a random integer realization and computes its rank exactly.  Randomized
verdicts are one-sided: a True answer is certain, a False answer fails with
probability at most the requested bound.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction
from dataclasses import dataclass

from . import worklimit
from .errors import AlgorithmDimMismatchError, ParameterRangeError, UnknownEdgeError
from .frameworks import Framework, random_realization, rigidity_matrix, stress_matrix
from .graphs import Graph, connected_components, is_connected, is_vertex_connected
from .linalg import ExactMatrix, kernel, rank
from .pebble import pebble_components, pebble_rank, spans_tight_subgraph
from .scalars import Mode

DEFAULT_EPSILON = 1e-6

METHOD_CONNECTIVITY = "connectivity"
METHOD_SPARSITY = "sparsity"
METHOD_RANDOMIZED = "randomized"
METHOD_COMBINATORIAL_2D = "combinatorial-2d"


@dataclass(frozen=True)
class RigidityVerdict:
    value: bool
    method: str
    failure_probability_bound: float = 0.0
    seed: int | None = None

    def __bool__(self) -> bool:
        return self.value


def _check_dim(dim: int) -> None:
    if dim < 1:
        raise ParameterRangeError("dimension must be at least 1")


def _check_epsilon(epsilon: float) -> None:
    if not 0 < epsilon < 1:
        raise ParameterRangeError("error bound must lie strictly between 0 and 1")


def _materialize_seed(seed: int | None) -> int:
    return seed if seed is not None else random.randrange(2**32)


def required_rank(n: int, dim: int) -> int:
    """Generic rigidity-matrix rank of a complete graph on n vertices in R^dim."""
    if n <= dim + 1:
        return n * (n - 1) // 2
    return dim * n - dim * (dim + 1) // 2


def _exact_rank_at(graph: Graph, realization, dim: int) -> int:
    framework = Framework(graph, realization, Mode.EXACT)
    return rank(rigidity_matrix(framework))


def _randomized_rigidity(graph: Graph, dim: int, epsilon: float, seed: int) -> bool:
    realization = random_realization(graph, dim, epsilon, seed=seed)
    return _exact_rank_at(graph, realization, dim) == required_rank(graph.n, dim)


def _verdict(value: bool, method: str, epsilon: float = 0.0, seed: int | None = None):
    # one-sided randomized tests: True answers are certain
    bound = 0.0 if (value or method != METHOD_RANDOMIZED) else epsilon
    return RigidityVerdict(value, method, bound, seed)


def is_rigid(
    graph: Graph,
    dim: int = 2,
    algorithm: str = "default",
    epsilon: float = DEFAULT_EPSILON,
    seed: int | None = None,
) -> RigidityVerdict:
    """Generic d-rigidity of a graph.

    ``algorithm``: "default" picks connectivity (dim 1), sparsity (dim 2) or
    the randomized rank test (dim >= 3); "sparsity" forces the dim-2 route;
    "randomized" works in every dimension.
    """
    _check_dim(dim)
    if algorithm == "sparsity" and dim != 2:
        raise AlgorithmDimMismatchError("sparsity algorithm needs dim=2")
    if algorithm not in ("default", "sparsity", "randomized"):
        raise ParameterRangeError(f"unknown algorithm {algorithm!r}")
    if algorithm == "randomized":
        _check_epsilon(epsilon)
        used = _materialize_seed(seed)
        if graph.n <= dim + 1:
            return _verdict(graph.is_complete(), METHOD_RANDOMIZED, 0.0, used)
        return _verdict(
            _randomized_rigidity(graph, dim, epsilon, used), METHOD_RANDOMIZED, epsilon, used
        )
    if dim == 1:
        value = graph.is_complete() if graph.n <= 2 else is_connected(graph)
        return _verdict(value, METHOD_CONNECTIVITY)
    if dim == 2:
        value = graph.is_complete() if graph.n <= 3 else spans_tight_subgraph(graph, 2, 3)
        return _verdict(value, METHOD_SPARSITY)
    return is_rigid(graph, dim, "randomized", epsilon, seed)


def is_min_rigid(
    graph: Graph,
    dim: int = 2,
    algorithm: str = "default",
    epsilon: float = DEFAULT_EPSILON,
    seed: int | None = None,
) -> RigidityVerdict:
    """Rigid, and no single edge can be removed without losing rigidity."""
    _check_dim(dim)
    if algorithm == "sparsity" and dim != 2:
        raise AlgorithmDimMismatchError("sparsity algorithm needs dim=2")
    if algorithm not in ("default", "sparsity", "randomized"):
        raise ParameterRangeError(f"unknown algorithm {algorithm!r}")
    if algorithm != "randomized" and dim == 2:
        if graph.n <= 3:
            return _verdict(graph.is_complete(), METHOD_SPARSITY)
        from .pebble import is_kl_tight

        return _verdict(is_kl_tight(graph, 2, 3), METHOD_SPARSITY)
    if algorithm == "default" and dim == 1:
        # minimally rigid in dimension 1 means spanning tree
        value = bool(is_rigid(graph, 1)) and graph.m == max(graph.n - 1, 0)
        return _verdict(value, METHOD_CONNECTIVITY)
    _check_epsilon(epsilon)
    used = _materialize_seed(seed)
    budget = epsilon / (graph.m + 1)
    whole = is_rigid(graph, dim, "randomized", budget, used)
    if not whole.value:
        return _verdict(False, METHOD_RANDOMIZED, epsilon, used)
    for index, (u, v) in enumerate(graph.sorted_edges):
        worklimit.check()
        if is_rigid(graph.without_edge(u, v), dim, "randomized", budget, used + index + 1).value:
            return _verdict(False, METHOD_RANDOMIZED, 0.0, used)
    return _verdict(True, METHOD_RANDOMIZED, epsilon, used)


def rigid_components(
    graph: Graph,
    dim: int = 2,
    epsilon: float = DEFAULT_EPSILON,
    seed: int | None = None,
) -> list[set[int]]:
    """Vertex sets of the maximal rigid subgraphs (singletons where none)."""
    _check_dim(dim)
    if dim == 1:
        return connected_components(graph)
    if dim == 2:
        return pebble_components(graph, 2, 3)
    _check_epsilon(epsilon)
    used = _materialize_seed(seed)
    sets: list[set[int]] = [set(e) for e in graph.sorted_edges]
    counter = itertools.count()

    def rigid(subset: frozenset[int]) -> bool:
        sub = graph.induced(subset)
        return bool(is_rigid(sub, dim, "randomized", epsilon, used + next(counter)))

    changed = True
    while changed:
        changed = False
        for i in range(len(sets)):
            for j in range(i + 1, len(sets)):
                worklimit.check()
                union = sets[i] | sets[j]
                if sets[i] >= union or sets[j] >= union:
                    continue
                if rigid(frozenset(union)):
                    sets[i] = union
                    del sets[j]
                    changed = True
                    break
            if changed:
                break
    maximal = [s for s in sets if not any(s < t for t in sets)]
    unique: list[set[int]] = []
    for s in maximal:
        if s not in unique:
            unique.append(s)
    covered = set().union(*unique) if unique else set()
    unique.extend({v} for v in graph.vertices if v not in covered)
    return sorted(unique, key=lambda c: (min(c), len(c)))


def is_k_redundantly_rigid(
    graph: Graph,
    dim: int = 2,
    k: int = 1,
    vertex: bool = False,
    algorithm: str = "default",
    epsilon: float = DEFAULT_EPSILON,
    seed: int | None = None,
) -> RigidityVerdict:
    """Rigid after every deletion of k edges (or k vertices when ``vertex``).

    Vertex deletions that leave fewer than max(2, dim+1) vertices count as
    failures.
    """
    _check_dim(dim)
    if k < 1:
        raise ParameterRangeError("k must be at least 1")
    used = _materialize_seed(seed)
    items = list(graph.vertices) if vertex else graph.sorted_edges
    cases = list(itertools.combinations(items, k))
    budget = epsilon / max(len(cases) + 1, 1)
    whole = is_rigid(graph, dim, algorithm, budget, used)
    method = whole.method
    if not whole.value:
        return _verdict(False, method, epsilon if method == METHOD_RANDOMIZED else 0.0, used)
    for index, case in enumerate(cases):
        worklimit.check()
        if vertex:
            if graph.n - k < max(2, dim + 1):
                return _verdict(False, method, 0.0, used)
            remaining = graph.without_vertices(case)
        else:
            remaining = graph
            for u, v in case:
                remaining = remaining.without_edge(u, v)
        sub = is_rigid(remaining, dim, algorithm, budget, used + index + 1)
        if not sub.value:
            bound = epsilon if sub.method == METHOD_RANDOMIZED else 0.0
            return _verdict(False, sub.method, bound, used)
    return _verdict(True, method, epsilon if method == METHOD_RANDOMIZED else 0.0, used)


def _randomized_globally_rigid(graph: Graph, dim: int, epsilon: float, seed: int) -> bool:
    n = graph.n
    half = epsilon / 2
    realization = random_realization(graph, dim, half, seed=seed)
    if _exact_rank_at(graph, realization, dim) != required_rank(n, dim):
        return False
    framework = Framework(graph, realization, Mode.EXACT)
    stress_basis = kernel(rigidity_matrix(framework).transpose())
    if not stress_basis:
        return n == dim + 1 and graph.is_complete()
    rng = random.Random(seed + 1)
    bound = math.ceil(2 * n / half)
    coefficients = [Fraction(rng.randint(-bound, bound)) for _ in stress_basis]
    edges = graph.sorted_edges
    combined = {
        e: sum(c * vec[i] for c, vec in zip(coefficients, stress_basis))
        for i, e in enumerate(edges)
    }
    omega = stress_matrix(framework, combined)
    return rank(omega) == n - dim - 1


def is_globally_rigid(
    graph: Graph,
    dim: int = 2,
    algorithm: str = "default",
    epsilon: float = DEFAULT_EPSILON,
    seed: int | None = None,
) -> RigidityVerdict:
    """Generic global d-rigidity.

    dim 1: 2-connectivity.  dim 2 default ("redundancy"): 3-connected and
    redundantly rigid.  "randomized": random-stress rank test, any dimension.
    """
    _check_dim(dim)
    if algorithm not in ("default", "randomized", "redundancy"):
        raise ParameterRangeError(f"unknown algorithm {algorithm!r}")
    if algorithm == "redundancy" and dim != 2:
        raise AlgorithmDimMismatchError("redundancy algorithm needs dim=2")
    if graph.n <= dim + 1:
        method = METHOD_RANDOMIZED if algorithm == "randomized" else (
            METHOD_CONNECTIVITY if dim == 1 else METHOD_COMBINATORIAL_2D
        )
        return _verdict(graph.is_complete(), method)
    if algorithm == "randomized" or (algorithm == "default" and dim >= 3):
        _check_epsilon(epsilon)
        used = _materialize_seed(seed)
        value = _randomized_globally_rigid(graph, dim, epsilon, used)
        return _verdict(value, METHOD_RANDOMIZED, epsilon, used)
    if dim == 1:
        return _verdict(is_vertex_connected(graph, 2), METHOD_CONNECTIVITY)
    connected3 = is_vertex_connected(graph, 3)
    redundant = connected3 and bool(
        is_k_redundantly_rigid(graph, 2, 1, vertex=False, epsilon=epsilon, seed=seed)
    )
    return _verdict(connected3 and redundant, METHOD_COMBINATORIAL_2D)


# -- rigidity matroid ----------------------------------------------------------


def _normalize_edge_set(graph: Graph, edges) -> frozenset[tuple[int, int]]:
    vertex_set = set(graph.vertices)
    normalized = set()
    for u, v in edges:
        if u == v or u not in vertex_set or v not in vertex_set:
            raise UnknownEdgeError(f"edge ({u},{v}) does not fit the vertex set")
        normalized.add((u, v) if u < v else (v, u))
    return frozenset(normalized)


def _forest_rank(graph: Graph, edges) -> int:
    parent = {v: v for v in graph.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = 0
    for u, v in sorted(edges):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            count += 1
    return count


def _rigidity_row(realization, vertex_order, dim: int, edge) -> list[Fraction]:
    index = {v: i for i, v in enumerate(vertex_order)}
    row = [Fraction(0)] * (dim * len(vertex_order))
    u, v = edge
    pu, pv = realization[u], realization[v]
    for i in range(dim):
        diff = pu[i] - pv[i]
        row[index[u] * dim + i] = diff
        row[index[v] * dim + i] = -diff
    return row


def _edge_set_rank(graph: Graph, edges, dim, realization=None) -> int:
    """Rank of an edge set in the generic rigidity matroid over V(graph)."""
    if dim == 1:
        return _forest_rank(graph, edges)
    if dim == 2:
        from .graphs import from_vertices_and_edges

        return pebble_rank(from_vertices_and_edges(graph.vertices, edges), 2, 3)
    rows = [_rigidity_row(realization, graph.vertices, dim, e) for e in sorted(edges)]
    return rank(ExactMatrix.from_rows(rows, dim * graph.n))


def _matroid_realization(graph: Graph, dim: int, epsilon: float, seed: int | None):
    if dim >= 3:
        _check_epsilon(epsilon)
        return random_realization(graph, dim, epsilon, seed=_materialize_seed(seed))
    return None


def is_Rd_independent(
    graph: Graph,
    edges,
    dim: int = 2,
    epsilon: float = DEFAULT_EPSILON,
    seed: int | None = None,
) -> bool:
    """Whether the edge set is independent in the generic d-rigidity matroid."""
    _check_dim(dim)
    edge_set = _normalize_edge_set(graph, edges)
    realization = _matroid_realization(graph, dim, epsilon, seed)
    return _edge_set_rank(graph, edge_set, dim, realization) == len(edge_set)


def is_Rd_dependent(graph: Graph, edges, dim: int = 2, **kwargs) -> bool:
    return not is_Rd_independent(graph, edges, dim, **kwargs)


def is_Rd_circuit(
    graph: Graph,
    edges,
    dim: int = 2,
    epsilon: float = DEFAULT_EPSILON,
    seed: int | None = None,
) -> bool:
    """Dependent, with every proper subset independent."""
    _check_dim(dim)
    edge_set = _normalize_edge_set(graph, edges)
    if not edge_set:
        return False
    realization = _matroid_realization(graph, dim, epsilon, seed)
    if _edge_set_rank(graph, edge_set, dim, realization) == len(edge_set):
        return False
    for e in sorted(edge_set):
        worklimit.check()
        subset = edge_set - {e}
        if _edge_set_rank(graph, subset, dim, realization) != len(subset):
            return False
    return True


def Rd_closure(
    graph: Graph,
    edges,
    dim: int = 2,
    epsilon: float = DEFAULT_EPSILON,
    seed: int | None = None,
) -> set[tuple[int, int]]:
    """All vertex pairs whose addition leaves the rank unchanged."""
    _check_dim(dim)
    edge_set = _normalize_edge_set(graph, edges)
    realization = _matroid_realization(graph, dim, epsilon, seed)
    base = _edge_set_rank(graph, edge_set, dim, realization)
    closure = set(edge_set)
    for pair in itertools.combinations(graph.vertices, 2):
        worklimit.check()
        if pair in closure:
            continue
        if _edge_set_rank(graph, edge_set | {pair}, dim, realization) == base:
            closure.add(pair)
    return closure


def is_Rd_closed(
    graph: Graph,
    edges,
    dim: int = 2,
    epsilon: float = DEFAULT_EPSILON,
    seed: int | None = None,
) -> bool:
    edge_set = _normalize_edge_set(graph, edges)
    return Rd_closure(graph, edge_set, dim, epsilon, seed) == set(edge_set)
