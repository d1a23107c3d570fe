"""Rigidity-preserving constructions and the built-in graph/framework catalog.

Catalog names are stable strings used by the CLI and the HTTP service.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import (
    BadBaseSetError,
    BadParamsError,
    BadRemovedSetError,
    UnknownNameError,
    VertexExistsError,
)
from .frameworks import Framework
from .graphs import Graph, from_vertices_and_edges, graph_from_edges
from .scalars import Mode


def cone(graph: Graph, apex: int | None = None) -> Graph:
    """Join a new apex vertex to every existing vertex."""
    if apex is None:
        apex = max(graph.vertices, default=-1) + 1
    elif graph.has_vertex(apex):
        raise VertexExistsError(f"apex {apex} is already a vertex")
    vertices = tuple(sorted(set(graph.vertices) | {apex}))
    edges = set(graph.edges)
    edges.update((min(apex, v), max(apex, v)) for v in graph.vertices)
    return Graph(vertices, frozenset(edges))


def k_extension(
    graph: Graph,
    dim: int,
    k: int,
    removed,
    base,
    new_vertex: int | None = None,
) -> Graph:
    """Replace k edges by a new vertex joined to a (dim+k)-set covering them."""
    removed_set = {tuple(sorted(e)) for e in removed}
    if len(removed_set) != k or not removed_set <= graph.edges:
        raise BadRemovedSetError(f"need exactly {k} distinct existing edges to remove")
    base_set = set(base)
    if not base_set <= set(graph.vertices):
        raise BadBaseSetError("base set must consist of existing vertices")
    if len(base_set) != dim + k:
        raise BadBaseSetError(f"base set must have {dim + k} vertices, got {len(base_set)}")
    endpoints = {v for e in removed_set for v in e}
    if not endpoints <= base_set:
        raise BadBaseSetError("base set must contain all endpoints of the removed edges")
    if new_vertex is None:
        new_vertex = max(graph.vertices, default=-1) + 1
    elif graph.has_vertex(new_vertex):
        raise VertexExistsError(f"vertex {new_vertex} already exists")
    vertices = tuple(sorted(set(graph.vertices) | {new_vertex}))
    edges = set(graph.edges) - removed_set
    edges.update((min(new_vertex, v), max(new_vertex, v)) for v in base_set)
    return Graph(vertices, frozenset(edges))


def combine(g: Graph, h: Graph, mode: str = "union") -> Graph:
    """Union or intersection of two graphs, vertex- and edge-wise."""
    if mode == "union":
        vertices = tuple(sorted(set(g.vertices) | set(h.vertices)))
        return Graph(vertices, g.edges | h.edges)
    if mode == "intersection":
        vertices = tuple(sorted(set(g.vertices) & set(h.vertices)))
        return Graph(vertices, g.edges & h.edges)
    raise BadParamsError(f"combine mode must be union or intersection, got {mode!r}")


# -- graph catalog -------------------------------------------------------------

THREE_PRISM_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 5), (3, 4), (3, 5), (4, 5)]
DIAMOND_EDGES = [(0, 1), (1, 2), (2, 3), (0, 3), (1, 3)]


def _want_ints(name, params, count):
    if len(params) != count:
        raise BadParamsError(f"{name} takes {count} parameter(s), got {len(params)}")
    try:
        return [int(p) for p in params]
    except (TypeError, ValueError):
        raise BadParamsError(f"{name} takes integer parameters, got {params!r}") from None


def named_graph(name: str, *params) -> Graph:
    """Catalog graphs: Complete(n), CompleteBipartite(m,n), Cycle(n), Path(n),
    ThreePrism, Diamond."""
    if name == "Complete":
        (n,) = _want_ints(name, params, 1)
        if n < 1:
            raise BadParamsError("Complete needs n >= 1")
        return from_vertices_and_edges(
            range(n), [(i, j) for i in range(n) for j in range(i + 1, n)]
        )
    if name == "CompleteBipartite":
        m, n = _want_ints(name, params, 2)
        if m < 1 or n < 1:
            raise BadParamsError("CompleteBipartite needs m, n >= 1")
        return graph_from_edges([(i, m + j) for i in range(m) for j in range(n)])
    if name == "Cycle":
        (n,) = _want_ints(name, params, 1)
        if n < 3:
            raise BadParamsError("Cycle needs n >= 3")
        return graph_from_edges([(i, (i + 1) % n) for i in range(n)])
    if name == "Path":
        (n,) = _want_ints(name, params, 1)
        if n < 1:
            raise BadParamsError("Path needs n >= 1")
        return from_vertices_and_edges(range(n), [(i, i + 1) for i in range(n - 1)])
    if name == "ThreePrism":
        if params:
            raise BadParamsError("ThreePrism takes no parameters")
        return graph_from_edges(THREE_PRISM_EDGES)
    if name == "Diamond":
        if params:
            raise BadParamsError("Diamond takes no parameters")
        return graph_from_edges(DIAMOND_EDGES)
    raise UnknownNameError(f"no graph named {name!r}")


# Two flipped triangles on three parallel lines; one nontrivial flex and one
# stress, yet prestress stable.
THREE_PRISM_PARALLEL = {
    0: (0, 0),
    1: (2, 0),
    2: (1, 2),
    3: (0, 6),
    4: (2, 6),
    5: (1, 4),
}

# A realization with no coordinate coincidences; infinitesimally rigid.
THREE_PRISM_GENERIC = {
    0: (0, 0),
    1: (4, 0),
    2: (1, 3),
    3: (2, 7),
    4: (6, 5),
    5: (3, 4),
}

DIAMOND_REALIZATION = {0: (0, 0), 1: (1, -1), 2: (2, 0), 3: (1, 1)}

# Tangent half-angle values giving rational points on the unit circle.
_CIRCLE_TANGENTS = [
    Fraction(1, 2),
    Fraction(1, 3),
    Fraction(-1, 4),
    Fraction(3),
    Fraction(2, 5),
    Fraction(-2, 3),
    Fraction(5),
    Fraction(1, 7),
    Fraction(-3, 5),
    Fraction(4, 9),
    Fraction(7, 2),
    Fraction(-1, 6),
]

# Heights on the y-axis for the first bipartition class.
_AXIS_HEIGHTS = [Fraction(2), Fraction(-1), Fraction(3), Fraction(-2), Fraction(4), Fraction(-3)]

# Overall scale of the bipartite placements, chosen so the catalog K(2,4)
# motion (348 steps of 0.1, pinned pair (0,1)) traverses whole periods of its
# configuration-space loop and closes up.
_BIPARTITE_SCALE = Fraction(279, 500)


def _unit_circle_point(t: Fraction) -> tuple[Fraction, Fraction]:
    den = 1 + t * t
    return ((1 - t * t) / den, 2 * t / den)


def complete_bipartite_realization(m: int, n: int) -> dict[int, tuple[Fraction, Fraction]]:
    """Documented catalog placement: first class on the y-axis, second class at
    rational points of a circle (tangent half-angle parametrization)."""
    if m > len(_AXIS_HEIGHTS) or n > len(_CIRCLE_TANGENTS):
        raise BadParamsError(f"no stored realization for CompleteBipartite({m},{n})")
    s = _BIPARTITE_SCALE
    coords: dict[int, tuple[Fraction, Fraction]] = {}
    for i in range(m):
        coords[i] = (Fraction(0), s * _AXIS_HEIGHTS[i])
    for j in range(n):
        x, y = _unit_circle_point(_CIRCLE_TANGENTS[j])
        coords[m + j] = (s * x, s * y)
    return coords


def named_framework(name: str, *params) -> Framework:
    """Catalog frameworks: ThreePrism(realization), CompleteBipartite(m,n),
    Diamond, Cycle(n)."""
    if name == "ThreePrism":
        variant = params[0] if params else "generic"
        if len(params) > 1 or variant not in ("generic", "parallel"):
            raise BadParamsError("ThreePrism takes an optional 'generic'/'parallel' variant")
        coords = THREE_PRISM_PARALLEL if variant == "parallel" else THREE_PRISM_GENERIC
        return Framework(named_graph("ThreePrism"), coords, Mode.EXACT)
    if name == "CompleteBipartite":
        m, n = _want_ints(name, params, 2)
        graph = named_graph("CompleteBipartite", m, n)
        return Framework(graph, complete_bipartite_realization(m, n), Mode.EXACT)
    if name == "Diamond":
        if params:
            raise BadParamsError("Diamond takes no parameters")
        return Framework(named_graph("Diamond"), DIAMOND_REALIZATION, Mode.EXACT)
    if name == "Cycle":
        (n,) = _want_ints(name, params, 1)
        graph = named_graph("Cycle", n)
        coords = {
            i: (math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n))
            for i in range(n)
        }
        return Framework(graph, coords, Mode.APPROX)
    raise UnknownNameError(f"no framework named {name!r}")
