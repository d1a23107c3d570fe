"""Bar-joint frameworks: realizations, the rigidity matrix, flexes and stresses.

A framework pairs a graph with a d-dimensional realization whose coordinates
are either all exact rationals or all floats.  Every metric comparison works
with squared distances, so exact mode never needs radicals.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

import numpy as np

from . import worklimit
from .errors import (
    DimensionMismatchError,
    ExactUnsupportedError,
    GraphMismatchError,
    MissingVertexError,
    ParameterRangeError,
    ShapeMismatchError,
    UnknownVertexError,
    UnsupportedCaseError,
)
from .expressions import (
    BinOp,
    Func,
    Neg,
    Num,
    Param,
    Pow,
    evaluate,
    parse_expression,
)
from .graphs import Graph
from .linalg import (
    DEFAULT_TOL,
    ExactMatrix,
    exact_determinant,
    kernel,
    normalize_exact_vector,
    normalize_float_vector,
    rank,
    stack_rows,
)
from .scalars import Mode, Scalar, coerce_number

Flex = dict[int, tuple[Scalar, ...]]
Stress = dict[tuple[int, int], Scalar]


_EXPRESSION_NODES = (Num, Param, Neg, BinOp, Pow, Func)


def _coerce_coordinate(value, mode: Mode) -> tuple[Scalar, str | None]:
    """Turn one coordinate entry into a scalar, keeping its source string if any."""
    if isinstance(value, str):
        return evaluate(parse_expression(value), None, mode), value
    if isinstance(value, _EXPRESSION_NODES):
        return evaluate(value, None, mode), None
    return coerce_number(value, mode), None


class Framework:
    """A graph together with a realization of its vertices."""

    def __init__(self, graph: Graph, realization, mode: Mode, _sources=None):
        coords: dict[int, tuple[Scalar, ...]] = {}
        sources: dict[int, tuple[str | None, ...]] = {}
        vertex_set = set(graph.vertices)
        for v, values in realization.items():
            if v not in vertex_set:
                raise UnknownVertexError(f"realization mentions unknown vertex {v}")
            pair = [_coerce_coordinate(x, mode) for x in values]
            coords[v] = tuple(p[0] for p in pair)
            sources[v] = tuple(p[1] for p in pair)
        missing = vertex_set - coords.keys()
        if missing:
            raise MissingVertexError(f"no coordinates for vertices {sorted(missing)}")
        dims = {len(p) for p in coords.values()}
        if len(dims) > 1:
            raise DimensionMismatchError(f"mixed coordinate lengths {sorted(dims)}")
        dim = dims.pop() if dims else 0
        if graph.n > 0 and dim < 1:
            raise DimensionMismatchError("realization needs at least one coordinate")
        self.graph = graph
        self.mode = mode
        self._coords = coords
        self._sources = _sources if _sources is not None else sources
        self._dim = dim

    @property
    def dim(self) -> int:
        return self._dim

    def point(self, v: int) -> tuple[Scalar, ...]:
        return self._coords[v]

    def realization(self) -> dict[int, tuple[Scalar, ...]]:
        return dict(self._coords)

    def coordinate_source(self, v: int, i: int) -> str | None:
        return self._sources.get(v, (None,) * self._dim)[i]

    def is_exact(self) -> bool:
        return self.mode is Mode.EXACT

    def to_float(self) -> "Framework":
        """Explicit exact-to-float conversion; floats pass through unchanged."""
        if self.mode is Mode.APPROX:
            return self
        coords = {v: tuple(float(x) for x in p) for v, p in self._coords.items()}
        return Framework(self.graph, coords, Mode.APPROX)

    def with_edge(self, u: int, v: int) -> "Framework":
        return Framework(self.graph.with_edge(u, v), self._coords, self.mode, self._sources)

    def without_edge(self, u: int, v: int) -> "Framework":
        return Framework(self.graph.without_edge(u, v), self._coords, self.mode, self._sources)

    def __eq__(self, other):
        if not isinstance(other, Framework):
            return NotImplemented
        return (
            self.graph == other.graph
            and self.mode == other.mode
            and self._coords == other._coords
        )

    def __repr__(self):
        return f"Framework(n={self.graph.n}, m={self.graph.m}, d={self.dim}, {self.mode.value})"


def framework_new(graph: Graph, realization, mode: Mode) -> Framework:
    """Build a framework, evaluating any expression-string coordinates."""
    return Framework(graph, realization, mode)


# -- rigidity matrix and flex/stress bases ----------------------------------


def column_index(framework: Framework) -> dict[tuple[int, int], int]:
    """Map (vertex, coordinate) to its column in the rigidity matrix."""
    return {
        (v, i): j * framework.dim + i
        for j, v in enumerate(framework.graph.vertices)
        for i in range(framework.dim)
    }


def rigidity_matrix(framework: Framework):
    """|E| x d|V| matrix with row pattern (p(u)-p(v), p(v)-p(u)).

    Rows follow sorted edge order, columns sorted vertices by coordinate.
    Zero rows from coincident adjacent endpoints are kept.
    """
    d = framework.dim
    cols = d * framework.graph.n
    index = {v: j for j, v in enumerate(framework.graph.vertices)}
    zero: Scalar = Fraction(0) if framework.is_exact() else 0.0
    rows = []
    for u, v in framework.graph.sorted_edges:
        pu, pv = framework.point(u), framework.point(v)
        row = [zero] * cols
        for i in range(d):
            diff = pu[i] - pv[i]
            row[index[u] * d + i] = diff
            row[index[v] * d + i] = -diff
        rows.append(row)
    return stack_rows(rows, cols, framework.is_exact())


def flex_to_vector(framework: Framework, flex: Flex):
    if set(flex) != set(framework.graph.vertices):
        raise ShapeMismatchError("flex keys must equal the vertex set")
    out = []
    for v in framework.graph.vertices:
        values = tuple(flex[v])
        if len(values) != framework.dim:
            raise ShapeMismatchError(f"flex at vertex {v} has wrong length")
        out.extend(values)
    return tuple(out)


def vector_to_flex(framework: Framework, vector) -> Flex:
    d = framework.dim
    return {
        v: tuple(vector[j * d + i] for i in range(d))
        for j, v in enumerate(framework.graph.vertices)
    }


def _normalize_vector(vec, exact: bool):
    return normalize_exact_vector(tuple(vec)) if exact else normalize_float_vector(vec)


def _trivial_generators(framework: Framework):
    """Translation fields plus one rotation field per coordinate pair."""
    d = framework.dim
    n = framework.graph.n
    exact = framework.is_exact()
    zero: Scalar = Fraction(0) if exact else 0.0
    one: Scalar = Fraction(1) if exact else 1.0
    gens = []
    for i in range(d):
        vec = [zero] * (d * n)
        for j in range(n):
            vec[j * d + i] = one
        gens.append(tuple(vec))
    for a in range(d):
        for b in range(a + 1, d):
            vec = [zero] * (d * n)
            for j, v in enumerate(framework.graph.vertices):
                p = framework.point(v)
                vec[j * d + a] = -p[b]
                vec[j * d + b] = p[a]
            gens.append(tuple(vec))
    return gens


def _rank_of(vectors, cols: int, exact: bool, tol: float) -> int:
    if not vectors:
        return 0
    return rank(stack_rows(vectors, cols, exact), None if exact else tol)


def _independent_subset(vectors, cols: int, exact: bool, tol: float):
    """Greedy maximal subset of vectors with full rank (input order kept)."""
    chosen = []
    current = 0
    for vec in vectors:
        if _rank_of(chosen + [vec], cols, exact, tol) > current:
            chosen.append(vec)
            current += 1
    return chosen


def trivial_flex_basis(framework: Framework, tol: float = DEFAULT_TOL) -> list[Flex]:
    """Basis of the space of flexes that extend to ambient isometries."""
    cols = framework.dim * framework.graph.n
    exact = framework.is_exact()
    basis = _independent_subset(_trivial_generators(framework), cols, exact, tol)
    return [vector_to_flex(framework, _normalize_vector(v, exact)) for v in basis]


def inf_flexes(
    framework: Framework, include_trivial: bool = False, tol: float = DEFAULT_TOL
) -> list[Flex]:
    """Basis of the infinitesimal flexes; nontrivial complement by default."""
    exact = framework.is_exact()
    cols = framework.dim * framework.graph.n
    matrix = rigidity_matrix(framework)
    kern = kernel(matrix, None if exact else tol)
    if include_trivial:
        return [vector_to_flex(framework, _normalize_vector(v, exact)) for v in kern]
    trivial = _independent_subset(_trivial_generators(framework), cols, exact, tol)
    chosen = []
    base_rank = len(trivial)
    for vec in kern:
        if _rank_of(trivial + chosen + [vec], cols, exact, tol) > base_rank + len(chosen):
            chosen.append(vec)
    if not exact and chosen and trivial:
        basis = np.array([list(map(float, t)) for t in trivial])
        q, _ = np.linalg.qr(basis.T)
        chosen = [tuple(np.asarray(v) - q @ (q.T @ np.asarray(v))) for v in chosen]
    return [vector_to_flex(framework, _normalize_vector(v, exact)) for v in chosen]


def stresses(framework: Framework, tol: float = DEFAULT_TOL) -> list[Stress]:
    """Basis of the equilibrium stresses (left null space of the rigidity matrix)."""
    exact = framework.is_exact()
    matrix = rigidity_matrix(framework)
    left = kernel(matrix.transpose(), None if exact else tol)
    edges = framework.graph.sorted_edges
    return [
        dict(zip(edges, _normalize_vector(vec, exact)))
        for vec in left
    ]


def _residual_inf_norm(matrix, vector) -> float:
    if isinstance(matrix, ExactMatrix):
        residual = [
            sum(a * b for a, b in zip(row, vector)) for row in matrix.entries
        ]
        return 0.0 if all(x == 0 for x in residual) else math.inf
    if matrix.rows == 0:
        return 0.0
    return float(np.max(np.abs(matrix.data @ np.asarray(vector, dtype=float))))


def _matrix_scale(matrix) -> float:
    if isinstance(matrix, ExactMatrix):
        return 1.0
    return max(1.0, float(np.max(np.abs(matrix.data))) if matrix.data.size else 1.0)


def is_nontrivial_flex(framework: Framework, flex: Flex, tol: float = DEFAULT_TOL) -> bool:
    """Whether the vectors are a flex of the framework outside the trivial span."""
    vec = flex_to_vector(framework, flex)
    matrix = rigidity_matrix(framework)
    if _residual_inf_norm(matrix, vec) > tol * _matrix_scale(matrix):
        return False
    exact = framework.is_exact()
    cols = framework.dim * framework.graph.n
    trivial = _independent_subset(_trivial_generators(framework), cols, exact, tol)
    return _rank_of(trivial + [vec], cols, exact, tol) > len(trivial)


def is_stress(framework: Framework, stress: Stress, tol: float = DEFAULT_TOL) -> bool:
    vec = _stress_to_vector(framework, stress)
    matrix = rigidity_matrix(framework).transpose()
    return _residual_inf_norm(matrix, vec) <= tol * _matrix_scale(matrix)


def _stress_to_vector(framework: Framework, stress: Stress):
    edges = framework.graph.sorted_edges
    keys = {(u, v) if u < v else (v, u) for u, v in stress}
    if keys != set(edges):
        raise ShapeMismatchError("stress keys must equal the edge set")
    lookup = {((u, v) if u < v else (v, u)): w for (u, v), w in stress.items()}
    return tuple(lookup[e] for e in edges)


# -- rigidity predicates -----------------------------------------------------


def is_inf_rigid(framework: Framework, tol: float = DEFAULT_TOL) -> bool:
    """Kernel of the rigidity matrix equals the trivial flex space."""
    exact = framework.is_exact()
    matrix = rigidity_matrix(framework)
    kernel_dim = framework.dim * framework.graph.n - rank(matrix, None if exact else tol)
    cols = framework.dim * framework.graph.n
    trivial_dim = _rank_of(_trivial_generators(framework), cols, exact, tol)
    return kernel_dim == trivial_dim


def is_min_inf_rigid(framework: Framework, tol: float = DEFAULT_TOL) -> bool:
    if not is_inf_rigid(framework, tol):
        return False
    for u, v in framework.graph.sorted_edges:
        worklimit.check()
        if is_inf_rigid(framework.without_edge(u, v), tol):
            return False
    return True


def is_redundantly_inf_rigid(framework: Framework, tol: float = DEFAULT_TOL) -> bool:
    if not is_inf_rigid(framework, tol):
        return False
    for u, v in framework.graph.sorted_edges:
        worklimit.check()
        if not is_inf_rigid(framework.without_edge(u, v), tol):
            return False
    return True


# -- equivalence and congruence ----------------------------------------------


def squared_distance(p, q) -> Scalar:
    return sum((a - b) ** 2 for a, b in zip(p, q))


def squared_edge_lengths(framework: Framework) -> dict[tuple[int, int], Scalar]:
    return {
        (u, v): squared_distance(framework.point(u), framework.point(v))
        for u, v in framework.graph.sorted_edges
    }


def _compare_pairs(first, second, pairs, numerical, tol):
    exact = first.is_exact() and second.is_exact() and not numerical
    for u, v in pairs:
        a = squared_distance(first.point(u), first.point(v))
        b = squared_distance(second.point(u), second.point(v))
        if exact:
            if a != b:
                return False
        elif abs(float(a) - float(b)) > tol:
            return False
    return True


def is_equivalent(
    first: Framework, second: Framework, numerical: bool = False, tol: float = DEFAULT_TOL
) -> bool:
    """Same squared length on every edge."""
    if first.graph != second.graph:
        raise GraphMismatchError("equivalence needs identical graphs")
    if first.dim != second.dim:
        raise DimensionMismatchError("equivalence needs equal dimensions")
    return _compare_pairs(first, second, first.graph.sorted_edges, numerical, tol)


def is_congruent(
    first: Framework, second: Framework, numerical: bool = False, tol: float = DEFAULT_TOL
) -> bool:
    """Same squared distance on every vertex pair."""
    if first.graph.vertices != second.graph.vertices:
        raise GraphMismatchError("congruence needs identical vertex sets")
    if first.dim != second.dim:
        raise DimensionMismatchError("congruence needs equal dimensions")
    vertices = first.graph.vertices
    pairs = [(u, v) for i, u in enumerate(vertices) for v in vertices[i + 1 :]]
    return _compare_pairs(first, second, pairs, numerical, tol)


# -- transformations ----------------------------------------------------------


def _coerce_vector(values, mode: Mode):
    return tuple(coerce_number(x, mode) for x in values)


def _apply_pointwise(framework: Framework, fn) -> Framework:
    coords = {v: fn(framework.point(v)) for v in framework.graph.vertices}
    return Framework(framework.graph, coords, framework.mode)


def translate(framework: Framework, vector) -> Framework:
    offset = _coerce_vector(vector, framework.mode)
    if len(offset) != framework.dim:
        raise DimensionMismatchError("translation vector has wrong length")
    return _apply_pointwise(framework, lambda p: tuple(a + b for a, b in zip(p, offset)))


def rescale(framework: Framework, factor) -> Framework:
    c = coerce_number(factor, framework.mode)
    return _apply_pointwise(framework, lambda p: tuple(c * a for a in p))


def _rotation_data(framework: Framework, angle, cos_sin):
    if cos_sin is not None:
        c = coerce_number(cos_sin[0], framework.mode)
        s = coerce_number(cos_sin[1], framework.mode)
        unit_defect = c * c + s * s - 1
        bad = unit_defect != 0 if framework.is_exact() else abs(unit_defect) > 1e-12
        if bad:
            raise ParameterRangeError("cos_sin must satisfy c^2 + s^2 = 1")
        return c, s
    if angle is None:
        raise ParameterRangeError("rotation needs an angle or a cos_sin pair")
    if framework.is_exact():
        if angle == 0:
            return Fraction(1), Fraction(0)
        raise ExactUnsupportedError("exact rotation needs rational cos_sin data")
    return math.cos(angle), math.sin(angle)


def rotate2d(framework: Framework, angle=None, cos_sin=None) -> Framework:
    if framework.dim != 2:
        raise DimensionMismatchError("rotate2d needs a 2-dimensional framework")
    c, s = _rotation_data(framework, angle, cos_sin)
    return _apply_pointwise(
        framework, lambda p: (c * p[0] - s * p[1], s * p[0] + c * p[1])
    )


def rotate3d(framework: Framework, axis, angle=None, cos_sin=None) -> Framework:
    if framework.dim != 3:
        raise DimensionMismatchError("rotate3d needs a 3-dimensional framework")
    c, s = _rotation_data(framework, angle, cos_sin)
    raw = _coerce_vector(axis, framework.mode)
    norm_sq = sum(a * a for a in raw)
    if norm_sq == 0:
        raise ParameterRangeError("rotation axis must be nonzero")
    if framework.is_exact():
        num, den = norm_sq.numerator, norm_sq.denominator
        rn, rd = math.isqrt(num), math.isqrt(den)
        if rn * rn != num or rd * rd != den:
            raise ExactUnsupportedError("exact rotation needs an axis of rational length")
        norm = Fraction(rn, rd)
    else:
        norm = math.sqrt(norm_sq)
    ux, uy, uz = (a / norm for a in raw)
    one = Fraction(1) if framework.is_exact() else 1.0

    def rotate(p):
        x, y, z = p
        dot = ux * x + uy * y + uz * z
        cross = (uy * z - uz * y, uz * x - ux * z, ux * y - uy * x)
        return (
            c * x + s * cross[0] + (one - c) * dot * ux,
            c * y + s * cross[1] + (one - c) * dot * uy,
            c * z + s * cross[2] + (one - c) * dot * uz,
        )

    return _apply_pointwise(framework, rotate)


def project(framework: Framework, matrix_rows) -> Framework:
    rows = [_coerce_vector(r, framework.mode) for r in matrix_rows]
    if not rows or len(rows) >= framework.dim:
        raise DimensionMismatchError("projection needs fewer rows than the dimension")
    if any(len(r) != framework.dim for r in rows):
        raise DimensionMismatchError("projection rows must match the dimension")
    return _apply_pointwise(
        framework,
        lambda p: tuple(sum(a * b for a, b in zip(row, p)) for row in rows),
    )


# -- random integer realizations ----------------------------------------------


def random_realization(
    graph: Graph, dim: int, error_bound: float = 0.5, seed: int | None = None, rng=None
) -> dict[int, tuple[Fraction, ...]]:
    """Integer realization from [-N, N], N = ceil(D / error_bound), D = 2*d*|V|.

    The range follows the Schwartz-Zippel bound, so a rank query at this
    realization understates the generic rank with probability below the
    error bound.  Deterministic for a fixed seed.
    """
    if not 0 < error_bound < 1:
        raise ParameterRangeError("error bound must lie strictly between 0 and 1")
    if dim < 1:
        raise ParameterRangeError("dimension must be at least 1")
    if rng is None:
        rng = random.Random(seed)
    bound = math.ceil(2 * dim * max(graph.n, 1) / error_bound)
    return {
        v: tuple(Fraction(rng.randint(-bound, bound)) for _ in range(dim))
        for v in graph.vertices
    }


# -- stress matrices and stress-blocking tests ---------------------------------


def stress_matrix(framework: Framework, stress: Stress):
    """n x n symmetric matrix with -w on edges and zero row sums."""
    vec = _stress_to_vector(framework, stress)
    weights = dict(zip(framework.graph.sorted_edges, vec))
    vertices = framework.graph.vertices
    index = {v: i for i, v in enumerate(vertices)}
    exact = framework.is_exact()
    zero: Scalar = Fraction(0) if exact else 0.0
    n = len(vertices)
    grid = [[zero] * n for _ in range(n)]
    for (u, v), w in weights.items():
        i, j = index[u], index[v]
        grid[i][j] -= w
        grid[j][i] -= w
        grid[i][i] += w
        grid[j][j] += w
    return stack_rows(grid, n, exact)


def stress_energy(stress: Stress, flex: Flex) -> Scalar:
    """Quadratic form sum of w_uv * ||q_u - q_v||^2."""
    return sum(
        w * squared_distance(flex[u], flex[v]) for (u, v), w in stress.items()
    )


def _stress_energy_bilinear(stress: Stress, qa: Flex, qb: Flex) -> Scalar:
    return sum(
        w
        * sum(
            (qa[u][i] - qa[v][i]) * (qb[u][i] - qb[v][i])
            for i in range(len(qa[u]))
        )
        for (u, v), w in stress.items()
    )


def _is_positive_definite_exact(grid) -> bool:
    n = len(grid)
    for size in range(1, n + 1):
        minor = ExactMatrix.from_rows([row[:size] for row in grid[:size]], size)
        if exact_determinant(minor) <= 0:
            return False
    return True


def _blocking_verdict(framework: Framework, tol: float) -> bool:
    flexes = inf_flexes(framework, include_trivial=False, tol=tol)
    if not flexes:
        return True  # infinitesimally rigid, nothing to block
    stress_basis = stresses(framework, tol)
    flex_dim, stress_dim = len(flexes), len(stress_basis)
    exact = framework.is_exact()
    if flex_dim == 1:
        q = flexes[0]
        for omega in stress_basis:
            energy = stress_energy(omega, q)
            if (energy != 0) if exact else (abs(float(energy)) > tol):
                return True
        return False
    if stress_dim == 1:
        omega = stress_basis[0]
        grid = [
            [_stress_energy_bilinear(omega, qa, qb) for qb in flexes] for qa in flexes
        ]
        if exact:
            negated = [[-x for x in row] for row in grid]
            return _is_positive_definite_exact(grid) or _is_positive_definite_exact(negated)
        eigenvalues = np.linalg.eigvalsh(np.asarray(grid, dtype=float))
        # definite for the stress or its negation
        return float(eigenvalues.min()) > tol or float(eigenvalues.max()) < -tol
    raise UnsupportedCaseError(flex_dim, stress_dim)


def is_prestress_stable(framework: Framework, tol: float = DEFAULT_TOL) -> bool:
    """Some stress blocks every nontrivial flex at second order.

    Supported when the nontrivial flex space or the stress space is
    one-dimensional; infinitesimally rigid frameworks short-circuit to True.
    """
    return _blocking_verdict(framework, tol)


def is_second_order_rigid(framework: Framework, tol: float = DEFAULT_TOL) -> bool:
    """Every nontrivial flex is blocked by some stress.

    In the supported one-dimensional cases this coincides with prestress
    stability: with a single flex the quantifier order is irrelevant, and
    with a single stress the same definite form decides both.
    """
    return _blocking_verdict(framework, tol)
