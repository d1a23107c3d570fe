"""Continuous motions of flexible frameworks.

Parametric motions are user-supplied coordinate expressions in one parameter,
validated at construction: symbolically (polynomial normal form) when every
coordinate is rational in t, numerically on a sample grid otherwise.

Approximate motions are tracked numerically: an Euler predictor along a unit
nontrivial flex, a Gauss-Newton corrector on the squared-edge-length
constraints (its Jacobian is twice the rigidity matrix at the current
point), an optional re-pinning isometry, and kernel-projection transport of
the step direction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import worklimit
from .errors import (
    BaseMismatchError,
    CorrectorDivergedError,
    FlexIndexOutOfRangeError,
    NotAMotionError,
    NotFlexibleError,
    ParameterRangeError,
    UnboundedIntervalError,
    UnknownVertexError,
    UnsupportedDimensionError,
)
from .expressions import (
    evaluate,
    is_rational_expression,
    parse_expression,
    to_rational_function,
)
from .frameworks import Framework, inf_flexes, squared_edge_lengths
from .linalg import DEFAULT_TOL
from .scalars import Mode

VALIDATION_TOL = 1e-9
DEFAULT_VALIDATION_SAMPLES = 25
MAX_CORRECTOR_ITERATIONS = 50
UNBOUNDED_WINDOW = 10.0


def _parse_exprs(framework: Framework, expressions):
    parsed = {}
    for v in framework.graph.vertices:
        if v not in expressions:
            raise ParameterRangeError(f"no expressions for vertex {v}")
        exprs = [
            parse_expression(e) if isinstance(e, str) else e for e in expressions[v]
        ]
        if len(exprs) != framework.dim:
            raise ParameterRangeError(f"vertex {v} needs {framework.dim} expressions")
        parsed[v] = tuple(exprs)
    return parsed


class ParametricMotion:
    """A validated parametrized motion of a framework."""

    def __init__(
        self,
        framework: Framework,
        expressions,
        interval: tuple[float, float],
        t0,
        validation_samples: int = DEFAULT_VALIDATION_SAMPLES,
    ):
        lo, hi = float(interval[0]), float(interval[1])
        if not lo < hi:
            raise ParameterRangeError("interval must satisfy a < b")
        if not math.isfinite(float(t0)) or not lo <= float(t0) <= hi:
            raise ParameterRangeError("t0 must be finite and lie in the interval")
        self.framework = framework
        self.expressions = _parse_exprs(framework, expressions)
        self.interval = (lo, hi)
        self.t0 = t0
        self._validate(validation_samples)
        self._check_base()

    # -- construction-time validation --

    def _rational(self) -> bool:
        return all(
            is_rational_expression(e) for exprs in self.expressions.values() for e in exprs
        )

    def _check_base(self):
        exact = self.framework.is_exact() and self._rational()
        for v in self.framework.graph.vertices:
            point = self.framework.point(v)
            for i, expr in enumerate(self.expressions[v]):
                if exact:
                    value = evaluate(expr, Fraction(self.t0), Mode.EXACT)
                    ok = value == point[i]
                else:
                    value = evaluate(expr, float(self.t0), Mode.APPROX)
                    ok = abs(value - float(point[i])) <= VALIDATION_TOL
                if not ok:
                    raise BaseMismatchError(
                        f"coordinate {i} of vertex {v} is {value} at t0, expected {point[i]}"
                    )

    def _validate(self, samples: int):
        if self._rational():
            self._validate_symbolically()
        else:
            self._validate_numerically(samples)

    def _validate_symbolically(self):
        t0 = Fraction(self.t0)
        for u, v in self.framework.graph.sorted_edges:
            num, den = self._squared_length_function(u, v)
            # constant exactly when num - s(t0) * den vanishes identically
            base = _poly_eval(num, t0) / _poly_eval(den, t0)
            delta = [a - base * b for a, b in _zip_pad(num, den)]
            if any(c != 0 for c in delta):
                witness = self._symbolic_witness(num, den, base)
                raise NotAMotionError(witness, (u, v))

    def _squared_length_function(self, u, v):
        from .expressions import _poly_add, _poly_mul, _poly_neg  # polynomial helpers

        total_num, total_den = [], [Fraction(1)]
        for i in range(self.framework.dim):
            nu, du = to_rational_function(self.expressions[u][i])
            nv, dv = to_rational_function(self.expressions[v][i])
            diff_num = _poly_add(_poly_mul(nu, dv), _poly_neg(_poly_mul(nv, du)))
            diff_den = _poly_mul(du, dv)
            sq_num = _poly_mul(diff_num, diff_num)
            sq_den = _poly_mul(diff_den, diff_den)
            total_num = _poly_add(_poly_mul(total_num, sq_den), _poly_mul(sq_num, total_den))
            total_den = _poly_mul(total_den, sq_den)
        return total_num, total_den

    def _symbolic_witness(self, num, den, base):
        t = Fraction(self.t0) + 1
        for _ in range(100):
            d = _poly_eval(den, t)
            if d != 0 and _poly_eval(num, t) / d != base:
                return t
            t += 1
        return t

    def _sample_grid(self, count: int):
        lo, hi = self.interval
        if math.isinf(lo):
            lo = float(self.t0) - UNBOUNDED_WINDOW
        if math.isinf(hi):
            hi = float(self.t0) + UNBOUNDED_WINDOW
        return np.linspace(lo, hi, count)

    def _validate_numerically(self, samples: int):
        targets = {
            e: float(l) for e, l in squared_edge_lengths(self.framework).items()
        }
        for t in self._sample_grid(samples):
            coords = self._evaluate_at(float(t))
            for (u, v), target in targets.items():
                actual = sum((a - b) ** 2 for a, b in zip(coords[u], coords[v]))
                if abs(actual - target) > VALIDATION_TOL * max(1.0, abs(target)):
                    raise NotAMotionError(float(t), (u, v), abs(actual - target))

    def _evaluate_at(self, t: float):
        return {
            v: tuple(evaluate(e, t, Mode.APPROX) for e in exprs)
            for v, exprs in self.expressions.items()
        }

    def sample(self, count: int) -> list[dict[int, tuple[float, ...]]]:
        if count < 2:
            raise ParameterRangeError("sampling needs at least two points")
        if math.isinf(self.interval[0]) or math.isinf(self.interval[1]):
            raise UnboundedIntervalError("cannot sample an unbounded interval uniformly")
        return [self._evaluate_at(float(t)) for t in self._sample_grid(count)]


def _zip_pad(a, b):
    length = max(len(a), len(b))
    pad = lambda p: list(p) + [Fraction(0)] * (length - len(p))
    return zip(pad(a), pad(b))


def _poly_eval(poly, t: Fraction) -> Fraction:
    value = Fraction(0)
    for coeff in reversed(poly):
        value = value * t + coeff
    return value


def parametric_motion_new(
    framework, expressions, interval, t0, validation_samples: int = DEFAULT_VALIDATION_SAMPLES
) -> ParametricMotion:
    return ParametricMotion(framework, expressions, interval, t0, validation_samples)


# -- numerically tracked motions ------------------------------------------------


class ApproximateMotion:
    """An ordered list of tracked realizations of one framework."""

    def __init__(self, framework: Framework, samples, step_size, tolerance, fixed_pair, chosen_flex):
        self.framework = framework
        self.samples = samples
        self.step_size = step_size
        self.tolerance = tolerance
        self.fixed_pair = fixed_pair
        self.chosen_flex = chosen_flex

    @property
    def steps(self) -> int:
        return len(self.samples) - 1


def _pin(coords: np.ndarray, d: int, a_index: int, b_index: int) -> np.ndarray:
    """Isometry sending vertex a to the origin and b onto the positive first axis."""
    n = coords.shape[0] // d
    pts = coords.reshape(n, d) - coords.reshape(n, d)[a_index]
    v = pts[b_index].copy()
    norm = float(np.linalg.norm(v))
    if norm > 0:
        if d == 1:
            if v[0] < 0:
                pts = -pts
        elif d == 2:
            c, s = v[0] / norm, v[1] / norm
            rot = np.array([[c, s], [-s, c]])
            pts = pts @ rot.T
        else:
            w = v - norm * np.eye(d)[0]
            wn = float(np.linalg.norm(w))
            if wn > 1e-15:
                h = np.eye(d) - 2.0 * np.outer(w, w) / (wn * wn)
                pts = pts @ h.T
    return pts.reshape(-1)


def _edge_rows(x: np.ndarray, d: int, edge_indices) -> np.ndarray:
    n = x.size // d
    pts = x.reshape(n, d)
    rows = np.zeros((len(edge_indices), x.size))
    for r, (i, j) in enumerate(edge_indices):
        diff = pts[i] - pts[j]
        rows[r, i * d : (i + 1) * d] = diff
        rows[r, j * d : (j + 1) * d] = -diff
    return rows


def _constraint_kernel(x, d, edge_indices, pin_rows) -> np.ndarray:
    matrix = _edge_rows(x, d, edge_indices)
    if pin_rows is not None:
        matrix = np.vstack([matrix, pin_rows])
    _, sigma, vh = np.linalg.svd(matrix, full_matrices=True)
    top = sigma[0] if sigma.size else 0.0
    rank = int(np.sum(sigma > DEFAULT_TOL * top)) if top > 0 else 0
    return vh[rank:]


def approximate_motion(
    framework: Framework,
    steps: int,
    chosen_flex: int = 0,
    step_size: float = 0.1,
    fixed_pair: tuple[int, int] | None = None,
    tolerance: float = 1e-8,
) -> ApproximateMotion:
    """Track a motion by predictor-corrector steps along a chosen flex.

    When ``fixed_pair`` is given, the flexes are taken from the kernel of the
    rigidity matrix augmented with pinning constraints (vertex a fixed, vertex
    b constrained to the first axis), and every sample is re-pinned by the
    corresponding isometry.
    """
    if steps < 0 or step_size <= 0:
        raise ParameterRangeError("steps must be >= 0 and step_size positive")
    base = framework.to_float()
    d = base.dim
    vertices = base.graph.vertices
    index = {v: i for i, v in enumerate(vertices)}
    edge_indices = [(index[u], index[v]) for u, v in base.graph.sorted_edges]
    lengths = np.array(
        [float(l) for _, l in sorted(squared_edge_lengths(base).items())]
    )
    x = np.array([c for v in vertices for c in base.point(v)], dtype=float)

    pin_rows = None
    pin_pair = None
    if fixed_pair is not None:
        a, b = fixed_pair
        if a not in index or b not in index or a == b:
            raise UnknownVertexError(f"fixed pair {fixed_pair} must be two distinct vertices")
        pin_pair = (index[a], index[b])
        rows = []
        for i in range(d):
            row = np.zeros(x.size)
            row[pin_pair[0] * d + i] = 1.0
            rows.append(row)
        for i in range(1, d):
            row = np.zeros(x.size)
            row[pin_pair[1] * d + i] = 1.0
            rows.append(row)
        pin_rows = np.array(rows)
        x = _pin(x, d, *pin_pair)

    if pin_rows is not None:
        basis = _constraint_kernel(x, d, edge_indices, pin_rows)
        flex_count = basis.shape[0]
    else:
        flexes = inf_flexes(base, include_trivial=False)
        flex_count = len(flexes)
        basis = np.array(
            [[c for v in vertices for c in flex[v]] for flex in flexes]
        )
    if flex_count == 0:
        raise NotFlexibleError("framework has no nontrivial infinitesimal flex")
    if not 0 <= chosen_flex < flex_count:
        raise FlexIndexOutOfRangeError(
            f"chosen flex {chosen_flex} out of range (have {flex_count})"
        )
    direction = np.asarray(basis[chosen_flex], dtype=float)
    direction /= np.linalg.norm(direction)

    def constraint(y: np.ndarray) -> np.ndarray:
        pts = y.reshape(-1, d)
        return np.array(
            [np.sum((pts[i] - pts[j]) ** 2) for i, j in edge_indices]
        ) - lengths

    samples = [x.copy()]
    for step in range(steps):
        worklimit.check()
        y = samples[-1] + step_size * direction
        residual = math.inf
        for _ in range(MAX_CORRECTOR_ITERATIONS):
            f = constraint(y)
            residual = float(np.max(np.abs(f))) if f.size else 0.0
            if residual <= tolerance:
                break
            jacobian = 2.0 * _edge_rows(y, d, edge_indices)
            delta, *_ = np.linalg.lstsq(jacobian, f, rcond=None)
            y = y - delta
            if not np.isfinite(y).all():
                raise CorrectorDivergedError(step, float("inf"))
        if residual > tolerance:
            raise CorrectorDivergedError(step, residual)
        if pin_pair is not None:
            y = _pin(y, d, *pin_pair)
        samples.append(y)
        kernel_rows = _constraint_kernel(y, d, edge_indices, pin_rows)
        if kernel_rows.shape[0]:
            projected = kernel_rows.T @ (kernel_rows @ direction)
            norm = float(np.linalg.norm(projected))
            if norm > 1e-12:
                direction = projected / norm

    def to_realization(flat: np.ndarray):
        pts = flat.reshape(-1, d)
        return {v: tuple(float(c) for c in pts[i]) for v, i in index.items()}

    return ApproximateMotion(
        base,
        [to_realization(s) for s in samples],
        step_size,
        tolerance,
        fixed_pair,
        chosen_flex,
    )


def motion_samples(motion, count: int | None = None):
    """Realizations along the motion: a uniform parameter grid for parametric
    motions, the stored samples for approximate ones."""
    if isinstance(motion, ApproximateMotion):
        return list(motion.samples)
    if count is None:
        raise ParameterRangeError("parametric sampling needs a sample count")
    return motion.sample(count)


# -- SVG animation ---------------------------------------------------------------


@dataclass(frozen=True)
class SvgStyle:
    duration_s: float = 8.0
    width: int = 600
    height: int = 600
    show_vertex_labels: bool = False
    samples: int = 60  # used when sampling a parametric motion


def _fmt(x: float) -> str:
    return f"{x:.4f}".rstrip("0").rstrip(".")


def _layout(sample_list, dim):
    points = []
    for sample in sample_list:
        for coords in sample.values():
            x = float(coords[0])
            y = float(coords[1]) if dim == 2 else 0.0
            points.append((x, y))
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    lo_x, hi_x = min(xs), max(xs)
    lo_y, hi_y = min(ys), max(ys)
    pad_x = 0.05 * (hi_x - lo_x) or 1.0
    pad_y = 0.05 * (hi_y - lo_y) or 1.0
    return lo_x - pad_x, hi_x + pad_x, lo_y - pad_y, hi_y + pad_y


def _animate(attr: str, values: list[float], duration: float) -> str:
    series = ";".join(_fmt(v) for v in values)
    return (
        f'<animate attributeName="{attr}" values="{series}" '
        f'dur="{duration}s" repeatCount="indefinite"/>'
    )


def animate_svg(motion, style: SvgStyle | None = None) -> str:
    """Standalone SVG 1.1 document animating the motion (dimensions 1 and 2)."""
    style = style or SvgStyle()
    framework = motion.framework
    if framework.dim > 2:
        raise UnsupportedDimensionError("SVG animation supports dimensions 1 and 2 only")
    if isinstance(motion, ApproximateMotion):
        sample_list = motion.samples
    else:
        sample_list = motion.sample(style.samples)
    dim = framework.dim
    lo_x, hi_x, lo_y, hi_y = _layout(sample_list, dim)

    def place(coords):
        x = float(coords[0])
        y = float(coords[1]) if dim == 2 else 0.0
        return x, lo_y + hi_y - y  # flip so the vertical axis points up

    tracks: dict[int, list[tuple[float, float]]] = {
        v: [place(sample[v]) for sample in sample_list] for v in framework.graph.vertices
    }
    size = max(hi_x - lo_x, hi_y - lo_y)
    radius = 0.015 * size
    animated = len(sample_list) > 1
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{style.width}" height="{style.height}" '
        f'viewBox="{_fmt(lo_x)} {_fmt(lo_y)} {_fmt(hi_x - lo_x)} {_fmt(hi_y - lo_y)}">',
    ]
    for u, v in framework.graph.sorted_edges:
        (x1, y1), (x2, y2) = tracks[u][0], tracks[v][0]
        parts.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="#555555" stroke-width="{_fmt(0.25 * radius)}">'
        )
        if animated:
            parts.append(_animate("x1", [p[0] for p in tracks[u]], style.duration_s))
            parts.append(_animate("y1", [p[1] for p in tracks[u]], style.duration_s))
            parts.append(_animate("x2", [p[0] for p in tracks[v]], style.duration_s))
            parts.append(_animate("y2", [p[1] for p in tracks[v]], style.duration_s))
        parts.append("</line>")
    for v in framework.graph.vertices:
        x, y = tracks[v][0]
        parts.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(radius)}" fill="#1f4e8c">'
        )
        if animated:
            parts.append(_animate("cx", [p[0] for p in tracks[v]], style.duration_s))
            parts.append(_animate("cy", [p[1] for p in tracks[v]], style.duration_s))
        parts.append("</circle>")
        if style.show_vertex_labels:
            parts.append(
                f'<text x="{_fmt(x + 1.2 * radius)}" y="{_fmt(y - 1.2 * radius)}" '
                f'font-size="{_fmt(2.5 * radius)}">{v}'
            )
            if animated:
                parts.append(
                    _animate("x", [p[0] + 1.2 * radius for p in tracks[v]], style.duration_s)
                )
                parts.append(
                    _animate("y", [p[1] - 1.2 * radius for p in tracks[v]], style.duration_s)
                )
            parts.append("</text>")
    parts.append("</svg>")
    return "\n".join(parts)
