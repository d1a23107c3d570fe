"""Matplotlib rendering of graphs and frameworks to figure files.

Frameworks draw at their real coordinates, optionally overlaying an
infinitesimal flex (arrows at the vertices) and an equilibrium stress
(labels on the edges).  Graphs without a realization use a circular layout.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .errors import UnsupportedDimensionError
from .frameworks import Flex, Framework, Stress
from .graphs import Graph


def _framework_points(framework: Framework) -> dict[int, tuple[float, float]]:
    if framework.dim != 2:
        raise UnsupportedDimensionError("plotting needs a 2-dimensional framework")
    return {
        v: (float(framework.point(v)[0]), float(framework.point(v)[1]))
        for v in framework.graph.vertices
    }


def _circular_points(graph: Graph) -> dict[int, tuple[float, float]]:
    n = max(graph.n, 1)
    return {
        v: (math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n))
        for i, v in enumerate(graph.vertices)
    }


def _draw(ax, graph: Graph, points, flex: Flex | None, stress: Stress | None):
    for u, v in graph.sorted_edges:
        (x1, y1), (x2, y2) = points[u], points[v]
        ax.plot([x1, x2], [y1, y2], color="0.45", linewidth=2, zorder=1)
        if stress is not None:
            key = (u, v) if (u, v) in stress else (v, u)
            ax.annotate(
                f"{float(stress[key]):.3g}",
                ((x1 + x2) / 2, (y1 + y2) / 2),
                color="#a03020",
                fontsize=8,
                ha="center",
                zorder=3,
            )
    xs = [p[0] for p in points.values()]
    ys = [p[1] for p in points.values()]
    ax.scatter(xs, ys, s=60, color="#1f4e8c", zorder=2)
    for v, (x, y) in points.items():
        ax.annotate(str(v), (x, y), textcoords="offset points", xytext=(6, 6), fontsize=9)
    if flex is not None:
        span = max(max(xs) - min(xs), max(ys) - min(ys), 1.0)
        scale = 0.15 * span / max(
            max(abs(float(c)) for c in vec) if vec else 1.0 for vec in flex.values()
        )
        for v, vec in flex.items():
            dx, dy = float(vec[0]) * scale, float(vec[1]) * scale
            if dx or dy:
                ax.annotate(
                    "",
                    xy=(points[v][0] + dx, points[v][1] + dy),
                    xytext=points[v],
                    arrowprops=dict(arrowstyle="->", color="#2e7d32", lw=1.8),
                    zorder=4,
                )
    ax.set_aspect("equal")
    ax.axis("off")


def plot_framework(
    framework: Framework,
    flex: Flex | None = None,
    stress: Stress | None = None,
    ax=None,
):
    """Figure showing the framework, optionally with a flex and a stress."""
    if ax is None:
        fig, ax = plt.subplots(figsize=(5, 5))
    else:
        fig = ax.figure
    _draw(ax, framework.graph, _framework_points(framework), flex, stress)
    return fig


def plot_graph(graph: Graph, ax=None):
    """Figure showing a bare graph on a circular layout."""
    if ax is None:
        fig, ax = plt.subplots(figsize=(5, 5))
    else:
        fig = ax.figure
    _draw(ax, graph, _circular_points(graph), None, None)
    return fig


def save_figure(fig, path: str) -> None:
    fig.savefig(path, bbox_inches="tight", dpi=150)
    plt.close(fig)
