"""JSON documents for graphs, frameworks and motions.

Documents round-trip losslessly: coordinates written from expression strings
("sqrt(2)", "3/4") come back verbatim, numeric coordinates use a canonical
rendering that parses to the same value.
"""

from __future__ import annotations

import json
import math

from .errors import RigiError, SchemaError
from .frameworks import Framework
from .graphs import Graph, from_vertices_and_edges
from .motion import ApproximateMotion, ParametricMotion
from .scalars import Mode, format_scalar


def _require(condition: bool, path: str, reason: str):
    if not condition:
        raise SchemaError(path, reason)


def _as_int_list(value, path) -> list[int]:
    _require(isinstance(value, list), path, "expected a list")
    for i, x in enumerate(value):
        _require(isinstance(x, int) and not isinstance(x, bool), f"{path}[{i}]", "expected an integer")
    return list(value)


# -- graphs ---------------------------------------------------------------------


def graph_to_document(graph: Graph) -> dict:
    return {
        "vertices": list(graph.vertices),
        "edges": [[u, v] for u, v in graph.sorted_edges],
    }


def graph_from_document(doc, path="graph") -> Graph:
    _require(isinstance(doc, dict), path, "expected an object")
    _require("vertices" in doc, f"{path}.vertices", "missing")
    _require("edges" in doc, f"{path}.edges", "missing")
    vertices = _as_int_list(doc["vertices"], f"{path}.vertices")
    _require(isinstance(doc["edges"], list), f"{path}.edges", "expected a list")
    edges = []
    for i, pair in enumerate(doc["edges"]):
        epath = f"{path}.edges[{i}]"
        _require(isinstance(pair, list) and len(pair) == 2, epath, "expected [u, v]")
        u, v = _as_int_list(pair, epath)
        _require(u != v, epath, "loop edge")
        edges.append((u, v))
    try:
        return from_vertices_and_edges(vertices, edges)
    except RigiError as exc:
        raise SchemaError(f"{path}.edges", str(exc)) from exc


# -- frameworks --------------------------------------------------------------------


def _coordinate_string(framework: Framework, v: int, i: int) -> str:
    source = framework.coordinate_source(v, i)
    if source is not None:
        return source
    return format_scalar(framework.point(v)[i])


def framework_to_document(framework: Framework) -> dict:
    for v in framework.graph.vertices:
        for x in framework.point(v):
            if isinstance(x, float) and not math.isfinite(x):
                raise SchemaError(f"realization.{v}", "non-finite coordinate")
    return {
        "graph": graph_to_document(framework.graph),
        "mode": framework.mode.value,
        "realization": {
            str(v): [
                _coordinate_string(framework, v, i) for i in range(framework.dim)
            ]
            for v in framework.graph.vertices
        },
    }


def framework_from_document(doc, path="framework") -> Framework:
    _require(isinstance(doc, dict), path, "expected an object")
    for key in ("graph", "mode", "realization"):
        _require(key in doc, f"{path}.{key}", "missing")
    graph = graph_from_document(doc["graph"], f"{path}.graph")
    mode_text = doc["mode"]
    _require(mode_text in ("exact", "approx"), f"{path}.mode", "expected 'exact' or 'approx'")
    realization_doc = doc["realization"]
    _require(isinstance(realization_doc, dict), f"{path}.realization", "expected an object")
    realization = {}
    for key, coords in realization_doc.items():
        vpath = f"{path}.realization.{key}"
        try:
            v = int(key)
        except ValueError:
            raise SchemaError(vpath, "vertex keys must be integers") from None
        _require(isinstance(coords, list) and coords, vpath, "expected a coordinate list")
        for x in coords:
            _require(isinstance(x, str), vpath, "coordinates must be expression strings")
        realization[v] = list(coords)
    try:
        return Framework(graph, realization, Mode(mode_text))
    except RigiError as exc:
        raise SchemaError(f"{path}.realization", str(exc)) from exc


# -- motions -------------------------------------------------------------------------


def _realization_to_document(sample) -> dict:
    return {str(v): [float(c) for c in coords] for v, coords in sample.items()}


def motion_to_document(motion) -> dict:
    if isinstance(motion, ApproximateMotion):
        return {
            "kind": "approximate",
            "framework": framework_to_document(motion.framework),
            "steps": motion.steps,
            "step_size": motion.step_size,
            "chosen_flex": motion.chosen_flex,
            "fixed_pair": list(motion.fixed_pair) if motion.fixed_pair else None,
            "tolerance": motion.tolerance,
            "samples": [_realization_to_document(s) for s in motion.samples],
        }
    if isinstance(motion, ParametricMotion):
        from .expressions import unparse

        def bound(x: float):
            if math.isinf(x):
                return "-inf" if x < 0 else "inf"
            return x

        return {
            "kind": "parametric",
            "framework": framework_to_document(motion.framework),
            "expressions": {
                str(v): [unparse(e) for e in exprs]
                for v, exprs in motion.expressions.items()
            },
            "interval": [bound(motion.interval[0]), bound(motion.interval[1])],
            "t0": float(motion.t0),
        }
    raise SchemaError("motion", f"cannot encode {type(motion).__name__}")


def motion_from_document(doc, path="motion"):
    _require(isinstance(doc, dict), path, "expected an object")
    kind = doc.get("kind")
    _require(kind in ("approximate", "parametric"), f"{path}.kind", "unknown motion kind")
    framework = framework_from_document(doc.get("framework"), f"{path}.framework")
    if kind == "approximate":
        samples_doc = doc.get("samples")
        _require(isinstance(samples_doc, list) and samples_doc, f"{path}.samples", "expected samples")
        samples = []
        for i, sample in enumerate(samples_doc):
            spath = f"{path}.samples[{i}]"
            _require(isinstance(sample, dict), spath, "expected an object")
            parsed = {}
            for key, coords in sample.items():
                try:
                    v = int(key)
                except ValueError:
                    raise SchemaError(spath, "vertex keys must be integers") from None
                parsed[v] = tuple(float(c) for c in coords)
            _require(set(parsed) == set(framework.graph.vertices), spath, "vertex mismatch")
            samples.append(parsed)
        pair = doc.get("fixed_pair")
        return ApproximateMotion(
            framework.to_float(),
            samples,
            float(doc.get("step_size", 0.1)),
            float(doc.get("tolerance", 1e-8)),
            tuple(pair) if pair else None,
            int(doc.get("chosen_flex", 0)),
        )
    expressions_doc = doc.get("expressions")
    _require(isinstance(expressions_doc, dict), f"{path}.expressions", "expected an object")
    expressions = {}
    for key, exprs in expressions_doc.items():
        try:
            v = int(key)
        except ValueError:
            raise SchemaError(f"{path}.expressions", "vertex keys must be integers") from None
        expressions[v] = [str(e) for e in exprs]
    interval_doc = doc.get("interval")
    _require(
        isinstance(interval_doc, list) and len(interval_doc) == 2,
        f"{path}.interval",
        "expected [a, b]",
    )

    def parse_bound(x):
        if x == "inf":
            return math.inf
        if x == "-inf":
            return -math.inf
        _require(isinstance(x, (int, float)), f"{path}.interval", "expected numbers or inf")
        return float(x)

    try:
        return ParametricMotion(
            framework,
            expressions,
            (parse_bound(interval_doc[0]), parse_bound(interval_doc[1])),
            doc.get("t0", 0),
        )
    except RigiError as exc:
        if isinstance(exc, SchemaError):
            raise
        raise SchemaError(path, str(exc)) from exc


# -- dispatching text encode/decode ---------------------------------------------------


def encode(obj) -> str:
    """Canonical JSON text for a graph, framework or motion."""
    if isinstance(obj, Graph):
        doc = graph_to_document(obj)
    elif isinstance(obj, Framework):
        doc = framework_to_document(obj)
    elif isinstance(obj, (ApproximateMotion, ParametricMotion)):
        doc = motion_to_document(obj)
    else:
        raise SchemaError("object", f"cannot encode {type(obj).__name__}")
    return json.dumps(doc, separators=(",", ":"))


def decode(text: str):
    """Inverse of :func:`encode`; the document shape selects the type."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("document", f"invalid JSON: {exc}") from exc
    return decode_document(doc)


def decode_document(doc):
    _require(isinstance(doc, dict), "document", "expected an object")
    if "kind" in doc:
        return motion_from_document(doc)
    if "realization" in doc:
        return framework_from_document(doc)
    return graph_from_document(doc)
