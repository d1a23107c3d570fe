"""Stateless HTTP service exposing the analysis, motion and catalog APIs.

Every request carries a full graph or framework document, runs a pure
computation in a worker thread under a deadline, and returns a JSON body.
Errors use ``{"error": code, "message": ..., "detail": ...}`` with the
stable codes from :mod:`rigikit.errors`.
"""

from __future__ import annotations

import concurrent.futures
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import __version__, worklimit
from .errors import ComputationTimeout, RigiError, SchemaError
from .frameworks import (
    inf_flexes,
    is_inf_rigid,
    is_min_inf_rigid,
    is_prestress_stable,
    is_redundantly_inf_rigid,
    is_second_order_rigid,
    stresses,
    trivial_flex_basis,
)
from .generic import (
    DEFAULT_EPSILON,
    RigidityVerdict,
    is_globally_rigid,
    is_k_redundantly_rigid,
    is_min_rigid,
    is_rigid,
    rigid_components,
)
from .linalg import DEFAULT_TOL
from .motion import approximate_motion
from .nac import nac_colorings
from .constructions import named_framework, named_graph
from .serialize import (
    framework_from_document,
    framework_to_document,
    graph_from_document,
    graph_to_document,
    motion_to_document,
)

GRAPH_PROPERTIES = (
    "rigid",
    "min-rigid",
    "globally-rigid",
    "redundantly-rigid",
    "components",
    "nac",
)
FRAMEWORK_PROPERTIES = (
    "inf-rigid",
    "min-inf-rigid",
    "redundantly-inf-rigid",
    "prestress-stable",
    "second-order-rigid",
)


def verdict_to_document(verdict: RigidityVerdict) -> dict:
    return {
        "value": verdict.value,
        "method": verdict.method,
        "failure_probability_bound": verdict.failure_probability_bound,
        "seed": verdict.seed,
    }


def analyze_graph_property(graph, prop, dim, algorithm, epsilon, seed):
    if prop == "rigid":
        return verdict_to_document(is_rigid(graph, dim, algorithm, epsilon, seed))
    if prop == "min-rigid":
        return verdict_to_document(is_min_rigid(graph, dim, algorithm, epsilon, seed))
    if prop == "globally-rigid":
        algo = algorithm if algorithm != "sparsity" else "default"
        return verdict_to_document(is_globally_rigid(graph, dim, algo, epsilon, seed))
    if prop == "redundantly-rigid":
        return verdict_to_document(
            is_k_redundantly_rigid(graph, dim, 1, False, "default", epsilon, seed)
        )
    if prop == "components":
        return [sorted(c) for c in rigid_components(graph, dim, epsilon, seed)]
    if prop == "nac":
        return [
            {"red": sorted(map(list, c.red)), "blue": sorted(map(list, c.blue))}
            for c in nac_colorings(graph)
        ]
    raise SchemaError("properties", f"unknown graph property {prop!r}")


def analyze_framework_property(framework, prop, tol):
    checks = {
        "inf-rigid": is_inf_rigid,
        "min-inf-rigid": is_min_inf_rigid,
        "redundantly-inf-rigid": is_redundantly_inf_rigid,
        "prestress-stable": is_prestress_stable,
        "second-order-rigid": is_second_order_rigid,
    }
    if prop not in checks:
        raise SchemaError("properties", f"unknown framework property {prop!r}")
    return checks[prop](framework, tol)


def _flex_document(flex) -> dict:
    return {str(v): [float(c) for c in vec] for v, vec in flex.items()}


def _stress_document(stress) -> list:
    return [
        {"edge": [u, v], "weight": float(w)} for (u, v), w in sorted(stress.items())
    ]


def create_app(timeout_s: float = 30.0, static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="rigikit", version=__version__)
    executor = concurrent.futures.ThreadPoolExecutor(max_workers=4)

    def run(task):
        def wrapped():
            with worklimit.deadline(timeout_s):
                return task()

        future = executor.submit(wrapped)
        try:
            return JSONResponse(future.result(timeout=timeout_s * 1.1 + 0.5))
        except concurrent.futures.TimeoutError:
            return _error_response(ComputationTimeout("request exceeded the time budget"), 504)
        except ComputationTimeout as exc:
            return _error_response(exc, 504)
        except RigiError as exc:
            return _error_response(exc, 400)

    def _error_response(exc: RigiError, status: int):
        return JSONResponse(
            {"error": exc.code, "message": str(exc), "detail": type(exc).__name__},
            status_code=status,
        )

    async def _body(request: Request) -> dict:
        try:
            doc = await request.json()
        except Exception as exc:
            raise SchemaError("body", f"invalid JSON: {exc}") from exc
        if not isinstance(doc, dict):
            raise SchemaError("body", "expected a JSON object")
        return doc

    @app.exception_handler(RigiError)
    async def _rigi_error(request, exc: RigiError):  # pragma: no cover - glue
        return _error_response(exc, 400)

    @app.get("/api/health")
    async def health():
        return {"status": "ok", "version": __version__}

    @app.post("/api/graph/analyze")
    async def graph_analyze(request: Request):
        body = await _body(request)
        graph = graph_from_document(body.get("graph"), "graph")
        dim = body.get("dim", 2)
        if not isinstance(dim, int) or dim < 1:
            raise SchemaError("dim", "expected a positive integer")
        properties = body.get("properties", ["rigid"])
        if not isinstance(properties, list) or not properties:
            raise SchemaError("properties", "expected a nonempty list")
        algorithm = body.get("algorithm", "default")
        epsilon = float(body.get("epsilon", DEFAULT_EPSILON))
        seed = body.get("seed")

        def task():
            return {
                "results": {
                    prop: analyze_graph_property(graph, prop, dim, algorithm, epsilon, seed)
                    for prop in properties
                }
            }

        return run(task)

    @app.post("/api/framework/analyze")
    async def framework_analyze(request: Request):
        body = await _body(request)
        framework = framework_from_document(body.get("framework"), "framework")
        if body.get("numerical"):
            framework = framework.to_float()
        tol = float(body.get("tol", DEFAULT_TOL))
        properties = body.get("properties", ["inf-rigid"])
        if not isinstance(properties, list) or not properties:
            raise SchemaError("properties", "expected a nonempty list")

        def task():
            return {
                "results": {
                    prop: analyze_framework_property(framework, prop, tol)
                    for prop in properties
                }
            }

        return run(task)

    @app.post("/api/framework/flexes")
    async def framework_flexes(request: Request):
        body = await _body(request)
        framework = framework_from_document(body.get("framework"), "framework")
        if body.get("numerical"):
            framework = framework.to_float()
        tol = float(body.get("tol", DEFAULT_TOL))

        def task():
            return {
                "flexes": [
                    _flex_document(f) for f in inf_flexes(framework, False, tol)
                ],
                "stresses": [_stress_document(s) for s in stresses(framework, tol)],
                "trivial_dim": len(trivial_flex_basis(framework, tol)),
            }

        return run(task)

    @app.post("/api/motion/approximate")
    async def motion_approximate(request: Request):
        body = await _body(request)
        framework = framework_from_document(body.get("framework"), "framework")
        steps = body.get("steps", 100)
        if not isinstance(steps, int) or steps < 0:
            raise SchemaError("steps", "expected a nonnegative integer")
        step_size = float(body.get("step_size", 0.1))
        chosen_flex = int(body.get("chosen_flex", 0))
        pair = body.get("fixed_pair")
        fixed_pair = tuple(pair) if pair else None
        tolerance = float(body.get("tolerance", 1e-8))

        def task():
            motion = approximate_motion(
                framework, steps, chosen_flex, step_size, fixed_pair, tolerance
            )
            doc = motion_to_document(motion)
            return {"samples": doc["samples"], "motion": doc}

        return run(task)

    @app.get("/api/db")
    async def db(name: str, params: str = "", kind: str = "graph"):
        arguments = [p for p in params.split(",") if p != ""]
        parsed = [int(p) if p.lstrip("-").isdigit() else p for p in arguments]
        if kind == "framework":
            return framework_to_document(named_framework(name, *parsed))
        if kind == "graph":
            return graph_to_document(named_graph(name, *parsed))
        raise SchemaError("kind", "expected 'graph' or 'framework'")

    if static_dir is None:
        bundled = Path(__file__).resolve().parent.parent.parent / "frontend" / "dist"
        static_dir = str(bundled) if bundled.is_dir() else None
    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    return app
