"""Command-line interface.

Subcommands: ``analyze`` (rigidity properties of a graph or framework
document), ``motion`` (numerical motion tracking, optional SVG animation),
``export`` (TikZ, SVG or a matplotlib-rendered figure), ``db`` (catalog
lookup) and ``serve`` (HTTP service).  Results print as JSON documents on
stdout; figures and animations go to files.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .errors import RigiError, SchemaError
from .export import framework_svg, to_tikz
from .frameworks import Framework, inf_flexes, stresses
from .generic import DEFAULT_EPSILON
from .graphs import Graph
from .linalg import DEFAULT_TOL
from .motion import SvgStyle, animate_svg, approximate_motion
from .serialize import (
    decode,
    framework_to_document,
    graph_to_document,
    motion_to_document,
)
from .service import (
    FRAMEWORK_PROPERTIES,
    GRAPH_PROPERTIES,
    analyze_framework_property,
    analyze_graph_property,
)


def _read_document(path: str):
    text = Path(path).read_text() if path != "-" else sys.stdin.read()
    return decode(text)


def _emit(document) -> None:
    print(json.dumps(document, separators=(",", ":")))


def _flexes_payload(framework, tol):
    return {
        "flexes": [
            {str(v): [float(c) for c in vec] for v, vec in f.items()}
            for f in inf_flexes(framework, False, tol)
        ],
        "stresses": [
            {f"{u},{v}": float(w) for (u, v), w in sorted(s.items())}
            for s in stresses(framework, tol)
        ],
    }


def _cmd_analyze(args) -> int:
    obj = _read_document(args.input)
    if args.framework and isinstance(obj, Graph):
        raise SchemaError("input", "document is a graph, not a framework")
    result: object
    if isinstance(obj, Framework):
        framework = obj.to_float() if args.numerical else obj
        prop = args.property or "inf-rigid"
        if prop == "flexes":
            result = _flexes_payload(framework, args.tol)["flexes"]
        elif prop == "stresses":
            result = _flexes_payload(framework, args.tol)["stresses"]
        elif prop in FRAMEWORK_PROPERTIES:
            result = analyze_framework_property(framework, prop, args.tol)
        else:
            raise SchemaError("property", f"{prop!r} is not a framework property")
        document = {
            "input": "framework",
            "dim": framework.dim,
            "property": prop,
            "result": result,
        }
        if args.figure:
            from .plotting import plot_framework, save_figure

            flex = inf_flexes(framework, False, args.tol)
            stress = stresses(framework, args.tol)
            fig = plot_framework(
                framework,
                flex[0] if flex else None,
                stress[0] if stress else None,
            )
            save_figure(fig, args.figure)
            document["figure"] = args.figure
    else:
        prop = args.property or "rigid"
        if prop not in GRAPH_PROPERTIES:
            raise SchemaError("property", f"{prop!r} is not a graph property")
        result = analyze_graph_property(
            obj, prop, args.dim, args.algorithm, args.epsilon, args.seed
        )
        document = {
            "input": "graph",
            "dim": args.dim,
            "property": prop,
            "result": result,
        }
        if args.figure:
            from .plotting import plot_graph, save_figure

            save_figure(plot_graph(obj), args.figure)
            document["figure"] = args.figure
    _emit(document)
    return 0


def _cmd_motion(args) -> int:
    obj = _read_document(args.input)
    if not isinstance(obj, Framework):
        raise SchemaError("input", "motion tracking needs a framework document")
    fixed_pair = None
    if args.fixed_pair:
        parts = args.fixed_pair.split(",")
        if len(parts) != 2:
            raise SchemaError("fixed-pair", "expected two comma-separated labels")
        fixed_pair = (int(parts[0]), int(parts[1]))
    motion = approximate_motion(
        obj, args.steps, args.flex, args.step_size, fixed_pair, args.tolerance
    )
    if args.svg:
        Path(args.svg).write_text(animate_svg(motion, SvgStyle(duration_s=args.duration)))
    _emit(motion_to_document(motion))
    return 0


def _cmd_export(args) -> int:
    obj = _read_document(args.input)
    if not isinstance(obj, Framework):
        raise SchemaError("input", "export needs a framework document")
    if args.format == "tikz":
        text = to_tikz(obj)
    elif args.format == "svg":
        text = framework_svg(obj)
    else:  # png via matplotlib
        if not args.output:
            raise SchemaError("output", "png export needs --output")
        from .plotting import plot_framework, save_figure

        save_figure(plot_framework(obj), args.output)
        return 0
    if args.output:
        Path(args.output).write_text(text)
    else:
        print(text)
    return 0


def _cmd_db(args) -> int:
    from .constructions import named_framework, named_graph

    params = []
    for p in args.params:
        params.append(int(p) if p.lstrip("-").isdigit() else p)
    if args.framework:
        _emit(framework_to_document(named_framework(args.name, *params)))
    else:
        _emit(graph_to_document(named_graph(args.name, *params)))
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(timeout_s=args.timeout, static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rigikit", description=__doc__)
    parser.add_argument("--version", action="version", version=f"rigikit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="rigidity properties of a document")
    analyze.add_argument("--input", required=True, help="document file, or - for stdin")
    analyze.add_argument("--framework", action="store_true", help="require a framework input")
    analyze.add_argument("--dim", type=int, default=2)
    analyze.add_argument("--property", default=None)
    analyze.add_argument("--algorithm", default="default")
    analyze.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
    analyze.add_argument("--seed", type=int, default=None)
    analyze.add_argument("--numerical", action="store_true")
    analyze.add_argument("--tol", type=float, default=DEFAULT_TOL)
    analyze.add_argument("--figure", default=None, help="write a rendered figure here")
    analyze.set_defaults(func=_cmd_analyze)

    motion = sub.add_parser("motion", help="track an approximate motion")
    motion.add_argument("--input", required=True)
    motion.add_argument("--steps", type=int, required=True)
    motion.add_argument("--step-size", type=float, required=True)
    motion.add_argument("--flex", type=int, default=0)
    motion.add_argument("--fixed-pair", default=None)
    motion.add_argument("--tolerance", type=float, default=1e-8)
    motion.add_argument("--svg", default=None, help="write an SVG animation here")
    motion.add_argument("--duration", type=float, default=8.0)
    motion.set_defaults(func=_cmd_motion)

    export = sub.add_parser("export", help="export a framework drawing")
    export.add_argument("--input", required=True)
    export.add_argument("--format", choices=("tikz", "svg", "png"), required=True)
    export.add_argument("--output", default=None)
    export.set_defaults(func=_cmd_export)

    db = sub.add_parser("db", help="fetch a catalog graph or framework")
    db.add_argument("--name", required=True)
    db.add_argument("--params", nargs="*", default=[])
    db.add_argument("--framework", action="store_true")
    db.set_defaults(func=_cmd_db)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--timeout", type=float, default=30.0)
    serve.add_argument("--static", default=None, help="directory of UI assets to serve")
    serve.set_defaults(func=_cmd_serve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RigiError as exc:
        json.dump(
            {"error": exc.code, "message": str(exc), "detail": type(exc).__name__},
            sys.stderr,
        )
        sys.stderr.write("\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
