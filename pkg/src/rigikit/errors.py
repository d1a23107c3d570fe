"""Exception hierarchy shared across the package.

Every error carries a stable machine-readable ``code``; the CLI and the HTTP
service report failures using these codes verbatim.
"""

from __future__ import annotations


class RigiError(Exception):
    """Base class for all package errors."""

    code = "error"


class ExpressionSyntaxError(RigiError):
    code = "syntax-error"

    def __init__(self, message: str, position: int, expected: str | None = None):
        detail = f"{message} at position {position}"
        if expected is not None:
            detail += f" (expected {expected})"
        super().__init__(detail)
        self.position = position
        self.expected = expected


class UnknownSymbolError(RigiError):
    code = "unknown-symbol"

    def __init__(self, name: str, position: int | None = None):
        where = "" if position is None else f" at position {position}"
        super().__init__(f"unknown symbol {name!r}{where}")
        self.name = name
        self.position = position


class DivisionByZeroError(RigiError):
    code = "division-by-zero"


class ExactUnsupportedError(RigiError):
    code = "exact-unsupported"


class LoopEdgeError(RigiError):
    code = "loop-edge"


class UnknownVertexError(RigiError):
    code = "unknown-vertex"


class ParameterRangeError(RigiError):
    code = "parameter-range"


class DimensionMismatchError(RigiError):
    code = "dimension-mismatch"


class MissingVertexError(RigiError):
    code = "missing-vertex"


class ShapeMismatchError(RigiError):
    code = "shape-mismatch"


class GraphMismatchError(RigiError):
    code = "graph-mismatch"


class VertexExistsError(RigiError):
    code = "vertex-exists"


class BadBaseSetError(RigiError):
    code = "bad-base-set"


class BadRemovedSetError(RigiError):
    code = "bad-removed-set"


class UnknownNameError(RigiError):
    code = "unknown-name"


class BadParamsError(RigiError):
    code = "bad-params"


class NotAPartitionError(RigiError):
    code = "not-a-partition"


class NotAMotionError(RigiError):
    code = "not-a-motion"

    def __init__(self, t_witness, edge, deviation=None):
        msg = f"edge {edge} changes length at t={t_witness}"
        if deviation is not None:
            msg += f" (squared-length deviation {deviation})"
        super().__init__(msg)
        self.t_witness = t_witness
        self.edge = edge
        self.deviation = deviation


class BaseMismatchError(RigiError):
    code = "base-mismatch"


class NotFlexibleError(RigiError):
    code = "not-flexible"


class CorrectorDivergedError(RigiError):
    code = "corrector-diverged"

    def __init__(self, step: int, residual: float):
        super().__init__(f"corrector failed at step {step} (residual {residual:g})")
        self.step = step
        self.residual = residual


class FlexIndexOutOfRangeError(RigiError):
    code = "flex-index-out-of-range"


class UnboundedIntervalError(RigiError):
    code = "unbounded-interval"


class UnsupportedDimensionError(RigiError):
    code = "unsupported-dimension"


class UnsupportedCaseError(RigiError):
    code = "unsupported-case"

    def __init__(self, flex_dim: int, stress_dim: int):
        super().__init__(
            "stress-blocking test needs a one-dimensional flex or stress space, "
            f"got flex dim {flex_dim} and stress dim {stress_dim}"
        )
        self.flex_dim = flex_dim
        self.stress_dim = stress_dim


class AlgorithmDimMismatchError(RigiError):
    code = "algorithm-dim-mismatch"


class UnknownEdgeError(RigiError):
    code = "unknown-edge"


class SchemaError(RigiError):
    code = "schema-error"

    def __init__(self, path: str, reason: str):
        super().__init__(f"{path}: {reason}")
        self.path = path
        self.reason = reason


class ComputationTimeout(RigiError):
    code = "timeout"
