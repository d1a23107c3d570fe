"""Cooperative deadline checking for long-running analyses.

The HTTP service installs a deadline before dispatching work; the heavy
loops (pebble components, redundancy sweeps, enumeration, path tracking)
call :func:`check` periodically and abort with ``ComputationTimeout`` once
the deadline passes.  With no deadline installed the check is free.
"""

from __future__ import annotations

import contextlib
import contextvars
import time

from .errors import ComputationTimeout

_deadline: contextvars.ContextVar[float | None] = contextvars.ContextVar(
    "rigikit_deadline", default=None
)


def check() -> None:
    limit = _deadline.get()
    if limit is not None and time.monotonic() > limit:
        raise ComputationTimeout("computation exceeded its time budget")


@contextlib.contextmanager
def deadline(seconds: float | None):
    if seconds is None:
        yield
        return
    token = _deadline.set(time.monotonic() + seconds)
    try:
        yield
    finally:
        _deadline.reset(token)
