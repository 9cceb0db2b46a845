"""lcclab: deterministic async message-passing simulation with per-player bit accounting."""

from .engine import (
    DEFAULT_STEP_CAP,
    ExecutionResult,
    Fifo,
    Metrics,
    ProtocolSpec,
    RoundRobin,
    SeededRandom,
    lcc,
    next_event,
    run,
    verify_solves,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_STEP_CAP",
    "ExecutionResult",
    "Fifo",
    "Metrics",
    "ProtocolSpec",
    "RoundRobin",
    "SeededRandom",
    "lcc",
    "next_event",
    "run",
    "verify_solves",
    "__version__",
]
