"""Single-threaded execution model with exact per-player bit accounting.

Players exchange bit strings through per-player FIFO receive strings.  A
send appends the whole payload atomically; the receiver consumes one bit
per event.  Receivers never learn the sender of a bit.  The engine fires
every player's init event first (in player order), then repeatedly picks a
player with a non-empty receive string according to the scheduler policy
until quiescence.

Player indices are 0-based internally; reports and traces render them
1-based.
"""

from __future__ import annotations

import random
from bisect import bisect_left, insort
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import EmptyPayload, EmptyPending, NotQuiescent, SelfSend, StepCapExceeded

DEFAULT_STEP_CAP = 10_000_000

# An action is (sends, output): sends is a sequence of (dest, payload)
# pairs, payload a non-empty string over "01"; output is an optional bit
# string the player declares.  Transitions may return None for "no action".
Action = tuple[tuple[tuple[int, str], ...], Optional[str]]

InitFn = Callable[[int, int, object], tuple[object, Optional[Action]]]
RecvFn = Callable[[int, object, int], tuple[object, Optional[Action]]]


@dataclass(frozen=True)
class ProtocolSpec:
    """A deterministic protocol: player count, transition functions, wiring.

    init_fn(player, input_bit, wiring) -> (state, action or None)
    recv_fn(player, state, bit) -> (state, action or None)

    Transitions may observe only their own player id, input bit, local
    state and the received bit (plus the immutable wiring); the engine
    never exposes another player's state or the schedule.
    """

    n: int
    init_fn: InitFn
    recv_fn: RecvFn
    wiring: object = None


@dataclass
class Metrics:
    sent: list[int]
    received: list[int]

    def lcc(self) -> int:
        return max(
            max(self.sent, default=0),
            max(self.received, default=0),
        )

    def per_player(self) -> list[int]:
        return [max(s, r) for s, r in zip(self.sent, self.received)]


@dataclass
class ExecutionResult:
    outputs: list[tuple[int, str]]  # (player 0-based, bit string), in event order
    metrics: Metrics
    quiescent: bool
    steps: int
    trace: Optional[list[dict]] = None


class SchedulerPolicy:
    """Fair rule choosing which pending player fires next."""

    name = "base"

    def begin(self, n: int) -> None:  # pragma: no cover - trivial
        pass

    def pick(self, pending: list[int], head_seq: Callable[[int], int]) -> int:
        raise NotImplementedError


class RoundRobin(SchedulerPolicy):
    """Cycle player indices in fixed order; resume after the last fired player."""

    name = "rr"

    def __init__(self):
        self.cursor = 0

    def begin(self, n: int) -> None:
        self.cursor = 0

    def pick(self, pending: list[int], head_seq) -> int:
        i = bisect_left(pending, self.cursor)
        player = pending[i] if i < len(pending) else pending[0]
        self.cursor = player + 1
        return player


class Fifo(SchedulerPolicy):
    """Fire the player whose head bit was appended earliest."""

    name = "fifo"

    def pick(self, pending: list[int], head_seq) -> int:
        return min(pending, key=head_seq)


class SeededRandom(SchedulerPolicy):
    """Uniform choice among pending players from a deterministic PRNG.

    Uses random.Random (MT19937), which is stable across platforms and
    Python versions for randrange.
    """

    name = "rand"

    def __init__(self, seed: int):
        self.seed = seed
        self._rng = random.Random(seed)

    def begin(self, n: int) -> None:
        self._rng = random.Random(self.seed)

    def pick(self, pending: list[int], head_seq) -> int:
        return pending[self._rng.randrange(len(pending))]


def make_scheduler(spec: "str | SchedulerPolicy") -> SchedulerPolicy:
    """Accept 'rr', 'fifo', 'rand:SEED' or a policy instance."""
    if isinstance(spec, SchedulerPolicy):
        return spec
    if spec == "rr":
        return RoundRobin()
    if spec == "fifo":
        return Fifo()
    if spec.startswith("rand:"):
        return SeededRandom(int(spec.split(":", 1)[1]))
    raise ValueError(f"unknown scheduler spec {spec!r}")


def next_event(policy: SchedulerPolicy, pending: "set[int] | list[int]",
               head_seq: Callable[[int], int] = None) -> int:
    """Pick the next player to fire from a non-empty pending set."""
    if not pending:
        raise EmptyPending("no pending players")
    ordered = sorted(pending)
    return policy.pick(ordered, head_seq or (lambda p: p))


def run(spec: ProtocolSpec,
        inputs: "list[int] | str",
        scheduler: "str | SchedulerPolicy" = "rr",
        step_cap: int = DEFAULT_STEP_CAP,
        trace: bool = False) -> ExecutionResult:
    """Execute a protocol to quiescence and return outputs plus metrics.

    inputs: one bit per player, leftmost entry = player 1.
    Raises StepCapExceeded if the event count passes step_cap.
    """
    n = spec.n
    if isinstance(inputs, str):
        inputs = [int(c) for c in inputs]
    if len(inputs) != n:
        raise ValueError(f"expected {n} input bits, got {len(inputs)}")
    if step_cap <= 0:
        raise ValueError("step_cap must be positive")

    policy = make_scheduler(scheduler)
    policy.begin(n)

    queues: list[deque] = [deque() for _ in range(n)]
    states: list[object] = [None] * n
    sent = [0] * n
    received = [0] * n
    outputs: list[tuple[int, str]] = []
    pending: list[int] = []  # sorted player indices with non-empty queues
    trace_log: Optional[list[dict]] = [] if trace else None
    seq_counter = 0  # global append order, drives the FIFO policy
    steps = 0

    init_fn, recv_fn, wiring = spec.init_fn, spec.recv_fn, spec.wiring

    def apply_action(player: int, action: Optional[Action], kind: str, bit):
        nonlocal seq_counter, steps
        steps += 1
        if steps > step_cap:
            raise StepCapExceeded(steps)
        rec_sends = [] if trace_log is not None else None
        output = None
        if action is not None:
            sends, output = action
            for dst, payload in sends:
                if dst == player:
                    raise SelfSend(f"player {player + 1} sent to itself")
                if not payload:
                    raise EmptyPayload(f"player {player + 1} sent an empty payload")
                q = queues[dst]
                if not q:
                    insort(pending, dst)
                for ch in payload:
                    q.append((seq_counter, ch == "1"))
                    seq_counter += 1
                sent[player] += len(payload)
                if rec_sends is not None:
                    rec_sends.append({"dst": dst + 1, "bits": payload})
            if output is not None:
                outputs.append((player, output))
        if trace_log is not None:
            trace_log.append({
                "seq": steps,
                "kind": kind,
                "player": player + 1,
                "bit": bit,
                "sends": rec_sends,
                "output": output,
            })

    for u in range(n):
        states[u], action = init_fn(u, inputs[u], wiring)
        apply_action(u, action, "init", None)

    def head_seq(p: int) -> int:
        return queues[p][0][0]

    while pending:
        u = policy.pick(pending, head_seq)
        q = queues[u]
        _, bit = q.popleft()
        if not q:
            pending.remove(u)
        received[u] += 1
        states[u], action = recv_fn(u, states[u], 1 if bit else 0)
        apply_action(u, action, "recv", 1 if bit else 0)

    return ExecutionResult(
        outputs=outputs,
        metrics=Metrics(sent=sent, received=received),
        quiescent=True,
        steps=steps,
        trace=trace_log,
    )


def lcc(result: ExecutionResult) -> int:
    """Max over players of max(bits sent, bits received)."""
    return result.metrics.lcc()


def verify_solves(result: ExecutionResult, expected: str) -> bool:
    """True iff at least one player output expected and none output otherwise."""
    if not result.quiescent:
        raise NotQuiescent("execution did not reach quiescence")
    got = [bits for _, bits in result.outputs]
    return bool(got) and all(bits == expected for bits in got)


def trace_lines(result: ExecutionResult) -> list[str]:
    """Render the event log as line-delimited JSON with the fixed field order."""
    import json

    if result.trace is None:
        raise ValueError("execution was run without tracing")
    return [json.dumps(rec, separators=(",", ":")) for rec in result.trace]
