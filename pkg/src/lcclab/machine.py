"""Per-player state machines compiled into engine transition functions.

Protocol builders describe each player as a set of named states.  A state
waits for a fixed number of bits, then fires a handler which may send,
output, set local flags and name the next state.  Every shipped protocol
is a single global causal thread (token passing), so each player's receive
slots arrive in a wiring-determined order and the machines never need to
guess what a bit means.
"""

from __future__ import annotations

from typing import Callable, Optional

from .engine import ProtocolSpec

IDLE = "idle"

Handler = Callable[["Ctx", str], Optional[str]]


def enc(value: int, width: int) -> str:
    """Big-endian fixed-width bit string."""
    if value < 0 or value >= (1 << width):
        raise ValueError(f"{value} does not fit in {width} bits")
    return format(value, f"0{width}b")


def dec(bits: str) -> int:
    return int(bits, 2) if bits else 0


class Ctx:
    """Handler-facing view of one player during one atomic step."""

    __slots__ = ("pid", "input", "mem", "_sends", "_output")

    def __init__(self, pid: int, input_bit: int, mem: dict):
        self.pid = pid
        self.input = input_bit
        self.mem = mem
        self._sends: list[tuple[int, str]] = []
        self._output: Optional[str] = None

    def send(self, dst: int, payload: str) -> None:
        self._sends.append((dst, payload))

    def out(self, bits: str) -> None:
        self._output = bits

    def action(self):
        if not self._sends and self._output is None:
            return None
        return (tuple(self._sends), self._output)


class ProgramTable:
    """Accumulates per-player state machines, then compiles a ProtocolSpec.

    Players left untouched get an empty program (idle forever).  `slot`
    appends to a player's linear chain: slots fire in the order added and
    automatically advance, unless a handler names an explicit next state.
    Branch targets are added with `add_state` and reached by name.
    """

    def __init__(self, n: int):
        self.n = n
        self._states: list[dict[str, tuple[int, Handler]]] = [dict() for _ in range(n)]
        self._chain_tail: list[Optional[str]] = [None] * n  # last auto-chained slot
        self._start: list[Optional[str]] = [None] * n
        self._init: list[Optional[Callable[[Ctx], Optional[str]]]] = [None] * n
        self._auto = 0

    def _fresh(self, label: str) -> str:
        self._auto += 1
        return f"{label}#{self._auto}"

    def add_state(self, pid: int, name: str, width: int, fn: Handler) -> str:
        if name in self._states[pid]:
            raise ValueError(f"duplicate state {name!r} for player {pid}")
        if width <= 0:
            raise ValueError("state width must be >= 1")
        self._states[pid][name] = (width, fn)
        return name

    def slot(self, pid: int, width: int, fn: Handler, label: str = "s") -> str:
        """Append a slot to pid's linear chain; returns the state name."""
        name = self._fresh(label)
        self.add_state(pid, name, width, fn)
        tail = self._chain_tail[pid]
        if tail is None:
            if self._start[pid] is None:
                self._start[pid] = name
        else:
            w, f = self._states[pid][tail]

            def chained(ctx, bits, _f=f, _next=name):
                res = _f(ctx, bits)
                return _next if res is None else res

            self._states[pid][tail] = (w, chained)
        self._chain_tail[pid] = name
        return name

    def on_init(self, pid: int, fn: Callable[[Ctx], Optional[str]]) -> None:
        if self._init[pid] is not None:
            prev = self._init[pid]

            def both(ctx, _prev=prev, _fn=fn):
                prev_next = _prev(ctx)
                fn_next = _fn(ctx)
                return fn_next if fn_next is not None else prev_next

            self._init[pid] = both
        else:
            self._init[pid] = fn

    def set_start(self, pid: int, name: str) -> None:
        self._start[pid] = name

    def build(self, wiring: object = None) -> ProtocolSpec:
        states = self._states
        starts = self._start
        inits = self._init

        def init_fn(pid: int, input_bit: int, _wiring):
            mem = {"_st": starts[pid] or IDLE, "_buf": [], "_in": input_bit}
            fn = inits[pid]
            if fn is None:
                return mem, None
            ctx = Ctx(pid, input_bit, mem)
            nxt = fn(ctx)
            if nxt is not None:
                mem["_st"] = nxt
            return mem, ctx.action()

        def recv_fn(pid: int, mem: dict, bit: int):
            st = mem["_st"]
            if st == IDLE:
                raise AssertionError(
                    f"player {pid + 1} received a bit while idle (protocol bug)")
            width, fn = states[pid][st]
            buf = mem["_buf"]
            buf.append("1" if bit else "0")
            if len(buf) < width:
                return mem, None
            bits = "".join(buf)
            buf.clear()
            ctx = Ctx(pid, mem["_in"], mem)
            nxt = fn(ctx, bits)
            mem["_st"] = nxt if nxt is not None else IDLE
            return mem, ctx.action()

        return ProtocolSpec(n=self.n, init_fn=init_fn, recv_fn=recv_fn, wiring=wiring)
