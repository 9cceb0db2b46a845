"""Distributed binary adder with helper players.

Two x-bit operands (LSB first) held by 2x players are summed into x+1
result players, using x "tentative" and x "carry" helper players, 5x+1
players total.  Operand players send one bit each and receive none; no
player sends or receives more than two bits.

Full-adder split per position i: t_i receives a_i and b_i and emits
s_i = a_i XOR b_i to r_i and k_i = a_i AND b_i to c_i.  r_i receives s_i
plus the incoming carry, keeps their XOR as the sum bit, and forwards
their AND to c_i.  c_i ORs its two bits into the carry for r_{i+1}.  All
per-player combining functions are symmetric, so arrival order never
matters.  Position 1 bootstraps: r_1 emits its zero carry contribution at
init instead of waiting for a carry that never comes.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import WiringOverlap
from ..machine import ProgramTable


@dataclass(frozen=True)
class AdderWiring:
    """Role assignment for one adder instance (player ids 0-based)."""

    x: int
    a_players: tuple[int, ...]
    b_players: tuple[int, ...]
    r_players: tuple[int, ...]
    t_players: tuple[int, ...]
    c_players: tuple[int, ...]

    def validate(self) -> None:
        if self.x < 3:
            raise ValueError("operand width must be >= 3")
        groups = (self.a_players, self.b_players, self.r_players,
                  self.t_players, self.c_players)
        sizes = (self.x, self.x, self.x + 1, self.x, self.x)
        for grp, size in zip(groups, sizes):
            if len(grp) != size:
                raise WiringOverlap("role group has the wrong size")
        everyone = [p for grp in groups for p in grp]
        if len(set(everyone)) != 5 * self.x + 1:
            raise WiringOverlap("adder roles must use 5x+1 distinct players")

    @property
    def n(self) -> int:
        return 5 * self.x + 1


def default_adder_wiring(x: int) -> AdderWiring:
    """Canonical packed layout: a, b, r, t, c blocks in player order."""
    a = tuple(range(0, x))
    b = tuple(range(x, 2 * x))
    r = tuple(range(2 * x, 3 * x + 1))
    t = tuple(range(3 * x + 1, 4 * x + 1))
    c = tuple(range(4 * x + 1, 5 * x + 1))
    return AdderWiring(x=x, a_players=a, b_players=b, r_players=r,
                       t_players=t, c_players=c)


def emit_adder_core(tbl: ProgramTable, wiring: AdderWiring, r_sink,
                    bootstrap_at_init: bool = True) -> list[str]:
    """Install t/c/r machines; returns per-position t collect state names.

    Operand bits must be sent to t_players[i] by the caller (at init for
    the standalone protocol, or when an embedding protocol has them).
    r_sink(ctx, idx, bit) runs when result bit idx (0 = LSB) is final.
    """
    x = wiring.x
    r, t, c = wiring.r_players, wiring.t_players, wiring.c_players
    t_entries = []

    for i in range(x):
        def t_fire(ctx, bits, _i=i):
            a_bit, b_bit = int(bits[0]), int(bits[1])
            ctx.send(r[_i], str(a_bit ^ b_bit))
            ctx.send(c[_i], str(a_bit & b_bit))
        t_entries.append(tbl.slot(t[i], 2, t_fire, label=f"t{i}"))

    for i in range(x):
        def c_fire(ctx, bits, _i=i):
            ctx.send(r[_i + 1], str(int(bits[0]) | int(bits[1])))
        tbl.slot(c[i], 2, c_fire, label=f"c{i}")

    def r0_fire(ctx, bits):
        bit = int(bits)
        r_sink(ctx, 0, bit)

    if bootstrap_at_init:
        tbl.on_init(r[0], lambda ctx: ctx.send(c[0], "0"))
        tbl.slot(r[0], 1, r0_fire, label="r0")
    else:
        # carry contribution sent when the tentative-sum bit arrives
        def r0_late(ctx, bits):
            ctx.send(c[0], "0")
            r_sink(ctx, 0, int(bits))
        tbl.slot(r[0], 1, r0_late, label="r0")

    for i in range(1, x):
        def r_fire(ctx, bits, _i=i):
            u, v = int(bits[0]), int(bits[1])
            ctx.send(c[_i], str(u & v))
            r_sink(ctx, _i, u ^ v)
        tbl.slot(r[i], 2, r_fire, label=f"r{i}")

    def r_top(ctx, bits):
        r_sink(ctx, x, int(bits))
    tbl.slot(r[x], 1, r_top, label=f"r{x}")

    return t_entries


def build_adder(wiring: AdderWiring):
    """Standalone adder protocol: operand players read their engine input
    bits, result players output their sum bit once it is final."""
    wiring.validate()
    tbl = ProgramTable(wiring.n)
    t = wiring.t_players
    for i in range(wiring.x):
        for operand in (wiring.a_players[i], wiring.b_players[i]):
            tbl.on_init(operand, lambda ctx, _t=t[i]: ctx.send(_t, str(ctx.input)))

    emit_adder_core(tbl, wiring, lambda ctx, idx, bit: ctx.out(str(bit)))
    return tbl.build(wiring)


def adder_inputs(wiring: AdderWiring, a: int, b: int) -> list[int]:
    """Input vector placing operand values at the a/b players, LSB first."""
    bits = [0] * wiring.n
    for i in range(wiring.x):
        bits[wiring.a_players[i]] = (a >> i) & 1
        bits[wiring.b_players[i]] = (b >> i) & 1
    return bits


def adder_result(wiring: AdderWiring, outputs: list[tuple[int, str]]) -> int:
    """Reassemble the sum from per-result-player output bits."""
    by_player = dict(outputs)
    value = 0
    for i, p in enumerate(wiring.r_players):
        value |= int(by_player[p]) << i
    return value
