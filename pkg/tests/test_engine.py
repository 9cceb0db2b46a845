import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lcclab import engine
from lcclab.engine import (
    Fifo,
    ProtocolSpec,
    RoundRobin,
    SeededRandom,
    lcc,
    next_event,
    run,
    verify_solves,
)
from lcclab.errors import (
    EmptyPayload,
    EmptyPending,
    NotQuiescent,
    SelfSend,
    StepCapExceeded,
)
from lcclab.machine import ProgramTable


def silent_protocol(n):
    """Player 1 outputs its own input at init; nobody communicates."""
    tbl = ProgramTable(n)
    tbl.on_init(0, lambda ctx: ctx.out(str(ctx.input)))
    return tbl.build()


def relay_protocol():
    """Player 1 sends its bit to player 2, which outputs whatever arrives."""
    tbl = ProgramTable(2)
    tbl.on_init(0, lambda ctx: ctx.send(1, str(ctx.input)))
    tbl.slot(1, 1, lambda ctx, bits: ctx.out(bits))
    return tbl.build()


def test_silent_protocol():
    res = run(silent_protocol(3), [1, 0, 0])
    assert res.outputs == [(0, "1")]
    assert lcc(res) == 0
    assert res.quiescent


def test_relay_protocol():
    res = run(relay_protocol(), [1, 0])
    assert res.outputs == [(1, "1")]
    assert res.metrics.sent == [1, 0]
    assert res.metrics.received == [0, 1]
    assert lcc(res) == 1


def test_lcc_zero_case():
    res = run(silent_protocol(2), [0, 1])
    assert lcc(res) == 0


def test_verify_solves():
    res = run(relay_protocol(), [1, 0])
    assert verify_solves(res, "1")
    assert not verify_solves(res, "0")


def test_verify_solves_no_output_is_false():
    tbl = ProgramTable(2)
    res = run(tbl.build(), [0, 0])
    assert not verify_solves(res, "0")


def test_verify_solves_conflict_is_false():
    tbl = ProgramTable(2)
    tbl.on_init(0, lambda ctx: ctx.out("101"))
    tbl.on_init(1, lambda ctx: ctx.out("100"))
    res = run(tbl.build(), [0, 0])
    assert not verify_solves(res, "101")


def test_verify_solves_duplicate_same_value_ok():
    tbl = ProgramTable(2)
    tbl.on_init(0, lambda ctx: ctx.out("11"))
    tbl.on_init(1, lambda ctx: ctx.out("11"))
    res = run(tbl.build(), [0, 0])
    assert verify_solves(res, "11")


def test_verify_requires_quiescence():
    res = run(silent_protocol(2), [0, 0])
    res.quiescent = False
    with pytest.raises(NotQuiescent):
        verify_solves(res, "0")


def test_self_send_rejected():
    tbl = ProgramTable(2)
    tbl.on_init(0, lambda ctx: ctx.send(0, "1"))
    with pytest.raises(SelfSend):
        run(tbl.build(), [0, 0])


def test_empty_payload_rejected():
    tbl = ProgramTable(2)
    tbl.on_init(0, lambda ctx: ctx.send(1, ""))
    with pytest.raises(EmptyPayload):
        run(tbl.build(), [0, 0])


def test_step_cap():
    # Two players bounce a bit forever.
    tbl = ProgramTable(2)
    tbl.on_init(0, lambda ctx: ctx.send(1, "1"))

    def bounce_to(other):
        def fn(ctx, bits):
            ctx.send(other, bits)
            return "loop"
        return fn

    for pid, other in ((0, 1), (1, 0)):
        tbl.add_state(pid, "loop", 1, bounce_to(other))
        tbl.set_start(pid, "loop")
    with pytest.raises(StepCapExceeded):
        run(tbl.build(), [0, 0], step_cap=100)


def test_bit_conservation():
    res = run(relay_protocol(), [1, 1])
    assert sum(res.metrics.sent) == sum(res.metrics.received)


# --- scheduler policies -----------------------------------------------------

def test_next_event_round_robin_cyclic():
    policy = RoundRobin()
    policy.cursor = 3
    assert next_event(policy, {2, 5}) == 5
    assert policy.cursor == 6
    assert next_event(policy, {2, 5}) == 2


def test_next_event_fifo_oldest_first():
    ages = {7: 4, 2: 9}
    assert next_event(Fifo(), {7, 2}, head_seq=lambda p: ages[p]) == 7


def test_next_event_seeded_random_deterministic():
    a = next_event(SeededRandom(9), {1, 4, 6})
    b = next_event(SeededRandom(9), {1, 4, 6})
    assert a == b


def test_next_event_empty_pending():
    with pytest.raises(EmptyPending):
        next_event(RoundRobin(), set())


def fan_in_protocol(n):
    """Players 2..n each send one bit to player 1, which counts arrivals."""
    tbl = ProgramTable(n)
    for pid in range(1, n):
        tbl.on_init(pid, lambda ctx: ctx.send(0, str(ctx.input)))

    def collect(ctx, bits):
        ctx.mem["got"] = ctx.mem.get("got", 0) + 1
        if ctx.mem["got"] == n - 1:
            return None
        return "more"

    tbl.add_state(0, "more", 1, collect)
    tbl.set_start(0, "more")
    return tbl.build()


@pytest.mark.parametrize("sched", ["rr", "fifo", "rand:1", "rand:7"])
def test_metrics_equal_across_schedulers(sched):
    res = run(fan_in_protocol(5), [0, 1, 0, 1, 1], scheduler=sched)
    assert res.metrics.sent == [0, 1, 1, 1, 1]
    assert res.metrics.received == [4, 0, 0, 0, 0]


def test_deterministic_replay_trace_identical():
    spec = fan_in_protocol(4)
    a = run(spec, [1, 0, 1, 1], scheduler="rand:42", trace=True)
    b = run(spec, [1, 0, 1, 1], scheduler="rand:42", trace=True)
    assert engine.trace_lines(a) == engine.trace_lines(b)


def test_trace_format_fields():
    res = run(relay_protocol(), [1, 0], trace=True)
    lines = engine.trace_lines(res)
    first = json.loads(lines[0])
    assert list(first.keys()) == ["seq", "kind", "player", "bit", "sends", "output"]
    assert first["kind"] == "init"
    assert first["player"] == 1
    assert first["bit"] is None
    assert first["sends"] == [{"dst": 2, "bits": "1"}]
    last = json.loads(lines[-1])
    assert last["kind"] == "recv"
    assert last["bit"] == 1
    assert last["output"] == "1"


def test_atomic_append_no_interleaving():
    """Two 3-bit payloads sent to one receiver stay contiguous."""
    tbl = ProgramTable(3)
    tbl.on_init(0, lambda ctx: ctx.send(2, "101"))
    tbl.on_init(1, lambda ctx: ctx.send(2, "010"))
    tbl.slot(2, 6, lambda ctx, bits: ctx.out(bits))
    res = run(tbl.build(), [0, 0, 0])
    assert res.outputs[0][1] in ("101010", "010101")


@settings(max_examples=30, deadline=None)
@given(bits=st.lists(st.integers(0, 1), min_size=2, max_size=8),
       seed=st.integers(0, 1000))
def test_relay_chain_delivers_all_bits(bits, seed):
    """A chain forwarding protocol delivers every bit under any seed."""
    n = len(bits)
    tbl = ProgramTable(n)
    tbl.on_init(0, lambda ctx: ctx.send(1, str(ctx.input)))
    for pid in range(1, n):
        def fwd(ctx, got, _pid=pid):
            if _pid < n - 1:
                ctx.send(_pid + 1, got + str(ctx.input))
            else:
                ctx.out(got + str(ctx.input))
            return None
        tbl.slot(pid, pid, fwd)
    res = run(tbl.build(), bits, scheduler=SeededRandom(seed))
    assert res.outputs == [(n - 1, "".join(str(b) for b in bits))]
    assert sum(res.metrics.sent) == sum(res.metrics.received)
