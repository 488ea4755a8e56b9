import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from groverhash.circuit import (
    Alloc,
    Block,
    CircuitBuilder,
    EventLog,
    Gate,
    Marker,
    Register,
    Release,
    left_rotate_view,
)
from groverhash.exceptions import (
    DeadQubit,
    DoubleRelease,
    OverlappingOperands,
    RotationOutOfRange,
    UnbalancedAllocation,
)
from groverhash.sim.toffoli import ToffoliSimulator

from _helpers import rotl, run_on_registers


def test_allocate_grows_width_and_emits_alloc():
    log = EventLog()
    b = CircuitBuilder(log)
    r = b.allocate(320)
    assert r.width == 320 and b.width == 320
    assert log == [Alloc(0, 320)]


def test_allocate_single_and_fresh_ids():
    b = CircuitBuilder()
    one = b.allocate(1)
    assert len(one) == 1
    a, c = b.allocate(2), b.allocate(2)
    assert not set(a) & set(c)


def test_allocate_zero_rejected():
    with pytest.raises(ValueError):
        CircuitBuilder().allocate(0)


def test_release_must_be_lifo():
    b = CircuitBuilder()
    a = b.allocate(3)
    b.allocate(2)
    with pytest.raises(UnbalancedAllocation):
        b.release(a)


def test_double_release():
    b = CircuitBuilder()
    r = b.allocate(2)
    b.release(r)
    with pytest.raises(DoubleRelease):
        b.release(r)


def test_release_reuses_ids():
    log = EventLog()
    b = CircuitBuilder(log)
    r = b.allocate(4)
    b.release(r)
    s = b.allocate(4)
    assert list(s) == list(r)
    assert log[1] == Release(0, 4)
    assert b.peak_width == 4


def test_gate_on_dead_qubit():
    b = CircuitBuilder()
    b.allocate(2)
    with pytest.raises(DeadQubit):
        b.cnot(0, 5)
    with pytest.raises(DeadQubit):
        b.x(2)


def test_overlapping_operands():
    b = CircuitBuilder()
    b.allocate(3)
    with pytest.raises(OverlappingOperands):
        b.cnot(1, 1)
    with pytest.raises(OverlappingOperands):
        b.ccnot(0, 1, 0)
    with pytest.raises(OverlappingOperands):
        b.gate(Gate("X", (2,), (0,), (0,)))


def test_gate_polarity_fields():
    g = Gate("Z", (3,), (0,), (1, 2))
    assert g.control_pairs == [(0, True), (1, False), (2, False)]
    assert g.num_controls == 3
    assert set(g.qubits) == {0, 1, 2, 3}


def test_register_rotation_is_reindexing():
    r = Register(range(10, 18))
    v = r.rotl(3)
    assert sorted(v) == sorted(r)
    assert r.rotl(0) == r
    assert r.rotr(3).rotl(3) == r
    with pytest.raises(RotationOutOfRange):
        left_rotate_view(r, 8)
    with pytest.raises(RotationOutOfRange):
        left_rotate_view(r, -1)


@given(st.integers(0, 2**32 - 1), st.integers(0, 31))
@settings(max_examples=50, deadline=None)
def test_rotated_view_reads_rotated_value(x, r):
    sim, b, (w,) = run_on_registers(lambda b, w: None, [32], [[x]])
    assert sim.read(w.rotl(r)) == [rotl(x, r, 32)]


def test_words_split():
    words = Register(range(64)).words(16)
    assert len(words) == 4 and words[1][0] == 16


def _random_body(rng, b, base, width):
    live = list(base)
    temps = []
    for _ in range(rng.randint(5, 40)):
        op = rng.random()
        if op < 0.1:
            t = b.allocate(rng.randint(1, 3))
            temps.append(t)
            # temp is only ever touched by self-inverse pairs so it can be released
            for q in t:
                b.cnot(live[0], q)
                b.cnot(live[0], q)
        elif op < 0.15 and temps:
            b.release(temps.pop())
        elif op < 0.4:
            b.x(rng.choice(live))
        elif op < 0.7:
            c, t = rng.sample(live, 2)
            b.cnot(c, t)
        elif op < 0.9:
            c, d, t = rng.sample(live, 3)
            b.ccnot(c, d, t)
        else:
            cs = rng.sample(live, 4)
            b.mcx(cs[0], cs[1:3], cs[3:])
    while temps:
        b.release(temps.pop())


def test_record_then_adjoint_is_identity_on_random_blocks():
    rng = random.Random(7)
    for trial in range(25):
        width = 6
        inits = [rng.getrandbits(width) for _ in range(100)]
        sim = ToffoliSimulator(100)
        b = CircuitBuilder([sim])
        reg = b.allocate(width)
        sim.load(reg, inits)
        block = b.record(_random_body, rng, b, list(reg), width)
        b.replay_adjoint(block)
        assert sim.read(reg) == inits
        assert b.top == width


def test_adjoint_swaps_alloc_and_release():
    log = EventLog()
    b = CircuitBuilder(log)
    r = b.allocate(2)

    def body():
        t = b.allocate(1)
        b.ccnot(r[0], r[1], t[0])
        b.ccnot(r[0], r[1], t[0])
        b.release(t)

    block = b.record(body)
    start = len(log)
    b.replay_adjoint(block)
    tail = log[start:]
    assert tail[0] == Alloc(2, 1) and tail[-1] == Release(2, 1)


def test_unbalanced_record_rejected():
    b = CircuitBuilder()
    with pytest.raises(UnbalancedAllocation):
        b.record(lambda: b.allocate(1))


def test_record_keeps_result():
    b = CircuitBuilder()
    assert b.record(lambda: 42).result == 42


def test_block_roundtrips_all_event_kinds():
    log = EventLog()
    b = CircuitBuilder(log)
    b.allocate(6)

    def body():
        b.x(0)
        b.cnot(0, 1)
        b.ccnot(0, 1, 2)
        b.mcx(3, (0, 1, 2))
        b.h(4)
        b.z(5, (0,), (1,))
        b.marker("m")

    start = len(log)
    block = b.record(body)
    assert list(block.events()) == log[start:]


def test_high_qubit_ids_use_side_table():
    log = EventLog()
    b2 = CircuitBuilder(log)
    b2.allocate((1 << 20) + 3)
    hi = (1 << 20) + 1
    block = b2.record(lambda: (b2.cnot(hi, hi + 1), b2.ccnot(0, hi, hi + 1)))
    b2.replay_adjoint(block)
    assert log.gates() == [
        Gate("X", (hi + 1,), (hi,)),
        Gate("X", (hi + 1,), (0, hi)),
        Gate("X", (hi + 1,), (0, hi)),
        Gate("X", (hi + 1,), (hi,)),
    ]


def test_conjugate_emits_outer_inner_adjoint():
    log = EventLog()
    b = CircuitBuilder(log)
    b.allocate(3)
    b.conjugate(lambda: (b.x(0), b.cnot(0, 1)), lambda: b.ccnot(0, 1, 2))
    assert [tuple(g.controls) + g.targets for g in log.gates()] == [(0,), (0, 1), (0, 1, 2), (0, 1), (0,)]


def test_bulk_emitters_match_single_gates():
    log1, log2 = EventLog(), EventLog()
    b1, b2 = CircuitBuilder(log1), CircuitBuilder(log2)
    for b in (b1, b2):
        b.allocate(6)
    b1.cnot_many([0, 1], [2, 3])
    b1.ccnot_many([0, 1], [2, 3], [4, 5])
    for c, t in ((0, 2), (1, 3)):
        b2.cnot(c, t)
    for c, d, t in ((0, 2, 4), (1, 3, 5)):
        b2.ccnot(c, d, t)
    assert log1 == log2
    with pytest.raises(OverlappingOperands):
        b1.cnot_many([0], [0])
    with pytest.raises(DeadQubit):
        b1.cnot_many([0], [9])


def test_marker_passes_through():
    log = EventLog()
    b = CircuitBuilder(log)
    b.marker("prep")
    assert log == [Marker("prep")]


def test_block_events_decode():
    blk = Block()
    blk.add(Alloc(0, 2))
    assert list(blk.events()) == [Alloc(0, 2)]
