import io
import json
from collections import Counter

import pytest

from groverhash.circuit import Alloc, CircuitBuilder, EventLog, Gate, Marker, Release
from groverhash.estimate import (
    CSV_COLUMNS,
    CSV_SCHEMA,
    CostModel,
    Estimator,
    estimate,
    estimate_grover,
    expected_ratio,
    gate_kind,
    planted_digest,
    read_csv,
    sweep,
    to_csv_string,
    write_json,
)
from groverhash.exceptions import MalformedStream
from groverhash.grover import build_grover, iteration_count
from groverhash.oracles import KeccakState, allocate_layout, compute_hash, keccak_f
from groverhash.specs import get_spec


def test_parallel_and_serial_gates():
    r = estimate([Alloc(0, 2), Gate("X", (0,)), Gate("X", (1,))])
    assert (r.depth, r.width) == (1, 2)
    r = estimate([Alloc(0, 2), Gate("X", (0,)), Gate("X", (0,))])
    assert r.depth == 2
    r = estimate([Alloc(0, 3), Gate("X", (0,)), Gate("X", (2,), (0, 1)), Gate("H", (1,))])
    assert r.depth == 3
    assert r.gate_counts["CCNOT"] == 1 and r.gate_counts["H"] == 1


def test_gate_kinds():
    assert gate_kind(Gate("X", (0,), (1,))) == "CNOT"
    assert gate_kind(Gate("X", (0,), (), (1,))) == "multi-X"
    assert gate_kind(Gate("X", (0,), (1, 2, 3))) == "multi-X"
    assert gate_kind(Gate("Z", (0,))) == "Z"
    assert gate_kind(Gate("Z", (0,), (), (1,))) == "multi-Z"


def test_markers_are_barriers_and_segments():
    r = estimate([Alloc(0, 2), Marker("a"), Gate("X", (0,)), Marker("b"), Gate("X", (1,))])
    assert r.depth == 2
    assert [(lbl, d) for lbl, d, _ in r.segments] == [("a", 1), ("b", 1)]


def test_released_ids_keep_their_ready_time():
    r = estimate([Alloc(0, 2), Gate("X", (1,)), Gate("X", (1,)), Release(1, 1), Alloc(1, 1), Gate("X", (1,), (0,))])
    assert r.depth == 3 and r.width == 2


def test_malformed_streams():
    for events in (
        [Gate("X", (0,))],
        [Alloc(0, 1), Alloc(0, 1)],
        [Release(0, 1)],
        [Alloc(0, 1), "junk"],
    ):
        with pytest.raises(MalformedStream):
            estimate(events)


def test_ladder_model():
    wide = [Alloc(0, 6), Gate("Z", (5,), (0, 1), (2, 3, 4))]
    u, l = estimate(wide, "unit"), estimate(wide, "ladder")
    assert (u.depth, u.width) == (1, 6)
    assert (l.depth, l.width) == (8, 10)
    assert estimate(wide[:1] + [Gate("X", (2,), (0, 1))], "ladder").depth == 1
    with pytest.raises(ValueError):
        CostModel("bogus")


def test_keccak_f_width():
    est = Estimator()
    b = CircuitBuilder([est])
    keccak_f(b, KeccakState.from_register(b.allocate(1600)))
    assert est.report().width == 1920


def _md5_compute_log():
    log = EventLog()
    b = CircuitBuilder([log])
    inp = b.allocate(16)
    compute_hash(b, allocate_layout(b, get_spec("md5"), inp))
    return list(log)


def test_depth_bounds_and_determinism():
    events = _md5_compute_log()
    r1, r2 = estimate(events), estimate(events)
    assert (r1.depth, r1.width, r1.gate_counts) == (r2.depth, r2.width, r2.gate_counts)
    gates = [e for e in events if type(e) is Gate]
    busiest = Counter(q for g in gates for q in g.qubits).most_common(1)[0][1]
    assert busiest <= r1.depth <= len(gates)
    assert r1.total_gates == len(gates)


def test_multiply_equals_direct_stream():
    digest = planted_digest("md5", 4)
    est = Estimator()
    b = CircuitBuilder([est])
    build_grover(b, "md5", 4, digest)
    direct = est.report()
    multiplied = estimate_grover("md5", 4)
    assert multiplied.iterations == 3
    assert direct.depth == multiplied.depth
    assert direct.width == multiplied.width == 801
    assert direct.gate_counts == multiplied.gate_counts


@pytest.mark.parametrize(
    "name,width",
    [("md5", 801), ("sha1", 2913), ("sha256", 2593), ("sha512", 6209), ("sha3-256", 2193), ("sha3-384", 2321)],
)
def test_widths(name, width):
    r = estimate_grover(name, 16)
    assert r.width == width
    assert r.depth == r.prep_depth + r.iterations * r.iter_depth + r.tail_depth


def test_depth_ratio_n16_over_n8():
    r16, r8 = estimate_grover("md5", 16), estimate_grover("md5", 8)
    m_ratio = iteration_count(16) / iteration_count(8)
    assert abs(r16.depth / r8.depth / m_ratio - 1) < 0.02
    # the naive 2**4 misses by the flooring of m
    assert abs(r16.depth / r8.depth / 16 - 1) < 0.05


def test_input_bits_sweep_exponent():
    res = sweep("input_bits", [8, 16, 24, 32])
    assert [r.input_bits for r in res.rows] == [8, 16, 24, 32]
    assert abs(res.fit["exponent"] - 0.5) <= 0.02


def test_targets_sweep_ratios():
    res = sweep("targets", [1, 2, 3, 4, 5], input_bits=16, workers=3)
    assert [r.targets for r in res.rows] == [1, 2, 3, 4, 5]
    for r in res.rows:
        assert abs(r.ratio / expected_ratio(16, r.targets) - 1) < 0.02
    assert res.fit["power"] == pytest.approx(-0.5, abs=0.02)


def test_sweep_errors():
    with pytest.raises(ValueError):
        sweep("colour", [1])
    with pytest.raises(ValueError):
        sweep("targets", [])


def test_csv_and_json_output():
    reports = sweep("targets", [1, 2], input_bits=8).rows
    text = to_csv_string(reports)
    assert text.splitlines()[0] == f"# {CSV_SCHEMA}"
    rows = read_csv(io.StringIO(text))
    assert list(rows[0]) == list(CSV_COLUMNS)
    assert [int(r["depth"]) for r in rows] == [r.depth for r in reports]
    buf = io.StringIO()
    write_json(reports, buf)
    objs = [json.loads(line) for line in buf.getvalue().splitlines()]
    assert [o["targets"] for o in objs] == [1, 2]
    assert objs[1]["ratio"] == pytest.approx(reports[1].depth / reports[0].depth)
