"""Classical-basis simulation of X-only circuits, many inputs at once.

The simulator is bit-sliced: every qubit holds a Python int whose bit ``j``
is that qubit's value in lane ``j``. One pass over a circuit therefore
evaluates it on ``lanes`` independent basis inputs, e.g. all ``2**n`` inputs
of a Grover search space.
"""
from __future__ import annotations

from typing import Iterable, Mapping, Sequence

import numpy as np

from ..circuit import Alloc, CircuitEvent, Gate, Marker, Release
from ..exceptions import DeadQubit, NonClassicalGate, ReleaseNotZero


class BitState(dict):
    """Qubit id -> lane mask for every live qubit."""

    def bit(self, q: int, lane: int = 0) -> int:
        return (self[q] >> lane) & 1


class ToffoliSimulator:
    """Sink that applies events classically.

    With ``track_phase`` the simulator also accepts Z gates, which on a basis
    state only contribute a sign; ``phase`` is then the mask of lanes whose
    accumulated sign is -1.
    """

    def __init__(self, lanes: int = 1, track_phase: bool = False):
        if lanes < 1:
            raise ValueError("need at least one lane")
        self.lanes = lanes
        self.full = (1 << lanes) - 1
        self.track_phase = track_phase
        self.phase = 0
        self.vals: list = []
        self.gate_count = 0

    # -- event handling -----------------------------------------------------

    def __call__(self, ev: CircuitEvent) -> None:
        if type(ev) is Gate:
            self._gate(ev)
        elif type(ev) is Alloc:
            end = ev.first + ev.count
            v = self.vals
            if len(v) < end:
                v.extend([None] * (end - len(v)))
            for q in range(ev.first, end):
                if v[q] is not None:
                    raise DeadQubit(f"qubit {q} allocated twice")
                v[q] = 0
        elif type(ev) is Release:
            self._release(ev.first, ev.count)
        elif type(ev) is Marker:
            pass
        else:
            raise TypeError(f"not a circuit event: {ev!r}")

    def apply_x(self, t: int, c1: int = -1, c2: int = -1) -> None:
        """X on ``t`` with zero, one or two positive controls (builder fast path)."""
        v = self.vals
        self.gate_count += 1
        try:
            if c1 < 0:
                v[t] ^= self.full
            elif c2 < 0:
                v[t] ^= v[c1]
            else:
                v[t] ^= v[c1] & v[c2]
        except (TypeError, IndexError):
            self.gate_count -= 1
            self._gate(Gate("X", (t,), tuple(c for c in (c1, c2) if c >= 0)))

    def apply_x_many(self, ts, c1s, c2s) -> None:
        v = self.vals
        try:
            if c2s is None:
                for t, c in zip(ts, c1s):
                    v[t] ^= v[c]
            else:
                for t, c, d in zip(ts, c1s, c2s):
                    v[t] ^= v[c] & v[d]
        except (TypeError, IndexError):
            bad = [q for q in (*ts, *c1s, *(c2s or ())) if q >= len(v) or v[q] is None]
            raise DeadQubit(f"gates touch dead qubits {bad}") from None
        self.gate_count += len(ts)

    def apply_codes(self, seg) -> None:
        """Packed X gates as stored in a recorded block (builder fast path)."""
        v = self.vals
        full = self.full
        m = (1 << 20) - 1
        for code in seg:
            tag = code >> 60
            if tag == 1:
                v[code & m] ^= v[(code >> 40) & m]
            elif tag == 2:
                v[code & m] ^= v[(code >> 40) & m] & v[(code >> 20) & m]
            else:
                v[code & m] ^= full
        self.gate_count += len(seg)

    def _mask(self, controls: Sequence[int], zero_controls: Sequence[int]) -> int:
        v = self.vals
        m = self.full
        for c in controls:
            m &= v[c]
        for c in zero_controls:
            m &= ~v[c]
        return m & self.full

    def _gate(self, ev: Gate) -> None:
        kind, targets, controls, zero = ev
        v = self.vals
        self.gate_count += 1
        try:
            if kind == "X":
                if zero:
                    m = self._mask(controls, zero)
                elif len(controls) == 1:
                    m = v[controls[0]]
                elif len(controls) == 2:
                    m = v[controls[0]] & v[controls[1]]
                elif not controls:
                    m = self.full
                else:
                    m = self._mask(controls, zero)
                for t in targets:
                    v[t] ^= m
            elif kind == "Z" and self.track_phase:
                m = self._mask(controls, zero)
                for t in targets:
                    m &= v[t]
                self.phase ^= m
            else:
                raise NonClassicalGate(f"{kind} gate cannot be simulated on classical bits")
        except (TypeError, IndexError):
            bad = [q for q in ev.qubits if q >= len(v) or v[q] is None]
            raise DeadQubit(f"gate {ev} touches dead qubits {bad}") from None

    def _release(self, first: int, count: int) -> None:
        v = self.vals
        for q in range(first, first + count):
            if q >= len(v) or v[q] is None:
                raise DeadQubit(f"released qubit {q} is not live")
            if v[q]:
                lanes = [j for j in range(min(self.lanes, 4096)) if (v[q] >> j) & 1]
                raise ReleaseNotZero(f"qubit {q} released holding 1 in lanes {lanes[:8]}")
        for q in range(first, first + count):
            v[q] = None

    # -- out-of-band access -------------------------------------------------

    def load(self, qubits: Sequence[int], values: Sequence[int]) -> None:
        """Write integer ``values[lane]`` into the (live) qubits, bit ``i`` on ``qubits[i]``.

        Lanes must currently hold zero on those qubits; loading XORs.
        """
        if len(values) != self.lanes:
            raise ValueError(f"expected {self.lanes} values, got {len(values)}")
        for i, mask in enumerate(_transpose_in(values, len(qubits), self.lanes)):
            q = qubits[i]
            if q >= len(self.vals) or self.vals[q] is None:
                raise DeadQubit(f"qubit {q} is not live")
            self.vals[q] ^= mask

    def set_masks(self, qubits: Sequence[int], masks: Sequence[int]) -> None:
        for q, m in zip(qubits, masks):
            self.vals[q] ^= m & self.full

    def read(self, qubits: Sequence[int]) -> list[int]:
        """Integer held by ``qubits`` (LSB first) in each lane."""
        return _transpose_out([self.vals[q] for q in qubits], self.lanes)

    def state(self) -> BitState:
        return BitState((q, m) for q, m in enumerate(self.vals) if m is not None)

    def live_qubits(self) -> list[int]:
        return [q for q, m in enumerate(self.vals) if m is not None]


def _transpose_in(values: Sequence[int], width: int, lanes: int) -> list[int]:
    if width == 0:
        return []
    nbytes = (width + 7) // 8
    raw = b"".join(int(v).to_bytes(nbytes, "little") for v in values)
    bits = np.unpackbits(np.frombuffer(raw, np.uint8).reshape(lanes, nbytes), axis=1, bitorder="little")
    cols = np.packbits(bits[:, :width].T, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in cols]


def _transpose_out(masks: Sequence[int], lanes: int) -> list[int]:
    width = len(masks)
    if width == 0:
        return [0] * lanes
    lbytes = (lanes + 7) // 8
    raw = b"".join(m.to_bytes(lbytes, "little") for m in masks)
    bits = np.unpackbits(np.frombuffer(raw, np.uint8).reshape(width, lbytes), axis=1, bitorder="little")
    rows = np.packbits(bits[:, :lanes].T, axis=1, bitorder="little")
    return [int.from_bytes(r.tobytes(), "little") for r in rows]


def toffoli_run(
    events: Iterable[CircuitEvent],
    initial: Mapping[int, int] | None = None,
    lanes: int = 1,
    track_phase: bool = False,
) -> BitState:
    """Run an event stream from ``initial`` (qubit -> lane mask of pre-live qubits)."""
    sim = ToffoliSimulator(lanes, track_phase)
    for q, m in (initial or {}).items():
        if len(sim.vals) <= q:
            sim.vals.extend([None] * (q + 1 - len(sim.vals)))
        sim.vals[q] = m & sim.full
    for ev in events:
        sim(ev)
    return sim.state()
