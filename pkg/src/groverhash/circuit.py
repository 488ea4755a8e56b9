"""Reversible-circuit intermediate representation and the streaming builder.

Circuits are never materialized: a :class:`CircuitBuilder` pushes each
event to its sinks (simulators, the resource estimator, a plain list) as it
is emitted. Qubits are allocated in nested groups on a stack, so the live
qubits are always exactly ``range(0, builder.top)``.

Gate alphabet is X, H and Z with any number of controls. A control is either
positive (fires on 1) or a zero-control (fires on 0). CNOT and CCNOT are just
X with one or two positive controls.
"""
from __future__ import annotations

from array import array
from typing import Callable, Iterable, Iterator, NamedTuple, Optional, Sequence, Union

from .exceptions import (
    DeadQubit,
    DoubleRelease,
    OverlappingOperands,
    RotationOutOfRange,
    UnbalancedAllocation,
)

__all__ = [
    "Gate",
    "Alloc",
    "Release",
    "Marker",
    "CircuitEvent",
    "Register",
    "left_rotate_view",
    "Block",
    "CircuitBuilder",
    "EventLog",
]

X, H, Z = "X", "H", "Z"
GATE_KINDS = (X, H, Z)


class Gate(NamedTuple):
    kind: str
    targets: tuple[int, ...]
    controls: tuple[int, ...] = ()
    zero_controls: tuple[int, ...] = ()

    @property
    def control_pairs(self) -> list[tuple[int, bool]]:
        """Controls as ``(qubit, polarity)`` pairs; polarity True means fire-on-1."""
        return [(q, True) for q in self.controls] + [(q, False) for q in self.zero_controls]

    @property
    def num_controls(self) -> int:
        return len(self.controls) + len(self.zero_controls)

    @property
    def qubits(self) -> tuple[int, ...]:
        return self.controls + self.zero_controls + self.targets


class Alloc(NamedTuple):
    first: int
    count: int

    @property
    def qubits(self) -> range:
        return range(self.first, self.first + self.count)


class Release(NamedTuple):
    first: int
    count: int

    @property
    def qubits(self) -> range:
        return range(self.first, self.first + self.count)


class Marker(NamedTuple):
    """Program boundary label. Simulators ignore it; the estimator treats it as a barrier."""

    label: str


CircuitEvent = Union[Gate, Alloc, Release, Marker]
Sink = Callable[[CircuitEvent], object]


class Register(Sequence[int]):
    """Ordered, immutable window onto live qubits.

    Position ``i`` of a register is bit ``i`` (least significant first) of the
    integer it encodes. Views may alias each other freely.
    """

    __slots__ = ("qubits",)

    def __init__(self, qubits: Iterable[int]):
        self.qubits = tuple(qubits)

    @property
    def width(self) -> int:
        return len(self.qubits)

    def __len__(self) -> int:
        return len(self.qubits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.qubits)

    def __getitem__(self, idx):
        if isinstance(idx, slice):
            return Register(self.qubits[idx])
        return self.qubits[idx]

    def __add__(self, other: "Register") -> "Register":
        return Register(self.qubits + tuple(other))

    def __eq__(self, other) -> bool:
        return isinstance(other, Register) and self.qubits == other.qubits

    def __hash__(self) -> int:
        return hash(self.qubits)

    def __repr__(self) -> str:
        if len(self.qubits) > 6:
            return f"Register(<{len(self.qubits)} qubits from {self.qubits[0]}>)"
        return f"Register({list(self.qubits)})"

    def rotl(self, r: int) -> "Register":
        return left_rotate_view(self, r)

    def rotr(self, r: int) -> "Register":
        if not 0 <= r < max(self.width, 1):
            raise RotationOutOfRange(f"rotation {r} outside [0, {self.width})")
        return left_rotate_view(self, (self.width - r) % self.width)

    def words(self, size: int) -> list["Register"]:
        if self.width % size:
            raise ValueError(f"width {self.width} is not a multiple of {size}")
        return [self[i : i + size] for i in range(0, self.width, size)]


def left_rotate_view(reg: Register, r: int) -> Register:
    """Re-index ``reg`` so that, read as an integer, it is the source rotated left by ``r``.

    Emits nothing; the result aliases the same qubits.
    """
    w = reg.width
    if not 0 <= r < max(w, 1):
        raise RotationOutOfRange(f"rotation {r} outside [0, {w})")
    if r == 0:
        return reg
    q = reg.qubits
    return Register(q[w - r :] + q[: w - r])


# Compact block encoding: X gates with at most two positive controls pack into
# one 62-bit word (tag, c1, c2, target at 20 bits each); anything else is kept
# as an object in a side table and the word holds its index with tag 3.
_QBITS = 20
_QMASK = (1 << _QBITS) - 1
_QLIMIT = 1 << _QBITS
_EXTRA = 3


class Block:
    """A recorded, balanced run of events that can be replayed as its adjoint."""

    __slots__ = ("codes", "extras", "extra_pos", "result")

    def __init__(self):
        self.codes = array("Q")
        self.extras: list[CircuitEvent] = []
        self.extra_pos: list[int] = []
        self.result = None

    def __len__(self) -> int:
        return len(self.codes)

    def events(self) -> Iterator[CircuitEvent]:
        extras = self.extras
        for code in self.codes:
            yield _decode(code, extras)

    def add(self, ev: CircuitEvent) -> None:
        self.extra_pos.append(len(self.codes))
        self.codes.append((_EXTRA << 60) | len(self.extras))
        self.extras.append(ev)


def _decode(code: int, extras: list) -> CircuitEvent:
    tag = code >> 60
    if tag == _EXTRA:
        return extras[code & ((1 << 60) - 1)]
    t = code & _QMASK
    if tag == 0:
        return Gate(X, (t,))
    c1 = (code >> 40) & _QMASK
    if tag == 1:
        return Gate(X, (t,), (c1,))
    return Gate(X, (t,), (c1, (code >> 20) & _QMASK))


def _decode_x(t: int, c1: int, c2: int) -> Gate:
    if c1 < 0:
        return Gate(X, (t,))
    if c2 < 0:
        return Gate(X, (t,), (c1,))
    return Gate(X, (t,), (c1, c2))


def _gate_adapter(sink: Sink) -> Callable[[int, int, int], None]:
    def apply_x(t: int, c1: int = -1, c2: int = -1) -> None:
        sink(_decode_x(t, c1, c2))

    return apply_x


def _many_adapter(fx: Callable[[int, int, int], None]) -> Callable:
    def apply_x_many(ts, c1s, c2s) -> None:
        if c2s is None:
            for t, c in zip(ts, c1s):
                fx(t, c, -1)
        else:
            for t, c, d in zip(ts, c1s, c2s):
                fx(t, c, d)

    return apply_x_many


def _codes_adapter(fx: Callable[[int, int, int], None]) -> Callable:
    def apply_codes(seg) -> None:
        for code in seg:
            tag = code >> 60
            if tag == 0:
                fx(code & _QMASK, -1, -1)
            elif tag == 1:
                fx(code & _QMASK, (code >> 40) & _QMASK, -1)
            else:
                fx(code & _QMASK, (code >> 40) & _QMASK, (code >> 20) & _QMASK)

    return apply_codes


class CircuitBuilder:
    """Emits circuit events to a set of sinks, tracking allocation and width.

    ``sinks`` is a callable or a list of callables, each receiving every event
    in emission order.
    """

    def __init__(self, sinks: Union[Sink, Sequence[Sink], None] = None):
        if sinks is None:
            sinks = []
        elif callable(sinks):
            sinks = [sinks]
        self.sinks: list[Sink] = list(sinks)
        # Sinks may offer apply_x(t, c1=-1, c2=-1), apply_x_many(ts, c1s,
        # c2s_or_None) and apply_codes(packed_codes) to take X gates with at
        # most two positive controls without building Gate objects.
        self._fast_x = [getattr(s, "apply_x", None) or _gate_adapter(s) for s in self.sinks]
        self._fast_many = [
            getattr(s, "apply_x_many", None) or _many_adapter(fx) for s, fx in zip(self.sinks, self._fast_x)
        ]
        self._fast_codes = [
            getattr(s, "apply_codes", None) or _codes_adapter(fx) for s, fx in zip(self.sinks, self._fast_x)
        ]
        self.top = 0
        self.peak_width = 0
        self._groups: list[tuple[int, int]] = []
        self._recording: list[Block] = []

    @property
    def width(self) -> int:
        return self.top

    # -- emission ---------------------------------------------------------

    def _emit(self, ev: CircuitEvent) -> None:
        for sink in self.sinks:
            sink(ev)
        for block in self._recording:
            block.add(ev)

    def _emit_x(self, t: int, c1: int = -1, c2: int = -1) -> None:
        for fx in self._fast_x:
            fx(t, c1, c2)
        if self._recording:
            if self.top >= _QLIMIT:
                ev = _decode_x(t, c1, c2)
                for block in self._recording:
                    block.add(ev)
            else:
                if c1 < 0:
                    code = t
                elif c2 < 0:
                    code = (1 << 60) | (c1 << 40) | t
                else:
                    code = (2 << 60) | (c1 << 40) | (c2 << 20) | t
                for block in self._recording:
                    block.codes.append(code)

    def _check_live(self, q: int) -> None:
        if not 0 <= q < self.top:
            raise DeadQubit(f"qubit {q} is not allocated")

    def x(self, t: int) -> None:
        if not 0 <= t < self.top:
            raise DeadQubit(f"qubit {t} is not allocated")
        self._emit_x(t)

    def cnot(self, c: int, t: int) -> None:
        top = self.top
        if not (0 <= c < top and 0 <= t < top):
            raise DeadQubit(f"operand of CNOT({c}, {t}) is not allocated")
        if c == t:
            raise OverlappingOperands(f"CNOT control and target are both {t}")
        self._emit_x(t, c)

    def ccnot(self, a: int, b: int, t: int) -> None:
        top = self.top
        if not (0 <= a < top and 0 <= b < top and 0 <= t < top):
            raise DeadQubit(f"operand of CCNOT({a}, {b}, {t}) is not allocated")
        if a == b or a == t or b == t:
            raise OverlappingOperands(f"CCNOT operands ({a}, {b}, {t}) overlap")
        self._emit_x(t, a, b)

    def cnot_many(self, controls: Sequence[int], targets: Sequence[int]) -> None:
        """CNOT(controls[i], targets[i]) for every i, in order."""
        self._many(targets, controls, None)

    def ccnot_many(self, a: Sequence[int], b: Sequence[int], targets: Sequence[int]) -> None:
        """CCNOT(a[i], b[i], targets[i]) for every i, in order."""
        self._many(targets, a, b)

    def _many(self, ts: Sequence[int], c1s: Sequence[int], c2s: Optional[Sequence[int]]) -> None:
        if not ts:
            return
        cols = (ts, c1s) if c2s is None else (ts, c1s, c2s)
        top = self.top
        for col in cols:
            if len(col) != len(ts):
                raise ValueError("operand lists differ in length")
            if min(col) < 0 or max(col) >= top:
                raise DeadQubit(f"operands {list(col)} include unallocated qubits")
        for ops in zip(*cols):
            if len(set(ops)) != len(ops):
                raise OverlappingOperands(f"gate operands {ops} overlap")
        for fm in self._fast_many:
            fm(ts, c1s, c2s)
        if self._recording:
            if top >= _QLIMIT:
                for t, c, *d in zip(*cols):
                    ev = _decode_x(t, c, d[0] if d else -1)
                    for block in self._recording:
                        block.add(ev)
                return
            if c2s is None:
                codes = [(1 << 60) | (c << 40) | t for t, c in zip(ts, c1s)]
            else:
                codes = [(2 << 60) | (c << 40) | (d << 20) | t for t, c, d in zip(ts, c1s, c2s)]
            for block in self._recording:
                block.codes.extend(codes)

    def h(self, t: int) -> None:
        self.gate(Gate(H, (t,)))

    def z(self, t: int, controls: Sequence[int] = (), zero_controls: Sequence[int] = ()) -> None:
        self.gate(Gate(Z, (t,), tuple(controls), tuple(zero_controls)))

    def mcx(self, t: int, controls: Sequence[int] = (), zero_controls: Sequence[int] = ()) -> None:
        self.gate(Gate(X, (t,), tuple(controls), tuple(zero_controls)))

    def gate(self, g: Gate) -> None:
        """Validate and emit an arbitrary gate event."""
        if g.kind not in GATE_KINDS:
            raise ValueError(f"unknown gate kind {g.kind!r}")
        if not g.targets:
            raise ValueError("gate needs at least one target")
        ops = g.qubits
        for q in ops:
            self._check_live(q)
        if len(set(ops)) != len(ops):
            raise OverlappingOperands(f"gate {g} uses a qubit twice")
        if g.kind == X and len(g.targets) == 1 and not g.zero_controls and len(g.controls) <= 2:
            self._emit_x(g.targets[0], *g.controls)
        else:
            self._emit(g)

    def marker(self, label: str) -> None:
        self._emit(Marker(label))

    # -- allocation -------------------------------------------------------

    def allocate(self, n: int) -> Register:
        if n < 1:
            raise ValueError(f"cannot allocate {n} qubits")
        return self._alloc_at(self.top, n)

    def _alloc_at(self, first: int, n: int) -> Register:
        if first != self.top:
            raise UnbalancedAllocation(f"allocation at {first} but stack top is {self.top}")
        self._groups.append((first, n))
        self.top += n
        if self.top > self.peak_width:
            self.peak_width = self.top
        self._emit(Alloc(first, n))
        return Register(range(first, first + n))

    def release(self, reg: Register) -> None:
        if not reg.width:
            return
        lo = min(reg)
        if not self._groups or self._groups[-1] != (lo, reg.width) or set(reg) != set(
            range(lo, lo + reg.width)
        ):
            if lo >= self.top:
                raise DoubleRelease(f"register {reg!r} is not live")
            raise UnbalancedAllocation(f"register {reg!r} is not the most recent allocation")
        self._release_top()

    def _release_top(self) -> None:
        first, n = self._groups.pop()
        self.top = first
        self._emit(Release(first, n))

    # -- blocks -----------------------------------------------------------

    def record(self, body: Callable, *args, **kwargs) -> Block:
        """Run ``body(*args, **kwargs)`` emitting normally, and capture its events as a block.

        The body's return value is kept on ``block.result``.
        """
        block = Block()
        depth = len(self._groups)
        self._recording.append(block)
        try:
            block.result = body(*args, **kwargs)
        finally:
            self._recording.remove(block)
        if len(self._groups) != depth:
            raise UnbalancedAllocation("recorded body left qubits allocated")
        return block

    def replay_adjoint(self, block: Block) -> None:
        """Emit the inverse of ``block``: events reversed, Alloc and Release swapped."""
        codes = block.codes
        end = len(codes)
        for pos, ev in reversed(list(zip(block.extra_pos, block.extras))):
            if pos + 1 < end:
                self._emit_codes(codes[pos + 1 : end][::-1])
            end = pos
            if type(ev) is Release:
                self._alloc_at(ev.first, ev.count)
            elif type(ev) is Alloc:
                if not self._groups or self._groups[-1] != (ev.first, ev.count):
                    raise UnbalancedAllocation("adjoint replay out of allocation order")
                self._release_top()
            elif type(ev) is Gate:
                self.gate(ev)
            else:
                self._emit(ev)
        if end:
            self._emit_codes(codes[:end][::-1])

    def _emit_codes(self, seg: array) -> None:
        # Packed X gates only; liveness was checked when they were recorded.
        for fc in self._fast_codes:
            fc(seg)
        for block in self._recording:
            block.codes.extend(seg)

    def conjugate(self, outer: Callable[[], object], inner: Callable[[], object]) -> None:
        """Emit ``outer``, ``inner``, then the adjoint of ``outer``."""
        block = self.record(outer)
        inner()
        self.replay_adjoint(block)


class EventLog(list):
    """A sink that keeps every event; only for small circuits."""

    def __call__(self, ev: CircuitEvent) -> None:
        self.append(ev)

    def gates(self) -> list[Gate]:
        return [e for e in self if type(e) is Gate]
