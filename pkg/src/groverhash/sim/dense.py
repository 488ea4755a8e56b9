"""Exact statevector simulation for a dozen qubits, used to check H/Z constructions."""
from __future__ import annotations

from typing import Iterable, Optional, Union

import numpy as np

from ..circuit import Alloc, CircuitEvent, Gate, Marker, Release
from ..exceptions import DeadQubit, MalformedStream, ReleaseNotZero, TooManyQubits

DEFAULT_LIMIT = 12
_SQRT_HALF = np.sqrt(0.5)


def dense_run(
    events: Iterable[CircuitEvent],
    limit: int = DEFAULT_LIMIT,
    initial: Union[np.ndarray, int, None] = None,
    num_qubits: Optional[int] = None,
) -> np.ndarray:
    """Apply ``events`` to a statevector over qubit ids ``0..q-1``.

    Basis index bit ``i`` is qubit ``i``. ``q`` is ``num_qubits`` or one more
    than the largest id in the stream. ``initial`` is a basis index or a full
    statevector; qubits that are not yet allocated must be in ``|0>`` there.
    Releasing a qubit that is not exactly ``|0>`` raises ReleaseNotZero.
    """
    events = list(events)
    if num_qubits is None:
        num_qubits = 0
        for ev in events:
            if type(ev) is Gate:
                num_qubits = max(num_qubits, max(ev.qubits) + 1)
            elif type(ev) in (Alloc, Release):
                num_qubits = max(num_qubits, ev.first + ev.count)
    if num_qubits > limit:
        raise TooManyQubits(f"{num_qubits} qubits exceed the dense limit of {limit}")
    dim = 1 << num_qubits
    if initial is None:
        psi = np.zeros(dim, complex)
        psi[0] = 1
    elif isinstance(initial, (int, np.integer)):
        psi = np.zeros(dim, complex)
        psi[int(initial)] = 1
    else:
        psi = np.array(initial, complex)
        if psi.shape != (dim,):
            raise ValueError(f"initial state must have {dim} entries")
    idx = np.arange(dim)
    live = np.zeros(num_qubits, bool)
    live_given = any(type(ev) is Alloc for ev in events)
    if not live_given:
        live[:] = True
    for ev in events:
        t = type(ev)
        if t is Gate:
            for q in ev.qubits:
                if not live[q]:
                    raise DeadQubit(f"gate {ev} touches dead qubit {q}")
            psi = _apply(psi, idx, ev)
        elif t is Alloc:
            for q in ev.qubits:
                if live[q]:
                    raise MalformedStream(f"qubit {q} allocated while live")
                live[q] = True
        elif t is Release:
            for q in ev.qubits:
                if not live[q]:
                    raise MalformedStream(f"release of dead qubit {q}")
                if np.abs(psi[(idx >> q) & 1 == 1]).max(initial=0) > 1e-12:
                    raise ReleaseNotZero(f"qubit {q} released away from |0>")
                live[q] = False
        elif t is not Marker:
            raise MalformedStream(f"not a circuit event: {ev!r}")
    return psi


def _apply(psi: np.ndarray, idx: np.ndarray, g: Gate) -> np.ndarray:
    cond = np.ones(idx.shape, bool)
    for c in g.controls:
        cond &= (idx >> c) & 1 == 1
    for c in g.zero_controls:
        cond &= (idx >> c) & 1 == 0
    psi = psi.copy()
    for t in g.targets:
        bit = 1 << t
        low = cond & (idx & bit == 0)
        a = idx[low]
        b = a | bit
        if g.kind == "X":
            psi[a], psi[b] = psi[b].copy(), psi[a].copy()
        elif g.kind == "H":
            pa, pb = psi[a].copy(), psi[b].copy()
            psi[a] = (pa + pb) * _SQRT_HALF
            psi[b] = (pa - pb) * _SQRT_HALF
        elif g.kind == "Z":
            psi[b] = -psi[b]
        else:
            raise ValueError(f"unknown gate kind {g.kind!r}")
    return psi


def dense_operator(events: Iterable[CircuitEvent], num_qubits: int, limit: int = DEFAULT_LIMIT) -> np.ndarray:
    """Matrix of the stream over ``num_qubits`` qubits, built column by column."""
    events = list(events)
    dim = 1 << num_qubits
    cols = [dense_run(events, limit, j, num_qubits) for j in range(dim)]
    return np.stack(cols, axis=1)
