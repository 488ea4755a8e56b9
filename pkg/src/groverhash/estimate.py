"""Streaming resource estimation: critical-path depth, peak width, gate counts.

Depth is computed in one pass from per-qubit ready times. A gate starts when
all of its operands are ready and finishes ``cost`` later; every operand is
then busy until that finish time. A qubit id that is released and allocated
again keeps its ready time, as the same physical qubit would.

Markers act as barriers: nothing after a marker starts before everything
before it has finished. That makes each marked segment's depth independent of
its neighbours, so a Grover program's depth is exactly
``prep + m * iteration + tail`` and only one iteration has to be streamed.
"""
from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import IO, Iterable, Optional, Sequence, Union

import numpy as np

from .circuit import Alloc, CircuitBuilder, CircuitEvent, Gate, Marker, Release
from .exceptions import MalformedStream
from .grover import ITERATION, PREP, TAIL, build_grover, iteration_count
from .oracles.padding import input_to_message
from .refhash import classical_hash
from .specs import HASH_NAMES, HashSpec, get_spec

GATE_KINDS = ("X", "CNOT", "CCNOT", "multi-X", "H", "Z", "multi-Z")
CSV_SCHEMA = "groverhash-report v1"
CSV_COLUMNS = (
    "function",
    "input_bits",
    "targets",
    "model",
    "depth",
    "width",
    *(f"count_{k}" for k in GATE_KINDS),
    "prep_depth",
    "iter_depth",
    "iterations",
    "ratio",
)


@dataclass(frozen=True)
class CostModel:
    """``unit``: every gate event has depth 1 and needs no ancilla.

    ``ladder``: a gate with m >= 3 controls is charged as a ladder of 2(m-1)
    two-control gates using m-1 ancillas that exist only during the gate.
    """

    mode: str = "unit"

    def __post_init__(self):
        if self.mode not in ("unit", "ladder"):
            raise ValueError(f"unknown cost model {self.mode!r}")

    def cost(self, num_controls: int) -> int:
        if self.mode == "ladder" and num_controls >= 3:
            return 2 * (num_controls - 1)
        return 1

    def ancillas(self, num_controls: int) -> int:
        if self.mode == "ladder" and num_controls >= 3:
            return num_controls - 1
        return 0


def as_model(model: Union[CostModel, str]) -> CostModel:
    return model if isinstance(model, CostModel) else CostModel(model)


def gate_kind(g: Gate) -> str:
    if g.kind == "H":
        return "H"
    if g.kind == "Z":
        return "Z" if not g.num_controls else "multi-Z"
    if not g.zero_controls and len(g.controls) <= 2:
        return GATE_KINDS[len(g.controls)]
    return "multi-X"


@dataclass
class ResourceReport:
    depth: int
    width: int
    gate_counts: dict
    model: str = "unit"
    function: Optional[str] = None
    input_bits: Optional[int] = None
    targets: Optional[int] = None
    prep_depth: Optional[int] = None
    iter_depth: Optional[int] = None
    tail_depth: Optional[int] = None
    iterations: Optional[int] = None
    ratio: Optional[float] = None
    segments: list = field(default_factory=list)

    @property
    def total_gates(self) -> int:
        return sum(self.gate_counts.values())

    def as_row(self) -> dict:
        row = {
            "function": self.function,
            "input_bits": self.input_bits,
            "targets": self.targets,
            "model": self.model,
            "depth": self.depth,
            "width": self.width,
        }
        for k in GATE_KINDS:
            row[f"count_{k}"] = self.gate_counts.get(k, 0)
        row.update(
            prep_depth=self.prep_depth,
            iter_depth=self.iter_depth,
            iterations=self.iterations,
            ratio=self.ratio,
        )
        return row


class Estimator:
    """Circuit sink accumulating depth, width and gate counts."""

    def __init__(self, model: Union[CostModel, str] = "unit"):
        self.model = as_model(model)
        self.ready: list[int] = []
        self.alive = bytearray()
        self.live = 0
        self.peak = 0
        self._small = [0, 0, 0]  # X, CNOT, CCNOT through the fast paths
        self.counts = dict.fromkeys(GATE_KINDS, 0)
        self.floor = 0
        self.segments: list[list] = []  # [label, start depth, counts at start]

    # -- fast paths for X with at most two positive controls ---------------

    def apply_x(self, t: int, c1: int = -1, c2: int = -1) -> None:
        r = self.ready
        if c1 < 0:
            r[t] += 1
            self._small[0] += 1
        elif c2 < 0:
            a, b = r[t], r[c1]
            r[t] = r[c1] = (a if a > b else b) + 1
            self._small[1] += 1
        else:
            f = max(r[t], r[c1], r[c2]) + 1
            r[t] = r[c1] = r[c2] = f
            self._small[2] += 1

    def apply_x_many(self, ts, c1s, c2s) -> None:
        r = self.ready
        if c2s is None:
            for t, c in zip(ts, c1s):
                a, b = r[t], r[c]
                r[t] = r[c] = (a if a > b else b) + 1
            self._small[1] += len(ts)
        else:
            for t, c, d in zip(ts, c1s, c2s):
                f = max(r[t], r[c], r[d]) + 1
                r[t] = r[c] = r[d] = f
            self._small[2] += len(ts)

    def apply_codes(self, seg) -> None:
        r = self.ready
        m = (1 << 20) - 1
        for code in seg:
            tag = code >> 60
            t = code & m
            if tag == 1:
                c = (code >> 40) & m
                a, b = r[t], r[c]
                r[t] = r[c] = (a if a > b else b) + 1
            elif tag == 2:
                c, d = (code >> 40) & m, (code >> 20) & m
                f = max(r[t], r[c], r[d]) + 1
                r[t] = r[c] = r[d] = f
            else:
                r[t] += 1
        tags = np.bincount((np.frombuffer(seg, dtype=np.uint64) >> np.uint64(60)).astype(np.int64), minlength=3)
        for i in range(3):
            self._small[i] += int(tags[i])

    # -- general events -----------------------------------------------------

    def __call__(self, ev: CircuitEvent) -> None:
        t = type(ev)
        if t is Gate:
            self._gate(ev)
        elif t is Alloc:
            end = ev.first + ev.count
            if len(self.ready) < end:
                grow = end - len(self.ready)
                self.ready.extend([self.floor] * grow)
                self.alive.extend(bytes(grow))
            for q in ev.qubits:
                if self.alive[q]:
                    raise MalformedStream(f"qubit {q} allocated while live")
                self.alive[q] = 1
            self.live += ev.count
            self.peak = max(self.peak, self.live)
        elif t is Release:
            for q in ev.qubits:
                if q >= len(self.alive) or not self.alive[q]:
                    raise MalformedStream(f"release of qubit {q} that is not live")
                self.alive[q] = 0
            self.live -= ev.count
        elif t is Marker:
            self.barrier(ev.label)
        else:
            raise MalformedStream(f"not a circuit event: {ev!r}")

    def _gate(self, g: Gate) -> None:
        ops = g.qubits
        r = self.ready
        for q in ops:
            if q >= len(self.alive) or not self.alive[q]:
                raise MalformedStream(f"gate {g} acts on qubit {q} that is not live")
        kind = gate_kind(g)
        if kind in ("X", "CNOT", "CCNOT"):
            self.apply_x(g.targets[0], *g.controls)
            return
        nc = g.num_controls
        f = max(r[q] for q in ops) + self.model.cost(nc)
        for q in ops:
            r[q] = f
        self.counts[kind] += 1
        extra = self.model.ancillas(nc)
        if extra and self.live + extra > self.peak:
            self.peak = self.live + extra

    def barrier(self, label: str) -> None:
        d = self.depth
        self.floor = d
        self.ready[:] = [d] * len(self.ready)
        self.segments.append([label, d, self.gate_counts()])

    # -- results ------------------------------------------------------------

    @property
    def depth(self) -> int:
        return max(self.ready, default=0)

    def gate_counts(self) -> dict:
        out = dict(self.counts)
        out["X"] += self._small[0]
        out["CNOT"] += self._small[1]
        out["CCNOT"] += self._small[2]
        return out

    def segment_table(self) -> list[tuple[str, int, dict]]:
        """``(label, depth, gate counts)`` of each marked segment, in order."""
        marks = self.segments + [[None, self.depth, self.gate_counts()]]
        out = []
        for (label, d0, c0), (_, d1, c1) in zip(marks, marks[1:]):
            out.append((label, d1 - d0, {k: c1[k] - c0[k] for k in GATE_KINDS}))
        return out

    def report(self) -> ResourceReport:
        return ResourceReport(
            self.depth,
            self.peak,
            self.gate_counts(),
            self.model.mode,
            segments=self.segment_table(),
        )


def estimate(events: Iterable[CircuitEvent], model: Union[CostModel, str] = "unit") -> ResourceReport:
    """Single-pass estimate over a finished or streamed event sequence."""
    est = Estimator(model)
    for ev in events:
        est(ev)
    return est.report()


def planted_digest(spec: Union[HashSpec, str], n: int, x: int = 0) -> bytes:
    """Digest of search input ``x``; any digest gives the same circuit shape."""
    spec = get_spec(spec)
    return classical_hash(spec, input_to_message(x, n, spec), n)


@lru_cache(maxsize=128)
def _one_iteration(name: str, n: int, mode: str, match_bits: Optional[int]) -> tuple:
    spec = get_spec(name)
    est = Estimator(mode)
    b = CircuitBuilder([est])
    build_grover(b, spec, n, planted_digest(spec, n), iterations=1, match_bits=match_bits)
    segs = {label: (d, c) for label, d, c in est.segment_table()}
    return segs, est.peak


def estimate_grover(
    spec: Union[HashSpec, str],
    n: int,
    k: int = 1,
    model: Union[CostModel, str] = "unit",
    match_bits: Optional[int] = None,
) -> ResourceReport:
    """Whole-search estimate from the preparation and one streamed iteration.

    Iterations are event-identical, so depth and gate counts are
    ``prep + m * iteration + tail`` exactly.
    """
    spec = get_spec(spec) if isinstance(spec, str) else spec
    mode = as_model(model).mode
    m = iteration_count(n, k)
    segs, width = _one_iteration(spec.name, n, mode, match_bits)
    (pd, pc), (idp, ic), (td, tc) = segs[PREP], segs[ITERATION], segs[TAIL]
    counts = {g: pc[g] + m * ic[g] + tc[g] for g in GATE_KINDS}
    return ResourceReport(
        depth=pd + m * idp + td,
        width=width,
        gate_counts=counts,
        model=mode,
        function=spec.name,
        input_bits=n,
        targets=k,
        prep_depth=pd,
        iter_depth=idp,
        tail_depth=td,
        iterations=m,
        segments=[(PREP, pd, pc), (ITERATION, idp, ic), (TAIL, td, tc)],
    )


@dataclass
class SweepResult:
    axis: str
    rows: list[ResourceReport]
    fit: dict

    def as_rows(self) -> list[dict]:
        return [r.as_row() for r in self.rows]


def fit_loglog(xs: Sequence[float], ys: Sequence[float], log_x: bool) -> tuple[float, float]:
    """Least-squares slope and intercept of log2(y) against x (or log2(x))."""
    x = np.log2(np.asarray(xs, float)) if log_x else np.asarray(xs, float)
    slope, intercept = np.polyfit(x, np.log2(np.asarray(ys, float)), 1)
    return float(slope), float(intercept)


AXES = ("input_bits", "targets", "function")


def sweep(
    axis: str,
    values: Sequence,
    *,
    function: str = "md5",
    input_bits: int = 16,
    targets: int = 1,
    model: Union[CostModel, str] = "unit",
    workers: int = 1,
) -> SweepResult:
    """One report per axis value, in input order.

    Input-bit sweeps fit depth ~ 2**(exponent * n); target sweeps fit
    depth ~ k**power and fill each row's ``ratio`` with depth(k)/depth(first k).
    """
    if axis not in AXES:
        raise ValueError(f"axis must be one of {AXES}")
    values = list(values)
    if not values:
        raise ValueError("empty sweep")
    if axis == "input_bits":
        jobs = [(function, int(v), targets) for v in values]
    elif axis == "targets":
        jobs = [(function, input_bits, int(v)) for v in values]
    else:
        jobs = [(str(v), input_bits, targets) for v in values]

    def run(job):
        return estimate_grover(job[0], job[1], job[2], model)

    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            rows = list(pool.map(run, jobs))
    else:
        rows = [run(j) for j in jobs]
    fit: dict = {}
    if axis == "input_bits" and len(rows) > 1:
        fit["exponent"], fit["intercept"] = fit_loglog([r.input_bits for r in rows], [r.depth for r in rows], False)
    elif axis == "targets":
        for r in rows:
            r.ratio = r.depth / rows[0].depth
        if len(rows) > 1:
            fit["power"], fit["intercept"] = fit_loglog([r.targets for r in rows], [r.depth for r in rows], True)
    return SweepResult(axis, rows, fit)


def function_sweep(input_bits: int = 16, targets: int = 1, model: Union[CostModel, str] = "unit") -> SweepResult:
    return sweep("function", HASH_NAMES, input_bits=input_bits, targets=targets, model=model)


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(round(v, 12))
    return str(v)


def write_csv(reports: Iterable[ResourceReport], fh: IO[str]) -> None:
    """CSV with a schema comment on the first line."""
    fh.write(f"# {CSV_SCHEMA}\n")
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        row = r.as_row()
        w.writerow([_cell(row[c]) for c in CSV_COLUMNS])


def read_csv(fh: IO[str]) -> list[dict]:
    lines = [ln for ln in fh if not ln.startswith("#")]
    return list(csv.DictReader(lines))


def write_json(reports: Iterable[ResourceReport], fh: IO[str]) -> None:
    """One JSON object per line."""
    for r in reports:
        fh.write(json.dumps(r.as_row()) + "\n")


def to_csv_string(reports: Iterable[ResourceReport]) -> str:
    buf = io.StringIO()
    write_csv(reports, buf)
    return buf.getvalue()


def expected_ratio(n: int, k: int) -> float:
    """Iteration-count ratio m(n, k) / m(n, 1)."""
    return iteration_count(n, k) / iteration_count(n, 1)
