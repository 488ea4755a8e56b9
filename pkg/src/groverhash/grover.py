"""Grover preimage search: iteration count, success probabilities, program assembly."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

import mpmath

from .circuit import CircuitBuilder, Register
from .exceptions import InvalidTargetCount
from .oracles.core import OracleLayout, allocate_layout, hash_oracle, release_layout
from .specs import HashSpec, get_spec

PREP, ITERATION, TAIL = "prep", "iteration", "tail"


def iteration_count(n: int, k: int = 1) -> int:
    """floor(pi/4 * sqrt(2**n / k)) evaluated at high precision."""
    if n < 0:
        raise InvalidTargetCount(f"negative input size {n}")
    if not 1 <= k <= (1 << n):
        raise InvalidTargetCount(f"target count {k} outside 1..2**{n}")
    with mpmath.workdps(60 + n // 3):
        v = mpmath.pi / 4 * mpmath.sqrt(mpmath.mpf(2) ** n / k)
        m = int(mpmath.floor(v))
        # Guard against a value sitting on an integer boundary.
        if abs(v - mpmath.nint(v)) < mpmath.mpf(10) ** (-40):
            with mpmath.workdps(200 + n):
                m = int(mpmath.floor(mpmath.pi / 4 * mpmath.sqrt(mpmath.mpf(2) ** n / k)))
    return m


def success_probability(n: int, k: int, m: int) -> float:
    """sin^2((2m+1) theta) with sin(theta) = sqrt(k/N)."""
    if not 1 <= k <= (1 << n):
        raise InvalidTargetCount(f"target count {k} outside 1..2**{n}")
    with mpmath.workdps(50):
        theta = mpmath.asin(mpmath.sqrt(mpmath.mpf(k) / mpmath.mpf(2) ** n))
        return float(mpmath.sin((2 * m + 1) * theta) ** 2)


def classical_guess_success(l: int, guesses: Union[int, float]) -> float:
    """1 - (1 - 2**-l)**guesses, stable for large ``l``."""
    if l < 1:
        raise ValueError("output length must be at least 1 bit")
    if guesses <= 0:
        return 0.0
    if l > 60:
        # 2**l * log1p(-2**-l) rounds to -1 here, so the exponent is guesses / 2**l
        ratio = guesses / (1 << l) if isinstance(guesses, int) else math.ldexp(guesses, -l)
        return -math.expm1(-ratio)
    return -math.expm1(guesses * math.log1p(-math.ldexp(1.0, -l)))


@dataclass(frozen=True)
class GroverParams:
    n: int
    k: int = 1

    def __post_init__(self):
        if not 1 <= self.k <= self.N:
            raise InvalidTargetCount(f"target count {self.k} outside 1..{self.N}")

    @property
    def N(self) -> int:
        return 1 << self.n

    @property
    def iterations(self) -> int:
        return iteration_count(self.n, self.k)

    @property
    def success(self) -> float:
        return success_probability(self.n, self.k, self.iterations)


def diffusion(b: CircuitBuilder, inp: Register, target: int) -> None:
    """Reflection about the uniform state: H layer, zero-controlled Z on the target, H layer."""
    for q in inp:
        b.h(q)
    b.z(target, (), tuple(inp))
    for q in inp:
        b.h(q)


@dataclass
class GroverProgram:
    spec: HashSpec
    n: int
    k: int
    iterations: int
    emitted_iterations: int
    input: Register
    target: int
    layout: OracleLayout


def build_grover(
    b: CircuitBuilder,
    spec: Union[HashSpec, str],
    n: int,
    target_digest: Union[bytes, int],
    k: int = 1,
    *,
    iterations: Optional[int] = None,
    match_bits: Optional[int] = None,
) -> GroverProgram:
    """Emit the whole search program into ``b``.

    Markers split the stream into the preparation, each iteration (oracle
    then diffusion) and the tail that frees the hash registers; the input and
    target stay live for measurement. ``iterations`` overrides how many
    iterations are emitted (the estimator streams one).
    """
    spec = get_spec(spec) if isinstance(spec, str) else spec
    if n < 1:
        raise ValueError("need at least one input qubit")
    m = iteration_count(n, k)
    emit = m if iterations is None else iterations
    b.marker(PREP)
    inp = b.allocate(n)
    target = b.allocate(1)
    layout = allocate_layout(b, spec, inp)
    for q in inp:
        b.h(q)
    b.x(target[0])
    for _ in range(emit):
        b.marker(ITERATION)
        hash_oracle(b, layout, target_digest, target[0], match_bits)
        diffusion(b, inp, target[0])
    b.marker(TAIL)
    release_layout(b, layout)
    return GroverProgram(spec, n, k, m, emit, inp, target[0], layout)
