"""Desk-scale Grover search tracking only the 2**n input amplitudes.

Every hash register is a function of the input basis state, so between
oracle calls the state lives in the input subspace (ancillas back at zero,
target fixed at |1>). The oracle is then a sign pattern over inputs and the
diffusion is the reflection ``a -> 2 mean(a) - a``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

import numpy as np

from ..circuit import CircuitBuilder
from ..exceptions import NoTargetExists, RetriesExhausted
from ..grover import iteration_count, success_probability
from ..oracles.core import allocate_layout, hash_oracle, release_layout
from ..oracles.padding import input_to_message
from ..refhash import classical_hash
from ..specs import HashSpec, get_spec
from .toffoli import ToffoliSimulator

MAX_INPUT_BITS = 24
BATCH_LANES = 1 << 14


def _as_spec(spec: Union[HashSpec, str]) -> HashSpec:
    return get_spec(spec) if isinstance(spec, str) else spec


def _prefix_match(a: bytes, b: bytes, match_bits: Optional[int]) -> bool:
    if match_bits is None:
        return a == b
    mask = (1 << match_bits) - 1
    return int.from_bytes(a, "little") & mask == int.from_bytes(b, "little") & mask


def phase_pattern(
    spec: Union[HashSpec, str],
    n: int,
    target_digest: bytes,
    match_bits: Optional[int] = None,
) -> np.ndarray:
    """Boolean mask over all ``2**n`` inputs: does the oracle circuit flip the phase?

    The oracle is Toffoli-simulated (bit-sliced, in batches of inputs) with
    the target held in |1>; the accumulated Z sign is read per input.
    """
    spec = _as_spec(spec)
    return _phase_pattern(spec.name, n, bytes(target_digest), match_bits).copy()


@lru_cache(maxsize=32)
def _phase_pattern(name: str, n: int, target_digest: bytes, match_bits: Optional[int]) -> np.ndarray:
    if not 1 <= n <= MAX_INPUT_BITS:
        raise ValueError(f"input size {n} outside 1..{MAX_INPUT_BITS}")
    spec = get_spec(name)
    total = 1 << n
    out = np.zeros(total, bool)
    for start in range(0, total, BATCH_LANES):
        lanes = min(BATCH_LANES, total - start)
        sim = ToffoliSimulator(lanes, track_phase=True)
        b = CircuitBuilder([sim])
        inp = b.allocate(n)
        target = b.allocate(1)
        sim.load(inp, range(start, start + lanes))
        b.x(target[0])
        layout = allocate_layout(b, spec, inp)
        hash_oracle(b, layout, target_digest, target[0], match_bits)
        release_layout(b, layout)
        b.x(target[0])
        b.release(target)
        bits = np.unpackbits(
            np.frombuffer(sim.phase.to_bytes((lanes + 7) // 8, "little"), np.uint8), bitorder="little"
        )
        out[start : start + lanes] = bits[:lanes].astype(bool)
    out.setflags(write=False)
    return out


def classical_pattern(
    spec: Union[HashSpec, str], n: int, target_digest: bytes, match_bits: Optional[int] = None
) -> np.ndarray:
    """The same mask computed with the classical reference hash."""
    spec = _as_spec(spec)
    return np.array(
        [_prefix_match(classical_hash(spec, input_to_message(x, n, spec), n), target_digest, match_bits) for x in range(1 << n)]
    )


@dataclass
class SearchOutcome:
    measured: int
    success: bool
    iterations: int
    targets: int
    predicted: float
    empirical: float
    attempts: int
    seed: Optional[int]


def grover_amplitudes(marked: np.ndarray, m: int) -> np.ndarray:
    """Real amplitudes after ``m`` oracle+diffusion rounds from the uniform state."""
    a = np.full(marked.shape, 1 / np.sqrt(marked.size))
    for _ in range(m):
        a[marked] = -a[marked]
        a = 2 * a.mean() - a
        norm = float(np.dot(a, a))
        if abs(norm - 1) > 1e-9:
            raise ArithmeticError(f"amplitude norm drifted to {norm}")
    return a


def grover_search(
    spec: Union[HashSpec, str],
    n: int,
    target_digest: bytes,
    k: Optional[int] = None,
    seed: Optional[int] = None,
    max_attempts: int = 10,
    match_bits: Optional[int] = None,
    rng: Optional[np.random.Generator] = None,
) -> SearchOutcome:
    """Run the search and measure; a failed check repeats the whole search.

    ``k`` is the caller's target-count hint used for the iteration count;
    by default the true count from the phase pattern is used.
    """
    spec = _as_spec(spec)
    if n > MAX_INPUT_BITS:
        raise ValueError(f"semantic search limited to {MAX_INPUT_BITS} input bits")
    marked = _phase_pattern(spec.name, n, bytes(target_digest), match_bits)
    true_k = int(marked.sum())
    if true_k == 0:
        raise NoTargetExists(f"no {n}-bit input of {spec.name} hashes to the target digest")
    k_used = true_k if k is None else k
    m = iteration_count(n, k_used)
    probs = grover_amplitudes(marked, m) ** 2
    empirical = float(probs[marked].sum())
    probs /= probs.sum()
    gen = rng if rng is not None else np.random.default_rng(seed)
    for attempt in range(1, max_attempts + 1):
        x = int(gen.choice(probs.size, p=probs))
        digest = classical_hash(spec, input_to_message(x, n, spec), n)
        if _prefix_match(digest, target_digest, match_bits):
            return SearchOutcome(x, True, m, true_k, success_probability(n, true_k, m), empirical, attempt, seed)
    raise RetriesExhausted(f"no preimage measured in {max_attempts} attempts")


def run_trials(
    spec: Union[HashSpec, str],
    n: int,
    target_digest: bytes,
    trials: int,
    seed: int = 0,
    match_bits: Optional[int] = None,
) -> float:
    """Fraction of trials whose first measurement is a preimage."""
    rng = np.random.default_rng(seed)
    wins = 0
    for _ in range(trials):
        out = grover_search(spec, n, target_digest, rng=rng, max_attempts=1_000_000, match_bits=match_bits)
        wins += out.attempts == 1
    return wins / trials
