"""Grover preimage search over reversible hash circuits, with resource estimates.

Submodules:

* :mod:`groverhash.circuit`: streamed circuit IR and builder
* :mod:`groverhash.revarith`: reversible word arithmetic
* :mod:`groverhash.oracles`: MD5, SHA-1, SHA-2 and Keccak circuits, phase oracle
* :mod:`groverhash.refhash`: classical reference hashes
* :mod:`groverhash.grover`: iteration counts, success probabilities, program assembly
* :mod:`groverhash.sim`: Toffoli, dense and semantic Grover simulators
* :mod:`groverhash.estimate`: depth/width estimator and sweeps
* :mod:`groverhash.cli`: command-line front end
"""
from .circuit import Alloc, CircuitBuilder, EventLog, Gate, Marker, Register, Release
from .estimate import CostModel, Estimator, ResourceReport, estimate, estimate_grover, sweep
from .grover import build_grover, classical_guess_success, diffusion, iteration_count, success_probability
from .oracles import hash_oracle, simulate_hash, simulate_messages
from .refhash import classical_hash
from .sim import dense_run, grover_search, toffoli_run
from .specs import HASH_NAMES, HashSpec, get_spec

__version__ = "0.1.0"

__all__ = [
    "Alloc",
    "CircuitBuilder",
    "EventLog",
    "Gate",
    "Marker",
    "Register",
    "Release",
    "CostModel",
    "Estimator",
    "ResourceReport",
    "estimate",
    "estimate_grover",
    "sweep",
    "build_grover",
    "classical_guess_success",
    "diffusion",
    "iteration_count",
    "success_probability",
    "hash_oracle",
    "simulate_hash",
    "simulate_messages",
    "classical_hash",
    "dense_run",
    "grover_search",
    "toffoli_run",
    "HASH_NAMES",
    "HashSpec",
    "get_spec",
]
