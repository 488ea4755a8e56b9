"""Simulators: bit-sliced Toffoli, dense statevector, semantic Grover search."""
from .dense import dense_operator, dense_run
from .semantic import SearchOutcome, classical_pattern, grover_amplitudes, grover_search, phase_pattern, run_trials
from .toffoli import BitState, ToffoliSimulator, toffoli_run

__all__ = [
    "BitState",
    "ToffoliSimulator",
    "toffoli_run",
    "dense_run",
    "dense_operator",
    "SearchOutcome",
    "grover_search",
    "grover_amplitudes",
    "phase_pattern",
    "classical_pattern",
    "run_trials",
]
