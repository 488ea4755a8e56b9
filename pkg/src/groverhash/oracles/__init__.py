"""Reversible hash circuits and the Grover phase oracle built from them."""
from .core import (
    OracleLayout,
    allocate_layout,
    compute_hash,
    hash_oracle,
    phase_flip_on_digest,
    release_layout,
    simulate_hash,
    simulate_messages,
)
from .keccak import (
    KeccakState,
    keccak_chi,
    keccak_f,
    keccak_iota,
    keccak_rho_pi,
    keccak_round,
    keccak_theta,
)
from .md import md5_compress, sha1_compress, sha1_schedule, sha2_compress, sha2_schedule
from .padding import PaddedMessage, input_to_message, message_to_input, pad_keccak, pad_md, pad_message

__all__ = [
    "OracleLayout",
    "allocate_layout",
    "compute_hash",
    "hash_oracle",
    "phase_flip_on_digest",
    "release_layout",
    "simulate_hash",
    "simulate_messages",
    "KeccakState",
    "keccak_chi",
    "keccak_f",
    "keccak_iota",
    "keccak_rho_pi",
    "keccak_round",
    "keccak_theta",
    "md5_compress",
    "sha1_compress",
    "sha1_schedule",
    "sha2_compress",
    "sha2_schedule",
    "PaddedMessage",
    "input_to_message",
    "message_to_input",
    "pad_keccak",
    "pad_md",
    "pad_message",
]
