"""Oracle assembly: register layout, hash computation, digest-match phase flip."""
from __future__ import annotations

from typing import Optional, Sequence, Union

from ..circuit import CircuitBuilder, Register
from ..exceptions import WidthMismatch
from ..specs import HashSpec, get_spec
from .keccak import SpongeLayout, allocate_sponge_layout, compute_sponge
from .md import MDLayout, allocate_md_layout, compute_md
from .padding import input_to_message, message_to_input

OracleLayout = Union[MDLayout, SpongeLayout]


def allocate_layout(b: CircuitBuilder, spec: HashSpec, inp: Register) -> OracleLayout:
    """Allocate every register the hash needs besides the input and the target."""
    if spec.is_sponge:
        return allocate_sponge_layout(b, spec, inp)
    return allocate_md_layout(b, spec, inp)


def release_layout(b: CircuitBuilder, layout: OracleLayout) -> None:
    for g in reversed(layout.groups):
        b.release(g)


def compute_hash(b: CircuitBuilder, layout: OracleLayout) -> Register:
    """Emit the hash computation; returns the register holding the digest.

    Digest bit ``k`` is bit ``k % 8`` of digest byte ``k // 8``.
    """
    if layout.spec.is_sponge:
        return compute_sponge(b, layout)
    return compute_md(b, layout)


def digest_polarity(target_digest: Union[bytes, int], bits: int) -> int:
    if isinstance(target_digest, (bytes, bytearray)):
        if len(target_digest) * 8 != bits:
            raise WidthMismatch(f"target digest has {len(target_digest) * 8} bits, register has {bits}")
        return int.from_bytes(target_digest, "little")
    if not 0 <= target_digest < (1 << bits):
        raise WidthMismatch(f"target digest does not fit in {bits} bits")
    return target_digest


def phase_flip_on_digest(
    b: CircuitBuilder,
    digest: Register,
    target_digest: Union[bytes, int],
    target: int,
    match_bits: Optional[int] = None,
) -> None:
    """One multi-controlled Z on ``target``, firing when ``digest`` equals ``target_digest``.

    ``match_bits`` compares only the first that many digest bits (byte 0
    upward, least significant bit first), which lets small searches plant
    several targets.
    """
    value = digest_polarity(target_digest, len(digest))
    used = len(digest) if match_bits is None else match_bits
    if not 1 <= used <= len(digest):
        raise WidthMismatch(f"cannot match {used} bits of a {len(digest)}-bit digest")
    pos = tuple(q for i, q in enumerate(digest[:used]) if (value >> i) & 1)
    neg = tuple(q for i, q in enumerate(digest[:used]) if not (value >> i) & 1)
    b.z(target, pos, neg)


def hash_oracle(
    b: CircuitBuilder,
    layout: OracleLayout,
    target_digest: Union[bytes, int],
    target: int,
    match_bits: Optional[int] = None,
) -> None:
    """Compute the hash, flip the phase on a match, uncompute.

    Every layout register is back in its previous (zero) state afterwards.
    """
    block = b.record(compute_hash, b, layout)
    phase_flip_on_digest(b, block.result, target_digest, target, match_bits)
    b.replay_adjoint(block)


def simulate_hash(
    spec: Union[HashSpec, str],
    inputs: Sequence[int],
    n: int,
    uncompute: bool = True,
) -> list[bytes]:
    """Digests of the ``n``-bit ``inputs`` computed by Toffoli-simulating the circuit.

    All inputs share one bit-sliced run. With ``uncompute`` the adjoint is
    replayed and every register released, so a broken uncompute raises
    :class:`~groverhash.exceptions.ReleaseNotZero`.
    """
    from ..sim.toffoli import ToffoliSimulator

    spec = get_spec(spec) if isinstance(spec, str) else spec
    if not inputs:
        return []
    sim = ToffoliSimulator(lanes=len(inputs))
    b = CircuitBuilder([sim])
    inp = b.allocate(n) if n else None
    if inp is not None:
        sim.load(inp, list(inputs))
    layout = allocate_layout(b, spec, inp if inp is not None else Register(()))
    block = b.record(compute_hash, b, layout)
    digest = block.result
    values = sim.read(digest)
    if uncompute:
        b.replay_adjoint(block)
        release_layout(b, layout)
        if inp is not None:
            if sim.read(inp) != list(inputs):
                raise AssertionError("input register changed by the oracle")
    out = [v.to_bytes(len(digest) // 8, "little") for v in values]
    return out


def simulate_messages(spec: Union[HashSpec, str], messages: Sequence[bytes], nbits: Optional[int] = None) -> list[bytes]:
    """Circuit digests of equal-length byte messages (``nbits`` defaults to the full length)."""
    spec = get_spec(spec) if isinstance(spec, str) else spec
    if not messages:
        return []
    n = 8 * len(messages[0]) if nbits is None else nbits
    return simulate_hash(spec, [message_to_input(m, n, spec) for m in messages], n)


__all__ = [
    "OracleLayout",
    "allocate_layout",
    "release_layout",
    "compute_hash",
    "phase_flip_on_digest",
    "hash_oracle",
    "simulate_hash",
    "simulate_messages",
    "input_to_message",
]
