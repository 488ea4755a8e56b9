"""Keccak-f[1600] and the sponge as reversible circuits.

The state is 25 lanes of 64 qubits. Theta and chi are computed in place with
320 borrowed zero qubits each, which are cleaned before release; rho and pi
are free re-indexings and iota is a handful of X gates. Peak Keccak-f width
is therefore 1600 + 320.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..circuit import CircuitBuilder, Register
from ..exceptions import RoundOutOfRange, WidthMismatch
from ..revarith import and_register, not_register, xor_constant, xor_register
from ..specs import KECCAK_RC, KECCAK_RHO, THETA_INVERSE_POSITIONS, HashSpec
from .padding import PaddedMessage, pad_keccak

LANE = 64
STATE_BITS = 1600


class KeccakState:
    """25 lane registers, ``lanes[x][y]``; state bit ``64*(x + 5*y) + z`` is ``lanes[x][y][z]``."""

    __slots__ = ("lanes",)

    def __init__(self, lanes: list[list[Register]]):
        self.lanes = lanes

    @classmethod
    def from_register(cls, reg: Register) -> "KeccakState":
        if len(reg) != STATE_BITS:
            raise WidthMismatch(f"Keccak state needs {STATE_BITS} qubits, got {len(reg)}")
        words = reg.words(LANE)
        return cls([[words[x + 5 * y] for y in range(5)] for x in range(5)])

    def qubit(self, k: int) -> int:
        i, z = divmod(k, LANE)
        return self.lanes[i % 5][i // 5][z]

    def register(self) -> Register:
        return Register(q for y in range(5) for x in range(5) for q in self.lanes[x][y])


def keccak_theta(b: CircuitBuilder, st: KeccakState) -> None:
    """A[x][y] ^= C[x-1] ^ rotl(C[x+1], 1) in place.

    The column parities D[x] are built into 320 fresh qubits by XORing every
    lane into them, then XORed into the lanes. At that point D[x] equals the
    theta output's own column-parity combination, and the inverse-theta
    polynomial recovers it from the output lanes so the scratch returns to 0.
    """
    A = st.lanes
    cols = b.allocate(5 * LANE).words(LANE)
    for x in range(5):
        for y in range(5):
            xor_register(b, A[(x + 4) % 5][y], cols[x])
            xor_register(b, A[(x + 1) % 5][y].rotl(1), cols[x])
    for x in range(5):
        for y in range(5):
            xor_register(b, cols[x], A[x][y])
    for z in range(LANE):
        for off in range(5):
            if (THETA_INVERSE_POSITIONS[off] >> z) & 1:
                for x in range(5):
                    for y in range(5):
                        xor_register(b, A[(x - off) % 5][y].rotl(z), cols[x])
    b.release(Register(q for c in cols for q in c))


def keccak_rho_pi(st: KeccakState) -> KeccakState:
    """B[y][2x+3y] = rotl(A[x][y], r[x][y]); no gates."""
    out = [[None] * 5 for _ in range(5)]
    for x in range(5):
        for y in range(5):
            out[y][(2 * x + 3 * y) % 5] = st.lanes[x][y].rotl(KECCAK_RHO[x + 5 * y])
    return KeccakState(out)


def _chi_row(b: CircuitBuilder, L: list[Register]) -> None:
    rows = b.allocate(5 * LANE).words(LANE)
    for x in range(5):
        xor_register(b, L[x], rows[x])
    # Forward: lanes take their chi outputs, copies still hold the inputs.
    for x in range(5):
        r1, r2 = rows[(x + 1) % 5], rows[(x + 2) % 5]
        b.conjugate(lambda: not_register(b, r1), lambda: and_register(b, r1, r2, L[x]))
    # Clean copies 0, 2, 4, 1 using outputs and the copies that are still dirty.
    for x in (0, 2, 4, 6):
        l1, r2, r0 = L[(x + 1) % 5], rows[(x + 2) % 5], rows[x % 5]
        b.conjugate(lambda: not_register(b, l1), lambda: and_register(b, l1, r2, r0))
        xor_register(b, L[x % 5], r0)

    # Copy 3 needs copy 0 rebuilt from outputs only, then undone.
    def rebuild():
        not_register(b, L[1])
        and_register(b, L[1], L[2], rows[0])
        xor_register(b, L[0], rows[0])
        not_register(b, L[4])

    b.conjugate(rebuild, lambda: and_register(b, L[4], rows[0], rows[3]))
    xor_register(b, L[3], rows[3])
    b.release(Register(q for r in rows for q in r))


def keccak_chi(b: CircuitBuilder, st: KeccakState) -> None:
    """A[x] ^= ~A[x+1] & A[x+2] per row, in place."""
    for y in range(5):
        _chi_row(b, [st.lanes[x][y] for x in range(5)])


def keccak_iota(b: CircuitBuilder, st: KeccakState, rnd: int) -> None:
    if not 0 <= rnd < len(KECCAK_RC):
        raise RoundOutOfRange(f"round {rnd} outside 0..{len(KECCAK_RC) - 1}")
    xor_constant(b, st.lanes[0][0], KECCAK_RC[rnd])


def keccak_round(b: CircuitBuilder, st: KeccakState, rnd: int) -> KeccakState:
    keccak_theta(b, st)
    st = keccak_rho_pi(st)
    keccak_chi(b, st)
    keccak_iota(b, st, rnd)
    return st


def keccak_f(b: CircuitBuilder, st: KeccakState) -> KeccakState:
    """All 24 rounds; returns the view holding the permuted state."""
    for rnd in range(24):
        st = keccak_round(b, st, rnd)
    return st


@dataclass
class SpongeLayout:
    spec: HashSpec
    padded: PaddedMessage
    input: Register
    state: Register
    digest: Register
    groups: list[Register] = field(default_factory=list)


def allocate_sponge_layout(b: CircuitBuilder, spec: HashSpec, inp: Register) -> SpongeLayout:
    padded = pad_keccak(len(inp), spec)
    state = b.allocate(STATE_BITS)
    digest = b.allocate(spec.digest_bits)
    return SpongeLayout(spec, padded, inp, state, digest, [state, digest])


def compute_sponge(b: CircuitBuilder, lay: SpongeLayout) -> Register:
    """Absorb every padded block, squeeze into the digest register and return it.

    Digest bit ``k`` is bit ``k % 8`` of output byte ``k // 8``.
    """
    st = KeccakState.from_register(lay.state)
    rate = lay.spec.rate
    rb = lay.padded.block_bytes
    for c in range(len(lay.padded.blocks)):
        for p in lay.padded.constant_bits(c):
            b.x(st.qubit(p))
        for i, (blk, byte, bit) in enumerate(lay.padded.live):
            if blk == c:
                b.cnot(lay.input[i], st.qubit(8 * byte + bit))
        st = keccak_f(b, st)
    assert rb * 8 == rate
    out = 0
    total = len(lay.digest)
    while True:
        take = min(rate, total - out)
        for k in range(take):
            b.cnot(st.qubit(k), lay.digest[out + k])
        out += take
        if out >= total:
            break
        st = keccak_f(b, st)
    return lay.digest
