"""MD5, SHA-1 and SHA-2 as reversible circuits.

Register plan per chunk: the message block (live input qubits plus fresh
qubits for the padding constants), the rest of the message schedule (SHA
only), and a copy of the state as working registers. The working registers
cannot be reset after a chunk without measuring, so they stay allocated until
the whole oracle is uncomputed. One temp word, shared by every constant
addition and every sigma function, is the only scratch space.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..circuit import CircuitBuilder, Register
from ..revarith import (
    add_constant,
    add_in_place,
    choice_in_place,
    majority_in_place,
    md5_f_in_place,
    md5_g_in_place,
    md5_h_in_place,
    md5_i_in_place,
    parity_into,
    sigma_xor_into,
    xor_constant,
    xor_register,
)
from ..specs import MD5_K, MD5_S, SHA1_K, HashSpec, md5_message_index
from .padding import PaddedMessage, pad_md

Words = Sequence[Register]


def words_from_positions(qubits: Sequence[int], word_bits: int, byteorder: str) -> list[Register]:
    """Group a block (``qubits[8*byte + bit]``) into words, bit ``k`` of word ``j`` on its qubit."""
    nb = word_bits // 8
    words = []
    for j in range(len(qubits) // word_bits):
        word = []
        for k in range(word_bits):
            byte = k // 8 if byteorder == "little" else nb - 1 - k // 8
            word.append(qubits[8 * (j * nb + byte) + k % 8])
        words.append(Register(word))
    return words


def digest_register(state: Words, digest_bits: int, byteorder: str) -> Register:
    """Digest bit ``8*byte + bit`` (byte order as published) mapped onto state qubits."""
    wb = len(state[0])
    nb = wb // 8
    out = []
    for p in range(digest_bits // 8):
        j, off = divmod(p, nb)
        byte = off if byteorder == "little" else nb - 1 - off
        out.extend(state[j][8 * byte : 8 * byte + 8])
    return Register(out)


@dataclass
class MDChunk:
    block: list[int]  # qubit of block bit 8*byte + bit
    schedule: list[Register]
    working: list[Register]


@dataclass
class MDLayout:
    spec: HashSpec
    padded: PaddedMessage
    input: Register
    state: list[Register]
    temp: Register
    chunks: list[MDChunk] = field(default_factory=list)
    groups: list[Register] = field(default_factory=list)

    @property
    def byteorder(self) -> str:
        return "little" if self.spec.family == "md5" else "big"

    def digest(self) -> Register:
        return digest_register(self.state, self.spec.digest_bits, self.byteorder)


def allocate_md_layout(b: CircuitBuilder, spec: HashSpec, inp: Register) -> MDLayout:
    wb = spec.word_bits
    nwords = 4 if spec.family == "md5" else 5 if spec.family == "sha1" else 8
    padded = pad_md(len(inp), spec)
    state_reg = b.allocate(nwords * wb)
    temp = b.allocate(wb)
    lay = MDLayout(spec, padded, inp, state_reg.words(wb), temp, groups=[state_reg, temp])
    chunk_bits = spec.chunk_bits
    for c in range(len(padded.blocks)):
        live = {8 * byte + bit: inp[i] for i, (blk, byte, bit) in enumerate(padded.live) if blk == c}
        fresh_reg = b.allocate(chunk_bits - len(live)) if len(live) < chunk_bits else None
        fresh = iter(fresh_reg or ())
        block = [live[p] if p in live else next(fresh) for p in range(chunk_bits)]
        words = words_from_positions(block, wb, lay.byteorder)
        groups = [fresh_reg] if fresh_reg is not None else []
        if spec.family != "md5":
            ext = b.allocate((spec.rounds - 16) * wb)
            words += ext.words(wb)
            groups.append(ext)
        working = b.allocate(nwords * wb)
        lay.groups += groups + [working]
        lay.chunks.append(MDChunk(block, words, working.words(wb)))
    return lay


def compute_md(b: CircuitBuilder, lay: MDLayout) -> Register:
    spec = lay.spec
    for word, v in zip(lay.state, spec.iv):
        xor_constant(b, word, v)
    for c, chunk in enumerate(lay.chunks):
        for p in lay.padded.constant_bits(c):
            b.x(chunk.block[p])
        if spec.family == "sha1":
            sha1_schedule(b, chunk.schedule)
        elif spec.family == "sha2":
            sha2_schedule(b, chunk.schedule, lay.temp, spec)
        for s, w in zip(lay.state, chunk.working):
            xor_register(b, s, w)
        if spec.family == "md5":
            final = md5_compress(b, chunk.schedule, chunk.working, lay.temp)
        elif spec.family == "sha1":
            final = sha1_compress(b, chunk.schedule, chunk.working, lay.temp)
        else:
            final = sha2_compress(b, chunk.schedule, chunk.working, lay.temp, spec)
        for s, w in zip(lay.state, final):
            add_in_place(b, w, s)
    return lay.digest()


# -- MD5 --------------------------------------------------------------------

_MD5_F = (
    (md5_f_in_place, 3),  # output lands in d
    (md5_g_in_place, 2),  # in c
    (md5_h_in_place, 3),  # in d
    (md5_i_in_place, 2),  # in c
)


def md5_compress(b: CircuitBuilder, block: Words, working: Words, temp: Register) -> list[Register]:
    """64 in-place MD5 rounds on ``working``; returns the final (renamed, re-indexed) a, b, c, d."""
    regs = list(working)
    for i in range(64):
        a, bb, c, d = regs
        fn, out = _MD5_F[i // 16]
        b.conjugate(lambda: fn(b, bb, c, d), lambda: add_in_place(b, regs[out], a))
        add_constant(b, a, MD5_K[i], temp)
        add_in_place(b, block[md5_message_index(i)], a)
        a = a.rotl(MD5_S[i])
        add_in_place(b, bb, a)
        regs = [d, a, bb, c]
    return regs


# -- SHA-1 ------------------------------------------------------------------


def sha1_schedule(b: CircuitBuilder, w: Words) -> None:
    """Fill words 16..79 (fresh zeros) with ROTL1 of the XOR of four earlier words."""
    for i in range(16, 80):
        for j in (3, 8, 14, 16):
            xor_register(b, w[i - j].rotl(1), w[i])


def sha1_compress(b: CircuitBuilder, w: Words, working: Words, temp: Register) -> list[Register]:
    regs = list(working)
    for i in range(80):
        a, bb, c, d, e = regs
        add_in_place(b, a.rotl(5), e)
        if i < 20:
            f = lambda: choice_in_place(b, bb, c, d)
        elif 40 <= i < 60:
            f = lambda: majority_in_place(b, bb, c, d)
        else:
            f = lambda: parity_into(b, bb, c, d)
        b.conjugate(f, lambda: add_in_place(b, d, e))
        add_constant(b, e, SHA1_K[i // 20], temp)
        add_in_place(b, w[i], e)
        regs = [e, a, bb.rotl(30), c, d]
    return regs


# -- SHA-2 ------------------------------------------------------------------


def _add_sigma(b: CircuitBuilder, x: Register, params, temp: Register, acc: Register) -> None:
    rots, shift = params
    b.conjugate(lambda: sigma_xor_into(b, x, rots, shift, temp), lambda: add_in_place(b, temp, acc))


def sha2_schedule(b: CircuitBuilder, w: Words, temp: Register, spec: HashSpec) -> None:
    sig = spec.sigmas
    for i in range(16, spec.rounds):
        xor_register(b, w[i - 16], w[i])
        add_in_place(b, w[i - 7], w[i])
        _add_sigma(b, w[i - 15], sig["s0"], temp, w[i])
        _add_sigma(b, w[i - 2], sig["s1"], temp, w[i])


def sha2_compress(b: CircuitBuilder, w: Words, working: Words, temp: Register, spec: HashSpec) -> list[Register]:
    """In-place SHA-2 rounds; the new ``a`` is accumulated in the old ``h``."""
    sig = spec.sigmas
    k = spec.round_constants
    regs = list(working)
    for i in range(spec.rounds):
        a, bb, c, d, e, f, g, h = regs
        _add_sigma(b, e, sig["S1"], temp, h)
        b.conjugate(lambda: choice_in_place(b, e, f, g), lambda: add_in_place(b, g, h))
        add_constant(b, h, k[i], temp)
        add_in_place(b, w[i], h)
        add_in_place(b, h, d)
        _add_sigma(b, a, sig["S0"], temp, h)
        b.conjugate(lambda: majority_in_place(b, a, bb, c), lambda: add_in_place(b, c, h))
        regs = [h, a, bb, c, d, e, f, g]
    return regs
