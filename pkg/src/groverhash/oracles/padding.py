"""Classical padding and the map from search-input bits to block bit positions.

A search input is an integer ``x`` of ``n`` bits. Its message is the
``n``-bit string ``x`` written most-significant bit first, grouped into
bytes from the front; byte-aligned inputs are simply ``x.to_bytes(n // 8,
"big")``. A trailing partial byte keeps its bits in the high end for MD
families and in the low end for Keccak, per each standard's bit-string
convention.

Positions are ``(byte, bit)`` pairs where ``bit`` is the value weight inside
the byte (0 = least significant).
"""
from __future__ import annotations

from dataclasses import dataclass

from ..specs import HashSpec


def input_to_message(x: int, n: int, spec: HashSpec) -> bytes:
    if not 0 <= x < (1 << n):
        raise ValueError(f"input {x} does not fit in {n} bits")
    k = (n + 7) // 8
    r = n % 8
    if r == 0:
        return x.to_bytes(k, "big")
    if spec.bit_order == "msb":
        return (x << (8 - r)).to_bytes(k, "big")
    return (x >> r).to_bytes(k - 1, "big") + bytes([x & ((1 << r) - 1)])


def message_to_input(data: bytes, n: int, spec: HashSpec) -> int:
    """Inverse of :func:`input_to_message` (extra bits beyond ``n`` are ignored)."""
    k = (n + 7) // 8
    r = n % 8
    data = bytes(data[:k])
    if r == 0:
        return int.from_bytes(data, "big")
    if spec.bit_order == "msb":
        return int.from_bytes(data, "big") >> (8 - r)
    return (int.from_bytes(data[:-1], "big") << r) | (data[-1] & ((1 << r) - 1))


def input_bit_positions(n: int, spec: HashSpec) -> list[tuple[int, int]]:
    """``(byte, bit)`` of input bit ``i`` inside the message, for i in range(n)."""
    k = (n + 7) // 8
    r = n % 8
    out = []
    for i in range(n):
        if r == 0:
            out.append((k - 1 - i // 8, i % 8))
        elif spec.bit_order == "msb":
            j = i + 8 - r
            out.append((k - 1 - j // 8, j % 8))
        elif i < r:
            out.append((k - 1, i))
        else:
            j = i - r
            out.append((k - 2 - j // 8, j % 8))
    return out


@dataclass(frozen=True)
class PaddedMessage:
    """Padded blocks of an ``n``-bit message whose live bits are all zero.

    ``live[i]`` is where input bit ``i`` lands: ``(block, byte, bit)`` with
    ``byte`` counted inside the block. Every other bit is a padding constant.
    """

    blocks: tuple[bytes, ...]
    live: tuple[tuple[int, int, int], ...]
    block_bytes: int

    def constant_bits(self, block: int) -> list[int]:
        """Bit positions (8*byte + bit) set in the constant part of ``block``."""
        data = self.blocks[block]
        return [8 * p + j for p, v in enumerate(data) for j in range(8) if (v >> j) & 1]


def _live(n: int, spec: HashSpec, block_bytes: int) -> tuple:
    return tuple((p // block_bytes, p % block_bytes, j) for p, j in input_bit_positions(n, spec))


def pad_md(n: int, spec: HashSpec) -> PaddedMessage:
    """Merkle-Damgard padding of an ``n``-bit message: a 1 bit, zeros, then the bit length."""
    if n < 0:
        raise ValueError("negative length")
    chunk = spec.chunk_bits // 8
    lb = spec.length_bytes
    msg = bytearray((n + 7) // 8)
    if n % 8:
        msg[-1] |= 0x80 >> (n % 8)
    else:
        msg.append(0x80)
    msg += bytes(-(len(msg) + lb) % chunk)
    msg += n.to_bytes(lb, "little" if spec.family == "md5" else "big")
    blocks = tuple(bytes(msg[i : i + chunk]) for i in range(0, len(msg), chunk))
    return PaddedMessage(blocks, _live(n, spec, chunk), chunk)


def pad_keccak(n: int, spec: HashSpec) -> PaddedMessage:
    """Domain bits of ``spec.suffix`` then pad10*1 up to a multiple of the rate."""
    if n < 0:
        raise ValueError("negative length")
    rate = spec.rate
    top = spec.suffix.bit_length() - 1
    tail = [(spec.suffix >> j) & 1 for j in range(top + 1)]
    total = n + len(tail) + 1
    total += -total % rate
    bits = [0] * total
    for j, v in enumerate(tail):
        bits[n + j] = v
    bits[-1] = 1
    rb = rate // 8
    data = bytearray(total // 8)
    for i, v in enumerate(bits):
        data[i // 8] |= v << (i % 8)
    blocks = tuple(bytes(data[i : i + rb]) for i in range(0, len(data), rb))
    return PaddedMessage(blocks, _live(n, spec, rb), rb)


def pad_message(n: int, spec: HashSpec) -> PaddedMessage:
    return pad_keccak(n, spec) if spec.is_sponge else pad_md(n, spec)
