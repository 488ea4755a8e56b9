import random

import pytest

from groverhash.oracles.padding import (
    input_bit_positions,
    input_to_message,
    message_to_input,
    pad_keccak,
    pad_md,
    pad_message,
)
from groverhash.refhash import keccak_pad, md_pad
from groverhash.specs import HASH_NAMES, get_spec

MD5, SHA256, SHA512, SHA3 = (get_spec(n) for n in ("md5", "sha256", "sha512", "sha3-256"))


def _bit(block: bytes, pos: int, order: str) -> int:
    byte, j = divmod(pos, 8)
    shift = 7 - j if order == "msb" else j
    return (block[byte] >> shift) & 1


def test_md_sixteen_bits():
    p = pad_md(16, SHA256)
    assert len(p.blocks) == 1 and len(p.blocks[0]) == 64
    assert _bit(p.blocks[0], 16, "msb") == 1
    assert int.from_bytes(p.blocks[0][-8:], "big") == 16
    q = pad_md(16, MD5)
    assert int.from_bytes(q.blocks[0][-8:], "little") == 16


def test_md_empty_and_overflow():
    p = pad_md(0, MD5)
    assert len(p.blocks) == 1 and p.live == ()
    assert p.blocks[0][0] == 0x80 and not any(p.blocks[0][1:])
    assert len(pad_md(448, SHA256).blocks) == 2
    assert len(pad_md(447, SHA256).blocks) == 1
    assert len(pad_md(895, SHA512).blocks) == 1
    assert len(pad_md(1024 - 128, SHA512).blocks) == 2


def test_keccak_block_counts():
    r = SHA3.rate
    assert len(pad_keccak(16, SHA3).blocks) == 1
    assert len(pad_keccak(r - 8, SHA3).blocks) == 1
    assert len(pad_keccak(r - 1, SHA3).blocks) == 2
    e = pad_keccak(0, SHA3)
    assert len(e.blocks) == 1 and len(e.blocks[0]) == r // 8
    assert e.blocks[0][0] == 0x06 and e.blocks[0][-1] == 0x80
    assert pad_keccak(0, get_spec("shake128-256")).blocks[0][0] == 0x1F


@pytest.mark.parametrize("name", HASH_NAMES)
@pytest.mark.parametrize("n", [0, 1, 5, 8, 16, 24, 440, 448, 1000])
def test_padding_agrees_with_reference(name, n):
    spec = get_spec(name)
    x = random.Random(n).getrandbits(n) if n else 0
    data = input_to_message(x, n, spec)
    if spec.is_sponge:
        ref = keccak_pad(data, n, spec.rate, spec.suffix)
    else:
        ref = md_pad(data, n, spec.chunk_bits // 8, spec.length_bytes, "little" if spec.family == "md5" else "big")
    p = pad_message(n, spec)
    blocks = [bytearray(blk) for blk in p.blocks]
    for i, (blk, byte, bit) in enumerate(p.live):
        blocks[blk][byte] |= ((x >> i) & 1) << bit
    assert b"".join(blocks) == ref
    assert len(ref) % p.block_bytes == 0
    # live positions hold zeros in the constant part
    for blk, byte, bit in p.live:
        assert not (p.blocks[blk][byte] >> bit) & 1


@pytest.mark.parametrize("name", ["md5", "sha3-256"])
@pytest.mark.parametrize("n", [1, 3, 8, 13, 16, 21])
def test_input_message_round_trip(name, n):
    spec = get_spec(name)
    rng = random.Random(n)
    for _ in range(50):
        x = rng.getrandbits(n)
        data = input_to_message(x, n, spec)
        assert len(data) == (n + 7) // 8
        assert message_to_input(data, n, spec) == x


def test_byte_aligned_inputs_are_big_endian():
    assert input_to_message(0x6162, 16, MD5) == b"ab"
    assert input_to_message(0x6162, 16, SHA3) == b"ab"
    with pytest.raises(ValueError):
        input_to_message(4, 2, MD5)


def test_bit_positions_are_distinct():
    for spec in (MD5, SHA3):
        for n in (5, 16, 19):
            pos = input_bit_positions(n, spec)
            assert len(set(pos)) == n
            assert all(0 <= byte < (n + 7) // 8 for byte, _ in pos)


def test_negative_length():
    with pytest.raises(ValueError):
        pad_md(-1, MD5)
    with pytest.raises(ValueError):
        pad_keccak(-1, SHA3)
