import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from groverhash.circuit import CircuitBuilder
from groverhash.exceptions import ConstantOutOfRange, OverlappingOperands, WidthMismatch
from groverhash.refhash import _sigma
from groverhash.revarith import (
    add_constant,
    add_in_place,
    and_register,
    choice_in_place,
    majority_in_place,
    md5_f_in_place,
    md5_g_in_place,
    md5_h_in_place,
    md5_i_in_place,
    not_register,
    parity_into,
    sigma_xor_into,
    xor_constant,
    xor_register,
)
from groverhash.specs import MD5_K, SHA256_SIGMAS, SHA512_SIGMAS

from _helpers import run_on_registers

M32 = 0xFFFFFFFF


def words(n, bits, seed):
    rng = random.Random(seed)
    return [rng.getrandbits(bits) for _ in range(n)]


# -- XOR / AND / NOT ------------------------------------------------------


@pytest.mark.parametrize("init,c,out", [(0, 0x5A, 0x5A), (M32, M32, 0)])
def test_xor_constant(init, c, out):
    sim, _, (w,) = run_on_registers(lambda b, w: xor_constant(b, w, c), [32], [[init]])
    assert sim.read(w) == [out]


def test_xor_constant_involution_and_range():
    sim, b, (w,) = run_on_registers(lambda b, w: (xor_constant(b, w, 7), xor_constant(b, w, 7)), [8], [[99]])
    assert sim.read(w) == [99]
    with pytest.raises(ConstantOutOfRange):
        xor_constant(b, w, 256)


def test_xor_register_random_64():
    xs, ys = words(200, 64, 1), words(200, 64, 2)
    sim, _, (s, d) = run_on_registers(lambda b, s, d: xor_register(b, s, d), [64, 64], [xs, ys])
    assert sim.read(d) == [x ^ y for x, y in zip(xs, ys)]
    assert sim.read(s) == xs


def test_xor_register_examples_and_involution():
    sim, _, (s, d) = run_on_registers(lambda b, s, d: xor_register(b, s, d), [4, 4], [[0b1010], [0]])
    assert sim.read(d) == [0b1010]
    sim, _, (s, d) = run_on_registers(
        lambda b, s, d: (xor_register(b, s, d), xor_register(b, s, d)), [4, 4], [[5], [9]]
    )
    assert sim.read(d) == [9]


def test_and_register():
    sim, _, (a, c, d) = run_on_registers(lambda b, a, c, d: and_register(b, a, c, d), [4, 4, 4], [[0b1100], [0b1010], [0]])
    assert sim.read(d) == [0b1000]
    sim, _, (a, c, d) = run_on_registers(
        lambda b, a, c, d: and_register(b, a, c, d), [4, 4, 4], [[0b1100], [0b1010], [0b1000]]
    )
    assert sim.read(d) == [0]
    sim, _, (a, c, d) = run_on_registers(lambda b, a, c, d: and_register(b, a, c, d), [4, 4, 4], [[0], [15], [6]])
    assert sim.read(d) == [6]


def test_not_register():
    sim, _, (w,) = run_on_registers(lambda b, w: not_register(b, w), [4], [[0b0101]])
    assert sim.read(w) == [0b1010]
    sim, _, (w,) = run_on_registers(lambda b, w: not_register(b, w), [32], [[0]])
    assert sim.read(w) == [M32]


def test_operand_checks():
    b = CircuitBuilder()
    x, y = b.allocate(4), b.allocate(8)
    with pytest.raises(WidthMismatch):
        xor_register(b, x, y)
    with pytest.raises(OverlappingOperands):
        xor_register(b, x, x.rotl(1))
    with pytest.raises(OverlappingOperands):
        add_in_place(b, y[:4], y[2:6])
    with pytest.raises(WidthMismatch):
        and_register(b, x, x, y)


# -- adders ---------------------------------------------------------------


@pytest.mark.parametrize("a,c,out", [(3, 5, 8), (1, 15, 0)])
def test_add_examples(a, c, out):
    sim, _, (x, y) = run_on_registers(lambda b, x, y: add_in_place(b, x, y), [4, 4], [[a], [c]])
    assert sim.read(y) == [out]
    assert sim.read(x) == [a]


@pytest.mark.parametrize("width", [1, 2, 3, 4])
def test_add_exhaustive(width):
    pairs = [(a, c) for a in range(1 << width) for c in range(1 << width)]
    sim, _, (x, y) = run_on_registers(
        lambda b, x, y: add_in_place(b, x, y), [width] * 2, [[p[0] for p in pairs], [p[1] for p in pairs]]
    )
    assert sim.read(y) == [(a + c) % (1 << width) for a, c in pairs]
    assert sim.read(x) == [a for a, _ in pairs]


@pytest.mark.parametrize("width", [32, 64])
def test_add_random_wide(width):
    xs, ys = words(10_000, width, width), words(10_000, width, width + 1)
    sim, _, (x, y) = run_on_registers(lambda b, x, y: add_in_place(b, x, y), [width] * 2, [xs, ys])
    assert sim.read(y) == [(a + c) % (1 << width) for a, c in zip(xs, ys)]
    assert sim.read(x) == xs


def test_add_adjoint_subtracts():
    xs, ys = words(500, 32, 5), words(500, 32, 6)

    def body(b, x, y):
        blk = b.record(add_in_place, b, x, y)
        b.replay_adjoint(blk)
        b.replay_adjoint(blk)

    sim, _, (x, y) = run_on_registers(body, [32, 32], [xs, ys])
    assert sim.read(y) == [(c - a) % (1 << 32) for a, c in zip(xs, ys)]


def test_add_uses_no_ancilla():
    b = CircuitBuilder()
    x, y = b.allocate(32), b.allocate(32)
    add_in_place(b, x, y)
    assert b.peak_width == 64


def test_add_constant_md5_k0_and_temp_clean():
    def body(b, acc, temp):
        add_constant(b, acc, MD5_K[0], temp)
        b.release(temp)

    sim, _, (acc, _) = run_on_registers(body, [32], [[0]], extra_zero=[32])
    assert sim.read(acc) == [0xD76AA478]


def test_add_constant_random_and_zero():
    accs = words(1000, 32, 11)
    consts = words(20, 32, 12) + [0]
    for c in consts:
        def body(b, acc, temp):
            add_constant(b, acc, c, temp)
            b.release(temp)

        sim, _, (acc, _) = run_on_registers(body, [32], [accs], extra_zero=[32])
        assert sim.read(acc) == [(a + c) & M32 for a in accs]


# -- in-place Boolean functions -------------------------------------------


def _triples(n=300, bits=32, seed=0):
    return words(n, bits, seed), words(n, bits, seed + 1), words(n, bits, seed + 2)


def _compute_then_undo(fn, out_index, expected):
    """Check the designated output, then that conjugating restores every operand."""
    a, b_, c = _triples()
    sim, _, regs = run_on_registers(lambda b, *r: fn(b, *r), [32] * 3, [a, b_, c])
    assert sim.read(regs[out_index]) == [expected(x, y, z) for x, y, z in zip(a, b_, c)]

    def wrapped(b, x, y, z):
        blk = b.record(fn, b, x, y, z)
        b.replay_adjoint(blk)

    sim, _, regs = run_on_registers(wrapped, [32] * 3, [a, b_, c])
    assert [sim.read(r) for r in regs] == [a, b_, c]


def test_choice():
    _compute_then_undo(choice_in_place, 2, lambda s, x, y: (s & x) | (~s & y & M32))
    sim, _, (s, x, y) = run_on_registers(lambda b, *r: choice_in_place(b, *r), [8] * 3, [[255, 0], [0x3C, 0x3C], [0x81, 0x81]])
    assert sim.read(y) == [0x3C, 0x81]


def test_majority():
    _compute_then_undo(majority_in_place, 2, lambda a, b, c: (a & b) ^ (a & c) ^ (b & c))
    sim, _, (a, b_, c) = run_on_registers(lambda b, *r: majority_in_place(b, *r), [8] * 3, [[7, 0], [7, 255], [0x50, 0x50]])
    assert sim.read(c) == [7, 0x50]


def test_parity():
    _compute_then_undo(parity_into, 2, lambda a, b, c: a ^ b ^ c)
    sim, _, (a, b_, c) = run_on_registers(lambda b, *r: parity_into(b, *r), [8] * 3, [[9], [9], [4]])
    assert sim.read(c) == [4]


def test_md5_functions():
    _compute_then_undo(md5_f_in_place, 2, lambda x, y, z: (x & y) | (~x & z & M32))
    _compute_then_undo(md5_g_in_place, 1, lambda x, y, z: (x & z) | (y & ~z & M32))
    _compute_then_undo(md5_h_in_place, 2, lambda x, y, z: x ^ y ^ z)
    _compute_then_undo(md5_i_in_place, 1, lambda x, y, z: y ^ ((x | ~z) & M32))


def test_md5_g_and_i_examples():
    sim, _, (x, y, z) = run_on_registers(lambda b, *r: md5_g_in_place(b, *r), [32] * 3, [[0x1234], [0xFFFF0000], [M32]])
    assert sim.read(y) == [0x1234]
    sim, _, (x, y, z) = run_on_registers(lambda b, *r: md5_i_in_place(b, *r), [32] * 3, [[M32], [0x0F0F], [0x77]])
    assert sim.read(y) == [0x0F0F ^ M32]


@pytest.mark.parametrize("name", ["S0", "S1", "s0", "s1"])
@pytest.mark.parametrize("table,bits", [(SHA256_SIGMAS, 32), (SHA512_SIGMAS, 64)])
def test_sigma_matches_reference(name, table, bits):
    rots, shift = table[name]
    xs = words(300, bits, 3)
    sim, _, (x, d) = run_on_registers(lambda b, x, d: sigma_xor_into(b, x, rots, shift, d), [bits], [xs], extra_zero=[bits])
    assert sim.read(d) == [_sigma(v, rots, shift, bits) for v in xs]


def test_sigma_trivial_cases():
    sim, _, (x, d) = run_on_registers(lambda b, x, d: sigma_xor_into(b, x, (0,), None, d), [16, 16], [[0x1234], [0]])
    assert sim.read(d) == [0x1234]
    sim, _, (x, d) = run_on_registers(lambda b, x, d: sigma_xor_into(b, x, (2, 13, 22), None, d), [32, 32], [[0], [77]])
    assert sim.read(d) == [77]


@given(st.integers(0, M32), st.integers(0, M32))
@settings(max_examples=40, deadline=None)
def test_add_property(a, c):
    sim, _, (x, y) = run_on_registers(lambda b, x, y: add_in_place(b, x, y), [32, 32], [[a], [c]])
    assert sim.read(y) == [(a + c) & M32]
