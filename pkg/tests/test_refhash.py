import random

import pytest

from groverhash import refhash
from groverhash.refhash import classical_hash
from groverhash.specs import HASH_NAMES, get_spec, shake_spec

from _corpus import ABC_DIGESTS, BIT_VECTORS, EMPTY_DIGESTS, LONG448, hashlib_digest

SHA3_512_ABC = (
    "b751850b1a57168a5693cd924b6b096e08f621827444f70d884f5d0240d2712e"
    "10e116e9192af3c91a7ec57647e3934057340b4cf408d5a56592f8274eec53f0"
)


def rand_state(rng):
    return [rng.getrandbits(64) for _ in range(25)]


@pytest.mark.parametrize("name,hexd", sorted(ABC_DIGESTS.items()))
def test_abc(name, hexd):
    assert classical_hash(name, b"abc").hex() == hexd


@pytest.mark.parametrize("name,hexd", sorted(EMPTY_DIGESTS.items()))
def test_empty(name, hexd):
    assert classical_hash(name, b"").hex() == hexd


def test_sha3_512_abc():
    assert classical_hash("sha3-512", b"abc").hex() == SHA3_512_ABC


def test_shake_empty_prefix():
    assert classical_hash("shake128-256", b"").hex().startswith("7f9c2ba4e88f827d61604550760585")


@pytest.mark.parametrize("name,vec", sorted(BIT_VECTORS.items()))
def test_bit_granular(name, vec):
    data, hexd = vec
    assert classical_hash(name, data, 5).hex() == hexd


@pytest.mark.parametrize("name", HASH_NAMES)
def test_against_hashlib(name):
    rng = random.Random(name)
    for size in (0, 1, 3, 55, 56, 63, 64, 111, 112, 135, 136, 200, 300):
        data = rng.randbytes(size)
        assert classical_hash(name, data) == hashlib_digest(name, data), size
    assert classical_hash(name, LONG448) == hashlib_digest(name, LONG448)


def test_long_shake_output():
    spec = shake_spec(128, 4096)
    import hashlib

    assert classical_hash(spec, b"xyz") == hashlib.shake_128(b"xyz").digest(512)


def test_bits_beyond_length_are_ignored():
    assert classical_hash("sha256", b"\xff", 3) == classical_hash("sha256", b"\xe0", 3)
    assert classical_hash("sha3-256", b"\xff", 3) == classical_hash("sha3-256", b"\x07", 3)
    with pytest.raises(ValueError):
        classical_hash("md5", b"a", 9)


def test_digest_lengths():
    for name in HASH_NAMES:
        assert len(classical_hash(name, b"q")) * 8 == get_spec(name).digest_bits


# -- Keccak parts ------------------------------------------------------------


@pytest.mark.parametrize(
    "fwd,inv",
    [
        (refhash.theta, refhash.theta_inverse),
        (refhash.rho, refhash.rho_inverse),
        (refhash.pi, refhash.pi_inverse),
        (refhash.chi, refhash.chi_inverse),
        (refhash.keccak_f, refhash.keccak_f_inverse),
    ],
)
def test_inverses(fwd, inv):
    rng = random.Random(fwd.__name__)
    count = 50 if fwd is refhash.keccak_f else 1000
    for _ in range(count):
        s = rand_state(rng)
        assert inv(fwd(s)) == s
        assert fwd(inv(s)) == s


def test_zero_fixed_points():
    z = [0] * 25
    assert refhash.theta(z) == z
    assert refhash.chi(z) == z
    assert refhash.iota(z, 0) == [1] + [0] * 24


def test_composed_equals_monolithic():
    rng = random.Random(7)
    for _ in range(20):
        s = rand_state(rng)
        assert refhash.keccak_f(s) == refhash.keccak_f_monolithic(s)


def test_keccak_f_zero_state():
    # first lane of Keccak-f[1600] applied to the all-zero state
    assert refhash.keccak_f([0] * 25)[0] == 0xF1258F7940E1DDE7


def test_state_int_round_trip():
    s = rand_state(random.Random(3))
    assert refhash.int_to_state(refhash.state_to_int(s)) == s
