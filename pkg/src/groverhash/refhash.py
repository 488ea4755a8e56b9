"""Classical MD5, SHA-1, SHA-2, SHA-3 and SHAKE, written for auditability rather than speed.

Every circuit in :mod:`groverhash.oracles` is validated against these. All
functions accept bit-granular messages: ``data`` holds the bits and ``nbits``
says how many are used. MD families read bits most-significant first within
a byte; Keccak reads them least-significant first (the FIPS 202 convention).
"""
from __future__ import annotations

from .specs import (
    KECCAK_RC,
    KECCAK_RHO,
    MD5_K,
    MD5_S,
    SHA1_K,
    THETA_INVERSE_POSITIONS,
    HashSpec,
    get_spec,
    md5_message_index,
)

M32 = 0xFFFFFFFF
M64 = (1 << 64) - 1


def _rotl(v: int, r: int, w: int) -> int:
    mask = (1 << w) - 1
    r %= w
    return ((v << r) | (v >> (w - r))) & mask


def _rotr(v: int, r: int, w: int) -> int:
    return _rotl(v, w - r % w, w)


def _msb_bits(data: bytes, nbits: int) -> bytes:
    """Keep the first ``nbits`` bits (MSB-first), zeroing the rest of the last byte."""
    nbytes = (nbits + 7) // 8
    if len(data) < nbytes:
        raise ValueError(f"{len(data)} bytes cannot hold {nbits} bits")
    out = bytearray(data[:nbytes])
    if nbits % 8:
        out[-1] &= (0xFF << (8 - nbits % 8)) & 0xFF
    return bytes(out)


def md_pad(data: bytes, nbits: int, chunk_bytes: int, length_bytes: int, byteorder: str) -> bytes:
    msg = bytearray(_msb_bits(data, nbits))
    if nbits % 8:
        msg[-1] |= 0x80 >> (nbits % 8)
    else:
        msg.append(0x80)
    while len(msg) % chunk_bytes != chunk_bytes - length_bytes:
        msg.append(0)
    msg += nbits.to_bytes(length_bytes, byteorder)
    return bytes(msg)


# -- MD5 -------------------------------------------------------------------


def md5(data: bytes, nbits: int | None = None) -> bytes:
    nbits = len(data) * 8 if nbits is None else nbits
    padded = md_pad(data, nbits, 64, 8, "little")
    a0, b0, c0, d0 = 0x67452301, 0xEFCDAB89, 0x98BADCFE, 0x10325476
    for off in range(0, len(padded), 64):
        w = [int.from_bytes(padded[off + 4 * j : off + 4 * j + 4], "little") for j in range(16)]
        a, b, c, d = a0, b0, c0, d0
        for i in range(64):
            if i < 16:
                f = (b & c) | (~b & d)
            elif i < 32:
                f = (b & d) | (c & ~d)
            elif i < 48:
                f = b ^ c ^ d
            else:
                f = c ^ (b | (~d & M32))
            f = (f + a + MD5_K[i] + w[md5_message_index(i)]) & M32
            a, d, c = d, c, b
            b = (b + _rotl(f, MD5_S[i], 32)) & M32
        a0 = (a0 + a) & M32
        b0 = (b0 + b) & M32
        c0 = (c0 + c) & M32
        d0 = (d0 + d) & M32
    return b"".join(v.to_bytes(4, "little") for v in (a0, b0, c0, d0))


# -- SHA-1 -----------------------------------------------------------------


def sha1_schedule(block: bytes) -> list[int]:
    w = [int.from_bytes(block[4 * j : 4 * j + 4], "big") for j in range(16)]
    for i in range(16, 80):
        w.append(_rotl(w[i - 3] ^ w[i - 8] ^ w[i - 14] ^ w[i - 16], 1, 32))
    return w


def sha1(data: bytes, nbits: int | None = None) -> bytes:
    nbits = len(data) * 8 if nbits is None else nbits
    padded = md_pad(data, nbits, 64, 8, "big")
    h = [0x67452301, 0xEFCDAB89, 0x98BADCFE, 0x10325476, 0xC3D2E1F0]
    for off in range(0, len(padded), 64):
        w = sha1_schedule(padded[off : off + 64])
        a, b, c, d, e = h
        for i in range(80):
            if i < 20:
                f = (b & c) | (~b & d)
            elif i < 40 or i >= 60:
                f = b ^ c ^ d
            else:
                f = (b & c) | (b & d) | (c & d)
            t = (_rotl(a, 5, 32) + f + e + SHA1_K[i // 20] + w[i]) & M32
            a, b, c, d, e = t, a, _rotl(b, 30, 32), c, d
        h = [(x + y) & M32 for x, y in zip(h, (a, b, c, d, e))]
    return b"".join(v.to_bytes(4, "big") for v in h)


# -- SHA-2 -----------------------------------------------------------------


def _sigma(x: int, rots, shift, w: int) -> int:
    v = 0
    for r in rots:
        v ^= _rotr(x, r, w)
    if shift is not None:
        v ^= x >> shift
    return v


def sha2_schedule(block: bytes, spec: HashSpec) -> list[int]:
    wb = spec.word_bits
    nb = wb // 8
    mask = (1 << wb) - 1
    sig = spec.sigmas
    w = [int.from_bytes(block[nb * j : nb * j + nb], "big") for j in range(16)]
    for i in range(16, spec.rounds):
        s0 = _sigma(w[i - 15], *sig["s0"], wb)
        s1 = _sigma(w[i - 2], *sig["s1"], wb)
        w.append((w[i - 16] + s0 + w[i - 7] + s1) & mask)
    return w


def sha2_compress(h: list[int], w: list[int], spec: HashSpec) -> list[int]:
    wb = spec.word_bits
    mask = (1 << wb) - 1
    sig = spec.sigmas
    k = spec.round_constants
    a, b, c, d, e, f, g, hh = h
    for i in range(spec.rounds):
        t1 = (hh + _sigma(e, *sig["S1"], wb) + ((e & f) ^ (~e & g)) + k[i] + w[i]) & mask
        t2 = (_sigma(a, *sig["S0"], wb) + ((a & b) ^ (a & c) ^ (b & c))) & mask
        hh, g, f, e = g, f, e, (d + t1) & mask
        d, c, b, a = c, b, a, (t1 + t2) & mask
    return [(x + y) & mask for x, y in zip(h, (a, b, c, d, e, f, g, hh))]


def sha2(spec: HashSpec, data: bytes, nbits: int | None = None, iv=None) -> bytes:
    nbits = len(data) * 8 if nbits is None else nbits
    cb = spec.chunk_bits // 8
    padded = md_pad(data, nbits, cb, spec.length_bytes, "big")
    h = list(spec.iv if iv is None else iv)
    for off in range(0, len(padded), cb):
        w = sha2_schedule(padded[off : off + cb], spec)
        h = sha2_compress(h, w, spec)
    nb = spec.word_bits // 8
    return b"".join(v.to_bytes(nb, "big") for v in h)[: spec.digest_bits // 8]


# -- Keccak ----------------------------------------------------------------
# State: list of 25 lanes, lane (x, y) at index x + 5*y, bit z of a lane is
# state bit 64*(x + 5*y) + z.


def theta(a: list[int]) -> list[int]:
    c = [a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20] for x in range(5)]
    d = [c[(x - 1) % 5] ^ _rotl(c[(x + 1) % 5], 1, 64) for x in range(5)]
    return [a[i] ^ d[i % 5] for i in range(25)]


def theta_inverse(a: list[int]) -> list[int]:
    c = [a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20] for x in range(5)]
    d = [0] * 5
    for z in range(64):
        for off in range(5):
            if (THETA_INVERSE_POSITIONS[off] >> z) & 1:
                for x in range(5):
                    d[x] ^= _rotl(c[(x - off) % 5], z, 64)
    return [a[i] ^ d[i % 5] for i in range(25)]


def rho(a: list[int]) -> list[int]:
    return [_rotl(a[i], KECCAK_RHO[i], 64) for i in range(25)]


def rho_inverse(a: list[int]) -> list[int]:
    return [_rotr(a[i], KECCAK_RHO[i], 64) for i in range(25)]


def pi(a: list[int]) -> list[int]:
    b = [0] * 25
    for x in range(5):
        for y in range(5):
            b[y + 5 * ((2 * x + 3 * y) % 5)] = a[x + 5 * y]
    return b


def pi_inverse(b: list[int]) -> list[int]:
    a = [0] * 25
    for x in range(5):
        for y in range(5):
            a[x + 5 * y] = b[y + 5 * ((2 * x + 3 * y) % 5)]
    return a


def chi(a: list[int]) -> list[int]:
    out = [0] * 25
    for y in range(5):
        row = a[5 * y : 5 * y + 5]
        for x in range(5):
            out[x + 5 * y] = row[x] ^ (~row[(x + 1) % 5] & M64 & row[(x + 2) % 5])
    return out


def chi_inverse(a: list[int]) -> list[int]:
    # Walk x = 0, 3, 1, 4, 2, 0 recovering one input lane at a time.
    out = list(a)
    for y in range(5):
        c = a[5 * y : 5 * y + 5]
        row = list(c)
        for step in range(6):
            x = (3 * step) % 5
            row[x] = c[x] ^ (row[(x + 2) % 5] & ~c[(x + 1) % 5] & M64)
        out[5 * y : 5 * y + 5] = row
    return out


def iota(a: list[int], rnd: int) -> list[int]:
    out = list(a)
    out[0] ^= KECCAK_RC[rnd]
    return out


def keccak_round(a: list[int], rnd: int) -> list[int]:
    return iota(chi(pi(rho(theta(a)))), rnd)


def keccak_f(a: list[int]) -> list[int]:
    for rnd in range(24):
        a = keccak_round(a, rnd)
    return a


def keccak_f_inverse(a: list[int]) -> list[int]:
    for rnd in reversed(range(24)):
        a = theta_inverse(rho_inverse(pi_inverse(chi_inverse(iota(a, rnd)))))
    return a


def keccak_f_monolithic(a: list[int]) -> list[int]:
    """Independent single-function Keccak-f[1600], used to check the composed parts."""
    st = {(x, y): a[x + 5 * y] for x in range(5) for y in range(5)}
    for rc in KECCAK_RC:
        c = [st[x, 0] ^ st[x, 1] ^ st[x, 2] ^ st[x, 3] ^ st[x, 4] for x in range(5)]
        for x in range(5):
            dx = c[(x + 4) % 5] ^ _rotl(c[(x + 1) % 5], 1, 64)
            for y in range(5):
                st[x, y] ^= dx
        # rho and pi by walking the (x, y) -> (y, 2x + 3y) orbit from (1, 0)
        x, y = 1, 0
        cur = st[x, y]
        for t in range(24):
            x, y = y, (2 * x + 3 * y) % 5
            cur, st[x, y] = st[x, y], _rotl(cur, (t + 1) * (t + 2) // 2, 64)
        for y in range(5):
            row = [st[x, y] for x in range(5)]
            for x in range(5):
                st[x, y] = row[x] ^ ((~row[(x + 1) % 5]) & row[(x + 2) % 5] & M64)
        st[0, 0] ^= rc
    return [st[i % 5, i // 5] for i in range(25)]


def state_to_int(a: list[int]) -> int:
    return sum(lane << (64 * i) for i, lane in enumerate(a))


def int_to_state(v: int) -> list[int]:
    return [(v >> (64 * i)) & M64 for i in range(25)]


def keccak_pad(data: bytes, nbits: int, rate: int, suffix: int) -> bytes:
    """pad10*1 after the domain bits; ``suffix`` is the delimited byte (0x06 SHA-3, 0x1F SHAKE)."""
    bits = [(data[i // 8] >> (i % 8)) & 1 for i in range(nbits)]
    top = suffix.bit_length() - 1
    bits += [(suffix >> j) & 1 for j in range(top + 1)]
    bits += [0] * (-(len(bits) + 1) % rate)
    bits.append(1)
    out = bytearray(len(bits) // 8)
    for i, b in enumerate(bits):
        out[i // 8] |= b << (i % 8)
    return bytes(out)


def sponge(data: bytes, nbits: int, rate: int, suffix: int, out_bits: int) -> bytes:
    padded = keccak_pad(data, nbits, rate, suffix)
    rb = rate // 8
    st = [0] * 25
    for off in range(0, len(padded), rb):
        blk = padded[off : off + rb] + bytes(200 - rb)
        st = [st[i] ^ int.from_bytes(blk[8 * i : 8 * i + 8], "little") for i in range(25)]
        st = keccak_f(st)
    out = b""
    while len(out) * 8 < out_bits:
        out += b"".join(v.to_bytes(8, "little") for v in st)[:rb]
        if len(out) * 8 < out_bits:
            st = keccak_f(st)
    return out[: out_bits // 8]


# -- dispatch --------------------------------------------------------------


def classical_hash(spec, data: bytes, nbits: int | None = None) -> bytes:
    """Digest of the first ``nbits`` bits of ``data`` (all of it by default)."""
    spec = get_spec(spec)
    nbits = len(data) * 8 if nbits is None else nbits
    if nbits < 0 or nbits > 8 * len(data):
        raise ValueError(f"nbits={nbits} does not fit in {len(data)} bytes")
    if spec.family == "md5":
        return md5(data, nbits)
    if spec.family == "sha1":
        return sha1(data, nbits)
    if spec.family == "sha2":
        return sha2(spec, data, nbits)
    return sponge(data, nbits, spec.rate, spec.suffix, spec.digest_bits)


def sha512t_iv(t: int) -> tuple[int, ...]:
    """IV generation for SHA-512/t: SHA-512 of the ASCII name under a modified IV."""
    from .specs import HASHES

    base = HASHES["sha512"]
    iv = tuple(v ^ 0xA5A5A5A5A5A5A5A5 for v in base.iv)
    digest = sha2(base, f"SHA-512/{t}".encode(), iv=iv)
    return tuple(int.from_bytes(digest[8 * i : 8 * i + 8], "big") for i in range(8))
