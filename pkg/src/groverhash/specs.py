"""Hash-family parameterizations and their constant tables.

Tables are static; ``tests/test_constants.py`` re-derives each one from its
generation rule (sines, prime roots, the Keccak LFSR).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .exceptions import UnsupportedHash

MD5_K = (
    0xD76AA478, 0xE8C7B756, 0x242070DB, 0xC1BDCEEE, 0xF57C0FAF, 0x4787C62A, 0xA8304613, 0xFD469501,
    0x698098D8, 0x8B44F7AF, 0xFFFF5BB1, 0x895CD7BE, 0x6B901122, 0xFD987193, 0xA679438E, 0x49B40821,
    0xF61E2562, 0xC040B340, 0x265E5A51, 0xE9B6C7AA, 0xD62F105D, 0x02441453, 0xD8A1E681, 0xE7D3FBC8,
    0x21E1CDE6, 0xC33707D6, 0xF4D50D87, 0x455A14ED, 0xA9E3E905, 0xFCEFA3F8, 0x676F02D9, 0x8D2A4C8A,
    0xFFFA3942, 0x8771F681, 0x6D9D6122, 0xFDE5380C, 0xA4BEEA44, 0x4BDECFA9, 0xF6BB4B60, 0xBEBFBC70,
    0x289B7EC6, 0xEAA127FA, 0xD4EF3085, 0x04881D05, 0xD9D4D039, 0xE6DB99E5, 0x1FA27CF8, 0xC4AC5665,
    0xF4292244, 0x432AFF97, 0xAB9423A7, 0xFC93A039, 0x655B59C3, 0x8F0CCC92, 0xFFEFF47D, 0x85845DD1,
    0x6FA87E4F, 0xFE2CE6E0, 0xA3014314, 0x4E0811A1, 0xF7537E82, 0xBD3AF235, 0x2AD7D2BB, 0xEB86D391,
)

MD5_S = (
    (7, 12, 17, 22) * 4
    + (5, 9, 14, 20) * 4
    + (4, 11, 16, 23) * 4
    + (6, 10, 15, 21) * 4
)

MD5_IV = (0x67452301, 0xEFCDAB89, 0x98BADCFE, 0x10325476)


def md5_message_index(i: int) -> int:
    """Which of the 16 block words round ``i`` consumes."""
    if i < 16:
        return i
    if i < 32:
        return (5 * i + 1) % 16
    if i < 48:
        return (3 * i + 5) % 16
    return (7 * i) % 16


SHA1_IV = (0x67452301, 0xEFCDAB89, 0x98BADCFE, 0x10325476, 0xC3D2E1F0)
SHA1_K = (0x5A827999, 0x6ED9EBA1, 0x8F1BBCDC, 0xCA62C1D6)

SHA256_K = (
    0x428A2F98, 0x71374491, 0xB5C0FBCF, 0xE9B5DBA5, 0x3956C25B, 0x59F111F1, 0x923F82A4, 0xAB1C5ED5,
    0xD807AA98, 0x12835B01, 0x243185BE, 0x550C7DC3, 0x72BE5D74, 0x80DEB1FE, 0x9BDC06A7, 0xC19BF174,
    0xE49B69C1, 0xEFBE4786, 0x0FC19DC6, 0x240CA1CC, 0x2DE92C6F, 0x4A7484AA, 0x5CB0A9DC, 0x76F988DA,
    0x983E5152, 0xA831C66D, 0xB00327C8, 0xBF597FC7, 0xC6E00BF3, 0xD5A79147, 0x06CA6351, 0x14292967,
    0x27B70A85, 0x2E1B2138, 0x4D2C6DFC, 0x53380D13, 0x650A7354, 0x766A0ABB, 0x81C2C92E, 0x92722C85,
    0xA2BFE8A1, 0xA81A664B, 0xC24B8B70, 0xC76C51A3, 0xD192E819, 0xD6990624, 0xF40E3585, 0x106AA070,
    0x19A4C116, 0x1E376C08, 0x2748774C, 0x34B0BCB5, 0x391C0CB3, 0x4ED8AA4A, 0x5B9CCA4F, 0x682E6FF3,
    0x748F82EE, 0x78A5636F, 0x84C87814, 0x8CC70208, 0x90BEFFFA, 0xA4506CEB, 0xBEF9A3F7, 0xC67178F2,
)

SHA512_K = (
    0x428A2F98D728AE22, 0x7137449123EF65CD, 0xB5C0FBCFEC4D3B2F, 0xE9B5DBA58189DBBC,
    0x3956C25BF348B538, 0x59F111F1B605D019, 0x923F82A4AF194F9B, 0xAB1C5ED5DA6D8118,
    0xD807AA98A3030242, 0x12835B0145706FBE, 0x243185BE4EE4B28C, 0x550C7DC3D5FFB4E2,
    0x72BE5D74F27B896F, 0x80DEB1FE3B1696B1, 0x9BDC06A725C71235, 0xC19BF174CF692694,
    0xE49B69C19EF14AD2, 0xEFBE4786384F25E3, 0x0FC19DC68B8CD5B5, 0x240CA1CC77AC9C65,
    0x2DE92C6F592B0275, 0x4A7484AA6EA6E483, 0x5CB0A9DCBD41FBD4, 0x76F988DA831153B5,
    0x983E5152EE66DFAB, 0xA831C66D2DB43210, 0xB00327C898FB213F, 0xBF597FC7BEEF0EE4,
    0xC6E00BF33DA88FC2, 0xD5A79147930AA725, 0x06CA6351E003826F, 0x142929670A0E6E70,
    0x27B70A8546D22FFC, 0x2E1B21385C26C926, 0x4D2C6DFC5AC42AED, 0x53380D139D95B3DF,
    0x650A73548BAF63DE, 0x766A0ABB3C77B2A8, 0x81C2C92E47EDAEE6, 0x92722C851482353B,
    0xA2BFE8A14CF10364, 0xA81A664BBC423001, 0xC24B8B70D0F89791, 0xC76C51A30654BE30,
    0xD192E819D6EF5218, 0xD69906245565A910, 0xF40E35855771202A, 0x106AA07032BBD1B8,
    0x19A4C116B8D2D0C8, 0x1E376C085141AB53, 0x2748774CDF8EEB99, 0x34B0BCB5E19B48A8,
    0x391C0CB3C5C95A63, 0x4ED8AA4AE3418ACB, 0x5B9CCA4F7763E373, 0x682E6FF3D6B2B8A3,
    0x748F82EE5DEFB2FC, 0x78A5636F43172F60, 0x84C87814A1F0AB72, 0x8CC702081A6439EC,
    0x90BEFFFA23631E28, 0xA4506CEBDE82BDE9, 0xBEF9A3F7B2C67915, 0xC67178F2E372532B,
    0xCA273ECEEA26619C, 0xD186B8C721C0C207, 0xEADA7DD6CDE0EB1E, 0xF57D4F7FEE6ED178,
    0x06F067AA72176FBA, 0x0A637DC5A2C898A6, 0x113F9804BEF90DAE, 0x1B710B35131C471B,
    0x28DB77F523047D84, 0x32CAAB7B40C72493, 0x3C9EBE0A15C9BEBC, 0x431D67C49C100D4C,
    0x4CC5D4BECB3E42B6, 0x597F299CFC657E2A, 0x5FCB6FAB3AD6FAEC, 0x6C44198C4A475817,
)

SHA224_IV = (0xC1059ED8, 0x367CD507, 0x3070DD17, 0xF70E5939, 0xFFC00B31, 0x68581511, 0x64F98FA7, 0xBEFA4FA4)
SHA256_IV = (0x6A09E667, 0xBB67AE85, 0x3C6EF372, 0xA54FF53A, 0x510E527F, 0x9B05688C, 0x1F83D9AB, 0x5BE0CD19)
SHA384_IV = (
    0xCBBB9D5DC1059ED8, 0x629A292A367CD507, 0x9159015A3070DD17, 0x152FECD8F70E5939,
    0x67332667FFC00B31, 0x8EB44A8768581511, 0xDB0C2E0D64F98FA7, 0x47B5481DBEFA4FA4,
)
SHA512_IV = (
    0x6A09E667F3BCC908, 0xBB67AE8584CAA73B, 0x3C6EF372FE94F82B, 0xA54FF53A5F1D36F1,
    0x510E527FADE682D1, 0x9B05688C2B3E6C1F, 0x1F83D9ABFB41BD6B, 0x5BE0CD19137E2179,
)
SHA512_224_IV = (
    0x8C3D37C819544DA2, 0x73E1996689DCD4D6, 0x1DFAB7AE32FF9C82, 0x679DD514582F9FCF,
    0x0F6D2B697BD44DA8, 0x77E36F7304C48942, 0x3F9D85A86A1D36C8, 0x1112E6AD91D692A1,
)
SHA512_256_IV = (
    0x22312194FC2BF72C, 0x9F555FA3C84C64C2, 0x2393B86B6F53B151, 0x963877195940EABD,
    0x96283EE2A88EFFE3, 0xBE5E1E2553863992, 0x2B0199FC2C85B8AA, 0x0EB72DDC81C52CA2,
)

# (big Sigma0, big Sigma1, small sigma0, small sigma1): rotate amounts plus an
# optional trailing right shift.
SHA256_SIGMAS = {
    "S0": ((2, 13, 22), None),
    "S1": ((6, 11, 25), None),
    "s0": ((7, 18), 3),
    "s1": ((17, 19), 10),
}
SHA512_SIGMAS = {
    "S0": ((28, 34, 39), None),
    "S1": ((14, 18, 41), None),
    "s0": ((1, 8), 7),
    "s1": ((19, 61), 6),
}

KECCAK_RC = (
    0x0000000000000001, 0x0000000000008082, 0x800000000000808A, 0x8000000080008000,
    0x000000000000808B, 0x0000000080000001, 0x8000000080008081, 0x8000000000008009,
    0x000000000000008A, 0x0000000000000088, 0x0000000080008009, 0x000000008000000A,
    0x000000008000808B, 0x800000000000008B, 0x8000000000008089, 0x8000000000008003,
    0x8000000000008002, 0x8000000000000080, 0x000000000000800A, 0x800000008000000A,
    0x8000000080008081, 0x8000000000008080, 0x0000000080000001, 0x8000000080008008,
)

# Left-rotation offset of lane (x, y), indexed x + 5*y.
KECCAK_RHO = (
    0, 1, 62, 28, 27,
    36, 44, 6, 55, 20,
    3, 10, 43, 25, 39,
    41, 45, 15, 21, 8,
    18, 2, 61, 56, 14,
)

# Column-parity inverse used to clear the theta workspace.
THETA_INVERSE_POSITIONS = (
    0xDE26BC4D789AF134,
    0x09AF135E26BC4D78,
    0xEBC4D789AF135E26,
    0x7135E26BC4D789AF,
    0xCD789AF135E26BC4,
)


@dataclass(frozen=True)
class HashSpec:
    name: str
    family: str  # "md5" | "sha1" | "sha2" | "sha3" | "shake"
    digest_bits: int
    word_bits: int = 32
    rounds: int = 64
    chunk_bits: int = 512
    rate: int = 0
    capacity: int = 0
    suffix: int = 0
    iv: tuple[int, ...] = field(default=(), repr=False)

    @property
    def is_sponge(self) -> bool:
        return self.family in ("sha3", "shake")

    @property
    def bit_order(self) -> str:
        """Order of message bits inside a byte: "msb" for MD families, "lsb" for Keccak."""
        return "lsb" if self.is_sponge else "msb"

    @property
    def length_bytes(self) -> int:
        return 16 if self.chunk_bits == 1024 else 8

    @property
    def round_constants(self) -> tuple[int, ...]:
        if self.family == "md5":
            return MD5_K
        if self.family == "sha1":
            return SHA1_K
        if self.family == "sha2":
            return SHA256_K if self.word_bits == 32 else SHA512_K
        return KECCAK_RC

    @property
    def sigmas(self) -> dict:
        return SHA256_SIGMAS if self.word_bits == 32 else SHA512_SIGMAS


def _sha2(name: str, digest_bits: int, iv: tuple[int, ...]) -> HashSpec:
    if iv[0] >> 32:
        return HashSpec(name, "sha2", digest_bits, 64, 80, 1024, iv=iv)
    return HashSpec(name, "sha2", digest_bits, 32, 64, 512, iv=iv)


def _keccak(name: str, family: str, digest_bits: int, capacity: int) -> HashSpec:
    suffix = 0x06 if family == "sha3" else 0x1F
    return HashSpec(
        name, family, digest_bits, 64, 24, 0, rate=1600 - capacity, capacity=capacity, suffix=suffix
    )


HASHES: dict[str, HashSpec] = {
    s.name: s
    for s in (
        HashSpec("md5", "md5", 128, 32, 64, 512, iv=MD5_IV),
        HashSpec("sha1", "sha1", 160, 32, 80, 512, iv=SHA1_IV),
        _sha2("sha224", 224, SHA224_IV),
        _sha2("sha256", 256, SHA256_IV),
        _sha2("sha384", 384, SHA384_IV),
        _sha2("sha512", 512, SHA512_IV),
        _sha2("sha512-224", 224, SHA512_224_IV),
        _sha2("sha512-256", 256, SHA512_256_IV),
        _keccak("sha3-224", "sha3", 224, 448),
        _keccak("sha3-256", "sha3", 256, 512),
        _keccak("sha3-384", "sha3", 384, 768),
        _keccak("sha3-512", "sha3", 512, 1024),
        _keccak("shake128-256", "shake", 256, 256),
        _keccak("shake256-512", "shake", 512, 512),
    )
}

HASH_NAMES = tuple(HASHES)


def get_spec(name) -> HashSpec:
    if isinstance(name, HashSpec):
        return name
    key = str(name).lower().replace("_", "-").replace("/", "-")
    key = {"sha-1": "sha1", "sha-224": "sha224", "sha-256": "sha256", "sha-384": "sha384",
           "sha-512": "sha512"}.get(key, key)
    try:
        return HASHES[key]
    except KeyError:
        raise UnsupportedHash(f"unknown hash {name!r}; choose from {', '.join(HASH_NAMES)}") from None


def shake_spec(family_bits: int, digest_bits: int) -> HashSpec:
    """SHAKE128/256 with an arbitrary output length (may need several squeezes)."""
    capacity = 2 * family_bits
    return _keccak(f"shake{family_bits}-{digest_bits}", "shake", digest_bits, capacity)
