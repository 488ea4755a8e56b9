"""Reversible word arithmetic and Boolean blocks.

Words are :class:`~groverhash.circuit.Register` views, bit ``i`` on qubit
``i``. Every routine only emits X-family gates, so each is its own adjoint
when replayed in reverse.

The in-place Boolean functions (choice, majority, the MD5 rounds) leave their
sibling operands scrambled; callers wrap them in compute/use/uncompute so the
scrambling is undone. Only the designated output register is meaningful
between those steps.
"""
from __future__ import annotations

from typing import Optional, Sequence

from .circuit import CircuitBuilder, Register
from .exceptions import ConstantOutOfRange, OverlappingOperands, WidthMismatch

__all__ = [
    "xor_constant",
    "xor_register",
    "and_register",
    "not_register",
    "add_in_place",
    "add_constant",
    "choice_in_place",
    "majority_in_place",
    "parity_into",
    "md5_f_in_place",
    "md5_g_in_place",
    "md5_h_in_place",
    "md5_i_in_place",
    "sigma_xor_into",
]


def _same_width(*regs: Register) -> None:
    w = len(regs[0])
    for r in regs[1:]:
        if len(r) != w:
            raise WidthMismatch(f"widths {[len(x) for x in regs]} differ")


def _disjoint(*regs: Register) -> None:
    seen: set[int] = set()
    total = 0
    for r in regs:
        seen.update(r)
        total += len(r)
    if len(seen) != total:
        raise OverlappingOperands("operand registers share qubits")


def xor_constant(b: CircuitBuilder, w: Register, c: int) -> None:
    if not 0 <= c < (1 << len(w)):
        raise ConstantOutOfRange(f"{c:#x} does not fit in {len(w)} bits")
    for i, q in enumerate(w):
        if (c >> i) & 1:
            b.x(q)


def xor_register(b: CircuitBuilder, src: Register, dst: Register) -> None:
    """dst ^= src, one CNOT per bit."""
    _same_width(src, dst)
    _disjoint(src, dst)
    b.cnot_many(src.qubits, dst.qubits)


def and_register(b: CircuitBuilder, x: Register, y: Register, dst: Register) -> None:
    """dst ^= x & y, one CCNOT per bit."""
    _same_width(x, y, dst)
    _disjoint(x, y, dst)
    b.ccnot_many(x.qubits, y.qubits, dst.qubits)


def not_register(b: CircuitBuilder, w: Register) -> None:
    for q in w:
        b.x(q)


def add_in_place(b: CircuitBuilder, addend: Register, acc: Register) -> None:
    """acc = (acc + addend) mod 2**width without ancillas.

    Takahashi-Tani-Kunihiro ripple-carry adder, carry-out dropped. The addend
    is borrowed as carry storage and handed back unchanged.
    """
    _same_width(addend, acc)
    _disjoint(addend, acc)
    xs, ys = addend.qubits, acc.qubits
    n = len(xs)
    cnot, ccnot = b.cnot, b.ccnot
    if n > 1:
        for i in range(1, n):
            cnot(xs[i], ys[i])
        for i in range(n - 2, 0, -1):
            cnot(xs[i], xs[i + 1])
        for i in range(n - 1):
            ccnot(xs[i], ys[i], xs[i + 1])
        for i in range(n - 1, 0, -1):
            cnot(xs[i], ys[i])
            ccnot(xs[i - 1], ys[i - 1], xs[i])
        for i in range(1, n - 1):
            cnot(xs[i], xs[i + 1])
        for i in range(1, n):
            cnot(xs[i], ys[i])
    if n:
        cnot(xs[0], ys[0])


def add_constant(b: CircuitBuilder, acc: Register, c: int, temp: Register) -> None:
    """acc = (acc + c) mod 2**width, staging ``c`` in the zeroed ``temp`` and clearing it again."""
    _same_width(acc, temp)
    _disjoint(acc, temp)
    xor_constant(b, temp, c)
    add_in_place(b, temp, acc)
    xor_constant(b, temp, c)


def choice_in_place(b: CircuitBuilder, sel: Register, x: Register, y: Register) -> None:
    """y = (sel & x) | (~sel & y); leaves x holding x ^ y."""
    _same_width(sel, x, y)
    _disjoint(sel, x, y)
    for s, p, q in zip(sel, x, y):
        b.cnot(q, p)
        b.ccnot(s, p, q)


def majority_in_place(b: CircuitBuilder, x: Register, y: Register, z: Register) -> None:
    """z = Maj(x, y, z); leaves x ^ z and y ^ z in x and y."""
    _same_width(x, y, z)
    _disjoint(x, y, z)
    for p, q, r in zip(x, y, z):
        b.cnot(r, p)
        b.cnot(r, q)
        b.ccnot(p, q, r)


def parity_into(b: CircuitBuilder, x: Register, y: Register, dst: Register) -> None:
    """dst ^= x ^ y."""
    xor_register(b, x, dst)
    xor_register(b, y, dst)


def md5_f_in_place(b: CircuitBuilder, x: Register, y: Register, z: Register) -> None:
    """z = F(x, y, z) = (x & y) | (~x & z)."""
    choice_in_place(b, x, y, z)


def md5_g_in_place(b: CircuitBuilder, x: Register, y: Register, z: Register) -> None:
    """y = G(x, y, z) = (x & z) | (y & ~z), selecting on z."""
    choice_in_place(b, z, x, y)


def md5_h_in_place(b: CircuitBuilder, x: Register, y: Register, z: Register) -> None:
    """z = x ^ y ^ z."""
    parity_into(b, x, y, z)


def md5_i_in_place(b: CircuitBuilder, x: Register, y: Register, z: Register) -> None:
    """y = I(x, y, z) = y ^ (x | ~z).

    Uses y ^ (x | ~z) = ~y ^ (~x & z): flip y, then a Toffoli with x
    zero-conjugated.
    """
    _same_width(x, y, z)
    _disjoint(x, y, z)
    not_register(b, y)
    b.conjugate(lambda: not_register(b, x), lambda: and_register(b, x, z, y))


def sigma_xor_into(
    b: CircuitBuilder,
    x: Register,
    rotations: Sequence[int],
    shift: Optional[int],
    dst: Register,
) -> None:
    """dst ^= ROTR(x, r1) ^ ROTR(x, r2) ^ ... ^ SHR(x, shift).

    Rotations are re-indexed views; the shift touches only the surviving bits.
    """
    _same_width(x, dst)
    _disjoint(x, dst)
    for r in rotations:
        xor_register(b, x.rotr(r), dst)
    if shift is not None:
        w = len(x)
        for i in range(w - shift):
            b.cnot(x[i + shift], dst[i])
