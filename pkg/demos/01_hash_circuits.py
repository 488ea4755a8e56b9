"""Build a reversible hash circuit, run it classically, and check it cleans up.

A hash circuit built from X, CNOT and Toffoli gates maps basis states to
basis states, so a classical simulator that keeps one bit per qubit is
enough to run it. Our simulator packs many inputs into one pass (bit i of
every qubit's integer is input number i), which makes checking a few
hundred messages cheap.
"""
import hashlib

from groverhash.circuit import CircuitBuilder
from groverhash.oracles import allocate_layout, compute_hash, release_layout, simulate_messages
from groverhash.sim import ToffoliSimulator
from groverhash.specs import get_spec

# 1. The one-call route: simulate the circuit on a batch of messages.
messages = [b"abc", b"xyz", b"Q#!"]
for name in ("md5", "sha1", "sha256", "sha3-256"):
    got = simulate_messages(name, messages)
    want = [hashlib.new(name.replace("-", "_"), m).digest() for m in messages]
    print(f"{name:9} {got[0].hex()}  matches hashlib: {got == want}")

# 2. The same thing by hand, to see the moving parts.
spec = get_spec("md5")
sim = ToffoliSimulator(lanes=1)
b = CircuitBuilder([sim])
inp = b.allocate(24)
sim.load(inp, [int.from_bytes(b"abc", "big")])
layout = allocate_layout(b, spec, inp)
print("\nlive qubits after allocating the MD5 layout:", b.width)

# Recording keeps the gates so they can be replayed backwards.
block = b.record(compute_hash, b, layout)
digest = sim.read(block.result)[0].to_bytes(16, "little")
print("digest register holds", digest.hex())

# Uncompute: the adjoint returns every work qubit to zero. Release checks
# that, and would raise ReleaseNotZero if anything were left behind.
b.replay_adjoint(block)
release_layout(b, layout)
print("released cleanly; live qubits now:", b.width, "| peak width:", b.peak_width)
print("gates simulated:", sim.gate_count)
