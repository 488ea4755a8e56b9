"""Keccak-f on 1920 qubits: theta and chi in place with 320 borrowed qubits.

A naive reversible Keccak round writes its output into a fresh 1600-qubit
state. Here theta and chi overwrite the state instead. Each borrows 320
zeroed qubits as scratch and returns them clean, so the whole permutation
never has more than 1600 + 320 qubits alive. rho and pi only relabel
qubits, and iota flips a few bits.
"""
import random

from groverhash import refhash
from groverhash.circuit import CircuitBuilder
from groverhash.estimate import Estimator
from groverhash.oracles import KeccakState, keccak_f, keccak_theta
from groverhash.sim import ToffoliSimulator

rng = random.Random(1)
states = [[rng.getrandbits(64) for _ in range(25)] for _ in range(8)]

sim = ToffoliSimulator(lanes=len(states))
est = Estimator()
b = CircuitBuilder([sim, est])
reg = b.allocate(1600)
sim.load(reg, [refhash.state_to_int(s) for s in states])

st = KeccakState.from_register(reg)
keccak_theta(b, st)
after_theta = [refhash.int_to_state(v) for v in sim.read(reg)]
print("theta matches the reference on 8 random states:", after_theta == [refhash.theta(s) for s in states])
print("peak width during theta:", est.peak)

out = keccak_f(b, st)
final = [refhash.int_to_state(v) for v in sim.read(out.register())]
print("theta followed by keccak_f matches:", final == [refhash.keccak_f(refhash.theta(s)) for s in states])
report = est.report()
print(f"peak width {report.width}, depth {report.depth:,}, gates {report.total_gates:,}")
