"""Search for an MD5 preimage among 2**8 inputs.

An 801-qubit state vector is far beyond any computer, but it is not needed.
Between oracle calls every work qubit is back at zero, so the state is just
256 real amplitudes, one per input. The oracle's sign pattern comes from
running the real circuit on all 256 inputs at once. The diffusion step
reflects each amplitude about the mean.
"""
import numpy as np

from groverhash.estimate import planted_digest
from groverhash.grover import iteration_count, success_probability
from groverhash.sim import grover_amplitudes, grover_search, phase_pattern, run_trials

n, secret = 8, 0x5A
digest = planted_digest("md5", n, secret)
print("target digest:", digest.hex())

marked = phase_pattern("md5", n, digest)
print("inputs the oracle circuit marks:", [hex(x) for x in np.flatnonzero(marked)])

m = iteration_count(n)
for steps in (0, 3, 6, m, 2 * m):
    p = grover_amplitudes(marked, steps)[secret] ** 2
    print(f"after {steps:2} iterations P(measure {secret:#x}) = {p:.4f}")
print(f"formula for m={m}: {success_probability(n, 1, m):.5f}")

out = grover_search("md5", n, digest, seed=7)
print(f"\nmeasured {out.measured:#x} on attempt {out.attempts}, success={out.success}")
print("first-try success over 100 seeded runs:", run_trials("md5", n, digest, 100, seed=1))
