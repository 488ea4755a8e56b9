"""Width and depth of a full Grover attack, for every hash, at 16 input bits.

Depth is the critical path through the gate stream; width is the most qubits
alive at once. A search repeats the same oracle-plus-diffusion block
m = floor(pi/4 * sqrt(2**n / k)) times, so the estimator streams one
iteration and multiplies.
"""
from groverhash.estimate import expected_ratio, function_sweep, sweep

print("function      width        depth")
for r in function_sweep(16).rows:
    print(f"{r.function:12} {r.width:6} {r.depth:12,}")

res = sweep("input_bits", [8, 12, 16, 20, 24, 28, 32], function="md5")
print("\nMD5 depth vs input bits:")
for r in res.rows:
    print(f"  n={r.input_bits:2}  m={r.iterations:6}  depth={r.depth:,}")
print(f"fitted depth ~ 2^({res.fit['exponent']:.4f} n)")

res = sweep("targets", [1, 2, 3, 4, 5], function="md5", input_bits=16)
print("\nmore targets, fewer iterations (n=16):")
for r in res.rows:
    print(f"  k={r.targets}  depth ratio {r.ratio:.4f}  1/sqrt(k) {r.targets ** -0.5:.4f}  m-ratio {expected_ratio(16, r.targets):.4f}")

# The ladder model charges wide controlled gates as chains of Toffolis.
for model in ("unit", "ladder"):
    r = sweep("input_bits", [16], function="sha256", model=model).rows[0]
    print(f"\nsha256 under the {model} model: width {r.width}, depth {r.depth:,}")
