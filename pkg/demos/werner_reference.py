"""Werner mixtures as a calibration point.

Prints purity, linear entropy and concurrence on a coarse p grid next to
their closed forms, so any drift in the numerics shows up as a nonzero
last column.
"""
import numpy as np

from ghz_turbulence import concurrence, linear_entropy, purity, werner_state

print(f"{'p':>5} {'purity':>10} {'S_L':>10} {'C':>10} {'C closed':>10} {'|dC|':>9}")
for p in np.linspace(0, 1, 11):
    rho = werner_state(p, 2)
    c = concurrence(rho)
    closed = max(0.0, (3 * p - 1) / 2)
    print(f"{p:5.2f} {purity(rho):10.6f} {linear_entropy(rho):10.6f} {c:10.6f} {closed:10.6f} {abs(c - closed):9.1e}")

# entanglement switches on at p = 1/3
print("\nthree-qubit purity (1 + 7 p^2) / 8:")
for p in (0.0, 0.5, 1.0):
    print(f"  p={p:.1f}  {purity(werner_state(p, 3)):.6f}  vs  {(1 + 7 * p * p) / 8:.6f}")
