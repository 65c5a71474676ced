"""
Echo overlap under an x rotation of the last qubit
==================================================

Forward map, rotate qubit 3 by theta, inverse map. The overlap between
the perturbed and unperturbed final states drops as theta grows. The
single |000> input gives the same curve as the average over all eight
basis inputs.
"""

import numpy as np

from bakersim import RotXPert, baker_map, basis_averaged_overlap

bm = baker_map(3)
grid = np.linspace(0, np.pi / 4, 9)
curve = basis_averaged_overlap(bm, RotXPert(3, 0.0), grid)

print(f"{'theta':>8} {'|000>':>12} {'average':>12}")
for t, a, b in zip(curve.grid, curve.overlap_000, curve.overlap_avg):
    print(f"{t:8.4f} {a:12.8f} {b:12.8f}")

# The angles used in the NMR runs.
paper = [np.pi / 32, np.pi / 16, np.pi / 8, np.pi / 4]
print(basis_averaged_overlap(bm, RotXPert(3, 0.0), paper).overlap_000)

# Optional plot.
try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None
if plt is not None:
    plt.plot(curve.grid, curve.overlap_000, "-", label="|000>")
    plt.plot(curve.grid, curve.overlap_avg, "--", label="basis average")
    plt.xlabel("rotation angle")
    plt.ylabel("Tr(rho_f rho_f')")
    plt.legend()
    plt.savefig("rotation_sensitivity.png")
