"""
Attenuated correlation of deviation matrices
============================================

NMR measures only the traceless part of the density matrix. The
correlation C compares a measured deviation matrix with the theoretical
one and scales by the remaining signal strength.
"""

import numpy as np

from bakersim import baker_map, correlation_C, correlation_unattenuated, deviation, pseudo_pure
from bakersim.baker import iterate

bm = baker_map(3)
rho0 = pseudo_pure(3, 0.05, 0)      # weakly polarised pseudo-pure input
theory = deviation(iterate(bm, rho0, 1))
initial = deviation(rho0)

rng = np.random.default_rng(0)
noise = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
noise = (noise + noise.conj().T) / 2
noise -= np.trace(noise) / 8 * np.eye(8)

for loss, eta in [(1.0, 0.0), (0.8, 0.0), (0.8, 0.002), (0.5, 0.005)]:
    measured = deviation(loss * (iterate(bm, rho0, 1) - np.eye(8) / 8) + eta * noise + np.eye(8) / 8)
    print(f"signal {loss:.1f}, noise {eta:.3f}:  "
          f"C={correlation_C(theory, measured, initial):.4f}  "
          f"unattenuated={correlation_unattenuated(theory, measured):.4f}")
