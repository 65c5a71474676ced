"""
Dephasing between forward and inverse map
=========================================

A field gradient on qubit 3, averaged over the sample, removes that
qubit's coherences. After the inverse map the state has exactly one bit
of entropy. The two equal populations sit on |000> and |100>, because
the map carries a phase flip of the last qubit onto a bit flip of the
first.
"""

import numpy as np

from bakersim import Dephase, baker_map, diagonal_entropy, perturbed_echo, pseudo_pure, von_neumann_entropy
from bakersim.perturb import gradient_dephasing_p

bm = baker_map(3)
rho0 = pseudo_pure(3, 1.0, 0)

for p in [0.0, 0.1, 0.25, 0.5]:
    _, rho = perturbed_echo(bm, rho0, Dephase(3, p))
    print(f"p={p:4.2f}  S={von_neumann_entropy(rho):.6f} bits  "
          f"H(diag)={diagonal_entropy(rho):.6f}  populations={np.round(np.diag(rho).real, 4)}")

# A uniform gradient with total phase spread phi across the sample.
for spread in [0.5, 1.0, 2.0, np.pi]:
    print(f"spread {spread:.3f} rad -> p = {gradient_dephasing_p(spread):.4f}")
