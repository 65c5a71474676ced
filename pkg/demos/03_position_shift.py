"""
Shifting the position by one step
=================================

Adding 1 mod 8 to the register is a cascade of multi-controlled NOTs. The
echo is much more sensitive to this shift than to the largest rotation
in the sweep.
"""

import numpy as np

from bakersim import RotXPert, Shift, baker_map, circuit_unitary, overlap, perturbed_echo, pseudo_pure
from bakersim import shift_circuit, shift_matrix
from bakersim.perturb import shift_exponential_form_3bit
from bakersim.qmat import max_abs_diff

c = shift_circuit(1, 3)
print(c.gates)
print("circuit vs permutation:", max_abs_diff(circuit_unitary(c), shift_matrix(1, 3)))

# The product-of-exponentials form, read right to left, decrements.
print("exponential form vs shift -1:", max_abs_diff(shift_exponential_form_3bit(), shift_matrix(-1, 3)))

bm = baker_map(3)
rho0 = pseudo_pure(3, 1.0, 0)
for s in range(1, 5):
    print(f"add {s}: overlap {overlap(*perturbed_echo(bm, rho0, Shift(s))):.6f}")
print(f"rotation pi/4: overlap {overlap(*perturbed_echo(bm, rho0, RotXPert(3, np.pi / 4))):.6f}")
