"""
Building the quantum baker's map
================================

The map on n qubits is a QFT on qubits 2..n followed by an inverse QFT on
the whole register. Here we build it two ways, as a gate circuit and as
a dense matrix, and check that they agree. Then we remove the swaps by
relabeling the qubits.
"""

import numpy as np

from bakersim import baker_map, circuit_unitary, permutation_unitary, relabel_compress
from bakersim.qmat import max_abs_diff

bm = baker_map(3)

# Gates in the order they act.
for g in bm.circuit.gates:
    print(g)

print("circuit vs matrix:", max_abs_diff(circuit_unitary(bm.circuit), bm.matrix))

# Column 0: where |000> goes after one application.
print(np.round(bm.matrix[:, 0], 4))

# Dropping the swaps leaves a final qubit permutation to account for.
compressed, perm = relabel_compress(bm.circuit)
print(len(bm.circuit), "gates ->", len(compressed), "gates, final permutation", perm)
print("relabeled vs matrix:",
      max_abs_diff(permutation_unitary(perm) @ circuit_unitary(compressed), bm.matrix))

# Larger registers.
for n in range(1, 9):
    b = baker_map(n)
    print(n, max_abs_diff(circuit_unitary(b.circuit), b.matrix))
