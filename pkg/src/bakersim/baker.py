"""Quantum Fourier transform and quantum baker's map builders."""

from dataclasses import dataclass

import numpy as np

from . import qmat
from .circuit import Circuit, CondPhase, Hadamard, Swap, circuit_unitary


def qft_matrix(dim: int) -> np.ndarray:
    """F[x, y] = exp(2*pi*i*x*y/dim) / sqrt(dim)."""
    if dim < 1:
        raise ValueError("dimension must be positive")
    x = np.arange(dim)
    # reduce x*y mod dim before the exponential so large dims stay exact
    phase = np.outer(x, x) % dim
    return np.exp(2j * np.pi * phase / dim) / np.sqrt(dim)


def qft_gates(targets, inverse: bool = False, emit_swaps: bool = True):
    """Hadamard / conditional-phase ladder for a QFT on ``targets``.

    Gates are in temporal order. Before the Hadamard on each target, the
    phases from every earlier target are collected onto it, which is the
    ordering used for the three-qubit map. ``inverse`` negates all phases,
    giving the conjugate (= inverse) transform. Bit reversal uses swaps
    when ``emit_swaps`` is set; otherwise the caller has to relabel.
    """
    targets = list(targets)
    if targets and targets != list(range(targets[0], targets[0] + len(targets))):
        raise ValueError(f"QFT targets must be contiguous, got {targets}")
    sign = -1.0 if inverse else 1.0
    gates = []
    for m_pos, m in enumerate(targets):
        for j_pos in range(m_pos):
            j = targets[j_pos]
            gates.append(CondPhase(j, m, sign * np.pi / 2 ** (m_pos - j_pos)))
        gates.append(Hadamard(m))
    if emit_swaps:
        for i in range(len(targets) // 2):
            gates.append(Swap(targets[i], targets[-1 - i]))
    return gates


def qft_circuit(targets, n: int, emit_swaps: bool = True, inverse: bool = False) -> Circuit:
    return Circuit(n, qft_gates(targets, inverse=inverse, emit_swaps=emit_swaps))


def baker_matrix(n: int) -> np.ndarray:
    """Direct construction F_N^{-1} (I_2 (x) F_{N/2}) with N = 2**n."""
    if n < 1:
        raise ValueError("need at least one qubit")
    dim = 2**n
    return qmat.dagger(qft_matrix(dim)) @ np.kron(qmat.I2, qft_matrix(dim // 2))


def baker_circuit(n: int) -> Circuit:
    """QFT on qubits 2..n, then inverse QFT on qubits 1..n."""
    if n < 1:
        raise ValueError("need at least one qubit")
    gates = qft_gates(range(2, n + 1)) if n > 1 else []
    gates += qft_gates(range(1, n + 1), inverse=True)
    return Circuit(n, gates)


@dataclass(frozen=True, eq=False)
class BakerMap:
    n: int
    circuit: Circuit
    matrix: np.ndarray

    @property
    def dim(self) -> int:
        return 2**self.n


def baker_map(n: int, tol: float = qmat.DEFAULT_TOL) -> BakerMap:
    """Build the map and check that circuit and direct matrix agree."""
    circ = baker_circuit(n)
    mat = baker_matrix(n)
    diff = qmat.max_abs_diff(circuit_unitary(circ), mat)
    if diff > tol:
        raise ArithmeticError(f"baker circuit deviates from matrix by {diff:.3g}")
    return BakerMap(n, circ, mat)


def iterate(bmap: BakerMap, rho, k: int) -> np.ndarray:
    """Apply the map ``k`` times (its inverse ``-k`` times when k < 0)."""
    rho = np.asarray(rho)
    if rho.shape != (bmap.dim, bmap.dim):
        raise ValueError(f"state shape {rho.shape} does not match map dimension {bmap.dim}")
    u = bmap.matrix if k >= 0 else qmat.dagger(bmap.matrix)
    for _ in range(abs(k)):
        rho = u @ rho @ qmat.dagger(u)
    return rho
