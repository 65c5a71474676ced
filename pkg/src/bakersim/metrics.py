"""State preparation and diagnostics: pseudo-pure states, deviation
matrices, overlaps, the attenuated correlation, and entropies."""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import qmat
from .perturb import Dephase, RotXPert, Shift, perturbation_channel, perturbed_echo


@dataclass(frozen=True, eq=False)
class DeviationMatrix:
    matrix: np.ndarray
    identity_offset: float

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if abs(np.trace(m)) > 1e-12:
            raise ValueError("deviation matrix must be traceless")
        if not qmat.is_hermitian(m, 1e-12):
            raise ValueError("deviation matrix must be Hermitian")
        object.__setattr__(self, "matrix", m)

    def __mul__(self, alpha: float) -> "DeviationMatrix":
        return DeviationMatrix(alpha * self.matrix, alpha * self.identity_offset)

    __rmul__ = __mul__

    def __neg__(self) -> "DeviationMatrix":
        return self * -1.0


@dataclass
class OverlapCurve:
    parameter_name: str
    grid: np.ndarray
    overlap_000: np.ndarray
    overlap_avg: Optional[np.ndarray] = None

    @property
    def gap(self) -> np.ndarray:
        return self.overlap_000 - self.overlap_avg


def pseudo_pure(n: int, epsilon: float, index: int = 0) -> np.ndarray:
    """(1 - eps) I / 2^n + eps |x><x|."""
    if not 0.0 <= epsilon <= 1.0:
        raise ValueError(f"epsilon={epsilon} outside [0, 1]")
    dim = 2**n
    if not 0 <= index < dim:
        raise ValueError(f"basis index {index} outside 0..{dim - 1}")
    rho = (1.0 - epsilon) / dim * np.eye(dim, dtype=complex)
    rho[index, index] += epsilon
    return rho


def deviation(rho) -> DeviationMatrix:
    rho = np.asarray(rho, dtype=complex)
    offset = np.trace(rho).real / rho.shape[0]
    return DeviationMatrix(rho - offset * np.eye(rho.shape[0]), offset)


def overlap(a, b) -> float:
    """Tr(a b)."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    # Tr(ab) = sum_ij a_ij b_ji
    return float(np.real(np.sum(a * b.T)))


def _inner(a: DeviationMatrix, b: DeviationMatrix) -> float:
    return overlap(a.matrix, b.matrix)


def correlation_unattenuated(theory: DeviationMatrix, exp: DeviationMatrix) -> float:
    nt = _inner(theory, theory)
    ne = _inner(exp, exp)
    if nt <= 0 or ne <= 0:
        raise ValueError("correlation undefined for a zero deviation matrix")
    return _inner(theory, exp) / np.sqrt(nt * ne)


def correlation_C(theory: DeviationMatrix, exp: DeviationMatrix, initial: DeviationMatrix) -> float:
    """Normalised inner product times the signal attenuation
    sqrt(Tr(exp^2) / Tr(initial^2))."""
    ni = _inner(initial, initial)
    if ni <= 0:
        raise ValueError("correlation undefined for a zero initial deviation matrix")
    return correlation_unattenuated(theory, exp) * np.sqrt(_inner(exp, exp) / ni)


def _entropy_bits(p: np.ndarray) -> float:
    p = np.where((p < 0) & (p >= -1e-12), 0.0, p)
    if np.any(p < -1e-9):
        raise ValueError(f"negative eigenvalue {p.min():.3g}: not a state")
    p = p[p > 0]
    return float(-np.sum(p * np.log2(p))) + 0.0


def von_neumann_entropy(rho, method: str = "auto") -> float:
    """Entropy in bits."""
    rho = np.asarray(rho, dtype=complex)
    if abs(np.trace(rho) - 1) > 1e-9:
        raise ValueError("state must have unit trace")
    w = qmat.hermitian_eigen(rho, method=method).eigenvalues
    return _entropy_bits(w)


def populations(rho) -> np.ndarray:
    return np.real(np.diag(rho)).copy()


def diagonal_entropy(rho) -> float:
    """Shannon entropy (bits) of the computational-basis populations."""
    return _entropy_bits(populations(rho))


def _with_param(pert, value):
    if isinstance(pert, Shift):
        return Shift(int(value))
    if isinstance(pert, RotXPert):
        return RotXPert(pert.qubit, float(value))
    if isinstance(pert, Dephase):
        return Dephase(pert.qubit, float(value))
    raise TypeError(f"unknown perturbation {pert!r}")


PARAM_NAMES = {Shift: "shift", RotXPert: "theta", Dephase: "p"}


def echo_overlaps(bmap, pert, epsilon: float = 1.0, indices=None):
    """Overlap Tr(rho_f rho_f') for each computational-basis initial state."""
    if indices is None:
        indices = range(bmap.dim)
    channel = perturbation_channel(pert, bmap.n)
    out = []
    for x in indices:
        rho_f, rho_fp = perturbed_echo(bmap, pseudo_pure(bmap.n, epsilon, x), pert, channel)
        out.append(overlap(rho_f, rho_fp))
    return np.array(out)


def basis_averaged_overlap(bmap, pert, grid, epsilon: float = 1.0, average: bool = True) -> OverlapCurve:
    """Overlap curve from |0...0> and, optionally, averaged over the basis.

    ``pert`` is a template; its parameter (shift, angle or p) is replaced
    by each grid value in turn.
    """
    grid = np.asarray(list(grid), dtype=float)
    if grid.size == 0:
        raise ValueError("empty parameter grid")
    o000, oavg = [], []
    for value in grid:
        pt = _with_param(pert, value)
        if average:
            vals = echo_overlaps(bmap, pt, epsilon)
            o000.append(vals[0])
            oavg.append(vals.mean())
        else:
            o000.append(echo_overlaps(bmap, pt, epsilon, indices=[0])[0])
    return OverlapCurve(
        PARAM_NAMES[type(pert)],
        grid,
        np.array(o000),
        np.array(oavg) if average else None,
    )
