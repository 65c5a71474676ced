"""Dense complex matrix helpers.

Matrices are plain ``numpy`` complex128 arrays. The helpers here add the
checks the rest of the package relies on (finiteness, unitarity,
Hermiticity) and a small Hermitian eigensolver.
"""

from typing import NamedTuple

import numpy as np

DEFAULT_TOL = 1e-10

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
P0 = np.array([[1, 0], [0, 0]], dtype=complex)
P1 = np.array([[0, 0], [0, 1]], dtype=complex)


class HermitianEigenResult(NamedTuple):
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def cmatrix(data) -> np.ndarray:
    """Return ``data`` as a 2-D complex128 array, rejecting NaN and inf."""
    a = np.array(data, dtype=complex)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def unitary(data, tol: float = DEFAULT_TOL) -> np.ndarray:
    u = cmatrix(data)
    if not is_unitary(u, tol):
        raise ValueError(f"matrix is not unitary to {tol:g}")
    return u


def kron(a, b) -> np.ndarray:
    return np.kron(a, b)


def kron_all(factors) -> np.ndarray:
    out = np.ones((1, 1), dtype=complex)
    for f in factors:
        out = np.kron(out, f)
    return out


def dagger(a) -> np.ndarray:
    return np.conj(np.transpose(a))


def trace(a) -> complex:
    return complex(np.trace(a))


def max_abs_diff(a, b) -> float:
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a - b)))


def allclose(a, b, tol: float = DEFAULT_TOL) -> bool:
    """Max-absolute-element comparison."""
    return max_abs_diff(a, b) <= tol


def equal_up_to_global_phase(a, b, tol: float = DEFAULT_TOL) -> bool:
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        return False
    ia = np.unravel_index(np.argmax(np.abs(a)), a.shape)
    ib = np.unravel_index(np.argmax(np.abs(b)), b.shape)
    if abs(a[ia]) == 0 or abs(b[ib]) == 0:
        return allclose(a, b, tol)
    a = a * (abs(a[ia]) / a[ia])
    b = b * (abs(b[ib]) / b[ib])
    return allclose(a, b, tol)


def is_square(a) -> bool:
    a = np.asarray(a)
    return a.ndim == 2 and a.shape[0] == a.shape[1]


def is_unitary(u, tol: float = DEFAULT_TOL) -> bool:
    if not is_square(u):
        return False
    return allclose(dagger(u) @ u, np.eye(u.shape[0]), tol)


def is_hermitian(a, tol: float = DEFAULT_TOL) -> bool:
    return is_square(a) and allclose(a, dagger(a), tol)


def num_qubits(dim: int) -> int:
    n = int(dim).bit_length() - 1
    if dim < 1 or 1 << n != dim:
        raise ValueError(f"dimension {dim} is not a power of two")
    return n


# --- Hermitian eigensolver ---------------------------------------------------

JACOBI_MAX_DIM = 64


def _jacobi_sweeps(a: np.ndarray, tol: float, max_sweeps: int):
    """Cyclic complex Jacobi. Works in place on ``a``; returns (diag, V)."""
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    scale = max(float(np.max(np.abs(a))), 1.0)
    for _ in range(max_sweeps):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off <= tol * scale * n:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag <= 1e-300:
                    continue
                phase = apq / mag
                app = a[p, p].real
                aqq = a[q, q].real
                tau = (aqq - app) / (2.0 * mag)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # J = diag(1, conj(phase)) @ [[c, s], [-s, c]]
                j2 = np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]])
                idx = [p, q]
                a[:, idx] = a[:, idx] @ j2
                a[idx, :] = dagger(j2) @ a[idx, :]
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                v[:, idx] = v[:, idx] @ j2
    else:
        raise RuntimeError("Jacobi iteration did not converge")
    return np.real(np.diag(a)).copy(), v


def _fix_gauge(vecs: np.ndarray) -> np.ndarray:
    # Largest-magnitude component of each eigenvector made real positive.
    idx = np.argmax(np.abs(vecs) > np.max(np.abs(vecs), axis=0) * (1 - 1e-9), axis=0)
    pivots = vecs[idx, np.arange(vecs.shape[1])]
    return vecs * (np.abs(pivots) / pivots)


def hermitian_eigen(a, method: str = "auto", tol: float = DEFAULT_TOL) -> HermitianEigenResult:
    """Full spectral decomposition of a Hermitian matrix.

    Eigenvalues come back ascending; each eigenvector is normalised so its
    first largest-magnitude component is real and positive.

    ``method`` is ``"jacobi"`` (cyclic Jacobi rotations), ``"lapack"``
    (``numpy.linalg.eigh``) or ``"auto"``, which uses Jacobi up to
    dimension ``JACOBI_MAX_DIM`` and LAPACK above.
    """
    a = cmatrix(a)
    if not is_square(a):
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not is_hermitian(a, tol):
        raise ValueError(f"matrix is not Hermitian to {tol:g}")
    if method == "auto":
        method = "jacobi" if a.shape[0] <= JACOBI_MAX_DIM else "lapack"
    herm = (a + dagger(a)) / 2
    if method == "jacobi":
        w, v = _jacobi_sweeps(herm.copy(), tol=1e-15, max_sweeps=60)
    elif method == "lapack":
        w, v = np.linalg.eigh(herm)
    else:
        raise ValueError(f"unknown eigensolver method {method!r}")
    order = np.argsort(w, kind="stable")
    return HermitianEigenResult(w[order], _fix_gauge(v[:, order]))


def expm_hermitian(a, scale: complex = 1j) -> np.ndarray:
    """exp(scale * a) for Hermitian ``a`` via its spectral decomposition."""
    w, v = hermitian_eigen(a)
    return (v * np.exp(scale * w)) @ dagger(v)


# --- serialisation -----------------------------------------------------------

def to_nested(a) -> list:
    """Row-major nested list of ``[re, im]`` pairs."""
    a = np.asarray(a, dtype=complex)
    return [[[float(z.real), float(z.imag)] for z in row] for row in a]


def from_nested(data) -> np.ndarray:
    arr = np.asarray(data, dtype=float)
    if arr.ndim != 3 or arr.shape[2] != 2:
        raise ValueError("expected nested rows of [re, im] pairs")
    return cmatrix(arr[..., 0] + 1j * arr[..., 1])
