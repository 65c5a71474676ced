"""Perturbations applied between the forward and inverse map.

Three kinds are supported: a cyclic position shift ``|x> -> |x + s mod N>``,
an x rotation on one qubit, and dephasing of one qubit (the effect of a
field gradient once the sample position is traced out).
"""

from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

from . import qmat
from .circuit import (
    Circuit,
    MultiControlledX,
    PauliX,
    RotX,
    circuit_unitary,
    embed_gate,
    inverse_circuit,
)
from .qmat import I2, X, Z


@dataclass(frozen=True, eq=False)
class KrausChannel:
    operators: Tuple[np.ndarray, ...]

    def __post_init__(self):
        ops = tuple(qmat.cmatrix(a) for a in self.operators)
        if not ops:
            raise ValueError("a channel needs at least one Kraus operator")
        dim = ops[0].shape[0]
        for a in ops:
            if a.shape != (dim, dim):
                raise ValueError("Kraus operators must be square and of equal size")
        total = sum(qmat.dagger(a) @ a for a in ops)
        err = qmat.max_abs_diff(total, np.eye(dim))
        if err > 1e-10:
            raise ValueError(f"Kraus operators are not complete (deviation {err:.3g})")
        object.__setattr__(self, "operators", ops)

    @property
    def dim(self) -> int:
        return self.operators[0].shape[0]

    @classmethod
    def from_unitary(cls, u) -> "KrausChannel":
        return cls((u,))


def apply_channel(ch: KrausChannel, rho) -> np.ndarray:
    rho = np.asarray(rho)
    if rho.shape != (ch.dim, ch.dim):
        raise ValueError(f"state shape {rho.shape} does not match channel dimension {ch.dim}")
    out = np.zeros_like(rho, dtype=complex)
    for a in ch.operators:
        out += a @ rho @ qmat.dagger(a)
    return out


# --- perturbation descriptors ------------------------------------------------

@dataclass(frozen=True)
class Shift:
    s: int


@dataclass(frozen=True)
class RotXPert:
    qubit: int
    theta: float


@dataclass(frozen=True)
class Dephase:
    qubit: int
    p: float

    def __post_init__(self):
        _check_p(self.p)


Perturbation = Union[Shift, RotXPert, Dephase]


def _check_p(p: float) -> None:
    if not 0.0 <= p <= 0.5:
        raise ValueError(f"dephasing probability p={p} outside [0, 1/2]")


# --- position shift ----------------------------------------------------------

def shift_circuit(s: int, n: int) -> Circuit:
    """Increment (s=+1) or decrement (s=-1) the register modulo 2**n.

    The increment flips qubit j when every less significant qubit is 1.
    The most-controlled gate goes first so each control still holds its
    pre-increment value.
    """
    if s not in (1, -1):
        raise ValueError("shift_circuit takes s = +1 or -1")
    gates = [
        MultiControlledX(j, tuple(range(j + 1, n + 1))) if j < n else PauliX(n)
        for j in range(1, n + 1)
    ]
    c = Circuit(n, gates)
    return c if s == 1 else inverse_circuit(c)


def shift_matrix(s: int, n: int) -> np.ndarray:
    """Permutation |x> -> |x + s mod 2**n>."""
    dim = 2**n
    u = np.zeros((dim, dim), dtype=complex)
    x = np.arange(dim)
    u[(x + s) % dim, x] = 1.0
    return u


def shift_unitary(s: int, n: int) -> np.ndarray:
    """Shift by ``s`` built from repeated +-1 increment circuits."""
    dim = 2**n
    s = s % dim
    if s > dim // 2:
        s -= dim
    if s == 0:
        return np.eye(dim, dtype=complex)
    step = circuit_unitary(shift_circuit(1 if s > 0 else -1, n))
    return np.linalg.matrix_power(step, abs(s))


_PAULI = {"1": I2, "x": X, "z": Z}


def pauli_string(spec: str) -> np.ndarray:
    """Kronecker product of single-qubit factors, e.g. ``"x1z"``."""
    return qmat.kron_all(_PAULI[c] for c in spec)


def _exponent(angle: float, terms) -> np.ndarray:
    return angle * sum(sign * pauli_string(spec) for sign, spec in terms)


# Exponents of the three-qubit increment in product-of-exponentials form,
# leftmost factor first. Each is angle * (1 - sx_t) * prod(1 - sz_c).
# The cubic-term coefficient is taken from the expansion of
# (1 - x1)(1 - z2)(1 - z3), which has a +z2 z3 term.
SHIFT_EXPONENTS_3BIT = (
    (np.pi / 8, [(1, "111"), (-1, "x11"), (-1, "1z1"), (-1, "11z"),
                 (1, "xz1"), (1, "x1z"), (1, "1zz"), (-1, "xzz")]),
    (np.pi / 4, [(1, "111"), (-1, "1x1"), (-1, "11z"), (1, "1xz")]),
    (np.pi / 2, [(1, "111"), (-1, "11x")]),
)


def shift_exponential_factors_3bit():
    """The three factors exp(i * exponent), leftmost first."""
    return [qmat.expm_hermitian(_exponent(a, t)) for a, t in SHIFT_EXPONENTS_3BIT]


def shift_exponential_form_3bit() -> np.ndarray:
    """Product of the three exponentials, read as an operator product.

    The rightmost factor (an X on qubit 3) acts first, so this equals the
    decrement ``shift_matrix(-1, 3)``.
    """
    a, b, c = shift_exponential_factors_3bit()
    return a @ b @ c


# --- rotation and dephasing --------------------------------------------------

def rotx_perturbation(qubit: int, theta: float, n: int) -> np.ndarray:
    return embed_gate(RotX(qubit, theta), n)


def dephase_channel(qubit: int, p: float, n: int) -> KrausChannel:
    """Phase flip of ``qubit`` with probability ``p``.

    Coherences between the two values of the qubit shrink by ``1 - 2p``;
    p = 1/2 removes them completely.
    """
    _check_p(p)
    if not 1 <= qubit <= n:
        raise ValueError(f"qubit {qubit} outside 1..{n}")
    z = qmat.kron_all(Z if q == qubit else I2 for q in range(1, n + 1))
    eye = np.eye(2**n, dtype=complex)
    return KrausChannel((np.sqrt(1 - p) * eye, np.sqrt(p) * z))


def gradient_coherence(spread: float) -> float:
    """Mean of exp(i*phi) for phi uniform on [-spread, spread]: sin(x)/x."""
    return float(np.sinc(spread / np.pi))


def gradient_dephasing_p(spread: float) -> float:
    """Kraus weight matching a uniform gradient of total phase ``spread``.

    For spreads where sin(x)/x turns negative this exceeds 1/2, which
    :func:`dephase_channel` rejects.
    """
    return (1.0 - gradient_coherence(spread)) / 2.0


# --- perturbed echo ----------------------------------------------------------

def perturbation_channel(pert: Perturbation, n: int) -> KrausChannel:
    if isinstance(pert, Shift):
        return KrausChannel.from_unitary(shift_unitary(pert.s, n))
    if isinstance(pert, RotXPert):
        return KrausChannel.from_unitary(rotx_perturbation(pert.qubit, pert.theta, n))
    if isinstance(pert, Dephase):
        return dephase_channel(pert.qubit, pert.p, n)
    raise TypeError(f"unknown perturbation {pert!r}")


def perturbed_echo(bmap, rho_init, pert: Perturbation, channel: KrausChannel = None):
    """Forward map, perturbation, inverse map.

    Returns ``(rho_f, rho_f_prime)``: the unperturbed and perturbed final
    states. The unperturbed branch goes through the same forward/inverse
    products rather than returning ``rho_init``. A prebuilt ``channel``
    for ``pert`` may be passed to skip rebuilding it.
    """
    rho_init = np.asarray(rho_init, dtype=complex)
    if rho_init.shape != (bmap.dim, bmap.dim):
        raise ValueError(
            f"state shape {rho_init.shape} does not match map dimension {bmap.dim}"
        )
    if channel is None:
        channel = perturbation_channel(pert, bmap.n)
    u = bmap.matrix
    ud = qmat.dagger(u)
    mid = u @ rho_init @ ud
    rho_f = ud @ mid @ u
    rho_fp = ud @ apply_channel(channel, mid) @ u
    return rho_f, rho_fp
