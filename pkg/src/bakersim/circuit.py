"""Symbolic gates on an n-qubit register and their unitaries.

Qubits are numbered 1..n with qubit 1 the most significant bit of the
computational-basis index: ``|b1 b2 ... bn>`` has index
``sum(b_j * 2**(n - j))``.

A :class:`Circuit` stores gates in temporal order (index 0 acts first).
"""

from dataclasses import dataclass, field
from typing import Tuple, Union

import numpy as np

from . import qmat
from .qmat import I2, P0, P1, X, Y, Z


@dataclass(frozen=True)
class Hadamard:
    qubit: int

    @property
    def qubits(self):
        return (self.qubit,)


@dataclass(frozen=True)
class CondPhase:
    """Phase ``exp(i*theta)`` on the component where both qubits are 1."""

    j: int
    k: int
    theta: float

    def __post_init__(self):
        # symmetric in (j, k): store sorted so equal gates compare equal
        if self.j > self.k:
            j, k = self.k, self.j
            object.__setattr__(self, "j", j)
            object.__setattr__(self, "k", k)

    @property
    def qubits(self):
        return (self.j, self.k)


@dataclass(frozen=True)
class Swap:
    j: int
    k: int

    @property
    def qubits(self):
        return (self.j, self.k)


@dataclass(frozen=True)
class PauliX:
    qubit: int

    @property
    def qubits(self):
        return (self.qubit,)


@dataclass(frozen=True)
class RotX:
    """``exp(-i * theta * sigma_x / 2)`` on one qubit."""

    qubit: int
    theta: float

    @property
    def qubits(self):
        return (self.qubit,)


@dataclass(frozen=True)
class MultiControlledX:
    target: int
    controls: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "controls", tuple(sorted(self.controls)))

    @property
    def qubits(self):
        return (self.target,) + self.controls


Gate = Union[Hadamard, CondPhase, Swap, PauliX, RotX, MultiControlledX]


def _check_gate(g: Gate, n: int) -> None:
    qs = g.qubits
    for q in qs:
        if not isinstance(q, (int, np.integer)) or not 1 <= q <= n:
            raise ValueError(f"{g}: qubit index {q} outside 1..{n}")
    if len(set(qs)) != len(qs):
        raise ValueError(f"{g}: repeated qubit index")


@dataclass(frozen=True)
class Circuit:
    n: int
    gates: Tuple[Gate, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("register needs at least one qubit")
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            _check_gate(g, self.n)

    @classmethod
    def from_operator_string_order(cls, n: int, gates) -> "Circuit":
        """Build from a product written in operator order (rightmost acts first)."""
        return cls(n, tuple(reversed(list(gates))))

    def __add__(self, other: "Circuit") -> "Circuit":
        if self.n != other.n:
            raise ValueError("cannot concatenate circuits on different registers")
        return Circuit(self.n, self.gates + other.gates)

    def __len__(self):
        return len(self.gates)


# --- local matrices ----------------------------------------------------------

def _rx(theta: float) -> np.ndarray:
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)


def local_terms(g: Gate):
    """Decompose ``g`` into a sum of products of single-qubit factors.

    Returns a list of ``(coefficient, {qubit: 2x2 factor})``; qubits not in
    the dict carry the identity.
    """
    if isinstance(g, Hadamard):
        return [(1.0, {g.qubit: qmat.H})]
    if isinstance(g, PauliX):
        return [(1.0, {g.qubit: X})]
    if isinstance(g, RotX):
        return [(1.0, {g.qubit: _rx(g.theta)})]
    if isinstance(g, CondPhase):
        return [(1.0, {}), (np.exp(1j * g.theta) - 1.0, {g.j: P1, g.k: P1})]
    if isinstance(g, Swap):
        return [(0.5, {})] + [(0.5, {g.j: p, g.k: p}) for p in (X, Y, Z)]
    if isinstance(g, MultiControlledX):
        ctrl = {c: P1 for c in g.controls}
        return [(1.0, {}), (-1.0, dict(ctrl)), (1.0, {**ctrl, g.target: X})]
    raise TypeError(f"unknown gate {g!r}")


def gate_matrix(g: Gate) -> np.ndarray:
    """The gate as a 2^k x 2^k matrix on ``g.qubits`` (in that order)."""
    qs = g.qubits
    k = len(qs)
    out = np.zeros((2**k, 2**k), dtype=complex)
    for coef, factors in local_terms(g):
        out += coef * qmat.kron_all(factors.get(q, I2) for q in qs)
    return out


def embed_gate(g: Gate, n: int) -> np.ndarray:
    """Lift ``g`` to the full 2^n-dimensional register."""
    _check_gate(g, n)
    dim = 2**n
    out = np.zeros((dim, dim), dtype=complex)
    for coef, factors in local_terms(g):
        out += coef * qmat.kron_all(factors.get(q, I2) for q in range(1, n + 1))
    return out


def apply_gate(g: Gate, m: np.ndarray, n: int) -> np.ndarray:
    """Left-multiply the 2^n x cols matrix ``m`` by ``g`` without embedding it.

    Works on the row index reshaped into one axis per qubit, so the cost
    is linear in the size of ``m``.
    """
    qs = g.qubits
    k = len(qs)
    cols = m.shape[1]
    t = m.reshape((2,) * n + (cols,))
    axes = [q - 1 for q in qs]
    t = np.moveaxis(t, axes, list(range(k)))
    shape = t.shape
    t = gate_matrix(g) @ t.reshape(2**k, -1)
    t = np.moveaxis(t.reshape(shape), list(range(k)), axes)
    return t.reshape(2**n, cols)


def circuit_unitary(c: Circuit) -> np.ndarray:
    u = np.eye(2**c.n, dtype=complex)
    for g in c.gates:
        u = apply_gate(g, u, c.n)
    return u


def adjoint_gate(g: Gate) -> Gate:
    if isinstance(g, CondPhase):
        return CondPhase(g.j, g.k, -g.theta)
    if isinstance(g, RotX):
        return RotX(g.qubit, -g.theta)
    return g


def inverse_circuit(c: Circuit) -> Circuit:
    return Circuit(c.n, tuple(adjoint_gate(g) for g in reversed(c.gates)))


def _relabel(g: Gate, wire) -> Gate:
    if isinstance(g, (Hadamard, PauliX)):
        return type(g)(wire[g.qubit])
    if isinstance(g, RotX):
        return RotX(wire[g.qubit], g.theta)
    if isinstance(g, CondPhase):
        return CondPhase(wire[g.j], wire[g.k], g.theta)
    if isinstance(g, MultiControlledX):
        return MultiControlledX(wire[g.target], tuple(wire[c] for c in g.controls))
    raise TypeError(f"cannot relabel {g!r}")


def relabel_compress(c: Circuit):
    """Remove every Swap by relabeling the qubits of later gates.

    Returns ``(compressed, perm)`` where ``perm[q - 1]`` is the physical
    wire that holds logical qubit ``q`` at the end. ``permutation_unitary(perm)
    @ circuit_unitary(compressed)`` equals ``circuit_unitary(c)``.
    """
    wire = {q: q for q in range(1, c.n + 1)}
    gates = []
    for g in c.gates:
        if isinstance(g, Swap):
            wire[g.j], wire[g.k] = wire[g.k], wire[g.j]
        else:
            gates.append(_relabel(g, wire))
    perm = tuple(wire[q] for q in range(1, c.n + 1))
    return Circuit(c.n, tuple(gates)), perm


def permutation_unitary(perm) -> np.ndarray:
    """Unitary moving the content of wire ``perm[q - 1]`` onto qubit ``q``."""
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"{perm} is not a permutation of 1..{n}")
    dim = 2**n
    u = np.zeros((dim, dim), dtype=complex)
    for x in range(dim):
        bits = basis_bits(x, n)
        y = bits_to_index([bits[perm[q] - 1] for q in range(n)])
        u[y, x] = 1.0
    return u


def basis_bits(x: int, n: int):
    """Bits (b1, ..., bn) of basis index ``x``, b1 most significant."""
    if not 0 <= x < 2**n:
        raise ValueError(f"basis index {x} outside 0..{2**n - 1}")
    return tuple((x >> (n - j)) & 1 for j in range(1, n + 1))


def bits_to_index(bits) -> int:
    x = 0
    for b in bits:
        x = (x << 1) | int(b)
    return x


def basis_state(x: int, n: int) -> np.ndarray:
    psi = np.zeros(2**n, dtype=complex)
    psi[x] = 1.0
    return psi


def apply_to_state(u, psi) -> np.ndarray:
    u = np.asarray(u)
    psi = np.asarray(psi)
    if u.shape[1] != psi.shape[0]:
        raise ValueError(f"dimension mismatch: {u.shape} vs {psi.shape}")
    return u @ psi


def apply_to_density(u, rho) -> np.ndarray:
    u = np.asarray(u)
    rho = np.asarray(rho)
    if u.shape[1] != rho.shape[0] or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"dimension mismatch: {u.shape} vs {rho.shape}")
    return u @ rho @ qmat.dagger(u)


# --- JSON --------------------------------------------------------------------

_NAMES = {
    Hadamard: "h",
    CondPhase: "cphase",
    Swap: "swap",
    PauliX: "x",
    RotX: "rx",
    MultiControlledX: "mcx",
}


def gate_to_dict(g: Gate) -> dict:
    d = {"gate": _NAMES[type(g)]}
    if isinstance(g, MultiControlledX):
        d["target"] = g.target
        d["controls"] = list(g.controls)
    else:
        d["qubits"] = list(g.qubits)
    if isinstance(g, (CondPhase, RotX)):
        d["angle"] = float(g.theta)
    return d


def gate_from_dict(d: dict) -> Gate:
    name = d["gate"]
    if name == "mcx":
        return MultiControlledX(d["target"], tuple(d["controls"]))
    qs = d["qubits"]
    if name == "h":
        return Hadamard(*qs)
    if name == "x":
        return PauliX(*qs)
    if name == "swap":
        return Swap(*qs)
    if name == "rx":
        return RotX(qs[0], d["angle"])
    if name == "cphase":
        return CondPhase(qs[0], qs[1], d["angle"])
    raise ValueError(f"unknown gate name {name!r}")


def circuit_to_dict(c: Circuit) -> dict:
    return {"qubits": c.n, "gates": [gate_to_dict(g) for g in c.gates]}


def circuit_from_dict(d: dict) -> Circuit:
    return Circuit(d["qubits"], tuple(gate_from_dict(g) for g in d["gates"]))
