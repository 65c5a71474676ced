import numpy as np
import pytest

from bakersim import qmat
from bakersim.baker import (
    baker_circuit,
    baker_map,
    baker_matrix,
    iterate,
    qft_circuit,
    qft_matrix,
)
from bakersim.circuit import Circuit, CondPhase, Hadamard, Swap, circuit_unitary
from bakersim.metrics import pseudo_pure

from oracles import baker, dft


def test_qft_matrix_small():
    assert np.array_equal(qft_matrix(1), [[1]])
    assert qmat.allclose(qft_matrix(2), qmat.H, 1e-15)
    assert qmat.allclose(qft_matrix(4)[1, 1], 0.5j, 1e-15)


@pytest.mark.parametrize("dim", [3, 8, 16])
def test_qft_matrix_against_loop(dim):
    assert qmat.allclose(qft_matrix(dim), dft(dim), 1e-12)


def test_qft_single_target_is_hadamard():
    assert qft_circuit([2], 3).gates == (Hadamard(2),)


def test_qft_on_lower_block():
    u = circuit_unitary(qft_circuit([2, 3], 3))
    assert qmat.max_abs_diff(u, np.kron(qmat.I2, dft(4))) <= 1e-10


def test_qft_full_register():
    assert qmat.max_abs_diff(circuit_unitary(qft_circuit([1, 2, 3], 3)), dft(8)) <= 1e-10


def test_qft_inverse_flag():
    u = circuit_unitary(qft_circuit([1, 2, 3, 4], 4, inverse=True))
    assert qmat.max_abs_diff(u, dft(16, sign=-1)) <= 1e-10


def test_qft_without_swaps_needs_bit_reversal():
    from bakersim.circuit import permutation_unitary

    u = circuit_unitary(qft_circuit([1, 2, 3], 3, emit_swaps=False))
    assert qmat.max_abs_diff(permutation_unitary((3, 2, 1)) @ u, dft(8)) <= 1e-10


def test_qft_rejects_non_contiguous():
    with pytest.raises(ValueError):
        qft_circuit([1, 3], 3)


def test_baker_n1_is_hadamard():
    bm = baker_map(1)
    assert qmat.max_abs_diff(bm.matrix, qmat.H) <= 1e-12


def test_baker_n3_column_zero():
    m = baker_matrix(3)
    assert abs(abs(m[0, 0]) ** 2 - 0.5) <= 1e-12
    assert qmat.allclose(m, baker(3), 1e-12)


def test_baker_n3_circuit_is_eq1():
    # Eq. 1 read right to left.
    expected = (
        Hadamard(2), CondPhase(2, 3, np.pi / 2), Hadamard(3), Swap(2, 3),
        Hadamard(1), CondPhase(1, 2, -np.pi / 2), Hadamard(2), CondPhase(1, 3, -np.pi / 4),
        CondPhase(2, 3, -np.pi / 2), Hadamard(3), Swap(1, 3),
    )
    assert baker_circuit(3).gates == expected


@pytest.mark.parametrize("n", range(1, 11))
def test_baker_matrix_unitary(n):
    m = baker_matrix(n)
    assert qmat.is_unitary(m, 1e-10)
    assert np.max(np.abs(np.linalg.norm(m, axis=0) - 1)) <= 1e-12


@pytest.mark.parametrize("n", range(1, 7))
def test_baker_matrix_against_loop_oracle(n):
    assert qmat.max_abs_diff(baker_matrix(n), baker(n)) <= 1e-10


def test_iterate():
    bm = baker_map(3)
    rho = pseudo_pure(3, 1.0, 0)
    assert np.array_equal(iterate(bm, rho, 0), rho)
    once = iterate(bm, rho, 1)
    assert abs(once[0, 0] - 0.5) <= 1e-12
    assert qmat.max_abs_diff(iterate(bm, once, -1), rho) <= 1e-10
    twice = iterate(bm, rho, 2)
    assert qmat.max_abs_diff(iterate(bm, twice, -2), rho) <= 1e-10


def test_iterate_dimension_mismatch():
    with pytest.raises(ValueError):
        iterate(baker_map(3), np.eye(4), 1)


@pytest.mark.parametrize("n", range(2, 7))
def test_lsb_phase_flip_conjugates_to_msb_flip(n):
    # QB^dag Z_n QB = X_1: dephasing the LSB mid-echo mixes the MSB
    m = baker_matrix(n)
    z_lsb = np.diag([(-1) ** x for x in range(2**n)])
    x_msb = np.kron(qmat.X, np.eye(2 ** (n - 1)))
    assert qmat.max_abs_diff(m.conj().T @ z_lsb @ m, x_msb) <= 1e-10
