import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bakersim import qmat
from bakersim.baker import baker_map
from bakersim.metrics import (
    DeviationMatrix,
    basis_averaged_overlap,
    correlation_C,
    correlation_unattenuated,
    deviation,
    diagonal_entropy,
    overlap,
    pseudo_pure,
    von_neumann_entropy,
)
from bakersim.perturb import Dephase, RotXPert, Shift, perturbed_echo

from oracles import baker, cyclic_shift, echo_overlap, lsb_rotation


def random_state(rng, dim, rank=None):
    rank = rank or dim
    a = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = a @ a.conj().T
    return rho / np.trace(rho)


def random_unitary(rng, dim):
    q, r = np.linalg.qr(rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim)))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def test_pseudo_pure_examples():
    rho = pseudo_pure(3, 1.0, 0)
    assert rho[0, 0] == 1 and np.count_nonzero(rho) == 1
    assert np.array_equal(pseudo_pure(3, 0.0, 5), np.eye(8) / 8)
    np.testing.assert_allclose(np.diag(pseudo_pure(3, 0.5, 0)).real, [0.5625] + [0.0625] * 7, atol=1e-15)


@pytest.mark.parametrize("args", [(3, 1.5, 0), (3, -0.1, 0), (3, 0.5, 8)])
def test_pseudo_pure_errors(args):
    with pytest.raises(ValueError):
        pseudo_pure(*args)


def test_deviation_examples():
    d = deviation(np.eye(8) / 8)
    assert np.array_equal(d.matrix, np.zeros((8, 8))) and d.identity_offset == 0.125
    d = deviation(pseudo_pure(3, 1.0, 0))
    np.testing.assert_allclose(np.diag(d.matrix).real, [7 / 8] + [-1 / 8] * 7, atol=1e-15)
    eps = 0.3
    assert qmat.allclose(deviation(pseudo_pure(3, eps, 0)).matrix, eps * d.matrix, 1e-15)


def test_deviation_matrix_invariants():
    with pytest.raises(ValueError):
        DeviationMatrix(np.eye(2), 0.0)
    with pytest.raises(ValueError):
        DeviationMatrix(np.array([[0, 1], [0, 0]]), 0.0)


def test_overlap_basis_states():
    assert overlap(pseudo_pure(3, 1, 0), pseudo_pure(3, 1, 0)) == 1
    assert overlap(pseudo_pure(3, 1, 0), pseudo_pure(3, 1, 1)) == 0
    with pytest.raises(ValueError):
        overlap(np.eye(2), np.eye(4))


def test_overlap_rotation_echo_pi_over_4():
    bm = baker_map(3)
    o = overlap(*perturbed_echo(bm, pseudo_pure(3, 1, 0), RotXPert(3, np.pi / 4)))
    assert abs(o - echo_overlap(baker(3), lsb_rotation(np.pi / 4, 3))) <= 1e-12
    # closed form cos^2(t/2) + sin^2(t/2)/16 found from the oracle
    assert abs(o - (math.cos(np.pi / 8) ** 2 + math.sin(np.pi / 8) ** 2 / 16)) <= 1e-12


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_overlap_properties(seed):
    rng = np.random.default_rng(seed)
    a, b = random_state(rng, 4), random_state(rng, 4)
    assert abs(overlap(a, b) - overlap(b, a)) <= 1e-12
    psi = rng.normal(size=4) + 1j * rng.normal(size=4)
    phi = rng.normal(size=4) + 1j * rng.normal(size=4)
    psi /= np.linalg.norm(psi)
    phi /= np.linalg.norm(phi)
    o = overlap(np.outer(psi, psi.conj()), np.outer(phi, phi.conj()))
    assert abs(o - abs(np.vdot(psi, phi)) ** 2) <= 1e-12


def test_correlation_examples():
    d = deviation(pseudo_pure(3, 1, 0))
    assert abs(correlation_C(d, d, d) - 1) <= 1e-12
    assert abs(correlation_C(d, -d, d) + 1) <= 1e-12
    half = 0.5 * d
    assert abs(correlation_C(d, half, d) - 0.5) <= 1e-12
    assert abs(correlation_unattenuated(d, half) - 1) <= 1e-12


def test_correlation_zero_norm():
    d = deviation(pseudo_pure(3, 1, 0))
    z = deviation(np.eye(8) / 8)
    for args in [(z, d, d), (d, z, d), (d, d, z)]:
        with pytest.raises(ValueError):
            correlation_C(*args)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.floats(0.01, 100))
def test_correlation_properties(seed, scale):
    rng = np.random.default_rng(seed)
    t, e, i = (deviation(random_state(rng, 4)) for _ in range(3))
    c = correlation_C(t, e, i)
    assert abs(correlation_C(scale * t, scale * e, scale * i) - c) <= 1e-9 * max(1, abs(c))
    assert -1 - 1e-12 <= correlation_unattenuated(t, e) <= 1 + 1e-12


def test_entropy_examples():
    assert abs(von_neumann_entropy(pseudo_pure(3, 1, 0))) <= 1e-12
    rho = (pseudo_pure(3, 1, 0) + pseudo_pure(3, 1, 1)) / 2
    assert abs(von_neumann_entropy(rho) - 1) <= 1e-12
    assert abs(von_neumann_entropy(np.eye(8) / 8) - 3) <= 1e-12
    assert abs(diagonal_entropy(rho) - 1) <= 1e-12


def test_entropy_dephased_echo():
    bm = baker_map(3)
    _, rho = perturbed_echo(bm, pseudo_pure(3, 1, 0), Dephase(3, 0.5))
    assert abs(von_neumann_entropy(rho) - 1) <= 1e-9


def test_entropy_rejects_non_states():
    with pytest.raises(ValueError):
        von_neumann_entropy(np.diag([1.5, -0.5]))
    with pytest.raises(ValueError):
        von_neumann_entropy(np.eye(2))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 8))
def test_entropy_unitary_invariance_and_bounds(seed, rank):
    rng = np.random.default_rng(seed)
    rho = random_state(rng, 8, rank)
    u = random_unitary(rng, 8)
    s = von_neumann_entropy(rho)
    assert abs(von_neumann_entropy(u @ rho @ u.conj().T) - s) <= 1e-9
    assert -1e-12 <= s <= 3 + 1e-12


def test_basis_average_zero_angle():
    curve = basis_averaged_overlap(baker_map(3), RotXPert(3, 0.0), [0.0, 0.0])
    assert np.all(np.abs(curve.overlap_000 - 1) <= 1e-12)
    assert np.all(np.abs(curve.overlap_avg - 1) <= 1e-12)
    assert curve.parameter_name == "theta"


def test_basis_average_small_angle_gap():
    qb = baker(3)
    t = np.pi / 32
    avg = np.mean([echo_overlap(qb, lsb_rotation(t, 3), x) for x in range(8)])
    curve = basis_averaged_overlap(baker_map(3), RotXPert(3, 0.0), [t])
    assert abs(curve.overlap_avg[0] - avg) <= 1e-12
    # the gap vanishes for this map: every basis input sees the same overlap
    assert abs(curve.gap[0]) <= 1e-12


def test_basis_average_shift_inset():
    qb = baker(3)
    curve = basis_averaged_overlap(baker_map(3), Shift(0), [1, 2, 3, 4])
    assert curve.parameter_name == "shift"
    for s, o, a in zip([1, 2, 3, 4], curve.overlap_000, curve.overlap_avg):
        assert abs(o - echo_overlap(qb, cyclic_shift(s, 3))) <= 1e-12
        assert abs(a - np.mean([echo_overlap(qb, cyclic_shift(s, 3), x) for x in range(8)])) <= 1e-12
    assert abs(curve.overlap_000[0] - (2 + math.sqrt(2)) / 8) <= 1e-12
    assert abs(curve.overlap_000[2] - (2 - math.sqrt(2)) / 8) <= 1e-12


def test_basis_average_without_average():
    curve = basis_averaged_overlap(baker_map(3), RotXPert(3, 0.0), [0.1], average=False)
    assert curve.overlap_avg is None


def test_basis_average_empty_grid():
    with pytest.raises(ValueError):
        basis_averaged_overlap(baker_map(3), RotXPert(3, 0.0), [])
