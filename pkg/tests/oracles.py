"""Brute-force reference computations for the tests.

Written against the textbook definitions with explicit loops; nothing
here imports the package under test.
"""

import cmath
import math

import numpy as np


def dft(dim, sign=+1):
    f = np.empty((dim, dim), dtype=complex)
    for x in range(dim):
        for y in range(dim):
            f[x, y] = cmath.exp(sign * 2j * math.pi * x * y / dim) / math.sqrt(dim)
    return f


def baker(n):
    """F_N^{-1} (I_2 (x) F_{N/2}), assembled entry by entry."""
    dim = 2**n
    half = dim // 2
    inner = np.zeros((dim, dim), dtype=complex)
    fh = dft(half)
    for blk in range(2):
        for i in range(half):
            for j in range(half):
                inner[blk * half + i, blk * half + j] = fh[i, j]
    finv = dft(dim, sign=-1)
    out = np.zeros((dim, dim), dtype=complex)
    for i in range(dim):
        for j in range(dim):
            out[i, j] = sum(finv[i, k] * inner[k, j] for k in range(dim))
    return out


def lsb_rotation(theta, n):
    """exp(-i theta sigma_x / 2) on the least significant bit, by index pairs."""
    dim = 2**n
    u = np.zeros((dim, dim), dtype=complex)
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    for x in range(0, dim, 2):
        u[x, x] = u[x + 1, x + 1] = c
        u[x, x + 1] = u[x + 1, x] = -1j * s
    return u


def cyclic_shift(s, n):
    dim = 2**n
    u = np.zeros((dim, dim))
    for x in range(dim):
        u[(x + s) % dim, x] = 1
    return u


def echo_overlap(qb, pert, x=0):
    """|<x| QB^dag P QB |x>|^2 for a unitary perturbation P."""
    w = qb.conj().T @ pert @ qb
    return abs(w[x, x]) ** 2


def dephased_echo(qb, p=0.5):
    """Forward map, phase flip of the LSB with probability p, inverse map."""
    dim = qb.shape[0]
    rho = np.zeros((dim, dim), dtype=complex)
    rho[0, 0] = 1
    mid = qb @ rho @ qb.conj().T
    z = np.diag([(-1) ** x for x in range(dim)]).astype(complex)
    mid = (1 - p) * mid + p * z @ mid @ z
    return qb.conj().T @ mid @ qb
