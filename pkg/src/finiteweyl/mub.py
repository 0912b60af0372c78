"""Eigenvector bases of the weighted shifts and generalized Hadamard matrices.

For a = 0..d-1 the basis labeled a diagonalizes V_0a = X Z^a; its vectors
have components tau^((d-k-1)(k+1)a - 2(k+1)alpha) / sqrt(d), stored as exact
tau exponents.  For prime d these bases plus the computational one form a
complete family of d+1 mutually unbiased bases; for arbitrary d the triple
{a=0, a=1, computational} is still mutually unbiased.  Unbiasedness is
always measured, never assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .operators import fourier_matrix, v_ra_matrix

MUB_PRIME_CAP = 97


def tau_power_matrix(table: np.ndarray, d: int) -> np.ndarray:
    """exp(i*pi*table/d) with quarter-turn entries (1, i, -1, -i) made exact."""
    canonical = np.asarray(table) % (2 * d)
    out = np.exp(1j * np.pi * canonical / d)
    doubled = 2 * canonical
    exact = (doubled % d) == 0
    quarter = (doubled[exact] // d) % 4
    out[exact] = np.choose(quarter, [1.0, 1j, -1.0, -1j])
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass
class OrthonormalBasis:
    d: int
    label: str
    vectors: np.ndarray  # d x d, columns are the basis vectors

    def gram_defect(self) -> float:
        gram = self.vectors.conj().T @ self.vectors
        return float(np.max(np.abs(gram - np.eye(self.d))))


def basis_exponent_table(d: int, a: int) -> np.ndarray:
    """Integer tau exponents: entry (k, alpha) of the a-th eigenbasis."""
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    table = np.zeros((d, d), dtype=np.int64)
    for k in range(d):
        for alpha in range(d):
            table[k, alpha] = ((d - k - 1) * (k + 1) * a - 2 * (k + 1) * alpha) % (2 * d)
    return table


def basis_b0a(d: int, a: int) -> OrthonormalBasis:
    """Eigenbasis of X Z^a, built from the exact exponent table."""
    if not 0 <= a <= d - 1:
        raise ValueError(f"a must lie in 0..{d - 1}, got {a}")
    table = basis_exponent_table(d, a)
    vectors = tau_power_matrix(table, d) / math.sqrt(d)
    return OrthonormalBasis(d=d, label=str(a), vectors=vectors)


def computational_basis(d: int) -> OrthonormalBasis:
    return OrthonormalBasis(d=d, label="computational", vectors=np.eye(d, dtype=complex))


@dataclass
class HadamardMatrix:
    """Unit-modulus matrix with H^dagger H = d I, stored as tau exponents."""

    d: int
    a: int
    exponents: np.ndarray

    def to_matrix(self) -> np.ndarray:
        return tau_power_matrix(self.exponents, self.d)

    def gram_defect(self) -> float:
        h = self.to_matrix()
        return float(np.max(np.abs(h.conj().T @ h - self.d * np.eye(self.d))))


def hadamard_h_a(d: int, a: int) -> HadamardMatrix:
    """Columns are sqrt(d) times the vectors of the a-th eigenbasis."""
    if not 0 <= a <= d - 1:
        raise ValueError(f"a must lie in 0..{d - 1}, got {a}")
    return HadamardMatrix(d=d, a=a, exponents=basis_exponent_table(d, a))


def hadamard_reduction_defect(d: int, a: int) -> float:
    """Residual of H_a^dagger V_0a H_a against its diagonal closed form."""
    h = hadamard_h_a(d, a).to_matrix()
    v = v_ra_matrix(d, 0.0, a)
    alphas = np.arange(d)
    eigenvalues = np.exp(1j * np.pi * ((d - 1) * a - 2 * alphas) / d)
    expected = d * np.diag(eigenvalues)
    return float(np.max(np.abs(h.conj().T @ v @ h - expected)))


def s_permutation(d: int) -> np.ndarray:
    """(1/sqrt(d)) times the involution beta -> d - beta (mod d)."""
    s = np.zeros((d, d), dtype=complex)
    for beta in range(d):
        s[beta, (d - beta) % d] = 1.0
    return s / math.sqrt(d)


def fourier_hadamard_residual(d: int) -> float:
    """Literal residual of the factorization F = (H_0 S)^dagger."""
    h0 = hadamard_h_a(d, 0).to_matrix()
    candidate = (h0 @ s_permutation(d)).conj().T
    return float(np.max(np.abs(fourier_matrix(d) - candidate)))


def fourier_hadamard_corrected_residual(d: int) -> float:
    """Residual of F = diag(q^k) (H_0 S)^dagger.

    (H_0 S)^dagger reproduces the Fourier matrix only up to a diagonal
    clock-phase factor on the left; this measures the corrected identity.
    """
    h0 = hadamard_h_a(d, 0).to_matrix()
    candidate = (h0 @ s_permutation(d)).conj().T
    clock = np.diag(np.exp(2j * np.pi * np.arange(d) / d))
    return float(np.max(np.abs(fourier_matrix(d) - clock @ candidate)))


def unbiasedness(b1: OrthonormalBasis, b2: OrthonormalBasis) -> float:
    """Max over all vector pairs of | |<u|v>| - 1/sqrt(d) |."""
    if b1.d != b2.d:
        raise ValueError(f"dimension mismatch: {b1.d} != {b2.d}")
    overlaps = np.abs(b1.vectors.conj().T @ b2.vectors)
    return float(np.max(np.abs(overlaps - 1.0 / math.sqrt(b1.d))))


def mub_family(p: int) -> list[OrthonormalBasis]:
    """The p+1 bases {a = 0..p-1} plus the computational one, p prime."""
    if p > MUB_PRIME_CAP:
        raise ValueError(f"p={p} exceeds the cap {MUB_PRIME_CAP}")
    if not is_prime(p):
        raise ValueError(f"complete families are built for prime dimension, got {p}")
    return [basis_b0a(p, a) for a in range(p)] + [computational_basis(p)]


def pairwise_deviations(bases: list[OrthonormalBasis]) -> dict[tuple[int, int], float]:
    """Unbiasedness deviation for every unordered pair of distinct bases."""
    out: dict[tuple[int, int], float] = {}
    for i in range(len(bases)):
        for j in range(i + 1, len(bases)):
            out[(i, j)] = unbiasedness(bases[i], bases[j])
    return out


def minimal_triple(d: int) -> list[OrthonormalBasis]:
    """{a=0, a=1, computational}: three mutually unbiased bases for any d."""
    return [basis_b0a(d, 0), basis_b0a(d, 1), computational_basis(d)]
