"""Operators on the d-dimensional Hilbert space.

Conventions (fixed once, used everywhere): basis kets are indexed by
k = 0..d-1 and the two generators act as

    X |k> = |k-1 mod d>        (cyclic shift)
    Z |k> = q^k |k>            (clock, q = exp(2*pi*i/d))

so XZ = q ZX and X^d = Z^d = I.  A monomial operator tau^t X^b Z^c is
stored by its exact phase exponent and the two powers; its matrix has one
nonzero entry per column, namely tau^(t+2ck) at row (k-b) mod d.  Products,
adjoints, traces and determinants of monomials are computed in integer
arithmetic.  Everything without monomial structure (v_ra for real r, the
Fourier matrix, the angular-momentum polar triple) is a dense complex
matrix.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .phases import PhaseExponent


@dataclass(frozen=True)
class MonomialOperator:
    """Exact representation of tau^t X^shift Z^clock in dimension d."""

    phase: PhaseExponent
    shift: int
    clock: int

    def __post_init__(self) -> None:
        d = self.phase.d
        object.__setattr__(self, "shift", self.shift % d)
        object.__setattr__(self, "clock", self.clock % d)

    @property
    def d(self) -> int:
        return self.phase.d

    @classmethod
    def identity(cls, d: int) -> "MonomialOperator":
        return cls(PhaseExponent.one(d), 0, 0)

    @classmethod
    def from_tau_exponent(cls, d: int, t: int, shift: int, clock: int) -> "MonomialOperator":
        return cls(PhaseExponent(t, d), shift, clock)

    @classmethod
    def w(cls, d: int, a: int, b: int, c: int) -> "MonomialOperator":
        """q^a X^b Z^c."""
        return cls(PhaseExponent.q_power(a, d), b, c)

    def __matmul__(self, other: "MonomialOperator") -> "MonomialOperator":
        return monomial_mul(self, other)

    def __pow__(self, n: int) -> "MonomialOperator":
        if n < 0:
            return self.adjoint() ** (-n)
        out = MonomialOperator.identity(self.d)
        for _ in range(n):
            out = monomial_mul(out, self)
        return out

    def adjoint(self) -> "MonomialOperator":
        d = self.d
        b = (-self.shift) % d
        c = (-self.clock) % d
        # (tau^t X^b Z^c)^dagger = tau^-t Z^-c X^-b, then reorder ZX -> XZ.
        t = -self.phase.t - 2 * c * b
        return MonomialOperator(PhaseExponent(t, d), b, c)

    def to_matrix(self) -> np.ndarray:
        d = self.d
        mat = np.zeros((d, d), dtype=complex)
        for k in range(d):
            mat[(k - self.shift) % d, k] = PhaseExponent(
                self.phase.t + 2 * self.clock * k, d
            ).to_complex()
        return mat

    def trace_exact(self) -> PhaseExponent | None:
        """d * tau^t when the monomial is scalar, None when traceless."""
        if self.shift == 0 and self.clock == 0:
            return self.phase
        return None

    def trace(self) -> complex:
        scalar = self.trace_exact()
        return 0j if scalar is None else self.d * scalar.to_complex()

    def determinant(self) -> PhaseExponent:
        """Exact determinant: permutation sign times the product of entries."""
        d = self.d
        cycles = math.gcd(self.shift, d)
        sign_exp = d * (d - cycles)  # tau^d = -1 encodes the sign
        entries_exp = d * self.phase.t + self.clock * d * (d - 1)
        return PhaseExponent(sign_exp + entries_exp, d)

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "tau_exp": self.phase.t,
            "shift": self.shift,
            "clock": self.clock,
        }

    @classmethod
    def from_json(cls, payload: dict) -> "MonomialOperator":
        return cls.from_tau_exponent(
            payload["d"], payload["tau_exp"], payload["shift"], payload["clock"]
        )


def monomial_mul(u: MonomialOperator, v: MonomialOperator) -> MonomialOperator:
    """Product via the reordering rule Z^c X^b = q^(-cb) X^b Z^c."""
    if u.d != v.d:
        raise ValueError(f"dimension mismatch: {u.d} != {v.d}")
    d = u.d
    t = u.phase.t + v.phase.t - 2 * u.clock * v.shift
    return MonomialOperator(PhaseExponent(t, d), u.shift + v.shift, u.clock + v.clock)


def weyl_pair(d: int) -> tuple[MonomialOperator, MonomialOperator]:
    """The shift X and the clock Z as exact monomials."""
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    x = MonomialOperator(PhaseExponent.one(d), 1, 0)
    z = MonomialOperator(PhaseExponent.one(d), 0, 1)
    return x, z


def w_abc(d: int, a: int, b: int, c: int) -> MonomialOperator:
    return MonomialOperator.w(d, a, b, c)


def trace_pairing_exact(u: MonomialOperator, v: MonomialOperator) -> PhaseExponent | None:
    """Tr(u^dagger v) / d as an exact phase, or None when the trace vanishes."""
    return monomial_mul(u.adjoint(), v).trace_exact()


def w_abc_trace_pairing(u: MonomialOperator, v: MonomialOperator) -> complex:
    """Tr(u^dagger v); equals q^(a'-a) d when powers match, else 0."""
    scalar = trace_pairing_exact(u, v)
    return 0j if scalar is None else u.d * scalar.to_complex()


def v_ra_matrix(d: int, r: float = 0.0, a: float = 0.0) -> np.ndarray:
    """Weighted cyclic shift: superdiagonal q^(ka), corner exp(2*pi*i*j*r).

    Here j = (d-1)/2.  For integer r and a the matrix is monomial with
    root-of-unity entries; both parameters are accepted as floats.
    """
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    mat = np.zeros((d, d), dtype=complex)
    for k in range(1, d):
        mat[k - 1, k] = cmath.exp(2j * cmath.pi * k * a / d)
    mat[d - 1, 0] = cmath.exp(1j * cmath.pi * (d - 1) * r)
    return mat


def v_ra_eigenvalue(d: int, r: float, a: float, alpha: int) -> complex:
    """q^(j(a+r) - alpha) with j = (d-1)/2."""
    return cmath.exp(2j * cmath.pi * ((d - 1) * (a + r) / 2 - alpha) / d)


def v_ra_eigenvector(d: int, r: float, a: float, alpha: int) -> np.ndarray:
    """Normalized eigenvector of v_ra for the eigenvalue indexed by alpha."""
    if not 0 <= alpha <= d - 1:
        raise ValueError(f"alpha must lie in 0..{d - 1}, got {alpha}")
    j = (d - 1) / 2
    vec = np.zeros(d, dtype=complex)
    for k in range(d):
        m = j - k
        expo = (j + m) * (j - m + 1) * a / 2 - j * m * r + (j + m) * alpha
        vec[k] = cmath.exp(2j * cmath.pi * expo / d)
    return vec / math.sqrt(d)


def fourier_matrix(d: int) -> np.ndarray:
    """Symmetric unitary with entries q^(-kk')/sqrt(d); satisfies F^4 = I."""
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    k = np.arange(d)
    return np.exp(-2j * np.pi * np.outer(k, k) / d) / math.sqrt(d)


def h_matrix(d: int) -> np.ndarray:
    """Diagonal of sqrt((j+m)(j-m+1)) in the k = j - m indexing."""
    k = np.arange(d)
    return np.diag(np.sqrt((d - 1.0 - k) * (k + 1.0)))


def polar_su2_ops(
    d: int, r: float = 0.0, a: float = 0.0
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Ladder triple (j+, j-, jz) from the polar decomposition h, v_ra."""
    v = v_ra_matrix(d, r, a)
    h = h_matrix(d)
    h2 = h @ h
    jplus = h @ v
    jminus = v.conj().T @ h
    jz = 0.5 * (h2 - v.conj().T @ h2 @ v)
    return jplus, jminus, jz


def ladder_matrices(d: int, a: float = 0.0) -> tuple[np.ndarray, np.ndarray]:
    """j+ and j- written directly from their ladder actions (s = 1/2 phases)."""
    jplus = np.zeros((d, d), dtype=complex)
    jminus = np.zeros((d, d), dtype=complex)
    for k in range(1, d):
        jplus[k - 1, k] = cmath.exp(2j * cmath.pi * k * a / d) * math.sqrt(k * (d - k))
    for k in range(d - 1):
        jminus[k + 1, k] = cmath.exp(-2j * cmath.pi * (k + 1) * a / d) * math.sqrt(
            (d - 1 - k) * (k + 1)
        )
    return jplus, jminus


def jz_matrix(d: int) -> np.ndarray:
    """Closed form diag(j - k), the angular-momentum z component."""
    k = np.arange(d)
    return np.diag((d - 1) / 2 - k).astype(complex)


def t_operator(
    d: int,
    m1: int,
    m2: int,
    r: float = 0.0,
    a: float = 0.0,
    ordering: str = "zv",
) -> np.ndarray:
    """tau^(m1 m2) v_ra^m1 z^m2 in either operator ordering.

    ordering "vz" is the v-then-z product as one would read it; "zv" puts
    the clock factor first and is the ordering under which the sine-bracket
    identity closes without a residual phase, hence the default.  Zero
    digits are allowed (the factor degenerates to the identity).
    """
    if m1 < 0 or m2 < 0:
        raise ValueError("t-operator digits must be >= 0")
    if ordering not in ("vz", "zv"):
        raise ValueError(f"ordering must be 'vz' or 'zv', got {ordering!r}")
    v = v_ra_matrix(d, r, a)
    z = weyl_pair(d)[1].to_matrix()
    vm = np.linalg.matrix_power(v, m1)
    zm = np.linalg.matrix_power(z, m2)
    scalar = cmath.exp(1j * cmath.pi * m1 * m2 / d)
    return scalar * (vm @ zm) if ordering == "vz" else scalar * (zm @ vm)


def unitary_defect(mat: np.ndarray) -> float:
    """Max-norm of M^dagger M - I."""
    d = mat.shape[0]
    return float(np.max(np.abs(mat.conj().T @ mat - np.eye(d))))
