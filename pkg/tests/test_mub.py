import math

import numpy as np
import pytest

from conftest import max_abs
from finiteweyl.mub import (
    HadamardMatrix,
    basis_b0a,
    basis_exponent_table,
    computational_basis,
    fourier_hadamard_corrected_residual,
    fourier_hadamard_residual,
    hadamard_h_a,
    hadamard_reduction_defect,
    is_prime,
    minimal_triple,
    mub_family,
    pairwise_deviations,
    s_permutation,
    tau_power_matrix,
    unbiasedness,
)
from finiteweyl.operators import v_ra_eigenvalue, v_ra_matrix


def test_is_prime():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
              71, 73, 79, 83, 89, 97}
    for n in range(100):
        assert is_prime(n) == (n in primes)


def test_tau_power_matrix_quarter_turns_exact():
    table = np.array([[0, 3], [6, 9]])
    got = tau_power_matrix(table, 6)
    assert got[0, 0] == 1 + 0j and got[0, 1] == 1j
    assert got[1, 0] == -1 + 0j and got[1, 1] == -1j


def test_qubit_bases_match_hand_computation():
    b0 = basis_b0a(2, 0).vectors * math.sqrt(2)
    assert max_abs(b0[:, 0] - np.array([1, 1])) == 0.0
    assert max_abs(b0[:, 1] - np.array([-1, 1])) == 0.0
    b1 = basis_b0a(2, 1).vectors * math.sqrt(2)
    assert max_abs(b1[:, 0] - np.array([1j, 1])) == 0.0
    assert max_abs(b1[:, 1] - np.array([-1j, 1])) == 0.0


def test_bases_orthonormal():
    for d in range(2, 13):
        for a in range(d):
            assert basis_b0a(d, a).gram_defect() < 1e-10


def test_bases_diagonalize_weighted_shift():
    for d in range(2, 9):
        for a in range(d):
            v = v_ra_matrix(d, 0, a)
            vectors = basis_b0a(d, a).vectors
            for alpha in range(d):
                lam = v_ra_eigenvalue(d, 0, a, alpha)
                assert max_abs(v @ vectors[:, alpha] - lam * vectors[:, alpha]) < 1e-10


def test_basis_argument_validation():
    with pytest.raises(ValueError):
        basis_b0a(4, 4)
    with pytest.raises(ValueError):
        hadamard_h_a(4, -1)


def test_hadamard_properties():
    for d in range(2, 13):
        for a in range(d):
            h = hadamard_h_a(d, a)
            assert h.gram_defect() < 1e-9
            assert max_abs(np.abs(h.to_matrix()) - 1.0) < 1e-12
            assert hadamard_reduction_defect(d, a) < 1e-9


def test_hadamard_columns_are_scaled_basis_vectors():
    for d in (2, 3, 5, 6, 8):
        for a in range(d):
            h = hadamard_h_a(d, a)
            assert np.array_equal(h.exponents, basis_exponent_table(d, a))
            assert max_abs(h.to_matrix() / math.sqrt(d) - basis_b0a(d, a).vectors) < 1e-12


def test_s_permutation_is_scaled_involution():
    for d in (2, 3, 5, 8):
        s = s_permutation(d)
        assert max_abs(s @ s * d - np.eye(d)) < 1e-12


def test_fourier_hadamard_factorization_needs_clock_correction():
    # the bare factorization (H_0 S)^dagger misses a diagonal clock phase;
    # the corrected form holds to machine precision
    for d in range(2, 9):
        assert fourier_hadamard_corrected_residual(d) < 1e-10
        # the literal residual is the largest clock-phase defect over the
        # unit-modulus entries scaled by 1/sqrt(d)
        literal = fourier_hadamard_residual(d)
        expected_literal = max(
            abs(np.exp(-2j * np.pi * k / d) - 1.0) for k in range(d)
        ) / math.sqrt(d)
        assert abs(literal - expected_literal) < 1e-9


def test_unbiasedness_values():
    fam5 = mub_family(5)
    assert unbiasedness(fam5[-1], fam5[0]) < 1e-10
    comp = computational_basis(4)
    self_dev = unbiasedness(comp, comp)
    assert abs(self_dev - (1 - 0.5)) < 1e-12  # orthonormal pattern, not unbiased
    with pytest.raises(ValueError):
        unbiasedness(computational_basis(2), computational_basis(3))


def test_family_rejects_composite_and_caps():
    with pytest.raises(ValueError):
        mub_family(6)
    with pytest.raises(ValueError):
        mub_family(101)


def test_complete_families_prime():
    for p in (2, 3, 5, 7, 11, 13):
        bases = mub_family(p)
        assert len(bases) == p + 1
        assert bases[-1].label == "computational"
        worst = max(pairwise_deviations(bases).values())
        assert worst < 1e-9


def test_larger_prime_family():
    bases = mub_family(31)
    worst = max(pairwise_deviations(bases).values())
    assert worst < 1e-9


def test_composite_triples():
    for d in (4, 6, 8, 9, 10, 12):
        triple = minimal_triple(d)
        devs = pairwise_deviations(triple)
        assert len(devs) == 3
        assert max(devs.values()) < 1e-9


def test_qubit_family_structure():
    bases = mub_family(2)
    # eigenbases of the shift, of the shifted clock, and the computational one
    x_like, xz_like, comp = bases
    assert max_abs(np.abs(x_like.vectors) - 1 / math.sqrt(2)) < 1e-12
    assert max_abs(np.abs(xz_like.vectors) - 1 / math.sqrt(2)) < 1e-12
    assert np.array_equal(comp.vectors, np.eye(2))


def test_hadamard_json_round_trip_vectors():
    h = hadamard_h_a(6, 2)
    rebuilt = HadamardMatrix(d=h.d, a=h.a, exponents=h.exponents.copy())
    assert max_abs(h.to_matrix() - rebuilt.to_matrix()) == 0.0
