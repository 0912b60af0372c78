import math
import random
from itertools import product

import numpy as np
import pytest

from conftest import commutator, max_abs
from finiteweyl.basis import (
    TWO_QUBIT_SPREAD,
    cartan_partition_prime,
    cartan_partition_prime_power,
    commutator_coefficient_exponents,
    commuting_class_search,
    format_index,
    hs_orthogonality,
    indices_commute,
    partition_dense_commutation_defect,
    pauli_commutator,
    pauli_indices,
    structure_constants,
    su4_spread_check,
    tensor_indices,
    tensor_indices_commute,
    tensor_pauli,
    tensor_trace_pairing,
    u_ab,
    validate_cartan_partition,
)
from finiteweyl.mub import OrthonormalBasis, pairwise_deviations
from finiteweyl.search import (
    find_commuting_partition,
    greedy_commuting_classes,
    validate_partition,
)


# ---------------------------------------------------------------------------
# Operator basis and structure constants
# ---------------------------------------------------------------------------


def test_uab_validation():
    with pytest.raises(ValueError):
        u_ab(3, 3, 0)


def test_qubit_commutator_values():
    coeff, target = pauli_commutator(2, (1, 0), (0, 1), "-")
    assert coeff == 2 + 0j and target == (1, 1)
    anticoeff, _ = pauli_commutator(2, (1, 0), (0, 1), "+")
    assert anticoeff == 0j
    with pytest.raises(ValueError):
        pauli_commutator(2, (1, 0), (0, 1), "*")


def test_structure_constant_example_d3():
    coeff, target = pauli_commutator(3, (1, 0), (0, 1), "-")
    assert target == (1, 1)
    assert abs(coeff - (1 - np.exp(-2j * np.pi / 3))) < 1e-15


def test_structure_constants_close_dense_commutators():
    for d in range(2, 9):
        mats = {ab: u_ab(d, *ab).to_matrix() for ab in pauli_indices(d, True)}
        for ab, ab2 in product(pauli_indices(d, True), repeat=2):
            coeff, target = pauli_commutator(d, ab, ab2, "-")
            lhs = commutator(mats[ab], mats[ab2])
            assert max_abs(lhs - coeff * mats[target]) < 1e-12
            vanish = indices_commute(d, ab, ab2)
            first, second = commutator_coefficient_exponents(d, ab, ab2)
            assert (first == second) == vanish


def test_anticommutators_close_dense():
    for d in (2, 3, 4):
        mats = {ab: u_ab(d, *ab).to_matrix() for ab in pauli_indices(d, True)}
        for ab, ab2 in product(pauli_indices(d, True), repeat=2):
            coeff, target = pauli_commutator(d, ab, ab2, "+")
            lhs = mats[ab] @ mats[ab2] + mats[ab2] @ mats[ab]
            assert max_abs(lhs - coeff * mats[target]) < 1e-12


def test_odd_dimension_anticommutators_nonzero():
    for d in (3, 5, 7):
        for ab, ab2 in product(pauli_indices(d), repeat=2):
            coeff, _ = pauli_commutator(d, ab, ab2, "+")
            assert abs(coeff) > 1e-12


def test_structure_table():
    table = structure_constants(3)
    assert (((1, 0)), ((0, 1))) in table
    target, coeff = table[((1, 0), (0, 1))]
    assert target == (1, 1)
    # antisymmetry across the table
    for (ab, ab2), (target, coeff) in table.items():
        other_target, other_coeff = table[(ab2, ab)]
        assert other_target == target
        assert abs(coeff + other_coeff) < 1e-15
    # commuting pairs are omitted
    assert ((1, 1), (2, 2)) not in table
    with pytest.raises(ValueError):
        structure_constants(17)


def test_hs_orthogonality():
    for d in range(2, 9):
        assert hs_orthogonality(d) == 0.0


def test_gram_full_rank():
    for d in (2, 3, 4):
        ops = [u_ab(d, a, b).to_matrix().reshape(-1) for a, b in pauli_indices(d, True)]
        assert np.linalg.matrix_rank(np.array(ops)) == d * d


# ---------------------------------------------------------------------------
# Partition search
# ---------------------------------------------------------------------------


def test_prime_partitions_match_slope_listing():
    part3 = cartan_partition_prime(3)
    assert part3.classes == [
        [(0, 1), (0, 2)],
        [(1, 0), (2, 0)],
        [(1, 1), (2, 2)],
        [(1, 2), (2, 1)],
    ]
    part2 = cartan_partition_prime(2)
    assert part2.classes == [[(0, 1)], [(1, 0)], [(1, 1)]]
    with pytest.raises(ValueError):
        cartan_partition_prime(4)


def test_prime_partitions_validate():
    from finiteweyl.operators import monomial_mul

    for p in (2, 3, 5, 7, 11, 13):
        part = cartan_partition_prime(p)
        assert part.class_count == p + 1
        assert all(len(cls) == p - 1 for cls in part.classes)
        assert validate_cartan_partition(part)
        # exact route: intra-class products agree as monomials
        for cls in part.classes:
            for i, ab in enumerate(cls):
                for ab2 in cls[i + 1 :]:
                    u, v = u_ab(p, *ab), u_ab(p, *ab2)
                    assert monomial_mul(u, v) == monomial_mul(v, u)
    assert partition_dense_commutation_defect(cartan_partition_prime(7)) < 1e-12


def test_search_rediscovers_prime_partition():
    for p in (2, 3, 5, 7):
        found = commuting_class_search(p)
        assert found.complete
        assert found.classes == cartan_partition_prime(p).classes


def test_search_d4_certifies_incompleteness():
    result = commuting_class_search(4)
    assert not result.complete
    assert result.classes == [
        [(0, 1), (0, 2), (0, 3)],
        [(1, 0), (2, 0), (3, 0)],
        [(1, 1), (2, 2), (3, 3)],
    ]


def test_search_composite_dimensions():
    for d in (6, 8, 9):
        result = commuting_class_search(d)
        assert not result.complete
        flat = [v for cls in result.classes for v in cls]
        assert len(flat) == len(set(flat))
    with pytest.raises(ValueError):
        commuting_class_search(13)


def test_generic_search_engine():
    vertices = list(range(6))
    part = find_commuting_partition(vertices, lambda u, v: u // 2 == v // 2, 2)
    assert part == [[0, 1], [2, 3], [4, 5]]
    assert validate_partition(part, vertices, lambda u, v: u // 2 == v // 2, 2)
    assert find_commuting_partition(vertices, lambda u, v: False, 2) is None
    greedy = greedy_commuting_classes(vertices, lambda u, v: u // 2 == v // 2, 2)
    assert greedy == [[0, 1], [2, 3], [4, 5]]


# ---------------------------------------------------------------------------
# Tensor operators
# ---------------------------------------------------------------------------


def test_tensor_pauli_matches_kron():
    x = u_ab(2, 1, 0).to_matrix()
    z = u_ab(2, 0, 1).to_matrix()
    got = tensor_pauli((2, 2), (1, 0, 0, 1)).to_matrix()
    assert max_abs(got - np.kron(x, z)) == 0.0
    with pytest.raises(ValueError):
        tensor_pauli((2, 2), (1, 0, 0))


def test_tensor_commutation_rule():
    dims = (2, 2)
    assert tensor_indices_commute(dims, (1, 0, 1, 0), (0, 1, 0, 1))
    xx = tensor_pauli(dims, (1, 0, 1, 0)).to_matrix()
    zz = tensor_pauli(dims, (0, 1, 0, 1)).to_matrix()
    assert max_abs(commutator(xx, zz)) == 0.0
    # single-factor mismatch does not commute
    assert not tensor_indices_commute(dims, (1, 0, 0, 0), (0, 1, 0, 0))


def test_tensor_commutation_matches_dense():
    rng = random.Random(61)
    for dims in ((2, 2), (2, 3), (3, 3)):
        labels = tensor_indices(dims)
        for _ in range(150):
            u_idx, v_idx = rng.choice(labels), rng.choice(labels)
            u = tensor_pauli(dims, u_idx)
            v = tensor_pauli(dims, v_idx)
            dense_commutes = max_abs(commutator(u.to_matrix(), v.to_matrix())) < 1e-12
            assert dense_commutes == tensor_indices_commute(dims, u_idx, v_idx)


def test_tensor_trace_pairing():
    for dims in ((2, 2), (2, 3), (3, 3)):
        labels = tensor_indices(dims)[:10]
        total = math.prod(dims)
        for u_idx in labels:
            for v_idx in labels:
                got = tensor_trace_pairing(
                    tensor_pauli(dims, u_idx), tensor_pauli(dims, v_idx)
                )
                expected = complex(total) if u_idx == v_idx else 0j
                assert abs(got - expected) < 1e-12


def test_tensor_trace_equals_product_of_factor_traces():
    rng = random.Random(67)
    for dims in ((2, 2), (3, 3)):
        labels = tensor_indices(dims)
        for _ in range(100):
            u_idx, v_idx = rng.choice(labels), rng.choice(labels)
            u = tensor_pauli(dims, u_idx)
            v = tensor_pauli(dims, v_idx)
            dense = complex(np.trace(u.adjoint().to_matrix() @ v.to_matrix()))
            assert abs(tensor_trace_pairing(u, v) - dense) < 1e-10


def test_qutrit_pair_anticommutators_never_vanish():
    dims = (3, 3)
    rng = random.Random(71)
    labels = tensor_indices(dims)
    for _ in range(200):
        u_idx, v_idx = rng.choice(labels), rng.choice(labels)
        u = tensor_pauli(dims, u_idx).to_matrix()
        v = tensor_pauli(dims, v_idx).to_matrix()
        assert max_abs(u @ v + v @ u) > 1e-9


def test_tensor_partitions():
    p22 = cartan_partition_prime_power(2, 2)
    assert p22.class_count == 5
    assert all(len(cls) == 3 for cls in p22.classes)
    assert validate_cartan_partition(p22)

    p33 = cartan_partition_prime_power(3, 2)
    assert p33.class_count == 10
    assert all(len(cls) == 8 for cls in p33.classes)
    assert validate_cartan_partition(p33)

    p23 = cartan_partition_prime_power(2, 3)
    assert p23.class_count == 9
    assert all(len(cls) == 7 for cls in p23.classes)
    assert validate_cartan_partition(p23)

    with pytest.raises(ValueError):
        cartan_partition_prime_power(4, 2)
    with pytest.raises(ValueError):
        cartan_partition_prime_power(2, 1)
    with pytest.raises(ValueError):
        cartan_partition_prime_power(2, 5)


def test_printed_spread_is_a_valid_partition():
    dims = (2, 2)
    classes = [list(cls) for cls in TWO_QUBIT_SPREAD]
    assert validate_partition(
        classes,
        tensor_indices(dims),
        lambda u, v: tensor_indices_commute(dims, u, v),
        3,
    )


def test_su4_spread_report():
    report = su4_spread_check()
    assert report.overall
    assert report.sets_commute
    assert report.union_size == 15
    assert report.covers_all_nonidentity
    assert report.gram_defect < 1e-12
    assert report.gram_rank == 15
    assert report.spans_u4


def test_joint_eigenbases_of_classes_are_unbiased():
    for p in (2, 3, 5, 7):
        partition = cartan_partition_prime(p)
        bases = [OrthonormalBasis(d=p, label="computational", vectors=np.eye(p, dtype=complex))]
        for cls in partition.classes[1:]:
            generator = u_ab(p, *cls[0]).to_matrix()
            _, vectors = np.linalg.eig(generator)
            bases.append(OrthonormalBasis(d=p, label=str(cls[0]), vectors=vectors))
        assert max(pairwise_deviations(bases).values()) < 1e-9


def test_format_index():
    assert format_index((1, 2), (7, 7)) == "(12)"
    assert format_index((1, 0, 1, 1), (2, 2, 2, 2)) == "(1011)"
    assert format_index((1, 11), (12, 12)) == "(1,11)"


def test_determinants_special_unitary_odd():
    for d in (3, 5, 7):
        for a, b in pauli_indices(d, True):
            assert u_ab(d, a, b).determinant().is_one
