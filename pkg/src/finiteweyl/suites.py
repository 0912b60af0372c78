"""Named verification suites behind the command-line `verify` command.

Each suite re-derives the identities its module is responsible for and
reports one pass/fail check per identity.  Checks are deterministic:
random sampling uses fixed seeds, orderings are fixed, and timing is kept
out of the payload (it is reported on stderr only).

One check is a verdict on a claim that is false in general and fails by
design when exercised in the failing regime: the class-count formula
d(d+1)-1 holds only for prime modulus, so `group.class_count_formula`
fails for composite d.  The suite keeps the check because the package
verifies claims rather than assuming them.
"""

from __future__ import annotations

import math
import random
import time
from itertools import product
from typing import Callable

import numpy as np

from . import basis as basis_mod
from . import group as group_mod
from . import heisenberg as hw_mod
from . import mub as mub_mod
from . import operators as op_mod
from .report import VerificationReport

DEFAULT_TOLERANCE = 1e-9


def _run(
    report: VerificationReport,
    name: str,
    tolerance: float,
    fn: Callable[[], float | bool],
) -> None:
    t0 = time.perf_counter()
    result = fn()
    elapsed = time.perf_counter() - t0
    deviation = (0.0 if result else 1.0) if isinstance(result, bool) else float(result)
    report.add(name, deviation, tolerance, elapsed)


# ---------------------------------------------------------------------------
# Continuous group
# ---------------------------------------------------------------------------


def _dyadic_grid() -> list[hw_mod.HWElement]:
    values = [-1.0, -0.5, 0.0, 0.5, 1.0]
    return [hw_mod.HWElement(x, y, z) for x, y, z in product(values, repeat=3)]


def suite_hw(tolerance: float = DEFAULT_TOLERANCE) -> VerificationReport:
    report = VerificationReport("hw")
    grid = _dyadic_grid()
    pairs = hw_mod.random_dyadic_elements(200, seed=11)

    def composed_laws() -> bool:
        ident = hw_mod.HW_IDENTITY
        for g in grid:
            if g.compose(g.inverse()) != ident or ident.compose(g) != g:
                return False
        return True

    _run(report, "identity_and_inverse", 0.0, composed_laws)

    def commutator_closed() -> bool:
        for g, h in zip(pairs[:100], pairs[100:]):
            if hw_mod.hw_commutator(g, h) != hw_mod.hw_commutator_closed(g, h):
                return False
        return True

    _run(report, "commutator_closed_form", 0.0, commutator_closed)

    def commute_iff() -> bool:
        for g, h in zip(pairs[:100], pairs[100:]):
            same = g.compose(h) == h.compose(g)
            if same != hw_mod.hw_commutes(g, h):
                return False
        return True

    _run(report, "commute_iff_cross_term_vanishes", 0.0, commute_iff)

    def conjugation_closed() -> bool:
        for g, h in zip(pairs[:100], pairs[100:]):
            if hw_mod.hw_conjugate(g, h) != hw_mod.hw_conjugate_closed(g, h):
                return False
        return True

    _run(report, "conjugation_closed_form", 0.0, conjugation_closed)

    def associativity() -> bool:
        rng = random.Random(5)
        for _ in range(400):
            g, h, k = (pairs[rng.randrange(len(pairs))] for _ in range(3))
            if g.compose(h).compose(k) != g.compose(h.compose(k)):
                return False
        return True

    _run(report, "associativity", 0.0, associativity)

    def matrix_law() -> bool:
        for g, h in zip(pairs[:100], pairs[100:]):
            lhs = hw_mod.hw_matrix(g) @ hw_mod.hw_matrix(h)
            rhs = hw_mod.hw_matrix(hw_mod.hw_matrix_law(g, h))
            if not np.array_equal(lhs, rhs):
                return False
        return True

    _run(report, "matrix_composition_law", 0.0, matrix_law)

    def bijection_homomorphism() -> bool:
        for g, h in zip(pairs[:100], pairs[100:]):
            lhs = hw_mod.hw_matrix(hw_mod.hw_to_matrix_params(g)) @ hw_mod.hw_matrix(
                hw_mod.hw_to_matrix_params(h)
            )
            rhs = hw_mod.hw_matrix(hw_mod.hw_to_matrix_params(g.compose(h)))
            if not np.array_equal(lhs, rhs):
                return False
        return True

    _run(report, "matrix_model_isomorphism", 0.0, bijection_homomorphism)

    _run(report, "lie_brackets", 0.0, lambda: hw_mod.hw_lie_check()["overall"])

    def exp_series() -> float:
        worst = 0.0
        for g in pairs[:50]:
            scaled = hw_mod.HWElement(g.x / 4, g.y / 4, g.z / 4)
            closed = hw_mod.hw_matrix(scaled)
            worst = max(
                worst, float(np.max(np.abs(hw_mod.series_exponential(scaled) - closed)))
            )
        return worst

    _run(report, "exponential_matches_series", 1e-10, exp_series)

    def ambivalence() -> bool:
        for g in grid:
            expected = (g.y, g.z) == (0.0, 0.0) and g.x == 0.0
            if hw_mod.hw_class_is_ambivalent(g) != expected:
                return False
        return True

    _run(report, "only_identity_class_ambivalent", 0.0, ambivalence)
    return report


# ---------------------------------------------------------------------------
# Finite group
# ---------------------------------------------------------------------------


def suite_group(
    d: int = 3,
    cap: int = group_mod.DEFAULT_BRUTE_FORCE_CAP,
    tolerance: float = DEFAULT_TOLERANCE,
) -> VerificationReport:
    report = VerificationReport("group")
    elements = group_mod.pd_elements(d)
    rng = random.Random(17)

    def associativity() -> bool:
        if d <= 3:
            triples = product(elements, repeat=3)
        else:
            triples = (
                (rng.choice(elements), rng.choice(elements), rng.choice(elements))
                for _ in range(10_000)
            )
        return all(
            g.compose(h).compose(k) == g.compose(h.compose(k)) for g, h, k in triples
        )

    _run(report, "associativity", 0.0, associativity)

    def inverses() -> bool:
        ident = group_mod.pd_identity(d)
        return all(g.compose(g.inverse()) == ident for g in elements)

    _run(report, "inverses", 0.0, inverses)

    census = group_mod.pd_conjugacy_classes(d, cap)

    def census_consistent() -> bool:
        total = sum(len(cls) for cls in census.classes)
        if total != d**3 or census.singleton_count != d:
            return False
        # orbit-stabilizer: |class| * |centralizer| = |group|
        return all(
            len(cls) * group_mod.pd_centralizer_size(cls[0]) == d**3
            for cls in census.classes
        )

    _run(report, "class_census_brute_force", 0.0, census_consistent)
    _run(
        report,
        "class_count_formula",
        0.0,
        lambda: census.class_count == d * (d + 1) - 1,
    )
    _run(
        report,
        "center_classes_are_singletons",
        0.0,
        lambda: all(
            len(cls) == 1 for cls in census.classes if (cls[0].b, cls[0].c) == (0, 0)
        ),
    )
    _run(
        report,
        "centralizers_multiple_of_d_squared",
        0.0,
        lambda: all(
            group_mod.pd_centralizer_size(g) % d**2 == 0
            and (group_mod.pd_centralizer_size(g) == d**3) == ((g.b, g.c) == (0, 0))
            for g in elements
        ),
    )
    _run(report, "ambivalent_only_for_d2", 0.0, lambda: group_mod.pd_is_ambivalent(d, cap) == (d == 2))

    def burnside() -> bool:
        one_dim, d_dim = group_mod.pd_irrep_counts(d)
        return one_dim == d * d and d_dim == d - 1

    _run(report, "squared_dimension_identity", 0.0, burnside)
    _run(report, "center_is_center", 0.0, lambda: group_mod.pd_center_is_center(d))
    _run(
        report,
        "quotient_by_center_is_double_cyclic",
        0.0,
        lambda: group_mod.pd_quotient_is_double_cyclic(d),
    )

    def subgroups() -> bool:
        table = {s.name: s for s in group_mod.pd_named_subgroups(d, cap)}
        expectations = {
            "center": (True, f"cyclic-Z{d}"),
            "shift-axis": (False, f"cyclic-Z{d}"),
            "clock-axis": (False, f"cyclic-Z{d}"),
            "phase-shift-plane": (True, f"Z{d}xZ{d}"),
            "phase-clock-plane": (True, f"Z{d}xZ{d}"),
        }
        for name, (normal, tag) in expectations.items():
            sub = table[name]
            if sub.is_normal != normal or sub.isomorphism != tag:
                return False
        diagonal = table["diagonal-plane"]
        return diagonal.is_normal and diagonal.isomorphism != "nonabelian"

    _run(report, "named_subgroups", 0.0, subgroups)

    def characters() -> bool:
        sample = elements if d <= 3 else [rng.choice(elements) for _ in range(40)]
        for m, n in product(range(d), repeat=2):
            chi = group_mod.pd_character(m, n, d)
            for g in sample:
                for h in sample[:10]:
                    if chi(g.compose(h)) != chi(g) * chi(h):
                        return False
        return True

    _run(report, "characters_are_homomorphisms", 0.0, characters)

    def irreps() -> bool:
        sample = elements if d <= 3 else [rng.choice(elements) for _ in range(30)]
        for k in range(1, d):
            rho = group_mod.pd_irrep(k, d)
            for g in sample:
                for h in sample[:10]:
                    if op_mod.monomial_mul(rho(g), rho(h)) != rho(g.compose(h)):
                        return False
        return True

    _run(report, "monomial_representations_are_homomorphisms", 0.0, irreps)

    def irrep_norms() -> bool:
        for k in range(1, d):
            norm = group_mod.irrep_character_norm(k, d)
            if norm != math.gcd(k, d):
                return False
            if math.gcd(k, d) == 1 and norm != 1:
                return False
        return True

    _run(report, "character_norms_count_components", 0.0, irrep_norms)

    def bracket_properties() -> bool:
        for _ in range(300):
            g, h = rng.choice(elements), rng.choice(elements)
            if group_mod.pd_lie_bracket(g, g).is_zero is False:
                return False
            lhs = group_mod.pd_lie_bracket(g, h)
            rhs = group_mod.pd_lie_bracket(h, g).scale(-1)
            if lhs != rhs:
                return False
            vanishes = (g.c * h.b - g.b * h.c) % d == 0
            if lhs.is_zero != vanishes:
                return False
        return True

    _run(report, "bracket_antisymmetry", 0.0, bracket_properties)

    def jacobi() -> bool:
        for _ in range(1000):
            g, h, k = (rng.choice(elements) for _ in range(3))
            total = (
                group_mod.pd_lie_bracket_combinations(
                    group_mod.pd_lie_bracket(g, h), group_mod.FormalCombination.single(k)
                )
                + group_mod.pd_lie_bracket_combinations(
                    group_mod.pd_lie_bracket(h, k), group_mod.FormalCombination.single(g)
                )
                + group_mod.pd_lie_bracket_combinations(
                    group_mod.pd_lie_bracket(k, g), group_mod.FormalCombination.single(h)
                )
            )
            if not total.is_zero:
                return False
        return True

    _run(report, "bracket_jacobi", 0.0, jacobi)

    def bracket_monomial() -> bool:
        if d <= 4:
            pairs = product(elements, repeat=2)
        else:
            pairs = ((rng.choice(elements), rng.choice(elements)) for _ in range(2000))
        return all(group_mod.bracket_matches_monomial_commutator(g, h) for g, h in pairs)

    _run(report, "bracket_matches_monomial_commutator", 0.0, bracket_monomial)

    def order_minus_classes() -> bool:
        value = group_mod.class_count_minus_order_factor(d)
        if d % 2 == 0:
            return value % 2 == 1
        if d % 4 == 3:
            return value % 16 == 0
        return value % 32 == 0

    _run(report, "order_minus_class_count_divisibility", 0.0, order_minus_classes)
    return report


# ---------------------------------------------------------------------------
# Weyl operators
# ---------------------------------------------------------------------------


def suite_weyl(d: int = 4, tolerance: float = DEFAULT_TOLERANCE) -> VerificationReport:
    report = VerificationReport("weyl")
    x, z = op_mod.weyl_pair(d)
    rng = random.Random(23)

    def weyl_relations() -> bool:
        q = op_mod.MonomialOperator.w(d, 1, 0, 0)
        if op_mod.monomial_mul(x, z) != op_mod.monomial_mul(q, op_mod.monomial_mul(z, x)):
            return False
        return x**d == op_mod.MonomialOperator.identity(d) and z**d == op_mod.MonomialOperator.identity(d)

    _run(report, "weyl_pair_relations_exact", 0.0, weyl_relations)

    def random_monomial() -> op_mod.MonomialOperator:
        return op_mod.MonomialOperator.from_tau_exponent(
            d, rng.randrange(2 * d), rng.randrange(d), rng.randrange(d)
        )

    def monomial_vs_dense() -> float:
        worst = 0.0
        for _ in range(300):
            u, v = random_monomial(), random_monomial()
            dense = u.to_matrix() @ v.to_matrix()
            worst = max(
                worst, float(np.max(np.abs(dense - op_mod.monomial_mul(u, v).to_matrix())))
            )
        return worst

    _run(report, "monomial_product_matches_dense", 1e-12, monomial_vs_dense)

    def monomial_unitary() -> float:
        worst = 0.0
        for _ in range(100):
            worst = max(worst, op_mod.unitary_defect(random_monomial().to_matrix()))
        return worst

    _run(report, "monomials_unitary", 1e-12, monomial_unitary)

    def vra_cyclic() -> float:
        worst = 0.0
        for r in (0.0, 1.0, 0.37):
            for a in range(d):
                v = op_mod.v_ra_matrix(d, r, a)
                scalar = np.exp(1j * np.pi * (d - 1) * (a + r))
                worst = max(
                    worst,
                    float(
                        np.max(np.abs(np.linalg.matrix_power(v, d) - scalar * np.eye(d)))
                    ),
                )
        return worst

    _run(report, "vra_cyclic_power", 1e-10, vra_cyclic)

    def vra_eigensystem() -> float:
        worst = 0.0
        for r in (0, 1):
            for a in range(d):
                v = op_mod.v_ra_matrix(d, r, a)
                for alpha in range(d):
                    vec = op_mod.v_ra_eigenvector(d, r, a, alpha)
                    lam = op_mod.v_ra_eigenvalue(d, r, a, alpha)
                    worst = max(worst, float(np.max(np.abs(v @ vec - lam * vec))))
        return worst

    _run(report, "vra_eigenvectors", 1e-10, vra_eigensystem)

    def vra_spectrum_nondegenerate() -> bool:
        for r in (0, 1):
            for a in range(d):
                values = [op_mod.v_ra_eigenvalue(d, r, a, alpha) for alpha in range(d)]
                for i in range(d):
                    for j in range(i + 1, d):
                        if abs(values[i] - values[j]) < 1e-9:
                            return False
        return True

    _run(report, "vra_spectrum_nondegenerate", 0.0, vra_spectrum_nondegenerate)

    def vra_factorization() -> float:
        worst = 0.0
        zmat = z.to_matrix()
        for r in (0.0, 1.0, 0.37):
            for a in range(d):
                lhs = op_mod.v_ra_matrix(d, r, a)
                rhs = op_mod.v_ra_matrix(d, r, 0) @ np.linalg.matrix_power(zmat, a)
                worst = max(worst, float(np.max(np.abs(lhs - rhs))))
        return worst

    _run(report, "vra_equals_vr0_clock_power", 1e-12, vra_factorization)

    def shift_clock_isospectral() -> bool:
        xs = np.sort_complex(np.round(np.linalg.eigvals(x.to_matrix()), 9))
        zs = np.sort_complex(np.round(np.linalg.eigvals(z.to_matrix()), 9))
        return bool(np.max(np.abs(xs - zs)) < 1e-8)

    _run(report, "shift_and_clock_isospectral", 0.0, shift_clock_isospectral)

    def fourier_identities() -> float:
        f = op_mod.fourier_matrix(d)
        worst = op_mod.unitary_defect(f)
        worst = max(
            worst, float(np.max(np.abs(np.linalg.matrix_power(f, 4) - np.eye(d))))
        )
        worst = max(
            worst,
            float(np.max(np.abs(f @ x.to_matrix() @ f.conj().T - z.to_matrix()))),
        )
        return worst

    _run(report, "fourier_identities", 1e-10, fourier_identities)

    def su2_commutations() -> float:
        worst = 0.0
        for r in (0, 1):
            for a in range(d):
                jp, jm, jz = op_mod.polar_su2_ops(d, r, a)
                worst = max(
                    worst,
                    float(np.max(np.abs(jz @ jp - jp @ jz - jp))),
                    float(np.max(np.abs(jz @ jm - jm @ jz + jm))),
                    float(np.max(np.abs(jp @ jm - jm @ jp - 2 * jz))),
                )
        return worst

    _run(report, "su2_polar_commutations", tolerance, su2_commutations)

    def su2_ladder_phases() -> float:
        worst = 0.0
        for r in (0, 1):
            for a in range(d):
                jp, jm, jz = op_mod.polar_su2_ops(d, r, a)
                lp, lm = op_mod.ladder_matrices(d, a)
                worst = max(
                    worst,
                    float(np.max(np.abs(jp - lp))),
                    float(np.max(np.abs(jm - lm))),
                    float(np.max(np.abs(jz - op_mod.jz_matrix(d)))),
                )
        return worst

    _run(report, "su2_ladder_actions", tolerance, su2_ladder_phases)

    def sine_bracket_zv() -> float:
        worst = 0.0
        for m1, m2, n1, n2 in product(range(1, 4), repeat=4):
            tm = op_mod.t_operator(d, m1, m2)
            tn = op_mod.t_operator(d, n1, n2)
            tmn = op_mod.t_operator(d, m1 + n1, m2 + n2)
            wedge = m1 * n2 - m2 * n1
            rhs = 2j * math.sin(math.pi * wedge / d) * tmn
            worst = max(worst, float(np.max(np.abs(tm @ tn - tn @ tm - rhs))))
        return worst

    _run(report, "sine_bracket_clock_first", tolerance, sine_bracket_zv)

    def sine_bracket_vz_modulus() -> float:
        worst = 0.0
        for m1, m2, n1, n2 in product(range(1, 4), repeat=4):
            tm = op_mod.t_operator(d, m1, m2, ordering="vz")
            tn = op_mod.t_operator(d, n1, n2, ordering="vz")
            tmn = op_mod.t_operator(d, m1 + n1, m2 + n2, ordering="vz")
            comm = tm @ tn - tn @ tm
            wedge = m1 * n2 - m2 * n1
            target = 2 * abs(math.sin(math.pi * wedge / d))
            if target < 1e-12:
                worst = max(worst, float(np.max(np.abs(comm))))
                continue
            pivot = np.unravel_index(np.argmax(np.abs(tmn)), tmn.shape)
            lam = comm[pivot] / tmn[pivot]
            worst = max(worst, abs(abs(lam) - target))
            worst = max(worst, float(np.max(np.abs(comm - lam * tmn))))
        return worst

    _run(report, "sine_bracket_printed_order_modulus", tolerance, sine_bracket_vz_modulus)

    def trace_pairing() -> bool:
        for a, b, c, a2, b2, c2 in product(range(min(d, 3)), repeat=6):
            u = op_mod.w_abc(d, a, b, c)
            v = op_mod.w_abc(d, a2, b2, c2)
            got = op_mod.w_abc_trace_pairing(u, v)
            expected = (
                d * op_mod.PhaseExponent.q_power(a2 - a, d).to_complex()
                if (b, c) == (b2, c2)
                else 0j
            )
            if abs(got - expected) > 1e-12:
                return False
        return True

    _run(report, "w_trace_pairing", 0.0, trace_pairing)
    return report


def suite_su2(d: int, tolerance: float = DEFAULT_TOLERANCE) -> VerificationReport:
    """Just the angular-momentum polar-decomposition checks, for `weyl su2-check`."""
    full = suite_weyl(d, tolerance)
    report = VerificationReport("su2")
    report.checks = [c for c in full.checks if c.name.startswith("su2_")]
    return report


# ---------------------------------------------------------------------------
# Mutually unbiased bases
# ---------------------------------------------------------------------------


def suite_mub(
    p: int | None = None,
    d: int | None = None,
    tolerance: float = DEFAULT_TOLERANCE,
) -> VerificationReport:
    report = VerificationReport("mub")
    dim = p if p is not None else (d if d is not None else 3)

    def orthonormal() -> float:
        return max(mub_mod.basis_b0a(dim, a).gram_defect() for a in range(dim))

    _run(report, "bases_orthonormal", 1e-10, orthonormal)

    def eigen_relation() -> float:
        worst = 0.0
        for a in range(dim):
            v = op_mod.v_ra_matrix(dim, 0, a)
            vectors = mub_mod.basis_b0a(dim, a).vectors
            for alpha in range(dim):
                lam = op_mod.v_ra_eigenvalue(dim, 0, a, alpha)
                worst = max(
                    worst,
                    float(np.max(np.abs(v @ vectors[:, alpha] - lam * vectors[:, alpha]))),
                )
        return worst

    _run(report, "bases_diagonalize_weighted_shift", 1e-10, eigen_relation)

    def hadamard_identities() -> float:
        worst = 0.0
        for a in range(dim):
            h = mub_mod.hadamard_h_a(dim, a)
            worst = max(worst, h.gram_defect())
            worst = max(worst, float(np.max(np.abs(np.abs(h.to_matrix()) - 1.0))))
            worst = max(worst, mub_mod.hadamard_reduction_defect(dim, a))
        return worst

    _run(report, "hadamard_identities", tolerance, hadamard_identities)

    def hadamard_columns() -> bool:
        for a in range(dim):
            h = mub_mod.hadamard_h_a(dim, a)
            table = mub_mod.basis_exponent_table(dim, a)
            if not np.array_equal(h.exponents, table):
                return False
        return True

    _run(report, "hadamard_columns_share_basis_exponents", 0.0, hadamard_columns)
    _run(
        report,
        "fourier_hadamard_clock_corrected",
        1e-10,
        lambda: mub_mod.fourier_hadamard_corrected_residual(dim),
    )

    if mub_mod.is_prime(dim):
        bases = mub_mod.mub_family(dim)
        prefix = "family_unbiased"
    else:
        bases = mub_mod.minimal_triple(dim)
        prefix = "minimal_triple_unbiased"
    t0 = time.perf_counter()
    deviations = mub_mod.pairwise_deviations(bases)
    elapsed = (time.perf_counter() - t0) / max(len(deviations), 1)
    for (i, j), value in deviations.items():
        report.add(
            f"{prefix}_{bases[i].label}_{bases[j].label}", value, tolerance, elapsed
        )
    return report


# ---------------------------------------------------------------------------
# Pauli basis of u(d)
# ---------------------------------------------------------------------------


def suite_basis(
    d: int = 3,
    tensor: tuple[int, int] | None = None,
    tolerance: float = DEFAULT_TOLERANCE,
) -> VerificationReport:
    report = VerificationReport("basis")

    _run(report, "hilbert_schmidt_orthogonality", 0.0, lambda: basis_mod.hs_orthogonality(d))

    def determinants() -> bool:
        if d % 2 == 0:
            return True
        return all(
            basis_mod.u_ab(d, a, b).determinant().is_one
            for a, b in basis_mod.pauli_indices(d, include_identity=True)
        )

    _run(report, "odd_dimension_special_unitary", 0.0, determinants)

    def structure_closure() -> float:
        worst = 0.0
        for ab in basis_mod.pauli_indices(d, include_identity=True):
            for ab2 in basis_mod.pauli_indices(d, include_identity=True):
                coeff, target = basis_mod.pauli_commutator(d, ab, ab2, "-")
                lhs = (
                    basis_mod.u_ab(d, *ab).to_matrix() @ basis_mod.u_ab(d, *ab2).to_matrix()
                    - basis_mod.u_ab(d, *ab2).to_matrix() @ basis_mod.u_ab(d, *ab).to_matrix()
                )
                rhs = coeff * basis_mod.u_ab(d, *target).to_matrix()
                worst = max(worst, float(np.max(np.abs(lhs - rhs))))
        return worst

    _run(report, "structure_constants_close_dense_commutators", 1e-12, structure_closure)

    def antisymmetry_and_vanishing() -> bool:
        for ab in basis_mod.pauli_indices(d, include_identity=True):
            for ab2 in basis_mod.pauli_indices(d, include_identity=True):
                c1, t1 = basis_mod.pauli_commutator(d, ab, ab2, "-")
                c2, t2 = basis_mod.pauli_commutator(d, ab2, ab, "-")
                if t1 != t2 or abs(c1 + c2) > 1e-12:
                    return False
                vanish = basis_mod.indices_commute(d, ab, ab2)
                first, second = basis_mod.commutator_coefficient_exponents(d, ab, ab2)
                if (first == second) != vanish:
                    return False
        return True

    _run(report, "structure_constants_antisymmetric_and_vanishing", 0.0, antisymmetry_and_vanishing)

    def anticommutators() -> bool:
        for ab in basis_mod.pauli_indices(d):
            for ab2 in basis_mod.pauli_indices(d):
                coeff, _ = basis_mod.pauli_commutator(d, ab, ab2, "+")
                a, b = ab
                a2, b2 = ab2
                vanish = (2 * (a * b2 - b * a2) - d) % (2 * d) == 0
                if (abs(coeff) < 1e-12) != vanish:
                    return False
                if d % 2 == 1 and abs(coeff) < 1e-12:
                    return False
        return True

    _run(report, "anticommutator_vanishing_rule", 0.0, anticommutators)

    if mub_mod.is_prime(d):
        partition = basis_mod.cartan_partition_prime(d)
        _run(
            report,
            "prime_partition_valid",
            0.0,
            lambda: basis_mod.validate_cartan_partition(partition)
            and partition.class_count == d + 1
            and all(len(cls) == d - 1 for cls in partition.classes),
        )
        _run(
            report,
            "prime_partition_dense_commuting",
            1e-12,
            lambda: basis_mod.partition_dense_commutation_defect(partition),
        )
        if d <= basis_mod.SEARCH_CAP:
            _run(
                report,
                "search_rediscovers_prime_partition",
                0.0,
                lambda: basis_mod.commuting_class_search(d).classes == partition.classes,
            )
        if d <= 7:
            def joint_eigenbases() -> float:
                bases = [mub_mod.computational_basis(d)]
                for cls in partition.classes[1:]:
                    generator = basis_mod.u_ab(d, *cls[0]).to_matrix()
                    _, vectors = np.linalg.eig(generator)
                    bases.append(
                        mub_mod.OrthonormalBasis(d=d, label=str(cls[0]), vectors=vectors)
                    )
                return max(mub_mod.pairwise_deviations(bases).values())

            _run(report, "class_eigenbases_mutually_unbiased", tolerance, joint_eigenbases)
    elif d <= basis_mod.SEARCH_CAP:
        def incomplete_search() -> bool:
            result = basis_mod.commuting_class_search(d)
            if result.complete:
                return False
            if d == 4:
                return result.classes == [
                    [(0, 1), (0, 2), (0, 3)],
                    [(1, 0), (2, 0), (3, 0)],
                    [(1, 1), (2, 2), (3, 3)],
                ]
            return True

        _run(report, "search_certifies_incompleteness", 0.0, incomplete_search)

    if tensor is not None:
        p, e = tensor

        def tensor_partition() -> bool:
            part = basis_mod.cartan_partition_prime_power(p, e)
            return (
                part.class_count == p**e + 1
                and all(len(cls) == p**e - 1 for cls in part.classes)
                and basis_mod.validate_cartan_partition(part)
            )

        _run(report, "tensor_partition_found_and_valid", 0.0, tensor_partition)

        def tensor_traces() -> bool:
            dims = (p,) * e
            labels = basis_mod.tensor_indices(dims)[:12] + [
                tuple(0 for _ in range(2 * e))
            ]
            for u_idx in labels:
                for v_idx in labels:
                    u = basis_mod.tensor_pauli(dims, u_idx)
                    v = basis_mod.tensor_pauli(dims, v_idx)
                    got = basis_mod.tensor_trace_pairing(u, v)
                    expected = float(math.prod(dims)) if u_idx == v_idx else 0.0
                    if abs(got - expected) > 1e-12:
                        return False
            return True

        _run(report, "tensor_trace_pairing", 0.0, tensor_traces)

    _run(report, "two_qubit_spread", 0.0, lambda: basis_mod.su4_spread_check().overall)
    return report


# ---------------------------------------------------------------------------
# Dispatch
# ---------------------------------------------------------------------------


def run_suite(
    name: str,
    d: int = 3,
    p: int | None = None,
    e: int | None = None,
    tolerance: float = DEFAULT_TOLERANCE,
    cap: int = group_mod.DEFAULT_BRUTE_FORCE_CAP,
) -> VerificationReport:
    if name == "hw":
        return suite_hw(tolerance)
    if name == "group":
        return suite_group(d, cap, tolerance)
    if name == "weyl":
        return suite_weyl(d, tolerance)
    if name == "mub":
        return suite_mub(p=p, d=d if p is None else None, tolerance=tolerance)
    if name == "basis":
        tensor = (p, e) if p is not None and e is not None else None
        return suite_basis(d, tensor, tolerance)
    if name == "all":
        combined = VerificationReport("all")
        combined.extend(suite_hw(tolerance))
        combined.extend(suite_group(d, cap, tolerance))
        combined.extend(suite_weyl(d, tolerance))
        combined.extend(suite_mub(p=d if mub_mod.is_prime(d) else None, d=d, tolerance=tolerance))
        combined.extend(suite_basis(d, None, tolerance))
        return combined
    raise ValueError(f"unknown suite {name!r}")
