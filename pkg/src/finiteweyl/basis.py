"""The operator basis u_ab = X^a Z^b of u(d) and its commuting-class geometry.

Structure constants are cyclotomic-exact: [u_ab, u_a'b'] is
(q^(-ba') - q^(-ab')) u_(a+a', b+b'), vanishing precisely when
ab' - ba' = 0 mod d.  For prime p the nonidentity labels split into p+1
slope classes of p-1 pairwise commuting operators; for prime powers the
same decomposition exists for tensor-product labels and is found here by
exhaustive backtracking over the commutation graph.  For composite d
(single qudit) the search instead certifies that no such partition exists
and returns the best-effort classes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

import numpy as np

from .operators import MonomialOperator, monomial_mul, trace_pairing_exact
from .phases import PhaseExponent
from .search import (
    find_commuting_partition,
    greedy_commuting_classes,
    validate_partition,
)

STRUCTURE_TABLE_CAP = 16
SEARCH_CAP = 12
TENSOR_SEARCH_CAP = 16

PauliIndex = tuple[int, int]


def _check_dimension(d: int) -> None:
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")


def u_ab(d: int, a: int, b: int) -> MonomialOperator:
    """X^a Z^b with no scalar phase."""
    if not (0 <= a < d and 0 <= b < d):
        raise ValueError(f"indices must lie in 0..{d - 1}, got ({a}, {b})")
    return MonomialOperator(PhaseExponent.one(d), a, b)


def pauli_indices(d: int, include_identity: bool = False) -> list[PauliIndex]:
    out = [(a, b) for a in range(d) for b in range(d)]
    return out if include_identity else [ab for ab in out if ab != (0, 0)]


def indices_commute(d: int, ab: PauliIndex, ab2: PauliIndex) -> bool:
    (a, b), (a2, b2) = ab, ab2
    return (a * b2 - b * a2) % d == 0


def commutator_coefficient_exponents(
    d: int, ab: PauliIndex, ab2: PauliIndex
) -> tuple[PhaseExponent, PhaseExponent]:
    """The pair (q^(-ba'), q^(-ab')) entering the (anti)commutator."""
    (a, b), (a2, b2) = ab, ab2
    return PhaseExponent.q_power(-b * a2, d), PhaseExponent.q_power(-a * b2, d)


def pauli_commutator(
    d: int, ab: PauliIndex, ab2: PauliIndex, sign: str = "-"
) -> tuple[complex, PauliIndex]:
    """[u_ab, u_a'b']_-+ = (q^(-ba') -+ q^(-ab')) u_(a+a', b+b')."""
    if sign not in ("-", "+"):
        raise ValueError(f"sign must be '-' or '+', got {sign!r}")
    first, second = commutator_coefficient_exponents(d, ab, ab2)
    coeff = first.to_complex() - second.to_complex() if sign == "-" else (
        first.to_complex() + second.to_complex()
    )
    target = ((ab[0] + ab2[0]) % d, (ab[1] + ab2[1]) % d)
    return coeff, target


def structure_constants(
    d: int, cap: int = STRUCTURE_TABLE_CAP
) -> dict[tuple[PauliIndex, PauliIndex], tuple[PauliIndex, complex]]:
    """Nonzero structure constants of u(d) in the X^a Z^b basis."""
    _check_dimension(d)
    if d > cap:
        raise ValueError(f"d={d} exceeds the structure-table cap {cap}")
    table: dict[tuple[PauliIndex, PauliIndex], tuple[PauliIndex, complex]] = {}
    for ab in pauli_indices(d, include_identity=True):
        for ab2 in pauli_indices(d, include_identity=True):
            if indices_commute(d, ab, ab2):
                continue
            coeff, target = pauli_commutator(d, ab, ab2, "-")
            table[(ab, ab2)] = (target, coeff)
    return table


def hs_orthogonality(d: int) -> float:
    """Max deviation of Tr(u^dagger u') from d delta delta, exactly 0.0.

    Trace pairings are evaluated in monomial arithmetic; any deviation is
    reported as its exact magnitude.
    """
    _check_dimension(d)
    worst = 0.0
    for ab in pauli_indices(d, include_identity=True):
        for ab2 in pauli_indices(d, include_identity=True):
            scalar = trace_pairing_exact(u_ab(d, *ab), u_ab(d, *ab2))
            if ab == ab2:
                deviation = 0.0 if (scalar is not None and scalar.is_one) else 1.0
            else:
                deviation = 0.0 if scalar is None else abs(d * scalar.to_complex())
            worst = max(worst, deviation)
    return worst


@dataclass
class CartanPartition:
    """Disjoint classes of pairwise commuting operator labels."""

    dimension: int
    classes: list[list[tuple]]
    complete: bool = True
    tensor_dims: tuple[int, ...] | None = None

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def label_moduli(self) -> tuple[int, ...]:
        if self.tensor_dims is None:
            return (self.dimension, self.dimension)
        return tuple(x for p in self.tensor_dims for x in (p, p))


def format_index(idx: tuple, moduli: tuple[int, ...]) -> str:
    """Digit string "(ab)" / "(a1b1a2b2)"; commas once any modulus passes 10."""
    if all(m <= 10 for m in moduli):
        return "(" + "".join(str(x) for x in idx) + ")"
    return "(" + ",".join(str(x) for x in idx) + ")"


def cartan_partition_prime(p: int) -> CartanPartition:
    """The p+1 slope classes of su(p), p prime.

    Class 0 is the pure clock class {(0, b)}; class i >= 1 collects
    {(x, (i-1) x mod p)}, running the slope over 0..p-1.
    """
    from .mub import is_prime

    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    classes: list[list[tuple]] = [[(0, b) for b in range(1, p)]]
    for slope in range(p):
        classes.append([(x, (slope * x) % p) for x in range(1, p)])
    return CartanPartition(dimension=p, classes=classes, complete=True)


def commuting_class_search(d: int, cap: int = SEARCH_CAP) -> CartanPartition:
    """Exhaustive search for d+1 classes of d-1 commuting single-qudit labels.

    Returns a complete partition when one exists (always, for prime d);
    otherwise the first-found disjoint classes with complete=False, the
    failed search having proved that no full partition exists.
    """
    _check_dimension(d)
    if d > cap:
        raise ValueError(f"d={d} exceeds the search cap {cap}")
    vertices = pauli_indices(d)

    def commutes(u: PauliIndex, v: PauliIndex) -> bool:
        return indices_commute(d, u, v)

    solution = find_commuting_partition(vertices, commutes, d - 1)
    if solution is not None:
        return CartanPartition(dimension=d, classes=solution, complete=True)
    best_effort = greedy_commuting_classes(vertices, commutes, d - 1)
    return CartanPartition(dimension=d, classes=best_effort, complete=False)


def validate_cartan_partition(partition: CartanPartition) -> bool:
    """Recheck disjointness, covering and intra-class commutation."""
    if partition.tensor_dims is None:
        d = partition.dimension
        vertices = pauli_indices(d)

        def commutes(u, v):
            return indices_commute(d, u, v)

        size = d - 1 if partition.complete else None
    else:
        dims = partition.tensor_dims
        vertices = tensor_indices(dims)

        def commutes(u, v):
            return tensor_indices_commute(dims, u, v)

        size = partition.dimension - 1 if partition.complete else None
    if partition.complete and len(partition.classes) != partition.dimension + 1:
        return False
    return validate_partition(partition.classes, vertices, commutes, size)


# ---------------------------------------------------------------------------
# Tensor products of single-qudit operators
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TensorMonomial:
    """Kronecker product of monomial factors, kept exactly factor by factor."""

    factors: tuple[MonomialOperator, ...]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(f.d for f in self.factors)

    def __matmul__(self, other: "TensorMonomial") -> "TensorMonomial":
        if self.dims != other.dims:
            raise ValueError("tensor factor dimensions do not match")
        return TensorMonomial(
            tuple(monomial_mul(u, v) for u, v in zip(self.factors, other.factors))
        )

    def adjoint(self) -> "TensorMonomial":
        return TensorMonomial(tuple(f.adjoint() for f in self.factors))

    def to_matrix(self) -> np.ndarray:
        out = self.factors[0].to_matrix()
        for f in self.factors[1:]:
            out = np.kron(out, f.to_matrix())
        return out

    def trace_phase(self) -> Fraction | None:
        """Trace = (prod of dims) * exp(i*pi*s); returns s, or None if zero."""
        total = Fraction(0)
        for f in self.factors:
            scalar = f.trace_exact()
            if scalar is None:
                return None
            total += Fraction(scalar.t, scalar.d)
        return total % 2

    def trace(self) -> complex:
        s = self.trace_phase()
        if s is None:
            return 0j
        return math.prod(self.dims) * complex(
            math.cos(math.pi * s), math.sin(math.pi * s)
        )


def tensor_indices(dims: tuple[int, ...]) -> list[tuple]:
    """All interleaved digit labels (a1, b1, ..., ae, be) except the identity."""
    ranges = []
    for p in dims:
        ranges.extend([range(p), range(p)])
    return [idx for idx in product(*ranges) if any(idx)]


def tensor_pauli(dims: tuple[int, ...], index: tuple) -> TensorMonomial:
    """Build the Kronecker operator from an interleaved digit label."""
    if len(index) != 2 * len(dims):
        raise ValueError(f"label length {len(index)} does not match dims {dims}")
    factors = []
    for pos, p in enumerate(dims):
        a, b = index[2 * pos], index[2 * pos + 1]
        factors.append(u_ab(p, a % p, b % p))
    return TensorMonomial(tuple(factors))


def tensor_indices_commute(dims: tuple[int, ...], idx1: tuple, idx2: tuple) -> bool:
    """Exact commutation test: sum of (a_j b'_j - b_j a'_j)/d_j integral."""
    total = Fraction(0)
    for pos, p in enumerate(dims):
        a, b = idx1[2 * pos], idx1[2 * pos + 1]
        a2, b2 = idx2[2 * pos], idx2[2 * pos + 1]
        total += Fraction(a * b2 - b * a2, p)
    return total.denominator == 1


def tensor_trace_pairing(u: TensorMonomial, v: TensorMonomial) -> complex:
    return (u.adjoint() @ v).trace()


def cartan_partition_prime_power(
    p: int, e: int, cap: int = TENSOR_SEARCH_CAP, verify_dense: bool = True
) -> CartanPartition:
    """Partition the p^2e - 1 tensor labels into p^e + 1 commuting classes.

    Found by the same deterministic backtracking used for single qudits;
    a failure would contradict the existence of the decomposition at this
    size and is raised rather than ignored.
    """
    from .mub import is_prime

    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if e < 2:
        raise ValueError(f"tensor exponent must be >= 2, got {e}")
    d = p**e
    if d > cap:
        raise ValueError(f"p^e={d} exceeds the tensor search cap {cap}")
    dims = (p,) * e
    vertices = tensor_indices(dims)

    def commutes(u, v):
        return tensor_indices_commute(dims, u, v)

    solution = find_commuting_partition(vertices, commutes, d - 1)
    if solution is None:
        raise RuntimeError(
            f"no partition of the {p**(2 * e) - 1} labels into "
            f"{d + 1} commuting classes of {d - 1} was found"
        )
    partition = CartanPartition(
        dimension=d, classes=solution, complete=True, tensor_dims=dims
    )
    if verify_dense:
        defect = partition_dense_commutation_defect(partition)
        if defect > 1e-12:
            raise RuntimeError(f"dense recheck failed with defect {defect}")
    return partition


def partition_dense_commutation_defect(partition: CartanPartition) -> float:
    """Max norm of dense intra-class commutators, an independent recheck."""
    worst = 0.0
    for cls in partition.classes:
        mats = []
        for idx in cls:
            if partition.tensor_dims is None:
                mats.append(u_ab(partition.dimension, *idx).to_matrix())
            else:
                mats.append(tensor_pauli(partition.tensor_dims, idx).to_matrix())
        for i in range(len(mats)):
            for j in range(i + 1, len(mats)):
                comm = mats[i] @ mats[j] - mats[j] @ mats[i]
                worst = max(worst, float(np.max(np.abs(comm))))
    return worst


# ---------------------------------------------------------------------------
# The fifteen two-qubit operators and their five-line spread
# ---------------------------------------------------------------------------

TWO_QUBIT_SPREAD: tuple[tuple[tuple, ...], ...] = (
    ((1, 0, 1, 1), (1, 1, 0, 1), (0, 1, 1, 0)),
    ((1, 0, 0, 1), (0, 1, 1, 1), (1, 1, 1, 0)),
    ((1, 0, 1, 0), (1, 0, 0, 0), (0, 0, 1, 0)),
    ((1, 1, 1, 1), (1, 1, 0, 0), (0, 0, 1, 1)),
    ((0, 1, 0, 1), (0, 1, 0, 0), (0, 0, 0, 1)),
)


@dataclass
class SpreadReport:
    sets: tuple[tuple[tuple, ...], ...]
    sets_commute: bool
    union_size: int
    covers_all_nonidentity: bool
    gram_defect: float
    gram_rank: int
    spans_u4: bool
    overall: bool = field(init=False)

    def __post_init__(self) -> None:
        self.overall = (
            self.sets_commute
            and self.union_size == 15
            and self.covers_all_nonidentity
            and self.gram_defect < 1e-12
            and self.gram_rank == 15
            and self.spans_u4
        )


def su4_spread_check() -> SpreadReport:
    """Verify the five commuting triples spanning su(4)."""
    dims = (2, 2)

    def pair_commutes(u: tuple, v: tuple) -> bool:
        if not tensor_indices_commute(dims, u, v):
            return False
        mu = tensor_pauli(dims, u).to_matrix()
        mv = tensor_pauli(dims, v).to_matrix()
        # qubit monomial entries are 0 or +-1, so this comparison is exact
        return bool(np.array_equal(mu @ mv, mv @ mu))

    sets_commute = all(
        pair_commutes(u, v)
        for cls in TWO_QUBIT_SPREAD
        for i, u in enumerate(cls)
        for v in cls[i + 1 :]
    )
    union = [idx for cls in TWO_QUBIT_SPREAD for idx in cls]
    union_set = set(union)
    covers = union_set == set(tensor_indices(dims))

    operators = [tensor_pauli(dims, idx) for idx in union]
    gram = np.array(
        [[tensor_trace_pairing(u, v) for v in operators] for u in operators]
    )
    gram_defect = float(np.max(np.abs(gram - 4.0 * np.eye(15))))
    stacked = np.array([op.to_matrix().reshape(-1) for op in operators])
    gram_rank = int(np.linalg.matrix_rank(stacked))
    with_identity = np.vstack(
        [stacked, tensor_pauli(dims, (0, 0, 0, 0)).to_matrix().reshape(-1)]
    )
    spans_u4 = int(np.linalg.matrix_rank(with_identity)) == 16

    return SpreadReport(
        sets=TWO_QUBIT_SPREAD,
        sets_commute=bool(sets_commute),
        union_size=len(union_set),
        covers_all_nonidentity=bool(covers),
        gram_defect=gram_defect,
        gram_rank=gram_rank,
        spans_u4=bool(spans_u4),
    )
