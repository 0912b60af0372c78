"""The discrete Heisenberg group of order d^3 over the ring Z_d.

Elements are triples (a, b, c) mod d with the law

    (a, b, c) (a', b', c') = (a + a' - c b', b + b', c + c')

realized faithfully by the monomials q^a X^b Z^c.  The module provides the
group operations, conjugacy classes and centralizers by brute force, the
handful of named subgroups, one-dimensional characters, the monomial
representations rho_k, and the d^3-dimensional bracket on the group
algebra.

Brute-force enumerations are capped (default d <= 16) since class and
centralizer computations grow like d^4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable

from .operators import MonomialOperator, monomial_mul
from .phases import PhaseExponent

DEFAULT_BRUTE_FORCE_CAP = 16


@dataclass(frozen=True)
class PdElement:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if self.d < 2:
            raise ValueError(f"modulus must be >= 2, got {self.d}")
        object.__setattr__(self, "a", self.a % self.d)
        object.__setattr__(self, "b", self.b % self.d)
        object.__setattr__(self, "c", self.c % self.d)

    def compose(self, other: "PdElement") -> "PdElement":
        if self.d != other.d:
            raise ValueError(f"modulus mismatch: {self.d} != {other.d}")
        return PdElement(
            self.a + other.a - self.c * other.b,
            self.b + other.b,
            self.c + other.c,
            self.d,
        )

    def inverse(self) -> "PdElement":
        return PdElement(-self.a - self.b * self.c, -self.b, -self.c, self.d)

    def commutes_with(self, other: "PdElement") -> bool:
        return (self.c * other.b - self.b * other.c) % self.d == 0

    def key(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


def pd_identity(d: int) -> PdElement:
    return PdElement(0, 0, 0, d)


def pd_compose(g: PdElement, h: PdElement) -> PdElement:
    return g.compose(h)


def pd_inverse(g: PdElement) -> PdElement:
    return g.inverse()


def pd_conjugate(g: PdElement, h: PdElement) -> PdElement:
    """g h g^-1, via composition (the closed form only moves h.a)."""
    return g.compose(h).compose(g.inverse())


def pd_elements(d: int) -> list[PdElement]:
    return [PdElement(a, b, c, d) for a, b, c in product(range(d), repeat=3)]


def _check_cap(d: int, cap: int) -> None:
    if d < 2:
        raise ValueError(f"modulus must be >= 2, got {d}")
    if d > cap:
        raise ValueError(f"d={d} exceeds the brute-force cap {cap}")


@dataclass
class ConjugacyClassReport:
    d: int
    classes: list[list[PdElement]]
    singleton_count: int
    size_d_count: int
    size_histogram: dict[int, int] = field(default_factory=dict)

    @property
    def class_count(self) -> int:
        return len(self.classes)


def pd_conjugacy_classes(d: int, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> ConjugacyClassReport:
    """Exact classes by orbit enumeration.

    The conjugate of (a, b, c) by (a', b', c') is (a + cb' - bc', b, c), so
    each orbit is swept by running (b', c') over Z_d^2.
    """
    _check_cap(d, cap)
    classes: list[list[PdElement]] = []
    seen: set[tuple[int, int, int]] = set()
    for a, b, c in product(range(d), repeat=3):
        if (a, b, c) in seen:
            continue
        orbit = {
            ((a + c * b2 - b * c2) % d, b, c)
            for b2, c2 in product(range(d), repeat=2)
        }
        seen |= orbit
        classes.append([PdElement(*t, d) for t in sorted(orbit)])
    classes.sort(key=lambda cls: cls[0].key())
    histogram: dict[int, int] = {}
    for cls in classes:
        histogram[len(cls)] = histogram.get(len(cls), 0) + 1
    return ConjugacyClassReport(
        d=d,
        classes=classes,
        singleton_count=histogram.get(1, 0),
        size_d_count=histogram.get(d, 0) if d > 1 else 0,
        size_histogram=dict(sorted(histogram.items())),
    )


def pd_centralizer_size(g: PdElement) -> int:
    """Number of elements commuting with g, by brute-force count.

    Commutation depends only on (b', c'), so each solution of
    c b' - b c' = 0 (mod d) accounts for d choices of a'.
    """
    d = g.d
    pairs = sum(
        1
        for b2, c2 in product(range(d), repeat=2)
        if (g.c * b2 - g.b * c2) % d == 0
    )
    return d * pairs


def pd_is_ambivalent(d: int, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> bool:
    """Whether every conjugacy class is closed under inversion."""
    report = pd_conjugacy_classes(d, cap)
    for cls in report.classes:
        members = {g.key() for g in cls}
        if any(g.inverse().key() not in members for g in cls):
            return False
    return True


@dataclass(frozen=True)
class Subgroup:
    name: str
    elements: tuple[PdElement, ...]
    is_normal: bool
    isomorphism: str


def _is_closed(elements: Iterable[PdElement]) -> bool:
    keys = {g.key() for g in elements}
    return all(
        g.compose(h).key() in keys for g in elements for h in elements
    ) and all(g.inverse().key() in keys for g in elements)


def _is_normal(elements: Iterable[PdElement], d: int) -> bool:
    keys = {g.key() for g in elements}
    for g in pd_elements(d):
        for h in elements:
            if pd_conjugate(g, h).key() not in keys:
                return False
    return True


def _is_abelian(elements: Iterable[PdElement]) -> bool:
    elems = list(elements)
    return all(g.commutes_with(h) for g in elems for h in elems)


def _element_order(g: PdElement) -> int:
    acc = g
    order = 1
    ident = pd_identity(g.d).key()
    while acc.key() != ident:
        acc = acc.compose(g)
        order += 1
    return order


def _isomorphism_tag(elements: list[PdElement], d: int) -> str:
    if not _is_abelian(elements):
        return "nonabelian"
    orders = [_element_order(g) for g in elements]
    n = len(elements)
    if n == d and max(orders) == d:
        return f"cyclic-Z{d}"
    if n == d * d:
        # Z_d x Z_d is pinned down by its order-divisor counts.
        looks_like_product = all(
            sum(1 for g, o in zip(elements, orders) if m % o == 0) == math.gcd(m, d) ** 2
            for m in range(1, d + 1)
            if d % m == 0
        )
        if looks_like_product and max(orders) == d:
            return f"Z{d}xZ{d}"
    return "generic-abelian"


def pd_named_subgroups(d: int, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> list[Subgroup]:
    """The six listed subgroups, with closure/normality verified."""
    _check_cap(d, cap)
    rng = range(d)
    subsets: list[tuple[str, list[PdElement]]] = [
        ("center", [PdElement(a, 0, 0, d) for a in rng]),
        ("shift-axis", [PdElement(0, b, 0, d) for b in rng]),
        ("clock-axis", [PdElement(0, 0, c, d) for c in rng]),
        ("phase-shift-plane", [PdElement(a, b, 0, d) for a in rng for b in rng]),
        ("phase-clock-plane", [PdElement(a, 0, c, d) for a in rng for c in rng]),
        ("diagonal-plane", [PdElement(a, b, b, d) for a in rng for b in rng]),
    ]
    out = []
    for name, elements in subsets:
        if not _is_closed(elements):
            raise AssertionError(f"subset {name} is not closed under the group law")
        out.append(
            Subgroup(
                name=name,
                elements=tuple(elements),
                is_normal=_is_normal(elements, d),
                isomorphism=_isomorphism_tag(elements, d),
            )
        )
    return out


def pd_center_is_center(d: int) -> bool:
    """The set {(a,0,0)} equals the centralizer of the whole group."""
    center = {g.key() for g in pd_elements(d) if pd_centralizer_size(g) == d**3}
    return center == {(a, 0, 0) for a in range(d)}


def pd_quotient_is_double_cyclic(d: int) -> bool:
    """P_d / Z(P_d) has the componentwise law on coset labels (b, c)."""
    for b, c, b2, c2 in product(range(d), repeat=4):
        prod_elem = PdElement(0, b, c, d).compose(PdElement(0, b2, c2, d))
        if (prod_elem.b, prod_elem.c) != ((b + b2) % d, (c + c2) % d):
            return False
    return True


def pd_irrep_counts(d: int) -> tuple[int, int]:
    """Claimed irreducible-representation census (d^2 linear, d-1 of dim d).

    The squared-dimension identity d^2 * 1 + (d-1) * d^2 = d^3 always holds
    arithmetically; the census itself is verified elsewhere only for prime
    d (rho_k is irreducible exactly when gcd(k, d) = 1).
    """
    one_dim, d_dim = d * d, d - 1
    if one_dim + d_dim * d * d != d**3:
        raise AssertionError("squared-dimension identity failed")
    return one_dim, d_dim


def pd_character(m: int, n: int, d: int) -> Callable[[PdElement], PhaseExponent]:
    """The linear character (a, b, c) -> q^(mb + nc)."""

    def chi(g: PdElement) -> PhaseExponent:
        return PhaseExponent.q_power(m * g.b + n * g.c, d)

    return chi


def pd_irrep(k: int, d: int) -> Callable[[PdElement], MonomialOperator]:
    """The monomial representation rho_k(a, b, c) = q^(ka) X^b Z^(kc)."""
    if not 1 <= k <= d - 1:
        raise ValueError(f"k must lie in 1..{d - 1}, got {k}")

    def rho(g: PdElement) -> MonomialOperator:
        return MonomialOperator(PhaseExponent.q_power(k * g.a, d), g.b, k * g.c)

    return rho


def irrep_character_norm(k: int, d: int) -> Fraction:
    """(1/d^3) * sum over the group of |Tr rho_k|^2, computed exactly.

    Equals 1 exactly when rho_k is irreducible; in general the value is
    gcd(k, d), the number of irreducible components counted with squared
    multiplicity.
    """
    rho = pd_irrep(k, d)
    total = 0
    for g in pd_elements(d):
        scalar = rho(g).trace_exact()
        if scalar is not None:
            total += d * d  # |d * tau^t|^2
    return Fraction(total, d**3)


class FormalCombination:
    """Finitely supported integer combination of group elements."""

    def __init__(self, terms: dict[tuple[int, int, int], int], d: int):
        self.d = d
        self.terms = {k: v for k, v in terms.items() if v != 0}

    @classmethod
    def zero(cls, d: int) -> "FormalCombination":
        return cls({}, d)

    @classmethod
    def single(cls, g: PdElement, coeff: int = 1) -> "FormalCombination":
        return cls({g.key(): coeff}, g.d)

    def __add__(self, other: "FormalCombination") -> "FormalCombination":
        if self.d != other.d:
            raise ValueError("modulus mismatch")
        merged = dict(self.terms)
        for key, coeff in other.terms.items():
            merged[key] = merged.get(key, 0) + coeff
        return FormalCombination(merged, self.d)

    def __sub__(self, other: "FormalCombination") -> "FormalCombination":
        return self + other.scale(-1)

    def scale(self, factor: int) -> "FormalCombination":
        return FormalCombination({k: factor * v for k, v in self.terms.items()}, self.d)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FormalCombination)
            and self.d == other.d
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        body = " + ".join(f"{v}*{k}" for k, v in sorted(self.terms.items()))
        return f"FormalCombination({body or '0'}, d={self.d})"


def pd_lie_bracket(g: PdElement, h: PdElement) -> FormalCombination:
    """The bracket <g, h> = gh - hg in the group algebra."""
    if g.d != h.d:
        raise ValueError(f"modulus mismatch: {g.d} != {h.d}")
    return FormalCombination.single(g.compose(h)) - FormalCombination.single(h.compose(g))


def pd_lie_bracket_combinations(
    f: FormalCombination, g: FormalCombination
) -> FormalCombination:
    """Bilinear extension of the bracket to formal combinations."""
    out = FormalCombination.zero(f.d)
    for key1, coeff1 in f.terms.items():
        for key2, coeff2 in g.terms.items():
            bracket = pd_lie_bracket(PdElement(*key1, f.d), PdElement(*key2, g.d))
            out = out + bracket.scale(coeff1 * coeff2)
    return out


def bracket_matches_monomial_commutator(g: PdElement, h: PdElement) -> bool:
    """The group-algebra bracket maps to the matrix commutator of the w's.

    Both sides are computed in exact monomial arithmetic: the bracket's two
    group terms must be exactly the monomials w(gh) and w(hg).
    """
    d = g.d
    wg = MonomialOperator.w(d, g.a, g.b, g.c)
    wh = MonomialOperator.w(d, h.a, h.b, h.c)
    gh, hg = g.compose(h), h.compose(g)
    return (
        monomial_mul(wg, wh) == MonomialOperator.w(d, gh.a, gh.b, gh.c)
        and monomial_mul(wh, wg) == MonomialOperator.w(d, hg.a, hg.b, hg.c)
    )


def class_count_minus_order_factor(d: int) -> int:
    """(d-1)^2 (d+1), the order of the group minus the prime-case class count."""
    return (d - 1) ** 2 * (d + 1)
