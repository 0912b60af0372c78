"""Exact arithmetic for phases that are 2d-th roots of unity.

Every monomial operator in dimension d carries a scalar phase tau^t with
tau = exp(i*pi/d).  The square q = tau^2 = exp(2*pi*i/d) is the primitive
d-th root of unity used by clock matrices; half-integer powers of q that
show up in Hadamard exponents are integer powers of tau, which is why tau
(and not q) is the base phase.  Exponents live in Z_{2d}, so products and
inverses involve no floating point at all.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass


@dataclass(frozen=True)
class PhaseExponent:
    """The complex number tau^t, tau = exp(i*pi/d), stored as t mod 2d."""

    t: int
    d: int

    def __post_init__(self) -> None:
        if self.d < 2:
            raise ValueError(f"dimension must be >= 2, got {self.d}")
        object.__setattr__(self, "t", self.t % (2 * self.d))

    @classmethod
    def one(cls, d: int) -> "PhaseExponent":
        return cls(0, d)

    @classmethod
    def q_power(cls, k: int, d: int) -> "PhaseExponent":
        """q^k with q = tau^2 the primitive d-th root of unity."""
        return cls(2 * k, d)

    def __mul__(self, other: "PhaseExponent") -> "PhaseExponent":
        if self.d != other.d:
            raise ValueError(f"dimension mismatch: {self.d} != {other.d}")
        return PhaseExponent(self.t + other.t, self.d)

    def __pow__(self, n: int) -> "PhaseExponent":
        return PhaseExponent(self.t * n, self.d)

    def inverse(self) -> "PhaseExponent":
        return PhaseExponent(-self.t, self.d)

    def conjugate(self) -> "PhaseExponent":
        return self.inverse()

    @property
    def is_one(self) -> bool:
        return self.t == 0

    def to_complex(self) -> complex:
        # quarter-turn phases come out exact so that qubit monomials and
        # scalar identities survive float conversion without rounding
        if (2 * self.t) % self.d == 0:
            return (1 + 0j, 1j, -1 + 0j, -1j)[(2 * self.t // self.d) % 4]
        return cmath.exp(1j * cmath.pi * self.t / self.d)

    def to_json(self) -> dict:
        return {"tau_exp": self.t, "tau_denominator": 2 * self.d}

    @classmethod
    def from_json(cls, payload: dict) -> "PhaseExponent":
        denom = payload["tau_denominator"]
        if denom % 2 != 0:
            raise ValueError(f"tau_denominator must be even, got {denom}")
        return cls(payload["tau_exp"], denom // 2)


def phase_mul(p1: PhaseExponent, p2: PhaseExponent) -> PhaseExponent:
    return p1 * p2


def phase_to_complex(p: PhaseExponent) -> complex:
    return p.to_complex()
