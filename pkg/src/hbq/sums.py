"""Exact evaluation of the classical Dedekind sum and the six finite
Hardy-Berndt sums S, s1..s5.

Every value is an exact rational; S and s4 are integers, the sawtooth-based
variants have denominators dividing 2k (4k^2 for the two-sawtooth products).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import DomainError, sawtooth

__all__ = [
    "HARDY_VARIANTS",
    "ParityCondition",
    "SumSpec",
    "dedekind_sum",
    "hardy_berndt_sum",
    "parity_condition",
]

HARDY_VARIANTS = ("S", "s1", "s2", "s3", "s4", "s5")


@dataclass(frozen=True)
class SumSpec:
    variant: str
    h: int
    k: int

    def __post_init__(self):
        if self.variant not in HARDY_VARIANTS + ("dedekind",):
            raise DomainError(f"unknown sum variant {self.variant!r}")
        if self.k < 1:
            raise DomainError("k must be >= 1")
        if self.h < 1:
            raise DomainError("h must be >= 1")
        if math.gcd(self.h, self.k) != 1:
            raise DomainError(f"h and k must be coprime, got ({self.h}, {self.k})")


@dataclass(frozen=True)
class ParityCondition:
    variant: str
    holds: bool
    description: str


_PARITY = {
    "S": (lambda h, k: (h + k) % 2 == 1, "h + k odd"),
    "s1": (lambda h, k: h % 2 == 0 and k % 2 == 1, "h even and k odd"),
    "s2": (lambda h, k: h % 2 == 1 and k % 2 == 0, "h odd and k even"),
    "s3": (lambda h, k: k % 2 == 1, "k odd"),
    "s4": (lambda h, k: h % 2 == 1, "h odd"),
    "s5": (lambda h, k: h % 2 == 1 and k % 2 == 1, "h and k odd"),
}


def parity_condition(variant: str, h: int, k: int) -> ParityCondition:
    """The hypothesis under which the variant's trigonometric series holds."""
    if math.gcd(h, k) != 1:
        raise DomainError("h and k must be coprime")
    pred, desc = _PARITY[variant]
    return ParityCondition(variant, pred(h, k), desc)


def hardy_berndt_sum(spec_or_variant, h: int = None, k: int = None) -> Fraction:
    """Exact finite Hardy-Berndt sum for one of the variants S, s1..s5.

    Upper limits follow the classical definitions verbatim (k-1 for S and s4,
    k otherwise; the j = k terms vanish for the sawtooth factors anyway).
    """
    if isinstance(spec_or_variant, SumSpec):
        spec = spec_or_variant
    else:
        spec = SumSpec(spec_or_variant, h, k)
    if spec.variant == "dedekind":
        raise DomainError("use dedekind_sum for the Dedekind sum")
    h, k = spec.h, spec.k
    v = spec.variant
    total = Fraction(0)
    top = k - 1 if v in ("S", "s4") else k
    for j in range(1, top + 1):
        fl = (h * j) // k
        if v == "S":
            total += (-1) ** (j + 1 + fl)
        elif v == "s1":
            total += (-1) ** fl * sawtooth(Fraction(j, k))
        elif v == "s2":
            total += (-1) ** j * sawtooth(Fraction(j, k)) * sawtooth(Fraction(h * j, k))
        elif v == "s3":
            total += (-1) ** j * sawtooth(Fraction(h * j, k))
        elif v == "s4":
            total += (-1) ** fl
        elif v == "s5":
            total += (-1) ** (j + fl) * sawtooth(Fraction(j, k))
    return total


def dedekind_sum(h: int, k: int) -> Fraction:
    """Classical Dedekind sum s(h,k) = sum_{j=1}^{k-1} ((j/k))((hj/k))."""
    if k < 1:
        raise DomainError("k must be >= 1")
    if math.gcd(h, k) != 1:
        raise DomainError("h and k must be coprime")
    total = Fraction(0)
    for j in range(1, k):
        total += sawtooth(Fraction(j, k)) * sawtooth(Fraction(h * j, k))
    return total
