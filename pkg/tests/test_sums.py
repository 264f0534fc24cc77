import math
from fractions import Fraction

import pytest

from hbq import (DomainError, dedekind_sum, hardy_berndt_sum,
                 parity_condition, sawtooth)
from hbq.sums import HARDY_VARIANTS, SumSpec


def test_anchor_values():
    assert hardy_berndt_sum("S", 1, 2) == 1
    assert hardy_berndt_sum("S", 2, 3) == 2
    assert hardy_berndt_sum("s3", 1, 3) == Fraction(1, 3)
    assert hardy_berndt_sum("s4", 1, 3) == 2
    assert dedekind_sum(1, 1) == 0
    assert dedekind_sum(1, 2) == 0
    assert dedekind_sum(1, 3) == Fraction(1, 18)


def _brute(variant, h, k):
    # independent re-evaluation straight from the definitions
    saw = lambda x: sawtooth(x)
    total = Fraction(0)
    top = k - 1 if variant in ("S", "s4") else k
    for j in range(1, top + 1):
        fl = (h * j) // k
        term = {
            "S": Fraction((-1) ** (j + 1 + fl)),
            "s1": (-1) ** fl * saw(Fraction(j, k)),
            "s2": (-1) ** j * saw(Fraction(j, k)) * saw(Fraction(h * j, k)),
            "s3": (-1) ** j * saw(Fraction(h * j, k)),
            "s4": Fraction((-1) ** fl),
            "s5": (-1) ** (j + fl) * saw(Fraction(j, k)),
        }[variant]
        total += term
    return total


def test_against_brute_force():
    assert hardy_berndt_sum("s1", 2, 3) == _brute("s1", 2, 3) == Fraction(-1, 3)
    for k in range(1, 13):
        for h in range(1, 2 * k + 1):
            if math.gcd(h, k) != 1:
                continue
            for v in HARDY_VARIANTS:
                assert hardy_berndt_sum(v, h, k) == _brute(v, h, k)


def test_periodicity_h_plus_2k():
    for k in range(1, 13):
        for h in range(1, k + 1):
            if math.gcd(h, k) != 1:
                continue
            for v in HARDY_VARIANTS:
                assert hardy_berndt_sum(v, h, k) == hardy_berndt_sum(v, h + 2 * k, k)


def test_exactness_shapes():
    for k in range(1, 13):
        for h in range(1, 2 * k + 1):
            if math.gcd(h, k) != 1:
                continue
            assert hardy_berndt_sum("S", h, k).denominator == 1
            assert hardy_berndt_sum("s4", h, k).denominator == 1
            for v in ("s1", "s3", "s5"):
                assert (2 * k) % hardy_berndt_sum(v, h, k).denominator == 0
            # two-sawtooth products: denominator divides 4k^2
            assert (4 * k * k) % hardy_berndt_sum("s2", h, k).denominator == 0
            assert (4 * k * k) % dedekind_sum(h, k).denominator == 0


def test_parity_conditions():
    assert parity_condition("S", 1, 2).holds
    assert not parity_condition("s5", 2, 3).holds
    assert parity_condition("s3", 1, 3).holds
    pc = parity_condition("s1", 2, 3)
    assert pc.holds and pc.description == "h even and k odd"


def test_rejects_non_coprime():
    with pytest.raises(DomainError):
        hardy_berndt_sum("S", 2, 4)
    with pytest.raises(DomainError):
        dedekind_sum(3, 6)
    with pytest.raises(DomainError):
        SumSpec("S", 0, 3)
    with pytest.raises(DomainError):
        parity_condition("S", 2, 4)
