import cmath
import math
from fractions import Fraction

import pytest

from hbq import (DomainError, ParityError, QParam, RegularizationSchedule,
                 characters_mod, classical_trig_series,
                 dedekind_oscillatory_sum, dedekind_sum, eval_gen,
                 hardy_berndt_sum, oscillatory_sum, parity_condition,
                 q_dedekind_sum, q_hardy_berndt_sum)
from hbq.qsums import HB_SCALE, _richardson
from hbq.sums import HARDY_VARIANTS

Q_HALF = QParam.real(Fraction(1, 2))
ONE = QParam.one()


# ----------------------------------------------------------------------
# generating functions
# ----------------------------------------------------------------------

def _brute_gen(kind, t, qv, n_max=60, chi=None):
    from hbq import chi_eval
    acc = 0j
    for n in range(1, n_max):
        a = (1 / qv) ** n * (1 - qv ** n) / (1 - qv)
        coef = (1 / qv) ** n
        if kind.startswith("F"):
            coef *= (-1) ** n
        if chi is not None:
            coef *= chi_eval(chi, n)
        acc += coef * cmath.exp(-a * t)
    return acc


def test_eval_gen_against_brute():
    sv = eval_gen("F", 1.0, Q_HALF)
    assert abs(sv.value - _brute_gen("F", 1.0, 0.5)) <= sv.tail_bound + 1e-15
    # leading term is -2 e^(-2)
    assert abs(_brute_gen("F", 1.0, 0.5, n_max=2) - (-2 * math.exp(-2))) < 1e-15
    sv = eval_gen("f", 0.3, QParam.real(Fraction(2, 3)))
    assert abs(sv.value - _brute_gen("f", 0.3, 2 / 3)) <= sv.tail_bound + 1e-12


def test_eval_gen_parity_split():
    # f - F doubles the odd-n terms
    f = eval_gen("f", 1.0, Q_HALF)
    F = eval_gen("F", 1.0, Q_HALF)
    odd = 2 * sum(2.0 ** n * math.exp(-(2.0 ** n) * (1 - 2.0 ** -n) / 0.5)
                  for n in (1, 3, 5, 7, 9, 11))
    assert abs((f.value - F.value) - odd) <= f.tail_bound + F.tail_bound + 1e-14


def test_eval_gen_chi_reduction():
    one = characters_mod(1)[0]
    a = eval_gen("F_chi", 1.0, Q_HALF, chi=one)
    b = eval_gen("F", 1.0, Q_HALF)
    assert a.value == b.value


def test_eval_gen_domain_and_verbatim():
    with pytest.raises(DomainError):
        eval_gen("F", -0.5, Q_HALF)
    with pytest.raises(DomainError):
        eval_gen("F", 1j, Q_HALF)   # Re t = 0
    with pytest.raises(DomainError):
        eval_gen("F_chi", 1.0, Q_HALF)  # missing character
    chi4 = characters_mod(4)[1]
    sv = eval_gen("f_chi", 1.0, Q_HALF, chi=chi4, verbatim_fc=True, terms=10)
    assert sv.tail_bound == math.inf  # divergent comparison variant


# ----------------------------------------------------------------------
# classical trigonometric series
# ----------------------------------------------------------------------

def test_trig_series_anchors():
    assert abs(classical_trig_series("S", 1, 2) - 1.0) < 1e-9
    assert abs(classical_trig_series("s3", 1, 3) - 1.0 / 3.0) < 1e-9
    assert abs(classical_trig_series("s4", 1, 3) - 2.0) < 1e-9


def test_trig_series_parity_and_pole_rejection():
    with pytest.raises(ParityError):
        classical_trig_series("S", 1, 3)   # h + k even
    with pytest.raises(ParityError):
        classical_trig_series("s4", 2, 3)  # h even
    with pytest.raises(ParityError):
        classical_trig_series("s1", 1, 3)  # h odd


def test_period_cancellation():
    # sum of tan over a full period vanishes when no pole occurs
    for h, k in ((1, 2), (2, 3), (3, 4), (1, 5), (4, 7), (3, 11)):
        if (h + k) % 2 == 0:
            continue
        total = sum(math.tan(math.pi * ((h * (2 * r - 1)) % (2 * k)) / (2 * k))
                    for r in range(1, k + 1))
        assert abs(total) < 1e-12 * max(1, k)


# ----------------------------------------------------------------------
# oscillatory sums at q = 1
# ----------------------------------------------------------------------

def test_limit1_matches_exact_sums():
    for h, k in ((1, 2), (2, 3), (1, 3), (3, 4), (1, 5)):
        for v in HARDY_VARIANTS:
            if not parity_condition(v, h, k).holds:
                continue
            exact = float(hardy_berndt_sum(v, h, k))
            got = q_hardy_berndt_sum(v, h, k, ONE)
            assert abs(got - exact) < 1e-6


def test_limit1_y0_example():
    res = oscillatory_sum("S", 1, 2, ONE)
    assert abs((4 / (math.pi * 1j)) * res.value - 1.0) < 1e-6
    assert res.route == "limit1-closed-form"
    assert not res.diverged


def test_limit1_closed_form_vs_period_route():
    # two exact routes for the q = 1 value: digamma closed form and the
    # Abel limit of the damped period structure
    from hbq.qsums import _abel_period_value, _limit1_period
    for v, h, k in (("S", 1, 2), ("S", 2, 3), ("s3", 1, 3), ("s4", 1, 3),
                    ("s5", 1, 5), ("s2", 3, 4), ("s1", 2, 3), ("s3", 4, 9)):
        period, d = _limit1_period(v, h, k, None, corollary=True)
        abel, summable = _abel_period_value(period, d)
        assert summable
        closed = oscillatory_sum(v, h, k, ONE).value
        assert abs(abel - closed) < 1e-9


def test_richardson_diagnostic_tracks_value():
    res = oscillatory_sum("S", 1, 2, ONE)
    assert abs(res.extrapolated - res.value) < 1e-3
    assert abs(res.extrapolated - res.value) > 0  # genuinely different routes


def test_scaling_is_bitwise():
    res = oscillatory_sum("s3", 1, 3, ONE)
    assert q_hardy_berndt_sum("s3", 1, 3, ONE) == HB_SCALE["s3"] * res.value


def test_antisymmetry_in_h():
    for q in (Q_HALF, ONE):
        for v, h, k in (("s3", 2, 3), ("S", 1, 2)):
            plus = oscillatory_sum(v, h, k, q)
            minus = oscillatory_sum(v, -h, k, q)
            assert plus.value == -minus.value


def test_principal_mod1_collapse():
    one_chi = characters_mod(1)[0]
    a = oscillatory_sum("S", 1, 2, ONE, chi=one_chi)
    b = oscillatory_sum("S", 1, 2, ONE)
    assert a.value == b.value and a.per_offset == b.per_offset


def test_twisted_limit1_route():
    chi4 = characters_mod(4)[1]
    res = oscillatory_sum("S", 1, 2, ONE, chi=chi4)
    assert res.route in ("limit1-abel-period", "limit1-richardson")
    assert abs(res.value - res.extrapolated) < max(1e-3, 10 * res.residual)


def test_parity_enforcement_and_override():
    with pytest.raises(ParityError):
        q_hardy_berndt_sum("S", 1, 3, ONE)
    # warn-and-proceed mode hands back the abel-period reading
    val = q_hardy_berndt_sum("s3", 1, 2, ONE, enforce_parity=False)
    assert isinstance(val, complex)


# ----------------------------------------------------------------------
# oscillatory sums at q < 1: honest divergence diagnostics
# ----------------------------------------------------------------------

def test_q_below_one_diverges_with_flag():
    res = oscillatory_sum("S", 1, 2, Q_HALF, tol=1e-8)
    assert res.diverged
    assert res.residual > 1e-5
    assert len(res.per_offset) == 4


def test_schedule_validation():
    with pytest.raises(DomainError):
        RegularizationSchedule((0.1, 0.2), 2)     # not decreasing
    with pytest.raises(DomainError):
        RegularizationSchedule((0.1, -0.05), 2)
    with pytest.raises(DomainError):
        RegularizationSchedule((0.1,), 2)         # too short to extrapolate


def test_richardson_exact_on_polynomials():
    eps = (0.2, 0.1, 0.05, 0.025)
    vals = [3.0 + 2.0 * e - 7.0 * e ** 2 for e in eps]
    value, resid = _richardson(eps, vals, 2)
    assert abs(value - 3.0) < 1e-12
    assert resid < 1e-1


# ----------------------------------------------------------------------
# q-Dedekind sums
# ----------------------------------------------------------------------

def test_dedekind_limit1_matches_classical():
    # the literal q = 1 Abel limit of the order-1 sum lands exactly on the
    # classical Dedekind sum for every pair tested
    for h, k in ((1, 2), (1, 3), (2, 5), (3, 7), (5, 12)):
        got = q_dedekind_sum(1, h, k, ONE)
        assert abs(got - float(dedekind_sum(h, k))) < 1e-12


def test_dedekind_order_swap_consistency():
    fine = RegularizationSchedule((0.1, 0.05, 0.025, 0.0125, 0.00625), 4)
    a = dedekind_oscillatory_sum(1, 1, 3, ONE, reg=fine)
    b = dedekind_oscillatory_sum(1, 1, 3, ONE, reg=fine, order="m-first")
    assert abs(a.value - b.value) < 1e-6


def test_dedekind_rejects_even_order():
    with pytest.raises(DomainError):
        q_dedekind_sum(2, 1, 3, ONE)
    with pytest.raises(DomainError):
        q_dedekind_sum(-1, 1, 3, ONE)


def test_dedekind_higher_order_runs():
    val = q_dedekind_sum(3, 1, 3, ONE)
    assert abs(val.imag) < 1e-12
    res = dedekind_oscillatory_sum(3, 1, 3, Q_HALF)
    assert len(res.per_offset) == 4


# ----------------------------------------------------------------------
# schedule stability (the q = 1 sums of the recovery suite)
# ----------------------------------------------------------------------

def test_damped_stability_at_limit1():
    from hbq.qsums import DEFAULT_SCHEDULE
    for v, h, k in (("S", 1, 2), ("s3", 1, 3), ("s4", 1, 5)):
        base = oscillatory_sum(v, h, k, ONE)
        fine = oscillatory_sum(v, h, k, ONE, reg=DEFAULT_SCHEDULE.refined())
        assert abs(fine.value - base.value) < base.residual
