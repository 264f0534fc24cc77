from fractions import Fraction

import pytest

from hbq import DomainError, QParam, QRegime, qbracket, sawtooth


def test_qbracket_examples():
    q = QParam.real(Fraction(1, 2))
    assert qbracket(0, q) == 0
    assert qbracket(1, q) == 1
    assert qbracket(1, QParam.real(Fraction(2, 3))) == 1
    assert qbracket(3, q) == Fraction(7, 4)  # (1 - 1/8) / (1/2)
    assert qbracket(5, QParam.one()) == 5


def test_qbracket_shift_identity_exact():
    # [n + x] = [n] + q^n [x], exactly, over the full grid
    for qv in (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3)):
        q = QParam.real(qv)
        for n in range(21):
            for x in range(21):
                assert qbracket(n + x, q) == qbracket(n, q) + qv ** n * qbracket(x, q)


def test_qbracket_base_change_identity_exact():
    # [a + m f] = [m : q^f][f] + q^(m f)[a]
    qv = Fraction(1, 2)
    for a in range(1, 9):
        for m in range(1, 9):
            for f in range(1, 9):
                lhs = qbracket(a + m * f, QParam.real(qv))
                rhs = qbracket(m, QParam.real(qv ** f)) * qbracket(f, QParam.real(qv)) \
                    + qv ** (m * f) * qbracket(a, QParam.real(qv))
                assert lhs == rhs


def test_qbracket_continuity_toward_one():
    for n in range(2, 11):
        dists = []
        for k in range(2, 7):
            qv = 1 - Fraction(1, 10 ** k)
            dists.append(abs(qbracket(n, QParam.real(qv)) - n))
        assert all(a > b for a, b in zip(dists, dists[1:]))
    # n = 0, 1 are exact at every q
    for k in range(2, 7):
        q = QParam.real(1 - Fraction(1, 10 ** k))
        assert qbracket(0, q) == 0 and qbracket(1, q) == 1


def test_qbracket_rejects_negative_n():
    with pytest.raises(DomainError):
        qbracket(-1, QParam.real(Fraction(1, 2)))


def test_sawtooth_values():
    assert sawtooth(0) == 0
    assert sawtooth(Fraction(1, 2)) == 0
    assert sawtooth(Fraction(1, 3)) == Fraction(-1, 6)
    assert sawtooth(Fraction(5, 4)) == Fraction(-1, 4)
    assert sawtooth(7) == 0


def test_sawtooth_odd_and_periodic():
    for num in range(-30, 31):
        for den in range(1, 9):
            x = Fraction(num, den)
            assert sawtooth(x + 1) == sawtooth(x)
            if x.denominator > 1:
                assert sawtooth(-x) == -sawtooth(x)


def test_qparam_validation():
    with pytest.raises(DomainError):
        QParam.real(Fraction(3, 2))
    with pytest.raises(DomainError):
        QParam.real(Fraction(0))
    with pytest.raises(DomainError):
        QParam.real(0.5)  # floats rejected
    with pytest.raises(DomainError):
        QParam.complex_disk(1.2 + 0j)
    assert QParam.parse("1").regime is QRegime.LIMIT1
    assert QParam.parse("2/5").value == Fraction(2, 5)
