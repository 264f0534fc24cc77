"""Classical analytic machinery: Riemann zeta, the odd-denominator zeta
zeta*(s), the alternating (Genocchi-type) zeta, Hurwitz zeta, the
Hurwitz-Lerch transcendent, and digamma.

Algorithms: Cohen-Rodriguez Villegas-Zagier acceleration for the alternating
series (Experiment. Math. 9 (2000)), Euler-Maclaurin for Hurwitz zeta,
recurrence shift plus the Bernoulli asymptotic series for digamma.  Values at
nonpositive integers go through exact Bernoulli-number arithmetic.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

from scipy.special import gamma as _gamma

from .core import DomainError, SeriesValue
from .numbers import NumberKind, number_table

__all__ = [
    "digamma",
    "genocchi_zeta",
    "genocchi_zeta_exact",
    "hurwitz_zeta",
    "lerch_phi",
    "odd_power_sum",
    "riemann_zeta",
    "zeta_exact_nonpositive",
    "zeta_star",
]

_LOG_ACCEL = math.log(3.0 + math.sqrt(8.0))
_BERN = number_table(NumberKind.BERNOULLI, 40)


def _is_nonpositive_int(s) -> bool:
    z = complex(s)
    return z.imag == 0 and z.real <= 0 and z.real == int(z.real)


def zeta_exact_nonpositive(s0: int) -> Fraction:
    """zeta at an integer s0 <= 0, exactly: zeta(0) = -1/2 and
    zeta(1-n) = -B_n/n for n >= 2."""
    if s0 > 0:
        raise DomainError("exact route only covers s <= 0")
    if s0 == 0:
        return Fraction(-1, 2)
    n = 1 - s0
    return -_BERN[n] / n if n < len(_BERN) else -number_table(NumberKind.BERNOULLI, n)[n] / n


def _eta_accelerated(s: complex, tol: float):
    """Alternating zeta eta(s) = sum_{m>=1} (-1)^(m-1) m^(-s) for Re s > 0.

    The CRVZ error bound for totally monotone coefficients is
    3 (3+sqrt(8))^(-n); complex s inflates it by Gamma(Re s)/|Gamma(s)|.
    """
    z = complex(s)
    if z.real <= 0:
        raise DomainError("alternating route needs Re(s) > 0")
    tv = 1.0
    if z.imag != 0:
        tv = abs(_gamma(z.real) / _gamma(z))
    n = max(12, int(math.log(3.0 * max(tv, 1.0) / tol) / _LOG_ACCEL) + 3)
    d = (3.0 + math.sqrt(8.0)) ** n
    d = (d + 1.0 / d) / 2.0
    b = -1.0
    c = -d
    acc = 0j
    for k in range(n):
        c = b - c
        acc += c * (k + 1) ** (-z)
        b *= 2.0 * (k + n) * (k - n) / ((2.0 * k + 1.0) * (k + 1.0))
    bound = 3.0 * max(tv, 1.0) * math.exp(-n * _LOG_ACCEL)
    return acc / d, bound, n


def riemann_zeta(s, tol: float = 1e-12) -> SeriesValue:
    """Riemann zeta via the accelerated alternating series for Re(s) > 0
    (s != 1) and exact Bernoulli values at nonpositive integers."""
    if tol <= 0:
        raise DomainError("tol must be positive")
    if _is_nonpositive_int(s):
        return SeriesValue(complex(float(zeta_exact_nonpositive(int(complex(s).real)))),
                           0.0, 0)
    z = complex(s)
    if z == 1:
        raise DomainError("zeta has a pole at s = 1")
    eta, bound, n = _eta_accelerated(z, tol / 4)
    denom = 1.0 - 2.0 ** (1.0 - z) if z.imag == 0 else 1.0 - cmath.exp((1.0 - z) * math.log(2.0))
    if abs(denom) < 1e-12:
        raise DomainError("s too close to a zero of 1 - 2^(1-s)")
    return SeriesValue(eta / denom, bound / abs(denom), n)


def zeta_star(s, tol: float = 1e-12, route: str = "identity") -> SeriesValue:
    """Odd-denominator zeta  zeta*(s) = sum_{m>=1} (2m-1)^(-s).

    route="identity" uses (1 - 2^(-s)) zeta(s) (valid for Re s > 0, s != 1);
    route="direct" sums the defining series with an Euler-Maclaurin tail
    (requires Re s > 1).  The two must agree within combined tail bounds.
    """
    z = complex(s)
    if route == "identity":
        zv = riemann_zeta(z, tol / 2)
        factor = 1.0 - cmath.exp(-z * math.log(2.0))
        return SeriesValue(factor * zv.value, abs(factor) * zv.tail_bound,
                           zv.terms_used)
    if route == "direct":
        if z.real <= 1:
            raise DomainError("direct route needs Re(s) > 1")
        hz = hurwitz_zeta(z, 0.5, tol / 2)
        factor = cmath.exp(-z * math.log(2.0))
        return SeriesValue(factor * hz.value, abs(factor) * hz.tail_bound,
                           hz.terms_used)
    raise DomainError(f"unknown route {route!r}")


def genocchi_zeta(s, tol: float = 1e-12) -> SeriesValue:
    """Alternating (Genocchi-type) zeta  2 sum_{n>=1} (-1)^n n^(-s) = -2 eta(s).

    Entire in s: the alternating route covers Re(s) > 0 including s = 1, and
    nonpositive integers go through exact Bernoulli arithmetic.
    """
    if _is_nonpositive_int(s):
        return SeriesValue(complex(float(genocchi_zeta_exact(int(complex(s).real)))),
                           0.0, 0)
    eta, bound, n = _eta_accelerated(complex(s), tol / 2)
    return SeriesValue(-2.0 * eta, 2.0 * bound, n)


def genocchi_zeta_exact(s0: int) -> Fraction:
    """Exact value of the alternating zeta's continuation at integer s0 <= 0:
    -2 (1 - 2^(1-s0)) zeta(s0)."""
    if s0 > 0:
        raise DomainError("exact route only covers s <= 0")
    return -2 * (1 - Fraction(2) ** (1 - s0)) * zeta_exact_nonpositive(s0)


def _rising(s: complex, count: int) -> complex:
    acc = 1.0 + 0j
    for i in range(count):
        acc *= s + i
    return acc


def hurwitz_zeta(s, a, tol: float = 1e-12) -> SeriesValue:
    """Hurwitz zeta zeta(s, a) by Euler-Maclaurin, a > 0, s != 1."""
    z = complex(s)
    af = float(a)
    if af <= 0:
        raise DomainError("a must be positive")
    if z == 1:
        raise DomainError("pole at s = 1")
    big_n = max(0, int(math.ceil(14 + 1.5 * abs(z.imag) - af)))
    w = af + big_n
    acc = 0j
    for n in range(big_n):
        acc += cmath.exp(-z * math.log(af + n))
    acc += cmath.exp((1.0 - z) * math.log(w)) / (z - 1.0)
    acc += 0.5 * cmath.exp(-z * math.log(w))
    j_max = 12
    for j in range(1, j_max + 1):
        coef = float(_BERN[2 * j]) / math.factorial(2 * j)
        acc += coef * _rising(z, 2 * j - 1) * cmath.exp(-(z + 2 * j - 1) * math.log(w))
    nxt = abs(float(_BERN[2 * j_max + 2]) / math.factorial(2 * j_max + 2)
              * _rising(z, 2 * j_max + 1)) * w ** (-(z.real + 2 * j_max + 1))
    bound = nxt * (abs(z + 2 * j_max + 1) / (z.real + 2 * j_max + 1))
    if bound > tol:
        raise DomainError(f"Euler-Maclaurin tail {bound:.2e} above tol; "
                          "increase tol or stay in a tamer region")
    return SeriesValue(acc, bound, big_n + j_max)


def lerch_phi(z, s, a, tol: float = 1e-12) -> SeriesValue:
    """Hurwitz-Lerch transcendent Phi(z,s,a) = sum_{m>=0} z^m (m+a)^(-s).

    Summation starts at m = 0, the convention under which Phi(1,s,a)
    reduces to the Hurwitz zeta.  |z| < 1, or |z| = 1 with Re(s) > 1; a > 0.
    """
    af = float(a)
    if af <= 0:
        raise DomainError("a must be positive")
    zc = complex(z)
    sc = complex(s)
    if zc == 0:
        return SeriesValue(cmath.exp(-sc * math.log(af)), 0.0, 1)
    if zc == 1:
        return hurwitz_zeta(sc, af, tol)
    az = abs(zc)
    if az > 1:
        raise DomainError("|z| <= 1 required")
    if az == 1 and sc.real <= 1:
        raise DomainError("|z| = 1 needs Re(s) > 1")
    acc = 0j
    zp = 1.0 + 0j
    m = 0
    while True:
        acc += zp * cmath.exp(-sc * math.log(m + af))
        # tail after m terms
        if az < 1:
            grow = max(1.0, (m + 1 + af) / (m + af)) ** max(0.0, -sc.real)
            r = az * grow
            if r < 0.95:
                tail = (az ** (m + 1)) * (m + 1 + af) ** (-sc.real) / (1.0 - r)
                if tail <= tol:
                    return SeriesValue(acc, tail, m + 1)
        else:
            tail = (m + af) ** (1.0 - sc.real) / (sc.real - 1.0)
            if tail <= tol:
                return SeriesValue(acc, tail, m + 1)
        zp *= zc
        m += 1
        if m > 50_000_000:
            raise DomainError("series did not reach tolerance")


def odd_power_sum(z, s, b: int = 1, tol: float = 1e-12,
                  route: str = "direct") -> SeriesValue:
    """sum_{m>=1} z^m / (2m-1)^s.

    route="direct" sums the series (z = 1 goes through 2^(-s) zeta(s, 1/2)).
    route="decomposition" uses the Lerch split over b residue classes,

        z (2b)^(-s) sum_{j=1}^{b} z^(j-1) Phi(z^b, s, (2j-1)/(2b)),

    with the sum over j restored and the leading z fixed against the direct
    oracle (the m-from-0 Phi convention shifts every exponent down by one).
    """
    if b < 1:
        raise DomainError("b must be >= 1")
    zc = complex(z)
    sc = complex(s)
    if route == "decomposition":
        acc = 0j
        bound = 0.0
        terms = 0
        scale = cmath.exp(-sc * math.log(2 * b))
        for j in range(1, b + 1):
            phi = lerch_phi(zc ** b, sc, Fraction(2 * j - 1, 2 * b), tol / (2 * b))
            acc += zc ** (j - 1) * phi.value
            bound += abs(zc) ** (j - 1) * phi.tail_bound
            terms += phi.terms_used
        return SeriesValue(zc * scale * acc, abs(scale) * bound, terms)
    if route != "direct":
        raise DomainError(f"unknown route {route!r}")
    if zc == 1:
        if sc.real <= 1:
            raise DomainError("z = 1 needs Re(s) > 1")
        hz = hurwitz_zeta(sc, 0.5, tol)
        scale = cmath.exp(-sc * math.log(2.0))
        return SeriesValue(scale * hz.value, abs(scale) * hz.tail_bound,
                           hz.terms_used)
    if abs(zc) >= 1:
        raise DomainError("|z| < 1 required for the direct sum (or z = 1)")
    acc = 0j
    zp = 1.0 + 0j
    m = 0
    while True:
        m += 1
        zp *= zc
        acc += zp * cmath.exp(-sc * math.log(2 * m - 1))
        grow = ((2 * m + 1) / (2 * m - 1)) ** max(0.0, -sc.real)
        r = abs(zc) * grow
        if r < 0.95:
            tail = (abs(zc) ** (m + 1)) * (2 * m + 1) ** (-sc.real) / (1.0 - r)
            if tail <= tol:
                return SeriesValue(acc, tail, m)
        if m > 50_000_000:
            raise DomainError("series did not reach tolerance")


def digamma(x: float, tol: float = 1e-12) -> float:
    """psi(x) for x > 0: recurrence shift to x >= 12, then the Bernoulli
    asymptotic series, truncation error below the first omitted term."""
    if x <= 0:
        raise DomainError("digamma implemented for x > 0")
    if tol <= 0:
        raise DomainError("tol must be positive")
    shift = 0.0
    y = float(x)
    while y < 12.0:
        shift -= 1.0 / y
        y += 1.0
    acc = math.log(y) - 0.5 / y
    y2 = y * y
    yp = y2
    for j in range(1, 10):
        term = float(_BERN[2 * j]) / (2 * j) / yp
        acc -= term
        yp *= y2
        nxt = abs(float(_BERN[2 * j + 2])) / (2 * j + 2) / yp
        if nxt < tol:
            break
    return acc + shift
