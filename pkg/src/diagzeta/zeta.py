"""Riemann zeta and t(s) = (1 - 2^-s) zeta(s) on the real axis.

Numeric evaluation covers s in (0, 1) and (1, inf) in double precision:

* s > 1: Euler-Maclaurin summation with a fixed head length.  Absolute
  error stays below 1e-13 away from the pole; close to s = 1 the error is
  relative (about 1e-15 of |zeta(s)|).
* 0 < s < 1: the alternating eta series with the Cohen-Rodriguez Villegas-
  Zagier Chebyshev acceleration, divided by 1 - 2^(1-s).

Exact values: zeta(2k) as a :class:`PiValue`, zeta(-n) as a Fraction.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, NoClosedFormError
from .exact import PiValue, bernoulli

__all__ = [
    "eta_accelerated",
    "t_exact",
    "t_minus_one",
    "t_numeric",
    "zeta_exact",
    "zeta_exact_even",
    "zeta_exact_nonpositive",
    "zeta_minus_one",
    "zeta_numeric",
]

_EM_HEAD = 20
_EM_MAX_TERMS = 30
_ETA_TARGET = 1e-15


@lru_cache(maxsize=1)
def _em_bernoulli() -> tuple[float, ...]:
    # B_{2j} / (2j)! for j = 1.._EM_MAX_TERMS
    return tuple(float(bernoulli(2 * j) / math.factorial(2 * j)) for j in range(1, _EM_MAX_TERMS + 1))


def _em_sum(s: float, a: int, c: int, start: int) -> float:
    """sum_{m >= start} (a m + c)^-s for s > 1 by Euler-Maclaurin."""
    n = start + _EM_HEAD
    head = math.fsum((a * m + c) ** -s for m in range(start, n))
    u = a * n + c
    tail = [u ** (1 - s) / (a * (s - 1)), 0.5 * u**-s]
    # (2j-1)-th derivative: rising product s (s+1) ... (s+2j-2) a^(2j-1) u^(-s-2j+1)
    rising = s * a
    power = u ** (-s - 1)
    last = math.inf
    for j, b in enumerate(_em_bernoulli(), 1):
        term = b * rising * power
        if abs(term) >= last:
            # asymptotic series started to grow; only happens once terms are negligible
            break
        tail.append(term)
        if abs(term) < 1e-18 * abs(head):
            break
        last = abs(term)
        rising *= (s + 2 * j - 1) * (s + 2 * j) * a * a
        power /= u * u
    return math.fsum([head] + tail)


def _crvz_terms(target: float) -> int:
    return math.ceil(math.log(2 / target) / math.log(3 + math.sqrt(8)))


def eta_accelerated(s: float, n_terms: int | None = None) -> float:
    """Dirichlet eta(s) = sum (-1)^(k) (k+1)^-s via Chebyshev acceleration.

    The error is at most 2 / (3 + sqrt 8)^n times eta's first term, which
    holds for the completely monotone terms (k+1)^-s with s > 0.
    """
    if s <= 0:
        raise DomainError(f"eta series needs s > 0, got {s}")
    n = n_terms or _crvz_terms(_ETA_TARGET)
    d = (3 + math.sqrt(8)) ** n
    d = (d + 1 / d) / 2
    b = -1.0
    c = -d
    acc = 0.0
    for k in range(n):
        c = b - c
        acc += c * (k + 1) ** -s
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1))
    return acc / d


def _check_numeric(s) -> float:
    s = float(s)
    if not math.isfinite(s) or s <= 0:
        raise DomainError(f"numeric zeta requires s > 0, got {s}")
    if s == 1:
        raise DomainError("zeta has a pole at s = 1")
    return s


def zeta_numeric(s: float) -> float:
    """zeta(s) for real s > 0, s != 1."""
    s = _check_numeric(s)
    if s > 1:
        return _em_sum(s, 1, 0, 1)
    return eta_accelerated(s) / -math.expm1((1 - s) * math.log(2))


def t_numeric(s: float) -> float:
    """t(s) = sum over odd n of n^-s = (1 - 2^-s) zeta(s)."""
    s = _check_numeric(s)
    return -math.expm1(-s * math.log(2)) * zeta_numeric(s)


def zeta_minus_one(s: float) -> float:
    """zeta(s) - 1 = sum_{n >= 2} n^-s with full relative accuracy, s > 1."""
    s = _check_numeric(s)
    if s < 1:
        return zeta_numeric(s) - 1
    return _em_sum(s, 1, 0, 2)


def t_minus_one(s: float) -> float:
    """t(s) - 1 = sum over odd n >= 3 of n^-s, full relative accuracy for s > 1."""
    s = _check_numeric(s)
    if s < 1:
        return t_numeric(s) - 1
    return _em_sum(s, 2, 1, 1)


def zeta_exact_even(k: int) -> PiValue:
    """zeta(2k) = (-1)^(k+1) B_2k (2 pi)^2k / (2 (2k)!)."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    coeff = (-1) ** (k + 1) * bernoulli(2 * k) * 2 ** (2 * k) / (2 * math.factorial(2 * k))
    return PiValue.monomial(coeff, 2 * k)


def zeta_exact_nonpositive(s: int) -> Fraction:
    """zeta(s) at an integer s <= 0: zeta(0) = -1/2, zeta(-n) = -B_{n+1}/(n+1)."""
    if s > 0:
        raise DomainError(f"expected a non-positive integer, got {s}")
    if s == 0:
        return Fraction(-1, 2)
    n = -s
    return -bernoulli(n + 1) / (n + 1)


def _integer_arg(s) -> int:
    if isinstance(s, bool):
        raise DomainError("boolean is not an argument")
    if isinstance(s, int):
        return s
    if isinstance(s, Fraction) and s.denominator == 1:
        return int(s)
    if isinstance(s, float) and s.is_integer():
        return int(s)
    raise NoClosedFormError(f"no exact closed form at non-integer s = {s}")


def zeta_exact(s) -> PiValue:
    """zeta(s) as a PiValue for s even positive or s <= 0."""
    n = _integer_arg(s)
    if n <= 0:
        return PiValue.constant(zeta_exact_nonpositive(n))
    if n % 2:
        raise NoClosedFormError(f"zeta({n}) has no closed form in Q[pi^2]")
    return zeta_exact_even(n // 2)


def t_exact(s) -> PiValue:
    """t(s) = (1 - 2^-s) zeta(s) as a PiValue, same domain as zeta_exact."""
    n = _integer_arg(s)
    factor = 1 - Fraction(2) ** -n
    return zeta_exact(n) * factor
