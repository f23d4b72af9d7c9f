"""Special values and relations between the four diagonal families."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import bell
from .errors import DomainError
from .exact import PiValue, bernoulli, binomial, euler_number
from .mzv import Family, diagonal_closed_form
from .zeta import zeta_numeric

__all__ = [
    "IdentityReport",
    "functional_relation",
    "functional_relation_printed",
    "harmonic_product",
    "merca_even_zeta",
    "merca_forms",
    "value_at_even",
    "value_at_two",
    "value_at_zero",
    "vanishing_at_negative_even",
    "zero_value_asymptotics",
]

NUMERIC_TOLERANCE = 1e-12


@dataclass
class IdentityReport:
    identity_id: str
    parameters: dict
    lhs: object
    rhs: object
    residual: float
    passed: bool
    informational: bool = False
    note: str = ""
    extra: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"


def _compare(identity_id: str, parameters: dict, lhs, rhs, tolerance: float = NUMERIC_TOLERANCE,
             **kwargs) -> IdentityReport:
    if isinstance(lhs, (PiValue, Fraction, int)) and isinstance(rhs, (PiValue, Fraction, int)):
        passed = PiValue._coerce(lhs) == PiValue._coerce(rhs)
        residual = 0.0 if passed else abs(float(lhs) - float(rhs))
        return IdentityReport(identity_id, parameters, lhs, rhs, residual, passed, **kwargs)
    residual = abs(float(lhs) - float(rhs))
    return IdentityReport(identity_id, parameters, lhs, rhs, residual, residual <= tolerance, **kwargs)


def _pi_power(coeff, exponent: int) -> PiValue:
    return PiValue.monomial(coeff, exponent)


def value_at_two(family, r: int) -> PiValue:
    """Known closed forms of f_r(2) for the four families."""
    family = Family.parse(family)
    if r < 1:
        raise DomainError("r must be >= 1")
    f2r = math.factorial(2 * r)
    if family is Family.ZETA:
        return _pi_power(Fraction(1, math.factorial(2 * r + 1)), 2 * r)
    if family is Family.T:
        return _pi_power(Fraction(1, 4**r * f2r), 2 * r)
    if family is Family.ZETA_STAR:
        return _pi_power((-1) ** (r + 1) * (4**r - 2) * bernoulli(2 * r) / f2r, 2 * r)
    # secant-number form, Euler index tied to the depth
    return _pi_power(Fraction((-1) ** r * euler_number(2 * r), 4**r * f2r), 2 * r)


def value_at_even(family, r: int, k: int) -> PiValue:
    """f_r(2k) for zeta / zeta-star from Y_r at Bernoulli inputs, scaled by (2 pi)^(2rk)."""
    family = Family.parse(family)
    if family not in (Family.ZETA, Family.ZETA_STAR):
        raise DomainError("value_at_even covers the zeta and zeta-star families")
    if r < 1 or k < 1:
        raise DomainError("r and k must be >= 1")
    sign = -1 if family.star else 1
    xs = [sign * math.factorial(j - 1) * bernoulli(2 * j * k) / (2 * math.factorial(2 * j * k))
          for j in range(1, r + 1)]
    y = bell.complete_bell(r, xs)
    pre_sign = (-1) ** (r * k) if family.star else (-1) ** (r * (k + 1))
    coeff = Fraction(pre_sign, math.factorial(r)) * y * 2 ** (2 * r * k)
    return _pi_power(coeff, 2 * r * k)


def value_at_zero(family, r: int) -> Fraction:
    family = Family.parse(family)
    if r < 1:
        raise DomainError("r must be >= 1")
    if family is Family.ZETA:
        return Fraction((-1) ** r * binomial(2 * r, r), 4**r)
    if family is Family.ZETA_STAR:
        return -Fraction(binomial(2 * r - 2, r - 1), r * 2 ** (2 * r - 1))
    return Fraction(0)


def vanishing_at_negative_even(family, r: int, k: int) -> IdentityReport:
    family = Family.parse(family)
    if r < 1 or k < 1:
        raise DomainError("r and k must be >= 1")
    value = diagonal_closed_form(family, r, -2 * k, "exact").value
    return _compare("vanishing-negative-even", {"family": family.value, "r": r, "k": k},
                    value, PiValue.zero())


def _is_exact_arg(s) -> bool:
    return isinstance(s, (int, Fraction)) and not isinstance(s, bool)


def _family_values(family: Family, r: int, s, backend: str) -> list:
    return [diagonal_closed_form(family, j, s, backend).value for j in range(r + 1)]


def _two_power(j: int, s, backend: str):
    if backend == "exact":
        return Fraction(2) ** (-j * int(s))
    return 2.0 ** (-j * s)


def _relation_rhs(r: int, s, first: list, second: list, backend: str):
    total = 0
    for j in range(r + 1):
        term = first[j] * second[r - j]
        total = total + (-1) ** (r - j) * _two_power(r - j, s, backend) * term
    return total


def functional_relation(r: int, s, star: bool = False) -> IdentityReport:
    """t_r = sum_j (-1)^(r-j) 2^(-(r-j)s) zeta_j zeta*_{r-j}, or its star twin.

    The star twin swaps the roles: t*_r = sum_j (-1)^(r-j) 2^(-(r-j)s)
    zeta*_j zeta_{r-j}.  Integer s runs on the exact backend, anything
    else numerically.
    """
    backend = "exact" if _is_exact_arg(s) else "numeric"
    if backend == "numeric" and not float(s) > 1:
        raise DomainError(f"the relation is checked for s > 1, got {s}")
    zeta = _family_values(Family.ZETA, r, s, backend)
    zstar = _family_values(Family.ZETA_STAR, r, s, backend)
    if star:
        lhs = diagonal_closed_form(Family.T_STAR, r, s, backend).value
        rhs = _relation_rhs(r, s, zstar, zeta, backend)
    else:
        lhs = diagonal_closed_form(Family.T, r, s, backend).value
        rhs = _relation_rhs(r, s, zeta, zstar, backend)
    name = "functional-relation-star" if star else "functional-relation"
    return _compare(name, {"r": r, "s": s, "backend": backend}, lhs, rhs)


def functional_relation_printed(r: int, s) -> IdentityReport:
    """The star relation with zeta_{r-j}(s) zeta*_r(s) in the summand.

    Reported for information; it does not hold (already at r = 2, s = 2).
    """
    backend = "exact" if _is_exact_arg(s) else "numeric"
    zeta = _family_values(Family.ZETA, r, s, backend)
    zstar_r = diagonal_closed_form(Family.ZETA_STAR, r, s, backend).value
    lhs = diagonal_closed_form(Family.T_STAR, r, s, backend).value
    total = 0
    for j in range(r + 1):
        total = total + (-1) ** (r - j) * _two_power(r - j, s, backend) * (zeta[r - j] * zstar_r)
    report = _compare("functional-relation-star-printed", {"r": r, "s": s, "backend": backend},
                      lhs, total, informational=True)
    report.note = "summand zeta_{r-j} * zetastar_r; compare the corrected zetastar_j * zeta_{r-j}"
    return report


def harmonic_product(s: float, star: bool = False) -> IdentityReport:
    """zeta(s)^2 = 2 zeta_2(s) + zeta(2s), or = 2 zeta*_2(s) - zeta(2s)."""
    z = zeta_numeric(s)
    z2 = zeta_numeric(2 * s)
    if star:
        rhs = 2 * diagonal_closed_form(Family.ZETA_STAR, 2, s).value - z2
    else:
        rhs = 2 * diagonal_closed_form(Family.ZETA, 2, s).value + z2
    name = "harmonic-product-star" if star else "harmonic-product"
    return _compare(name, {"s": s}, z * z, rhs)


def merca_forms(k: int) -> tuple[PiValue, PiValue]:
    """Both partition-sum expressions for zeta(2k) over odd factorials."""
    if k < 1:
        raise DomainError("k must be >= 1")
    first = Fraction(0)
    second = Fraction(0)
    for counts in bell.partitions_of(k):
        parts = sum(counts)
        den = 1
        for i, c in enumerate(counts, 1):
            if c:
                den *= math.factorial(2 * i + 1) ** c * math.factorial(c)
        sign = (-1) ** (k + parts)
        first += Fraction(sign * math.factorial(parts - 1), den)
        second += Fraction(sign * math.factorial(parts), den)
    first *= k
    second *= Fraction(2 ** (2 * k), 2 * (2 ** (2 * k) - 2))
    return _pi_power(first, 2 * k), _pi_power(second, 2 * k)


def merca_even_zeta(k: int) -> PiValue:
    first, second = merca_forms(k)
    if first != second:
        raise ArithmeticError(f"the two odd-factorial sums disagree at k={k}")
    return first


def zero_value_asymptotics(r: int) -> tuple[float, float]:
    """Ratios zeta_r(0) / ((-1)^r / sqrt(pi r)) and zeta*_r(0) / (-1 / (2 sqrt(pi r^3)))."""
    if r < 1:
        raise DomainError("r must be >= 1")
    z = value_at_zero(Family.ZETA, r)
    zs = value_at_zero(Family.ZETA_STAR, r)
    ratio = float(z) * (-1) ** r * math.sqrt(math.pi * r)
    ratio_star = float(zs) * -2 * math.sqrt(math.pi * r**3)
    return ratio, ratio_star
