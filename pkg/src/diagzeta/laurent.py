"""Poles of zeta_r(s) on the positive real axis.

zeta_r(s) has poles exactly at s = 1/k, 1 <= k <= r, of order l = r // k.
Writing r = k l + m, the coefficient of (k s - 1)^-l is

    (-1)^((k+1) l) / (k^l l!) * zeta_m(1/k),

and zeta_m(1/k) has sign (-1)^m because zeta < 0 on (0, 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError, InconclusiveError
from .mzv import Family, diagonal_closed_form

__all__ = [
    "DEFAULT_EPSILONS",
    "ORDER_TOLERANCE",
    "LaurentReport",
    "PoleSpec",
    "laurent_numeric_check",
    "leading_coefficient",
    "nonvanishing_certificate",
    "pole_set",
]

DEFAULT_EPSILONS = (1e-2, 1e-3, 1e-4)

# Final relative gap allowed at the smallest epsilon, by pole order.  The
# gap is dominated by the O(eps) next Laurent term, not by rounding: the
# closed form is summed exactly from the scalar inputs.
ORDER_TOLERANCE = {1: 1e-2, 2: 1e-2, 3: 1e-2, 4: 1e-2, 5: 1e-2, 6: 1e-2}
DEFAULT_TOLERANCE = 1e-2

# Relative slack when judging that successive gaps shrink.
_CONTRACTION_SLACK = 1e-9


@dataclass(frozen=True)
class PoleSpec:
    r: int
    k: int
    order: int
    remainder: int

    @property
    def location(self) -> float:
        return 1 / self.k


@dataclass
class LaurentReport:
    pole: PoleSpec
    leading_closed_form: float
    numeric_estimates: list[tuple[float, float]]
    tolerance: float
    final_gap: float
    contracting: bool
    passed: bool
    gaps: list[float] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"


def _pole(r: int, k: int) -> PoleSpec:
    if r < 1 or not 1 <= k <= r:
        raise DomainError(f"need 1 <= k <= r, got r={r}, k={k}")
    l, m = divmod(r, k)
    return PoleSpec(r, k, l, m)


def pole_set(r: int) -> list[PoleSpec]:
    if r < 1:
        raise DomainError("r must be >= 1")
    return [_pole(r, k) for k in range(1, r + 1)]


def _inner_value(m: int, k: int) -> float:
    # every argument j/k with j <= m < k lies in (0, 1)
    return diagonal_closed_form(Family.ZETA, m, 1 / k).value if m else 1.0


def leading_coefficient(r: int, k: int) -> float:
    """R(k; zeta_r), the coefficient of (k s - 1)^(-r // k) at s = 1/k."""
    p = _pole(r, k)
    l, m = p.order, p.remainder
    prefactor = (-1) ** ((k + 1) * l) / (k**l * math.factorial(l))
    return prefactor * _inner_value(m, k)


def _check_collision(r: int, s: float):
    for kk in range(1, r + 1):
        if abs(s * kk - 1) <= 8 * math.ulp(1.0):
            raise DomainError(f"s = {s!r} collides with the pole 1/{kk}")


def laurent_numeric_check(r: int, k: int, epsilons=DEFAULT_EPSILONS, tolerance: float | None = None,
                          two_sided: bool = True) -> LaurentReport:
    """Compare zeta_r(1/k + eps) (k eps)^l with the closed-form leading coefficient.

    Epsilons are used from largest to smallest magnitude; with
    ``two_sided`` the mirrored points 1/k - eps are added when they stay
    positive.  Passing requires the relative gap to shrink along each
    side and to end below the tolerance.
    """
    p = _pole(r, k)
    if tolerance is None:
        tolerance = ORDER_TOLERANCE.get(p.order, DEFAULT_TOLERANCE)
    expected = leading_coefficient(r, k)
    ladder = sorted((abs(e) for e in epsilons), reverse=True)
    if not ladder or ladder[-1] == 0:
        raise DomainError("epsilons must be non-zero")
    sides = [1, -1] if two_sided else [1]
    estimates: list[tuple[float, float]] = []
    contracting = True
    final_gaps = []
    all_gaps = []
    for side in sides:
        points = [side * e for e in ladder if 1 / k + side * e > 0]
        gaps = []
        for eps in points:
            s = 1 / k + eps
            _check_collision(r, s)
            value = diagonal_closed_form(Family.ZETA, r, s).value
            estimate = value * (k * s - 1) ** p.order
            if not math.isfinite(estimate):
                raise ArithmeticError(f"non-finite Laurent estimate at eps={eps}")
            estimates.append((eps, estimate))
            gaps.append(abs(estimate - expected) / abs(expected))
        for a, b in zip(gaps, gaps[1:]):
            if b > a * (1 + _CONTRACTION_SLACK):
                contracting = False
        if gaps:
            final_gaps.append(gaps[-1])
        all_gaps.extend(gaps)
    final_gap = max(final_gaps)
    passed = contracting and final_gap <= tolerance
    return LaurentReport(p, expected, estimates, tolerance, final_gap, contracting, passed, all_gaps)


# Error budget of zeta_m(1/k) from the closed form on (0, 1) inputs.
_SIGN_BUDGET = 1e-12


def nonvanishing_certificate(r: int, k: int) -> bool:
    """True when zeta_m(1/k) has sign (-1)^m, m = r mod k (so the pole order is exactly r // k)."""
    p = _pole(r, k)
    m = p.remainder
    if m == 0:
        return True
    value = _inner_value(m, k)
    if abs(value) < 10 * _SIGN_BUDGET:
        raise InconclusiveError(f"|zeta_{m}(1/{k})| = {abs(value):.3e} is inside the error budget")
    return (value > 0) == (m % 2 == 0)
