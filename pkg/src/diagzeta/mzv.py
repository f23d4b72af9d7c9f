"""Multiple zeta functions and their variants at identical arguments.

Each of the four families

    zeta_r(s),  zeta*_r(s),  t_r(s),  t*_r(s)

can be evaluated by

* ``diagonal_closed_form``: the signed partition sum in the base values
  b_j = base(j s);
* ``diagonal_bell_form``: (+-1)^r / r! * Y_r(+-0! b_1, ..., +-(r-1)! b_r);
* ``diagonal_recurrence``: r f_r = sum_j (+-1)^(j-1) f_{r-j} b_j from f_0 = 1;
* ``diagonal_oracle``: elementary/complete symmetric functions of the
  first N series terms, numeric and s > 1 only.

``backend="numeric"`` works for real s with every j*s in (0, 1) or
(1, inf).  Base values come from the double-precision scalar layer, as
1 + (base - 1) where that difference is summed directly, and are then
combined in exact rational arithmetic; the only rounding is in the inputs
and the final conversion to float.  Without this the non-star sums lose
all accuracy when s is large (t_6(4) is about 3e-16 while its partition
terms are about 1e-3).  ``backend="exact"`` returns a :class:`PiValue` and
accepts even positive integers, zero and negative integers.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Literal

from . import bell
from .errors import DivergenceError, DomainError, PoleError
from .exact import PiValue, bernoulli
from .zeta import t_exact, t_minus_one, t_numeric, zeta_exact, zeta_minus_one, zeta_numeric

__all__ = [
    "EXACT_DEPTH_CAP",
    "NUMERIC_DEPTH_CAP",
    "ORACLE_DEPTH_CAP",
    "DiagonalValue",
    "Family",
    "Method",
    "OracleConfig",
    "base_values",
    "diagonal_bell_form",
    "diagonal_closed_form",
    "diagonal_oracle",
    "diagonal_recurrence",
]

EXACT_DEPTH_CAP = 32
NUMERIC_DEPTH_CAP = 32
ORACLE_DEPTH_CAP = 12

Backend = Literal["numeric", "exact"]


class Family(enum.Enum):
    ZETA = "zeta"
    ZETA_STAR = "zetastar"
    T = "t"
    T_STAR = "tstar"

    @property
    def star(self) -> bool:
        return self in (Family.ZETA_STAR, Family.T_STAR)

    @property
    def odd(self) -> bool:
        """True for the t families, whose series run over odd integers."""
        return self in (Family.T, Family.T_STAR)

    @classmethod
    def parse(cls, name) -> Family:
        if isinstance(name, Family):
            return name
        key = str(name).strip().lower().replace("_", "").replace("-", "").replace("*", "star")
        for fam in cls:
            if fam.value == key:
                return fam
        raise ValueError(f"unknown family {name!r}; expected one of {[f.value for f in cls]}")


class Method(enum.Enum):
    CLOSED_FORM = "closed-form"
    BELL_FORM = "bell-form"
    RECURRENCE = "recurrence"
    ORACLE = "oracle"


@dataclass(frozen=True)
class DiagonalValue:
    family: Family
    depth: int
    argument: object
    value: object
    method: Method
    error_bound: float | None = None

    def __float__(self):
        return float(self.value)


@dataclass(frozen=True)
class OracleConfig:
    """Truncated-series settings.

    With ``tail_correction`` the missing tail n > N is folded back in from
    an integral estimate of its first power sum; the reported bound then
    covers the residual of that estimate rather than the whole tail.
    """

    truncation: int = 5000
    tail_correction: bool = True


def _check_depth(r: int, cap: int):
    if not isinstance(r, int) or r < 0:
        raise DomainError(f"depth must be a non-negative integer, got {r!r}")
    if r > cap:
        raise DomainError(f"depth {r} exceeds the cap {cap}")


def _check_numeric_arg(s: float, r: int) -> float:
    s = float(s)
    if not math.isfinite(s) or s <= 0:
        raise DomainError(f"numeric evaluation requires s > 0, got {s}")
    for j in range(1, r + 1):
        if abs(j * s - 1) <= 4 * math.ulp(1.0):
            raise PoleError(s, j)
    return s


def base_values(family: Family, r: int, s, backend: Backend = "numeric") -> list:
    """[base(s), base(2s), ..., base(rs)] with base = zeta or t."""
    family = Family.parse(family)
    if backend == "numeric":
        s = _check_numeric_arg(s, r)
        fn = t_numeric if family.odd else zeta_numeric
        return [fn(j * s) for j in range(1, r + 1)]
    if backend == "exact":
        fn = t_exact if family.odd else zeta_exact
        return [fn(j * s) for j in range(1, r + 1)]
    raise ValueError(f"unknown backend {backend!r}")


# Relative error budget of the scalar inputs: base - 1 for j*s > 1 (direct
# Euler-Maclaurin sum, measured below 2e-16), base itself for j*s < 1
# (accelerated eta series).
_DELTA_REL = 1e-15
_BELOW_ONE_REL = 1e-14


@lru_cache(maxsize=1024)
def _rational_base_values(family: Family, r: int, s: float) -> tuple[Fraction, ...]:
    s = _check_numeric_arg(s, r)
    out = []
    for j in range(1, r + 1):
        x = j * s
        if x > 1:
            delta = t_minus_one(x) if family.odd else zeta_minus_one(x)
            out.append(1 + Fraction(delta))
        else:
            out.append(Fraction(t_numeric(x) if family.odd else zeta_numeric(x)))
    return tuple(out)


def _slope_bound(x: float, odd: bool) -> float:
    """Upper bound on |d base / dx| at x, used to price the rounding of x."""
    if x < 1:
        return 2 * (1 / (1 - x) ** 2 + 1)
    # sum over n >= 2 (odd n >= 3) of log(n) n^-x: first term plus an integral
    n0 = 3.0 if odd else 2.0
    head = math.log(n0) * n0**-x
    step = 2.0 if odd else 1.0
    y = x - 1
    tail = n0 ** (1 - x) * (math.log(n0) / y + 1 / y**2) / step
    return 2 * (head + tail)


def _propagated_error(family: Family, r: int, s: float, value: float) -> float:
    """First-order bound from the input errors: d f_r / d b_j = +-f_{r-j} / j."""
    b = _rational_base_values(family, r, s)
    table = _recurrence_table(family, r, s, "numeric")
    bound = 0.0
    for j in range(1, r + 1):
        x = j * s
        err = _DELTA_REL * abs(float(b[j - 1] - 1)) if x > 1 else _BELOW_ONE_REL * abs(float(b[j - 1]))
        # j*s itself is rounded before the scalar layer sees it
        err += _slope_bound(x, family.odd) * math.ulp(x) / 2
        bound += abs(float(table[r - j])) / j * err
    return 2 * bound + 2 * math.ulp(value)


def _pi_weight(s: int) -> int:
    # exact base(j s) is a rational multiple of pi^(j w): w = s at even s > 0, else 0
    return s if s > 0 else 0


def _working_base_values(family: Family, r: int, s, backend: Backend) -> list:
    """Scalars the evaluators combine.

    On the exact backend every product of base values in a weight-r sum
    carries the same power pi^(r w), so only the rational coefficients are
    combined and the power is restored in :func:`_result`.
    """
    if backend == "numeric":
        return list(_rational_base_values(family, r, s))
    w = _pi_weight(s)
    coeffs = []
    for j, v in enumerate(base_values(family, r, s, backend), 1):
        q = v.coefficient(j * w)
        assert v == PiValue.monomial(q, j * w), f"unexpected exact base value {v}"
        coeffs.append(q)
    return coeffs


def _result(family: Family, r: int, s, value, method: Method, backend: Backend) -> DiagonalValue:
    if backend == "numeric":
        value = float(value)
        return DiagonalValue(family, r, s, value, method, _propagated_error(family, r, s, value))
    return DiagonalValue(family, r, s, PiValue.monomial(value, r * _pi_weight(s)), method, 0.0)


def _unit(backend: Backend):
    return 1.0 if backend == "numeric" else PiValue.one()


def _normalize_arg(s, backend: Backend):
    if backend == "numeric":
        return float(s)
    if isinstance(s, float) and s.is_integer():
        return int(s)
    return s


@lru_cache(maxsize=None)
def _closed_form_coefficients(r: int) -> tuple[tuple[bell.Partition, Fraction, int], ...]:
    # (partition, 1 / prod(j^c_j c_j!), number of parts)
    out = []
    for counts in bell.partitions_of(r):
        den = 1
        for j, c in enumerate(counts, 1):
            if c:
                den *= j**c * math.factorial(c)
        out.append((counts, Fraction(1, den), sum(counts)))
    return tuple(out)


def _depth_cap(backend: Backend) -> int:
    return NUMERIC_DEPTH_CAP if backend == "numeric" else EXACT_DEPTH_CAP


def diagonal_closed_form(family, r: int, s, backend: Backend = "numeric") -> DiagonalValue:
    """Signed partition sum of prod base(js)^c_j / (j^c_j c_j!)."""
    family = Family.parse(family)
    _check_depth(r, _depth_cap(backend))
    s = _normalize_arg(s, backend)
    if r == 0:
        return DiagonalValue(family, 0, s, _unit(backend), Method.CLOSED_FORM, 0.0)
    b = _working_base_values(family, r, s, backend)
    total = 0
    for counts, coeff, parts in _closed_form_coefficients(r):
        if not family.star and (r + parts) % 2:
            coeff = -coeff
        total = total + coeff * bell.monomial(b, counts)
    return _result(family, r, s, total, Method.CLOSED_FORM, backend)


def diagonal_bell_form(family, r: int, s, backend: Backend = "numeric") -> DiagonalValue:
    """Evaluate through the complete Bell polynomial Y_r."""
    family = Family.parse(family)
    _check_depth(r, _depth_cap(backend))
    s = _normalize_arg(s, backend)
    if r == 0:
        return DiagonalValue(family, 0, s, _unit(backend), Method.BELL_FORM, 0.0)
    b = _working_base_values(family, r, s, backend)
    sign = 1 if family.star else -1
    xs = [sign * math.factorial(j - 1) * b[j - 1] for j in range(1, r + 1)]
    y = bell.complete_bell(r, xs)
    prefactor = Fraction(sign**r, math.factorial(r))
    return _result(family, r, s, prefactor * y, Method.BELL_FORM, backend)


@lru_cache(maxsize=1024)
def _recurrence_table(family: Family, r: int, s, backend: Backend) -> tuple:
    b = _working_base_values(family, r, s, backend)
    values = [1]
    for n in range(1, r + 1):
        acc = 0
        for j in range(1, n + 1):
            term = values[n - j] * b[j - 1]
            if not family.star and j % 2 == 0:
                acc = acc - term
            else:
                acc = acc + term
        values.append(acc * Fraction(1, n))
    return tuple(values)


def diagonal_recurrence(family, r: int, s, backend: Backend = "numeric") -> DiagonalValue:
    """Bottom-up recurrence from depth 0 (memoized per family/argument)."""
    family = Family.parse(family)
    _check_depth(r, _depth_cap(backend))
    s = _normalize_arg(s, backend)
    if r == 0:
        return DiagonalValue(family, 0, s, _unit(backend), Method.RECURRENCE, 0.0)
    table = _recurrence_table(family, r, s, backend)
    return _result(family, r, s, table[r], Method.RECURRENCE, backend)


def _tail_sums(s: float, n: int, odd: bool) -> tuple[float, float, float]:
    """Estimate of sum_{m > n} x_m, its error, and an upper bound on sum x_m^2.

    x_m = m^-s, or (2m-1)^-s for the odd series.  The estimate is the
    integral plus the endpoint and first derivative corrections.
    """
    a, c = (2.0, -1.0) if odd else (1.0, 0.0)
    u = a * n + c
    integral = u ** (1 - s) / (a * (s - 1))
    f_n = u**-s
    fprime = -s * a * u ** (-s - 1)
    b2 = float(bernoulli(2)) / 2
    estimate = integral - f_n / 2 - b2 * fprime
    # size of the next correction, B_4/4! f'''(n), doubled
    f3 = s * (s + 1) * (s + 2) * a**3 * u ** (-s - 3)
    err = 2 * abs(float(bernoulli(4)) / 24 * f3)
    sq = u ** (1 - 2 * s) / (a * (2 * s - 1))
    return estimate, err, sq


def diagonal_oracle(family, r: int, s: float, config: OracleConfig | None = None) -> DiagonalValue:
    """Brute-force symmetric functions of the first N series terms.

    Non-star families use e_k <- e_k + x e_{k-1} (k descending), star
    families h_k <- h_k + x h_{k-1} (k ascending).
    """
    family = Family.parse(family)
    config = config or OracleConfig()
    _check_depth(r, ORACLE_DEPTH_CAP)
    s = float(s)
    if not s > 1:
        raise DivergenceError(f"series diverges for s = {s} <= 1")
    n_max = config.truncation
    if n_max < r:
        raise DomainError(f"truncation {n_max} is smaller than depth {r}")
    if r == 0:
        return DiagonalValue(family, 0, s, 1.0, Method.ORACLE, 0.0)

    acc = [1.0] + [0.0] * r
    step = 2 if family.odd else 1
    first = 1
    if family.star:
        for m in range(n_max):
            x = (first + step * m) ** -s
            for k in range(1, r + 1):
                acc[k] += x * acc[k - 1]
    else:
        for m in range(n_max):
            x = (first + step * m) ** -s
            for k in range(min(r, m + 1), 0, -1):
                acc[k] += x * acc[k - 1]

    tail, tail_err, tail_sq = _tail_sums(s, n_max, family.odd)
    rounding = 4 * n_max * r * math.ulp(1.0) * abs(acc[r])
    if not config.tail_correction:
        # each missing E_i(tail) is at most tail^i
        t_up = tail + tail_err
        bound = sum(acc[r - i] * t_up**i for i in range(1, r + 1)) + rounding
        return DiagonalValue(family, r, s, acc[r], Method.ORACLE, bound)

    # E_i(tail) ~ tail^i / i!; the difference is governed by the tail's p_2
    value = math.fsum(acc[r - i] * tail**i / math.factorial(i) for i in range(r + 1))
    bound = math.fsum(acc[r - i] * tail_sq * (1 + tail) ** i for i in range(2, r + 1))
    bound += math.fsum(acc[r - i] * tail_err * (1 + tail) ** (i - 1) for i in range(1, r + 1))
    bound = 2 * bound + rounding
    return DiagonalValue(family, r, s, value, Method.ORACLE, bound)
