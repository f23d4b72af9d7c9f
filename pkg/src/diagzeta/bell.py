"""Partitions and Bell polynomials over an arbitrary commutative ring.

A partition of r is represented by its multiplicity vector
``(c_1, ..., c_r)`` with ``sum(i * c_i) == r``.  The evaluators only need
``+``, ``*``, integer powers and multiplication by an int/Fraction from the
ring elements they receive, so Fractions, floats, :class:`PiValue` and
sympy expressions all work unchanged.
"""

from __future__ import annotations

import math
from collections.abc import Iterator, Sequence
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "DEFAULT_SERIES_N_MAX",
    "bell_coefficient",
    "complete_bell",
    "complete_bell_series_check",
    "exp_series_coefficients",
    "monomial",
    "partial_bell",
    "partitions_of",
]

DEFAULT_SERIES_N_MAX = 20

Partition = tuple[int, ...]


def _generate(r: int) -> Iterator[Partition]:
    # c_1 runs from its maximum downwards, then c_2, ...: the multiplicity
    # vectors come out in decreasing lexicographic order.
    def fill(i: int, remaining: int) -> Iterator[Partition]:
        if i == r:
            if remaining % r == 0:
                yield (remaining // r,)
            return
        for c in range(remaining // i, -1, -1):
            for rest in fill(i + 1, remaining - i * c):
                yield (c,) + rest

    if r == 0:
        yield ()
    else:
        yield from fill(1, r)


@lru_cache(maxsize=None)
def _partitions(r: int) -> tuple[Partition, ...]:
    return tuple(_generate(r))


def partitions_of(r: int) -> Iterator[Partition]:
    """Yield every multiplicity vector (c_1..c_r) with sum(i*c_i) = r once.

    Order is reverse-lexicographic on the vector, so for r = 3 the output is
    (3,0,0), (1,1,0), (0,0,1).  r = 0 yields the empty partition.
    """
    if r < 0:
        raise ValueError("r must be non-negative")
    return iter(_partitions(r))


def _parts(counts: Partition) -> int:
    return sum(counts)


@lru_cache(maxsize=None)
def bell_coefficient(counts: Partition) -> int:
    """n! / prod((i!)^c_i * c_i!) for the partition of n given by counts."""
    n = sum(i * c for i, c in enumerate(counts, 1))
    den = 1
    for i, c in enumerate(counts, 1):
        if c:
            den *= math.factorial(i) ** c * math.factorial(c)
    q, rem = divmod(math.factorial(n), den)
    assert rem == 0, f"non-integral Bell coefficient for {counts}"
    return q


def monomial(xs: Sequence, counts: Partition):
    """prod x_i^c_i (1 for the empty partition)."""
    prod = 1
    for i, c in enumerate(counts):
        if c:
            prod = prod * xs[i] ** c
    return prod


def partial_bell(n: int, k: int, xs: Sequence):
    """Partial Bell polynomial B_{n,k} evaluated at xs = (x_1, x_2, ...)."""
    if k < 0 or n < 0:
        raise ValueError("n and k must be non-negative")
    if k > n:
        raise ValueError(f"partial_bell requires k <= n, got n={n}, k={k}")
    if n == 0:
        return 1
    if len(xs) < n - k + 1:
        raise ValueError(f"need at least {n - k + 1} inputs, got {len(xs)}")
    total = 0
    for counts in _partitions(n):
        if _parts(counts) != k:
            continue
        # parts larger than n-k+1 never occur when there are k of them
        total = total + bell_coefficient(counts) * monomial(xs, counts)
    return total


def complete_bell(n: int, xs: Sequence):
    """Complete Bell polynomial Y_n(x_1..x_n), with Y_0 = 1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return 1
    if len(xs) < n:
        raise ValueError(f"need at least {n} inputs, got {len(xs)}")
    total = 0
    for counts in _partitions(n):
        total = total + bell_coefficient(counts) * monomial(xs, counts)
    return total


def exp_series_coefficients(xs: Sequence, n_max: int) -> list:
    """Coefficients n! [t^n] exp(sum_m x_m t^m / m!) for n = 0..n_max.

    Uses the power-series recurrence g_n = (1/n) sum_m m f_m g_{n-m} for
    g = exp(f), so it shares no code with the partition sums.
    """
    if len(xs) < n_max:
        raise ValueError(f"need at least {n_max} inputs, got {len(xs)}")
    f = [Fraction(0)] + [Fraction(1, math.factorial(m)) * xs[m - 1] for m in range(1, n_max + 1)]
    g = [1]
    for n in range(1, n_max + 1):
        acc = 0
        for m in range(1, n + 1):
            acc = acc + m * f[m] * g[n - m]
        g.append(Fraction(1, n) * acc)
    return [math.factorial(n) * g[n] for n in range(n_max + 1)]


def complete_bell_series_check(n_max: int, xs: Sequence, *, limit: int = DEFAULT_SERIES_N_MAX) -> bool:
    """True iff complete_bell(n, xs) matches the exp-series coefficient for all n <= n_max."""
    if n_max > limit:
        raise ValueError(f"n_max={n_max} exceeds the configured limit {limit}")
    coeffs = exp_series_coefficients(xs, n_max)
    return all(coeffs[n] == complete_bell(n, xs) for n in range(n_max + 1))
