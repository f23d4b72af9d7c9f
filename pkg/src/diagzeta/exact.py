"""Exact arithmetic layer.

Rationals are the stdlib :class:`fractions.Fraction`.  On top of that this
module provides the classical integer/rational sequences used throughout
(Bernoulli, Euler/secant, unsigned Stirling numbers of the first kind,
binomials) and :class:`PiValue`, an element of Q[pi^2] stored as a sparse
map from even pi-exponent to rational coefficient.
"""

from __future__ import annotations

import math
import re
import threading
from fractions import Fraction
from numbers import Rational

__all__ = [
    "Fraction",
    "PiValue",
    "bernoulli",
    "binomial",
    "euler_number",
    "factorial",
    "stirling1_unsigned",
]

factorial = math.factorial


def binomial(n: int, k: int) -> int:
    """C(n, k), zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be non-negative")
    return math.comb(n, k)


# Sequence tables grow on demand.  Appends happen under the lock; readers
# only index positions that are already filled, so a list is sufficient.
_lock = threading.Lock()
_bernoulli: list[Fraction] = [Fraction(1)]
_euler: list[int] = [1]
_stirling_rows: list[list[int]] = [[1]]


def bernoulli(n: int) -> Fraction:
    """B_n with the convention B_1 = -1/2.

    Filled from sum_{j=0}^{n} C(n+1, j) B_j = 0.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n < len(_bernoulli):
        return _bernoulli[n]
    with _lock:
        for m in range(len(_bernoulli), n + 1):
            if m > 1 and m % 2:
                _bernoulli.append(Fraction(0))
                continue
            acc = sum(math.comb(m + 1, j) * _bernoulli[j] for j in range(m))
            _bernoulli.append(-acc / (m + 1))
    return _bernoulli[n]


def euler_number(n: int) -> int:
    """Secant-convention Euler number: E_0 = 1, E_2 = -1, E_4 = 5, odd ones vanish."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n < len(_euler):
        return _euler[n]
    with _lock:
        for m in range(len(_euler), n + 1):
            if m % 2:
                _euler.append(0)
                continue
            # sum over even j <= m of C(m, j) E_j = 0
            acc = sum(math.comb(m, j) * _euler[j] for j in range(0, m, 2))
            _euler.append(-acc)
    return _euler[n]


def stirling1_unsigned(r: int, k: int) -> int:
    """|s(r, k)|: coefficient of x^k in x(x+1)...(x+r-1)."""
    if r < 0 or k < 0:
        raise ValueError("arguments must be non-negative")
    if k > r:
        return 0
    if r >= len(_stirling_rows):
        with _lock:
            for n in range(len(_stirling_rows), r + 1):
                prev = _stirling_rows[n - 1]
                row = [0] * (n + 1)
                # c(n, j) = (n-1) c(n-1, j) + c(n-1, j-1)
                for j in range(1, n + 1):
                    row[j] = prev[j - 1] + (n - 1) * (prev[j] if j < n else 0)
                _stirling_rows.append(row)
    return _stirling_rows[r][k]


def _as_fraction(x) -> Fraction | None:
    if isinstance(x, bool):
        return None
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    return None


class PiValue:
    """An element q_0 + q_1 pi^2 + q_2 pi^4 + ... of Q[pi^2].

    Instances are immutable.  ``terms`` maps the actual pi-exponent (always
    even and non-negative) to a non-zero :class:`Fraction`.  Plain ints and
    Fractions coerce to constants in every arithmetic operation, so a
    PiValue can be fed anywhere a commutative ring element is expected.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean: dict[int, Fraction] = {}
        for e, q in (terms or {}).items():
            e = int(e)
            if e < 0 or e % 2:
                raise ValueError(f"pi exponent must be even and non-negative, got {e}")
            q = _as_fraction(q)
            if q is None:
                raise TypeError("PiValue coefficients must be rational")
            if q:
                clean[e] = clean.get(e, Fraction(0)) + q
        self._terms = {e: clean[e] for e in sorted(clean) if clean[e]}
        self._hash = None

    @classmethod
    def constant(cls, q) -> PiValue:
        return cls({0: q})

    @classmethod
    def monomial(cls, coefficient, exponent: int) -> PiValue:
        return cls({exponent: coefficient})

    @classmethod
    def zero(cls) -> PiValue:
        return cls()

    @classmethod
    def one(cls) -> PiValue:
        return cls({0: 1})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def coefficient(self, exponent: int) -> Fraction:
        return self._terms.get(exponent, Fraction(0))

    def exponents(self) -> list[int]:
        return list(self._terms)

    def is_rational(self) -> bool:
        return all(e == 0 for e in self._terms)

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coefficient(0)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    # ring operations

    @staticmethod
    def _coerce(other) -> PiValue | None:
        if isinstance(other, PiValue):
            return other
        q = _as_fraction(other)
        if q is None:
            return None
        return PiValue.constant(q)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for e, q in o._terms.items():
            out[e] = out.get(e, Fraction(0)) + q
        return PiValue(out)

    __radd__ = __add__

    def __neg__(self):
        return PiValue({e: -q for e, q in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        q = _as_fraction(other)
        if q is not None:
            return PiValue({e: c * q for e, c in self._terms.items()})
        if not isinstance(other, PiValue):
            return NotImplemented
        out: dict[int, Fraction] = {}
        for e1, q1 in self._terms.items():
            for e2, q2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, Fraction(0)) + q1 * q2
        return PiValue(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        q = _as_fraction(other)
        if q is None:
            return NotImplemented
        if not q:
            raise ZeroDivisionError("PiValue division by zero")
        return self * (1 / q)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("PiValue powers must be non-negative integers")
        result = PiValue.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __float__(self):
        return math.fsum(float(q) * math.pi**e for e, q in self._terms.items())

    def __repr__(self):
        return f"PiValue({self})"

    def __str__(self):
        """Canonical form ``a/b * pi^e + ...`` in increasing exponent."""
        if not self._terms:
            return "0"
        pieces = []
        for i, (e, q) in enumerate(self._terms.items()):
            body = str(abs(q)) if e == 0 else f"{abs(q)} * pi^{e}"
            if i == 0:
                pieces.append(("-" if q < 0 else "") + body)
            else:
                pieces.append((" - " if q < 0 else " + ") + body)
        return "".join(pieces)

    _TERM = re.compile(r"^(-?\d+(?:/\d+)?)(?: \* pi\^(\d+))?$")

    @classmethod
    def parse(cls, text: str) -> PiValue:
        """Inverse of ``str``; accepts only the canonical grammar."""
        text = text.strip()
        if text == "0":
            return cls()
        chunks = re.split(r" ([+-]) ", text)
        signs = ["+"] + chunks[1::2]
        out: dict[int, Fraction] = {}
        for sign, chunk in zip(signs, chunks[0::2]):
            m = cls._TERM.match(chunk)
            if m is None:
                raise ValueError(f"not a canonical PiValue term: {chunk!r}")
            q = Fraction(m.group(1))
            e = int(m.group(2) or 0)
            out[e] = out.get(e, Fraction(0)) + (q if sign == "+" else -q)
        return cls(out)
