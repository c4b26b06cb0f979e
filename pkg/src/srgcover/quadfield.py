"""Exact numbers of the form ``(p + q*sqrt(delta)) / 2`` and multisets of them."""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import cmp_to_key, total_ordering
from math import isqrt
from typing import Iterable, Union

from .errors import DeltaMismatch

Rational = Union[int, Fraction]


def _norm(x: Rational) -> Rational:
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def _sign(x: Fraction, y: Fraction, delta: int) -> int:
    """Exact sign of ``x + y*sqrt(delta)``."""
    if y == 0 or delta == 0:
        return (x > 0) - (x < 0)
    if x == 0:
        return (y > 0) - (y < 0)
    if (x > 0) == (y > 0):
        return 1 if x > 0 else -1
    d = x * x - y * y * delta
    s = (d > 0) - (d < 0)
    return s if x > 0 else -s


@total_ordering
class QuadNum:
    """Element ``(p + q*sqrt(delta)) / 2`` of the field Q(sqrt(delta)).

    ``p`` and ``q`` are integers for every eigenvalue this package produces,
    but rationals are allowed so that the field is closed under division.
    When ``delta`` is a perfect square the value is rational and stored with
    ``q == 0``, which makes structural equality the same as numeric equality.
    """

    __slots__ = ("p", "q", "delta")

    def __init__(self, p: Rational, q: Rational = 0, delta: int = 1) -> None:
        if delta < 0:
            raise ValueError("delta must be nonnegative")
        p, q = Fraction(p), Fraction(q)
        if q and is_square(delta):
            p += q * isqrt(delta)
            q = Fraction(0)
        self.p = _norm(p)
        self.q = _norm(q)
        self.delta = int(delta)

    @classmethod
    def rational(cls, x: Rational, delta: int = 1) -> QuadNum:
        return cls(2 * Fraction(x), 0, delta)

    def _coerce(self, other: object) -> QuadNum:
        if isinstance(other, QuadNum):
            if other.delta != self.delta:
                raise DeltaMismatch(f"delta {self.delta} vs {other.delta}")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadNum.rational(other, self.delta)
        raise TypeError(f"cannot combine QuadNum with {type(other).__name__}")

    # arithmetic
    def __add__(self, other: QuadNum | Rational) -> QuadNum:
        o = self._coerce(other)
        return QuadNum(self.p + o.p, self.q + o.q, self.delta)

    __radd__ = __add__

    def __neg__(self) -> QuadNum:
        return QuadNum(-self.p, -self.q, self.delta)

    def __sub__(self, other: QuadNum | Rational) -> QuadNum:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Rational) -> QuadNum:
        return self._coerce(other) - self

    def __mul__(self, other: QuadNum | Rational) -> QuadNum:
        o = self._coerce(other)
        p = Fraction(self.p * o.p + self.q * o.q * self.delta, 2)
        q = Fraction(self.p * o.q + self.q * o.p, 2)
        return QuadNum(p, q, self.delta)

    __rmul__ = __mul__

    def __truediv__(self, other: QuadNum | Rational) -> QuadNum:
        o = self._coerce(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(delta))")
        num = self * o.conjugate()
        return QuadNum(Fraction(num.p) / n, Fraction(num.q) / n, self.delta)

    def __rtruediv__(self, other: Rational) -> QuadNum:
        return self._coerce(other) / self

    def __pow__(self, k: int) -> QuadNum:
        result = QuadNum.rational(1, self.delta)
        base = self
        if k < 0:
            base, k = 1 / base, -k
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> QuadNum:
        return QuadNum(self.p, -self.q, self.delta)

    def norm(self) -> Fraction:
        """``x * conj(x)``, always rational."""
        return Fraction(self.p * self.p - self.q * self.q * self.delta, 4)

    def trace(self) -> Fraction:
        """``x + conj(x)``, always rational."""
        return Fraction(self.p)

    # predicates
    def is_rational(self) -> bool:
        return self.q == 0

    def is_integer(self) -> bool:
        return self.q == 0 and Fraction(self.p, 2).denominator == 1

    def as_fraction(self) -> Fraction:
        if self.q:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.p, 2)

    def sign(self) -> int:
        return _sign(Fraction(self.p), Fraction(self.q), self.delta)

    def __bool__(self) -> bool:
        return self.p != 0 or self.q != 0

    def __float__(self) -> float:
        return (float(self.p) + float(self.q) * self.delta ** 0.5) / 2

    # comparison
    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.q == 0 and Fraction(self.p, 2) == other
        if not isinstance(other, QuadNum):
            return NotImplemented
        return (self.p, self.q, self.delta) == (other.p, other.q, other.delta)

    def __hash__(self) -> int:
        if self.q == 0:
            return hash(Fraction(self.p, 2))
        return hash((self.p, self.q, self.delta))

    def __lt__(self, other: QuadNum | Rational) -> bool:
        return (self - self._coerce(other)).sign() < 0

    # presentation
    def __repr__(self) -> str:
        return f"QuadNum({self.p!r}, {self.q!r}, {self.delta})"

    def __str__(self) -> str:
        if self.q == 0:
            return str(Fraction(self.p, 2))
        q = self.q
        sign = "+" if q > 0 else "-"
        mag = abs(q)
        qs = "" if mag == 1 else str(mag)
        return f"({self.p}{sign}{qs}√{self.delta})/2"

    def to_json(self) -> dict:
        if not (isinstance(self.p, int) and isinstance(self.q, int)):
            raise ValueError(f"{self!r} has non-integral coordinates")
        return {"p": self.p, "q": self.q}


def _desc(x: QuadNum, y: QuadNum) -> int:
    return (y - x).sign()


class Spectrum:
    """Multiset of eigenvalues in Q(sqrt(delta)), merged and sorted descending."""

    __slots__ = ("delta", "pairs")

    def __init__(self, delta: int, terms: Iterable[tuple[QuadNum | Rational, int]]) -> None:
        merged: dict[QuadNum, int] = defaultdict(int)
        for value, mult in terms:
            if not isinstance(value, QuadNum):
                value = QuadNum.rational(value, delta)
            elif value.delta != delta:
                raise DeltaMismatch(f"eigenvalue {value!r} not over delta {delta}")
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for {value}")
            merged[value] += mult
        keys = sorted((v for v, m in merged.items() if m > 0), key=cmp_to_key(_desc))
        self.delta = delta
        self.pairs: tuple[tuple[QuadNum, int], ...] = tuple((v, merged[v]) for v in keys)

    @property
    def eigenvalues(self) -> list[QuadNum]:
        return [v for v, _ in self.pairs]

    @property
    def multiplicities(self) -> list[int]:
        return [m for _, m in self.pairs]

    @property
    def order(self) -> int:
        return sum(self.multiplicities)

    def trace(self) -> QuadNum:
        return sum((v * m for v, m in self.pairs), QuadNum.rational(0, self.delta))

    def multiplicity(self, value: QuadNum | Rational) -> int:
        if not isinstance(value, QuadNum):
            value = QuadNum.rational(value, self.delta)
        return dict(self.pairs).get(value, 0)

    def is_integral(self) -> bool:
        return all(v.is_integer() for v, _ in self.pairs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Spectrum):
            return NotImplemented
        return self.delta == other.delta and self.pairs == other.pairs

    def __hash__(self) -> int:
        return hash((self.delta, self.pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __repr__(self) -> str:
        return f"Spectrum(delta={self.delta}, {self})"

    def __str__(self) -> str:
        def term(v: QuadNum, m: int) -> str:
            text = str(v)
            if v.q or v.sign() < 0 or "/" in text:
                text = f"({text})"
            return f"{text}^{m}"

        return "{" + ", ".join(term(v, m) for v, m in self.pairs) + "}"

    def to_json(self) -> dict:
        return {"delta": self.delta,
                "eigs": [dict(v.to_json(), mult=m) for v, m in self.pairs]}

    @classmethod
    def from_json(cls, data: dict) -> Spectrum:
        delta = int(data["delta"])
        return cls(delta, [(QuadNum(int(e["p"]), int(e["q"]), delta), int(e["mult"]))
                           for e in data["eigs"]])
