"""Square matrices over the integers with exact (arbitrary precision) arithmetic.

Entries are plain Python ``int`` so nothing ever overflows; this matters for
power traces such as ``trace(D**6)`` of a 100x100 distance matrix.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from operator import mul
from typing import Iterable, Sequence

from .errors import OrderMismatch


class IntMatrix:
    """Immutable square integer matrix."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[int]]) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(rows)
        if n == 0:
            raise ValueError("matrix order must be positive")
        for row in rows:
            if len(row) != n:
                raise ValueError("matrix must be square")
        self._rows = rows

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int) -> IntMatrix:
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def ones(cls, n: int) -> IntMatrix:
        return cls([[1] * n for _ in range(n)])

    @classmethod
    def blocks(cls, top_left: IntMatrix, top_right: IntMatrix,
               bottom_left: IntMatrix, bottom_right: IntMatrix) -> IntMatrix:
        """Assemble the 2x2 block matrix ``[[TL, TR], [BL, BR]]``."""
        n = top_left.order
        for b in (top_right, bottom_left, bottom_right):
            if b.order != n:
                raise OrderMismatch(f"block orders differ: {n} vs {b.order}")
        rows = [tl + tr for tl, tr in zip(top_left.rows, top_right.rows)]
        rows += [bl + br for bl, br in zip(bottom_left.rows, bottom_right.rows)]
        return cls(rows)

    @property
    def order(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return self._rows[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(order={self.order})"

    def _check(self, other: IntMatrix) -> None:
        if self.order != other.order:
            raise OrderMismatch(f"orders differ: {self.order} vs {other.order}")

    def __add__(self, other: IntMatrix) -> IntMatrix:
        self._check(other)
        return IntMatrix([[x + y for x, y in zip(r, s)] for r, s in zip(self._rows, other._rows)])

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        self._check(other)
        return IntMatrix([[x - y for x, y in zip(r, s)] for r, s in zip(self._rows, other._rows)])

    def __neg__(self) -> IntMatrix:
        return IntMatrix([[-x for x in r] for r in self._rows])

    def __mul__(self, k: int) -> IntMatrix:
        if not isinstance(k, int):
            return NotImplemented
        return IntMatrix([[k * x for x in r] for r in self._rows])

    __rmul__ = __mul__

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        return mat_mul(self, other)

    def transpose(self) -> IntMatrix:
        return IntMatrix(zip(*self._rows))

    def is_symmetric(self) -> bool:
        return all(self._rows[i][j] == self._rows[j][i]
                   for i in range(self.order) for j in range(i))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._rows)

    def trace(self) -> int:
        return mat_trace(self)

    def shift(self, k: int) -> IntMatrix:
        """Return ``self + k*I``."""
        rows = [list(r) for r in self._rows]
        for i in range(self.order):
            rows[i][i] += k
        return IntMatrix(rows)

    def apply(self, vec: Sequence) -> list:
        """Matrix-vector product; works for int or Fraction vectors."""
        if len(vec) != self.order:
            raise OrderMismatch(f"vector length {len(vec)} vs order {self.order}")
        return [sum(map(mul, r, vec)) for r in self._rows]


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.order != b.order:
        raise OrderMismatch(f"orders differ: {a.order} vs {b.order}")
    cols = tuple(zip(*b.rows))
    return IntMatrix([[sum(map(mul, r, c)) for c in cols] for r in a.rows])


def mat_trace(a: IntMatrix) -> int:
    return sum(a.rows[i][i] for i in range(a.order))


def power_traces(m: IntMatrix, count: int) -> list[int]:
    """``[trace(M**0), ..., trace(M**(count-1))]`` via one sequential power chain."""
    traces = []
    power = IntMatrix.identity(m.order)
    for p in range(count):
        if p:
            power = power @ m
        traces.append(power.trace())
    return traces


def rational_kernel_basis(m: IntMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right null space of ``m`` over the rationals.

    Exact Gauss-Jordan elimination; one basis vector per free column, with a 1
    in that column. An empty list means the kernel is trivial.
    """
    n = m.order
    rows = [[Fraction(x) for x in r] for r in m.rows]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break

    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        basis.append(tuple(v))
    return basis


def integer_vector(vec: Sequence[Fraction]) -> list[int]:
    """Scale a rational vector by the lcm of its denominators."""
    den = 1
    for x in vec:
        den = lcm(den, Fraction(x).denominator)
    return [int(Fraction(x) * den) for x in vec]
