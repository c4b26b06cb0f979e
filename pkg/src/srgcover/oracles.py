"""Brute-force spectrum oracles for integer symmetric matrices.

Two independent checks establish that a claimed spectrum is exactly the
spectrum of a matrix ``M``:

* the product of ``(M - mu I)`` over the claimed distinct eigenvalues vanishes,
  so the support contains the minimal polynomial's roots;
* the multiplicities solve the Vandermonde system ``sum_j m_j mu_j**p =
  trace(M**p)`` for ``p = 0..r-1``.

Everything stays in exact integer / Q(sqrt(delta)) arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import NonIntegerFactor, NonIntegralSolution, OrderMismatch, SrgCoverError
from .matrix import IntMatrix, power_traces
from .quadfield import QuadNum, Spectrum


def annihilator_factors(m: IntMatrix, spectrum: Spectrum) -> list[IntMatrix] | None:
    """Integer matrix factors of the claimed annihilating polynomial.

    Conjugate pairs ``(p +- q sqrt(delta))/2`` fold into one quadratic factor
    ``M^2 - pM + norm*I``. Returns ``None`` when an irrational eigenvalue comes
    without its conjugate, which no rational matrix can have.
    """
    eigs = set(spectrum.eigenvalues)
    factors = []
    for mu in spectrum.eigenvalues:
        if mu.q == 0:
            r = Fraction(mu.p, 2)
            factors.append(m * r.denominator - IntMatrix.identity(m.order) * r.numerator)
            continue
        if mu.conjugate() not in eigs:
            return None
        if mu.q < 0:
            continue
        p, norm = mu.p, mu.norm()
        if not isinstance(p, int) or norm.denominator != 1:
            raise NonIntegerFactor(f"x^2 - ({p})x + ({norm}) for eigenvalue {mu}")
        factors.append((m @ m - m * p).shift(int(norm)))
    return factors


def annihilator_check(m: IntMatrix, spectrum: Spectrum) -> bool:
    if spectrum.order != m.order:
        raise OrderMismatch(f"spectrum order {spectrum.order} vs matrix order {m.order}")
    factors = annihilator_factors(m, spectrum)
    if not factors:
        return False
    product = factors[0]
    for f in factors[1:]:
        product = product @ f
    return product.is_zero()


def _solve(matrix: list[list[QuadNum]], rhs: list[QuadNum]) -> list[QuadNum]:
    n = len(rhs)
    a = [row[:] + [b] for row, b in zip(matrix, rhs)]
    for c in range(n):
        piv = next(i for i in range(c, n) if a[i][c])
        a[c], a[piv] = a[piv], a[c]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [a[i][n] / a[i][i] for i in range(n)]


def multiplicity_solve(m: IntMatrix, eigenvalues: Sequence[QuadNum]) -> list[int]:
    """Recover multiplicities of ``eigenvalues`` from power traces of ``m``."""
    eigs = list(eigenvalues)
    if not eigs:
        raise ValueError("empty eigenvalue list")
    if len(set(eigs)) != len(eigs):
        raise ValueError("eigenvalues must be pairwise distinct")
    delta = eigs[0].delta
    r = len(eigs)
    traces = power_traces(m, r)
    vander = [[mu ** p for mu in eigs] for p in range(r)]
    rhs = [QuadNum.rational(t, delta) for t in traces]
    sol = _solve(vander, rhs)
    mults = []
    for mu, x in zip(eigs, sol):
        if not x.is_integer() or x.as_fraction() < 0:
            raise NonIntegralSolution(f"multiplicity of {mu} solves to {x}")
        mults.append(int(x.as_fraction()))
    if sum(mults) != m.order:
        raise NonIntegralSolution(f"multiplicities sum to {sum(mults)}, not {m.order}")
    return mults


def check_spectrum(m: IntMatrix, spectrum: Spectrum) -> tuple[bool, bool]:
    """Run both oracles; returns ``(annihilator_ok, multiplicities_ok)``.

    Oracle errors caused by a malformed claim count as failures.
    """
    try:
        ann = annihilator_check(m, spectrum)
    except SrgCoverError:
        ann = False
    try:
        mults = multiplicity_solve(m, spectrum.eigenvalues)
        mult_ok = mults == spectrum.multiplicities
    except SrgCoverError:
        mult_ok = False
    return ann, mult_ok
