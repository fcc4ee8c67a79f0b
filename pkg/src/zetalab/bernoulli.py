"""Bernoulli numbers and polynomials, character-twisted Bernoulli numbers,
and verifiers for the Voronoi and Kummer congruences.

Convention: ``B_1 = -1/2`` (generating function ``t/(e^t - 1)``).
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from .characters import DirichletCharacter, is_prime
from .errors import InvalidInput
from .exactnum import CyclotomicNumber, Polynomial, cyclo_reduce

_table: list[Fraction] = [Fraction(1), Fraction(-1, 2)]
_lock = threading.Lock()


def bernoulli_number(m: int) -> Fraction:
    if m < 0:
        raise InvalidInput("Bernoulli index must be nonnegative")
    if m < len(_table):
        return _table[m]
    with _lock:
        # sum_{j=0}^{k} C(k+1, j) B_j = 0, odd B_j (j > 1) vanish
        for k in range(len(_table), m + 1):
            if k % 2:
                _table.append(Fraction(0))
                continue
            acc = Fraction(1) - Fraction(k + 1, 2)
            for j in range(2, k, 2):
                acc += comb(k + 1, j) * _table[j]
            _table.append(-acc / (k + 1))
        return _table[m]


def bernoulli_polynomial(m: int) -> Polynomial:
    """``B_m(x) = sum_k C(m, k) B_k x^(m-k)``."""
    if m < 0:
        raise InvalidInput("Bernoulli index must be nonnegative")
    coeffs = [Fraction(0)] * (m + 1)
    for k in range(m + 1):
        coeffs[m - k] = comb(m, k) * bernoulli_number(k)
    return Polynomial(tuple(coeffs))


@dataclass(frozen=True)
class CongruenceReport:
    modulus: int
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {"modulus": self.modulus, "lhs": self.lhs, "rhs": self.rhs, "holds": self.holds}

    @classmethod
    def from_json(cls, data: dict) -> CongruenceReport:
        report = cls(int(data["modulus"]), int(data["lhs"]), int(data["rhs"]))
        if "holds" in data and bool(data["holds"]) != report.holds:
            raise InvalidInput("inconsistent 'holds' flag")
        return report


def voronoi_check(a: int, N: int, m: int) -> CongruenceReport:
    """Both sides of Voronoi's congruence for ``B_2m = P/Q`` modulo ``N``.

    ``(a^2m - 1) P  ==  2m a^(2m-1) Q sum_{s=1}^{N-1} s^(2m-1) floor(s a / N)``.
    ``a`` is first reduced to its representative in ``[1, N-1]``.
    """
    if N < 2 or m < 1:
        raise InvalidInput("need N >= 2 and m >= 1")
    if gcd(a, N) != 1:
        raise InvalidInput(f"gcd({a}, {N}) != 1")
    a %= N
    b = bernoulli_number(2 * m)
    P, Q = b.numerator, b.denominator
    e = 2 * m - 1
    lhs = (pow(a, 2 * m, N) - 1) * P % N
    total = 0
    for s in range(1, N):
        fl = s * a // N
        if fl:
            total += pow(s, e, N) * fl
    rhs = 2 * m * pow(a, e, N) * Q * total % N
    return CongruenceReport(N, lhs, rhs)


def _residue(x: Fraction, modulus: int) -> int:
    return x.numerator * pow(x.denominator, -1, modulus) % modulus


def kummer_value(p: int, m: int) -> Fraction:
    """``(1 - p^(m-1)) B_m / m``."""
    return (1 - Fraction(p) ** (m - 1)) * bernoulli_number(m) / m


def kummer_check(p: int, m: int, n: int, N: int) -> CongruenceReport:
    """Compare ``(1-p^(m-1))B_m/m`` and ``(1-p^(n-1))B_n/n`` modulo ``p^(N+1)``."""
    problems = []
    if not is_prime(p) or p < 3:
        problems.append("p must be a prime >= 3")
    if N < 0:
        problems.append("N must be nonnegative")
    for name, k in (("m", m), ("n", n)):
        if k < 2 or k % 2:
            problems.append(f"{name} must be an even positive integer")
        elif p >= 3:
            if k % (p - 1) == 0:
                problems.append(f"p-1 divides {name}")
            if k % p == 0:
                problems.append(f"p divides {name}")
    if not problems and (m - n) % ((p - 1) * p**N):
        problems.append("m and n are not congruent modulo (p-1)p^N")
    if problems:
        raise InvalidInput("; ".join(problems))
    mod = p ** (N + 1)
    return CongruenceReport(mod, _residue(kummer_value(p, m), mod), _residue(kummer_value(p, n), mod))


def generalized_bernoulli(n: int, chi: DirichletCharacter) -> CyclotomicNumber:
    """``B_{n,chi} = f^(n-1) sum_{r=1}^{f} chi(r) B_n(r/f)`` with ``f`` the modulus.

    The value lives in Q(zeta_order).  Rational sums are grouped by the
    exponent of ``chi(r)`` before the single cyclotomic reduction.
    """
    if n < 1:
        raise InvalidInput("n must be >= 1")
    f = chi.modulus
    poly = bernoulli_polynomial(n)
    buckets = [Fraction(0)] * chi.order
    for r in range(1, f + 1):
        e = chi(r)
        if e is not None:
            buckets[e] += poly(Fraction(r, f))
    scale = Fraction(f) ** (n - 1)
    return cyclo_reduce(chi.order, Polynomial(tuple(scale * c for c in buckets)))
