"""Multiple zeta values and their cyclotomic twists by direct nested summation.

Summation convention: ``zeta(x_1, ..., x_p) = sum_{0 < n_1 < ... < n_p}
prod n_i^(-x_i)``, so the *last* exponent governs convergence.

Truncation keeps ``n_p <= M``.  The nested sum is evaluated with prefix
sums: ``S_j(n) = sum_{k <= n} k^(-x_j) eps_j^k S_{j-1}(k-1)``, which costs
``O(p M)``.

Tail bounds.  With ``U_j(n)`` an upper bound for the depth-``j`` inner
sum over ``n_1 < ... < n_j < n``, we use ``U_j(n) <= C_j (1 + ln n)^L_j``
where ``C_j`` is the product of ``x/(x-1)`` over exponents ``x >= 2`` and
``L_j`` counts exponents equal to 1.  The tail ``sum_{n > M}`` is then
bounded by the integral of ``(1 + ln x)^L x^(-s)``, which has a closed
form through the incomplete gamma function.  When the final exponent is
1 (only allowed with a nontrivial twist) Abel summation is used instead.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DivergentIndex, InvalidInput
from .zetavalues import polylog_with_bound, zeta_even

_EPS = float(np.finfo(float).eps)


@dataclass(frozen=True)
class MZVIndex:
    exponents: tuple[int, ...]
    twists: tuple[int, ...] | None = None
    level: int = 1

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(x) for x in self.exponents))
        if not self.exponents or any(x < 1 for x in self.exponents):
            raise InvalidInput("exponents must be a nonempty list of positive integers")
        if self.level < 1:
            raise InvalidInput("level must be positive")
        if self.twists is not None:
            tw = tuple(int(e) % self.level for e in self.twists)
            if len(tw) != len(self.exponents):
                raise InvalidInput("need one twist per exponent")
            object.__setattr__(self, "twists", tw)
        if self.exponents[-1] == 1 and self.last_twist == 0:
            raise DivergentIndex("the last exponent is 1 with trivial twist; the series diverges")

    @classmethod
    def parse(cls, text: str, twists: str | None = None, level: int = 1) -> MZVIndex:
        try:
            xs = tuple(int(t) for t in text.split(","))
            tw = None if twists is None else tuple(int(t) for t in twists.split(","))
        except ValueError as exc:
            raise InvalidInput(f"cannot parse index {text!r}") from exc
        return cls(xs, tw, level)

    @property
    def last_twist(self) -> int:
        return 0 if self.twists is None else self.twists[-1]

    @property
    def weight(self) -> int:
        return sum(self.exponents)

    @property
    def depth(self) -> int:
        return len(self.exponents)

    def is_untwisted(self) -> bool:
        return self.twists is None or not any(self.twists)


def _log_power_tail(M: int, s: float, L: int) -> float:
    """Upper bound for ``sum_{n > M} (1 + ln n)^L n^(-s)``, ``s > 1``."""
    # the summand decreases once ln x >= L/s - 1; sum the bumpy start explicitly
    start = max(M, math.ceil(math.exp(max(L / s - 1, 0.0))))
    head = sum((1 + math.log(n)) ** L * n**-s for n in range(M + 1, start + 1))
    y = (s - 1) * (1 + math.log(start))
    # int_start^inf = start^(1-s) * L! / (s-1)^(L+1) * sum_{k<=L} y^k / k!
    poly = sum(y**k / math.factorial(k) for k in range(L + 1))
    return head + start ** (1 - s) * math.factorial(L) / (s - 1) ** (L + 1) * poly


def _inner_constants(exponents) -> tuple[float, int]:
    c, ones = 1.0, 0
    for x in exponents:
        if x == 1:
            ones += 1
        else:
            c *= x / (x - 1)
    return c, ones


def tail_bound(index: MZVIndex, M: int) -> float:
    xs = index.exponents
    xp = xs[-1]
    c, ones = _inner_constants(xs[:-1])
    if xp >= 2:
        return c * _log_power_tail(M, xp, ones)
    # last exponent 1, twisted: Abel summation against a(n) = S(n-1)/n
    eps_p = complex(np.exp(2j * np.pi * index.last_twist / index.level))
    abel = 2 / abs(1 - eps_p)
    first = c * (1 + math.log(M + 1)) ** ones / (M + 1)
    variation = c * _log_power_tail(M, 2, ones)
    if len(xs) > 1:
        c2, ones2 = _inner_constants(xs[:-2])
        variation += c2 * _log_power_tail(M, xs[-2] + 1, ones2)
    return abel * (first + variation)


def _nested(index: MZVIndex, M: int):
    n = np.arange(1, M + 1, dtype=np.float64)
    twisted = not index.is_untwisted()
    if twisted:
        k = np.arange(1, M + 1, dtype=np.int64)
        acc = np.ones(M, dtype=np.complex128)
    else:
        acc = np.ones(M, dtype=np.float64)
    prev = None
    for j, x in enumerate(index.exponents):
        term = n**-x
        if twisted and index.twists[j]:
            roots = np.exp(2j * np.pi * np.arange(index.level) / index.level)
            term = term * roots[(k * index.twists[j]) % index.level]
        if prev is not None:
            # strictly increasing: multiply by the previous level's sum over k < n
            shifted = np.concatenate(([0], prev[:-1]))
            term = term * shifted
        prev = np.cumsum(term)
    return prev[-1]


def _check_truncation(index: MZVIndex, M: int) -> None:
    if M < index.depth:
        raise InvalidInput("truncation bound must be at least the depth")


def mzv(index: MZVIndex | tuple | str, M: int = 100_000) -> tuple[float, float]:
    """Truncated value and tail bound of an untwisted multiple zeta value."""
    if isinstance(index, str):
        index = MZVIndex.parse(index)
    elif not isinstance(index, MZVIndex):
        index = MZVIndex(tuple(index))
    if not index.is_untwisted():
        raise InvalidInput("twisted index; use cyclotomic_mzv")
    _check_truncation(index, M)
    value = float(_nested(index, M))
    bound = tail_bound(index, M) + 4 * index.depth * M * _EPS * max(1.0, abs(value))
    return value, bound


def cyclotomic_mzv(index: MZVIndex, M: int = 100_000) -> tuple[complex, float]:
    """Truncated value and tail bound of an MZV twisted by ``level``-th roots of unity."""
    _check_truncation(index, M)
    if index.is_untwisted():
        value, bound = mzv(MZVIndex(index.exponents), M)
        return complex(value), bound
    value = complex(_nested(index, M))
    bound = tail_bound(index, M) + 4 * index.depth * M * _EPS * max(1.0, abs(value))
    return value, bound


def truncation_for(index: MZVIndex, tol: float) -> int:
    """Smallest power-of-two-ish ``M`` whose tail bound is below ``tol``."""
    M = 1024
    while tail_bound(index, M) > tol:
        M *= 2
        if M > 50_000_000:
            raise InvalidInput(f"tolerance {tol} needs an impractically large truncation")
    return M


def single_zeta(s: int, tol: float) -> tuple[float, float]:
    """``zeta(s)`` for ``s >= 2``: exact for even ``s``, series otherwise."""
    if s % 2 == 0:
        return float(zeta_even(s)), 4 * _EPS
    value, bound = polylog_with_bound(s, 1.0, tol)
    return value.real, bound


def stuffle_defect(a: int, b: int, tol: float = 1e-6) -> tuple[float, float]:
    """``zeta(a) zeta(b) - zeta(a,b) - zeta(b,a) - zeta(a+b)`` and its error bound."""
    if a < 2 or b < 2:
        raise InvalidInput("stuffle_check needs a, b >= 2")
    part = tol / 8
    za, ea = single_zeta(a, part)
    zb, eb = single_zeta(b, part)
    zab, eab = single_zeta(a + b, part)
    i1, i2 = MZVIndex((a, b)), MZVIndex((b, a))
    d1, e1 = mzv(i1, truncation_for(i1, part))
    d2, e2 = mzv(i2, truncation_for(i2, part))
    defect = za * zb - d1 - d2 - zab
    err = ea * (zb + eb) + eb * za + e1 + e2 + eab
    return defect, err


def stuffle_check(a: int, b: int, tol: float = 1e-6) -> bool:
    defect, _ = stuffle_defect(a, b, tol)
    return abs(defect) < tol


# ---------------------------------------------------------------------------


def _gauss_legendre_panels(f, upper: float, panels: int, nodes: int = 20) -> float:
    x, w = np.polynomial.legendre.leggauss(nodes)
    edges = np.linspace(0.0, upper, panels + 1)
    a, b = edges[:-1, None], edges[1:, None]
    pts = (b - a) / 2 * x[None, :] + (a + b) / 2
    return float(np.sum((b - a) / 2 * w[None, :] * f(pts)))


def zeta2_via_iterated_integral(tol: float = 1e-10) -> float:
    """``zeta(2)`` from the iterated integral over ``0 < t2 < t1 < 1`` of
    ``dt1/t1 * dt2/(1 - t2)``.

    Integrating out ``t2`` leaves ``int_0^1 -log(1-t)/t dt``; the
    substitution ``t = 1 - exp(-u)`` removes the logarithmic endpoint
    singularity and gives ``int_0^inf u/(e^u - 1) du``.  The half-line is
    cut at ``U`` where the neglected tail ``<= (U+1) e^-U / (1 - e^-U)``
    drops below ``tol/2``; ``[0, U]`` is integrated by composite
    Gauss-Legendre with unit-width panels, which is accurate to rounding.
    """
    if tol <= 0:
        raise InvalidInput("tol must be positive")
    U = 1.0
    while (U + 1) * math.exp(-U) / (1 - math.exp(-U)) > tol / 2:
        U += 1.0

    def f(u):
        return u / np.expm1(u)

    return _gauss_legendre_panels(f, U, int(U) * 2)


__all__ = [
    "MZVIndex",
    "mzv",
    "cyclotomic_mzv",
    "stuffle_check",
    "stuffle_defect",
    "tail_bound",
    "truncation_for",
    "zeta2_via_iterated_integral",
]
