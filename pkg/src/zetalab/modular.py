"""Level-one q-expansions over the rationals: Eisenstein series, the
discriminant and the j-invariant.

The index ``k`` follows the convention ``E_k = 1 - (4k/B_2k) sum sigma_(2k-1)(n) q^n``,
so ``E_2`` here is the classical weight-4 series; ``EisensteinSeries.weight``
returns ``2k``.

Normalisation.  With ``c_k = 2 zeta(2k) E_k``, ``g_2 = 60 c_2`` and
``g_3 = 140 c_3`` one gets ``g_2 = (4 pi^4 / 3) E_2`` and
``g_3 = (8 pi^6 / 27) E_3``, hence

    g_2^3 - 27 g_3^2 = (64 pi^12 / 27) (E_2^3 - E_3^2)
                     = (2 pi)^12 (E_2^3 - E_3^2) / 1728,

and ``j = 1728 g_2^3 / (g_2^3 - 27 g_3^2) = E_2^3 / Delta`` with
``Delta = (E_2^3 - E_3^2) / 1728``.  All powers of pi cancel, which keeps
the whole module exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bernoulli import bernoulli_number
from .errors import InvalidInput, InvalidWeight
from .exactnum import TruncatedSeries, series_inverse, series_mul
from .zetavalues import PiPower, zeta_even


def divisor_sigma(k: int, n: int) -> int:
    """``sum_{d | n} d^k``."""
    if n < 1 or k < 0:
        raise InvalidInput("divisor_sigma needs n >= 1 and k >= 0")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**k
            e = n // d
            if e != d:
                total += e**k
        d += 1
    return total


@dataclass(frozen=True)
class EisensteinSeries:
    k: int
    series: TruncatedSeries

    @property
    def weight(self) -> int:
        return 2 * self.k

    def __getitem__(self, n: int) -> Fraction:
        return self.series[n]


def eisenstein_factor(k: int) -> Fraction:
    """``-4k / B_2k``, the common factor of every ``q^n`` coefficient."""
    return Fraction(-4 * k) / bernoulli_number(2 * k)


def eisenstein_series(k: int, order: int) -> EisensteinSeries:
    if k < 2:
        raise InvalidWeight("Eisenstein series need k >= 2")
    if order < 1:
        raise InvalidInput("order must be >= 1")
    c = eisenstein_factor(k)
    coeffs = [Fraction(1)] + [c * divisor_sigma(2 * k - 1, n) for n in range(1, order)]
    return EisensteinSeries(k, TruncatedSeries.from_list(coeffs))


def eisenstein_prefactor(k: int) -> PiPower:
    """``2 zeta(2k)``, so that ``c_k = prefactor * E_k``."""
    if k < 2:
        raise InvalidWeight("Eisenstein series need k >= 2")
    return zeta_even(2 * k) * 2


def discriminant_series(order: int) -> TruncatedSeries:
    """``(E_2^3 - E_3^2)/1728 = q - 24 q^2 + 252 q^3 - ...`` up to ``O(q^order)``."""
    if order < 2:
        raise InvalidInput("order must be >= 2")
    e4 = eisenstein_series(2, order).series
    e6 = eisenstein_series(3, order).series
    cube = series_mul(series_mul(e4, e4), e4)
    square = series_mul(e6, e6)
    return (cube - square).scale(Fraction(1, 1728)).normalized()


def j_series(order: int) -> TruncatedSeries:
    """``E_2^3 / Delta = 1/q + 744 + 196884 q + ...`` up to ``O(q^order)``."""
    if order < 1:
        raise InvalidInput("order must be >= 1")
    e4 = eisenstein_series(2, order + 1).series
    cube = series_mul(series_mul(e4, e4), e4)
    delta = discriminant_series(order + 2)
    return series_mul(cube, series_inverse(delta)).truncate(order)
