"""Special values of zeta and Dirichlet L-series.

Polylogarithms and the analytic class number formula for imaginary
quadratic fields live here too.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bernoulli import bernoulli_number
from .characters import DirichletCharacter, is_fundamental_discriminant, kronecker_character
from .errors import InvalidDiscriminant, InvalidInput, PrecisionError
from .exactnum import format_rational, parse_rational

_EPS = np.finfo(float).eps
_MAX_TERMS = 200_000_000
_CHUNK = 1 << 20


@dataclass(frozen=True)
class PiPower:
    """Exact ``coefficient * pi**pi_exponent``."""

    coefficient: Fraction
    pi_exponent: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coefficient", Fraction(self.coefficient))
        if self.pi_exponent < 0:
            raise InvalidInput("pi exponent must be nonnegative")

    def __float__(self) -> float:
        return float(self.coefficient) * math.pi**self.pi_exponent

    def __mul__(self, other):
        if isinstance(other, PiPower):
            return PiPower(self.coefficient * other.coefficient, self.pi_exponent + other.pi_exponent)
        if isinstance(other, (int, Fraction)):
            return PiPower(self.coefficient * other, self.pi_exponent)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        c = format_rational(self.coefficient)
        if self.pi_exponent == 0 or self.coefficient == 0:
            return c
        return f"{c} * pi^{self.pi_exponent}"

    def to_json(self) -> dict:
        return {"coefficient": format_rational(self.coefficient), "piExponent": self.pi_exponent}

    @classmethod
    def from_json(cls, data: dict) -> PiPower:
        return cls(parse_rational(data["coefficient"]), int(data["piExponent"]))


def zeta_even(two_m: int) -> PiPower:
    """Euler's ``zeta(2m) = (-1)^(m-1) (2 pi)^(2m) B_2m / (2 (2m)!)``."""
    if two_m < 2 or two_m % 2:
        raise InvalidInput("zeta_even needs an even argument >= 2")
    m = two_m // 2
    coeff = (-1) ** (m - 1) * Fraction(2**two_m, 2 * math.factorial(two_m)) * bernoulli_number(two_m)
    return PiPower(coeff, two_m)


def zeta_negative(n: int) -> Fraction:
    """``zeta(-n) = -B_(n+1)/(n+1)``."""
    if n < 1:
        raise InvalidInput("zeta_negative needs n >= 1")
    return -bernoulli_number(n + 1) / (n + 1)


# ---------------------------------------------------------------------------
# polylogarithm


def rounding_bound(n_terms: int, abs_sum: float) -> float:
    """Floating error of a pairwise (numpy) sum of ``n_terms`` terms whose
    magnitudes add to ``abs_sum``, each term computed to a few ulps."""
    return 2 * (math.log2(max(n_terms, 2)) + 16) * _EPS * abs_sum


def _chunked_sum(term, start: int, stop: int) -> complex:
    """Sum ``term(n)`` for integer ``n`` in ``[start, stop)`` in numpy chunks."""
    total = 0j
    for lo in range(start, stop, _CHUNK):
        n = np.arange(lo, min(lo + _CHUNK, stop), dtype=np.float64)
        total += complex(np.sum(term(n)))
    return total


def polylog_with_bound(m: int, z: complex, tol: float = 1e-10) -> tuple[complex, float]:
    """``Li_m(z) = sum_{n>=1} z^n / n^m`` together with a rigorous tail bound."""
    if m < 1:
        raise InvalidInput("polylog order must be >= 1")
    if tol <= 0:
        raise InvalidInput("tol must be positive")
    z = complex(z)
    r = abs(z)
    if r == 0:
        return 0j, 0.0
    if r > 1 + 1e-15:
        raise InvalidInput("polylog series diverges for |z| > 1")
    if abs(r - 1) <= 1e-15:
        if abs(z - 1) <= 1e-15:
            if m == 1:
                raise InvalidInput("Li_1 diverges at z = 1")
            # bracket the tail between integrals, report the midpoint
            M = _search(lambda M: (M ** (1 - m) - (M + 1) ** (1 - m)) / (2 * (m - 1)) <= tol / 2)
            head = _chunked_sum(lambda n: n**-m, 1, M + 1).real
            hi = M ** (1 - m) / (m - 1)
            lo = (M + 1) ** (1 - m) / (m - 1)
            value = complex(head + (hi + lo) / 2)
            bound = (hi - lo) / 2
        else:
            theta = cmath.phase(z)
            M, diffs, bound = _abel_plan(m, z, tol / 2)
            head = _chunked_sum(lambda n: np.exp(1j * theta * n) * n**-m, 1, M + 1)
            value = head + _abel_tail(z, M + 1, diffs)
            # phases theta*n carry a relative rounding error of about n*eps
            bound += _EPS * abs(theta) * M * (1 + math.log(M))
    else:
        M = _search(lambda M: r ** (M + 1) / ((M + 1) ** m * (1 - r)) <= tol / 2)
        logz = cmath.log(z)
        value = _chunked_sum(lambda n: np.exp(logz * n) * n**-m, 1, M + 1)
        bound = r ** (M + 1) / ((M + 1) ** m * (1 - r))
        bound += _EPS * abs(logz) * M * (1 + math.log(M))
    if m == 1:
        abs_sum = 1 + math.log(M)
    else:
        abs_sum = m / (m - 1)
    if r < 1 - 1e-15:
        abs_sum = min(abs_sum, r / (1 - r))
    bound += rounding_bound(M, abs_sum)
    return value, bound


_ABEL_TERMS = 30


def _backward_differences(m: int, N: int, k: int) -> list[Fraction]:
    """Exact ``nabla^j f (N + j)`` for ``f(n) = n^-m`` and ``j < k``."""
    f = {n: Fraction(1, n**m) for n in range(N, N + k)}
    out = []
    for j in range(k):
        n = N + j
        out.append(sum((-1) ** i * math.comb(j, i) * f[n - i] for i in range(j + 1)))
    return out


def _abel_plan(m: int, z: complex, target: float) -> tuple[int, list[Fraction], float]:
    """Pick ``M`` and an expansion length for the tail ``sum_{n > M} z^n n^-m``.

    Summing by parts ``k`` times against ``z^n = (z^n - z^(n+1))/(1 - z)``
    gives, with ``N = M + 1`` and ``nabla f(n) = f(n) - f(n-1)``,

        tail = sum_{j<k} z^(N+j) nabla^j f(N+j) / (1-z)^(j+1) + R_k,

    and complete monotonicity of ``n^-m`` telescopes the remainder to
    ``|R_k| <= |nabla^(k-1) f(N+k-1)| / |1-z|^k``.
    """
    w = abs(1 - z)
    M = 16
    while M <= _MAX_TERMS:
        diffs = _backward_differences(m, M + 1, _ABEL_TERMS)
        for k in range(1, _ABEL_TERMS + 1):
            rem = float(abs(diffs[k - 1])) / w**k
            if rem <= target:
                return M, diffs[:k], rem
        M *= 2
    raise PrecisionError("requested tolerance needs too many terms")


def _abel_tail(z: complex, N: int, diffs: list[Fraction]) -> complex:
    total = 0j
    zn = z**N
    for j, d in enumerate(diffs):
        total += zn * float(d) / (1 - z) ** (j + 1)
        zn *= z
    return total


def _search(ok) -> int:
    """Smallest ``M`` (up to doubling granularity, then bisection) with ``ok(M)``."""
    hi = 16
    while not ok(hi):
        hi *= 2
        if hi > _MAX_TERMS:
            raise PrecisionError("requested tolerance needs too many terms")
    lo = hi // 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if ok(mid):
            hi = mid
        else:
            lo = mid
    return hi


def polylog(m: int, z: complex, tol: float = 1e-10) -> complex:
    value, bound = polylog_with_bound(m, z, tol)
    if bound > tol:
        raise PrecisionError(f"could not reach tolerance {tol} (bound {bound})")
    return value


# ---------------------------------------------------------------------------
# Dirichlet L-series


def _falling(s: float, j: int) -> float:
    """``(-s)(-s-1)...(-s-j+1)``, the coefficient in the j-th derivative of x^-s."""
    out = 1.0
    for i in range(j):
        out *= -s - i
    return out


def dirichlet_L_with_bound(chi: DirichletCharacter, s: float, tol: float = 1e-10) -> tuple[complex, float]:
    """``L(s, chi)`` for real ``s`` with a rigorous error bound.

    The series is summed in whole periods ``km + r`` (``0 <= k < K``).  The
    remaining tail of each residue class is replaced by its Euler-Maclaurin
    expansion through the ``f'''`` term; the remainder of that expansion
    is at most ``|f'''(K)| / 720`` per class.  For ``s <= 1`` the divergent
    integral terms cancel across classes because a nonprincipal character
    sums to zero over a period.
    """
    if tol <= 0:
        raise InvalidInput("tol must be positive")
    m = chi.modulus
    if s <= 0:
        raise InvalidInput("only s > 0 is supported")
    if chi.is_principal() and s <= 1:
        raise InvalidInput("L(s, chi) has a pole at s = 1 for principal chi")
    residues = [r for r in range(1, m + 1) if chi(r) is not None]
    weights = np.array([chi.value(r) for r in residues])
    rs = np.array(residues, dtype=np.float64)
    d3 = abs(_falling(s, 3)) * m**3

    def remainder(K):
        return float(np.sum(d3 * (K * m + rs) ** (-s - 3))) / 720

    K = 8
    while remainder(K) > tol / 4:
        K *= 2
        if K * m > _MAX_TERMS:
            raise PrecisionError("requested tolerance needs too many terms")

    head = 0j
    block = max(1, _CHUNK // max(m, 1))
    for k0 in range(0, K, block):
        k = np.arange(k0, min(k0 + block, K), dtype=np.float64)[:, None]
        head += complex(np.sum(weights[None, :] * (k * m + rs[None, :]) ** (-s)))

    x = K * m + rs
    if s == 1:
        integral = -np.sum(weights * np.log(x)) / m
    else:
        integral = np.sum(weights * x ** (1 - s)) / (m * (s - 1))
    f0 = x ** (-s)
    f1 = _falling(s, 1) * m * x ** (-s - 1)
    f3 = _falling(s, 3) * m**3 * x ** (-s - 3)
    tail = integral + np.sum(weights * (f0 / 2 - f1 / 12 + f3 / 720))
    value = head + complex(tail)
    n_terms = K * m
    abs_sum = 1 + math.log(n_terms) if s <= 1 else s / (s - 1)
    bound = remainder(K) + rounding_bound(n_terms, abs_sum)
    return value, bound


def dirichlet_L(chi: DirichletCharacter, s: float, tol: float = 1e-10) -> complex:
    value, bound = dirichlet_L_with_bound(chi, s, tol)
    if bound > tol:
        raise PrecisionError(f"could not reach tolerance {tol} (bound {bound})")
    return value


def roots_of_unity_count(d: int) -> int:
    if d == -4:
        return 4
    if d == -3:
        return 6
    return 2


def class_number_estimate(d: int, tol: float = 1e-10) -> float:
    """``w sqrt|D| L(1, chi_D) / (2 pi)`` before rounding."""
    if d >= 0 or not is_fundamental_discriminant(d):
        raise InvalidDiscriminant(f"{d} is not a negative fundamental discriminant")
    L = dirichlet_L(kronecker_character(d), 1.0, tol).real
    return roots_of_unity_count(d) * math.sqrt(-d) * L / (2 * math.pi)


def class_number(d: int, tol: float = 1e-10) -> int:
    """Class number of Q(sqrt d) from ``L(1, chi) = 2 pi h / (w sqrt|D|)``."""
    est = class_number_estimate(d, tol)
    h = round(est)
    if abs(est - h) >= 0.01 or h < 1:
        raise PrecisionError(f"class number estimate {est} is not within 0.01 of an integer")
    return h
