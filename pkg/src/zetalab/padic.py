"""p-adic numbers with tracked precision, Teichmueller lifts, Bernoulli
distributions on p-adic intervals, and the p-adic interpolation of zeta
and Dirichlet L-values.

A nonzero :class:`PAdic` is ``p^valuation * unit`` with ``unit`` known
modulo ``p^precision``; the value is therefore known modulo
``p^(valuation + precision)``.  A zero carries ``valuation=None`` and its
``precision`` field is the *absolute* precision: the value is known to be
``0 mod p^precision``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .bernoulli import bernoulli_number, bernoulli_polynomial, generalized_bernoulli
from .characters import DirichletCharacter, char_mul, is_prime, primitive_root
from .errors import InvalidBranch, InvalidInput, PoleError, PrecisionError, UnsupportedCharacter
from .exactnum import CyclotomicNumber, as_fraction

# Largest interpolation index evaluated through the exact Bernoulli number;
# beyond it a Riemann sum of the regularised Bernoulli measure is used.
EXACT_INDEX_LIMIT = 600


def valuation(x, p: int) -> int | None:
    """``v_p`` of an integer or rational; ``None`` for zero."""
    x = as_fraction(x)
    if x == 0:
        return None
    v = 0
    n, d = x.numerator, x.denominator
    while n % p == 0:
        n //= p
        v += 1
    while d % p == 0:
        d //= p
        v -= 1
    return v


def _check_prime(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise InvalidInput(f"p must be an odd prime, got {p}")


@dataclass(frozen=True)
class PAdic:
    prime: int
    valuation: int | None
    unit: int
    precision: int

    def __post_init__(self):
        p = self.prime
        if self.valuation is None:
            object.__setattr__(self, "unit", 0)
            return
        if self.precision < 1:
            raise InvalidInput("relative precision must be >= 1 for a nonzero p-adic")
        u = self.unit % p**self.precision
        if u % p == 0:
            raise InvalidInput("unit part must be coprime to p")
        object.__setattr__(self, "unit", u)

    # -- construction -----------------------------------------------------

    @classmethod
    def zero(cls, p: int, absolute_precision: int) -> PAdic:
        return cls(p, None, 0, absolute_precision)

    @classmethod
    def from_rational(cls, r, p: int, precision: int) -> PAdic:
        """Embed ``r`` keeping ``precision`` digits after the valuation."""
        r = as_fraction(r)
        v = valuation(r, p)
        if v is None:
            return cls.zero(p, precision)
        mod = p**precision
        num = r.numerator // p ** max(v, 0)
        den = r.denominator // p ** max(-v, 0)
        return cls(p, v, num * pow(den, -1, mod) % mod, precision)

    @classmethod
    def with_absolute_precision(cls, r, p: int, absolute: int) -> PAdic:
        """Embed ``r`` as known modulo ``p^absolute``."""
        r = as_fraction(r)
        v = valuation(r, p)
        if v is None or v >= absolute:
            return cls.zero(p, absolute)
        return cls.from_rational(r, p, absolute - v)

    # -- accessors --------------------------------------------------------

    def is_zero(self) -> bool:
        return self.valuation is None

    @property
    def absolute_precision(self) -> int:
        if self.valuation is None:
            return self.precision
        return self.valuation + self.precision

    def digits(self) -> list[int]:
        """Little-endian base-p digits of the unit part."""
        if self.valuation is None:
            return []
        out, u = [], self.unit
        for _ in range(self.precision):
            u, d = divmod(u, self.prime)
            out.append(d)
        return out

    def lift(self) -> Fraction:
        """Canonical rational representative ``p^v * unit``."""
        if self.valuation is None:
            return Fraction(0)
        return Fraction(self.prime) ** self.valuation * self.unit

    def residue(self, absolute: int) -> Fraction:
        """Representative reduced modulo ``p^absolute`` (denominator a power of p)."""
        if absolute > self.absolute_precision:
            raise PrecisionError("value is not known to the requested precision")
        if self.valuation is None or self.valuation >= absolute:
            return Fraction(0)
        keep = absolute - self.valuation
        return Fraction(self.prime) ** self.valuation * (self.unit % self.prime**keep)

    def congruent(self, other, absolute: int) -> bool:
        """Whether the two values agree modulo ``p^absolute``."""
        if not isinstance(other, PAdic):
            other = PAdic.with_absolute_precision(other, self.prime, absolute)
        diff = as_fraction(self.residue(absolute)) - as_fraction(other.residue(absolute))
        v = valuation(diff, self.prime)
        return v is None or v >= absolute

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> PAdic:
        if isinstance(other, PAdic):
            if other.prime != self.prime:
                raise InvalidInput("cannot combine p-adics of different primes")
            return other
        # exact rationals carry unlimited precision; match ours
        return PAdic.from_rational(other, self.prime, max(self.precision, 1) + 64)

    def __add__(self, other):
        other = self._coerce(other)
        absolute = min(self.absolute_precision, other.absolute_precision)
        total = self.residue(absolute) + other.residue(absolute)
        return PAdic.with_absolute_precision(total, self.prime, absolute)

    __radd__ = __add__

    def __neg__(self):
        if self.valuation is None:
            return self
        return PAdic(self.prime, self.valuation, -self.unit, self.precision)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if self.valuation is None or other.valuation is None:
            # 0 * x: known modulo p^(abs(zero) + v(x)) at best
            if self.valuation is None and other.valuation is None:
                return PAdic.zero(self.prime, self.precision + other.precision)
            z, x = (self, other) if self.valuation is None else (other, self)
            return PAdic.zero(self.prime, z.precision + x.valuation)
        prec = min(self.precision, other.precision)
        return PAdic(
            self.prime, self.valuation + other.valuation, self.unit * other.unit, prec
        )

    __rmul__ = __mul__

    def inverse(self) -> PAdic:
        if self.valuation is None:
            raise ZeroDivisionError("p-adic zero has no inverse")
        mod = self.prime**self.precision
        return PAdic(self.prime, -self.valuation, pow(self.unit, -1, mod), self.precision)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        if self.valuation is None:
            return self if n else PAdic.from_rational(1, self.prime, self.precision)
        mod = self.prime**self.precision
        return PAdic(self.prime, self.valuation * n, pow(self.unit, n, mod), self.precision)

    def __eq__(self, other):
        if isinstance(other, PAdic):
            return (
                self.prime == other.prime
                and self.valuation == other.valuation
                and self.unit == other.unit
                and self.precision == other.precision
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.prime, self.valuation, self.unit, self.precision))

    # -- presentation -----------------------------------------------------

    def __str__(self) -> str:
        p = self.prime
        mod = f"(mod {p}^{self.absolute_precision})"
        if self.valuation is None:
            return f"0 {mod}"
        digits = [str(d) for d in reversed(self.digits())]
        sep = "" if p <= 10 else " "
        v = self.valuation
        if v >= 0:
            body = sep.join(digits + ["0"] * v)
        else:
            cut = len(digits) + v
            if cut > 0:
                body = sep.join(digits[:cut]) + "." + sep.join(digits[cut:])
            else:
                body = "0." + sep.join(["0"] * (-cut) + digits)
        return f"...{body} {mod}"

    def to_json(self) -> dict:
        return {
            "p": self.prime,
            "valuation": self.valuation,
            "digits": self.digits(),
            "precision": self.precision,
        }

    @classmethod
    def from_json(cls, data: dict) -> PAdic:
        p = int(data["p"])
        unit = sum(d * p**i for i, d in enumerate(data["digits"]))
        v = data["valuation"]
        return cls(p, None if v is None else int(v), unit, int(data["precision"]))


def padic_embed(r, p: int, N: int) -> PAdic:
    _check_prime(p)
    if N < 1:
        raise InvalidInput("precision must be >= 1")
    return PAdic.from_rational(r, p, N)


# ---------------------------------------------------------------------------
# Teichmueller


def teichmuller_int(c: int, p: int, N: int) -> int:
    """Integer in ``[0, p^N)`` congruent to the Teichmueller lift of ``c``.

    The sequence ``c, c^p, c^(p^2), ...`` is stationary modulo ``p^k``
    from the ``(k-1)``-st term on, so ``N - 1`` p-th powerings suffice.
    """
    mod = p**N
    x = c % mod
    for _ in range(max(N - 1, 0)):
        x = pow(x, p, mod)
    return x


def teichmuller(c: int, p: int, N: int) -> PAdic:
    _check_prime(p)
    if c % p == 0:
        raise InvalidInput(f"{p} divides {c}; the Teichmueller lift is only defined on units")
    if N < 1:
        raise InvalidInput("precision must be >= 1")
    return PAdic(p, 0, teichmuller_int(c, p, N), N)


def teichmuller_character(p: int) -> DirichletCharacter:
    """``omega`` as a character mod ``p`` of order ``p - 1``.

    Its abstract generator ``zeta_(p-1)`` corresponds to ``omega(g)`` for
    ``g`` the least primitive root mod ``p``; :func:`embed_cyclotomic`
    uses the same identification.
    """
    _check_prime(p)
    g = primitive_root(p)
    vals: list[int | None] = [None] * p
    x = 1
    for k in range(p - 1):
        vals[x] = k
        x = x * g % p
    return DirichletCharacter(p, p - 1, tuple(vals))


def embed_cyclotomic(z: CyclotomicNumber, p: int, absolute: int) -> PAdic:
    """Image of ``z`` in Q_p, known modulo ``p^absolute``.

    ``zeta_n`` maps to ``omega(g)^((p-1)/n)``; ``n`` must divide ``p - 1``.
    Working precision is raised by the most negative coefficient valuation
    so the result is certified to the requested absolute precision.
    """
    n = z.level
    if (p - 1) % n:
        raise UnsupportedCharacter(f"Q(zeta_{n}) does not embed in Q_{p}")
    vals = [valuation(c, p) for c in z.coefficients if c]
    if not vals:
        return PAdic.zero(p, absolute)
    work = absolute - min(min(vals), 0) + 1
    mod = p**work
    root = pow(teichmuller_int(primitive_root(p), p, work), (p - 1) // n, mod)
    total = Fraction(0)
    power = 1
    for c in z.coefficients:
        if c:
            total += c * power
        power = power * root % mod
    return PAdic.with_absolute_precision(total, p, absolute)


# ---------------------------------------------------------------------------
# Bernoulli distributions


@dataclass(frozen=True)
class PAdicInterval:
    """The disk ``alpha + p^N Z_p`` with ``0 <= alpha < p^N``."""

    prime: int
    alpha: int
    N: int

    def __post_init__(self):
        _check_prime(self.prime)
        if self.N < 0 or not 0 <= self.alpha < self.prime**self.N:
            raise InvalidInput("need N >= 0 and 0 <= alpha <= p^N - 1")

    def children(self) -> list[PAdicInterval]:
        step = self.prime**self.N
        return [PAdicInterval(self.prime, self.alpha + j * step, self.N + 1) for j in range(self.prime)]


def bernoulli_distribution(m: int, interval: PAdicInterval) -> Fraction:
    """``p^(N(m-1)) B_m(alpha / p^N)``."""
    if m < 0:
        raise InvalidInput("m must be nonnegative")
    p, a, N = interval.prime, interval.alpha, interval.N
    return Fraction(p) ** (N * (m - 1)) * bernoulli_polynomial(m)(Fraction(a, p**N))


def distribution_additivity_check(m: int, interval: PAdicInterval) -> bool:
    whole = bernoulli_distribution(m, interval)
    return whole == sum(bernoulli_distribution(m, c) for c in interval.children())


# ---------------------------------------------------------------------------
# p-adic zeta


def branches(p: int) -> list[int]:
    """The admissible branches ``0, 2, ..., p - 3``."""
    _check_prime(p)
    return list(range(0, p - 2, 2))


def kummer_value_padic(p: int, m: int, absolute: int) -> PAdic:
    """``(1 - p^(m-1)) B_m / m`` modulo ``p^absolute`` for even ``m >= 2``.

    Small ``m`` use the exact Bernoulli number.  Otherwise, with ``alpha``
    a primitive root mod ``p^2`` and ``K = absolute + v_p(alpha^m - 1)``,

        (alpha - alpha^(1-m)) (1 - p^(m-1)) B_m / m
            == sum_{0<a<p^K, p∤a} a^(m-1) floor(alpha a / p^K)   (mod p^K),

    a Riemann sum of the regularised first Bernoulli measure.
    """
    if m <= EXACT_INDEX_LIMIT:
        value = (1 - Fraction(p) ** (m - 1)) * bernoulli_number(m) / m
        return PAdic.with_absolute_precision(value, p, absolute)
    return _kummer_value_riemann(p, m, absolute)


def _kummer_value_riemann(p: int, m: int, absolute: int) -> PAdic:
    alpha = primitive_root(p, square=True)
    vm = valuation(m, p)
    probe = p ** (vm + 3)
    d = valuation(pow(alpha, m, probe) - 1, p)  # 0, or 1 + v_p(m) when p-1 | m
    K = absolute + d
    mod = p**K
    period = (p - 1) * p ** (K - 1)
    e = (m - 1) % period
    total = 0
    for a in range(1, mod):
        if a % p:
            fl = alpha * a // mod
            if fl:
                total += pow(a, e, mod) * fl
    total %= mod
    # divide by alpha^(1-m) (alpha^m - 1) = alpha^(1-m) p^d u
    am = pow(alpha, m, mod * p**d)
    u = ((am - 1) // p**d) % mod
    scaled = total * pow(alpha, e, mod) % mod * pow(u, -1, mod) % mod
    return PAdic.with_absolute_precision(Fraction(scaled, p**d), p, absolute)


def _integer_input(s, p: int) -> tuple[int, int | None]:
    """Representative of ``s`` and its absolute precision (``None`` = exact)."""
    if isinstance(s, int):
        return s, None
    if isinstance(s, PAdic):
        if s.prime != p:
            raise InvalidInput("s lives in a different p-adic field")
        if s.valuation is not None and s.valuation < 0:
            raise InvalidInput("s must be a p-adic integer")
        return int(s.residue(s.absolute_precision)), s.absolute_precision
    raise InvalidInput("s must be an int or a PAdic")


def interpolation_index(p: int, a: int, s, N: int) -> int:
    """Least even ``m >= 2`` with ``m = a mod p-1``, ``m = 1-s mod p^N``; bumped
    past multiples of ``p`` when the residue class allows it."""
    s_int, _ = _integer_input(s, p)
    period = (p - 1) * p**N
    target = (1 - s_int) % p**N
    m = next(m for m in range(a, a + period, p - 1) if (m - target) % p**N == 0)
    if m < 2:
        m += period
    if N == 0:
        while m % p == 0:
            m += period
    return m


def padic_zeta(p: int, a: int, s, N: int) -> PAdic:
    """Value of the branch ``zeta_{p,a}`` at ``s``, certified modulo ``p^(N+1)``.

    The branch interpolates ``-(1 - p^(m-1)) B_m / m`` at ``s = 1 - m`` for
    even ``m = a (mod p-1)``.  For ``a > 0`` any such ``m`` with
    ``m = 1 - s (mod p^N)`` gives the answer modulo ``p^(N+1)``.  The branch
    ``a = 0`` has a simple pole at ``s = 1`` and the congruence between
    interpolation points loses ``2 + 2 v_p(1 - s)`` digits there, so the
    index is chosen modulo that many more powers of ``p``.
    """
    _check_prime(p)
    if a % 2 or not 0 <= a <= p - 3:
        raise InvalidBranch(f"branch must be even and in [0, {p - 3}], got {a}")
    if N < 0:
        raise InvalidInput("N must be nonnegative")
    s_int, s_prec = _integer_input(s, p)
    if a == 0:
        if s_prec is None and s_int == 1:
            raise PoleError("zeta_{p,0} has a simple pole at s = 1")
        t = valuation(1 - s_int, p)
        if t is None or (s_prec is not None and t >= s_prec):
            raise PrecisionError("s is indistinguishable from the pole at s = 1")
        guard = 2 + 2 * t
    else:
        guard = 0
    K = N + guard
    if s_prec is not None and s_prec < K:
        N -= K - s_prec
        if N < 0:
            raise PrecisionError("s is not known to enough p-adic digits")
        K = s_prec
    m = interpolation_index(p, a, s_int, K)
    return -kummer_value_padic(p, m, N + 1)


# ---------------------------------------------------------------------------
# p-adic L


def twisted_character(chi: DirichletCharacter, p: int, n: int) -> DirichletCharacter:
    """``chi * omega^(-n)`` as a character modulo ``lcm(modulus, p)``."""
    return char_mul(chi, teichmuller_character(p) ** (-n))


def padic_L(p: int, chi: DirichletCharacter, n: int, N: int) -> PAdic:
    """``L_p(1-n, chi) = -(1 - eta(p) p^(n-1)) B_{n,eta} / n`` with ``eta = chi omega^(-n)``.

    ``eta`` is kept at modulus ``lcm(modulus, p)``, so ``eta(p) = 0`` and the
    Euler factor at ``p`` is carried by the imprimitive Bernoulli number
    itself.  Character values are mapped into Z_p through the Teichmueller
    lift; the result is certified modulo ``p^(N+1)``.
    """
    _check_prime(p)
    if n < 1:
        raise InvalidInput("n must be >= 1")
    if N < 0:
        raise InvalidInput("N must be nonnegative")
    if (p - 1) % chi.order:
        raise UnsupportedCharacter(f"values of order {chi.order} do not embed in Z_{p}")
    eta = twisted_character(chi, p, n)
    bn = generalized_bernoulli(n, eta)
    absolute = N + 1
    extra = valuation(n, p)
    value = embed_cyclotomic(bn, p, absolute + extra)
    if value.is_zero():
        return PAdic.zero(p, absolute)
    result = value * PAdic.from_rational(Fraction(-1, n), p, value.precision + extra)
    return PAdic.with_absolute_precision(result.residue(absolute), p, absolute)


def principal_teichmuller_power(p: int, a: int) -> DirichletCharacter:
    """``omega^a`` mod ``p``; ``L_p(s, omega^a)`` is the branch ``zeta_{p,a}``."""
    return teichmuller_character(p) ** a


__all__ = [
    "PAdic",
    "PAdicInterval",
    "valuation",
    "padic_embed",
    "teichmuller",
    "teichmuller_character",
    "embed_cyclotomic",
    "bernoulli_distribution",
    "distribution_additivity_check",
    "branches",
    "kummer_value_padic",
    "interpolation_index",
    "padic_zeta",
    "padic_L",
    "twisted_character",
    "principal_teichmuller_power",
    "EXACT_INDEX_LIMIT",
]
