"""Exact polynomials and truncated q-series over Q, plus cyclotomic numbers.

``Fraction`` from the standard library is the rational type used
everywhere; it already keeps numerator and denominator coprime with a
positive denominator.  This module adds the containers built on top of
it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from .errors import InvalidInput

Rational = Fraction


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def format_rational(x: Fraction) -> str:
    """Render as ``num/den`` in base 10, dropping a unit denominator."""
    return str(Fraction(x))


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    try:
        num, _, den = text.partition("/")
        if den:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInput(f"not a rational number: {text!r}") from exc


# ---------------------------------------------------------------------------
# Polynomials


def _strip(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class Polynomial:
    """Dense univariate polynomial; ``coefficients[i]`` multiplies ``x**i``."""

    coefficients: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "coefficients", _strip(as_fraction(c) for c in self.coefficients)
        )

    @classmethod
    def x(cls) -> Polynomial:
        return cls((Fraction(0), Fraction(1)))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return Fraction(0)

    def __call__(self, x):
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coefficients), len(other.coefficients))
        return Polynomial(tuple(self[i] + other[i] for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def divmod(self, divisor: Polynomial) -> tuple[Polynomial, Polynomial]:
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coefficients)
        lead = divisor.coefficients[-1]
        dd = divisor.degree
        quot = [Fraction(0)] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c:
                c = c / lead
                quot[i - dd] = c
                for j, d in enumerate(divisor.coefficients):
                    rem[i - dd + j] -= c * d
        return Polynomial(tuple(quot)), Polynomial(tuple(rem[:dd]))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coefficients]

    @classmethod
    def from_json(cls, data: Iterable[str]) -> Polynomial:
        return cls(tuple(parse_rational(c) for c in data))


def _as_poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    return Polynomial((as_fraction(x),))


# ---------------------------------------------------------------------------
# Truncated Laurent series in q


@dataclass(frozen=True)
class TruncatedSeries:
    """``sum c_i q^(leading_exponent + i) + O(q^truncation_order)``.

    Coefficients are stored densely for every exponent in
    ``[leading_exponent, truncation_order)``; nothing is claimed at or
    beyond the truncation order.
    """

    leading_exponent: int
    coefficients: tuple[Fraction, ...]
    truncation_order: int

    def __post_init__(self):
        coeffs = tuple(as_fraction(c) for c in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if self.truncation_order - self.leading_exponent != len(coeffs):
            raise InvalidInput(
                "coefficient count must equal truncation_order - leading_exponent"
            )

    @classmethod
    def from_list(cls, coeffs: Sequence, leading_exponent: int = 0) -> TruncatedSeries:
        return cls(leading_exponent, tuple(coeffs), leading_exponent + len(coeffs))

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls.from_list([1] + [0] * (order - 1))

    def __getitem__(self, n: int) -> Fraction:
        if n >= self.truncation_order:
            raise IndexError(f"coefficient of q^{n} lies beyond O(q^{self.truncation_order})")
        if n < self.leading_exponent:
            return Fraction(0)
        return self.coefficients[n - self.leading_exponent]

    def exponents(self) -> range:
        return range(self.leading_exponent, self.truncation_order)

    def items(self):
        return zip(self.exponents(), self.coefficients)

    def normalized(self) -> TruncatedSeries:
        """Drop leading zero coefficients so the first stored one is nonzero."""
        k = 0
        while k < len(self.coefficients) and self.coefficients[k] == 0:
            k += 1
        return TruncatedSeries(
            self.leading_exponent + k, self.coefficients[k:], self.truncation_order
        )

    def truncate(self, order: int) -> TruncatedSeries:
        order = min(order, self.truncation_order)
        if order < self.leading_exponent:
            return TruncatedSeries(order, (), order)
        return TruncatedSeries(
            self.leading_exponent,
            self.coefficients[: order - self.leading_exponent],
            order,
        )

    def shift(self, k: int) -> TruncatedSeries:
        """Multiply by ``q**k``."""
        return TruncatedSeries(
            self.leading_exponent + k, self.coefficients, self.truncation_order + k
        )

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        lo = min(self.leading_exponent, other.leading_exponent)
        hi = min(self.truncation_order, other.truncation_order)
        if hi < lo:
            return TruncatedSeries(hi, (), hi)
        return TruncatedSeries(
            lo, tuple(self[n] + other[n] for n in range(lo, hi)), hi
        )

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(
            self.leading_exponent, tuple(-c for c in self.coefficients), self.truncation_order
        )

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self + (-other)

    def scale(self, c) -> TruncatedSeries:
        c = as_fraction(c)
        return TruncatedSeries(
            self.leading_exponent, tuple(c * x for x in self.coefficients), self.truncation_order
        )

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> TruncatedSeries:
        if n < 0:
            return series_inverse(self) ** (-n)
        result = TruncatedSeries.one(self.truncation_order - self.leading_exponent)
        for _ in range(n):
            result = series_mul(result, self)
        return result

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    def __str__(self) -> str:
        terms = []
        for n, c in self.items():
            if c == 0:
                continue
            mono = "" if n == 0 else ("q" if n == 1 else f"q^{n}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}" + (f"*{mono}" if mono else "")
            terms.append(("-" if c < 0 else "+", body))
        big_o = f"O(q^{self.truncation_order})"
        if not terms:
            return big_o
        text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return f"{text} + {big_o}"

    def to_json(self) -> dict:
        return {
            "leadingExponent": self.leading_exponent,
            "coefficients": [format_rational(c) for c in self.coefficients],
            "truncationOrder": self.truncation_order,
        }

    @classmethod
    def from_json(cls, data: dict) -> TruncatedSeries:
        coeffs = tuple(parse_rational(c) for c in data["coefficients"])
        lead = int(data["leadingExponent"])
        order = int(data.get("truncationOrder", lead + len(coeffs)))
        return cls(lead, coeffs, order)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Exact product; the error term is the larger of ``O(a)*b`` and ``a*O(b)``."""
    lead = a.leading_exponent + b.leading_exponent
    order = min(
        a.truncation_order + b.leading_exponent, b.truncation_order + a.leading_exponent
    )
    size = max(order - lead, 0)
    out = [Fraction(0)] * size
    ac, bc = a.coefficients, b.coefficients
    for i, x in enumerate(ac):
        if i >= size:
            break
        if not x:
            continue
        for j in range(min(len(bc), size - i)):
            y = bc[j]
            if y:
                out[i + j] += x * y
    return TruncatedSeries(lead, tuple(out), lead + size)


def series_inverse(a: TruncatedSeries) -> TruncatedSeries:
    if not a.coefficients or a.coefficients[0] == 0:
        raise InvalidInput("series inverse needs a nonzero coefficient at the leading exponent")
    u = a.coefficients
    inv_u0 = 1 / u[0]
    out = [inv_u0]
    for k in range(1, len(u)):
        acc = Fraction(0)
        for i in range(1, k + 1):
            if u[i]:
                acc += u[i] * out[k - i]
        out.append(-acc * inv_u0)
    lead = -a.leading_exponent
    return TruncatedSeries(lead, tuple(out), lead + len(u))


# ---------------------------------------------------------------------------
# Cyclotomic fields


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients (constant term first) of the n-th cyclotomic polynomial.

    Obtained by dividing ``x**n - 1`` by every ``Phi_d`` with ``d | n``, ``d < n``.
    """
    if n < 1:
        raise InvalidInput("cyclotomic level must be >= 1")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _exact_int_div(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _exact_int_div(num: list[int], den: Sequence[int]) -> list[int]:
    # den is monic
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j, d in enumerate(den):
                num[i - dd + j] -= c * d
    assert not any(num[:dd]), "cyclotomic division left a remainder"
    return quot


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@dataclass(frozen=True)
class CyclotomicNumber:
    """Element of Q(zeta_level) as coefficients on 1, zeta, ..., zeta^(phi-1).

    ``zeta`` is the abstract primitive root ``exp(2*pi*i/level)``.  Equality
    across different levels is only decided for rational values.
    """

    level: int
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(as_fraction(c) for c in self.coefficients)
        if len(coeffs) != euler_phi(self.level):
            raise InvalidInput("coefficient vector length must equal phi(level)")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def rational(cls, value, level: int = 1) -> CyclotomicNumber:
        coeffs = [Fraction(0)] * euler_phi(level)
        coeffs[0] = as_fraction(value)
        return cls(level, tuple(coeffs))

    @classmethod
    def root(cls, level: int, exponent: int = 1) -> CyclotomicNumber:
        """``zeta_level ** exponent``."""
        raw = [0] * (exponent % level) + [1]
        return cyclo_reduce(level, Polynomial(tuple(raw)))

    def is_rational(self) -> bool:
        return not any(self.coefficients[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise InvalidInput(f"{self} is not rational")
        return self.coefficients[0]

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def as_polynomial(self) -> Polynomial:
        return Polynomial(self.coefficients)

    def lift(self, level: int) -> CyclotomicNumber:
        """Re-express in Q(zeta_level); ``self.level`` must divide ``level``."""
        if level % self.level:
            raise InvalidInput(f"cannot lift level {self.level} into level {level}")
        step = level // self.level
        raw = [Fraction(0)] * (step * (len(self.coefficients) - 1) + 1)
        for i, c in enumerate(self.coefficients):
            raw[i * step] = c
        return cyclo_reduce(level, Polynomial(tuple(raw)))

    def _common(self, other):
        if isinstance(other, (int, Fraction)):
            return self, CyclotomicNumber.rational(other, self.level)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        if other.level == self.level:
            return self, other
        lvl = self.level * other.level // gcd(self.level, other.level)
        return self.lift(lvl), other.lift(lvl)

    def __add__(self, other):
        pair = self._common(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        return CyclotomicNumber(a.level, tuple(x + y for x, y in zip(a.coefficients, b.coefficients)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.level, tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(self.level, tuple(c * other for c in self.coefficients))
        pair = self._common(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        return cyclo_reduce(a.level, a.as_polynomial() * b.as_polynomial())

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coefficients[0] == other
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        if self.is_rational() and other.is_rational():
            return self.coefficients[0] == other.coefficients[0]
        return self.level == other.level and self.coefficients == other.coefficients

    def __hash__(self):
        if self.is_rational():
            return hash(self.coefficients[0])
        return hash((self.level, self.coefficients))

    def __complex__(self) -> complex:
        import cmath

        z = cmath.exp(2j * cmath.pi / self.level)
        return sum(complex(float(c)) * z**i for i, c in enumerate(self.coefficients))

    def __str__(self) -> str:
        if self.is_rational():
            return format_rational(self.coefficients[0])
        return str(self.as_polynomial()).replace("x", f"z{self.level}")

    def to_json(self) -> dict:
        return {"level": self.level, "coefficients": [format_rational(c) for c in self.coefficients]}

    @classmethod
    def from_json(cls, data: dict) -> CyclotomicNumber:
        return cls(int(data["level"]), tuple(parse_rational(c) for c in data["coefficients"]))


def cyclo_reduce(level: int, raw: Polynomial) -> CyclotomicNumber:
    """Canonical residue of ``raw(zeta)`` modulo the level-th cyclotomic polynomial."""
    if level < 1:
        raise InvalidInput("cyclotomic level must be >= 1")
    phi_poly = cyclotomic_polynomial(level)
    deg = len(phi_poly) - 1
    rem = [as_fraction(c) for c in raw.coefficients]
    # Phi is monic, so plain long division from the top.
    for i in range(len(rem) - 1, deg - 1, -1):
        c = rem[i]
        if c:
            for j, d in enumerate(phi_poly):
                if d:
                    rem[i - deg + j] -= c * d
    rem = rem[:deg] + [Fraction(0)] * max(deg - len(rem), 0)
    return CyclotomicNumber(level, tuple(rem))
