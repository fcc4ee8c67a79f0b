"""Dirichlet characters stored as full value tables.

A character of modulus ``m`` and order ``n`` maps each residue ``a`` to
``None`` when ``gcd(a, m) > 1`` and otherwise to an exponent ``e`` mod
``n``, standing for ``exp(2*pi*i*e/n)``.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Mapping, Sequence

from .errors import InvalidCharacter, InvalidDiscriminant, InvalidInput
from .exactnum import CyclotomicNumber


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization; moduli here stay small."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def is_squarefree(n: int) -> bool:
    return all(e == 1 for e in factorize(abs(n)).values())


def primitive_root(p: int, square: bool = False) -> int:
    """Least primitive root mod the odd prime ``p``.

    With ``square=True`` the least one that also generates the units
    mod ``p**2``.
    """
    qs = list(factorize(p - 1))
    for g in range(2, p * p):
        if g % p == 0:
            continue
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            if not square or pow(g, p - 1, p * p) != 1:
                return g
    raise InvalidInput(f"no primitive root found for {p}")


def unit_group_generators(m: int) -> list[tuple[int, int]]:
    """Independent generators of (Z/m)^* with their orders.

    One cyclic factor per odd prime power, and ``-1``, ``5`` for ``2^k``
    with ``k >= 3``; each generator is lifted by CRT to be 1 on the other
    prime-power components.
    """
    gens: list[tuple[int, int]] = []
    for p, k in factorize(m).items():
        q = p**k
        rest = m // q
        if p == 2:
            if k == 1:
                local = []
            elif k == 2:
                local = [(3, 2)]
            else:
                local = [(q - 1, 2), (5, q // 4)]
        else:
            local = [(primitive_root(p, square=k > 1), (p - 1) * p ** (k - 1))]
        for g, order in local:
            if rest == 1:
                lifted = g % q
            else:
                # x = g mod q, x = 1 mod rest
                lifted = (g * rest * pow(rest, -1, q) + q * pow(q, -1, rest)) % m
            gens.append((lifted, order))
    return gens


@dataclass(frozen=True)
class DirichletCharacter:
    modulus: int
    order: int
    values: tuple[int | None, ...]

    def __call__(self, a: int) -> int | None:
        """Exponent of ``chi(a)`` relative to ``order``, or ``None`` for zero."""
        return self.values[a % self.modulus]

    def value(self, a: int) -> complex:
        e = self(a)
        if e is None:
            return 0j
        return cmath.exp(2j * cmath.pi * e / self.order)

    def exact_value(self, a: int) -> CyclotomicNumber:
        e = self(a)
        if e is None:
            return CyclotomicNumber.rational(0, self.order)
        return CyclotomicNumber.root(self.order, e)

    def sign(self, a: int) -> int:
        """Value as an integer; only for real (order <= 2) characters."""
        if self.order > 2:
            raise InvalidInput("character is not real-valued")
        e = self(a)
        if e is None:
            return 0
        return -1 if e else 1

    @property
    def parity(self) -> int:
        """``chi(-1)``: +1 for even characters, -1 for odd ones."""
        e = self(-1)
        return 1 if e == 0 else -1

    def is_odd(self) -> bool:
        return self.parity == -1

    def is_even(self) -> bool:
        return self.parity == 1

    def is_principal(self) -> bool:
        return self.order == 1

    def units(self) -> list[int]:
        return [a for a, e in enumerate(self.values) if e is not None]

    def __mul__(self, other: DirichletCharacter) -> DirichletCharacter:
        return char_mul(self, other)

    def __pow__(self, k: int) -> DirichletCharacter:
        vals = [None if e is None else (e * k) % self.order for e in self.values]
        return _normalized(self.modulus, self.order, vals)

    def conductor(self) -> int:
        return conductor(self)

    def is_primitive(self) -> bool:
        return conductor(self) == self.modulus

    def to_json(self) -> dict:
        return {"modulus": self.modulus, "order": self.order, "values": list(self.values)}

    @classmethod
    def from_json(cls, data: Mapping) -> DirichletCharacter:
        values = data["values"]
        table = {a: v for a, v in enumerate(values)}
        if len(values) != int(data["modulus"]):
            raise InvalidCharacter("values list must have one entry per residue")
        return make_character(int(data["modulus"]), table, int(data["order"]))


def _normalized(modulus: int, order: int, vals: Sequence[int | None]) -> DirichletCharacter:
    g = reduce(gcd, (e for e in vals if e is not None), order)
    new_order = order // g
    return DirichletCharacter(
        modulus, new_order, tuple(None if e is None else (e // g) % new_order for e in vals)
    )


def make_character(
    modulus: int, table: Mapping[int, int | None] | Sequence[int | None], order: int = 2
) -> DirichletCharacter:
    """Validate a value table and return the character with minimal order.

    ``table`` maps residues to exponents mod ``order`` (``None`` for the
    value zero).  Residues absent from a mapping are taken to be zeros,
    which is only legitimate for non-units.
    """
    if modulus < 1 or order < 1:
        raise InvalidCharacter("modulus and order must be positive")
    if not isinstance(table, Mapping):
        table = dict(enumerate(table))
    vals: list[int | None] = [None] * modulus
    seen: set[int] = set()
    for a, e in table.items():
        r = a % modulus
        if r in seen and vals[r] != (None if e is None else e % order):
            raise InvalidCharacter(f"conflicting entries for residue {r}")
        seen.add(r)
        vals[r] = None if e is None else e % order
    for a in range(modulus):
        unit = gcd(a, modulus) == 1
        if unit and vals[a] is None:
            raise InvalidCharacter(f"value at unit {a} is missing or zero")
        if not unit and vals[a] is not None:
            raise InvalidCharacter(f"value at non-unit {a} must be zero")
    if vals[1 % modulus] != 0:
        raise InvalidCharacter("chi(1) must equal 1")
    for g, _ in unit_group_generators(modulus):
        eg = vals[g]
        for a in range(modulus):
            ea = vals[a]
            if ea is not None and vals[a * g % modulus] != (ea + eg) % order:
                raise InvalidCharacter(f"table is not multiplicative at ({a}, {g})")
    return _normalized(modulus, order, vals)


def character_from_images(modulus: int, images: Mapping[int, int], order: int) -> DirichletCharacter:
    """Extend generator images multiplicatively, e.g. ``{2: 1}`` with order 4 mod 5."""
    vals: list[int | None] = [None] * modulus
    vals[1 % modulus] = 0
    frontier = [1 % modulus]
    while frontier:
        nxt = []
        for a in frontier:
            for g, e in images.items():
                b = a * g % modulus
                eb = (vals[a] + e) % order
                if vals[b] is None:
                    vals[b] = eb
                    nxt.append(b)
                elif vals[b] != eb:
                    raise InvalidCharacter(f"images are inconsistent at residue {b}")
        frontier = nxt
    return make_character(modulus, dict(enumerate(vals)), order)


def principal_character(modulus: int = 1) -> DirichletCharacter:
    vals = tuple(0 if gcd(a, modulus) == 1 else None for a in range(modulus))
    return DirichletCharacter(modulus, 1, vals)


def characters_mod(modulus: int) -> list[DirichletCharacter]:
    """Every Dirichlet character of the given modulus."""
    gens = unit_group_generators(modulus)
    lam = reduce(_lcm, (o for _, o in gens), 1)
    # discrete-log table: residue -> exponent vector over the generators
    logs: dict[int, tuple[int, ...]] = {1 % modulus: tuple(0 for _ in gens)}
    for i, (g, o) in enumerate(gens):
        new = {}
        for a, vec in logs.items():
            x = a
            for k in range(o):
                v = list(vec)
                v[i] = k
                new[x] = tuple(v)
                x = x * g % modulus
        logs = new
    out = []

    def choices(i):
        if i == len(gens):
            yield ()
            return
        for e in range(gens[i][1]):
            for rest in choices(i + 1):
                yield (e,) + rest

    for exps in choices(0):
        scaled = [e * (lam // o) for e, (_, o) in zip(exps, gens)]
        vals: list[int | None] = [None] * modulus
        for a, vec in logs.items():
            vals[a] = sum(k * s for k, s in zip(vec, scaled)) % lam
        out.append(_normalized(modulus, lam, vals))
    return out


# ---------------------------------------------------------------------------
# quadratic characters


def kronecker_symbol(a: int, n: int) -> int:
    """Kronecker symbol ``(a/n)`` via the binary Jacobi algorithm."""
    if n == 0:
        return 1 if abs(a) == 1 else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 and a % 8 in (3, 5):
            result = -result
    # n is odd and positive: Jacobi symbol
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def is_fundamental_discriminant(d: int) -> bool:
    if d in (0, 1):
        return False
    if d % 4 == 1:
        return is_squarefree(d)
    if d % 4 == 0:
        q = d // 4
        return q % 4 in (2, 3) and is_squarefree(q)
    return False


def kronecker_character(d: int) -> DirichletCharacter:
    """The character ``n -> (d/n)`` of the quadratic field of discriminant ``d``."""
    if not is_fundamental_discriminant(d):
        raise InvalidDiscriminant(f"{d} is not a fundamental discriminant")
    m = abs(d)
    vals = []
    for a in range(m):
        k = kronecker_symbol(d, a)
        vals.append(None if k == 0 else (0 if k == 1 else 1))
    return _normalized(m, 2, vals)


# ---------------------------------------------------------------------------


def char_mul(a: DirichletCharacter, b: DirichletCharacter) -> DirichletCharacter:
    """Pointwise product, as a character modulo ``lcm`` of the two moduli."""
    m = _lcm(a.modulus, b.modulus)
    n = _lcm(a.order, b.order)
    sa, sb = n // a.order, n // b.order
    vals: list[int | None] = []
    for r in range(m):
        ea, eb = a(r), b(r)
        vals.append(None if ea is None or eb is None else (ea * sa + eb * sb) % n)
    return _normalized(m, n, vals)


def conductor(chi: DirichletCharacter) -> int:
    m = chi.modulus
    units = chi.units()
    for f in range(1, m + 1):
        if m % f:
            continue
        if all(chi.values[a] == 0 for a in units if (a - 1) % f == 0):
            return f
    return m  # pragma: no cover - f = m always qualifies


def primitive_character(chi: DirichletCharacter) -> DirichletCharacter:
    """The character modulo the conductor that induces ``chi``."""
    f = conductor(chi)
    m = chi.modulus
    vals: list[int | None] = []
    for b in range(f):
        if gcd(b, f) != 1:
            vals.append(None)
            continue
        a = next(a for a in range(b, b + m + f, f) if gcd(a, m) == 1)
        vals.append(chi(a))
    return _normalized(f, chi.order, vals)


def induce(chi: DirichletCharacter, modulus: int) -> DirichletCharacter:
    """Lift ``chi`` to a multiple of its modulus."""
    if modulus % chi.modulus:
        raise InvalidInput("target modulus must be a multiple of the character modulus")
    return char_mul(chi, principal_character(modulus))
