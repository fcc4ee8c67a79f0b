from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import teichmuller_search
from zetalab.bernoulli import bernoulli_polynomial, kummer_value
from zetalab.characters import character_from_images, kronecker_character, principal_character
from zetalab.errors import InvalidBranch, InvalidInput, PoleError, PrecisionError, UnsupportedCharacter
from zetalab.padic import (
    PAdic,
    PAdicInterval,
    _kummer_value_riemann,
    bernoulli_distribution,
    branches,
    distribution_additivity_check,
    interpolation_index,
    kummer_value_padic,
    padic_embed,
    padic_L,
    padic_zeta,
    principal_teichmuller_power,
    teichmuller,
    teichmuller_character,
    valuation,
)

# -- numbers -----------------------------------------------------------------


def test_embed_one_third():
    x = padic_embed(Fraction(1, 3), 5, 2)
    assert (x.valuation, x.unit) == (0, 17)
    assert str(x) == "...32 (mod 5^2)"
    assert x.to_json() == {"p": 5, "valuation": 0, "digits": [2, 3], "precision": 2}


def test_embed_one_fifth():
    x = padic_embed(Fraction(1, 5), 5, 2)
    assert (x.valuation, x.unit) == (-1, 1)
    assert str(x) == "...0.1 (mod 5^1)"


def test_embed_zero():
    assert padic_embed(0, 5, 2).is_zero()


@pytest.mark.parametrize("r,p,v", [(Fraction(50, 3), 5, 2), (Fraction(7, 98), 7, -1), (Fraction(-1), 3, 0)])
def test_valuation(r, p, v):
    assert valuation(r, p) == v


def test_json_round_trip():
    for x in (padic_embed(Fraction(-7, 250), 5, 4), padic_embed(0, 3, 3), teichmuller(3, 11, 3)):
        assert PAdic.from_json(x.to_json()) == x


small = st.fractions(max_denominator=10**6).filter(lambda f: f != 0)


@given(small, small, st.sampled_from([3, 5, 7, 101]), st.integers(1, 12))
def test_arithmetic_matches_rationals(a, b, p, N):
    x, y = padic_embed(a, p, N), padic_embed(b, p, N)
    for got, exact in ((x + y, a + b), (x - y, a - b), (x * y, a * b), (x / y, a / b)):
        assert got.congruent(exact, got.absolute_precision)


def test_precision_tracking_on_cancellation():
    x = padic_embed(Fraction(1), 5, 3) - padic_embed(Fraction(26), 5, 3)
    assert x.valuation == 2
    assert x.absolute_precision == 3


def test_residue_beyond_precision_fails():
    with pytest.raises(PrecisionError):
        padic_embed(Fraction(1, 3), 5, 2).residue(3)


def test_mixed_primes_rejected():
    with pytest.raises(InvalidInput):
        padic_embed(1, 5, 2) + padic_embed(1, 7, 2)


# -- Teichmueller --------------------------------------------------------------


def test_teichmuller_of_two_mod_25():
    assert teichmuller(2, 5, 2).unit == 7


@pytest.mark.parametrize("p", [3, 5, 7, 31])
def test_teichmuller_fixes_one(p):
    assert teichmuller(1, p, 4).unit == 1


def test_teichmuller_rejects_multiples_of_p():
    with pytest.raises(InvalidInput):
        teichmuller(10, 5, 2)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_teichmuller_matches_brute_force(p):
    for c in range(1, p):
        assert teichmuller(c, p, 3).unit == teichmuller_search(c, p, 3)


def test_teichmuller_character_table():
    omega = teichmuller_character(7)
    assert omega.order == 6
    assert omega.is_odd()
    assert principal_teichmuller_power(7, 6).is_principal()


# -- distributions ----------------------------------------------------------------


@pytest.mark.parametrize(
    "m,interval,value",
    [
        (1, PAdicInterval(5, 0, 1), Fraction(-1, 2)),
        (0, PAdicInterval(3, 4, 2), Fraction(1, 9)),
        (2, PAdicInterval(5, 3, 1), Fraction(-11, 30)),
    ],
)
def test_distribution_values(m, interval, value):
    assert bernoulli_distribution(m, interval) == value


@pytest.mark.parametrize(
    "m,interval",
    [(1, PAdicInterval(5, 0, 1)), (0, PAdicInterval(5, 17, 2)), (3, PAdicInterval(7, 2, 1)), (9, PAdicInterval(11, 40, 2))],
)
def test_distribution_is_additive(m, interval):
    assert distribution_additivity_check(m, interval)


def test_interval_validation():
    with pytest.raises(InvalidInput):
        PAdicInterval(5, 25, 2)


# -- p-adic zeta -----------------------------------------------------------------


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_branch_count(p):
    assert branches(p) == list(range(0, p - 2, 2))
    assert len(branches(p)) == (p - 1) // 2


def test_padic_zeta_example():
    x = padic_zeta(5, 2, -1, 1)
    assert x.unit == 17 and x.valuation == 0
    assert x.congruent(Fraction(1, 3), 2)


def test_pole():
    with pytest.raises(PoleError):
        padic_zeta(5, 0, 1, 3)


@pytest.mark.parametrize("a", [1, -2, 4, 6])
def test_invalid_branch(a):
    with pytest.raises(InvalidBranch):
        padic_zeta(5, a, -1, 1)


def test_two_indices_agree_on_nonzero_branch():
    a = padic_embed(-kummer_value(5, 2), 5, 4)
    b = padic_embed(-kummer_value(5, 22), 5, 4)
    assert a.congruent(b, 2)


def test_interpolation_index_selection():
    assert interpolation_index(5, 2, -1, 1) == 2
    assert interpolation_index(5, 2, -1, 2) == 2
    assert interpolation_index(5, 0, -3, 1) == 4
    # p | (1 - s): every candidate is divisible by p and the rule keeps it
    assert interpolation_index(5, 2, -9, 1) == 10


@pytest.mark.parametrize("p", [5, 7])
def test_zero_branch_agrees_with_exact_values(p):
    # exact value at every interpolation point, including 1 - s divisible by p
    for m in range(p - 1, 60, p - 1):
        for N in range(0, 4):
            got = padic_zeta(p, 0, 1 - m, N)
            assert got.congruent(-kummer_value(p, m), N + 1), (p, m, N)


@pytest.mark.parametrize("p", [5, 7])
def test_zero_branch_indices_only_agree_to_lower_precision(p):
    # near the pole the interpolation points lose two digits
    for m in range(p - 1, 40, p - 1):
        if m % p == 0:
            continue
        for N in (2, 3):
            m2 = m + (p - 1) * p**N
            x = kummer_value_padic(p, m, N + 1)
            y = kummer_value_padic(p, m2, N + 1)
            assert x.congruent(y, N - 1)
            assert not x.congruent(y, N + 1)


def test_padic_zeta_accepts_padic_argument():
    s = padic_embed(-1, 5, 3)
    assert padic_zeta(5, 2, s, 2).congruent(padic_zeta(5, 2, -1, 2), 3)


def test_padic_zeta_limited_input_precision_reduces_output():
    s = padic_embed(-1, 5, 1)  # known mod 5 only
    x = padic_zeta(5, 2, s, 3)
    assert x.absolute_precision <= 2


def test_near_pole_input_is_rejected():
    with pytest.raises(PrecisionError):
        padic_zeta(5, 0, padic_embed(1 + 125, 5, 3), 1)


@pytest.mark.parametrize("p,m", [(5, 4), (5, 6), (7, 12), (7, 14), (11, 30), (3, 26)])
def test_riemann_sum_matches_exact_kummer_value(p, m):
    for absolute in (1, 2, 3):
        got = _kummer_value_riemann(p, m, absolute)
        assert got.congruent(kummer_value(p, m), absolute)


def test_large_index_uses_riemann_sum():
    # m = 2 + 4 * 5^4 is past the exact-Bernoulli limit
    x = kummer_value_padic(5, 2 + 4 * 625, 3)
    assert x.congruent(kummer_value(5, 2), 3)


# -- p-adic L --------------------------------------------------------------------


def test_odd_character_gives_zero():
    assert padic_L(5, kronecker_character(-4), 1, 2).is_zero()


@pytest.mark.parametrize("p", [5, 7, 11])
def test_teichmuller_powers_give_the_branches(p):
    for a in branches(p):
        chi = principal_teichmuller_power(p, a)
        for n in range(1, 8):
            got = padic_L(p, chi, n, 2)
            assert got.congruent(padic_zeta(p, a, 1 - n, 2), 3), (p, a, n)


def _oracle_L(p: int, chi, n: int, work: int) -> Fraction:
    """Straight-line ``-B_{n,eta}/n`` for ``eta = chi * omega^(-n)``, with
    omega from brute-force search, at modulus ``f = lcm(modulus, p)``."""
    f = chi.modulus * p
    mod = p**work
    total = Fraction(0)
    poly = bernoulli_polynomial(n)
    lifts = {c: teichmuller_search(c, p, work) for c in range(1, p)}
    for r in range(1, f + 1):
        if r % p == 0 or chi(r) is None:
            continue
        w = lifts[r % p]
        eta = chi.sign(r) * pow(w, -n, mod)
        total += eta * poly(Fraction(r, f))
    return -Fraction(f) ** (n - 1) * total / n


def test_quadratic_character_mod_8_at_seven():
    chi = kronecker_character(8)
    got = padic_L(7, chi, 2, 2)
    assert got.congruent(_oracle_L(7, chi, 2, 7), 3)


@pytest.mark.parametrize("d,p,n", [(5, 3, 2), (-3, 5, 1), (12, 7, 4), (-8, 5, 3), (13, 3, 4)])
def test_quadratic_characters_against_oracle(d, p, n):
    chi = kronecker_character(d)
    got = padic_L(p, chi, n, 3)
    assert got.congruent(_oracle_L(p, chi, n, 8), 4)


def test_unsupported_character_order():
    chi = character_from_images(7, {3: 1}, 6)
    with pytest.raises(UnsupportedCharacter):
        padic_L(5, chi, 2, 1)


def test_order_four_character_is_omega_and_vanishes():
    chi = character_from_images(5, {2: 1}, 4)
    assert chi == teichmuller_character(5)
    for n in range(1, 9):
        assert padic_L(5, chi, n, 3).is_zero()


def test_trivial_character_is_the_zero_branch():
    for n in range(1, 9):
        got = padic_L(5, principal_character(), n, 2)
        assert got.congruent(padic_zeta(5, 0, 1 - n, 2), 3)
