from __future__ import annotations

from math import gcd

import pytest
from hypothesis import given, strategies as st

from oracles import kronecker_by_factoring
from zetalab.characters import (
    DirichletCharacter,
    char_mul,
    character_from_images,
    characters_mod,
    conductor,
    induce,
    is_fundamental_discriminant,
    kronecker_character,
    kronecker_symbol,
    make_character,
    primitive_character,
    principal_character,
    unit_group_generators,
)
from zetalab.errors import InvalidCharacter, InvalidDiscriminant
from zetalab.exactnum import euler_phi


def test_nontrivial_character_mod_4():
    chi = make_character(4, {1: 0, 3: 1})
    assert chi.order == 2
    assert chi.sign(3) == -1 and chi.sign(2) == 0


def test_zero_set_violation():
    with pytest.raises(InvalidCharacter):
        make_character(4, {1: 0, 3: 0, 2: 0})


@pytest.mark.parametrize(
    "table",
    [{1: 0, 2: 1, 3: 0, 4: 1}, {1: 1, 2: 0, 3: 0, 4: 1}, {2: 1, 3: 1, 4: 0}],
    ids=["not-multiplicative", "chi1-not-one", "missing-unit"],
)
def test_invalid_tables(table):
    with pytest.raises(InvalidCharacter):
        make_character(5, table, 2)


def test_order_four_character_mod_5():
    chi = character_from_images(5, {2: 1}, 4)
    assert chi.order == 4
    assert [chi(a) for a in range(5)] == [None, 0, 1, 3, 2]
    for a in range(1, 5):
        for b in range(1, 5):
            assert chi(a * b) == (chi(a) + chi(b)) % 4


@pytest.mark.parametrize("d,a,expected", [(-4, 1, 1), (-4, 3, -1), (-3, 2, -1), (5, 2, -1), (8, 3, -1), (-8, 3, 1)])
def test_kronecker_values(d, a, expected):
    assert kronecker_character(d).sign(a) == expected


@pytest.mark.parametrize("d", [-5, 0, 1, 12 * 4, -12, 9])
def test_non_fundamental_discriminants(d):
    with pytest.raises(InvalidDiscriminant):
        kronecker_character(d)


@given(st.integers(-500, 500), st.integers(-300, 300))
def test_kronecker_symbol_matches_definition(d, n):
    assert kronecker_symbol(d, n) == kronecker_by_factoring(d, n)


def test_fundamental_discriminants_in_range():
    found = [d for d in range(-30, 0) if is_fundamental_discriminant(d)]
    assert found == [-24, -23, -20, -19, -15, -11, -8, -7, -4, -3]


def test_product_with_trivial_character():
    chi = kronecker_character(-4)
    assert char_mul(chi, principal_character()) == chi


def test_square_of_quadratic_character():
    chi = kronecker_character(-4)
    assert char_mul(chi, chi) == principal_character(4)


def test_product_of_quadratic_characters():
    assert char_mul(kronecker_character(-4), kronecker_character(-3)) == kronecker_character(12)


@pytest.mark.parametrize(
    "chi,f",
    [
        (kronecker_character(-4), 4),
        (principal_character(6), 1),
        (induce(kronecker_character(-4), 8), 4),
        (kronecker_character(-3) * principal_character(10), 3),
    ],
)
def test_conductor(chi, f):
    assert conductor(chi) == f


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 7, 8, 9, 12, 15, 16, 20, 24, 27, 33])
def test_character_group_has_phi_elements(m):
    chars = characters_mod(m)
    assert len(chars) == euler_phi(m)
    assert len(set(chars)) == euler_phi(m)


@pytest.mark.parametrize("m", range(1, 101))
def test_multiplicativity_and_invariants(m):
    units = [a for a in range(m) if gcd(a, m) == 1]
    for chi in characters_mod(m):
        for a in units:
            for b in units:
                assert chi(a * b) == (chi(a) + chi(b)) % chi.order
        assert chi.parity in (1, -1)
        assert (chi.order == 1) == chi.is_principal()
        f = chi.conductor()
        assert m % f == 0
        prim = primitive_character(chi)
        assert all(induce(prim, m)(a) == chi(a) for a in units)


def test_generators_have_claimed_orders():
    for m in (5, 8, 15, 16, 63, 100):
        for g, o in unit_group_generators(m):
            assert pow(g, o, m) == 1


def test_parity_convention():
    assert kronecker_character(-4).is_odd()
    assert kronecker_character(5).is_even()


def test_json_round_trip():
    chi = character_from_images(7, {3: 1}, 6)
    assert DirichletCharacter.from_json(chi.to_json()) == chi
    assert chi.to_json()["values"][0] is None


def test_json_rejects_bad_tables():
    with pytest.raises(InvalidCharacter):
        DirichletCharacter.from_json({"modulus": 3, "order": 2, "values": [None, 0]})
