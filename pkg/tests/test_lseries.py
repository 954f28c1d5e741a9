import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hurwitz.errors import DomainError, LimitError, PoleError
from hurwitz.kernel import hurwitz_zeta
from hurwitz.lseries import (
    DirichletCharacter,
    build_character_group,
    euler_phi,
    l_series,
    pairwise_sum,
)
from hurwitz.oracles import alternating_odd_series


@pytest.fixture(scope="module")
def chi4():
    return next(chi for chi in build_character_group(4) if chi(3) == -1)


def test_trivial_modulus():
    (chi,) = build_character_group(1)
    assert chi.values == (1,)
    assert chi.is_principal
    assert l_series(2, chi).real == pytest.approx(math.pi**2 / 6, abs=1e-12)


def test_modulus_four():
    group = build_character_group(4)
    assert len(group) == 2
    assert group[0].is_principal
    assert group[1](3) == -1 and group[1](1) == 1 and group[1](2) == 0


def test_modulus_five_has_order_four_character():
    group = build_character_group(5)
    assert len(group) == 4
    assert any(chi(2) == 1j for chi in group)


@pytest.mark.parametrize("q", range(1, 41))
def test_group_size_and_invariants(q):
    group = build_character_group(q)
    assert len(group) == euler_phi(q)
    assert group[0].is_principal
    assert len({chi.values for chi in group}) == len(group)
    for chi in group:
        chi.validate(1e-12)


@pytest.mark.parametrize("q", [64, 120, 163, 199, 200])
def test_larger_moduli(q):
    group = build_character_group(q)
    assert len(group) == euler_phi(q)
    group[-1].validate(1e-9)


def test_modulus_limit():
    with pytest.raises(LimitError):
        build_character_group(201)
    with pytest.raises(DomainError):
        build_character_group(0)
    assert issubclass(LimitError, DomainError)


def test_ordering_is_deterministic():
    assert build_character_group(21) == build_character_group(21)


@pytest.mark.parametrize("q", range(1, 31))
def test_orthogonality(q):
    group = build_character_group(q)
    phi = len(group)
    for i, chi in enumerate(group):
        for j, other in enumerate(group):
            inner = sum(chi(a) * other(a).conjugate() for a in range(q))
            assert abs(inner - (phi if i == j else 0)) < 1e-10


@pytest.mark.parametrize("q", range(1, 13))
def test_decomposition(q):
    s = 3.0
    group = build_character_group(q)
    values = [complex(l_series(s, chi)) for chi in group]
    for b in range(1, q + 1):
        if math.gcd(b, q) != 1:
            continue
        lhs = sum(chi(b).conjugate() * v for chi, v in zip(group, values))
        rhs = len(group) * q ** (-s) * hurwitz_zeta(s, b / q).real
        assert abs(lhs - rhs) < 1e-9


@pytest.mark.parametrize("q", [2, 3, 4, 6])
def test_principal_character_relation(q):
    s = 2.0
    euler = hurwitz_zeta(s, 1.0).real
    for p in (2, 3, 5):
        if q % p == 0:
            euler *= 1 - p ** (-s)
    assert abs(l_series(s, build_character_group(q)[0]).real - euler) < 1e-9


def test_catalan(chi4):
    oracle = alternating_odd_series(2)
    value = l_series(2, chi4)
    assert abs(value.real - oracle) < 1e-9
    assert value.real == pytest.approx(0.915965594177219, abs=1e-13)


def test_leibniz(chi4):
    value = l_series(1, chi4)
    assert abs(value.real - math.pi / 4) < 1e-9
    assert abs(value.real - alternating_odd_series(1)) < 1e-9
    assert abs(value.real - math.pi / 4) <= value.err_estimate


def test_l_one_matches_nearby_values(chi4):
    # the pole-free assembly at s = 1 is continuous with the ordinary one
    near = l_series(1 + 1e-7, chi4).real
    assert abs(near - l_series(1, chi4).real) < 1e-7


def test_principal_pole():
    with pytest.raises(PoleError):
        l_series(1, build_character_group(5)[0])


def test_complex_s(chi4):
    s = 0.5 + 6j
    direct = sum(chi4(a) * complex(hurwitz_zeta(s, a / 4)) for a in range(1, 5)) * 4 ** (-s)
    assert abs(complex(l_series(s, chi4)) - direct) < 1e-12


@pytest.mark.parametrize("q", [5, 12, 13])
def test_json_roundtrip(q):
    for chi in build_character_group(q):
        text = chi.to_json()
        data = json.loads(text)
        assert set(data) == {"q", "values"}
        back = DirichletCharacter.from_json(text)
        assert back.q == chi.q
        assert all(abs(x - y) < 1e-15 for x, y in zip(back.values, chi.values))


@pytest.mark.parametrize(
    "values",
    [
        [[0, 0], [1, 0], [0, 0], [0, 0]],  # chi(3) vanishes though gcd(3, 4) = 1
        [[0, 0], [1, 0], [1, 0], [-1, 0]],  # chi(2) should vanish
        [[0, 0], [-1, 0], [0, 0], [-1, 0]],  # chi(1) != 1
        [[0, 0], [1, 0], [0, 0], [0.5, 0]],  # not of modulus one
    ],
)
def test_import_validates(values):
    with pytest.raises(DomainError):
        DirichletCharacter.from_dict({"q": 4, "values": values})


def test_import_rejects_non_multiplicative_table():
    # mod 5: chi(2) = i forces chi(4) = -1
    values = [[0, 0], [1, 0], [0, 1], [0, -1], [1, 0]]
    with pytest.raises(DomainError):
        DirichletCharacter.from_dict({"q": 5, "values": values})


@pytest.mark.parametrize("data", [{}, {"q": 4}, {"q": 4, "values": [[1, 0]]}, {"q": "x", "values": []}])
def test_import_rejects_malformed(data):
    with pytest.raises(DomainError):
        DirichletCharacter.from_dict(data)


@settings(max_examples=50)
@given(st.lists(st.complex_numbers(max_magnitude=1e6, allow_nan=False), max_size=40))
def test_pairwise_sum_matches_builtin(values):
    total = pairwise_sum(values)
    scale = sum(abs(v) for v in values) + 1
    assert abs(total - sum(values, 0j)) <= 1e-12 * scale


@settings(max_examples=30, deadline=None)
@given(q=st.integers(2, 60), data=st.data())
def test_characters_are_multiplicative(q, data):
    group = build_character_group(q)
    chi = group[data.draw(st.integers(0, len(group) - 1))]
    a = data.draw(st.integers(0, 10 * q))
    b = data.draw(st.integers(0, 10 * q))
    assert abs(chi(a * b) - chi(a) * chi(b)) < 1e-12
