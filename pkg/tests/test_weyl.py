from fractions import Fraction

import pytest

from config import Config
from services.cartan import Weight, inner_product, simple_root_coords
from services.errors import IndexOutOfRange, NonTermination, ResourceLimit, SingularWeight
from services.highrep import is_dominant
from services.weyl import (
    WeylElement,
    chamber_of,
    group_elements,
    inversion_count,
    longest_element,
    make_dominant,
    orbit,
    orbit_elements,
    simple_reflection,
    weyl_order,
)
from tests.conftest import brute_force_orbit


def _brute_force_group(entries):
    """Close the simple reflection matrices under multiplication."""
    n = len(entries)
    gens = [
        tuple(tuple((1 if j == k else 0) - (entries[i][j] if k == i else 0) for k in range(n)) for j in range(n))
        for i in range(n)
    ]
    identity = tuple(tuple(1 if j == k else 0 for k in range(n)) for j in range(n))
    seen = {identity}
    stack = [identity]
    while stack:
        m = stack.pop()
        for g in gens:
            p = tuple(tuple(sum(g[j][x] * m[x][k] for x in range(n)) for k in range(n)) for j in range(n))
            if p not in seen:
                seen.add(p)
                stack.append(p)
    return seen


@pytest.mark.parametrize("label,order", [("A1", 2), ("A2", 6), ("A3", 24), ("B2", 8), ("G2", 12)])
def test_weyl_order(rs, label, order):
    system = rs(label)
    assert weyl_order(system) == order
    assert len(group_elements(system)) == order
    assert len(_brute_force_group(system.cartan.entries)) == order
    assert weyl_order(system) == len(orbit(system, system.rho))


@pytest.mark.parametrize("label,order", [
    ("D4", 192),
    ("F4", 1152),
    ("E6", 51840),
    ("E7", 2903040),
    ("E8", 696729600),
    ("A1xG2", 24),
    ("B3", 48),
])
def test_weyl_order_beyond_enumeration(rs, label, order):
    assert weyl_order(rs(label)) == order


def test_weyl_order_cap(rs, monkeypatch):
    monkeypatch.setattr(Config, "MAX_WEIGHTS", 1)
    with pytest.raises(ResourceLimit):
        weyl_order(rs("A2"))


def test_group_elements_are_distinct_and_closed(rs):
    system = rs("B2")
    elements = group_elements(system)
    assert len(set(elements)) == len(elements)
    for a in elements:
        for b in elements:
            assert a * b in elements


def test_simple_reflection(rs):
    a2 = rs("A2")
    assert simple_reflection(a2, 0, Weight.of(1, 0)) == Weight.of(-1, 1)
    assert simple_reflection(a2, 1, Weight.of(1, 0)) == Weight.of(1, 0)
    with pytest.raises(IndexOutOfRange):
        simple_reflection(a2, 2, Weight.of(1, 0))


def test_make_dominant(rs):
    a2 = rs("A2")
    lam = Weight.of(-1, 0)
    dominant, w = make_dominant(a2, lam)
    assert dominant == Weight.of(0, 1)
    assert w.apply(lam) == dominant
    assert w.word == (1, 0)


def test_make_dominant_on_dominant_weight_is_identity(rs):
    dominant, w = make_dominant(rs("G2"), Weight.of(2, 1))
    assert dominant == Weight.of(2, 1)
    assert w.is_identity()
    assert str(w) == "e"


def test_make_dominant_cap(rs, monkeypatch):
    monkeypatch.setattr(Config, "ITERATION_CAP", 1)
    with pytest.raises(NonTermination):
        make_dominant(rs("A2"), Weight.of(-1, -1))


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_unique_dominant_representative(rs, rng, label):
    system = rs(label)
    for _ in range(1000):
        lam = Weight(tuple(int(c) for c in rng.integers(-4, 5, size=system.rank)))
        points = orbit(system, lam)
        dominant = [mu for mu in points if is_dominant(system, mu)]
        assert len(dominant) == 1
        assert make_dominant(system, lam)[0] == dominant[0]


def test_orbit_matches_brute_force(rs):
    for label, coords in [("A2", (1, 0)), ("B2", (1, 1)), ("G2", (0, 1)), ("A3", (1, 0, 2))]:
        system = rs(label)
        points = {mu.int_coords() for mu in orbit(system, Weight(coords))}
        assert points == brute_force_orbit(system.cartan.entries, coords)


def test_orbit_of_fundamental_weight(rs):
    assert orbit(rs("A2"), Weight.of(1, 0)) == {Weight.of(1, 0), Weight.of(-1, 1), Weight.of(0, -1)}


def test_orbit_elements_reach_their_points(rs):
    system = rs("B2")
    lam = Weight.of(1, 1)
    found = orbit_elements(system, lam)
    assert len(found) == 8
    for point, element in found.items():
        assert element.apply(lam) == point
        assert element.length == inversion_count(system, point)


def test_orbit_cap(rs, monkeypatch):
    monkeypatch.setattr(Config, "MAX_WEIGHTS", 2)
    with pytest.raises(ResourceLimit):
        orbit(rs("A2"), Weight.of(1, 1))


def test_group_order_cap(rs, monkeypatch):
    monkeypatch.setattr(Config, "MAX_GROUP_ORDER", 5)
    with pytest.raises(ResourceLimit):
        group_elements(rs("A2"))


def test_elements_compare_by_action(rs):
    a2 = rs("A2")
    # braid relation s1 s2 s1 = s2 s1 s2
    assert WeylElement.from_word(a2, [0, 1, 0]) == WeylElement.from_word(a2, [1, 0, 1])
    assert WeylElement.from_word(a2, [0, 0]).is_identity()
    assert str(WeylElement.from_word(a2, [0, 1])) == "s1s2"
    with pytest.raises(IndexOutOfRange):
        WeylElement.from_word(a2, [3])


def test_inverse_and_composition(rs):
    system = rs("G2")
    w = WeylElement.from_word(system, [0, 1, 1, 0, 1])
    assert (w * w.inverse()).is_identity()
    lam = Weight.of(3, -2)
    assert w.inverse().apply(w.apply(lam)) == lam


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "A3"])
def test_longest_element(rs, label):
    system = rs(label)
    w0 = longest_element(system)
    assert w0.apply(system.rho) == -system.rho
    assert w0.length == len(system.positives)


def test_chamber_of(rs):
    a2 = rs("A2")
    assert chamber_of(a2, a2.rho).is_dominant
    tag = chamber_of(a2, Weight.of(2, -1))
    assert str(tag) == "(+,-,+)"
    assert tag.simple_signs == (1, -1)
    assert not tag.is_dominant
    with pytest.raises(SingularWeight):
        chamber_of(a2, Weight.of(1, 0))


def test_inversion_count(rs):
    system = rs("B2")
    assert inversion_count(system, system.rho) == 0
    assert inversion_count(system, -system.rho) == 4


def _random_word(rng, rank, longest=10):
    return [int(i) for i in rng.integers(0, rank, size=int(rng.integers(0, longest + 1)))]


def _random_rational_weight(rng, rank):
    return Weight(tuple(
        Fraction(int(rng.integers(-6, 7)), int(rng.integers(1, 5))) for _ in range(rank)
    ))


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "A3"])
def test_random_words_are_isometries(rs, rng, label):
    system = rs(label)
    for _ in range(200):
        w = WeylElement.from_word(system, _random_word(rng, system.rank))
        lam = _random_rational_weight(rng, system.rank)
        mu = _random_rational_weight(rng, system.rank)
        assert inner_product(system, w.apply(lam), w.apply(mu)) == inner_product(system, lam, mu)


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "A3"])
def test_simple_reflections_are_involutions(rs, rng, label):
    system = rs(label)
    for _ in range(200):
        lam = _random_rational_weight(rng, system.rank)
        i = int(rng.integers(0, system.rank))
        assert simple_reflection(system, i, simple_reflection(system, i, lam)) == lam


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "A3"])
def test_random_words_preserve_the_weight_lattice(rs, rng, label):
    system = rs(label)
    for _ in range(200):
        w = WeylElement.from_word(system, _random_word(rng, system.rank))
        lam = Weight(tuple(int(c) for c in rng.integers(-5, 6, size=system.rank)))
        assert w.apply(lam).is_integral()
        # w(ρ) - ρ is minus a sum of positive roots
        shift = simple_root_coords(system, w.apply(system.rho) - system.rho)
        assert all(c.denominator == 1 and c <= 0 for c in shift)


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "A3"])
def test_chambers_of_rho_are_in_bijection_with_the_group(rs, label):
    system = rs(label)
    elements = group_elements(system)
    tags = {chamber_of(system, w.apply(system.rho)) for w in elements}
    assert len(tags) == len(elements) == weyl_order(system)
    dominant = [w for w in elements if chamber_of(system, w.apply(system.rho)).is_dominant]
    assert len(dominant) == 1 and dominant[0].is_identity()
