from __future__ import annotations

import itertools

import pytest

from gabikit.exactalg import InputError
from gabikit.fixtures import cyclic_monoid, idempotent_monoid, monoid_corpus
from gabikit.settheory import (
    FiniteMonoid,
    Level,
    MonoidGabi,
    NotAGroup,
    check_monoid_gabi,
    group_gabi,
    is_group,
    search_monoid_gabi,
)

CORPUS = {m.name: m for m in monoid_corpus()}


def brute_force(m, level):
    pairs = list(itertools.product(range(m.size), repeat=2))
    out = []
    for delta in itertools.product(pairs, repeat=m.size):
        s = MonoidGabi(m, delta)
        if check_monoid_gabi(s, level).passed:
            out.append(delta)
    return out


def test_is_group_examples():
    assert is_group(cyclic_monoid(3)) == (True, (0, 2, 1))
    assert is_group(idempotent_monoid()) == (False, None)
    assert is_group(CORPUS["trivial"]) == (True, (0,))
    assert is_group(CORPUS["S3"])[0]
    assert not is_group(CORPUS["Z4-mult"])[0]


def test_invalid_tables():
    with pytest.raises(InputError, match="associativity"):
        FiniteMonoid(3, [[0, 1, 2], [1, 0, 0], [2, 1, 0]], 0)
    with pytest.raises(InputError, match="identity"):
        FiniteMonoid(2, [[0, 0], [1, 1]], 0)
    with pytest.raises(InputError):
        FiniteMonoid(2, [[0, 1], [1, 2]], 0)


def test_check_examples():
    c3 = cyclic_monoid(3)
    assert check_monoid_gabi(MonoidGabi(c3, [(0, 0), (1, 2), (2, 1)]), Level.FULL).passed
    c2 = cyclic_monoid(2)
    assert check_monoid_gabi(MonoidGabi(c2, [(0, 0), (1, 1)]), Level.FULL).passed
    e = idempotent_monoid()
    s = MonoidGabi(e, [(0, 0), (1, 0)])
    assert check_monoid_gabi(s, Level.HOM).passed
    rep = check_monoid_gabi(s, Level.FULL)
    assert rep.failed("inverse") and not rep.failed("monoid-map")


def test_check_reports_witness():
    c2 = cyclic_monoid(2)
    rep = check_monoid_gabi(MonoidGabi(c2, [(0, 0), (1, 0)]), Level.FULL)
    assert rep.failed("inverse")
    assert [f.witness for f in rep.findings if f.label == "inverse"] == ["1"]


@pytest.mark.parametrize("name", [n for n, m in CORPUS.items() if m.size <= 3])
@pytest.mark.parametrize("level", list(Level))
def test_search_matches_brute_force(name, level):
    m = CORPUS[name]
    assert [s.delta for s in search_monoid_gabi(m, level)] == brute_force(m, level)


@pytest.mark.parametrize("name", ["C4", "Z4-mult"])
def test_search_matches_brute_force_size4(name):
    m = CORPUS[name]
    assert [s.delta for s in search_monoid_gabi(m, Level.FULL)] == brute_force(m, Level.FULL)


def test_search_examples():
    assert [s.delta for s in search_monoid_gabi(cyclic_monoid(2))] == [((0, 0), (1, 1))]
    assert search_monoid_gabi(idempotent_monoid()) == []


@pytest.mark.parametrize("name", [n for n, m in CORPUS.items() if m.size <= 4])
def test_group_characterization(name):
    m = CORPUS[name]
    found = search_monoid_gabi(m, Level.FULL)
    assert bool(found) == is_group(m)[0]
    for s in found:
        assert all(s.delta[a][0] == a for a in range(m.size))
        inv = is_group(m)[1]
        assert all(s.delta[a][1] == inv[a] for a in range(m.size))
    if found:
        assert [s.delta for s in found] == [group_gabi(m).delta]


def test_group_gabi():
    assert group_gabi(cyclic_monoid(3)).delta == ((0, 0), (1, 2), (2, 1))
    s3 = group_gabi(CORPUS["S3"])
    assert check_monoid_gabi(s3, Level.FULL).passed
    assert isinstance(group_gabi(idempotent_monoid()), NotAGroup)
    assert not group_gabi(idempotent_monoid())


def test_search_cap():
    with pytest.raises(InputError, match="cap"):
        search_monoid_gabi(CORPUS["S3"])
    found = search_monoid_gabi(CORPUS["S3"], Level.FULL, cap=36 ** 6)
    assert [s.delta for s in found] == [group_gabi(CORPUS["S3"]).delta]


def test_hom_level_is_weaker():
    # the idempotent monoid admits monoid maps M -> M x M^op
    found = search_monoid_gabi(idempotent_monoid(), Level.HOM)
    assert ((0, 0), (1, 1)) in [s.delta for s in found]
