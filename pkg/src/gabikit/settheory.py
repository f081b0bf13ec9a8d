"""Gabi structures on finite monoids (algebras in Set) and the group test."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .exactalg import InputError
from .report import Report

DEFAULT_SEARCH_CAP = 2**24


class Level(enum.Enum):
    HOM = "hom"
    FULL = "full"


@dataclass(frozen=True)
class FiniteMonoid:
    """Monoid on {0..size-1} with product table[a][b]."""

    size: int
    table: tuple
    identity: int
    name: str = ""

    def __post_init__(self):
        n = self.size
        object.__setattr__(self, "table", tuple(tuple(row) for row in self.table))
        t = self.table
        if n < 1:
            raise InputError("a monoid needs at least one element")
        if len(t) != n or any(len(row) != n for row in t):
            raise InputError(f"Cayley table must be {n}x{n}")
        for a, b in itertools.product(range(n), repeat=2):
            if not isinstance(t[a][b], int) or not 0 <= t[a][b] < n:
                raise InputError(f"table[{a}][{b}] = {t[a][b]!r} is not an element index")
        if not 0 <= self.identity < n:
            raise InputError(f"identity {self.identity} out of range")
        e = self.identity
        for a in range(n):
            if t[e][a] != a or t[a][e] != a:
                raise InputError(f"identity law fails at element {a}")
        for a, b, c in itertools.product(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise InputError(f"associativity fails at ({a},{b},{c})")

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]


@dataclass(frozen=True)
class MonoidGabi:
    """delta(m) = (m_+, m_-) stored as a tuple of pairs indexed by m."""

    monoid: FiniteMonoid
    delta: tuple

    def __post_init__(self):
        n = self.monoid.size
        object.__setattr__(self, "delta", tuple(tuple(p) for p in self.delta))
        if len(self.delta) != n or any(len(p) != 2 or not all(0 <= x < n for x in p) for p in self.delta):
            raise InputError(f"delta must list {n} pairs of element indices")


@dataclass(frozen=True)
class NotAGroup:
    monoid: FiniteMonoid

    def __bool__(self):
        return False


def is_group(m: FiniteMonoid) -> tuple[bool, tuple | None]:
    """(True, inverse table) when every element is invertible, else (False, None)."""
    e = m.identity
    inv = []
    for a in range(m.size):
        two_sided = [b for b in range(m.size) if m.mul(a, b) == e and m.mul(b, a) == e]
        if not two_sided:
            return False, None
        inv.append(two_sided[0])
    return True, tuple(inv)


def _hom_violation(m: FiniteMonoid, d, a: int, b: int) -> str | None:
    ab = m.mul(a, b)
    if d[ab][0] != m.mul(d[a][0], d[b][0]):
        return "(mn)_+ != m_+ n_+"
    if d[ab][1] != m.mul(d[b][1], d[a][1]):
        return "(mn)_- != n_- m_-"
    return None


def _full_violation(m: FiniteMonoid, d, a: int) -> tuple[str, str] | None:
    p, q = d[a]
    if p != a:
        return "rho", "m_+ != m"
    if m.mul(p, q) != m.identity:
        return "inverse", "m_+ m_- != 1"
    pp, pm = d[p]
    qp, qm = d[q]
    if (pp, qp, m.mul(qm, pm)) != (p, q, m.identity):
        return "coassociativity", "(m_++, m_-+, m_-- m_+-) != (m_+, m_-, 1)"
    return None


def check_monoid_gabi(s: MonoidGabi, level: Level = Level.FULL) -> Report:
    m, d = s.monoid, s.delta
    rep = Report(f"monoid gabi ({level.value})")
    e = m.identity
    if d[e] != (e, e):
        rep.fail("unit", str(e), "delta(1) != (1,1)")
    for a, b in itertools.product(range(m.size), repeat=2):
        why = _hom_violation(m, d, a, b)
        if why:
            rep.fail("monoid-map", f"({a},{b})", why)
    if level is Level.FULL:
        for a in range(m.size):
            bad = _full_violation(m, d, a)
            if bad:
                rep.fail(bad[0], str(a), bad[1])
    return rep


def search_monoid_gabi(m: FiniteMonoid, level: Level = Level.FULL, cap: int = DEFAULT_SEARCH_CAP) -> list[MonoidGabi]:
    """All passing delta tables, in lexicographic order of the flattened table.

    Depth-first over delta(0), delta(1), ... with pairs in lexicographic
    order, pruning a branch as soon as a condition whose ingredients are all
    assigned fails. The output equals filtering the full enumeration.
    """
    n = m.size
    required = (n * n) ** n
    if required > cap:
        raise InputError(f"search needs {required} candidates, cap is {cap}")
    pairs = list(itertools.product(range(n), repeat=2))
    e = m.identity
    d: list = [None] * n
    out = []

    def consistent(k: int) -> bool:
        # every constraint touching index k whose other indices are <= k
        if k == e and d[k] != (e, e):
            return False
        for a in range(k + 1):
            for b in range(k + 1):
                if k not in (a, b, m.mul(a, b)) or m.mul(a, b) > k:
                    continue
                if _hom_violation(m, d, a, b):
                    return False
        if level is Level.FULL:
            for a in range(k + 1):
                p, q = d[a]
                if p > k or q > k:
                    continue
                if a == k or k in (p, q):
                    if _full_violation(m, d, a):
                        return False
        return True

    def extend(k: int) -> None:
        if k == n:
            s = MonoidGabi(m, tuple(d))
            if check_monoid_gabi(s, level).passed:
                out.append(s)
            return
        for pair in pairs:
            d[k] = pair
            if consistent(k):
                extend(k + 1)
        d[k] = None

    extend(0)
    return out


def group_gabi(m: FiniteMonoid) -> MonoidGabi | NotAGroup:
    """delta(m) = (m, m^-1) for a group, NotAGroup otherwise."""
    ok, inv = is_group(m)
    if not ok:
        return NotAGroup(m)
    return MonoidGabi(m, tuple((a, inv[a]) for a in range(m.size)))
