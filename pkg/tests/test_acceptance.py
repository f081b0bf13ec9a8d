"""Acceptance criteria, one test each; the terminal summary lists the verdicts."""

from __future__ import annotations

import random
import time
from fractions import Fraction

import pytest

from gabikit.cli import run
from gabikit.coalg import AntipodeCandidate, Side, gabi_from_one_sided_hopf
from gabikit.exactalg import QQ, FieldSpec, Matrix, invert, kernel_basis, kron, rank, rref, twist
from gabikit.fixtures import (
    F2,
    data_dir,
    dual_numbers_f2,
    fixture_paths,
    group_algebra,
    hopf_corpus,
    idempotent_algebra_f2,
    monoid_corpus,
    sweedler_h4,
)
from gabikit.gabi import Strategy, antipode, check_double, check_gabi, derive_hopf, search_gabi, tricocycloid
from gabikit.modcat import adjunction_check, check_module, closed_maps_check, hom_module, normality_check, regular_module, trivial_module
from gabikit.report import FAULT
from gabikit.settheory import Level, group_gabi, is_group, search_monoid_gabi

S3_CAP = 36 ** 6


def passing_gabi_structures():
    out = [(h.name, h.gabi()) for h in hopf_corpus()]
    out.append(("H4 mirror", sweedler_h4().mirror_gabi()))
    for name, a in (("F2[C2]", group_algebra(2, F2).algebra), ("F2[x]/(x^2)", dual_numbers_f2().algebra), ("F2[{1,e}]", idempotent_algebra_f2())):
        out += [(f"{name} search {k}", g) for k, g in enumerate(search_gabi(a))]
    return out


@pytest.mark.criterion(1, "group algebras Q[C_n], n = 2..6")
def test_criterion_1_group_algebras():
    for n in range(2, 7):
        start = time.perf_counter()
        h = group_algebra(n)
        a = h.algebra
        g = gabi_from_one_sided_hopf(h.bialgebra, AntipodeCandidate(h.antipode, Side.TWO_SIDED))
        # delta(g) = g (x) g^{n-1}
        assert g.legs(1) == [(1, n - 1, 1)]
        assert check_gabi(g).passed
        res = derive_hopf(g, Strategy.BETA_INVERSE)
        assert res
        assert res.bialgebra.comul.col(1) == tuple(1 if k == n + 1 else 0 for k in range(n * n))
        assert res.antipode.col(1) == tuple(1 if k == n - 1 else 0 for k in range(n))
        assert res.bialgebra.comul == h.bialgebra.comul and res.antipode == h.antipode
        assert a.dim == n
        assert time.perf_counter() - start < 1.0, f"C{n} too slow"


@pytest.mark.criterion(2, "Sweedler H4 over Q")
def test_criterion_2_sweedler():
    start = time.perf_counter()
    h = sweedler_h4()
    g = h.gabi()
    assert check_gabi(g).passed
    sigma = antipode(g)
    x = [0, 0, 1, 0]
    assert sigma.apply(x) == (0, 0, 0, -1)  # -gx
    assert sigma.apply(sigma.apply(x)) == (0, 0, -1, 0)
    assert invert(sigma) is not None
    for strategy in (Strategy.INVERTIBLE_ANTIPODE, Strategy.BETA_INVERSE):
        res = derive_hopf(g, strategy)
        assert res, strategy
        assert res.bialgebra.comul == h.bialgebra.comul
        assert res.bialgebra.counit == h.bialgebra.counit
        assert res.antipode == h.antipode
    rep = check_double(g, h.mirror_gabi())
    assert rep.passed and rep.facts["interchange-1"] and rep.facts["interchange-2"]
    assert time.perf_counter() - start < 1.0


@pytest.mark.criterion(3, "F2[x]/(x^2) with x primitive")
def test_criterion_3_dual_numbers():
    h = dual_numbers_f2()
    g = h.gabi()
    # x primitive and S = id, so delta(x) = x (x) 1 + 1 (x) x
    assert g.delta.col(1) == (0, 1, 1, 0)
    assert check_gabi(g).passed
    for strategy in Strategy:
        res = derive_hopf(g, strategy)
        assert res and res.bialgebra.comul == h.bialgebra.comul and res.antipode == h.antipode


@pytest.mark.criterion(4, "no gabi structure on F2[{1,e}]")
def test_criterion_4_negative_census():
    start = time.perf_counter()
    census = search_gabi(idempotent_algebra_f2())
    assert time.perf_counter() - start < 1.0
    assert census == [], f"{len(census)} gabi structures found on F2[{{1,e}}]"


@pytest.mark.criterion(5, "monoid corpus: FullLift non-empty iff group")
def test_criterion_5_monoids():
    start = time.perf_counter()
    corpus = [m for m in monoid_corpus() if m.size <= 4 or m.name == "S3"]
    assert {m.name for m in corpus} >= {"C2", "C3", "C4", "Klein4", "S3", "{1,e}", "{1,a,0}"}
    for m in corpus:
        found = search_monoid_gabi(m, Level.FULL, cap=S3_CAP)
        group, _ = is_group(m)
        assert bool(found) == group, m.name
        if group:
            assert [s.delta for s in found] == [group_gabi(m).delta], m.name
    assert time.perf_counter() - start < 10.0


@pytest.mark.criterion(6, "braid equation for every passing gabi structure")
def test_criterion_6_braid():
    structures = passing_gabi_structures()
    assert len(structures) >= 10
    for name, g in structures:
        assert check_gabi(g).passed, name
        n = g.dim
        v = tricocycloid(g).v
        I = Matrix.identity(g.algebra.field, n)
        c = twist(g.algebra.field, n, n)
        lhs = kron(v, I) @ kron(I, c) @ kron(v, I)
        rhs = kron(I, v) @ kron(v, I) @ kron(I, v)
        assert lhs.shape == (n ** 3, n ** 3)
        assert lhs == rhs, name


@pytest.mark.criterion(7, "closed structure lifted to Q[C2]-modules")
def test_criterion_7_closed_structure():
    h = group_algebra(2)
    g = h.gabi()
    a = g.algebra
    mods = [trivial_module(a, g.eps), regular_module(a)]
    for M in mods:
        for N in mods:
            assert check_module(hom_module(g, M, N)).passed
    for M in mods:
        rep = closed_maps_check(g, M, mods)
        assert rep.passed, str(rep)
        rep = adjunction_check(g, M, mods)
        assert rep.passed, str(rep)


@pytest.mark.criterion(8, "normality coherence without FAULT")
def test_criterion_8_normality():
    for name, g in passing_gabi_structures():
        rep = normality_check(g)
        assert not rep.faults, f"{name}: {rep.faults}"
        if rep.facts["beta invertible"]:
            assert rep.facts["all alpha invertible"], name
        if rep.facts["hopf derived"]:
            assert rep.facts["all lambda invertible"], name


def _random_matrix(rng: random.Random, f: FieldSpec) -> Matrix:
    rows, cols = rng.randint(1, 6), rng.randint(1, 6)
    if rng.random() < 0.5:
        cols = rows

    def entry():
        if rng.random() < 0.3:
            return 0
        if f.is_prime:
            return rng.randrange(f.p)
        return Fraction(rng.randint(-9, 9), rng.randint(1, 4))

    data = [[entry() for _ in range(cols)] for _ in range(rows)]
    if rows > 1 and rng.random() < 0.3:
        # force a dependent row
        k = rng.randint(-2, 2)
        data[-1] = [f.norm(f.coerce(k) * f.coerce(x)) for x in data[0]]
    return Matrix.from_values(f, data, cols=cols)


def _linear_algebra_invariants(m: Matrix) -> None:
    f = m.field
    reduced, pivots, r = rref(m)
    assert r == len(pivots) == reduced.rows
    for i, pc in enumerate(pivots):
        assert reduced.col(pc) == tuple(1 if k == i else 0 for k in range(r))
        assert all(x == 0 for x in reduced.data[i][:pc])
    # same row space: stacking adds nothing
    if r:
        assert rank(m.vstack(reduced)) == r
    assert rref(reduced)[0] == reduced
    K = kernel_basis(m)
    assert K.rows + r == m.cols
    if K.rows:
        assert (m @ K.T).is_zero()
        assert rank(K) == K.rows
    if m.rows == m.cols:
        inv = invert(m)
        assert (inv is not None) == (r == m.rows)
        if inv is not None:
            I = Matrix.identity(f, m.rows)
            assert m @ inv == I and inv @ m == I


@pytest.mark.criterion(9, "1000 random exact matrices per field")
def test_criterion_9_linear_algebra():
    start = time.perf_counter()
    rng = random.Random(20240607)
    for f in (QQ, FieldSpec.prime(7)):
        for _ in range(1000):
            _linear_algebra_invariants(_random_matrix(rng, f))
    assert time.perf_counter() - start < 5.0


def _corpus_jobs():
    jobs = []
    for path in fixture_paths("algebras"):
        doc = path.read_text()
        jobs.append(["check-algebra", path])
        if '"gabi"' in doc:
            for command in ("check-gabi", "tricocycloid", "hom-action", "adjunction", "normality"):
                jobs.append([command, path])
            jobs += [["derive-hopf", path, "--strategy", s.value] for s in Strategy]
        elif '"Fp"' in doc:
            jobs += [["search-gabi", path], ["derive-hopf", path]]
        if '"gabi2"' in doc:
            jobs.append(["double-check", path])
    for path in fixture_paths("monoids"):
        for level in ("hom", "full"):
            jobs.append(["set-search", path, "--level", level, "--cap", str(S3_CAP)])
            jobs.append(["set-check", path, "--level", level])
    return [[str(x) for x in job] + ["--format", "structured"] for job in jobs]


@pytest.mark.criterion(10, "CLI structured reports are deterministic")
def test_criterion_10_cli_determinism():
    jobs = _corpus_jobs()
    assert len(jobs) > 60
    first = [run(job) for job in jobs]
    second = [run(job) for job in jobs]
    for job, a, b in zip(jobs, first, second):
        assert a == b, job
        assert a[1] in (0, 1), (job, a[0])
    assert data_dir().is_dir()
