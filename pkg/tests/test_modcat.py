from __future__ import annotations

import itertools

import pytest

from gabikit.algcore import algebra_generators
from gabikit.exactalg import QQ, InputError, Matrix, invert, kron, rank
from gabikit.gabi import GabiStructure
from gabikit.modcat import (
    AModule,
    _gamma_violation,
    adjunction_check,
    boxtimes,
    boxtimes_constraints,
    check_bimodule,
    check_module,
    closed_maps_check,
    counit_map,
    gamma_map,
    hom_module,
    induced_action_well_defined,
    is_module_map,
    normality_check,
    odot,
    postcompose,
    regular_bimodule,
    regular_module,
    tensor_over_A,
    trivial_module,
    zero_module,
)


def modules(g):
    return trivial_module(g.algebra, g.eps), regular_module(g.algebra)


def test_module_examples(c2):
    g = c2.gabi()
    k, R = modules(g)
    assert check_module(R).passed and check_module(k).passed
    bad = AModule(c2.algebra, 2, [Matrix.identity(QQ, 2), Matrix.from_values(QQ, [[0, 1], [1, 1]])])
    rep = check_module(bad)
    assert rep.failed("multiplicative")
    assert any(f.witness == "(g,g)" for f in rep.findings)


def test_module_shape_errors(c2):
    with pytest.raises(InputError):
        AModule(c2.algebra, 2, [Matrix.identity(QQ, 2)])


def test_hom_examples(c2):
    g = c2.gabi()
    k, R = modules(g)
    swap = Matrix.from_values(QQ, [[0, 1], [1, 0]])
    # (g.f)(1) = f(g . 1) for f: regular -> trivial
    assert hom_module(g, R, k).action[1] == swap
    assert hom_module(g, k, k).action[1] == Matrix.identity(QQ, 1)
    assert hom_module(g, k, R).action[1] == c2.algebra.left_mult(1)


def test_hom_action_by_definition(h4):
    """a.f computed from the Sweedler legs on explicit matrices."""
    g = h4.gabi()
    k, R = modules(g)
    H = hom_module(g, R, R)
    for i in range(4):
        for idx in range(16):
            f = Matrix(QQ, [[1 if r * 4 + c == idx else 0 for c in range(4)] for r in range(4)], cols=4)
            expect = Matrix.zeros(QQ, 4, 4)
            for p, q, c in g.legs(i):
                expect = expect + (R.action[p] @ f @ R.action[q]).scale(c)
            got = H.action[i].col(idx)
            assert list(got) == [x for row in expect.data for x in row]


def test_hom_modules_are_modules(small_hopf):
    g = small_hopf.gabi()
    for M, N in itertools.product(modules(g), repeat=2):
        assert check_module(hom_module(g, M, N)).passed


def test_closed_maps(small_hopf, point):
    g = small_hopf.gabi()
    for M in modules(g):
        assert closed_maps_check(g, M).passed
    assert closed_maps_check(point, trivial_module(point.algebra, point.eps)).passed


def test_closed_maps_detect_non_gabi(c2):
    a = c2.algebra
    delta = Matrix.from_columns(QQ, [[1, 0, 0, 0], [0, 0, 1, 0]], 4)  # g -> g (x) 1
    g = GabiStructure(a, delta, c2.bialgebra.counit)
    R = regular_module(a)
    rep = closed_maps_check(g, R)
    assert rep.failed("j")


def test_gamma_direct_matches_materialized(c2, h4):
    for hopf in (c2, h4):
        g = hopf.gabi()
        k, R = modules(g)
        for N, P in itertools.product((k, R), repeat=2):
            M = R if hopf is c2 else k
            src = hom_module(g, N, P)
            tgt = hom_module(g, hom_module(g, M, N), hom_module(g, M, P))
            assert is_module_map(gamma_map(M, N, P), src, tgt) is None
            assert _gamma_violation(g, M, N, P) is None


def test_postcomposition_is_linear(h4):
    """Functoriality: a module map N -> N' induces a module map on Hom(M, -)."""
    g = h4.gabi()
    k, R = modules(g)
    a = h4.algebra
    # right multiplication by any element is a left-module endomorphism of R
    for j in range(4):
        h = a.right_mult(j)
        assert is_module_map(h, R, R) is None
        for M in (k, R):
            assert is_module_map(postcompose(h, M.dim), hom_module(g, M, R), hom_module(g, M, R)) is None
    # the counit is a module map R -> k
    assert is_module_map(g.eps, R, k) is None
    assert is_module_map(postcompose(g.eps, 4), hom_module(g, R, R), hom_module(g, R, k)) is None


def test_odot_examples(c2):
    g = c2.gabi()
    k, R = modules(g)
    Ak = odot(g, k)
    # A odot k is A with the regular actions on both sides
    assert Ak.right == regular_bimodule(c2.algebra).right
    AR = odot(g, R)
    assert check_bimodule(AR).passed
    # right action by 1 is the identity
    assert AR.right[0] == Matrix.identity(QQ, 4)
    # (1 (x) 1) . g = g (x) g
    assert AR.right[1].apply([1, 0, 0, 0]) == (0, 0, 0, 1)


def test_odot_collapse_on_trivial(hopf):
    g = hopf.gabi()
    a = g.algebra
    b = odot(g, trivial_module(a, g.eps))
    assert check_bimodule(b).passed
    for i in range(a.dim):
        assert b.right[i] == a.right_mult(i)


def test_tensor_over_regular_bimodule(h4):
    g = h4.gabi()
    a = h4.algebra
    for M in modules(g):
        t = tensor_over_A(regular_bimodule(a), M)
        assert t.dim == M.dim
        # a (x) m -> a m descends to an isomorphism
        act = Matrix.from_columns(QQ, [M.action[b].col(s) for b in range(4) for s in range(M.dim)], M.dim)
        iso = act @ t.quotient.section
        assert invert(iso) is not None
        assert is_module_map(iso, t.as_module(), M) is None


def test_tensor_examples(c2):
    g = c2.gabi()
    k, R = modules(g)
    assert tensor_over_A(odot(g, k), R).dim == 2
    z = tensor_over_A(odot(g, k), zero_module(c2.algebra))
    assert z.dim == 0


def test_generator_relations_span_everything(h4):
    g = h4.gabi()
    k, R = modules(g)
    P = odot(g, R)
    full = tensor_over_A(P, R, generators=range(4))
    gens = tensor_over_A(P, R)
    assert algebra_generators(h4.algebra) != list(range(4))
    assert full.quotient.relations == gens.quotient.relations
    assert induced_action_well_defined(gens)
    assert check_module(gens.as_module()).passed


def test_adjunction(small_hopf):
    g = small_hopf.gabi()
    for M in modules(g):
        rep = adjunction_check(g, M)
        assert rep.passed, str(rep)


def test_adjunction_trivial_source(c2):
    g = c2.gabi()
    k, R = modules(g)
    assert adjunction_check(g, k, [R]).passed


def test_adjunction_detects_sign_flip(c2):
    g = c2.gabi()
    k, R = modules(g)
    rep = adjunction_check(g, R, [k], counit=lambda P: -counit_map(g, R, P))
    assert rep.failed("triangle F") and rep.failed("triangle G")


def test_constraints_on_trivial_modules(c2):
    g = c2.gabi()
    k, _ = modules(g)
    bc = boxtimes_constraints(g, k, k, k)
    assert bc.report.passed
    one = Matrix.identity(QQ, 1)
    assert bc.lam.shape == bc.rho.shape == bc.alpha.shape == (1, 1)
    assert bc.lam == one and bc.rho == one and bc.alpha == one


def test_constraints_regular(small_hopf):
    g = small_hopf.gabi()
    k, R = modules(g)
    bc = boxtimes_constraints(g, R, R, R)
    assert bc.report.passed, str(bc.report)
    assert invert(bc.lam) is not None
    assert invert(bc.rho) is not None
    assert invert(bc.alpha) is not None


def test_boxtimes_dimension(c2):
    g = c2.gabi()
    k, R = modules(g)
    # for a Hopf algebra M [x] N has dimension dim M * dim N
    for M, N in itertools.product((k, R), repeat=2):
        assert boxtimes(g, M, N).dim == M.dim * N.dim


def test_normality_examples(c2, h4, point):
    for g in (c2.gabi(), h4.gabi(), point):
        rep = normality_check(g)
        assert rep.passed
        for key in ("beta invertible", "hopf derived", "all alpha invertible", "all lambda invertible"):
            assert rep.facts[key], key


def test_normality_on_non_gabi(c2):
    a = c2.algebra
    delta = Matrix.from_columns(QQ, [[1, 0, 0, 0], [0, 0, 1, 0]], 4)
    rep = normality_check(GabiStructure(a, delta, c2.bialgebra.counit))
    assert not rep.passed


def test_rank_of_relation_matrix(c2):
    g = c2.gabi()
    k, R = modules(g)
    t = tensor_over_A(odot(g, k), R)
    assert rank(t.quotient.relations) == 2
    assert t.quotient.relations.cols == 4


def test_algebra_mismatch(c2, h4):
    with pytest.raises(InputError):
        hom_module(c2.gabi(), regular_module(h4.algebra), regular_module(c2.algebra))
    with pytest.raises(InputError):
        tensor_over_A(regular_bimodule(c2.algebra), regular_module(h4.algebra))


def test_kron_sanity_for_hom_vectorisation():
    x = Matrix.from_values(QQ, [[1, 2], [3, 4]])
    f = Matrix.from_values(QQ, [[0, 1], [5, 0]])
    y = Matrix.from_values(QQ, [[2, 0], [1, 1]])
    flat = [v for row in f.data for v in row]
    lhs = [v for row in (x @ f @ y).data for v in row]
    assert list(kron(x, y.T).apply(flat)) == lhs
