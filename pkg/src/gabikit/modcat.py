"""Left modules over a gabi algebra and the structure lifted to them.

Vectors of M (x) N use the global convention (index s * dim N + t) and a
linear map f: M -> N is stored as a dim N x dim M matrix, flattened row-major
when it is itself a vector of a hom module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .algcore import FinAlgebra, algebra_generators
from .exactalg import InputError, Matrix, QuotientSpace, invert, kron, quotient_by_rows
from .gabi import GabiStructure, Strategy, canonical_beta, check_gabi, derive_hopf
from .coalg import Side
from .report import FAULT, NOTE, Report


@dataclass(frozen=True)
class AModule:
    """Left module with rho(e_i) = action[i]."""

    algebra: FinAlgebra
    dim: int
    action: tuple
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "action", tuple(self.action))
        if len(self.action) != self.algebra.dim:
            raise InputError(f"need {self.algebra.dim} action matrices, got {len(self.action)}")
        for i, r in enumerate(self.action):
            if r.shape != (self.dim, self.dim):
                raise InputError(f"action[{i}] must be {self.dim}x{self.dim}, got {r.shape}")
            if r.field != self.algebra.field:
                raise InputError(f"action[{i}] is over the wrong field")

    def act(self, vec: Sequence) -> Matrix:
        """rho of the algebra element with coefficient vector ``vec``."""
        f = self.algebra.field
        out = Matrix.zeros(f, self.dim, self.dim)
        for c, r in zip(vec, self.action):
            if c:
                out = out + r.scale(c)
        return out

    def __str__(self):
        return self.name or f"module(dim {self.dim})"


@dataclass(frozen=True)
class ABimodule:
    algebra: FinAlgebra
    dim: int
    left: tuple
    right: tuple

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(self.left))
        object.__setattr__(self, "right", tuple(self.right))
        for fam in (self.left, self.right):
            if len(fam) != self.algebra.dim or any(r.shape != (self.dim, self.dim) for r in fam):
                raise InputError("bimodule action families have the wrong shape")

    @property
    def left_module(self) -> AModule:
        return AModule(self.algebra, self.dim, self.left)


@dataclass(frozen=True)
class TensorOverA:
    """P (x)_A M as an explicit quotient of P (x) M."""

    source: ABimodule
    module: AModule
    quotient: QuotientSpace
    action: tuple

    @property
    def dim(self) -> int:
        return self.quotient.dim

    def as_module(self, name: str = "") -> AModule:
        return AModule(self.source.algebra, self.dim, self.action, name)


def _combine(a: FinAlgebra, fam: Sequence[Matrix], vec: Sequence, rows: int, cols: int) -> Matrix:
    out = Matrix.zeros(a.field, rows, cols)
    for c, r in zip(vec, fam):
        if c:
            out = out + r.scale(c)
    return out


def _check_actions(rep: Report, a: FinAlgebra, fam, dim: int, label: str, reverse: bool = False) -> None:
    n = a.dim
    I = Matrix.identity(a.field, dim)
    if _combine(a, fam, a.unit, dim, dim) != I:
        rep.fail(f"{label}unit", "1", "rho(1) != id")
    for i, j in itertools.product(range(n), repeat=2):
        lhs = fam[j] @ fam[i] if reverse else fam[i] @ fam[j]
        if lhs != _combine(a, fam, a.table[i][j], dim, dim):
            how = "r(e_j) r(e_i) != r(e_i e_j)" if reverse else "rho(e_i) rho(e_j) != rho(e_i e_j)"
            rep.fail(f"{label}multiplicative", f"({a.name(i)},{a.name(j)})", how)


def check_module(m: AModule) -> Report:
    rep = Report(f"module {m}")
    _check_actions(rep, m.algebra, m.action, m.dim, "")
    return rep


def check_bimodule(b: ABimodule) -> Report:
    a = b.algebra
    rep = Report("bimodule")
    _check_actions(rep, a, b.left, b.dim, "left ")
    _check_actions(rep, a, b.right, b.dim, "right ", reverse=True)
    for i, j in itertools.product(range(a.dim), repeat=2):
        if b.left[i] @ b.right[j] != b.right[j] @ b.left[i]:
            rep.fail("commuting actions", f"({a.name(i)},{a.name(j)})", "left and right actions do not commute")
    return rep


def is_module_map(f: Matrix, src: AModule, tgt: AModule) -> int | None:
    """First basis index where f fails to commute with the actions, or None."""
    if f.shape != (tgt.dim, src.dim):
        raise InputError(f"map of shape {f.shape} is not {src.dim} -> {tgt.dim}")
    for i in range(src.algebra.dim):
        if f @ src.action[i] != tgt.action[i] @ f:
            return i
    return None


def regular_module(a: FinAlgebra) -> AModule:
    return AModule(a, a.dim, tuple(a.left_mult(i) for i in range(a.dim)), "regular")


def trivial_module(a: FinAlgebra, eps: Matrix) -> AModule:
    """The ground field with e_i acting as eps(e_i)."""
    return AModule(a, 1, tuple(Matrix(a.field, [[eps[0, i]]], cols=1) for i in range(a.dim)), "trivial")


def zero_module(a: FinAlgebra) -> AModule:
    return AModule(a, 0, tuple(Matrix(a.field, [], cols=0) for _ in range(a.dim)), "zero")


def regular_bimodule(a: FinAlgebra) -> ABimodule:
    return ABimodule(a, a.dim, [a.left_mult(i) for i in range(a.dim)], [a.right_mult(i) for i in range(a.dim)])


def _require(g: GabiStructure, *modules: AModule) -> None:
    if g.side is not Side.LEFT:
        raise InputError("module constructions need a left gabi structure")
    for m in modules:
        if m.algebra != g.algebra:
            raise InputError(f"{m} lives over a different algebra")


def hom_module(g: GabiStructure, M: AModule, N: AModule) -> AModule:
    """Hom(M, N) with (a.f) = sum rho_N(a_+) f rho_M(a_-)."""
    _require(g, M, N)
    a = g.algebra
    f = a.field
    dim = M.dim * N.dim
    # vec(X f Y) = (X (x) Y^T) vec(f) for row-major vec
    transposed = [r.T for r in M.action]
    action = []
    for i in range(a.dim):
        acc = Matrix.zeros(f, dim, dim)
        for p, q, c in g.legs(i):
            acc = acc + kron(N.action[p], transposed[q]).scale(c)
        action.append(acc)
    return AModule(a, dim, action, f"Hom({M},{N})")


def hom_vector(f: Matrix) -> tuple:
    """Row-major flattening of a linear map."""
    return tuple(x for row in f.data for x in row)


def hom_matrix(vec: Sequence, src_dim: int, tgt_dim: int, field) -> Matrix:
    return Matrix(field, [vec[r * src_dim:(r + 1) * src_dim] for r in range(tgt_dim)], cols=src_dim)


def postcompose(h: Matrix, src_dim: int) -> Matrix:
    """Hom(M, N) -> Hom(M, N'), f -> h f, for M of dimension src_dim."""
    return kron(h, Matrix.identity(h.field, src_dim))


def _default_modules(g: GabiStructure, extra: Sequence[AModule] | None) -> list[AModule]:
    mods = [trivial_module(g.algebra, g.eps), regular_module(g.algebra)]
    return mods + list(extra or [])


def closed_maps_check(g: GabiStructure, M: AModule, test_modules: Sequence[AModule] | None = None) -> Report:
    """A-linearity of i_M(f) = f(1), j_M(1) = id_M and Gamma(f) = f o -.

    ``test_modules`` defaults to the trivial and regular modules; N and P
    range over it for the Gamma components Hom(N,P) -> Hom(Hom(M,N), Hom(M,P)).
    """
    _require(g, M)
    a = g.algebra
    f = a.field
    rep = Report(f"closed structure on {M}")
    k = trivial_module(a, g.eps)
    mods = list(test_modules) if test_modules is not None else _default_modules(g, None)
    i_map = Matrix.identity(f, M.dim)
    bad = is_module_map(i_map, hom_module(g, k, M), M)
    if bad is not None:
        rep.fail("i", a.name(bad), f"i_{M} is not A-linear")
    j_map = Matrix.column(f, hom_vector(Matrix.identity(f, M.dim)))
    bad = is_module_map(j_map, k, hom_module(g, M, M))
    if bad is not None:
        rep.fail("j", a.name(bad), f"j_{M} is not A-linear")
    for N, P in itertools.product(mods, repeat=2):
        bad = _gamma_violation(g, M, N, P)
        if bad is not None:
            rep.fail("Gamma", f"{a.name(bad)} on ({N},{P})", "Gamma is not A-linear")
    return rep


def _gamma_violation(g: GabiStructure, M: AModule, N: AModule, P: AModule) -> int | None:
    """First basis index where Gamma fails to be A-linear, or None.

    The action on Hom(Hom(M,N), Hom(M,P)) is applied to Gamma(f) as a map,
    a.F = sum a_+ F a_-, so the big hom module is never materialized.
    """
    a = g.algebra
    f = a.field
    HN, HP, NP = hom_module(g, M, N), hom_module(g, M, P), hom_module(g, N, P)
    for i in range(a.dim):
        legs = g.legs(i)
        for idx in range(NP.dim):
            lhs = postcompose(hom_matrix(NP.action[i].col(idx), N.dim, P.dim, f), M.dim)
            basis = hom_matrix(_unit(f, NP.dim, idx), N.dim, P.dim, f)
            F = postcompose(basis, M.dim)
            rhs = Matrix.zeros(f, HP.dim, HN.dim)
            for p, q, c in legs:
                rhs = rhs + (HP.action[p] @ F @ HN.action[q]).scale(c)
            if lhs != rhs:
                return i
    return None


def gamma_map(M: AModule, N: AModule, P: AModule) -> Matrix:
    """Hom(N,P) -> Hom(Hom(M,N), Hom(M,P)), f -> (h -> f h)."""
    f = M.algebra.field
    cols = []
    for idx in range(P.dim * N.dim):
        unit = [f.zero] * (P.dim * N.dim)
        unit[idx] = f.one
        cols.append(hom_vector(postcompose(hom_matrix(unit, N.dim, P.dim, f), M.dim)))
    return Matrix.from_columns(f, cols, (P.dim * M.dim) * (N.dim * M.dim))


def odot(g: GabiStructure, M: AModule) -> ABimodule:
    """A (x) M with a.(b (x) m) = ab (x) m and (b (x) m).c = b c_+ (x) c_- m."""
    _require(g, M)
    a = g.algebra
    f = a.field
    dim = a.dim * M.dim
    I = Matrix.identity(f, M.dim)
    left = [kron(a.left_mult(i), I) for i in range(a.dim)]
    right = []
    for i in range(a.dim):
        acc = Matrix.zeros(f, dim, dim)
        for p, q, c in g.legs(i):
            acc = acc + kron(a.right_mult(p), M.action[q]).scale(c)
        right.append(acc)
    return ABimodule(a, dim, left, right)


def _sparse_columns(m: Matrix) -> list[list[tuple[int, object]]]:
    cols: list[list[tuple[int, object]]] = [[] for _ in range(m.cols)]
    for i, row in enumerate(m._nonzero):
        for j, x in row:
            cols[j].append((i, x))
    return cols


def tensor_over_A(P: ABimodule, M: AModule, generators: Sequence[int] | None = None) -> TensorOverA:
    """P (x)_A M: quotient of P (x) M by p.a (x) m - p (x) a.m.

    Relations are generated by the algebra generators only; the relation for
    a product ab lies in the span of those for a and b, so the quotient is
    the same as with every basis element.
    """
    a = P.algebra
    if M.algebra != a:
        raise InputError("bimodule and module live over different algebras")
    f = a.field
    norm = f.norm
    gens = algebra_generators(a) if generators is None else list(generators)
    m = M.dim
    rows = []
    for i in gens:
        R, act = _sparse_columns(P.right[i]), _sparse_columns(M.action[i])
        # image of e_p (x) e_l under (r_i (x) 1) - (1 (x) a_i)
        for p, l in itertools.product(range(P.dim), range(m)):
            v: dict[int, object] = {}
            for r, x in R[p]:
                v[r * m + l] = v.get(r * m + l, 0) + x
            for t, x in act[l]:
                v[p * m + t] = v.get(p * m + t, 0) - x
            v = {k: norm(x) for k, x in v.items() if x}
            if v:
                rows.append(v)
    q = quotient_by_rows(f, P.dim * m, rows)
    # reduce o (L (x) 1) o section, where the section sends coordinate k to
    # the ambient unit vector at the k-th free column
    red = _sparse_columns(q.reduce)
    action = []
    for L in P.left:
        Lc = _sparse_columns(L)
        cols = []
        for fc in q.free_cols:
            p, l = divmod(fc, m)
            acc: dict[int, object] = {}
            for r, x in Lc[p]:
                for k, y in red[r * m + l]:
                    acc[k] = acc.get(k, 0) + x * y
            col = [f.zero] * q.dim
            for k, z in acc.items():
                col[k] = norm(z)
            cols.append(col)
        action.append(Matrix.from_columns(f, cols, q.dim) if cols else Matrix.zeros(f, q.dim, q.dim))
    return TensorOverA(P, M, q, tuple(action))


def induced_action_well_defined(t: TensorOverA) -> bool:
    """The left action of P maps every relation into the relation span."""
    q = t.quotient
    Im = Matrix.identity(q.reduce.field, t.module.dim)
    rel_cols = q.relations.T
    return all((q.reduce @ kron(L, Im) @ rel_cols).is_zero() for L in t.source.left)


def functor_on_map(src: TensorOverA, tgt: TensorOverA, h: Matrix) -> Matrix:
    """(P (x)_A h): P (x)_A M -> P (x)_A M' for a module map h: M -> M'."""
    I = Matrix.identity(h.field, src.source.dim)
    return tgt.quotient.reduce @ kron(I, h) @ src.quotient.section


def boxtimes(g: GabiStructure, M: AModule, N: AModule) -> TensorOverA:
    """M [x] N = (A odot N) (x)_A M."""
    return tensor_over_A(odot(g, N), M)


def unit_map(g: GabiStructure, M: AModule, N: AModule, F_N: TensorOverA | None = None) -> Matrix:
    """coev: N -> Hom(M, (A odot M) (x)_A N), n -> (m -> (1 odot m) (x) n)."""
    a = g.algebra
    f = a.field
    F_N = F_N or tensor_over_A(odot(g, M), N)
    red = F_N.quotient.reduce
    u = a.unit_matrix
    cols = []
    for t in range(N.dim):
        images = red @ kron(u, Matrix.identity(f, M.dim), Matrix.column(f, _unit(f, N.dim, t)))
        cols.append(hom_vector(images))
    return Matrix.from_columns(f, cols, F_N.dim * M.dim)


def counit_map(g: GabiStructure, M: AModule, P: AModule, F_GP: TensorOverA | None = None) -> Matrix:
    """ev: (A odot M) (x)_A Hom(M, P) -> P, (a odot m) (x) f -> a f(m)."""
    a = g.algebra
    f = a.field
    if F_GP is None:
        F_GP = tensor_over_A(odot(g, M), hom_module(g, M, P))
    mM, mP = M.dim, P.dim
    hom_dim = mM * mP
    cols = []
    for b in range(a.dim):
        for s in range(mM):
            for idx in range(hom_dim):
                r, s2 = divmod(idx, mM)
                cols.append(P.action[b].col(r) if s2 == s else (f.zero,) * mP)
    amb = Matrix.from_columns(f, cols, mP)
    return amb @ F_GP.quotient.section


def _unit(f, n: int, i: int) -> list:
    return [f.one if k == i else f.zero for k in range(n)]


def adjunction_check(
    g: GabiStructure,
    M: AModule,
    test_modules: Sequence[AModule] | None = None,
    counit: Callable[[AModule], Matrix] | None = None,
) -> Report:
    """Unit/counit linearity and both triangle identities of
    (A odot M) (x)_A - left adjoint to Hom(M, -), for each test module.

    ``counit`` overrides the counit component for a module P, which lets a
    deliberately broken evaluation be checked.
    """
    _require(g, M)
    a = g.algebra
    f = a.field
    rep = Report(f"adjunction for {M}")
    mods = list(test_modules) if test_modules is not None else _default_modules(g, None)
    left = odot(g, M)

    def F(X):
        return tensor_over_A(left, X)

    def G(X):
        return hom_module(g, M, X)

    def ev(P, F_GP=None):
        return counit(P) if counit is not None else counit_map(g, M, P, F_GP)

    for X in mods:
        FX = F(X)
        FXm = FX.as_module()
        GX = G(X)
        coev = unit_map(g, M, X, FX)
        bad = is_module_map(coev, X, G(FXm))
        if bad is not None:
            rep.fail("unit linearity", f"{a.name(bad)} on {X}", "coev is not A-linear")
        F_GX = F(GX)
        ev_X = ev(X, F_GX)
        bad = is_module_map(ev_X, F_GX.as_module(), X)
        if bad is not None:
            rep.fail("counit linearity", f"{a.name(bad)} on {X}", "ev is not A-linear")
        # ev_{F X} o F(coev_X) = id
        G_FX = G(FXm)
        F_G_FX = F(G_FX)
        lhs = ev(FXm, F_G_FX) @ functor_on_map(FX, F_G_FX, coev)
        j = lhs.first_mismatched_column(Matrix.identity(f, FX.dim))
        if j is not None:
            rep.fail("triangle F", f"{j} on {X}", "ev_F o F(coev) != id")
        # G(ev_X) o coev_{G X} = id
        coev_G = unit_map(g, M, GX, F_GX)
        lhs = postcompose(ev_X, M.dim) @ coev_G
        j = lhs.first_mismatched_column(Matrix.identity(f, GX.dim))
        if j is not None:
            rep.fail("triangle G", f"{j} on {X}", "G(ev) o coev_G != id")
    return rep


@dataclass
class BoxtimesConstraints:
    lam: Matrix
    rho: Matrix
    alpha: Matrix
    report: Report = field(default_factory=lambda: Report("constraints"))


def left_unitor(g: GabiStructure, N: AModule, kN: TensorOverA | None = None) -> Matrix:
    """lambda_N: k [x] N -> N, (a odot n) (x) 1 -> a n."""
    a = g.algebra
    kN = kN or boxtimes(g, trivial_module(a, g.eps), N)
    cols = [N.action[b].col(t) for b in range(a.dim) for t in range(N.dim)]
    return Matrix.from_columns(a.field, cols, N.dim) @ kN.quotient.section


def right_unitor(g: GabiStructure, M: AModule, Mk: TensorOverA | None = None) -> Matrix:
    """rho_M: M -> M [x] k, m -> (1 odot 1) (x) m."""
    a = g.algebra
    Mk = Mk or boxtimes(g, M, trivial_module(a, g.eps))
    return Mk.quotient.reduce @ kron(a.unit_matrix, Matrix.identity(a.field, M.dim))


def associator(g: GabiStructure, L: AModule, M: AModule, N: AModule, parts=None) -> tuple[Matrix, bool]:
    """alpha: (L [x] M) [x] N -> L [x] (M [x] N) and whether it is well defined.

    (a odot n) (x) ((b odot m) (x) l) -> (a b_+ odot ((1 odot b_- n) (x) m)) (x) l.
    Well-definedness is checked on the relations of both quotients.
    """
    a = g.algebra
    f = a.field
    n = a.dim
    LM, MN, src, tgt = parts or _assoc_parts(g, L, M, N)
    mN, mM, mL = N.dim, M.dim, L.dim
    # w[q][t*mM + s] = coordinates of (1 odot rho_N(e_q) n_t) (x) m_s in M [x] N
    w = [MN.quotient.reduce @ kron(a.unit_matrix, N.action[q], Matrix.identity(f, mM)) for q in range(n)]
    dMN = MN.dim
    tgt_amb = n * dMN * mL
    table = a.table

    def image(a_idx: int, t: int, b: int, s: int, l: int) -> dict:
        out: dict = {}
        for p, q, c in g.legs(b):
            wcol = w[q].col(t * mM + s)
            for cidx, x in enumerate(table[a_idx][p]):
                if not x:
                    continue
                for widx, y in enumerate(wcol):
                    if y:
                        key = (cidx * dMN + widx) * mL + l
                        out[key] = out.get(key, 0) + c * x * y
        return out

    inner_dim = n * mM * mL
    inner_cache: dict = {}

    def image_of_inner(a_idx: int, t: int, vec: Sequence) -> dict:
        acc: dict = {}
        for j, c in enumerate(vec):
            if not c:
                continue
            key = (a_idx, t, j)
            if key not in inner_cache:
                b, rest = divmod(j, mM * mL)
                s, l = divmod(rest, mL)
                inner_cache[key] = image(a_idx, t, b, s, l)
            for k, v in inner_cache[key].items():
                acc[k] = acc.get(k, 0) + c * v
        return acc

    def columns(sparse_cols: list) -> Matrix:
        data = [[f.zero] * len(sparse_cols) for _ in range(tgt_amb)]
        for j, col in enumerate(sparse_cols):
            for k, v in col.items():
                data[k][j] = f.norm(v)
        return Matrix(f, data, cols=len(sparse_cols))

    sec = LM.quotient.section
    src_amb_cols = []
    for a_idx in range(n):
        for t in range(mN):
            for qcol in range(LM.dim):
                src_amb_cols.append(image_of_inner(a_idx, t, sec.col(qcol)))
    amb = columns(src_amb_cols)
    alpha = tgt.quotient.reduce @ amb @ src.quotient.section
    ok = (tgt.quotient.reduce @ amb @ src.quotient.relations.T).is_zero()
    if ok:
        inner_rel = LM.quotient.relations
        cols = [image_of_inner(a_idx, t, r) for a_idx in range(n) for t in range(mN) for r in inner_rel.data]
        if cols:
            ok = (tgt.quotient.reduce @ columns(cols)).is_zero()
    return alpha, ok


def _assoc_parts(g, L, M, N):
    LM = boxtimes(g, L, M)
    MN = boxtimes(g, M, N)
    src = boxtimes(g, LM.as_module(), N)
    tgt = boxtimes(g, L, MN.as_module())
    return LM, MN, src, tgt


def boxtimes_constraints(g: GabiStructure, L: AModule, M: AModule, N: AModule) -> BoxtimesConstraints:
    """lambda_N, rho_M and alpha_{L,M,N} with linearity and well-definedness checks."""
    _require(g, L, M, N)
    a = g.algebra
    k = trivial_module(a, g.eps)
    rep = Report("skew-monoidal constraints")
    kN = boxtimes(g, k, N)
    lam = left_unitor(g, N, kN)
    amb_ok = induced_action_well_defined(kN)
    if not amb_ok or is_module_map(lam, kN.as_module(), N) is not None:
        rep.fail("lambda", str(N), "lambda is not a well-defined A-linear map")
    Mk = boxtimes(g, M, k)
    rho = right_unitor(g, M, Mk)
    if is_module_map(rho, M, Mk.as_module()) is not None:
        rep.fail("rho", str(M), "rho is not A-linear")
    if invert(rho) is None:
        rep.fail("rho invertible", str(M), "rho is singular", FAULT)
    parts = _assoc_parts(g, L, M, N)
    alpha, ok = associator(g, L, M, N, parts)
    if not ok:
        rep.fail("alpha", f"({L},{M},{N})", "alpha is not well defined on the quotients")
    elif is_module_map(alpha, parts[2].as_module(), parts[3].as_module()) is not None:
        rep.fail("alpha", f"({L},{M},{N})", "alpha is not A-linear")
    return BoxtimesConstraints(lam, rho, alpha, rep)


def normality_check(g: GabiStructure, test_modules: Sequence[AModule] | None = None) -> Report:
    """Invertibility of beta, sampled alpha and lambda components, and Hopf derivation.

    The module sample is the trivial and regular modules plus ``test_modules``.
    An invertible beta with a singular sampled alpha, or a derived Hopf
    structure with a singular sampled lambda, is a FAULT.
    """
    rep = Report("normality (sampled)")
    pre = check_gabi(g)
    if not pre.passed:
        rep.absorb(pre, "gabi ")
        return rep
    _require(g, *(test_modules or ()))
    mods = _default_modules(g, test_modules)
    beta_inv = invert(canonical_beta(g)) is not None
    hopf = derive_hopf(g, Strategy.BETA_INVERSE)
    alpha_all = True
    lam_all = True
    rep.facts["beta invertible"] = beta_inv
    rep.facts["hopf derived"] = bool(hopf)
    rep.facts["sample size"] = len(mods)
    seen_lambda = set()
    for L, M, N in itertools.product(range(len(mods)), repeat=3):
        bc = boxtimes_constraints(g, mods[L], mods[M], mods[N])
        rep.absorb(bc.report)
        if invert(bc.alpha) is None:
            alpha_all = False
            sev = FAULT if beta_inv else NOTE
            rep.fail("alpha invertible", f"({mods[L]},{mods[M]},{mods[N]})", "sampled alpha is singular", sev)
        if N not in seen_lambda:
            seen_lambda.add(N)
            if invert(bc.lam) is None:
                lam_all = False
                sev = FAULT if hopf else NOTE
                rep.fail("lambda invertible", str(mods[N]), "sampled lambda is singular", sev)
    rep.facts["all alpha invertible"] = alpha_all
    rep.facts["all lambda invertible"] = lam_all
    return rep
