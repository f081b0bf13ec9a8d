"""Gabi structures: axioms, antipode, canonical map, Hopf derivation,
tricocycloid, double structures and exhaustive search over F_p.

A left structure stores delta: A -> A (x) A^op as an n^2 x n matrix whose
column a holds a_+ (x) a_- (left factor major). A right structure stores
delta': A -> A^op (x) A with column a holding a_- (x) a_+.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .algcore import FinAlgebra, is_algebra_map, is_augmentation, opposite, tensor_algebra
from .coalg import BialgebraData, Side, check_bialgebra, convolution
from .exactalg import InputError, Matrix, invert, kron, twist
from .report import NOTE, Report

DEFAULT_SEARCH_CAP = 2**24


@dataclass(frozen=True)
class GabiStructure:
    algebra: FinAlgebra
    delta: Matrix
    eps: Matrix
    side: Side = Side.LEFT

    def __post_init__(self):
        n = self.algebra.dim
        if self.side not in (Side.LEFT, Side.RIGHT):
            raise InputError("a gabi structure is either left or right")
        if self.delta.shape != (n * n, n):
            raise InputError(f"delta must be {n * n}x{n}, got {self.delta.shape}")
        if self.eps.shape != (1, n):
            raise InputError(f"eps must be 1x{n}, got {self.eps.shape}")
        if self.delta.field != self.algebra.field or self.eps.field != self.algebra.field:
            raise InputError("field mismatch in gabi data")

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def as_left(self) -> GabiStructure:
        """Right structures on A are left structures on A^op with legs swapped."""
        if self.side is Side.LEFT:
            return self
        n = self.dim
        return GabiStructure(opposite(self.algebra), twist(self.algebra.field, n, n) @ self.delta, self.eps, Side.LEFT)

    def legs(self, a: int) -> list[tuple[int, int, object]]:
        """Nonzero terms (p, q, c) of delta(e_a) = sum c e_p (x) e_q."""
        n = self.dim
        return [(pq // n, pq % n, c) for pq, c in enumerate(self.delta.col(a)) if c]


class Strategy(enum.Enum):
    BETA_INVERSE = "beta"
    COMMUTATIVE = "commutative"
    INVERTIBLE_ANTIPODE = "inv-antipode"


@dataclass
class HopfResult:
    bialgebra: BialgebraData
    antipode: Matrix
    provenance: Strategy
    report: Report = field(default_factory=lambda: Report("hopf"))

    def __bool__(self):
        return True


@dataclass
class NotApplicable:
    """A theorem's hypothesis failed, so no Hopf structure was derived."""

    gate: str
    detail: str
    report: Report | None = None

    def __bool__(self):
        return False


@dataclass(frozen=True)
class TricocycloidData:
    v: Matrix
    eta: tuple
    eps: Matrix

    @property
    def dim(self) -> int:
        return self.eps.cols


@lru_cache(maxsize=64)
def _delta_target(a: FinAlgebra) -> FinAlgebra:
    return tensor_algebra(a, opposite(a))


def ga3_sides(g: GabiStructure) -> tuple[Matrix, Matrix]:
    """Both sides of GA3 as n -> n^3 matrices for a left structure.

    Left side: a_{++} (x) a_{-+} (x) a_{--} a_{+-}; right side: a_+ (x) a_- (x) 1.
    """
    a = g.algebra
    n = a.dim
    f = a.field
    legs = [g.legs(i) for i in range(n)]
    cols = []
    for i in range(n):
        acc = {}
        for p, q, c in legs[i]:
            for p1, p2, c1 in legs[p]:
                for q1, q2, c2 in legs[q]:
                    w = c * c1 * c2
                    base = (p1 * n + q1) * n
                    for k, t in enumerate(a.table[q2][p2]):
                        if t:
                            acc[base + k] = acc.get(base + k, 0) + w * t
        col = [f.zero] * (n ** 3)
        for idx, x in acc.items():
            col[idx] = f.norm(x)
        cols.append(col)
    lhs = Matrix.from_columns(f, cols, n ** 3)
    rhs = kron(Matrix.identity(f, n * n), a.unit_matrix) @ g.delta
    return lhs, rhs


def _check_left(g: GabiStructure, prime: str = "") -> Report:
    a = g.algebra
    n = a.dim
    I = a.identity
    rep = Report("gabi" + (" (right)" if prime else ""))
    rep.absorb(is_augmentation(g.eps, a), "augmentation ")
    rep.absorb(is_algebra_map(g.delta, a, _delta_target(a)), "delta ")
    j = (kron(I, g.eps) @ g.delta).first_mismatched_column(I)
    if j is not None:
        rep.fail("GA1" + prime, a.name(j), f"{a.name(j)}_+ eps({a.name(j)}_-) != {a.name(j)}")
    j = (a.mul_matrix @ g.delta).first_mismatched_column(a.unit_matrix @ g.eps)
    if j is not None:
        nm = a.name(j)
        rep.fail("GA2" + prime, nm, f"{nm}_+ {nm}_- != eps({nm}) 1")
    lhs, rhs = ga3_sides(g)
    j = lhs.first_mismatched_column(rhs)
    if j is not None:
        nm = a.name(j)
        rep.fail("GA3" + prime, nm, f"{nm}_++ (x) {nm}_-+ (x) {nm}_-- {nm}_+- != {nm}_+ (x) {nm}_- (x) 1")
    return rep


def check_gabi(g: GabiStructure) -> Report:
    """Augmentation, delta multiplicative, GA1-GA3 (GA1'-GA3' for right structures)."""
    if g.side is Side.RIGHT:
        rep = _check_left(g.as_left(), prime="'")
        rep.title = "gabi (right)"
        return rep
    return _check_left(g)


def _require_left(g: GabiStructure, what: str) -> None:
    if g.side is not Side.LEFT:
        raise InputError(f"{what} needs a left structure; use as_left() on the opposite algebra")


def antipode(g: GabiStructure) -> Matrix:
    """sigma(a) = eps(a_+) a_-, checked to be an augmented algebra map A -> A^op."""
    _require_left(g, "antipode")
    a = g.algebra
    sigma = kron(g.eps, a.identity) @ g.delta
    if not is_algebra_map(sigma, a, opposite(a)).passed:
        raise AssertionError("antipode is not an algebra map into A^op; the gabi axioms fail")
    if g.eps @ sigma != g.eps:
        raise AssertionError("eps o antipode != eps; the gabi axioms fail")
    return sigma


def canonical_beta(g: GabiStructure) -> Matrix:
    """beta(a (x) b) = a_+ (x) a_- b as an n^2 x n^2 matrix."""
    _require_left(g, "the canonical map")
    a = g.algebra
    return kron(a.identity, a.mul_matrix) @ kron(g.delta, a.identity)


def hopf_suite(b: BialgebraData, S: Matrix) -> Report:
    """Bialgebra axioms plus S being a two-sided convolution inverse of id."""
    rep = Report("hopf")
    rep.absorb(check_bialgebra(b))
    I = b.algebra.identity
    ue = b.unit_counit
    j = convolution(I, S, b).first_mismatched_column(ue)
    if j is not None:
        rep.fail("right antipode", b.algebra.name(j), "m (id (x) S) D != u eps")
    j = convolution(S, I, b).first_mismatched_column(ue)
    if j is not None:
        rep.fail("left antipode", b.algebra.name(j), "m (S (x) id) D != u eps")
    return rep


def derive_hopf(g: GabiStructure, strategy: Strategy = Strategy.BETA_INVERSE) -> HopfResult | NotApplicable:
    """Build the Hopf structure promised by the matching theorem, then verify it.

    BETA_INVERSE: D(a) = beta^{-1}(a (x) 1), needs beta invertible and D left counital.
    COMMUTATIVE: D(a) = a_+ (x) sigma(a_-), needs A commutative.
    INVERTIBLE_ANTIPODE: D(a) = a_+ (x) sigma^{-1}(a_-), needs sigma invertible.
    The antipode is always sigma. The full Hopf axiom suite is re-run on the
    output; a failure there is reported under gate "hopf-axioms".
    """
    _require_left(g, "derive_hopf")
    pre = check_gabi(g)
    if not pre.passed:
        return NotApplicable("gabi-axioms", "input is not a gabi structure", pre)
    a = g.algebra
    I = a.identity
    sigma = antipode(g)
    if strategy is Strategy.BETA_INVERSE:
        beta_inv = invert(canonical_beta(g))
        if beta_inv is None:
            return NotApplicable("singular-beta", "the canonical map is not invertible")
        comul = beta_inv @ kron(I, a.unit_matrix)
        if kron(g.eps, I) @ comul != I:
            return NotApplicable("counit", "beta^{-1}(a (x) 1) is not left counital")
    elif strategy is Strategy.COMMUTATIVE:
        if not a.is_commutative():
            return NotApplicable("non-commutative", "the algebra is not commutative")
        comul = kron(I, sigma) @ g.delta
    elif strategy is Strategy.INVERTIBLE_ANTIPODE:
        sigma_inv = invert(sigma)
        if sigma_inv is None:
            return NotApplicable("singular-antipode", "the antipode is not invertible")
        comul = kron(I, sigma_inv) @ g.delta
    else:
        raise InputError(f"unknown strategy {strategy!r}")
    b = BialgebraData.build(a, comul, g.eps)
    rep = hopf_suite(b, sigma)
    if not rep.passed:
        return NotApplicable("hopf-axioms", "derived structure fails the Hopf axioms", rep)
    return HopfResult(b, sigma, strategy, rep)


def tricocycloid(g: GabiStructure) -> TricocycloidData:
    """v(a (x) b) = b_+ (x) b_- a, i.e. beta composed with the twist."""
    n = g.dim
    v = canonical_beta(g) @ twist(g.algebra.field, n, n)
    return TricocycloidData(v, g.algebra.unit, g.eps)


def check_tricocycloid(t: TricocycloidData) -> Report:
    """Braid equation plus the one-sided augmentation equations.

    Asserted: (v (x) A)(A (x) c)(v (x) A) = (A (x) v)(v (x) A)(A (x) v),
    (A (x) eps) v = eps (x) A, v (A (x) eta) = eta (x) A, eps eta = 1.
    Reported as facts only: the mirrored forms (eps (x) A) v = A (x) eps,
    v (eta (x) A) = A (x) eta, (A (x) eps) v (A (x) eta) = A, and, when v is
    invertible, (A (x) eps) v^{-1} (A (x) eta) = A.
    """
    n = t.dim
    f = t.eps.field
    if t.v.shape != (n * n, n * n) or len(t.eta) != n:
        raise InputError("tricocycloid data shapes do not match")
    I = Matrix.identity(f, n)
    eta = Matrix.column(f, t.eta)
    eps = t.eps
    v = t.v
    c = twist(f, n, n)
    rep = Report("tricocycloid")
    vI, Iv = kron(v, I), kron(I, v)
    lhs = vI @ kron(I, c) @ vI
    rhs = Iv @ vI @ Iv
    braid = lhs == rhs
    rep.facts["braid"] = braid
    if not braid:
        j = lhs.first_mismatched_column(rhs)
        rep.fail("braid", str(j), "(v A)(A c)(v A) != (A v)(v A)(A v)")
    checks = {
        "counit": (kron(I, eps) @ v, kron(eps, I)),
        "unit": (v @ kron(I, eta), kron(eta, I)),
        "eps-eta": (eps @ eta, Matrix.identity(f, 1)),
    }
    for label, (x, y) in checks.items():
        ok = x == y
        rep.facts[label] = ok
        if not ok:
            rep.fail(label, str(x.first_mismatched_column(y)), f"{label} equation fails")
    mirrored = {
        "mirror-counit": (kron(eps, I) @ v, kron(I, eps)),
        "mirror-unit": (v @ kron(eta, I), kron(I, eta)),
        "full-augmentation": (kron(I, eps) @ v @ kron(I, eta), I),
    }
    for label, (x, y) in mirrored.items():
        rep.facts[label] = x == y
        if x != y:
            rep.fail(label, str(x.first_mismatched_column(y)), f"{label} equation fails", NOTE)
    v_inv = invert(v)
    rep.facts["invertible"] = v_inv is not None
    if v_inv is not None:
        ok = kron(I, eps) @ v_inv @ kron(I, eta) == I
        rep.facts["inverse-augmentation"] = ok
        if not ok:
            rep.fail("inverse-augmentation", "", "(A eps) v^-1 (A eta) != A", NOTE)
    return rep


def _interchange(outer: GabiStructure, inner: GabiStructure) -> Matrix:
    """a -> outer legs, inner applied to the outer minus leg, first two legs multiplied."""
    a = outer.algebra
    return kron(a.mul_matrix, a.identity) @ kron(a.identity, inner.delta) @ outer.delta


def check_double(g1: GabiStructure, g2: GabiStructure) -> Report:
    """Interchange identities for two gabi structures on one augmented algebra.

    With delta = g1 and delta' = g2: a_{+'} a_{-'+} (x) a_{-'-} = 1 (x) a and
    a_+ a_{-+'} (x) a_{--'} = 1 (x) a. When both hold the antipodes must be
    mutually inverse and the inverse-antipode derivation must succeed.
    """
    _require_left(g1, "check_double")
    _require_left(g2, "check_double")
    if g1.algebra != g2.algebra or g1.eps != g2.eps:
        raise InputError("double structures need the same algebra and augmentation")
    a = g1.algebra
    rep = Report("double gabi")
    for tag, g in (("first", g1), ("second", g2)):
        sub = check_gabi(g)
        if not sub.passed:
            rep.absorb(sub, f"{tag} structure ")
    if not rep.passed:
        return rep
    target = kron(a.unit_matrix, a.identity)
    ok = True
    for label, mat in (("interchange-1", _interchange(g2, g1)), ("interchange-2", _interchange(g1, g2))):
        j = mat.first_mismatched_column(target)
        rep.facts[label] = j is None
        if j is not None:
            ok = False
            rep.fail(label, a.name(j), "does not equal 1 (x) a")
    if not ok:
        return rep
    s1, s2 = antipode(g1), antipode(g2)
    if s2 @ s1 != a.identity or s1 @ s2 != a.identity:
        rep.fail("antipodes-inverse", "", "sigma' sigma != id or sigma sigma' != id")
    hopf = derive_hopf(g1, Strategy.INVERTIBLE_ANTIPODE)
    rep.facts["hopf"] = bool(hopf)
    if not hopf:
        rep.fail("hopf", "", f"inverse-antipode derivation failed at gate {hopf.gate}")
    return rep


class SearchCapExceeded(InputError):
    def __init__(self, required: int, cap: int):
        super().__init__(f"search needs {required} candidates, cap is {cap}")
        self.required = required
        self.cap = cap


def augmentations(a: FinAlgebra) -> list[Matrix]:
    """All augmentations of an algebra over F_p, in lexicographic order."""
    f = a.field
    out = []
    for values in itertools.product(f.elements(), repeat=a.dim):
        eps = Matrix(f, [values], cols=a.dim)
        if is_augmentation(eps, a).passed:
            out.append(eps)
    return out


def search_gabi(a: FinAlgebra, eps: Matrix | None = None, cap: int = DEFAULT_SEARCH_CAP) -> list[GabiStructure]:
    """Every left gabi structure on ``a`` over F_p.

    ``eps=None`` searches all augmentations. Candidates are all n^2 x n
    matrices delta, ordered lexicographically by their row-major entries,
    and results come back in that order. Columns failing GA1 or GA2 are
    discarded first; both axioms constrain one column at a time, so the
    result equals the plain enumeration.
    """
    f = a.field
    if not f.is_prime:
        raise InputError("search_gabi needs a prime field")
    n = a.dim
    eps_list = augmentations(a) if eps is None else [eps]
    required = f.p ** (n ** 3) * len(eps_list)
    if required > cap:
        raise SearchCapExceeded(required, cap)
    found = []
    for e in eps_list:
        if not is_augmentation(e, a).passed:
            continue
        per_column = []
        for col in range(n):
            target_ga2 = tuple(f.norm(u * e[0, col]) for u in a.unit)
            ok = []
            for values in itertools.product(f.elements(), repeat=n * n):
                # GA1: sum_q eps(e_q) c_{pq} e_p = e_col
                ga1 = tuple(f.norm(sum(values[p * n + q] * e[0, q] for q in range(n))) for p in range(n))
                if ga1 != a.basis_vector(col):
                    continue
                ga2 = [0] * n
                for pq, c in enumerate(values):
                    if c:
                        for k, t in enumerate(a.table[pq // n][pq % n]):
                            ga2[k] += c * t
                if tuple(f.norm(x) for x in ga2) != target_ga2:
                    continue
                ok.append(values)
            per_column.append(ok)
        hits = []
        for columns in itertools.product(*per_column):
            delta = Matrix.from_columns(f, columns, n * n)
            g = GabiStructure(a, delta, e, Side.LEFT)
            if check_gabi(g).passed:
                hits.append(g)
        hits.sort(key=lambda g: g.delta.data)
        found.extend(hits)
    return found
