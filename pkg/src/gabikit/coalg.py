"""Coalgebras, bialgebras, convolution and one-sided antipodes."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .algcore import FinAlgebra, base_algebra, is_algebra_map, tensor_algebra
from .exactalg import FieldSpec, InputError, Matrix, kron, solve, twist
from .report import Report


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    TWO_SIDED = "two-sided"


@dataclass(frozen=True)
class CoalgebraData:
    field: FieldSpec
    dim: int
    comul: Matrix
    counit: Matrix

    def __post_init__(self):
        n = self.dim
        if self.comul.shape != (n * n, n):
            raise InputError(f"comultiplication must be {n * n}x{n}, got {self.comul.shape}")
        if self.counit.shape != (1, n):
            raise InputError(f"counit must be 1x{n}, got {self.counit.shape}")
        if self.comul.field != self.field or self.counit.field != self.field:
            raise InputError("field mismatch in coalgebra data")


@dataclass(frozen=True)
class BialgebraData:
    algebra: FinAlgebra
    coalgebra: CoalgebraData

    def __post_init__(self):
        if self.coalgebra.dim != self.algebra.dim or self.coalgebra.field != self.algebra.field:
            raise InputError("algebra and coalgebra live on different spaces")

    @classmethod
    def build(cls, algebra: FinAlgebra, comul: Matrix, counit: Matrix) -> BialgebraData:
        return cls(algebra, CoalgebraData(algebra.field, algebra.dim, comul, counit))

    @property
    def comul(self) -> Matrix:
        return self.coalgebra.comul

    @property
    def counit(self) -> Matrix:
        return self.coalgebra.counit

    @property
    def unit_counit(self) -> Matrix:
        """The convolution unit: a -> eps(a) 1."""
        return self.algebra.unit_matrix @ self.counit


@dataclass(frozen=True)
class AntipodeCandidate:
    S: Matrix
    side: Side


def check_coalgebra(c: CoalgebraData, names=None) -> Report:
    n = c.dim
    names = names or [f"e{i}" for i in range(n)]
    I = Matrix.identity(c.field, n)
    rep = Report("coalgebra")
    d, e = c.comul, c.counit
    j = (kron(d, I) @ d).first_mismatched_column(kron(I, d) @ d)
    if j is not None:
        rep.fail("coassociativity", names[j], "(D (x) id) D != (id (x) D) D")
    j = (kron(e, I) @ d).first_mismatched_column(I)
    if j is not None:
        rep.fail("left counit", names[j], "(eps (x) id) D != id")
    j = (kron(I, e) @ d).first_mismatched_column(I)
    if j is not None:
        rep.fail("right counit", names[j], "(id (x) eps) D != id")
    return rep


def check_bialgebra(b: BialgebraData) -> Report:
    a = b.algebra
    rep = Report("bialgebra")
    rep.absorb(check_coalgebra(b.coalgebra, a.basis_names))
    rep.absorb(is_algebra_map(b.comul, a, tensor_algebra(a, a)), "comul ")
    rep.absorb(is_algebra_map(b.counit, a, base_algebra(a.field)), "counit ")
    return rep


def convolution(f: Matrix, g: Matrix, b: BialgebraData) -> Matrix:
    """f * g = m (f (x) g) D."""
    n = b.algebra.dim
    if f.shape != (n, n) or g.shape != (n, n):
        raise InputError(f"convolution needs {n}x{n} maps")
    return b.algebra.mul_matrix @ kron(f, g) @ b.comul


def _antipode_system(b: BialgebraData, side: Side) -> tuple[Matrix, list]:
    """Linear system in the n^2 entries S[r][q] (row-major) of an antipode.

    Right: sum_pq D[pq,a] e_p S(e_q) = eps(a) 1.  Left: sum_pq D[pq,a] S(e_p) e_q.
    Rows are indexed by (k, a): coefficient of e_k in the image of e_a.
    """
    a = b.algebra
    n = a.dim
    f = a.field
    zero = f.zero
    D = b.comul
    rows = []
    rhs = []
    for k in range(n):
        for col in range(n):
            row = [zero] * (n * n)
            for pq in range(n * n):
                d = D[pq, col]
                if not d:
                    continue
                p, q = divmod(pq, n)
                for r in range(n):
                    if side is Side.RIGHT:
                        c = a.table[p][r][k]
                        idx = r * n + q
                    else:
                        c = a.table[r][q][k]
                        idx = r * n + p
                    if c:
                        row[idx] = f.norm(row[idx] + d * c)
            rows.append(row)
            rhs.append(f.norm(a.unit[k] * b.counit[0, col]))
    return Matrix(f, rows, cols=n * n), rhs


def is_convolution_inverse(S: Matrix, b: BialgebraData, side: Side) -> bool:
    ue = b.unit_counit
    I = b.algebra.identity
    ok_right = convolution(I, S, b) == ue
    ok_left = convolution(S, I, b) == ue
    if side is Side.RIGHT:
        return ok_right
    if side is Side.LEFT:
        return ok_left
    return ok_left and ok_right


def solve_antipode(b: BialgebraData, side: Side = Side.RIGHT) -> AntipodeCandidate | None:
    """Solve id * S = u eps (RIGHT), S * id = u eps (LEFT), or both.

    Free variables are set to zero, so the answer is deterministic when the
    one-sided inverse is not unique. The returned side is upgraded to
    TWO_SIDED when the solution happens to work on both sides. None means
    the system is inconsistent.
    """
    n = b.algebra.dim
    f = b.algebra.field
    if side is Side.TWO_SIDED:
        ml, bl = _antipode_system(b, Side.LEFT)
        mr, br = _antipode_system(b, Side.RIGHT)
        system, rhs = ml.vstack(mr), bl + br
    else:
        system, rhs = _antipode_system(b, side)
    x = solve(system, rhs)
    if x is None:
        return None
    S = Matrix(f, [x[r * n:(r + 1) * n] for r in range(n)], cols=n)
    if side is not Side.TWO_SIDED and is_convolution_inverse(S, b, Side.TWO_SIDED):
        side = Side.TWO_SIDED
    return AntipodeCandidate(S, side)


def check_anti_bialgebra_map(S: Matrix, b: BialgebraData) -> Report:
    """S(uv) = S(v)S(u), S(1) = 1, (S (x) S) D = tw D S, eps S = eps."""
    a = b.algebra
    n = a.dim
    if S.shape != (n, n):
        raise InputError(f"S must be {n}x{n}")
    rep = Report("anti-bialgebra map")
    f = a.field
    m = a.mul_matrix
    tw = twist(f, n, n)
    lhs = S @ m
    rhs = m @ kron(S, S) @ tw
    j = lhs.first_mismatched_column(rhs)
    if j is not None:
        rep.fail("anti-multiplicative", f"({a.name(j // n)},{a.name(j % n)})", "S(uv) != S(v) S(u)")
    if S.apply(a.unit) != a.unit:
        rep.fail("unital", "1", "S(1) != 1")
    j = (kron(S, S) @ b.comul).first_mismatched_column(tw @ b.comul @ S)
    if j is not None:
        rep.fail("anti-comultiplicative", a.name(j), "(S (x) S) D != tw D S")
    j = (b.counit @ S).first_mismatched_column(b.counit)
    if j is not None:
        rep.fail("counital", a.name(j), "eps S != eps")
    return rep


class PreconditionError(ValueError):
    def __init__(self, message: str, report: Report | None = None):
        super().__init__(message)
        self.report = report


def gabi_from_one_sided_hopf(b: BialgebraData, candidate: AntipodeCandidate):
    """Gabi structure carried by a one-sided Hopf algebra.

    A right (or two-sided) antipode gives the left structure
    delta(b) = b1 (x) S(b2). A left antipode gives the mirror right structure
    b -> S(b1) (x) b2, stored leg-for-leg as (b_-, b_+).
    Refuses unless S is a convolution inverse on the required side and an
    anti-bialgebra map.
    """
    from .gabi import GabiStructure

    S = candidate.S
    need = Side.LEFT if candidate.side is Side.LEFT else Side.RIGHT
    if not is_convolution_inverse(S, b, need):
        raise PreconditionError(f"S is not a {need.value} convolution inverse of the identity")
    rep = check_anti_bialgebra_map(S, b)
    if not rep.passed:
        raise PreconditionError("S is not an anti-bialgebra map", rep)
    I = b.algebra.identity
    if need is Side.RIGHT:
        return GabiStructure(b.algebra, kron(I, S) @ b.comul, b.counit, Side.LEFT)
    return GabiStructure(b.algebra, kron(S, I) @ b.comul, b.counit, Side.RIGHT)
