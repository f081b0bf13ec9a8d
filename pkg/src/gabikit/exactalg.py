"""Exact field arithmetic and dense linear algebra over Q and F_p.

Field elements are plain Python values. A rational is an ``int`` when it is
integral and a ``fractions.Fraction`` otherwise; a prime field element is an
``int`` residue in ``range(p)``. Both forms are canonical, so equality of
matrices is equality of their entry tuples, and zero tests stay cheap.

Tensor products follow one convention everywhere: ``e_i (x) e_j`` sits at
index ``i * dim_right + j`` (left factor major).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence


class InputError(ValueError):
    """Malformed input: wrong shape, mixed fields, unparsable scalar."""


class FieldKind(enum.Enum):
    RATIONALS = "Q"
    PRIME = "Fp"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    kind: FieldKind
    p: int | None = None

    def __post_init__(self):
        if self.kind is FieldKind.PRIME:
            if self.p is None or not (2 <= self.p < 2**31) or not _is_prime(self.p):
                raise InputError(f"prime field modulus must be a prime below 2^31, got {self.p!r}")
        elif self.p is not None:
            raise InputError("the rationals take no modulus")

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls(FieldKind.RATIONALS)

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        return cls(FieldKind.PRIME, p)

    @property
    def is_prime(self) -> bool:
        return self.kind is FieldKind.PRIME

    def __str__(self):
        return "Q" if self.kind is FieldKind.RATIONALS else f"F{self.p}"

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def norm(self, x):
        """Bring the result of native ``+ - *`` back to canonical form."""
        if self.p is None:
            if type(x) is Fraction and x.denominator == 1:
                return x.numerator
            return x
        return x % self.p

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return self.norm(Fraction(1) / x)
        return pow(x, -1, self.p)

    def coerce(self, value):
        """Parse a scalar given as int, Fraction, or a string "a" / "a/b"."""
        if isinstance(value, bool):
            raise InputError(f"not a scalar: {value!r}")
        if isinstance(value, str):
            try:
                value = Fraction(value.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise InputError(f"not a scalar: {value!r}") from exc
        if isinstance(value, int):
            return self.norm(value)
        if isinstance(value, Fraction):
            if self.p is None:
                return self.norm(value)
            if value.denominator % self.p == 0:
                raise InputError(f"{value} has no image in {self}")
            return self.norm(value.numerator * pow(value.denominator, -1, self.p))
        raise InputError(f"not a scalar: {value!r}")

    def format(self, x):
        """Serialized form: "a" or "a/b" for Q, the residue integer for F_p."""
        if self.p is None:
            return str(x)
        return int(x)

    def elements(self):
        if self.p is None:
            raise InputError("cannot enumerate the rationals")
        return range(self.p)


QQ = FieldSpec.rationals()


class Matrix:
    """Immutable dense matrix over a FieldSpec, stored row-major."""

    __slots__ = ("field", "rows", "cols", "data", "__dict__")

    def __init__(self, field: FieldSpec, data: Sequence[Sequence], *, cols: int | None = None):
        self.field = field
        self.data = tuple(tuple(row) for row in data)
        self.rows = len(self.data)
        if cols is None:
            if not self.data:
                raise InputError("cols must be given for a matrix with no rows")
            cols = len(self.data[0])
        self.cols = cols
        for row in self.data:
            if len(row) != cols:
                raise InputError("ragged matrix rows")

    # construction ---------------------------------------------------

    @classmethod
    def from_values(cls, field: FieldSpec, rows: Iterable[Iterable], cols: int | None = None) -> Matrix:
        return cls(field, [[field.coerce(v) for v in row] for row in rows], cols=cols)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> Matrix:
        z = field.zero
        return cls(field, [[z] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> Matrix:
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def from_columns(cls, field: FieldSpec, columns: Sequence[Sequence], rows: int) -> Matrix:
        return cls(field, [[c[i] for c in columns] for i in range(rows)], cols=len(columns))

    @classmethod
    def column(cls, field: FieldSpec, vector: Sequence) -> Matrix:
        return cls(field, [[x] for x in vector], cols=1)

    @classmethod
    def row(cls, field: FieldSpec, vector: Sequence) -> Matrix:
        return cls(field, [tuple(vector)], cols=len(vector))

    @classmethod
    def permutation(cls, field: FieldSpec, images: Sequence[int]) -> Matrix:
        """Matrix sending basis vector j to basis vector images[j]."""
        n = len(images)
        z, o = field.zero, field.one
        data = [[z] * n for _ in range(n)]
        for j, i in enumerate(images):
            data[i][j] = o
        return cls(field, data, cols=n)

    # access ---------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def col(self, j: int) -> tuple:
        return tuple(row[j] for row in self.data)

    @cached_property
    def _nonzero(self) -> tuple[tuple[tuple[int, object], ...], ...]:
        return tuple(tuple((j, x) for j, x in enumerate(row) if x) for row in self.data)

    def is_zero(self) -> bool:
        return not any(self._nonzero)

    def to_lists(self) -> list[list]:
        return [[self.field.format(x) for x in row] for row in self.data]

    # arithmetic -----------------------------------------------------

    def _same_field(self, other: Matrix):
        if not isinstance(other, Matrix):
            raise InputError(f"expected a Matrix, got {type(other).__name__}")
        if other.field != self.field:
            raise InputError(f"field mismatch: {self.field} vs {other.field}")

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash((self.field, self.shape, self.data))

    def __repr__(self):
        body = "; ".join(" ".join(str(self.field.format(x)) for x in row) for row in self.data)
        return f"Matrix<{self.field}, {self.rows}x{self.cols}>[{body}]"

    def _combine(self, other: Matrix, sign: int) -> Matrix:
        norm = self.field.norm
        out = [list(r) for r in self.data]
        for i, row in enumerate(other._nonzero):
            target = out[i]
            for j, b in row:
                target[j] = norm(target[j] + b if sign > 0 else target[j] - b)
        return Matrix(self.field, out, cols=self.cols)

    def __add__(self, other: Matrix) -> Matrix:
        self._same_field(other)
        if self.shape != other.shape:
            raise InputError(f"cannot add {self.shape} and {other.shape}")
        return self._combine(other, 1)

    def __sub__(self, other: Matrix) -> Matrix:
        self._same_field(other)
        if self.shape != other.shape:
            raise InputError(f"cannot subtract {other.shape} from {self.shape}")
        return self._combine(other, -1)

    def __neg__(self) -> Matrix:
        return self.scale(-1)

    def scale(self, c) -> Matrix:
        f = self.field
        c = f.coerce(c)
        if c == f.one:
            return self
        zero = f.zero
        out = []
        for row, nz in zip(self.data, self._nonzero):
            new = [zero] * self.cols
            for j, a in nz:
                new[j] = f.norm(c * a)
            out.append(new)
        return Matrix(f, out, cols=self.cols)

    def __matmul__(self, other: Matrix) -> Matrix:
        self._same_field(other)
        if self.cols != other.rows:
            raise InputError(f"cannot compose {self.shape} with {other.shape}")
        field = self.field
        zero = field.zero
        bnz = other._nonzero
        out = []
        for arow in self._nonzero:
            acc = [zero] * other.cols
            for k, a in arow:
                for j, b in bnz[k]:
                    acc[j] += a * b
            if field.p is not None:
                p = field.p
                acc = [x % p for x in acc]
            else:
                norm = field.norm
                acc = [norm(x) if type(x) is Fraction else x for x in acc]
            out.append(acc)
        return Matrix(field, out, cols=other.cols)

    def apply(self, vector: Sequence) -> tuple:
        """Matrix times column vector, as a tuple."""
        if len(vector) != self.cols:
            raise InputError(f"vector of length {len(vector)} for a {self.shape} matrix")
        norm = self.field.norm
        zero = self.field.zero
        out = []
        for row in self._nonzero:
            acc = zero
            for j, a in row:
                b = vector[j]
                if b:
                    acc += a * b
            out.append(norm(acc))
        return tuple(out)

    @property
    def T(self) -> Matrix:
        if not self.rows:
            return Matrix(self.field, [()] * self.cols, cols=0)
        return Matrix(self.field, list(zip(*self.data)), cols=self.rows)

    def hstack(self, other: Matrix) -> Matrix:
        self._same_field(other)
        if self.rows != other.rows:
            raise InputError("hstack needs equal row counts")
        return Matrix(self.field, [r + s for r, s in zip(self.data, other.data)], cols=self.cols + other.cols)

    def vstack(self, other: Matrix) -> Matrix:
        self._same_field(other)
        if self.cols != other.cols:
            raise InputError("vstack needs equal column counts")
        return Matrix(self.field, self.data + other.data, cols=self.cols)

    def select_columns(self, indices: Sequence[int]) -> Matrix:
        return Matrix(self.field, [[row[j] for j in indices] for row in self.data], cols=len(indices))

    def first_mismatched_column(self, other: Matrix) -> int | None:
        """Index of the first column where two same-shape matrices differ."""
        if self.shape != other.shape:
            raise InputError(f"shape mismatch {self.shape} vs {other.shape}")
        for j in range(self.cols):
            if any(r[j] != s[j] for r, s in zip(self.data, other.data)):
                return j
        return None


def kronecker(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product, left factor major: (a (x) b)[i*rb + k, j*cb + l] = a[i,j] b[k,l]."""
    a._same_field(b)
    field = a.field
    zero = field.zero
    norm = field.norm
    data = []
    for arow in a.data:
        for brow in b.data:
            row = []
            for x in arow:
                if x:
                    row.extend(norm(x * y) if y else zero for y in brow)
                else:
                    row.extend([zero] * b.cols)
            data.append(row)
    return Matrix(field, data, cols=a.cols * b.cols)


def kron(*factors: Matrix) -> Matrix:
    out = factors[0]
    for f in factors[1:]:
        out = kronecker(out, f)
    return out


def tensor_permutation(field: FieldSpec, dims: Sequence[int], order: Sequence[int]) -> Matrix:
    """Reorder tensor legs: output leg k is input leg ``order[k]``.

    For dims (d0, d1) and order (1, 0) this is the twist d0*d1 -> d1*d0.
    """
    if sorted(order) != list(range(len(dims))):
        raise InputError(f"not a permutation of legs: {order}")
    out_dims = [dims[i] for i in order]
    in_strides = [1] * len(dims)
    for k in range(len(dims) - 2, -1, -1):
        in_strides[k] = in_strides[k + 1] * dims[k + 1]
    total = 1
    for d in dims:
        total *= d
    images = [0] * total
    # walk output multi-indices in order; map back to the input index
    idx = [0] * len(dims)
    for out_pos in range(total):
        src = sum(idx[k] * in_strides[order[k]] for k in range(len(dims)))
        images[src] = out_pos
        for k in range(len(dims) - 1, -1, -1):
            idx[k] += 1
            if idx[k] < out_dims[k]:
                break
            idx[k] = 0
    return Matrix.permutation(field, images)


def twist(field: FieldSpec, m: int, n: int) -> Matrix:
    """Swap map V_m (x) V_n -> V_n (x) V_m."""
    return tensor_permutation(field, (m, n), (1, 0))


# elimination ---------------------------------------------------------


def _row_reduce(field: FieldSpec, rows: Iterable[Sequence], ncols: int) -> dict[int, dict[int, object]]:
    """Incremental Gauss-Jordan on sparse row dicts.

    Returns {pivot column: row} where every row is 1 at its pivot, zero at all
    other pivots, and has no entries left of its pivot.
    """
    norm = field.norm
    basis: dict[int, dict[int, object]] = {}
    for row in rows:
        v = {j: x for j, x in enumerate(row) if x} if not isinstance(row, dict) else dict(row)
        for c in [c for c in v if c in basis]:
            f = v.get(c)
            if not f:
                continue
            for j, y in basis[c].items():
                w = norm(v.get(j, 0) - f * y)
                if w:
                    v[j] = w
                else:
                    v.pop(j, None)
        if not v:
            continue
        piv = min(v)
        s = field.inv(v[piv])
        if s != 1:
            v = {j: norm(x * s) for j, x in v.items()}
        for other in basis.values():
            f = other.get(piv)
            if f:
                for j, y in v.items():
                    w = norm(other.get(j, 0) - f * y)
                    if w:
                        other[j] = w
                    else:
                        other.pop(j, None)
        basis[piv] = v
    return basis


def _basis_to_matrix(field: FieldSpec, basis: dict[int, dict[int, object]], ncols: int) -> tuple[Matrix, list[int]]:
    pivots = sorted(basis)
    zero = field.zero
    data = []
    for c in pivots:
        row = [zero] * ncols
        for j, x in basis[c].items():
            row[j] = x
        data.append(row)
    return Matrix(field, data, cols=ncols), pivots


def rref(m: Matrix) -> tuple[Matrix, list[int], int]:
    """Reduced row-echelon form with zero rows dropped, pivot columns, rank."""
    basis = _row_reduce(m.field, m.data, m.cols)
    reduced, pivots = _basis_to_matrix(m.field, basis, m.cols)
    return reduced, pivots, len(pivots)


def rref_full(m: Matrix) -> Matrix:
    """rref padded with zero rows back to the input shape."""
    reduced, _, rank = rref(m)
    if rank == m.rows:
        return reduced
    return reduced.vstack(Matrix.zeros(m.field, m.rows - rank, m.cols))


def rank(m: Matrix) -> int:
    return rref(m)[2]


def invert(m: Matrix) -> Matrix | None:
    """Two-sided inverse, or None when m is singular."""
    if m.rows != m.cols:
        raise InputError(f"cannot invert a non-square {m.shape} matrix")
    n = m.rows
    field = m.field
    if n == 0:
        return m
    aug = m.hstack(Matrix.identity(field, n))
    reduced, pivots, r = rref(aug)
    if r < n or pivots[n - 1] != n - 1:
        return None
    return Matrix(field, [row[n:] for row in reduced.data], cols=n)


def kernel_basis(m: Matrix) -> Matrix:
    """Rows spanning the right null space {v : m v = 0}."""
    field = m.field
    reduced, pivots, r = rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    zero, one = field.zero, field.one
    rows = []
    for f in free:
        v = [zero] * m.cols
        v[f] = one
        for i, pc in enumerate(pivots):
            x = reduced.data[i][f]
            if x:
                v[pc] = field.norm(-x)
        rows.append(v)
    return Matrix(field, rows, cols=m.cols)


def solve(a: Matrix, b: Sequence) -> tuple | None:
    """One solution x of a x = b (free variables set to zero), or None."""
    if len(b) != a.rows:
        raise InputError("right-hand side length does not match the row count")
    aug = a.hstack(Matrix.column(a.field, b))
    reduced, pivots, _ = rref(aug)
    if pivots and pivots[-1] == a.cols:
        return None
    x = [a.field.zero] * a.cols
    for i, pc in enumerate(pivots):
        x[pc] = reduced.data[i][a.cols]
    return tuple(x)


@dataclass(frozen=True)
class QuotientSpace:
    """Ambient space modulo the row span of ``relations``.

    Quotient coordinates are indexed by the non-pivot columns of the rref of
    the relations; ``section`` lifts a coordinate vector to the representative
    supported on those columns.
    """

    ambient_dim: int
    relations: Matrix
    pivot_cols: tuple[int, ...]
    reduce: Matrix
    section: Matrix

    @property
    def dim(self) -> int:
        return self.ambient_dim - len(self.pivot_cols)

    @property
    def free_cols(self) -> tuple[int, ...]:
        piv = set(self.pivot_cols)
        return tuple(j for j in range(self.ambient_dim) if j not in piv)


def quotient_by_rows(field: FieldSpec, ambient_dim: int, relation_rows: Iterable[Sequence] | Matrix) -> QuotientSpace:
    if isinstance(relation_rows, Matrix):
        if relation_rows.field != field:
            raise InputError("field mismatch between relations and quotient")
        if relation_rows.cols != ambient_dim:
            raise InputError("relation rows must have length ambient_dim")
        relation_rows = relation_rows.data
    basis = _row_reduce(field, relation_rows, ambient_dim)
    relations, pivots = _basis_to_matrix(field, basis, ambient_dim)
    piv = set(pivots)
    free = [j for j in range(ambient_dim) if j not in piv]
    zero, one = field.zero, field.one
    q = len(free)
    red = [[zero] * ambient_dim for _ in range(q)]
    for k, f in enumerate(free):
        red[k][f] = one
        for i, pc in enumerate(pivots):
            x = relations.data[i][f]
            if x:
                red[k][pc] = field.norm(-x)
    sec = [[zero] * q for _ in range(ambient_dim)]
    for k, f in enumerate(free):
        sec[f][k] = one
    return QuotientSpace(
        ambient_dim=ambient_dim,
        relations=relations,
        pivot_cols=tuple(pivots),
        reduce=Matrix(field, red, cols=ambient_dim),
        section=Matrix(field, sec, cols=q),
    )
