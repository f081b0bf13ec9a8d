"""Finite-dimensional unital associative algebras given by structure constants."""

from __future__ import annotations

from functools import cached_property
from typing import Sequence

from .exactalg import FieldSpec, InputError, Matrix, kron
from .report import Report


class FinAlgebra:
    """Algebra with basis e_0..e_{n-1} and e_i e_j = sum_k table[i][j][k] e_k.

    Only shapes are validated on construction; run :func:`check_algebra` for
    associativity and unitality.
    """

    def __init__(self, field: FieldSpec, table: Sequence, unit: Sequence, basis_names: Sequence[str] | None = None):
        n = len(unit)
        if n == 0:
            raise InputError("an algebra needs at least one basis element")
        if len(table) != n or any(len(row) != n for row in table):
            raise InputError(f"multiplication table must be {n}x{n}x{n}")
        if any(len(vec) != n for row in table for vec in row):
            raise InputError(f"multiplication table must be {n}x{n}x{n}")
        if basis_names is None:
            basis_names = [f"e{i}" for i in range(n)]
        if len(basis_names) != n:
            raise InputError(f"expected {n} basis names, got {len(basis_names)}")
        self.field = field
        self.dim = n
        self.basis_names = tuple(str(b) for b in basis_names)
        self.table = tuple(tuple(tuple(field.coerce(x) for x in vec) for vec in row) for row in table)
        self.unit = tuple(field.coerce(x) for x in unit)

    def __eq__(self, other):
        if not isinstance(other, FinAlgebra):
            return NotImplemented
        return (self.field, self.table, self.unit) == (other.field, other.table, other.unit)

    def __hash__(self):
        return hash((self.field, self.table, self.unit))

    def __repr__(self):
        return f"FinAlgebra<{self.field}, dim {self.dim}, basis {','.join(self.basis_names)}>"

    def name(self, i: int) -> str:
        return self.basis_names[i]

    def basis_vector(self, i: int) -> tuple:
        z, o = self.field.zero, self.field.one
        return tuple(o if k == i else z for k in range(self.dim))

    @cached_property
    def mul_matrix(self) -> Matrix:
        """Multiplication A (x) A -> A as an n x n^2 matrix."""
        n = self.dim
        return Matrix(self.field, [[self.table[i][j][k] for i in range(n) for j in range(n)] for k in range(n)], cols=n * n)

    @cached_property
    def unit_matrix(self) -> Matrix:
        """The unit k -> A as an n x 1 matrix."""
        return Matrix.column(self.field, self.unit)

    @cached_property
    def identity(self) -> Matrix:
        return Matrix.identity(self.field, self.dim)

    def left_mult(self, i: int) -> Matrix:
        """Matrix of x -> e_i x."""
        return self._left[i]

    def right_mult(self, i: int) -> Matrix:
        """Matrix of x -> x e_i."""
        return self._right[i]

    @cached_property
    def _left(self) -> tuple[Matrix, ...]:
        n = self.dim
        return tuple(Matrix(self.field, [[self.table[i][j][k] for j in range(n)] for k in range(n)], cols=n) for i in range(n))

    @cached_property
    def _right(self) -> tuple[Matrix, ...]:
        n = self.dim
        return tuple(Matrix(self.field, [[self.table[j][i][k] for j in range(n)] for k in range(n)], cols=n) for i in range(n))

    def is_commutative(self) -> bool:
        n = self.dim
        return all(self.table[i][j] == self.table[j][i] for i in range(n) for j in range(i + 1, n))


def multiply(a: FinAlgebra, u: Sequence, v: Sequence) -> tuple:
    """Product of two coefficient vectors, by bilinear extension of the table."""
    n = a.dim
    if len(u) != n or len(v) != n:
        raise InputError(f"vectors must have length {n}")
    f = a.field
    acc = [f.zero] * n
    for i, x in enumerate(u):
        if not x:
            continue
        for j, y in enumerate(v):
            if not y:
                continue
            xy = x * y
            for k, c in enumerate(a.table[i][j]):
                if c:
                    acc[k] += xy * c
    return tuple(f.norm(x) for x in acc)


def _names(a: FinAlgebra, *idx: int) -> str:
    return "(" + ",".join(a.name(i) for i in idx) + ")"


def check_algebra(a: FinAlgebra) -> Report:
    """Associativity on all basis triples and two-sided unitality."""
    rep = Report(f"algebra {a!r}")
    n = a.dim
    I = a.identity
    m = a.mul_matrix
    left = m @ kron(m, I)
    right = m @ kron(I, m)
    for col in range(n ** 3):
        if left.col(col) != right.col(col):
            i, j, l = col // (n * n), (col // n) % n, col % n
            rep.fail("associativity", _names(a, i, j, l), "(e_i e_j) e_l != e_i (e_j e_l)")
    u = a.unit_matrix
    for label, got in (("left unit", m @ kron(u, I)), ("right unit", m @ kron(I, u))):
        j = got.first_mismatched_column(I)
        if j is not None:
            rep.fail(label, a.name(j), "1 * e != e" if label == "left unit" else "e * 1 != e")
    return rep


def opposite(a: FinAlgebra) -> FinAlgebra:
    n = a.dim
    table = [[a.table[j][i] for j in range(n)] for i in range(n)]
    return FinAlgebra(a.field, table, a.unit, a.basis_names)


def tensor_algebra(a: FinAlgebra, b: FinAlgebra) -> FinAlgebra:
    """A (x) B with componentwise product; basis e_i (x) f_k at index i * dim B + k."""
    if a.field != b.field:
        raise InputError(f"field mismatch: {a.field} vs {b.field}")
    f = a.field
    na, nb = a.dim, b.dim
    table = []
    for i in range(na):
        for k in range(nb):
            row = []
            for j in range(na):
                for l in range(nb):
                    x, y = a.table[i][j], b.table[k][l]
                    row.append([f.norm(x[p] * y[q]) if x[p] and y[q] else f.zero for p in range(na) for q in range(nb)])
            table.append(row)
    unit = [f.norm(x * y) for x in a.unit for y in b.unit]
    names = [f"{s}|{t}" for s in a.basis_names for t in b.basis_names]
    return FinAlgebra(f, table, unit, names)


def base_algebra(field: FieldSpec) -> FinAlgebra:
    """The ground field as a one-dimensional algebra."""
    return FinAlgebra(field, [[[1]]], [1], ["1"])


def is_algebra_map(f: Matrix, a: FinAlgebra, b: FinAlgebra) -> Report:
    """f(e_i e_j) = f(e_i) f(e_j) on all basis pairs and f(1) = 1."""
    if f.shape != (b.dim, a.dim):
        raise InputError(f"map of shape {f.shape} is not {a.dim} -> {b.dim}")
    if f.field != a.field or a.field != b.field:
        raise InputError("field mismatch")
    rep = Report("algebra map")
    n = a.dim
    lhs = f @ a.mul_matrix
    rhs = b.mul_matrix @ kron(f, f)
    for col in range(n * n):
        if lhs.col(col) != rhs.col(col):
            rep.fail("multiplicative", _names(a, col // n, col % n), "f(e_i e_j) != f(e_i) f(e_j)")
    if f.apply(a.unit) != b.unit:
        rep.fail("unital", "1", "f(1) != 1")
    return rep


def is_augmentation(eps: Matrix, a: FinAlgebra) -> Report:
    if eps.shape != (1, a.dim):
        raise InputError(f"augmentation must be 1x{a.dim}, got {eps.shape}")
    rep = is_algebra_map(eps, a, base_algebra(a.field))
    rep.title = "augmentation"
    return rep


def algebra_generators(a: FinAlgebra) -> list[int]:
    """Basis indices that generate A as a unital algebra, chosen greedily."""
    from .exactalg import rref

    field = a.field
    gens: list[int] = []

    def closure(indices):
        span = [a.unit] + [a.basis_vector(i) for i in indices]
        while True:
            reduced, _, r = rref(Matrix(field, span, cols=a.dim))
            basis = list(reduced.data)
            grown = basis + [multiply(a, v, a.basis_vector(g)) for v in basis for g in indices]
            _, _, r2 = rref(Matrix(field, grown, cols=a.dim))
            if r2 == r:
                return reduced, r
            span = grown

    reduced, r = closure(gens)
    for i in range(a.dim):
        if r == a.dim:
            break
        _, _, r_with = rref(reduced.vstack(Matrix.row(field, a.basis_vector(i))))
        if r_with > r:
            gens.append(i)
            reduced, r = closure(gens)
    return gens
