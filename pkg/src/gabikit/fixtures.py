"""Builders for the shipped example corpus.

Algebras come with their Hopf data where they have any; the gabi structure
of a Hopf algebra is always derived through ``gabi_from_one_sided_hopf``
rather than typed in.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algcore import FinAlgebra
from .coalg import AntipodeCandidate, BialgebraData, Side, gabi_from_one_sided_hopf
from .exactalg import QQ, FieldSpec, Matrix, invert, kron
from .gabi import GabiStructure
from .settheory import FiniteMonoid

F2 = FieldSpec.prime(2)


@dataclass(frozen=True)
class HopfFixture:
    name: str
    bialgebra: BialgebraData
    antipode: Matrix

    @property
    def algebra(self) -> FinAlgebra:
        return self.bialgebra.algebra

    def gabi(self) -> GabiStructure:
        """delta(h) = h1 (x) S(h2)."""
        return gabi_from_one_sided_hopf(self.bialgebra, AntipodeCandidate(self.antipode, Side.TWO_SIDED))

    def mirror_gabi(self) -> GabiStructure:
        """delta'(h) = h2 (x) S^{-1}(h1), the second structure of a double gabi algebra."""
        a = self.algebra
        n = a.dim
        s_inv = invert(self.antipode)
        from .exactalg import twist

        delta = kron(a.identity, s_inv) @ twist(a.field, n, n) @ self.bialgebra.comul
        return GabiStructure(a, delta, self.bialgebra.counit, Side.LEFT)


def _unit_vector(field: FieldSpec, n: int, i: int) -> list:
    return [field.one if k == i else field.zero for k in range(n)]


def monoid_algebra(m: FiniteMonoid, field: FieldSpec = QQ, names=None) -> FinAlgebra:
    n = m.size
    table = [[_unit_vector(field, n, m.mul(a, b)) for b in range(n)] for a in range(n)]
    return FinAlgebra(field, table, _unit_vector(field, n, m.identity), names)


def _grouplike_hopf(name: str, m: FiniteMonoid, field: FieldSpec, names) -> HopfFixture:
    """Group algebra with every basis element grouplike, S(g) = g^{-1}."""
    from .settheory import is_group

    ok, inv = is_group(m)
    if not ok:
        raise ValueError(f"{name} is not a group")
    a = monoid_algebra(m, field, names)
    n = m.size
    comul = Matrix.from_columns(field, [_unit_vector(field, n * n, g * n + g) for g in range(n)], n * n)
    counit = Matrix(field, [[field.one] * n], cols=n)
    S = Matrix.permutation(field, inv)
    return HopfFixture(name, BialgebraData.build(a, comul, counit), S)


def cyclic_monoid(n: int) -> FiniteMonoid:
    return FiniteMonoid(n, [[(i + j) % n for j in range(n)] for i in range(n)], 0, f"C{n}")


def cyclic_names(n: int) -> list[str]:
    return ["1", "g"] + [f"g{k}" for k in range(2, n)] if n > 1 else ["1"]


def group_algebra(n: int, field: FieldSpec = QQ) -> HopfFixture:
    """k[C_n] on the basis 1, g, g2, ..., g^{n-1}."""
    tag = "Q" if not field.is_prime else f"F{field.p}"
    return _grouplike_hopf(f"{tag}[C{n}]", cyclic_monoid(n), field, cyclic_names(n))


def sweedler_h4() -> HopfFixture:
    """Sweedler's algebra on 1, g, x, gx: g^2 = 1, x^2 = 0, xg = -gx.

    D(g) = g (x) g, D(x) = x (x) 1 + g (x) x, eps(x) = 0, S(g) = g, S(x) = -gx.
    """
    f = QQ
    n = 4
    # basis g^a x^b sits at index a + 2b
    table = [[[0] * n for _ in range(n)] for _ in range(n)]
    for (a, b), (c, d) in itertools.product(itertools.product(range(2), repeat=2), repeat=2):
        if b + d > 1:
            continue
        sign = -1 if b * c else 1
        table[a + 2 * b][c + 2 * d][(a + c) % 2 + 2 * (b + d)] = sign
    a = FinAlgebra(f, table, [1, 0, 0, 0], ["1", "g", "x", "gx"])

    def tensor(*terms):
        col = [0] * (n * n)
        for c, i, j in terms:
            col[i * n + j] += c
        return col

    comul = Matrix.from_columns(f, [
        tensor((1, 0, 0)),
        tensor((1, 1, 1)),
        tensor((1, 2, 0), (1, 1, 2)),
        # D(gx) = D(g) D(x) = gx (x) g + 1 (x) gx
        tensor((1, 3, 1), (1, 0, 3)),
    ], n * n)
    counit = Matrix(f, [[1, 1, 0, 0]], cols=n)
    S = Matrix.from_columns(f, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]], n)
    return HopfFixture("H4", BialgebraData.build(a, comul, counit), S)


def dual_numbers_f2() -> HopfFixture:
    """F_2[x]/(x^2) with x primitive."""
    f = F2
    table = [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]
    a = FinAlgebra(f, table, [1, 0], ["1", "x"])
    comul = Matrix.from_columns(f, [[1, 0, 0, 0], [0, 1, 1, 0]], 4)
    counit = Matrix(f, [[1, 0]], cols=2)
    return HopfFixture("F2[x]/(x^2)", BialgebraData.build(a, comul, counit), Matrix.identity(f, 2))


def idempotent_monoid() -> FiniteMonoid:
    return FiniteMonoid(2, [[0, 1], [1, 1]], 0, "{1,e}")


def idempotent_algebra_f2() -> FinAlgebra:
    """F_2[{1,e}] with e^2 = e."""
    return monoid_algebra(idempotent_monoid(), F2, ["1", "e"])


def monoid_corpus() -> list[FiniteMonoid]:
    klein = [[a ^ b for b in range(4)] for a in range(4)]
    perms = sorted(itertools.permutations(range(3)))
    s3 = [[perms.index(tuple(p[q[i]] for i in range(3))) for q in perms] for p in perms]
    return [
        FiniteMonoid(1, [[0]], 0, "trivial"),
        cyclic_monoid(2),
        cyclic_monoid(3),
        cyclic_monoid(4),
        FiniteMonoid(4, klein, 0, "Klein4"),
        FiniteMonoid(6, s3, 0, "S3"),
        idempotent_monoid(),
        FiniteMonoid(3, [[0, 1, 2], [1, 2, 2], [2, 2, 2]], 0, "{1,a,0}"),
        FiniteMonoid(4, [[(a * b) % 4 for b in range(4)] for a in range(4)], 1, "Z4-mult"),
    ]


def hopf_corpus() -> list[HopfFixture]:
    return [group_algebra(n) for n in range(2, 7)] + [sweedler_h4(), dual_numbers_f2()]


# shipped corpus ------------------------------------------------------

def _hopf_document(h: HopfFixture, double: bool = False) -> dict:
    from .formats import algebra_doc, bialgebra_doc, gabi_doc

    doc = algebra_doc(h.algebra, h.name)
    doc["gabi"] = gabi_doc(h.gabi())
    doc["bialgebra"] = bialgebra_doc(h.bialgebra, h.antipode)
    if double:
        doc["gabi2"] = gabi_doc(h.mirror_gabi())
    return doc


_MONOID_FILES = {"{1,e}": "idempotent", "{1,a,0}": "nilpotent3", "Z4-mult": "z4_mult"}


def corpus_documents() -> dict[str, dict]:
    """Relative path -> JSON document for every shipped fixture."""
    from .formats import algebra_doc, monoid_doc

    docs = {}
    for n in range(2, 7):
        docs[f"algebras/q_c{n}.json"] = _hopf_document(group_algebra(n))
    docs["algebras/sweedler_h4.json"] = _hopf_document(sweedler_h4(), double=True)
    docs["algebras/f2_dual_numbers.json"] = _hopf_document(dual_numbers_f2())
    docs["algebras/f2_idempotent.json"] = algebra_doc(idempotent_algebra_f2(), "F2[{1,e}]")
    docs["algebras/f2_c2.json"] = algebra_doc(group_algebra(2, F2).algebra, "F2[C2]")
    for m in monoid_corpus():
        docs[f"monoids/{_MONOID_FILES.get(m.name, m.name.lower())}.json"] = monoid_doc(m)
    return docs


def data_dir():
    from importlib.resources import files

    return files("gabikit") / "data"


def fixture_paths(kind: str | None = None) -> list:
    """Shipped fixture files, sorted; ``kind`` is "algebras" or "monoids"."""
    kinds = [kind] if kind else ["algebras", "monoids"]
    out = []
    for k in kinds:
        out.extend(sorted((p for p in (data_dir() / k).iterdir() if p.name.endswith(".json")), key=lambda p: p.name))
    return out


def load_fixture(relpath: str):
    from .formats import parse_definition

    return parse_definition(data_dir() / relpath)


def write_corpus(root) -> None:
    """Regenerate the JSON corpus under ``root`` from the builders above."""
    from pathlib import Path

    from .formats import dumps

    for rel, doc in corpus_documents().items():
        path = Path(root) / rel
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(dumps(doc))
