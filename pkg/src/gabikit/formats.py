"""JSON definition files for algebras (with optional gabi, Hopf and module
data) and finite monoids.

Algebra document keys: ``field`` ({"kind": "Q"} or {"kind": "Fp", "p": 2}),
``dim``, ``basis_names``, ``mul`` (n x n x n, mul[i][j][k] = coefficient of
e_k in e_i e_j), ``unit``, and optionally ``gabi`` / ``gabi2``
({delta: n^2 x n, eps: 1 x n, side}), ``bialgebra`` ({comul, counit,
antipode}) and ``modules`` ([{name, dim, action}]). Matrices are nested
row-major lists; scalars are strings such as "-1/2" (integers also parse).

Monoid document keys: ``name``, ``size``, ``identity``, ``table`` (size x
size, or flat row-major), optionally ``gabi`` ({delta: [[m_+, m_-], ...]}).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .algcore import FinAlgebra, check_algebra
from .coalg import BialgebraData, Side
from .exactalg import FieldSpec, InputError, Matrix
from .gabi import GabiStructure
from .modcat import AModule, check_module
from .settheory import FiniteMonoid, MonoidGabi


@dataclass
class Definition:
    """Everything a definition file declares."""

    kind: str
    name: str = ""
    algebra: FinAlgebra | None = None
    gabi: GabiStructure | None = None
    gabi2: GabiStructure | None = None
    bialgebra: BialgebraData | None = None
    antipode: Matrix | None = None
    modules: list[AModule] = field(default_factory=list)
    monoid: FiniteMonoid | None = None
    monoid_gabi: MonoidGabi | None = None


def _at(path: str, exc: Exception) -> InputError:
    return InputError(f"{path}: {exc}")


def _get(doc: dict, key: str, path: str):
    if not isinstance(doc, dict) or key not in doc:
        raise InputError(f"{path}: missing key {key!r}")
    return doc[key]


def parse_field(doc) -> FieldSpec:
    kind = _get(doc, "kind", "field")
    if kind == "Q":
        return FieldSpec.rationals()
    if kind == "Fp":
        p = _get(doc, "p", "field")
        if not isinstance(p, int):
            raise InputError("field.p: must be an integer")
        return FieldSpec.prime(p)
    raise InputError(f"field.kind: unknown field {kind!r}")


def parse_matrix(f: FieldSpec, rows, shape: tuple[int, int], path: str) -> Matrix:
    if not isinstance(rows, list) or len(rows) != shape[0] or any(not isinstance(r, list) or len(r) != shape[1] for r in rows):
        raise InputError(f"{path}: expected a {shape[0]}x{shape[1]} matrix")
    try:
        return Matrix.from_values(f, rows, cols=shape[1])
    except InputError as exc:
        raise _at(path, exc) from None


def _parse_algebra(doc: dict, validate: bool) -> FinAlgebra:
    f = parse_field(_get(doc, "field", "document"))
    n = _get(doc, "dim", "document")
    if not isinstance(n, int) or n < 1:
        raise InputError("dim: must be a positive integer")
    names = doc.get("basis_names")
    mul = _get(doc, "mul", "document")
    if not isinstance(mul, list) or len(mul) != n:
        raise InputError(f"mul: expected {n} rows")
    for i, row in enumerate(mul):
        if not isinstance(row, list) or len(row) != n or any(not isinstance(v, list) or len(v) != n for v in row):
            raise InputError(f"mul[{i}]: expected {n} vectors of length {n}")
    unit = _get(doc, "unit", "document")
    if not isinstance(unit, list) or len(unit) != n:
        raise InputError(f"unit: expected a vector of length {n}")
    try:
        a = FinAlgebra(f, [[[f.coerce(x) for x in v] for v in row] for row in mul], [f.coerce(x) for x in unit], names)
    except InputError as exc:
        raise _at("mul", exc) from None
    if validate:
        rep = check_algebra(a)
        if not rep.passed:
            bad = rep.findings[0]
            raise InputError(f"mul: {bad.label} fails at {bad.witness}")
    return a


def _parse_gabi(a: FinAlgebra, doc, path: str) -> GabiStructure:
    n = a.dim
    delta = parse_matrix(a.field, _get(doc, "delta", path), (n * n, n), f"{path}.delta")
    eps = parse_matrix(a.field, _get(doc, "eps", path), (1, n), f"{path}.eps")
    side = doc.get("side", "left")
    if side not in ("left", "right"):
        raise InputError(f"{path}.side: must be 'left' or 'right'")
    return GabiStructure(a, delta, eps, Side(side))


def parse_modules(a: FinAlgebra, docs, path: str = "modules", validate: bool = True) -> list[AModule]:
    if not isinstance(docs, list):
        raise InputError(f"{path}: expected a list")
    out = []
    for k, d in enumerate(docs):
        p = f"{path}[{k}]"
        m = _get(d, "dim", p)
        if not isinstance(m, int) or m < 0:
            raise InputError(f"{p}.dim: must be a non-negative integer")
        acts = _get(d, "action", p)
        if not isinstance(acts, list) or len(acts) != a.dim:
            raise InputError(f"{p}.action: expected {a.dim} matrices")
        mats = [parse_matrix(a.field, r, (m, m), f"{p}.action[{i}]") for i, r in enumerate(acts)]
        mod = AModule(a, m, mats, d.get("name", f"module{k}"))
        if validate:
            rep = check_module(mod)
            if not rep.passed:
                raise InputError(f"{p}: {rep.findings[0].label} fails at {rep.findings[0].witness}")
        out.append(mod)
    return out


def _parse_monoid(doc: dict) -> Definition:
    size = _get(doc, "size", "document")
    table = _get(doc, "table", "document")
    if isinstance(size, int) and isinstance(table, list) and len(table) == size * size and all(isinstance(x, int) for x in table):
        table = [table[i * size:(i + 1) * size] for i in range(size)]
    try:
        m = FiniteMonoid(size, table, _get(doc, "identity", "document"), doc.get("name", ""))
    except (InputError, TypeError) as exc:
        raise _at("table", exc) from None
    gabi = None
    if "gabi" in doc:
        try:
            gabi = MonoidGabi(m, _get(doc["gabi"], "delta", "gabi"))
        except (InputError, TypeError) as exc:
            raise _at("gabi.delta", exc) from None
    return Definition("monoid", m.name, monoid=m, monoid_gabi=gabi)


def parse_document(doc: dict, validate: bool = True) -> Definition:
    if not isinstance(doc, dict):
        raise InputError("document: expected a JSON object")
    if "table" in doc and "size" in doc:
        return _parse_monoid(doc)
    a = _parse_algebra(doc, validate)
    d = Definition("algebra", doc.get("name", ""), algebra=a)
    for key in ("gabi", "gabi2"):
        if key in doc:
            try:
                setattr(d, key, _parse_gabi(a, doc[key], key))
            except InputError as exc:
                msg = str(exc)
                raise InputError(msg if msg.startswith(key) else f"{key}: {msg}") from None
    if "bialgebra" in doc:
        b = doc["bialgebra"]
        n = a.dim
        comul = parse_matrix(a.field, _get(b, "comul", "bialgebra"), (n * n, n), "bialgebra.comul")
        counit = parse_matrix(a.field, _get(b, "counit", "bialgebra"), (1, n), "bialgebra.counit")
        d.bialgebra = BialgebraData.build(a, comul, counit)
        if "antipode" in b:
            d.antipode = parse_matrix(a.field, b["antipode"], (n, n), "bialgebra.antipode")
    if "modules" in doc:
        d.modules = parse_modules(a, doc["modules"], validate=validate)
    return d


def load_json(path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno}: {exc.msg}") from None


def parse_definition(path, validate: bool = True) -> Definition:
    """Read a definition file and run the structural checks of what it declares."""
    return parse_document(load_json(path), validate)


# serialization -------------------------------------------------------


def scalar(f: FieldSpec, x) -> str:
    return str(f.format(x))


def matrix_doc(m: Matrix) -> list:
    return [[scalar(m.field, x) for x in row] for row in m.data]


def field_doc(f: FieldSpec) -> dict:
    return {"kind": "Q"} if not f.is_prime else {"kind": "Fp", "p": f.p}


def algebra_doc(a: FinAlgebra, name: str = "") -> dict:
    f = a.field
    doc = {
        "field": field_doc(f),
        "dim": a.dim,
        "basis_names": list(a.basis_names),
        "mul": [[[scalar(f, x) for x in v] for v in row] for row in a.table],
        "unit": [scalar(f, x) for x in a.unit],
    }
    if name:
        doc["name"] = name
    return doc


def gabi_doc(g: GabiStructure) -> dict:
    return {"delta": matrix_doc(g.delta), "eps": matrix_doc(g.eps), "side": g.side.value}


def bialgebra_doc(b: BialgebraData, antipode: Matrix | None = None) -> dict:
    doc = {"comul": matrix_doc(b.comul), "counit": matrix_doc(b.counit)}
    if antipode is not None:
        doc["antipode"] = matrix_doc(antipode)
    return doc


def module_doc(m: AModule) -> dict:
    return {"name": m.name, "dim": m.dim, "action": [matrix_doc(r) for r in m.action]}


def monoid_doc(m: FiniteMonoid, gabi: MonoidGabi | None = None) -> dict:
    doc = {"name": m.name, "size": m.size, "identity": m.identity, "table": [list(r) for r in m.table]}
    if gabi is not None:
        doc["gabi"] = {"delta": [list(p) for p in gabi.delta]}
    return doc


def dumps(doc) -> str:
    """Canonical JSON text: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
