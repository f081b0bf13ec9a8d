from __future__ import annotations

import json

import pytest

from gabikit.algcore import check_algebra
from gabikit.coalg import Side, check_bialgebra, is_convolution_inverse
from gabikit.exactalg import InputError
from gabikit.fixtures import corpus_documents, data_dir, fixture_paths, load_fixture
from gabikit.formats import dumps, gabi_doc, parse_definition, parse_document
from gabikit.gabi import Strategy, check_gabi, derive_hopf
from gabikit.modcat import check_module


def write(tmp_path, doc, name="doc.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return path


def test_shipped_corpus_is_current():
    docs = corpus_documents()
    shipped = {f"{p.parent.name}/{p.name}": p.read_text() for p in fixture_paths()}
    assert shipped == {rel: dumps(doc) for rel, doc in docs.items()}


def test_q_c2_fixture():
    d = load_fixture("algebras/q_c2.json")
    assert d.kind == "algebra" and d.algebra.dim == 2
    assert list(d.algebra.basis_names) == ["1", "g"]


def test_h4_fixture_has_gabi():
    d = load_fixture("algebras/sweedler_h4.json")
    assert d.gabi.algebra.dim == 4
    assert check_gabi(d.gabi).passed and check_gabi(d.gabi2).passed


@pytest.mark.parametrize("path", fixture_paths(), ids=lambda p: p.name)
def test_every_fixture_parses(path):
    d = parse_definition(path)
    if d.kind == "algebra":
        assert check_algebra(d.algebra).passed
        if d.gabi is not None:
            assert check_gabi(d.gabi).passed
        if d.bialgebra is not None:
            assert check_bialgebra(d.bialgebra).passed
            assert is_convolution_inverse(d.antipode, d.bialgebra, Side.TWO_SIDED)
    else:
        assert d.monoid.size >= 1


def test_non_associative_table_names_triple(tmp_path):
    doc = json.loads((data_dir() / "algebras/q_c3.json").read_text())
    doc["mul"][1][1] = ["1", "0", "0"]
    with pytest.raises(InputError, match=r"associativity fails at \("):
        parse_definition(write(tmp_path, doc))
    # without validation the table still loads, so check-algebra can report it
    d = parse_document(doc, validate=False)
    assert not check_algebra(d.algebra).passed


@pytest.mark.parametrize("mutate, where", [
    (lambda d: d.pop("field"), "document"),
    (lambda d: d.update(dim=0), "dim"),
    (lambda d: d["gabi"].update(delta=[["1"]]), "gabi.delta"),
    (lambda d: d["gabi"].update(side="up"), "gabi.side"),
    (lambda d: d["bialgebra"].update(counit=[["1"]]), "bialgebra.counit"),
    (lambda d: d.update(unit=["1/0", "0"]), "mul"),
    (lambda d: d.update(modules=[{"dim": 1, "action": [[["1"]], [["2"]]]}]), "modules[0]"),
])
def test_rejections_carry_key_path(tmp_path, mutate, where):
    doc = json.loads((data_dir() / "algebras/q_c2.json").read_text())
    mutate(doc)
    with pytest.raises(InputError) as info:
        parse_definition(write(tmp_path, doc))
    assert str(info.value).startswith(where)


def test_bad_json_and_missing_file(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{")
    with pytest.raises(InputError, match="line 1"):
        parse_definition(path)
    with pytest.raises(InputError):
        parse_definition(tmp_path / "absent.json")


def test_monoid_flat_table_and_gabi():
    d = parse_document({"name": "C2", "size": 2, "identity": 0, "table": [0, 1, 1, 0], "gabi": {"delta": [[0, 0], [1, 1]]}})
    assert d.monoid.table == ((0, 1), (1, 0))
    assert d.monoid_gabi.delta == ((0, 0), (1, 1))
    with pytest.raises(InputError, match="table"):
        parse_document({"size": 2, "identity": 0, "table": [[0, 1], [1, 2]]})


def test_fractions_round_trip():
    doc = json.loads((data_dir() / "algebras/q_c2.json").read_text())
    doc["modules"] = [{"name": "half", "dim": 1, "action": [[["1"]], [["-1"]]]}]
    d = parse_document(doc)
    assert check_module(d.modules[0]).passed
    g = d.gabi
    assert parse_document(json.loads(dumps({**doc, "gabi": gabi_doc(g)}))).gabi.delta == g.delta


@pytest.mark.parametrize("rel", ["algebras/q_c3.json", "algebras/sweedler_h4.json", "algebras/f2_dual_numbers.json"])
@pytest.mark.parametrize("strategy", [Strategy.BETA_INVERSE, Strategy.INVERTIBLE_ANTIPODE])
def test_derived_hopf_round_trips(rel, strategy):
    from gabikit.cli import _hopf_derived

    d = load_fixture(rel)
    res = derive_hopf(d.gabi, strategy)
    back = parse_document(json.loads(dumps(_hopf_derived(d.name, res))))
    assert check_bialgebra(back.bialgebra).passed
    assert back.bialgebra.comul == res.bialgebra.comul
    assert is_convolution_inverse(back.antipode, back.bialgebra, Side.TWO_SIDED)
