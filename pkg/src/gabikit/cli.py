"""Command-line front end: ``gabikit <command> FILE [options]``.

Exit codes: 0 when the verdict is PASS, 1 for FAIL or NOT_APPLICABLE,
2 for unreadable or invalid input.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .algcore import check_algebra
from .coalg import Side
from .exactalg import InputError
from .formats import (
    Definition,
    algebra_doc,
    bialgebra_doc,
    dumps,
    gabi_doc,
    load_json,
    matrix_doc,
    monoid_doc,
    parse_definition,
    parse_modules,
)
from .gabi import (
    DEFAULT_SEARCH_CAP,
    GabiStructure,
    HopfResult,
    Strategy,
    antipode,
    canonical_beta,
    check_double,
    check_gabi,
    check_tricocycloid,
    derive_hopf,
    search_gabi,
    tricocycloid,
)
from .modcat import (
    adjunction_check,
    check_module,
    closed_maps_check,
    hom_module,
    normality_check,
    regular_module,
    trivial_module,
)
from .report import FAULT, Finding, Report
from .settheory import Level, check_monoid_gabi, group_gabi, is_group, search_monoid_gabi

PASS, FAIL, NOT_APPLICABLE = "PASS", "FAIL", "NOT_APPLICABLE"
EXIT = {PASS: 0, FAIL: 1, NOT_APPLICABLE: 1}


@dataclass
class ReportDocument:
    command: str
    verdict: str
    findings: list[Finding] = field(default_factory=list)
    facts: dict = field(default_factory=dict)
    derived: dict = field(default_factory=dict)

    @classmethod
    def from_report(cls, command: str, rep: Report, derived=None) -> ReportDocument:
        return cls(command, PASS if rep.passed else FAIL, list(rep.findings), dict(rep.facts), derived or {})

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "verdict": self.verdict,
            "findings": [
                {"label": f.label, "witness": f.witness, "detail": f.detail, "severity": f.severity}
                for f in self.findings
            ],
            "facts": self.facts,
            "derived": self.derived,
        }


def emit_report(doc: ReportDocument, fmt: str = "text") -> str:
    if fmt == "structured":
        return dumps(doc.to_dict())
    lines = [doc.verdict] + [f.line() for f in doc.findings]
    return "\n".join(lines) + "\n"


# helpers -------------------------------------------------------------


def _need_algebra(d: Definition) -> None:
    if d.kind != "algebra":
        raise InputError("expected an algebra definition file")


def _need_gabi(d: Definition, side: str | None, left: bool = True) -> GabiStructure:
    _need_algebra(d)
    if d.gabi is None:
        raise InputError("the file has no 'gabi' block")
    g = d.gabi
    if side is not None and g.side.value != side:
        g = GabiStructure(g.algebra, g.delta, g.eps, Side(side))
    if left and g.side is not Side.LEFT:
        raise InputError("this command needs a left gabi structure")
    return g


def _module_sample(d: Definition, g: GabiStructure, extra_path: str | None) -> list:
    a = g.algebra
    mods = [trivial_module(a, g.eps), regular_module(a)] + list(d.modules)
    if extra_path:
        doc = load_json(extra_path)
        docs = doc.get("modules", doc) if isinstance(doc, dict) else doc
        mods += parse_modules(a, docs, "modules")
    return mods


def _hopf_derived(a_name: str, res: HopfResult) -> dict:
    doc = algebra_doc(res.bialgebra.algebra, a_name)
    doc["bialgebra"] = bialgebra_doc(res.bialgebra, res.antipode)
    return doc


# commands ------------------------------------------------------------


def cmd_check_algebra(d: Definition, args) -> ReportDocument:
    _need_algebra(d)
    return ReportDocument.from_report(args.command, check_algebra(d.algebra))


def cmd_check_gabi(d: Definition, args) -> ReportDocument:
    g = _need_gabi(d, args.side, left=False)
    rep = check_gabi(g)
    derived = {}
    if rep.passed and g.side is Side.LEFT:
        derived["antipode"] = matrix_doc(antipode(g))
        derived["beta"] = matrix_doc(canonical_beta(g))
    return ReportDocument.from_report(args.command, rep, derived)


def _derive_one(g: GabiStructure, strategy: Strategy, name: str):
    res = derive_hopf(g, strategy)
    if res:
        return PASS, [], _hopf_derived(name, res)
    findings = list(res.report.findings) if res.report else []
    findings.append(Finding("derive-hopf", res.gate, res.detail))
    return (FAIL if res.gate in ("hopf-axioms", "gabi-axioms") else NOT_APPLICABLE), findings, None


def cmd_derive_hopf(d: Definition, args) -> ReportDocument:
    _need_algebra(d)
    strategy = Strategy(args.strategy)
    if d.gabi is not None:
        g = _need_gabi(d, args.side)
        verdict, findings, derived = _derive_one(g, strategy, d.name)
        return ReportDocument(args.command, verdict, findings, {"strategy": strategy.value}, derived or {})
    a = d.algebra
    if not a.field.is_prime:
        raise InputError("no 'gabi' block, and structures can only be searched for over F_p")
    census = search_gabi(a, None, args.cap)
    facts = {"strategy": strategy.value, "searched": True, "census size": len(census)}
    if not census:
        return ReportDocument(args.command, NOT_APPLICABLE, [Finding("search", "", "no gabi structure exists")], facts)
    verdicts, findings, results = [], [], []
    for k, g in enumerate(census):
        v, f, der = _derive_one(g, strategy, d.name)
        verdicts.append(v)
        findings += [Finding(x.label, f"structure {k}: {x.witness}", x.detail, x.severity) for x in f]
        results.append({"gabi": gabi_doc(g), "hopf": der})
    verdict = FAIL if FAIL in verdicts else NOT_APPLICABLE if NOT_APPLICABLE in verdicts else PASS
    return ReportDocument(args.command, verdict, findings, facts, {"results": results})


def cmd_tricocycloid(d: Definition, args) -> ReportDocument:
    g = _need_gabi(d, args.side)
    t = tricocycloid(g)
    return ReportDocument.from_report(args.command, check_tricocycloid(t), {"v": matrix_doc(t.v)})


def cmd_double_check(d: Definition, args) -> ReportDocument:
    g1 = _need_gabi(d, args.side)
    if d.gabi2 is None:
        raise InputError("the file has no 'gabi2' block")
    return ReportDocument.from_report(args.command, check_double(g1, d.gabi2))


def cmd_hom_action(d: Definition, args) -> ReportDocument:
    g = _need_gabi(d, args.side)
    mods = _module_sample(d, g, args.modules)
    rep = Report("hom action")
    derived = {}
    for M in mods:
        for N in mods:
            H = hom_module(g, M, N)
            sub = check_module(H)
            rep.absorb(sub, f"Hom({M},{N}) ")
            derived[f"Hom({M},{N})"] = [matrix_doc(r) for r in H.action]
        rep.absorb(closed_maps_check(g, M, mods), f"{M}: ")
    return ReportDocument.from_report(args.command, rep, derived)


def cmd_adjunction(d: Definition, args) -> ReportDocument:
    g = _need_gabi(d, args.side)
    mods = _module_sample(d, g, args.modules)
    rep = Report("adjunction")
    for M in mods:
        rep.absorb(adjunction_check(g, M, mods), f"{M}: ")
    return ReportDocument.from_report(args.command, rep)


def cmd_normality(d: Definition, args) -> ReportDocument:
    g = _need_gabi(d, args.side)
    extra = _module_sample(d, g, args.modules)[2:]
    return ReportDocument.from_report(args.command, normality_check(g, extra))


def cmd_search_gabi(d: Definition, args) -> ReportDocument:
    _need_algebra(d)
    census = search_gabi(d.algebra, None, args.cap)
    facts = {"census size": len(census)}
    derived = {"census": [gabi_doc(g) for g in census]}
    verdict = PASS if census else NOT_APPLICABLE
    return ReportDocument(args.command, verdict, [], facts, derived)


def _need_monoid(d: Definition):
    if d.kind != "monoid":
        raise InputError("expected a monoid definition file")
    return d.monoid


def cmd_set_check(d: Definition, args) -> ReportDocument:
    m = _need_monoid(d)
    level = Level(args.level)
    s = d.monoid_gabi
    if s is None:
        s = group_gabi(m)
        if not s:
            return ReportDocument(args.command, NOT_APPLICABLE, [Finding("group", "", "no delta given and the monoid is not a group")])
    rep = check_monoid_gabi(s, level)
    return ReportDocument.from_report(args.command, rep, {"monoid": monoid_doc(m, s)})


def cmd_set_search(d: Definition, args) -> ReportDocument:
    m = _need_monoid(d)
    level = Level(args.level)
    census = search_monoid_gabi(m, level, args.cap)
    group, inv = is_group(m)
    facts = {"census size": len(census), "is group": group, "level": level.value}
    findings = []
    if level is Level.FULL and bool(census) != group:
        findings.append(Finding("group characterization", m.name, "census non-empty does not match is_group", FAULT))
    if level is Level.FULL and group and census and [s.delta for s in census] != [group_gabi(m).delta]:
        findings.append(Finding("uniqueness", m.name, "census differs from (m, m^-1)", FAULT))
    verdict = FAIL if findings else PASS if census else NOT_APPLICABLE
    derived = {"census": [[list(p) for p in s.delta] for s in census]}
    return ReportDocument(args.command, verdict, findings, facts, derived)


COMMANDS = {
    "check-algebra": (cmd_check_algebra, "associativity and unit of the multiplication table"),
    "check-gabi": (cmd_check_gabi, "augmentation, multiplicativity and GA1-GA3"),
    "derive-hopf": (cmd_derive_hopf, "build and verify the Hopf structure of a gabi algebra"),
    "tricocycloid": (cmd_tricocycloid, "braid and augmentation equations of v(a (x) b) = b_+ (x) b_- a"),
    "double-check": (cmd_double_check, "interchange identities for the gabi and gabi2 blocks"),
    "hom-action": (cmd_hom_action, "hom modules and linearity of i, j and Gamma"),
    "adjunction": (cmd_adjunction, "unit, counit and triangle identities of the tensor-hom adjunction"),
    "normality": (cmd_normality, "sampled invertibility of beta, alpha and lambda"),
    "search-gabi": (cmd_search_gabi, "all gabi structures over F_p"),
    "set-check": (cmd_set_check, "gabi conditions for a monoid"),
    "set-search": (cmd_set_search, "all gabi structures on a monoid"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gabikit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="JSON definition file")
        p.add_argument("--strategy", choices=[s.value for s in Strategy], default=Strategy.BETA_INVERSE.value)
        p.add_argument("--side", choices=["left", "right"], default=None, help="override the side of the gabi block")
        p.add_argument("--level", choices=[lv.value for lv in Level], default=Level.FULL.value)
        p.add_argument("--cap", type=int, default=DEFAULT_SEARCH_CAP, help="largest candidate count a search may enumerate")
        p.add_argument("--format", choices=["text", "structured"], default="text")
        p.add_argument("--modules", default=None, help="JSON file with extra test modules")
    return parser


def run(argv=None) -> tuple[str, int]:
    """Parse arguments, run the command, return (output, exit code)."""
    args = build_parser().parse_args(argv)
    handler = COMMANDS[args.command][0]
    validate = args.command != "check-algebra"
    try:
        d = parse_definition(args.file, validate=validate)
        doc = handler(d, args)
    except InputError as exc:
        return f"error: {Path(args.file).name}: {exc}\n", 2
    return emit_report(doc, args.format), EXIT[doc.verdict]


def main(argv=None) -> int:
    out, code = run(argv)
    (sys.stderr if code == 2 else sys.stdout).write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
