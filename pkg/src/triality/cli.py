"""Command line front end.

Exit codes: 0 success, 1 domain error (bad scenario, bad model, failed
check), 2 usage error.
"""

from __future__ import annotations

import argparse
import re
import sys
from collections import Counter
from fractions import Fraction
from pathlib import Path

from .cases import CASES, case_by_key
from .charlattice import TRIVIAL, ScenarioError, Scenario, TorusCharacter, parse_scenario, predicate_eval, weyl_act
from .classify import CONDITION_TEXT, CONDITIONS, classify, classify_case, greek, normalize, rank1_set
from .grothendieck import GrothendieckElement, PSClass, jacquet, r0_of_full_ps
from .rootdata import COROOTS, weyl_group
from .tables import emit_tables
from .unitary import region_sample
from . import checks
from . import weiloracle as wo

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


def rational(text: str) -> Fraction:
    if not _RATIONAL.match(text.strip()):
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer or p/q rational")
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise argparse.ArgumentTypeError(f"{text!r} has zero denominator") from None


def _which(text: str) -> tuple[int, ...]:
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        m = re.fullmatch(r"(\d)\.\.(\d)", part) or re.fullmatch(r"(\d)-(\d)", part)
        nums = range(int(m[1]), int(m[2]) + 1) if m else [int(part)] if part.isdigit() else None
        if nums is None:
            raise argparse.ArgumentTypeError(f"bad table selection {text!r}")
        for n in nums:
            if not 1 <= n <= 5:
                raise argparse.ArgumentTypeError(f"no table {n}")
            out.append(n)
    return tuple(out)


def _window(text: str) -> tuple[Fraction, ...]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("window needs a,b,c,d")
    a, b, c, d = (rational(p) for p in parts)
    if not (a < b and c < d):
        raise argparse.ArgumentTypeError("window must satisfy a < b and c < d")
    return a, b, c, d


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _character_options(p: argparse.ArgumentParser, required: bool = True):
    p.add_argument("--s1", type=rational, required=required)
    p.add_argument("--s2", type=rational, required=required)
    p.add_argument("--scenario", help="scenario file")
    p.add_argument("--chi1", default="1", help="character of E^x (scenario expression)")
    p.add_argument("--chi2", default="1", help="character of F^x (scenario expression)")
    p.add_argument("--non-galois", action="store_true", help="treat E/F as non-Galois")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="triality", description="Principal series of PGSO_8^E and the Weil-group oracle.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("orbit", help="Weyl orbit of (s1, s2, χ1, χ2) with multiplicities")
    _character_options(p)

    p = sub.add_parser("classify", help="reducibility and constituents of I(χ)")
    _character_options(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--unitary-mode", choices=("keys", "printed"), default="keys")

    p = sub.add_parser("rank1", help="rank-one reducibility test per positive coroot")
    _character_options(p)

    for verb, text in (("jacquet", "Jacquet modules of a database case"), ("aubert", "Aubert partners in a case")):
        p = sub.add_parser(verb, help=text)
        p.add_argument("--case", required=True, help="case key, e.g. 3,5,1,1 (see --list)")
        p.add_argument("--non-galois", action="store_true")

    p = sub.add_parser("cases", help="list the database case keys")

    p = sub.add_parser("tables", help="regenerate the classification tables")
    p.add_argument("--which", type=_which, default=(1, 2, 3, 4, 5))
    p.add_argument("--format", choices=("md", "csv"), default="md")
    p.add_argument("--non-galois", action="store_true")

    p = sub.add_parser("region", help="sample the unitary region of J(s1, s2, χ1, χ2)")
    p.add_argument("--window", type=_window, default=(Fraction(0), Fraction(4), Fraction(0), Fraction(6)))
    p.add_argument("--grid", type=int, default=200)
    p.add_argument("--out", required=True, help="output file ending in .csv or .svg")
    p.add_argument("--scenario")
    p.add_argument("--chi1", default="1")
    p.add_argument("--chi2", default="1")
    p.add_argument("--reading", choices=("narrow", "wide"), default="narrow")

    p = sub.add_parser("weil", help="run a Weil-oracle check on a finite model")
    p.add_argument("--check", choices=("prop314", "lemma315", "thm317", "tensor"), required=True)
    p.add_argument("--model", help="builtin name or model file")

    p = sub.add_parser("check", help="run the invariant suite")
    p.add_argument("--all", action="store_true", required=True)
    return parser


def _scenario(args) -> Scenario:
    scn = parse_scenario(Path(args.scenario).read_text()) if args.scenario else TRIVIAL
    if getattr(args, "non_galois", False):
        scn = scn.with_galois(False)
    return scn


def _character(args) -> TorusCharacter:
    return TorusCharacter.make(args.s1, args.s2, args.chi1, args.chi2, _scenario(args))


def _cmd_orbit(args, out):
    chi = _character(args)
    counts = Counter(weyl_act(w, chi) for w in weyl_group())
    for c in sorted(counts):
        out.write(f"{c}\t{counts[c]}\n")
    out.write(f"orbit size {len(counts)}, stabilizer order {12 // len(counts)}\n")


def _cmd_classify(args, out):
    rep = classify(_character(args), args.unitary_mode)
    out.write(rep.to_json() + "\n" if args.json else rep.render())


def _cmd_rank1(args, out):
    chi, w = normalize(_character(args))
    out.write(f"dominant {chi}  (w = {w})\n")
    for g in COROOTS:
        value = g(chi.lam)
        holds = predicate_eval(chi, CONDITIONS[g.name])
        red = value == 1 and holds
        out.write(f"{greek(g.name)}∨\t⟨λ,γ∨⟩ = {value}\t{CONDITION_TEXT[g.name]}: {'yes' if holds else 'no'}\t{'reducible' if red else '-'}\n")
    out.write(f"R = {rank1_set(chi)}\n")


def _case_report(args):
    case_by_key(args.case)
    return classify_case(args.case, not args.non_galois)


def _cmd_jacquet(args, out):
    rep = _case_report(args)
    out.write(f"case {rep.case}\n")
    for c in rep.constituents:
        out.write(f"{c.label}\n  r_∅ {c.jacquet}\n")
    full = GrothendieckElement.of("G", [PSClass(rep.chi)])
    out.write(f"r_∅(I(χ)) {r0_of_full_ps(rep.chi)}\n")
    out.write(f"r_α(I(χ)) {jacquet('a', full)}\n")
    out.write(f"r_β(I(χ)) {jacquet('b', full)}\n")


def _cmd_aubert(args, out):
    rep = _case_report(args)
    out.write(f"case {rep.case}\n")
    for c in rep.constituents:
        out.write(f"{c.label} -> {c.aubert_partner}\n")


def _cmd_cases(args, out):
    for e in CASES:
        out.write(f"{e.key}\t{e.title}\n")


def _cmd_tables(args, out):
    tables = emit_tables(args.which, galois=not args.non_galois)
    out.write("\n".join(t.render(args.format) for t in tables))


def _cmd_region(args, out):
    scn = parse_scenario(Path(args.scenario).read_text()) if args.scenario else TRIVIAL
    if args.grid < 2:
        raise ValueError("grid must be at least 2")
    sample = region_sample(args.window, args.grid, args.chi1, args.chi2, scn, args.reading)
    path = Path(args.out)
    if path.suffix == ".csv":
        path.write_text(sample.to_csv())
    elif path.suffix == ".svg":
        path.write_text(sample.to_svg())
    else:
        raise ValueError("--out must end in .csv or .svg")
    counts = Counter(c[2] for c in sample.cells)
    out.write(" ".join(f"{k}={counts[k]}" for k in sorted(counts)) + f"\nwrote {path}\n")


_DEFAULT_MODEL = {"prop314": "d8", "lemma315": "f42", "thm317": "d12c13", "tensor": "f42"}


def _cmd_weil(args, out) -> int:
    model = wo.load_model(args.model or _DEFAULT_MODEL[args.check])
    if args.check == "prop314":
        rep = wo.prop314_verify(model)
    elif args.check == "lemma315":
        rep = wo.lemma315_report(model)
    elif args.check == "thm317":
        rep = wo.thm317_report(model)
    else:
        compared, bad = wo.tensor_agreement(model)
        out.write(f"model {model.name}: {compared} classes compared, {bad} mismatches\n")
        return 0 if not bad else 1
    for k, v in vars(rep).items():
        out.write(f"{k}\t{v}\n")
    out.write(f"ok\t{rep.ok}\n")
    return 0 if rep.ok else 1


def _cmd_check(args, out) -> int:
    results = checks.run_all()
    for r in results:
        out.write(r.line() + "\n")
    return 0 if all(r.ok for r in results) else 1


_COMMANDS = {
    "orbit": _cmd_orbit,
    "classify": _cmd_classify,
    "rank1": _cmd_rank1,
    "jacquet": _cmd_jacquet,
    "aubert": _cmd_aubert,
    "cases": _cmd_cases,
    "tables": _cmd_tables,
    "region": _cmd_region,
    "weil": _cmd_weil,
    "check": _cmd_check,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code = _COMMANDS[args.verb](args, out)
    except (ScenarioError, wo.ModelError, ValueError, KeyError, LookupError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 1
    return code or 0


run = main
