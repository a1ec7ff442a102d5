"""Regeneration of the five classification tables from the engine."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .charlattice import ScenarioError, TorusCharacter, parse_scenario, weyl_act
from .classify import (
    CONDITION_TEXT,
    _levi_label,
    case_by_key,
    case_character,
    classify,
    classify_case,
    fmt_q,
    form_text,
    greek,
    r1_conjugator,
    table_relation,
)
from .rootdata import COROOTS

__all__ = ["Table", "emit_tables", "table1", "table2", "table3", "table4", "table5"]


@dataclass(frozen=True)
class Table:
    number: int
    caption: str
    header: tuple
    rows: tuple

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.header)
        w.writerows(self.rows)
        return buf.getvalue()

    def to_markdown(self) -> str:
        lines = [
            "| " + " | ".join(self.header) + " |",
            "|" + "|".join("---" for _ in self.header) + "|",
        ]
        lines += ["| " + " | ".join(r) + " |" for r in self.rows]
        lines.append("")
        lines.append(f"Table {self.number}. {self.caption}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "csv":
            return self.to_csv()
        if fmt == "md":
            return self.to_markdown()
        raise ValueError(f"unknown format {fmt!r}")


def _coroot_text(name: str) -> str:
    g = greek(name)
    return f"{g}∨" if len(name) == 1 else f"({g})∨"


def table1() -> Table:
    rows = tuple(
        (_coroot_text(g.name), f"{form_text(g.c1, g.c2)} = 1, {CONDITION_TEXT[g.name]}") for g in COROOTS
    )
    return Table(1, "Reducibility point", ("coroot", "rank 1 reducibility (s1, s2, χ1, χ2)"), rows)


_TABLE2 = (
    "1,2,1,1",
    "2/3,1,chi1,1",
    "2,3,1,chi2;norm",
    "3,5,1,1",
    "1,2,1,chi2;norm",
    "1,2,1,chi2;quad",
    "1,2,chi1,chi2;quad",
    "1,2,chi1,1;res",
)


def _available(key: str, galois: bool) -> bool:
    try:
        case_character(key, galois)
    except ScenarioError:
        return False
    return True


def table2(galois: bool = True) -> Table:
    rows = []
    for key in _TABLE2:
        if not _available(key, galois):
            continue
        entry = case_by_key(key)
        chi = case_character(key, galois)
        rep = classify(chi)
        rel = table_relation(entry, chi)
        rows.append(
            (
                f"#R = {len(rep.rset)}",
                ", ".join(greek(c) for c in rep.rset),
                f"w_{greek(rel.word)}" if rel is not None else "",
                entry.title,
            )
        )
    return Table(2, "#R > 1", ("#R", "reducible coroots", "relation", "(s1, s2, χ1, χ2)"), tuple(rows))


# Each row of the regular #R = 1 table imposes its own discrete condition.
_T3_SCENARIO = {
    "a": ("rel 2*chi1 - 1*nm(chi2) = 0", "chi1", "chi2"),
    "b": ("rel 1*res(chi1) - 2*chi2 = 0", "chi1", "chi2"),
    "a+b": ("rel 1*chi1 - 1*nm(chi2) = 0", "chi1", "chi2"),
    "2a+b": ("", "1", "chi2"),
    "3a+b": ("rel 1*res(chi1) - 1*chi2 = 0", "chi1", "chi2"),
    "3a+2b": ("", "chi1", "1"),
}


def _affine_text(c1, c2, c0) -> str:
    head = form_text(c1, c2) if (c1, c2) != (0, 0) else ""
    if c0 == 0:
        return head or "0"
    if not head:
        return fmt_q(c0)
    return f"{head} {'-' if c0 < 0 else '+'} {fmt_q(abs(c0))}"


def levi_exponent_text(gamma: str) -> str:
    """``s`` of the rank-one datum on the hyperplane ``γ∨ = 1``, in one variable."""
    w, delta = r1_conjugator(gamma)
    (m11, m12), (m21, m22) = w.matrix
    # s = e1 s1 + e2 s2 on the conjugated point
    if delta == "a":
        e1, e2 = Fraction(m21, 2), Fraction(m22, 2)
    else:
        e1, e2 = Fraction(3 * m11, 2), Fraction(3 * m12, 2)
    g = next(c for c in COROOTS if c.name == gamma)
    options = []
    if g.c2:  # s2 = (1 - c1 s1) / c2
        k = e1 - e2 * Fraction(g.c1, g.c2)
        options.append((k, 0, e2 / g.c2))
    if g.c1:  # s1 = (1 - c2 s2) / c1
        k = e2 - e1 * Fraction(g.c2, g.c1)
        options.append((0, k, e1 / g.c1))
    unit = [o for o in options if abs(o[0] + o[1]) == 1]
    c1, c2, c0 = (unit or options)[0]
    return _affine_text(c1, c2, c0)


def table3() -> Table:
    rows = []
    for g in COROOTS:
        rel, a, b = _T3_SCENARIO[g.name]
        scn = parse_scenario("atom chi1 domain E order inf\natom chi2 domain F order inf\n" + rel)
        chi = TorusCharacter.make(0, 0, a, b, scn)
        w, delta = r1_conjugator(g.name)
        plus = weyl_act(w, chi)
        s = levi_exponent_text(g.name)
        rows.append(
            (
                f"{form_text(g.c1, g.c2)} = 1, {CONDITION_TEXT[g.name]}",
                _levi_label("St", delta, s, plus),
                _levi_label("Triv", delta, s, plus),
            )
        )
    return Table(3, "Regular #R = 1", ("condition", "subrepresentation", "Langlands quotient"), tuple(rows))


_TABLE4 = ("1,2,chi1,1;res", "1,2,1,chi2;quad", "1,2,chi1,chi2;quad", "2,3,1,chi2;norm", "3,5,1,1")


def table4(galois: bool = True) -> Table:
    rows = []
    for key in _TABLE4:
        if not _available(key, galois):
            continue
        entry = case_by_key(key)
        if entry.alias_of:
            rows.append((entry.title, f"≃ {case_by_key(entry.alias_of).title}", "", "", ""))
            continue
        rep = classify_case(key, galois)
        rows.append((entry.title, *(c.label for c in rep.constituents)))
    header = ("case", "subrepresentation", "quotient of the sub", "sub of the quotient", "Langlands quotient")
    return Table(4, "Regular #R = 2", header, tuple(rows))


_TABLE5_DB = ("1,2,1,chi2;norm", "2/3,1,chi1,1", "2,3,1,1")
_TABLE5_GENERIC = (
    ("(1,3/2,1,χ2;χ2²=1)", "atom chi2 domain F order 2", (1, Fraction(3, 2)), "1", "chi2"),
    ("(1/2,1,χ1,1;χ1²=1)", "atom chi1 domain E order 2", (Fraction(1, 2), 1), "chi1", "1"),
)


def table5(galois: bool = True) -> Table:
    rows = []
    for key in _TABLE5_DB:
        if not _available(key, galois):
            continue
        rep = classify_case(key, galois)
        sub, lq = rep.constituents
        rows.append((case_by_key(key).title, sub.label, lq.label))
    for title, text, lam, a, b in _TABLE5_GENERIC:
        scn = parse_scenario(("galois false\n" if not galois else "") + text)
        rep = classify(TorusCharacter.make(*lam, a, b, scn))
        sub, lq = rep.constituents
        rows.append((title, sub.label, lq.langlands))
    return Table(5, "Singular length 2", ("case", "subrepresentation", "Langlands quotient"), tuple(rows))


def emit_tables(which=(1, 2, 3, 4, 5), galois: bool = True) -> list[Table]:
    makers = {
        1: table1,
        2: lambda: table2(galois),
        3: table3,
        4: lambda: table4(galois),
        5: lambda: table5(galois),
    }
    return [makers[n]() for n in which]
