"""Hermitian duals, unitarity verdicts and the spherical unitary region.

Discrete data is passed as scenario expressions (``"1"``, ``"chi1"``,
``"nm(chi2)"``...) and decided inside a :class:`Scenario`.  The clauses for
the maximal parabolics are indexed ``i``..``vi`` and those for the Borel
``i``..``iv``; the witness string of every verdict names the clause used.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .charlattice import Scenario, TorusCharacter, predicate_eval
from .classify import (
    NON_TEMPERED,
    CONDITIONS,
    Constituent,
    LanglandsDatum,
    classify_case,
    fmt_q,
    form_text,
    greek,
)
from .cases import CASES
from .rootdata import COROOTS

__all__ = [
    "UNITARY",
    "NON_UNITARY",
    "ISOLATED",
    "UnitarityVerdict",
    "is_hermitian",
    "lemma31_reducibility",
    "lemma33_unitary",
    "thm34_unitarity",
    "Segment",
    "lemma35_lines",
    "thm36_unitarity",
    "datum_unitarity",
    "constituent_unitarity",
    "RegionSample",
    "region_sample",
    "aubert_preserves_unitarity_check",
]

UNITARY, NON_UNITARY, ISOLATED = "unitary", "non-unitary", "isolated-unitary"
BOUNDARY = " (boundary/closure)"


@dataclass(frozen=True)
class UnitarityVerdict:
    verdict: str
    witness: str
    note: str = ""

    @property
    def is_unitary(self) -> bool:
        return self.verdict in (UNITARY, ISOLATED)


def _q(x) -> Fraction:
    return Fraction(str(x)) if not isinstance(x, Fraction) else x


def _char(chi1, chi2, scenario: Scenario | None) -> TorusCharacter:
    return TorusCharacter.make(0, 0, chi1, chi2, scenario or Scenario())


def _holds(t: TorusCharacter, p: str) -> bool:
    return predicate_eval(t, p)


def _bounded(s: Fraction, bound: Fraction, clause: str) -> UnitarityVerdict:
    if s < bound:
        return UnitarityVerdict(UNITARY, f"{clause}: s < {fmt_q(bound)}")
    if s == bound:
        return UnitarityVerdict(UNITARY, f"{clause}: s = {fmt_q(bound)}" + BOUNDARY)
    return UnitarityVerdict(NON_UNITARY, f"{clause}: s > {fmt_q(bound)}")


# ---------------------------------------------------------------------------
# Hermitian shapes


def is_hermitian(d: LanglandsDatum) -> tuple[bool, str | None]:
    """Whether ``J`` of the datum is Hermitian, with the matching clause shape.

    Shapes: ``B`` (Borel), ``i``..``vi`` (the maximal-parabolic families in
    the order δ⊗1 for α, 1⊗δ for β, I^α(χ1,χ1^{-1})⊗1, I^α(...)⊗χ2 quadratic,
    χ1⊗I^β(...) quadratic, 1⊗I^β(χ2,χ2^{-1})) or ``tempered``.
    """
    if d.parabolic == "G":
        return True, "tempered"
    c = d.chi
    if d.parabolic == "B":
        return (_holds(c, "2*a = 0, 2*b = 0"), "B")
    ps = "I^" in d.tempered
    if d.parabolic == "P_α":
        if not ps:
            return (_holds(c, "b = 0, 2*a = 0"), "i")
        if _holds(c, "b = 0"):
            return True, "iii"
        return (_holds(c, "2*a = 0, 2*b = 0"), "iv")
    if not ps:
        return (_holds(c, "a = 0, 2*b = 0"), "ii")
    if _holds(c, "a = 0"):
        return True, "vi"
    return (_holds(c, "2*a = 0, 2*b = 0"), "v")


# ---------------------------------------------------------------------------
# Reducibility of the tempered non-discrete families


def lemma31_reducibility(shape: str, s, chi1="1", chi2="1", scenario: Scenario | None = None) -> bool:
    """Reducibility of the four unitary-induced families at ``s > 0``.

    ``i``: I_α(s, I^α(χ1, χ1^{-1}χ2∘N)⊗χ2), ``ii``: I_α(s, I^α(χ1, χ1^{-1})⊗1),
    ``iii``: I_β(s, χ1^{-1}⊗I^β(χ2, χ1χ2^{-1})), ``iv``: I_β(s, 1⊗I^β(χ2, χ2^{-1})).
    """
    s = _q(s)
    t = _char(chi1, chi2, scenario)
    if shape == "i":
        return (
            (s == Fraction(1, 2) and _holds(t, "b = 0"))
            or (s == 1 and _holds(t, "res(a) = 0"))
            or (s == 1 and _holds(t, "a = nm(b)"))
        )
    if shape == "ii":
        return s == Fraction(1, 2) or (s == 1 and _holds(t, "res(a) = 0"))
    if shape == "iii":
        either = _holds(t, "res(a) = b") or _holds(t, "b = 0")
        return (s == Fraction(3, 2) and _holds(t, "a = 0")) or (s in (1, 3) and either)
    if shape == "iv":
        return s == Fraction(3, 2) or (s == 3 and _holds(t, "nm(b) = 0"))
    raise ValueError(f"unknown shape {shape!r}")


def lemma33_unitary(gamma: str, s) -> bool:
    """Degenerate series I_α(s, χ1∘det⊗1) / I_β(s, 1⊗χ2∘det) off reducibility."""
    s = _q(s)
    return s < (Fraction(1, 2) if gamma == "a" else Fraction(3, 2))


# ---------------------------------------------------------------------------
# Maximal parabolics


def thm34_unitarity(shape: str, s, chi1="1", chi2="1", scenario: Scenario | None = None) -> UnitarityVerdict:
    """Unitarity of the Hermitian Langlands quotients of maximal parabolics.

    ``chi1``/``chi2`` are the characters named in the clause: the GL2 data
    χ1 for ``i``, ``iii``, ``iv``; χ2 for ``ii``, ``vi``; the outer χ1 and GL2
    χ2 for ``v``; ``iv`` also takes the outer χ2.
    """
    s = _q(s)
    if s <= 0:
        raise ValueError("s must be positive")
    t = _char(chi1, chi2, scenario)
    if shape == "i":
        return _bounded(s, Fraction(1, 2), "(i)")
    if shape == "ii":
        return _bounded(s, Fraction(3, 2), "(ii)")
    if shape == "iii":
        if s == 1 and _holds(t, "res(a) = 0"):
            return UnitarityVerdict(ISOLATED, "(iii): χ1|F× = 1 and s = 1")
        return _bounded(s, Fraction(1, 2), "(iii)")
    if shape == "iv":
        if _holds(t, "a = 0") or _holds(t, "a = nm(b)"):
            return _bounded(s, Fraction(1), "(iv)")
        return UnitarityVerdict(NON_UNITARY, "(iv): χ1 is neither 1 nor χ2")
    if shape == "v":
        if _holds(t, "b = 0") or _holds(t, "res(a) = b"):
            return _bounded(s, Fraction(1), "(v)")
        return UnitarityVerdict(NON_UNITARY, "(v): χ2 is neither 1 nor χ1")
    if shape == "vi":
        if s == 3 and _holds(t, "nm(b) = 0, b != 0"):
            return UnitarityVerdict(ISOLATED, "(vi): s = 3, χ2∘N = 1, χ2 ≠ 1")
        return _bounded(s, Fraction(3, 2), "(vi)")
    raise ValueError(f"unknown shape {shape!r}")


# ---------------------------------------------------------------------------
# Reducibility lines in the open chamber


@dataclass(frozen=True)
class Segment:
    """Part of ``c1 s1 + c2 s2 = 1`` inside the open chamber (a ray if ``end`` is None)."""

    coroot: str
    c1: int
    c2: int
    start: tuple
    end: tuple | None
    direction: tuple

    def contains(self, s1, s2) -> bool:
        s1, s2 = _q(s1), _q(s2)
        if self.c1 * s1 + self.c2 * s2 != 1:
            return False
        return 2 * s1 - s2 > 0 and 2 * s2 - 3 * s1 > 0

    def clip(self, window) -> tuple | None:
        """Endpoints of the part inside ``(a, b, c, d)``, or None."""
        a, b, c, d = (Fraction(x) for x in window)
        (x0, y0), (dx, dy) = self.start, self.direction
        lo, hi = Fraction(0), None
        if self.end is not None:
            hi = Fraction(1)
            dx, dy = self.end[0] - x0, self.end[1] - y0
        for p0, dp, low, high in ((x0, dx, a, b), (y0, dy, c, d)):
            if dp == 0:
                if not low <= p0 <= high:
                    return None
                continue
            t1, t2 = (low - p0) / dp, (high - p0) / dp
            t1, t2 = min(t1, t2), max(t1, t2)
            lo = max(lo, t1)
            hi = t2 if hi is None else min(hi, t2)
        if hi is None or lo > hi:
            return None
        return (x0 + lo * dx, y0 + lo * dy), (x0 + hi * dx, y0 + hi * dy)

    def __str__(self):
        end = "∞" if self.end is None else f"({fmt_q(self.end[0])},{fmt_q(self.end[1])})"
        return (
            f"{greek(self.coroot)}∨: {form_text(self.c1, self.c2)} = 1 from "
            f"({fmt_q(self.start[0])},{fmt_q(self.start[1])}) to {end}"
        )


def _wall_hit(c1, c2, w1, w2):
    # intersection of c1 s1 + c2 s2 = 1 with w1 s1 + w2 s2 = 0
    det = c1 * w2 - c2 * w1
    if det == 0:
        return None
    return (Fraction(w2, det), Fraction(-w1, det))


def _segment(g) -> Segment | None:
    walls = ((2, -1), (-3, 2))  # α∨ = 0 and β∨ = 0 bound the open chamber
    ends = []
    for w in walls:
        p = _wall_hit(g.c1, g.c2, *w)
        if p is not None and all(w2[0] * p[0] + w2[1] * p[1] >= 0 for w2 in walls):
            ends.append(p)
    ends = sorted(set(ends))
    if len(ends) == 2:
        (x0, y0), (x1, y1) = ends
        return Segment(g.name, g.c1, g.c2, ends[0], ends[1], (x1 - x0, y1 - y0))
    if len(ends) == 1:
        # a ray: pick the direction along the line that enters the chamber
        d = (g.c2, -g.c1)
        for sign in (1, -1):
            dx, dy = sign * d[0], sign * d[1]
            q = (ends[0][0] + dx, ends[0][1] + dy)
            if all(w[0] * q[0] + w[1] * q[1] > 0 for w in walls):
                return Segment(g.name, g.c1, g.c2, ends[0], None, (dx, dy))
    return None


def lemma35_lines(chi1="1", chi2="1", scenario: Scenario | None = None) -> list[Segment]:
    """Rank-one reducibility hyperplanes of I(s1, s2, χ1, χ2) meeting the open chamber."""
    t = _char(chi1, chi2, scenario)
    out = []
    for g in COROOTS:
        if not predicate_eval(t, CONDITIONS[g.name]):
            continue
        seg = _segment(g)
        if seg is not None:
            out.append(seg)
    return out


# ---------------------------------------------------------------------------
# The Borel


def _in_open_chamber(s1: Fraction, s2: Fraction) -> bool:
    return 2 * s1 - s2 > 0 and 2 * s2 - 3 * s1 > 0


def _borel_family(t: TorusCharacter) -> str | None:
    if not _holds(t, "2*a = 0, 2*b = 0"):
        return None
    if _holds(t, "a = 0, b = 0"):
        return "i"
    if _holds(t, "a = 0"):
        return "ii"
    if _holds(t, "b = 0"):
        return "iii"
    if _holds(t, "res(a) = b"):
        return "iv"
    return "none"


def _le(x: Fraction, bound, text: str, clause: str):
    if x < bound:
        return UnitarityVerdict(UNITARY, f"{clause}: {text} < {fmt_q(bound)}")
    if x == bound:
        return UnitarityVerdict(UNITARY, f"{clause}: {text} = {fmt_q(bound)}" + BOUNDARY)
    return None


def _thm36_numeric(family: str | None, s1: Fraction, s2: Fraction, reading: str) -> UnitarityVerdict:
    if family is None:
        return UnitarityVerdict(NON_UNITARY, "not Hermitian: χ1² ≠ 1 or χ2² ≠ 1")
    if family == "none":
        return UnitarityVerdict(NON_UNITARY, "quadratic pair outside (i)-(iv)")
    if family == "ii":
        return _le(s1, 1, "s1", "(ii)") or UnitarityVerdict(NON_UNITARY, "(ii): s1 > 1")
    if family == "iii":
        return _le(s2, 1, "s2", "(iii)") or UnitarityVerdict(NON_UNITARY, "(iii): s2 > 1")
    if family == "iv":
        v = _le(3 * s1 - s2, 1, "3s1 - s2", "(iv)")
        return v or UnitarityVerdict(NON_UNITARY, "(iv): 3s1 - s2 > 1")
    if (s1, s2) == (3, 5):
        return UnitarityVerdict(ISOLATED, "(i): s1 = 3, s2 = 5")
    v = _le(s2, 1, "s2", "(i)")
    if v:
        return v
    upper = s1 <= 1 if reading == "narrow" else s2 - s1 <= 1
    if 3 * s1 - s2 >= 1 and upper:
        edge = 3 * s1 - s2 == 1 or (s1 == 1 if reading == "narrow" else s2 - s1 == 1)
        text = "3s1 - s2 ≥ 1, " + ("s1 ≤ 1" if reading == "narrow" else "s2 - s1 ≤ 1")
        return UnitarityVerdict(UNITARY, f"(i): {text}" + (BOUNDARY if edge else ""))
    return UnitarityVerdict(NON_UNITARY, "(i): outside the unitary regions")


def thm36_unitarity(
    s1, s2, chi1="1", chi2="1", scenario: Scenario | None = None, reading: str = "narrow"
) -> UnitarityVerdict:
    """Unitarity of J(s1, s2, χ1, χ2) for (s1, s2) in the open chamber.

    ``reading="narrow"`` takes clause (i) as ``s2 ≤ 1`` or ``3s1 - s2 ≥ 1,
    s1 ≤ 1`` or the point (3, 5); ``reading="wide"`` uses ``s2 - s1 ≤ 1``
    in place of ``s1 ≤ 1``, which adds the triangle (1,3/2), (1,2), (2,3).
    A note records any disagreement between them.
    """
    if reading not in ("narrow", "wide"):
        raise ValueError("reading must be 'narrow' or 'wide'")
    s1, s2 = _q(s1), _q(s2)
    if not _in_open_chamber(s1, s2):
        raise ValueError(f"({fmt_q(s1)},{fmt_q(s2)}) is not in the open chamber")
    fam = _borel_family(_char(chi1, chi2, scenario))
    v = _thm36_numeric(fam, s1, s2, reading)
    other = _thm36_numeric(fam, s1, s2, "wide" if reading == "narrow" else "narrow")
    if other.verdict != v.verdict:
        v = UnitarityVerdict(v.verdict, v.witness, f"the other reading of (i) gives {other.verdict}")
    return v


# ---------------------------------------------------------------------------
# Constituents


def datum_unitarity(d: LanglandsDatum, reading: str = "narrow") -> UnitarityVerdict:
    """Unitarity of the Langlands quotient described by ``d``."""
    herm, shape = is_hermitian(d)
    if shape == "tempered":
        return UnitarityVerdict(UNITARY, "tempered")
    if not herm:
        return UnitarityVerdict(NON_UNITARY, "not Hermitian")
    c = d.chi
    scn = c.scenario
    if shape == "B":
        s1, s2 = d.exponent
        fam = _borel_family(c)
        return _thm36_numeric(fam, Fraction(s1), Fraction(s2), reading)
    neg = tuple(-x for x in c.a), tuple(-x for x in c.b)
    if shape == "i":
        return thm34_unitarity("i", d.exponent, c.a, "1", scn)
    if shape == "ii":
        return thm34_unitarity("ii", d.exponent, "1", c.b, scn)
    if shape == "iii":
        return thm34_unitarity("iii", d.exponent, c.a, "1", scn)
    if shape == "iv":
        return thm34_unitarity("iv", d.exponent, c.a, neg[1], scn)
    if shape == "v":
        return thm34_unitarity("v", d.exponent, neg[0], c.b, scn)
    return thm34_unitarity("vi", d.exponent, "1", c.b, scn)


def constituent_unitarity(c: Constituent, reading: str = "narrow") -> UnitarityVerdict:
    if c.temperedness != NON_TEMPERED:
        return UnitarityVerdict(UNITARY, "tempered")
    if c.datum is None:
        raise ValueError(f"{c.label} carries no Langlands datum")
    return datum_unitarity(c.datum, reading)


def aubert_preserves_unitarity_check(reports=None) -> bool:
    """Aubert partners of unitary constituents are unitary, across the database."""
    if reports is None:
        reports = [classify_case(e.key) for e in CASES if not e.alias_of]
    for rep in reports:
        verdicts = {c.label: constituent_unitarity(c).is_unitary for c in rep.constituents}
        for c in rep.constituents:
            if verdicts[c.label] and c.aubert_partner is not None:
                if not verdicts.get(c.aubert_partner, False):
                    return False
    return True


# ---------------------------------------------------------------------------
# Region sampling


@dataclass
class RegionSample:
    window: tuple
    n: int
    cells: list  # rows of (s1, s2, verdict, witness), row-major in s2 then s1
    lines: list  # clipped segments ((x0, y0), (x1, y1), coroot)
    isolated: list

    def verdict_at(self, i: int, j: int) -> str:
        return self.cells[j * self.n + i][2]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("s1", "s2", "verdict", "witness"))
        for s1, s2, v, wit in self.cells:
            w.writerow((fmt_q(s1), fmt_q(s2), v, wit))
        return buf.getvalue()

    def to_svg(self, size: int = 600) -> str:
        a, b, c, d = self.window
        sx, sy = size / float(b - a), size / float(d - c)
        colors = {UNITARY: "#4c9be8", ISOLATED: "#d62728", NON_UNITARY: "#f2f2f2", "outside": "#ffffff"}
        cw, ch = size / self.n, size / self.n
        out = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
            f'viewBox="0 0 {size} {size}">'
        ]
        for j in range(self.n):
            i = 0
            while i < self.n:
                v = self.verdict_at(i, j)
                k = i
                while k + 1 < self.n and self.verdict_at(k + 1, j) == v:
                    k += 1
                y = size - (j + 1) * ch
                out.append(
                    f'<rect x="{i * cw:.3f}" y="{y:.3f}" width="{(k - i + 1) * cw:.3f}" '
                    f'height="{ch:.3f}" fill="{colors[v]}"/>'
                )
                i = k + 1
        for (x0, y0), (x1, y1), name in self.lines:
            out.append(
                f'<line x1="{float(x0 - a) * sx:.3f}" y1="{size - float(y0 - c) * sy:.3f}" '
                f'x2="{float(x1 - a) * sx:.3f}" y2="{size - float(y1 - c) * sy:.3f}" '
                f'stroke="black" stroke-width="1"><title>{greek(name)}</title></line>'
            )
        for x, y in self.isolated:
            out.append(
                f'<circle cx="{float(x - a) * sx:.3f}" cy="{size - float(y - c) * sy:.3f}" r="3" '
                f'fill="{colors[ISOLATED]}"/>'
            )
        out.append("</svg>")
        return "\n".join(out) + "\n"


def region_sample(
    window=(0, 4, 0, 6),
    n: int = 200,
    chi1="1",
    chi2="1",
    scenario: Scenario | None = None,
    reading: str = "narrow",
) -> RegionSample:
    """Verdicts at the centres of an ``n × n`` grid of cells over the window.

    Cells outside the open chamber get verdict ``outside``.  Isolated unitary
    points are marked on the cell that contains them.
    """
    if n < 2:
        raise ValueError("grid size must be at least 2")
    a, b, c, d = (Fraction(x) for x in window)
    fam = _borel_family(_char(chi1, chi2, scenario))
    hx, hy = (b - a) / n, (d - c) / n
    cells = []
    for j in range(n):
        s2 = c + (j + Fraction(1, 2)) * hy
        for i in range(n):
            s1 = a + (i + Fraction(1, 2)) * hx
            if _in_open_chamber(s1, s2):
                v = _thm36_numeric(fam, s1, s2, reading)
                cells.append((s1, s2, v.verdict, v.witness))
            else:
                cells.append((s1, s2, "outside", ""))
    isolated = []
    if fam == "i":
        p = (Fraction(3), Fraction(5))
        if a <= p[0] < b and c <= p[1] < d:
            isolated.append(p)
            i, j = int((p[0] - a) / hx), int((p[1] - c) / hy)
            v = _thm36_numeric(fam, *p, reading)
            cells[j * n + i] = (cells[j * n + i][0], cells[j * n + i][1], v.verdict, v.witness)
    lines = []
    for seg in lemma35_lines(chi1, chi2, scenario):
        clipped = seg.clip((a, b, c, d))
        if clipped is not None:
            lines.append((*clipped, seg.coroot))
    return RegionSample((a, b, c, d), n, cells, lines, isolated)
