"""Rank-one reducibility, case dispatch, temperedness and Langlands data."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .cases import CASES, CaseEntry, case_by_key
from .charlattice import (
    Scenario,
    ScenarioError,
    TorusCharacter,
    parse_scenario,
    predicate_eval,
    render_e,
    render_f,
    singular_class,
    stabilizer,
    weyl_act,
)
from .grothendieck import GrothendieckElement, Induced, MClass, Named, UnknownConstituent, aubert, r0, tsum
from .rootdata import (
    COROOTS,
    LONG,
    W_TILDE,
    WeylElement,
    coroot,
    cone_position,
    dominant_representative,
    in_chamber,
    lam,
    positive_on,
    reflection,
    weyl_group,
)

__all__ = [
    "CONDITIONS",
    "ReducibilitySet",
    "rank1_set",
    "temperedness",
    "LanglandsDatum",
    "langlands_datum",
    "datum_from_jacquet",
    "gps_reducibility",
    "Constituent",
    "ConstituentReport",
    "classify",
    "classify_case",
    "case_character",
    "instantiate_case",
    "r1_conjugator",
    "table_relation",
    "special_exponents",
    "keys_r_group",
]

SI, TEMPERED, NON_TEMPERED = "square-integrable", "tempered", "non-tempered"

# Discrete half of each rank-one reducibility condition (χ∘γ∨ = 1).
CONDITIONS = {
    "a": "2*a = nm(b)",
    "b": "res(a) = 2*b",
    "a+b": "a = nm(b)",
    "2a+b": "a = 0",
    "3a+b": "res(a) = b",
    "3a+2b": "b = 0",
}
CONDITION_TEXT = {
    "a": "χ1² = χ2∘N",
    "b": "χ1 = χ2²",
    "a+b": "χ1 = χ2∘N",
    "2a+b": "χ1 = 1",
    "3a+b": "χ1 = χ2",
    "3a+2b": "χ2 = 1",
}


def fmt_q(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def form_text(c1: int, c2: int, names=("s1", "s2")) -> str:
    """``2s1 - s2`` style rendering of an integer linear form."""
    out = ""
    for k, n in zip((c1, c2), names):
        if k == 0:
            continue
        mag = "" if abs(k) == 1 else str(abs(k))
        if not out:
            out = ("-" if k < 0 else "") + mag + n
        else:
            out += (" - " if k < 0 else " + ") + mag + n
    return out or "0"


def greek(name: str) -> str:
    return name.replace("a", "α").replace("b", "β")


# ---------------------------------------------------------------------------
# Rank-one reducibility


@dataclass(frozen=True)
class ReducibilitySet:
    coroots: tuple  # coroot names in table order
    witnesses: tuple  # matching condition text per coroot

    def __len__(self):
        return len(self.coroots)

    def __contains__(self, name):
        return name in self.coroots

    def __iter__(self):
        return iter(self.coroots)

    def __str__(self):
        return "{" + ", ".join(greek(c) for c in self.coroots) + "}"


def _rank1(chi: TorusCharacter) -> ReducibilitySet:
    names, wit = [], []
    for g in COROOTS:
        if g(chi.lam) == 1 and predicate_eval(chi, CONDITIONS[g.name]):
            names.append(g.name)
            wit.append(f"{form_text(g.c1, g.c2)} = 1, {CONDITION_TEXT[g.name]}")
    return ReducibilitySet(tuple(names), tuple(wit))


def rank1_set(chi: TorusCharacter) -> ReducibilitySet:
    if not in_chamber(chi.lam):
        raise ValueError(f"{chi} is not in the closed dominant chamber; normalize first")
    return _rank1(chi)


def normalize(chi: TorusCharacter) -> tuple[TorusCharacter, WeylElement]:
    _, w = dominant_representative(chi.lam)
    return weyl_act(w, chi), w


# ---------------------------------------------------------------------------
# Temperedness


def temperedness(x: GrothendieckElement) -> str:
    """Casselman verdict from the exponents of an r_∅."""
    if x.level != "T":
        raise ValueError("temperedness expects a level-T element")
    if not x:
        raise ValueError("empty Jacquet module")
    if not x.is_effective():
        raise ValueError("virtual element: negative coefficients are not exponents")
    pos = {cone_position(c.lam) for c in x.terms}
    if pos == {"strictly-positive"}:
        return SI
    if "outside" not in pos:
        return TEMPERED
    return NON_TEMPERED


# ---------------------------------------------------------------------------
# Labels


def _e(chi, v) -> str:
    return render_e(chi.scenario, v)


def _f(chi, v) -> str:
    return render_f(chi.scenario, v)


def _neg(v):
    return tuple(-x for x in v)


def _add(*vs):
    return tuple(sum(t) for t in zip(*vs))


def levi_slots(gamma: str, chi: TorusCharacter):
    """GL2-side characters and the outer character for I^γ(χ).

    α: Ind(χ1, χ1^{-1}·χ2∘N) ⊗ χ2^{-1};  β: χ1^{-1} ⊗ Ind(χ2, χ1|F·χ2^{-1}).
    """
    scn = chi.scenario
    if gamma == "a":
        first = chi.a
        second = _add(_neg(chi.a), scn.nm(chi.b))
        return _e(chi, first), _e(chi, second), _f(chi, _neg(chi.b))
    first = chi.b
    second = _add(scn.res(chi.a), _neg(chi.b))
    return _f(chi, first), _f(chi, second), _e(chi, _neg(chi.a))


def levi_parameter(gamma: str, x) -> Fraction:
    """``s`` with ν_E^s (α) resp. ν_F^s (β) on the GL2 factor."""
    return Fraction(x[1]) / 2 if gamma == "a" else 3 * Fraction(x[0]) / 2


def _levi_label(kind: str, gamma: str, s, chi: TorusCharacter, head="I") -> str:
    first, second, outer = levi_slots(gamma, chi)
    g = greek(gamma)
    if kind == "St":
        tempered = f"δ({first})"
    elif kind == "Triv":
        tempered = f"{first}∘det"
    else:
        tempered = f"I^{g}({first}⊗{second})"
    s = fmt_q(s) if not isinstance(s, str) else s
    if gamma == "a":
        return f"{head}_{g}({s},{tempered}⊗{outer})"
    return f"{head}_{g}({s},{outer}⊗{tempered})"


@dataclass(frozen=True)
class LanglandsDatum:
    parabolic: str  # "B", "P_α", "P_β" or "G"
    tempered: str
    exponent: object  # Lambda for B/G, Fraction for maximal parabolics
    chi: TorusCharacter | None = None

    def label(self) -> str:
        if self.parabolic == "G":
            return f"tempered({self.tempered})"
        if self.parabolic == "B":
            s1, s2 = (fmt_q(x) for x in self.exponent)
            return f"J({s1},{s2},{_e(self.chi, self.chi.a)},{_f(self.chi, self.chi.b)})"
        s = fmt_q(self.exponent)
        return f"J_{self.parabolic[-1]}({s},{self.tempered})"

    def __str__(self):
        return self.label()


OUTSIDE_STANDARD = "r_∅ not inside the standard module"


def _tempered_text(gamma: str, kind: str, chi: TorusCharacter) -> str:
    full = _levi_label(kind, gamma, 0, chi)
    return full[full.index(",") + 1 : -1]


def langlands_datum(chi: TorusCharacter) -> LanglandsDatum:
    """Datum of the Langlands quotient of I(χ) after normalization."""
    chi, _ = normalize(chi)
    s1, s2 = chi.lam
    if s1 == 0 and s2 == 0:
        return LanglandsDatum("G", f"I{chi}", chi.lam, chi)
    if coroot("a")(chi.lam) == 0:
        return LanglandsDatum("P_α", _tempered_text("a", "PS", chi), levi_parameter("a", chi.lam), chi)
    if coroot("b")(chi.lam) == 0:
        return LanglandsDatum("P_β", _tempered_text("b", "PS", chi), levi_parameter("b", chi.lam), chi)
    return LanglandsDatum("B", "unitary character", chi.lam, chi)


def _strictly_dominant(x) -> bool:
    s1, s2 = x
    return 0 < Fraction(3, 2) * s2 < 3 * s1 < 2 * s2


def _ip(u, v) -> Fraction:
    # W-invariant form on (α, β)-coefficients: (α,α) = 2, (β,β) = 6, (α,β) = -3
    return 2 * u[0] * v[0] - 3 * (u[0] * v[1] + u[1] * v[0]) + 6 * u[1] * v[1]


def _nu_norm(d: LanglandsDatum) -> Fraction:
    """|ν|² of the datum: the leading exponent projected off the Levi root."""
    x = (3 * d.chi.lam[0], d.chi.lam[1])
    full = _ip(x, x)
    if d.parabolic == "B":
        return full
    g = (1, 0) if d.parabolic == "P_α" else (0, 1)
    return full - _ip(x, g) ** 2 / _ip(g, g)


def standard_r0(d: LanglandsDatum) -> GrothendieckElement:
    """r_∅ of the standard module whose Langlands quotient ``d`` describes."""
    if d.parabolic in ("G", "B"):
        return tsum(weyl_act(w, d.chi) for w in weyl_group())
    g = "a" if d.parabolic == "P_α" else "b"
    kind = "PS" if "I^" in d.tempered else "St"
    return r0(GrothendieckElement.of("G", [Induced(MClass(g, kind, d.chi))]))


def _contained(x: GrothendieckElement, y: GrothendieckElement) -> bool:
    return all(y.terms.get(c, 0) >= k for c, k in x.terms.items())


def _datum_class(d: LanglandsDatum):
    # I^γ(c) and I^γ(w_γ c) are the same tempered class of the Levi
    if d.parabolic in ("P_α", "P_β") and "I^" in d.tempered:
        g = "a" if d.parabolic == "P_α" else "b"
        return (d.parabolic, d.exponent, MClass(g, "PS", d.chi))
    return (d.parabolic, d.label())


def datum_from_jacquet(x: GrothendieckElement, prefer: LanglandsDatum | None = None) -> LanglandsDatum:
    """Langlands datum of an irreducible class read off its r_∅.

    The quotient ``J_P(σν)`` embeds in the opposite standard module, so
    ``w̃_P·e`` is the leading exponent for some ``e`` in ``r_∅``; among the
    candidates the datum is the one with the longest ν.
    """
    if temperedness(x) != NON_TEMPERED:
        some = next(iter(x.terms))
        return LanglandsDatum("G", temperedness(x), (Fraction(0), Fraction(0)), some)
    found = []
    for e in sorted(x.terms, key=lambda c: c.key()):
        b = weyl_act(LONG, e)
        if _strictly_dominant(b.lam):
            found.append(LanglandsDatum("B", "unitary character", b.lam, b))
        for gamma, par in (("a", "P_α"), ("b", "P_β")):
            c = weyl_act(W_TILDE[gamma], e)
            s = levi_parameter(gamma, c.lam)
            if s <= 0:
                continue
            pair = coroot(gamma)(c.lam)
            if pair == 1 and predicate_eval(c, CONDITIONS[gamma]):
                found.append(LanglandsDatum(par, _tempered_text(gamma, "St", c), s, c))
            elif pair == 0:
                found.append(LanglandsDatum(par, _tempered_text(gamma, "PS", c), s, c))
    if found:
        top = max(_nu_norm(d) for d in found)
        found = [d for d in found if _nu_norm(d) == top]
    classes = {_datum_class(d) for d in found}
    if len(classes) != 1:
        labels = sorted({d.label() for d in found})
        raise ValueError(f"no unique Langlands datum for {x}: {labels}")
    if prefer is not None and _datum_class(prefer) in classes:
        return prefer
    return min(found, key=lambda d: d.chi.key())


# ---------------------------------------------------------------------------
# Generalized-principal-series reducibility (discrete GL2 part)


def gps_reducibility(gamma: str, s, chi1="1", chi2="1", scenario: Scenario | None = None) -> bool:
    """Reducibility of I_α(s, δ(χ1)⊗χ2) or I_β(s, χ1⊗δ(χ2))."""
    scn = scenario or Scenario()
    s = Fraction(s)
    t = TorusCharacter.make(0, 0, chi1, chi2, scn)
    holds = lambda p: predicate_eval(t, p)  # noqa: E731
    if gamma == "a":
        return (
            (abs(s) == Fraction(1, 2) and holds("a = nm(res(a)), b = 0"))
            or (abs(s) == Fraction(3, 2) and holds("a = 0, b != 0, nm(b) = 0"))
            or (abs(s) == Fraction(5, 2) and holds("a = 0, b = 0"))
        )
    if gamma == "b":
        return (
            (abs(s) == Fraction(3, 2) and holds("res(a) = 0, b = 0"))
            or (abs(s) == Fraction(3, 2) and holds("a = 0, b = 0"))
            or (abs(s) == Fraction(9, 2) and holds("a = 0, b = 0"))
        )
    raise ValueError(f"unknown simple root {gamma!r}")


# ---------------------------------------------------------------------------
# Reports


@dataclass
class Constituent:
    label: str
    role: str
    multiplicity: int
    jacquet: GrothendieckElement | None
    temperedness: str | None
    langlands: str | None = None
    aubert_partner: str | None = None
    flags: list = field(default_factory=list)
    datum: LanglandsDatum | None = field(default=None, repr=False, compare=False)

    def set_datum(self, d: LanglandsDatum):
        self.datum, self.langlands = d, d.label()

    def to_dict(self):
        return {
            "label": self.label,
            "role": self.role,
            "multiplicity": self.multiplicity,
            "jacquet": None
            if self.jacquet is None
            else [[str(c), k] for c, k in self.jacquet.items()],
            "temperedness": self.temperedness,
            "langlands": self.langlands,
            "aubert_partner": self.aubert_partner,
            "flags": list(self.flags),
        }


@dataclass
class ConstituentReport:
    input: TorusCharacter
    chi: TorusCharacter
    normalizer: WeylElement
    singular_class: str
    rset: ReducibilitySet
    verdict: str  # irreducible | reducible | unclassified
    case: str | None = None
    length: int | None = None
    multiplicity: int | None = None
    constituents: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def total_jacquet(self) -> GrothendieckElement:
        out = GrothendieckElement("T")
        for c in self.constituents:
            if c.jacquet is not None:
                out = out + c.multiplicity * c.jacquet
        return out

    def problems(self) -> list[str]:
        """Violations of the report invariants (empty when consistent)."""
        bad = []
        if self.verdict == "unclassified":
            return bad
        if all(c.jacquet is not None for c in self.constituents):
            if self.total_jacquet() != tsum(weyl_act(w, self.chi) for w in weyl_group()):
                bad.append("Jacquet sum differs from r_∅(I(χ))")
        for c in self.constituents:
            if c.jacquet is not None and c.temperedness != temperedness(c.jacquet):
                bad.append(f"temperedness flag of {c.label} disagrees with its exponents")
        for c in self.constituents:
            if OUTSIDE_STANDARD in c.flags:
                bad.append(f"r_∅ of {c.label} is not inside its standard module")
        if self.length is not None and self.constituents:
            if sum(c.multiplicity for c in self.constituents) != self.length:
                bad.append("length differs from the constituent count")
        return bad

    def to_dict(self):
        return {
            "input": str(self.input),
            "chi": str(self.chi),
            "normalizer": str(self.normalizer),
            "scenario": self.chi.scenario.describe(),
            "singular_class": self.singular_class,
            "rank1": [greek(c) for c in self.rset],
            "verdict": self.verdict,
            "case": self.case,
            "length": self.length,
            "multiplicity": self.multiplicity,
            "constituents": [c.to_dict() for c in self.constituents],
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2, sort_keys=True)

    def render(self) -> str:
        lines = [
            f"character      {self.input}",
            f"normalized     {self.chi}  (w = {self.normalizer})",
            f"singular class {self.singular_class}",
            f"R              {self.rset}  (#R = {len(self.rset)})",
            f"verdict        {self.verdict}",
        ]
        if self.case:
            lines.append(f"case           {self.case}")
        if self.length is not None:
            lines.append(f"length         {self.length}")
        if self.multiplicity is not None:
            lines.append(f"multiplicity   {self.multiplicity}")
        for c in self.constituents:
            mult = f" (x{c.multiplicity})" if c.multiplicity != 1 else ""
            lines.append(f"- {c.label}{mult}: {c.role}, {c.temperedness or 'unknown'}")
            if c.jacquet is not None:
                lines.append(f"    r_∅        {c.jacquet}")
            if c.langlands:
                lines.append(f"    Langlands  {c.langlands}")
            if c.aubert_partner:
                lines.append(f"    Aubert     {c.aubert_partner}")
            for fl in c.flags:
                lines.append(f"    [{fl}]")
        for n in self.notes:
            lines.append(f"note: {n}")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Case database instantiation


def _split_top(text: str) -> list[str]:
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch == "," and depth == 0:
            parts.append(cur.strip())
            cur = ""
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur += ch
    if cur.strip():
        parts.append(cur.strip())
    return parts


_ENTRY = re.compile(r"^([+-]?)(\d*)\((.*)\)$")


def _expr(chi: TorusCharacter, text: str, dom: str, env: dict) -> tuple:
    scn = chi.scenario
    if text.strip() in ("0", "1"):
        return scn.zero(dom)
    d, v = scn.parse_expr(text, env)
    if d != dom:
        raise ScenarioError(f"{text!r} is not a character of {dom}^x")
    return scn.canon(dom, v)


def parse_jacquet(text: str, rep: TorusCharacter) -> GrothendieckElement:
    """Read a case list relative to the matched representative ``rep``."""
    env = {"chi1": ("E", rep.a), "chi2": ("F", rep.b), "a": ("E", rep.a), "b": ("F", rep.b)}
    orb = [weyl_act(w, rep) for w in weyl_group()]
    acc = {}
    for item in _split_top(text):
        m = _ENTRY.match(item.replace(" ", ""))
        if not m:
            raise ValueError(f"bad Jacquet entry {item!r}")
        sign, k, body = m.group(1), int(m.group(2) or 1), _split_top(m.group(3))
        x = lam(body[0], body[1])
        if len(body) == 4:
            c = TorusCharacter(x, _expr(rep, body[2], "E", env), _expr(rep, body[3], "F", env), rep.scenario)
        elif len(body) == 2:
            hits = {o for o in orb if o.lam == x}
            if len(hits) != 1:
                raise ValueError(f"entry {item!r} is not determined by the orbit")
            c = next(iter(hits))
        else:
            raise ValueError(f"bad Jacquet entry {item!r}")
        if sign == "-":
            c = weyl_act(LONG, c)
        acc[c] = acc.get(c, 0) + k
    return GrothendieckElement("T", acc)


@lru_cache(maxsize=None)
def _case_scenario(key: str, galois: bool = True) -> Scenario:
    entry = case_by_key(key)
    text = ("galois false\n" if not galois else "") + entry.scenario
    return parse_scenario(text)


def case_character(key: str, galois: bool = True) -> TorusCharacter:
    """Representative character of a database case in its minimal scenario."""
    entry = case_by_key(key)
    scn = _case_scenario(key, galois)
    return TorusCharacter.make(*entry.lam, entry.base[0], entry.base[1], scn)


def _match(chi: TorusCharacter, entries=CASES):
    stab = [w for w in weyl_group() if w(chi.lam) == chi.lam]
    for entry in entries:
        if lam(*entry.lam) != chi.lam:
            continue
        for v in stab:
            rep = weyl_act(v, chi)
            if predicate_eval(rep, entry.predicate):
                return entry, rep
    return None, None


def instantiate_case(entry: CaseEntry, rep: TorusCharacter) -> list[Constituent]:
    if entry.alias_of:
        target = case_by_key(entry.alias_of)
        entry2, rep2 = _match(rep, [target])
        if entry2 is None:
            raise AssertionError(f"{entry.key} does not reduce to {target.key}")
        return instantiate_case(target, rep2)
    out = []
    for spec in entry.constituents:
        jac = parse_jacquet(spec.jacquet, rep)
        flags = []
        if spec.reconstructed:
            flags.append("reconstructed")
        verdict = temperedness(jac)
        if spec.claimed_square_integrable is not None:
            if spec.claimed_square_integrable != (verdict == SI):
                claim = "square-integrable" if spec.claimed_square_integrable else "not square-integrable"
                flags.append(f"stated {claim}; Casselman verdict {verdict}")
        c = Constituent(spec.label, spec.role, spec.multiplicity, jac, verdict, flags=flags)
        if verdict == NON_TEMPERED:
            prefer = langlands_datum(rep) if spec.role == "Langlands quotient" else None
            c.set_datum(datum_from_jacquet(jac, prefer))
            if not _contained(jac, standard_r0(c.datum)):
                flags.append(OUTSIDE_STANDARD)
        out.append(c)
    _attach_partners(out)
    return out


def _attach_partners(items: list[Constituent]):
    named = [Named.of(c.label, _expand(c.jacquet)) for c in items]
    for c, n in zip(items, named):
        try:
            d = aubert(GrothendieckElement.of("G", [n]), named)
        except UnknownConstituent:
            c.flags.append("Aubert dual not among the constituents")
            continue
        (partner,) = d.terms
        c.aubert_partner = partner.label


def _expand(x: GrothendieckElement):
    for ch, k in x.terms.items():
        for _ in range(k):
            yield ch


# ---------------------------------------------------------------------------
# Generic rank-one branch


@lru_cache(maxsize=None)
def r1_conjugator(gamma: str) -> tuple[WeylElement, str]:
    """Shortest ``w`` carrying the coroot ``γ∨`` to a simple coroot."""
    g = coroot(gamma)
    for w in weyl_group():
        sign, d = w.act_on_coroot(g)
        if sign == 1 and d.name in ("a", "b"):
            return w, d.name
    raise AssertionError(gamma)  # pragma: no cover


def _induced_jacquet(delta: str, chi: TorusCharacter) -> GrothendieckElement:
    return tsum(weyl_act(v, chi) for v in positive_on(weyl_group(), delta))


def _rank_one(chi: TorusCharacter, gamma: str) -> list[Constituent]:
    w, delta = r1_conjugator(gamma)
    plus = weyl_act(w, chi)
    minus = weyl_act(reflection(delta), plus)
    s = levi_parameter(delta, plus.lam)
    st = Constituent(
        _levi_label("St", delta, s, plus), "", 1, _induced_jacquet(delta, plus), None
    )
    tr = Constituent(
        _levi_label("Triv", delta, s, plus), "", 1, _induced_jacquet(delta, minus), None
    )
    sub, quo = (st, tr) if chi in st.jacquet.terms else (tr, st)
    sub.role, quo.role = "subrepresentation", "Langlands quotient"
    quo.set_datum(langlands_datum(chi))
    items = [sub, quo]
    for c in items:
        c.temperedness = temperedness(c.jacquet)
        if c is sub and c.temperedness == NON_TEMPERED:
            c.set_datum(datum_from_jacquet(c.jacquet))
    _attach_partners(items)
    return items


# ---------------------------------------------------------------------------
# Unitary branch


def _chi_gamma_trivial(chi: TorusCharacter, gamma) -> bool:
    return predicate_eval(chi, CONDITIONS[gamma.name])


def keys_r_group(chi: TorusCharacter) -> list[WeylElement]:
    """``{w ∈ W_χ : γ > 0, χ∘γ∨ = 1 ⇒ wγ > 0}`` for unitary χ."""
    zeros = [g for g in COROOTS if _chi_gamma_trivial(chi, g)]
    return [w for w in stabilizer(chi) if all(w.maps_positive(g) for g in zeros)]


def _printed_reducible(chi: TorusCharacter) -> bool:
    """Literal reading of the unitary-branch sentence."""
    different_quadratic = predicate_eval(chi, "2*a = 0, a != 0, 2*b = 0, b != 0, res(a) != b")
    return not different_quadratic


# ---------------------------------------------------------------------------
# Dispatch


def classify(chi: TorusCharacter, unitary_mode: str = "keys") -> ConstituentReport:
    if unitary_mode not in ("keys", "printed"):
        raise ValueError("unitary_mode must be 'keys' or 'printed'")
    norm, w = normalize(chi)
    rset = rank1_set(norm)
    sc = singular_class(norm)
    rep = ConstituentReport(chi, norm, w, str(sc), rset, "unclassified")
    full = tsum(weyl_act(v, norm) for v in weyl_group())
    unitary = norm.lam == (0, 0)

    if len(rset) == 0 and not unitary:
        rep.verdict, rep.length, rep.multiplicity = "irreducible", 1, 1
        c = Constituent(f"I{norm}", "irreducible", 1, full, temperedness(full))
        c.set_datum(langlands_datum(norm))
        c.aubert_partner = c.label
        rep.constituents = [c]
        return rep

    entry, match = _match(norm)
    if entry is not None:
        rep.case = entry.title
        rep.verdict = "reducible"
        rep.length, rep.multiplicity = entry.length, entry.multiplicity
        rep.constituents = instantiate_case(entry, match)
        rep.notes.extend(entry.notes)
        if entry.alias_of:
            rep.notes.append(f"same class as {case_by_key(entry.alias_of).title}")
        return rep

    if len(rset) == 1:
        rep.verdict, rep.length, rep.multiplicity = "reducible", 2, 1
        rep.case = f"#R = 1 ({greek(rset.coroots[0])}∨)"
        rep.constituents = _rank_one(norm, rset.coroots[0])
        return rep

    if unitary:
        r = keys_r_group(norm)
        keys_red = len(r) > 1
        printed_red = _printed_reducible(norm)
        rep.case = "unitary"
        red = keys_red if unitary_mode == "keys" else printed_red
        if keys_red != printed_red:
            rep.notes.append(
                f"R-group reading gives {'reducible' if keys_red else 'irreducible'}; "
                f"printed sentence gives {'reducible' if printed_red else 'irreducible'}"
            )
        rep.notes.append(f"R-group of order {len(r)}: {{{', '.join(str(x) for x in r)}}}")
        if not red:
            rep.verdict, rep.length, rep.multiplicity = "irreducible", 1, 1
            c = Constituent(f"I{norm}", "irreducible", 1, full, temperedness(full), None, f"I{norm}")
            rep.constituents = [c]
        else:
            rep.verdict = "reducible"
            if unitary_mode == "keys":
                rep.length, rep.multiplicity = len(r), 1
                rep.constituents = [
                    Constituent(f"τ{i + 1}", "tempered summand", 1, None, TEMPERED)
                    for i in range(len(r))
                ]
                rep.notes.append("individual Jacquet modules of the tempered summands are not determined")
        return rep

    rep.notes.append("outside the encoded families")
    return rep


def classify_case(key: str, galois: bool = True, unitary_mode: str = "keys") -> ConstituentReport:
    return classify(case_character(key, galois), unitary_mode)


# ---------------------------------------------------------------------------
# Table helpers


def table_relation(entry: CaseEntry, chi: TorusCharacter) -> WeylElement | None:
    """The non-trivial ``w`` fixing λ under which the case hypotheses persist."""
    for w in weyl_group():
        if w.word and w(chi.lam) == chi.lam and predicate_eval(weyl_act(w, chi), entry.predicate):
            return w
    return None


def special_exponents() -> frozenset:
    """Exponents of square-integrable principal-series constituents."""
    out = set()
    for entry in CASES:
        if entry.alias_of:
            continue
        rep = classify_case(entry.key)
        for c in rep.constituents:
            if c.temperedness == SI:
                out.update(ch.lam for ch in c.jacquet.terms)
    # leading exponents of the discrete subquotients at the reducibility points
    for s in (Fraction(1, 2), Fraction(3, 2), Fraction(5, 2)):
        out.add((s + Fraction(1, 2), 2 * s))  # α∨ = 1, s = s2/2
    for s in (Fraction(3, 2), Fraction(9, 2)):
        s1 = 2 * s / 3
        out.add((s1, (1 + 3 * s1) / 2))  # β∨ = 1, s = 3 s1/2
    return frozenset(out)
