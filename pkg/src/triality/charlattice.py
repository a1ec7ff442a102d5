"""Discrete parts of characters of T = E^x x F^x as finitely presented groups.

A :class:`Scenario` is a hypothesis set: named atoms (characters of E^x or
F^x), their orders, and integer relations among them and their images under
restriction ``res`` (E^x -> F^x) and norm pullback ``nm`` (F^x -> E^x).
Everything not forced by the hypotheses is taken to be false, so ``x == 0``
is decided by lattice membership.

Groups are written additively: ``2*a - nm(b)`` stands for ``χ1² · (χ2∘N)^{-1}``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .lattice import Lattice, integer_kernel
from .rootdata import (
    Lambda,
    WeylElement,
    element,
    in_chamber,
    lam,
    reflection,
    weyl_group,
)

__all__ = [
    "ScenarioError",
    "Atom",
    "Scenario",
    "TorusCharacter",
    "SingularClass",
    "weyl_act",
    "canonical_representative",
    "stabilizer",
    "singular_class",
    "predicate_eval",
    "parse_scenario",
    "SINGULAR_FAMILIES",
    "family_instance",
    "orbit",
]


class ScenarioError(ValueError):
    """Malformed or self-contradictory hypothesis set."""


@dataclass(frozen=True)
class Atom:
    name: str
    domain: str  # "E" or "F"
    order: int | None  # None = infinite order


class Scenario:
    """Finitely presented character groups X_E, X_F with res and nm.

    Coordinates on X_E are ``[a_i, nm(res(a_i)) for E atoms] + [nm(b_j) for F
    atoms]`` and on X_F ``[res(a_i)] + [b_j]``.
    """

    def __init__(self, atoms: Iterable[Atom] = (), relations: Iterable[str] = (), galois=True):
        self.atoms = tuple(atoms)
        self.galois = bool(galois)
        self.relation_text = tuple(relations)
        self._acts: dict = {}
        self._canon: dict = {}
        names = [a.name for a in self.atoms]
        if len(set(names)) != len(names):
            raise ScenarioError("duplicate atom names")
        for reserved in ("res", "nm"):
            if reserved in names:
                raise ScenarioError(f"atom name {reserved!r} is reserved")
        self.e_atoms = [a for a in self.atoms if a.domain == "E"]
        self.f_atoms = [a for a in self.atoms if a.domain == "F"]
        ne, nf = len(self.e_atoms), len(self.f_atoms)
        self.dim_e = 2 * ne + nf
        self.dim_f = ne + nf
        self._build()

    # -- coordinates -------------------------------------------------------

    def atom(self, name: str) -> tuple[str, tuple]:
        for i, a in enumerate(self.e_atoms):
            if a.name == name:
                return "E", self._unit(self.dim_e, i)
        for j, a in enumerate(self.f_atoms):
            if a.name == name:
                return "F", self._unit(self.dim_f, len(self.e_atoms) + j)
        raise ScenarioError(f"unknown atom {name!r}")

    @staticmethod
    def _unit(n, i):
        return tuple(int(k == i) for k in range(n))

    def zero(self, domain: str) -> tuple:
        return (0,) * (self.dim_e if domain == "E" else self.dim_f)

    def res(self, x: tuple) -> tuple:
        """X_E -> X_F."""
        ne = len(self.e_atoms)
        out = [0] * self.dim_f
        for i in range(ne):
            out[i] += x[i] + 3 * x[ne + i]
        for j in range(len(self.f_atoms)):
            out[ne + j] += 3 * x[2 * ne + j]
        return tuple(out)

    def nm(self, y: tuple) -> tuple:
        """X_F -> X_E."""
        ne = len(self.e_atoms)
        out = [0] * self.dim_e
        for i in range(ne):
            out[ne + i] += y[i]
        for j in range(len(self.f_atoms)):
            out[2 * ne + j] += y[ne + j]
        return tuple(out)

    # -- presentation ------------------------------------------------------

    def _build(self):
        rel_e, rel_f = [], []
        for a in self.atoms:
            if a.order is not None:
                dom, v = self.atom(a.name)
                (rel_e if dom == "E" else rel_f).append(tuple(a.order * x for x in v))
        for text in self.relation_text:
            dom, v = self.parse_expr(_strip_eq_zero(text))
            (rel_e if dom == "E" else rel_f).append(v)
        while True:
            e_all = rel_e + [self.nm(y) for y in rel_f] + [self.nm(self.res(x)) for x in rel_e]
            f_all = rel_f + [self.res(x) for x in rel_e]
            self.lat_e = Lattice(self.dim_e, e_all)
            self.lat_f = Lattice(self.dim_f, f_all)
            if self.galois:
                break
            # norm surjective: nm is injective on X_F
            rows = [self.nm(self._unit(self.dim_f, j)) for j in range(self.dim_f)]
            rows += list(self.lat_e.basis)
            ker = integer_kernel(rows, self.dim_e)
            extra = [k[: self.dim_f] for k in ker]
            extra = [v for v in extra if not self.lat_f.contains(v)]
            if not extra:
                break
            rel_f = f_all + extra
            rel_e = e_all
        for a in self.atoms:
            dom, v = self.atom(a.name)
            got = self.order(dom, v)
            if got != a.order:
                raise ScenarioError(
                    f"atom {a.name} declared of order {a.order or 'inf'} "
                    f"but the hypotheses force order {got or 'inf'}"
                )

    def lattice(self, domain: str) -> Lattice:
        return self.lat_e if domain == "E" else self.lat_f

    def canon(self, domain: str, v: tuple) -> tuple:
        return self.lattice(domain).reduce(v)

    def is_zero(self, domain: str, v: tuple) -> bool:
        return self.lattice(domain).contains(v)

    def order(self, domain: str, v: tuple):
        return self.lattice(domain).order(v)

    # -- expressions -------------------------------------------------------

    _TERM = re.compile(r"\s*([+-]?)\s*(\d*)\s*\*?\s*((?:res|nm)\s*\(\s*(?:(?:res|nm)\s*\()?\s*\w+\s*\)?\s*\)|\w+)\s*")

    def parse_expr(self, text: str, env: dict | None = None) -> tuple[str, tuple]:
        """Parse ``k*x + k*res(x) - nm(y) ...`` into ``(domain, vector)``.

        ``env`` maps extra symbols (e.g. ``a``, ``b``) to ``(domain, vector)``.
        A bare ``0`` or ``1`` (the trivial character) needs a typed context.
        """
        text = text.strip()
        pos, terms = 0, []
        while pos < len(text):
            m = self._TERM.match(text, pos)
            if not m or m.end() == pos:
                raise ScenarioError(f"cannot parse {text!r} at {text[pos:]!r}")
            sign = -1 if m.group(1) == "-" else 1
            coef = int(m.group(2)) if m.group(2) else 1
            terms.append((sign * coef, m.group(3).replace(" ", "")))
            pos = m.end()
        dom, acc = None, None
        for k, sym in terms:
            if sym in ("0", "1"):
                continue
            d, v = self._symbol(sym, env or {})
            if dom is None:
                dom, acc = d, [0] * len(v)
            elif d != dom:
                raise ScenarioError(f"mixed E/F terms in {text!r}")
            acc = [x + k * y for x, y in zip(acc, v)]
        if dom is None:
            raise ScenarioError(f"expression {text!r} has no typed term")
        return dom, tuple(acc)

    def _symbol(self, sym: str, env: dict):
        m = re.fullmatch(r"(res|nm)\((.*)\)", sym)
        if m:
            d, v = self._symbol(m.group(2), env)
            if m.group(1) == "res":
                if d != "E":
                    raise ScenarioError(f"res applied to F-character in {sym!r}")
                return "F", self.res(v)
            if d != "F":
                raise ScenarioError(f"nm applied to E-character in {sym!r}")
            return "E", self.nm(v)
        if sym in env:
            return env[sym]
        return self.atom(sym)

    def describe(self) -> str:
        lines = [f"galois {'true' if self.galois else 'false'}"]
        for a in self.atoms:
            lines.append(f"atom {a.name} domain {a.domain} order {a.order or 'inf'}")
        for r in self.relation_text:
            lines.append(f"rel {_strip_eq_zero(r)} = 0")
        return "\n".join(lines)

    def with_galois(self, galois: bool) -> "Scenario":
        return Scenario(self.atoms, self.relation_text, galois)

    def __repr__(self):
        return f"Scenario({self.describe()!r})"


def _strip_eq_zero(text: str) -> str:
    text = text.strip()
    if "=" in text:
        lhs, rhs = text.split("=", 1)
        rhs = rhs.strip()
        if rhs in ("0", "1", ""):
            return lhs.strip()
        return _move_rhs(lhs, rhs)
    return text


def _move_rhs(lhs: str, rhs: str) -> str:
    flipped = []
    for m in re.finditer(r"([+-]?)\s*([^+-]+)", rhs):
        sign, body = m.group(1), m.group(2).strip()
        if body:
            flipped.append(("+" if sign == "-" else "-") + " " + body)
    return lhs.strip() + " " + " ".join(flipped)


def parse_scenario(text: str) -> Scenario:
    """Read the line-oriented scenario format (``galois``, ``atom``, ``rel``)."""
    atoms, rels, galois = [], [], True
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        key = parts[0]
        if key == "galois" and len(parts) == 2 and parts[1] in ("true", "false"):
            galois = parts[1] == "true"
        elif key == "atom" and len(parts) == 6 and parts[2] == "domain" and parts[4] == "order":
            if parts[3] not in ("E", "F"):
                raise ScenarioError(f"line {lineno}: domain must be E or F")
            order = None if parts[5] == "inf" else int(parts[5])
            if order is not None and order < 1:
                raise ScenarioError(f"line {lineno}: order must be positive")
            atoms.append(Atom(parts[1], parts[3], order))
        elif key == "rel" and len(parts) >= 2:
            rels.append(line[3:].strip())
        else:
            raise ScenarioError(f"line {lineno}: cannot parse {raw!r}")
    return Scenario(atoms, rels, galois)


TRIVIAL = Scenario()


# ---------------------------------------------------------------------------
# Torus characters


@dataclass(frozen=True)
class TorusCharacter:
    """``(s1, s2, χ1, χ2)``; ``a``/``b`` are canonical coset representatives."""

    lam: Lambda
    a: tuple
    b: tuple
    scenario: Scenario = field(compare=False, hash=False, repr=False)

    @classmethod
    def make(cls, s1, s2, a=None, b=None, scenario: Scenario = TRIVIAL) -> "TorusCharacter":
        def coerce(x, dom):
            if x is None or (isinstance(x, (str, int)) and str(x).strip() in ("0", "1")):
                return scenario.zero(dom)
            if isinstance(x, str):
                d, v = scenario.parse_expr(x)
                if d != dom:
                    raise ScenarioError(f"{x!r} is not a character of {dom}^x")
                return v
            return tuple(x)

        return cls(
            lam(s1, s2),
            scenario.canon("E", coerce(a, "E")),
            scenario.canon("F", coerce(b, "F")),
            scenario,
        )

    @property
    def s1(self):
        return self.lam[0]

    @property
    def s2(self):
        return self.lam[1]

    def key(self):
        return (self.lam, self.a, self.b)

    def __hash__(self):
        # Fraction hashing dominates the Grothendieck-group bookkeeping
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash(self.key())
            object.__setattr__(self, "_hash", h)
        return h

    def with_lam(self, x: Lambda) -> "TorusCharacter":
        return TorusCharacter(lam(*x), self.a, self.b, self.scenario)

    @property
    def is_unitary(self) -> bool:
        return self.lam == (0, 0)

    def discrete_is_trivial(self) -> bool:
        return not any(self.a) and not any(self.b)

    def render_discrete(self, names=("χ1", "χ2")) -> tuple[str, str]:
        return render_e(self.scenario, self.a), render_f(self.scenario, self.b)

    def __str__(self):
        s1, s2 = (_fmt_q(x) for x in self.lam)
        if self.discrete_is_trivial():
            return f"({s1},{s2})"
        ra, rb = self.render_discrete()
        return f"({s1},{s2},{ra},{rb})"

    def __lt__(self, other):
        return self.key() < other.key()


def _fmt_q(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _render(terms) -> str:
    parts = []
    for k, sym in terms:
        if k == 0:
            continue
        parts.append(sym if k == 1 else f"{sym}^{k}" if k > 0 else f"{sym}^{{{k}}}")
    return "·".join(parts) if parts else "1"


def _pretty(name: str) -> str:
    return re.sub(r"^chi(?=\d|$)", "χ", name)


def render_e(scn: Scenario, v: tuple) -> str:
    v = scn.lat_e.reduce_balanced(v)
    ne = len(scn.e_atoms)
    terms = [(v[i], _pretty(a.name)) for i, a in enumerate(scn.e_atoms)]
    terms += [(v[ne + i], f"{_pretty(a.name)}∘N") for i, a in enumerate(scn.e_atoms)]
    terms += [(v[2 * ne + j], f"{_pretty(b.name)}∘N") for j, b in enumerate(scn.f_atoms)]
    return _render(terms)


def render_f(scn: Scenario, v: tuple) -> str:
    v = scn.lat_f.reduce_balanced(v)
    ne = len(scn.e_atoms)
    terms = [(v[i], f"{_pretty(a.name)}|F") for i, a in enumerate(scn.e_atoms)]
    terms += [(v[ne + j], _pretty(b.name)) for j, b in enumerate(scn.f_atoms)]
    return _render(terms)


def weyl_act(w: WeylElement, chi: TorusCharacter) -> TorusCharacter:
    scn = chi.scenario
    key = (w.word, chi)
    hit = scn._acts.get(key)
    if hit is None:
        hit = scn._acts[key] = _weyl_act(w, chi)
    return hit


def _weyl_act(w: WeylElement, chi: TorusCharacter) -> TorusCharacter:
    scn = chi.scenario
    p, q, r, u, v = w.discrete
    ra, nra, nb = scn.res(chi.a), scn.nm(scn.res(chi.a)), scn.nm(chi.b)
    a2 = tuple(p * x + q * y + r * z for x, y, z in zip(chi.a, nra, nb))
    b2 = tuple(u * x + v * y for x, y in zip(ra, chi.b))
    return TorusCharacter(w(chi.lam), scn.canon("E", a2), scn.canon("F", b2), scn)


def canonical_representative(chi: TorusCharacter) -> TorusCharacter:
    """The orbit element with the smallest sort key, shared by the whole orbit."""
    cache = chi.scenario._canon
    rep = cache.get(chi)
    if rep is None:
        members = orbit(chi)
        rep = min(members, key=lambda c: c.key())
        cache.update(dict.fromkeys(members, rep))
    return rep


def stabilizer(chi: TorusCharacter) -> list[WeylElement]:
    return [w for w in weyl_group() if weyl_act(w, chi) == chi]


def orbit(chi: TorusCharacter) -> list[TorusCharacter]:
    return [weyl_act(w, chi) for w in weyl_group()]


# ---------------------------------------------------------------------------
# Predicates


def predicate_eval(chi: TorusCharacter, predicate: str) -> bool:
    """Decide ``lhs = rhs`` or ``lhs != rhs`` over ``a``, ``b`` and atoms.

    Example: ``predicate_eval(chi, "2*a = nm(b)")`` tests χ1² = χ2∘N.
    Several clauses joined by ``,`` or ``&`` must all hold.
    """
    scn = chi.scenario
    env = {"a": ("E", chi.a), "b": ("F", chi.b), "chi1": ("E", chi.a), "chi2": ("F", chi.b)}
    for clause in re.split(r"[,&]", predicate):
        clause = clause.strip()
        if not clause:
            continue
        negate = "!=" in clause
        lhs, _, rhs = clause.replace("!=", "=").partition("=")
        if not _:
            raise ScenarioError(f"predicate {clause!r} lacks '=' or '!='")
        expr = _move_rhs(lhs, rhs) if rhs.strip() not in ("0", "1") else lhs
        dom, vec = scn.parse_expr(expr, env)
        if scn.is_zero(dom, vec) == negate:
            return False
    return True


# ---------------------------------------------------------------------------
# Singular characters


@dataclass(frozen=True)
class SingularClass:
    label: str
    generators: tuple[str, ...]  # root names of generating reflections, or words
    multiplicity: str  # "2" or ">2"
    stabilizer: tuple[WeylElement, ...] = ()

    def __str__(self):
        return self.label


def _generated(gens: Iterable[WeylElement]) -> frozenset:
    group = {element("")}
    frontier = list(group)
    gens = list(gens)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in group:
                    group.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(group)


def _refl(name):
    return reflection(name)


@dataclass(frozen=True)
class _Family:
    label: str
    gens: tuple  # reflections by root name, or "*"-joined products
    unitary: bool
    predicate: str  # over a, b
    lam_rule: str = "zero"  # "zero", "alpha-wall", "beta-wall"
    minimal: tuple = ((), ())  # (atoms, relations) for a minimal instance

    def subgroup(self):
        els = []
        for g in self.gens:
            w = element("")
            for part in g.split("*"):
                w = w * _refl(part)
            els.append(w)
        return _generated(els)


# The enumerated singular characters for λ in the closed chamber.
SINGULAR_FAMILIES: tuple[_Family, ...] = (
    _Family("(1,1;D_6)", ("a", "b"), True, "a = 0, b = 0"),
    _Family(
        "(χ1,1;S_3;χ1≠1,χ1|F×=1)", ("b", "3a+b"), True, "a != 0, res(a) = 0, b = 0",
        minimal=((Atom("chi1", "E", 3),), ("res(chi1)",)),
    ),
    _Family(
        "(χ1,1;⟨w_α,w_{3α+2β}⟩;χ1²=1,χ1|F×≠1)", ("a", "3a+2b"), True, "2a = 0, res(a) != 0, b = 0",
        minimal=((Atom("chi1", "E", 2),), ()),
    ),
    _Family(
        "(1,χ2;⟨w_β,w_{2α+β}⟩;χ2²=1,χ2≠1)", ("b", "2a+b"), True, "a = 0, 2b = 0, b != 0",
        minimal=((Atom("chi2", "F", 2),), ()),
    ),
    _Family(
        "(χ1,χ1;⟨w_{3α+β},w_{α+β}⟩;χ1²=1,χ1|F×≠1)", ("3a+b", "a+b"), True,
        "2a = 0, res(a) != 0, res(a) = b, a = nm(b)",
        minimal=((Atom("chi1", "E", 2), Atom("chi2", "F", 2)), ("chi1 - nm(chi2)",)),
    ),
    _Family(
        "(χ1,χ2;⟨w_αw_{3α+2β}⟩;χ1²=1,χ2²=1)", ("a*3a+2b",), True, "2a = 0, 2b = 0",
        minimal=((Atom("chi1", "E", 2), Atom("chi2", "F", 2)), ()),
    ),
    _Family(
        "(χ1,χ2;⟨w_α⟩;χ1²=χ2∘N)", ("a",), True, "2a = nm(b)",
        minimal=((Atom("chi1", "E", None), Atom("chi2", "F", None)), ("2*chi1 - nm(chi2)",)),
    ),
    _Family(
        "(χ1,χ2;⟨w_{α+β}⟩;χ1=χ2∘N)", ("a+b",), True, "a = nm(b)",
        minimal=((Atom("chi2", "F", None), Atom("chi1", "E", None)), ("chi1 - nm(chi2)",)),
    ),
    _Family(
        "(1,χ2;⟨w_{2α+β}⟩)", ("2a+b",), True, "a = 0",
        minimal=((Atom("chi2", "F", None),), ()),
    ),
    _Family(
        "(χ1,1;⟨w_{3α+2β}⟩)", ("3a+2b",), True, "b = 0",
        minimal=((Atom("chi1", "E", None),), ()),
    ),
    _Family(
        "(χ1,χ2;⟨w_β⟩;χ1=χ2²)", ("b",), True, "res(a) = 2b",
        minimal=((Atom("chi1", "E", None), Atom("chi2", "F", None)), ("res(chi1) - 2*chi2",)),
    ),
    _Family(
        "(χ1,χ2;⟨w_{3α+β}⟩;χ1=χ2)", ("3a+b",), True, "res(a) = b",
        minimal=((Atom("chi1", "E", None), Atom("chi2", "F", None)), ("res(chi1) - chi2",)),
    ),
    _Family(
        "(s1,2s1,χ1,χ2;⟨w_α⟩;s1>0,χ1²=χ2∘N)", ("a",), False, "2a = nm(b)", "alpha-wall",
        minimal=((Atom("chi1", "E", None), Atom("chi2", "F", None)), ("2*chi1 - nm(chi2)",)),
    ),
    _Family(
        "(s1,3/2s1,χ1,χ2;⟨w_β⟩;s1>0,χ1|F×=χ2²)", ("b",), False, "res(a) = 2b", "beta-wall",
        minimal=((Atom("chi1", "E", None), Atom("chi2", "F", None)), ("res(chi1) - 2*chi2",)),
    ),
)


def family_instance(fam: _Family, galois=True) -> TorusCharacter:
    """Minimal-scenario character realising a singular family."""
    atoms, rels = fam.minimal
    scn = Scenario(atoms, rels, galois)
    names = {a.name: a.domain for a in atoms}
    a = "chi1" if "chi1" in names else None
    b = "chi2" if "chi2" in names else None
    if fam.lam_rule == "alpha-wall":
        s = (1, 2)
    elif fam.lam_rule == "beta-wall":
        s = (2, 3)
    else:
        s = (0, 0)
    return TorusCharacter.make(*s, a, b, scn)


def singular_class(chi: TorusCharacter):
    """Family of a singular character, or the string ``"regular"``."""
    if not in_chamber(chi.lam):
        raise ScenarioError("singular_class expects λ in the closed dominant chamber")
    stab = frozenset(stabilizer(chi))
    if len(stab) == 1:
        return "regular"
    for fam in SINGULAR_FAMILIES:
        if fam.unitary != chi.is_unitary:
            continue
        if fam.lam_rule == "alpha-wall" and not (chi.s2 == 2 * chi.s1 and chi.s1 > 0):
            continue
        if fam.lam_rule == "beta-wall" and not (2 * chi.s2 == 3 * chi.s1 and chi.s1 > 0):
            continue
        if fam.subgroup() != stab:
            continue
        if not predicate_eval(chi, fam.predicate):
            continue
        mult = ">2" if len(stab) > 2 else "2"
        return SingularClass(fam.label, fam.gens, mult, tuple(sorted(stab, key=lambda w: (len(w), w.word))))
    raise ScenarioError(f"stabilizer of {chi} matches no listed singular family")
