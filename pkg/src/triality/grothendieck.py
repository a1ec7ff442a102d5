"""Formal sums in R(T), R(M_α), R(M_β), R(G); Jacquet and induction functors.

Levi-level classes are axiomatised by their Jacquet modules: a Steinberg
twist ``St`` or a character twist ``Triv`` of the GL2 factor is recorded by the
single torus character of its ``r_∅`` (coroot pairing +1 resp. -1), and
``PS`` is the full induced class, kept in the normal form ``min(χ, w_γ χ)``.
Elements of R(G) supported on principal series are compared through their
``r_∅`` shadow.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Union

from .charlattice import TorusCharacter, canonical_representative, predicate_eval, weyl_act
from .rootdata import (
    W_ALPHA,
    W_BETA,
    W_TILDE,
    WeylElement,
    coroot,
    positive_on,
    reflection,
    weyl_group,
)

__all__ = [
    "MClass",
    "PSClass",
    "Induced",
    "Named",
    "GrothendieckElement",
    "UnknownConstituent",
    "tsum",
    "r0",
    "r0_of_levi_ps",
    "r0_of_full_ps",
    "levi_groupings",
    "jacquet",
    "jacquet_of_induced",
    "levi_constituents",
    "levi_ps_reducible",
    "induce",
    "induce_from_torus",
    "dual_levi",
    "dual_g",
    "aubert",
    "aubert_identities_check",
    "shadow",
]

LEVELS = ("T", "Ma", "Mb", "G")
_SIMPLE = {"a": W_ALPHA, "b": W_BETA}


class UnknownConstituent(LookupError):
    pass


def _levi_level(gamma: str) -> str:
    return {"a": "Ma", "b": "Mb"}[gamma]


@dataclass(frozen=True, order=True)
class MClass:
    """Basis object of R(M_γ): kind is PS, St, Triv or Formal."""

    gamma: str
    kind: str
    chi: TorusCharacter

    def __post_init__(self):
        if self.kind == "PS":
            other = weyl_act(_SIMPLE[self.gamma], self.chi)
            if other.key() < self.chi.key():
                object.__setattr__(self, "chi", other)

    @property
    def level(self):
        return _levi_level(self.gamma)

    def moved(self, w: WeylElement) -> "MClass":
        return MClass(self.gamma, self.kind, weyl_act(w, self.chi))

    def __str__(self):
        g = "α" if self.gamma == "a" else "β"
        return f"{self.kind}^{g}{self.chi}"


@dataclass(frozen=True, order=True)
class PSClass:
    """Class of I(χ) in R(G); ``chi`` is the canonical orbit representative."""

    chi: TorusCharacter

    def __post_init__(self):
        object.__setattr__(self, "chi", canonical_representative(self.chi))

    level = "G"

    def __str__(self):
        return f"I{self.chi}"


@dataclass(frozen=True, order=True)
class Induced:
    """I_γ(σ) for a non-PS Levi class σ."""

    inner: MClass

    level = "G"

    def __str__(self):
        g = "α" if self.inner.gamma == "a" else "β"
        return f"I_{g}({self.inner})"


@dataclass(frozen=True, order=True)
class Named:
    """An irreducible constituent known through its label and its r_∅."""

    label: str
    jacquet: tuple  # sorted ((TorusCharacter, multiplicity), ...)

    level = "G"

    @classmethod
    def of(cls, label: str, chars: Iterable[TorusCharacter]) -> "Named":
        c = Counter(chars)
        return cls(label, tuple(sorted(c.items(), key=lambda kv: kv[0].key())))

    def __str__(self):
        return self.label


Basis = Union[TorusCharacter, MClass, PSClass, Induced, Named]


def _level_of(obj) -> str:
    return "T" if isinstance(obj, TorusCharacter) else obj.level


def _sort_key(obj):
    if isinstance(obj, TorusCharacter):
        return (0, obj.key())
    if isinstance(obj, MClass):
        return (1, obj.gamma, obj.kind, obj.chi.key())
    if isinstance(obj, PSClass):
        return (2, obj.chi.key())
    if isinstance(obj, Induced):
        return (3, _sort_key(obj.inner))
    return (4, obj.label, tuple((c.key(), m) for c, m in obj.jacquet))


class GrothendieckElement:
    """Integer combination of basis objects of one level."""

    __slots__ = ("level", "terms")

    def __init__(self, level: str, terms=None):
        if level not in LEVELS:
            raise ValueError(f"unknown level {level!r}")
        self.level = level
        acc = Counter()
        for obj, k in dict(terms or {}).items():
            if _level_of(obj) != level:
                raise ValueError(f"{obj} is not a level-{level} object")
            if not isinstance(k, int):
                raise TypeError("coefficients must be integers")
            acc[obj] += k
        self.terms = {o: k for o, k in acc.items() if k}

    @classmethod
    def of(cls, level: str, objs: Iterable) -> "GrothendieckElement":
        return cls(level, Counter(objs))

    def _check(self, other):
        if not isinstance(other, GrothendieckElement):
            return NotImplemented
        if other.level != self.level:
            raise ValueError(f"level mismatch {self.level} vs {other.level}")
        return None

    def __add__(self, other):
        if (bad := self._check(other)) is not None:
            return bad
        acc = Counter(self.terms)
        for o, k in other.terms.items():
            acc[o] += k
        return GrothendieckElement(self.level, acc)

    def __neg__(self):
        return GrothendieckElement(self.level, {o: -k for o, k in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k: int):
        return GrothendieckElement(self.level, {o: k * v for o, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return (
            isinstance(other, GrothendieckElement)
            and self.level == other.level
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.level, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: _sort_key(kv[0]))

    def is_effective(self) -> bool:
        return all(k > 0 for k in self.terms.values())

    def size(self) -> int:
        return sum(self.terms.values())

    def map(self, fn, level: str | None = None) -> "GrothendieckElement":
        """Apply a linear map given on basis objects (returning elements)."""
        out = GrothendieckElement(level or self.level)
        for o, k in self.terms.items():
            out = out + k * fn(o)
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for o, k in self.items():
            parts.append(f"{o}" if k == 1 else f"-{o}" if k == -1 else f"{k}{o}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def tsum(chars: Iterable[TorusCharacter]) -> GrothendieckElement:
    return GrothendieckElement.of("T", chars)


def _zero(level):
    return GrothendieckElement(level)


# ---------------------------------------------------------------------------
# r_∅


def r0_of_levi_ps(gamma: str, chi: TorusCharacter) -> GrothendieckElement:
    return tsum([chi, weyl_act(_SIMPLE[gamma], chi)])


def r0_of_full_ps(chi: TorusCharacter) -> GrothendieckElement:
    return tsum(weyl_act(w, chi) for w in weyl_group())


def levi_groupings(chi: TorusCharacter, gamma: str) -> list[GrothendieckElement]:
    """The 12 terms of r_∅(I(χ)) grouped into 6 pairs ``r_∅(I^γ(wχ))``."""
    s = _SIMPLE[gamma]
    seen, groups = set(), []
    for w in weyl_group():
        if w in seen:
            continue
        seen.update({w, s * w})
        groups.append(r0_of_levi_ps(gamma, weyl_act(w, chi)))
    return groups


def _r0_basis(obj) -> GrothendieckElement:
    if isinstance(obj, TorusCharacter):
        return tsum([obj])
    if isinstance(obj, MClass):
        if obj.kind == "PS":
            return r0_of_levi_ps(obj.gamma, obj.chi)
        return tsum([obj.chi])
    if isinstance(obj, PSClass):
        return r0_of_full_ps(obj.chi)
    if isinstance(obj, Induced):
        x = _r0_basis(obj.inner)
        reps = positive_on(weyl_group(), obj.inner.gamma)
        out = _zero("T")
        for w in reps:
            out = out + act(w, x)
        return out
    if isinstance(obj, Named):
        return GrothendieckElement("T", dict(obj.jacquet))
    raise TypeError(obj)


def r0(x: GrothendieckElement) -> GrothendieckElement:
    """Minimal-parabolic Jacquet module (the ``r_∅`` shadow) of any element."""
    return x.map(_r0_basis, "T")


shadow = r0


def act(w: WeylElement, x: GrothendieckElement) -> GrothendieckElement:
    """``w.x`` on level T, or on a Levi level for ``w`` normalising it."""
    if x.level == "T":
        return _act_t(w, x)
    return x.map(lambda o: GrothendieckElement.of(x.level, [o.moved(w)]))


def _act_t(w, x):
    acc = Counter()
    for c, k in x.terms.items():
        acc[weyl_act(w, c)] += k
    return GrothendieckElement("T", acc)


# ---------------------------------------------------------------------------
# Induction


def induce_from_torus(gamma: str, x: GrothendieckElement) -> GrothendieckElement:
    """``I^γ`` : R(T) -> R(M_γ)."""
    return x.map(lambda c: GrothendieckElement.of(_levi_level(gamma), [MClass(gamma, "PS", c)]), _levi_level(gamma))


def induce(x: GrothendieckElement) -> GrothendieckElement:
    """Parabolic induction to G from T, M_α or M_β."""
    if x.level == "T":
        return x.map(lambda c: GrothendieckElement.of("G", [PSClass(c)]), "G")

    def one(m: MClass):
        obj = PSClass(m.chi) if m.kind == "PS" else Induced(m)
        return GrothendieckElement.of("G", [obj])

    return x.map(one, "G")


# ---------------------------------------------------------------------------
# Jacquet functors r_α, r_β

# Elements appearing in the four geometric-lemma formulas.
_FORMULA = {
    ("a", "a"): ("3a+2b", ("a+b",), ("b",)),
    ("b", "b"): ("2a+b", ("a",), ("3a+b",)),
    ("a", "b"): (None, ("",), ("2a+b", "a"), ("3a+b", "a")),
    ("b", "a"): (None, ("",), ("a+b", "a"), ("b", "a")),
}


def _word_product(names) -> WeylElement:
    w = weyl_group()[0]
    for n in names:
        if n == "":
            continue
        w = w * (W_ALPHA if n == "a" else W_BETA if n == "b" else reflection(n))
    return w


def jacquet_of_induced(target: str, source: str, sigma: GrothendieckElement) -> GrothendieckElement:
    """``r_target(I_source(σ))`` for σ in R(M_source), extended linearly."""
    if sigma.level != _levi_level(source):
        raise ValueError("σ must live on the source Levi")
    spec = _FORMULA[(source, target)]
    x = r0(sigma)
    out = _zero(_levi_level(target))
    if spec[0] is not None:
        out = out + sigma + act(reflection(spec[0]), sigma)
    for names in spec[1:]:
        out = out + induce_from_torus(target, act(_word_product(names), x))
    return out


def jacquet(gamma: str, x: GrothendieckElement) -> GrothendieckElement:
    """``r_γ`` : R(G) -> R(M_γ)."""
    if x.level != "G":
        raise ValueError("r_γ expects a level-G element")
    lvl = _levi_level(gamma)

    def one(obj):
        if isinstance(obj, PSClass):
            out = _zero(lvl)
            for g in levi_groupings(obj.chi, gamma):
                pair = list(g.terms)
                out = out + GrothendieckElement.of(lvl, [MClass(gamma, "PS", pair[0])])
            return out
        if isinstance(obj, Induced):
            m = obj.inner
            return jacquet_of_induced(gamma, m.gamma, GrothendieckElement.of(m.level, [m]))
        if isinstance(obj, Named):
            acc = Counter()
            for c, k in obj.jacquet:
                acc[MClass(gamma, "Formal", c)] += k
            return GrothendieckElement(lvl, acc)
        raise TypeError(obj)

    return x.map(one, lvl)


# Discrete half of rank-one reducibility for the simple coroots.
_SIMPLE_CONDITION = {"a": "2*a = nm(b)", "b": "res(a) = 2*b"}


def levi_ps_reducible(gamma: str, chi: TorusCharacter) -> bool:
    return abs(coroot(gamma)(chi.lam)) == 1 and predicate_eval(chi, _SIMPLE_CONDITION[gamma])


def levi_constituents(x: GrothendieckElement) -> Counter:
    """Composition factors of a Levi-level element, each keyed by its sorted r_∅.

    A reducible PS^γ contributes two one-term factors; everything else is
    taken as irreducible.
    """
    if x.level not in ("Ma", "Mb"):
        raise ValueError("expects a Levi-level element")
    out: Counter = Counter()
    for obj, k in x.terms.items():
        if obj.kind == "PS" and levi_ps_reducible(obj.gamma, obj.chi):
            for c in r0_of_levi_ps(obj.gamma, obj.chi).terms:
                out[((c, 1),)] += k
        else:
            out[tuple(sorted(_r0_basis(obj).terms.items()))] += k
    return out


# ---------------------------------------------------------------------------
# Aubert involution


def dual_levi(sigma: GrothendieckElement) -> GrothendieckElement:
    """``D_{M_γ}(σ) = I^γ(r_∅ σ) − σ``."""
    gamma = "a" if sigma.level == "Ma" else "b"
    return induce_from_torus(gamma, r0(sigma)) - sigma


def dual_g(pi: GrothendieckElement) -> GrothendieckElement:
    """``D_G(π) = I∘r_∅(π) − I_α∘r_α(π) − I_β∘r_β(π) + π`` (unresolved)."""
    return induce(r0(pi)) - induce(jacquet("a", pi)) - induce(jacquet("b", pi)) + pi


def aubert(pi: GrothendieckElement, candidates: Iterable[Named] = ()) -> GrothendieckElement:
    """Aubert dual of a level-G element, resolved onto known classes.

    Principal-series classes resolve to themselves; a named constituent
    resolves to the candidate whose r_∅ equals that of its dual.
    """
    if pi.level != "G":
        raise ValueError("aubert expects a level-G element")
    candidates = list(candidates)
    out = _zero("G")
    for obj, k in pi.terms.items():
        d = dual_g(GrothendieckElement.of("G", [obj]))
        if isinstance(obj, PSClass):
            out = out + k * _resolve_ps(d)
            continue
        target = r0(d)
        pool = candidates + ([obj] if isinstance(obj, Named) else [])
        match = [c for c in pool if GrothendieckElement("T", dict(c.jacquet)) == target]
        if not match:
            raise UnknownConstituent(f"no known constituent with r_∅ = {target} (dual of {obj})")
        out = out + k * GrothendieckElement.of("G", [match[0]])
    return out


def _resolve_ps(d: GrothendieckElement) -> GrothendieckElement:
    acc = Counter()
    for obj, k in d.terms.items():
        if not isinstance(obj, PSClass):
            raise UnknownConstituent(f"unexpected {obj} in dual of a principal series")
        acc[obj] += k
    return GrothendieckElement("G", acc)


def aubert_identities_check(gamma: str, sigma: GrothendieckElement) -> bool:
    """Both commutation identities, compared through r_∅ shadows.

    ``D_G ∘ I_γ = I_γ ∘ D_{M_γ}`` and ``r_γ ∘ D_G = w̃_γ ∘ D_{M_γ} ∘ r_γ``.
    """
    if sigma.level != _levi_level(gamma):
        raise ValueError("σ must live on M_γ")
    pi = induce(sigma)
    first = r0(dual_g(pi)) == r0(induce(dual_levi(sigma)))
    lhs = jacquet(gamma, dual_g(pi))
    rhs = act(W_TILDE[gamma], dual_levi(jacquet(gamma, pi)))
    second = r0(lhs) == r0(rhs)
    return first and second
