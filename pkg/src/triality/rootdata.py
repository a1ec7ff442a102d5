"""Relative root system of type G2 (short root alpha, long root beta).

Points of the real dual are written ``(s1, s2)`` meaning ``3*s1*alpha + s2*beta``.
Everything is exact: coordinates are :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

__all__ = [
    "Lambda",
    "lam",
    "PositiveCoroot",
    "COROOTS",
    "coroot",
    "WeylElement",
    "weyl_group",
    "element",
    "IDENTITY",
    "W_ALPHA",
    "W_BETA",
    "LONG",
    "reflection",
    "W_TILDE",
    "RHO_B",
    "reflect",
    "orbit_multiset",
    "orbit_formula",
    "pairing",
    "in_chamber",
    "dominant_representative",
    "cone_position",
    "positive_on",
]

Lambda = tuple  # (Fraction, Fraction)


def lam(s1, s2) -> Lambda:
    """Build an exact point from ints, Fractions or ``"p/q"`` strings."""
    return (Fraction(s1), Fraction(s2))


# ---------------------------------------------------------------------------
# Coroots


@dataclass(frozen=True)
class PositiveCoroot:
    name: str  # e.g. "3a+b" for (3alpha+beta)^vee
    c1: int
    c2: int
    tex: str = field(compare=False, default="")

    def __call__(self, x: Lambda) -> Fraction:
        return self.c1 * x[0] + self.c2 * x[1]

    @property
    def form(self):
        return (self.c1, self.c2)

    def __str__(self):
        return self.tex or self.name


# Order matches the rows of the rank-one reducibility table.
COROOTS: tuple[PositiveCoroot, ...] = (
    PositiveCoroot("a", 2, -1, "α"),
    PositiveCoroot("b", -3, 2, "β"),
    PositiveCoroot("a+b", -1, 1, "α+β"),
    PositiveCoroot("2a+b", 1, 0, "2α+β"),
    PositiveCoroot("3a+b", 3, -1, "3α+β"),
    PositiveCoroot("3a+2b", 0, 1, "3α+2β"),
)
_COROOT_BY_NAME = {c.name: c for c in COROOTS}


def coroot(name: str) -> PositiveCoroot:
    return _COROOT_BY_NAME[name]


# ---------------------------------------------------------------------------
# Weyl group
#
# An element carries its action on (s1, s2) as an integer matrix M (column
# vector convention, x -> M x) and its action on discrete character data as
# integer coefficients (p, q, r, u, v):
#     a' = p*a + q*nm(res(a)) + r*nm(b),   b' = u*res(a) + v*b.
# The span {a, nm res a, nm b} x {res a, b} is closed because res∘nm = 3.

_GEN_MATRIX = {
    "a": ((-1, 1), (0, 1)),  # (s1, s2) -> (-s1 + s2, s2)
    "b": ((1, 0), (3, -1)),  # (s1, s2) -> (s1, 3 s1 - s2)
}
_GEN_DISCRETE = {
    "a": (-1, 0, 1, 0, 1),  # (a, b) -> (-a + nm b, b)
    "b": (1, 0, 0, 1, -1),  # (a, b) -> (a, res a - b)
}


def _matmul(m, n):
    return tuple(
        tuple(sum(m[i][k] * n[k][j] for k in range(2)) for j in range(2)) for i in range(2)
    )


def _disc_compose(f, g):
    """Discrete action of f∘g (g acts first)."""
    p1, q1, r1, u1, v1 = f
    p2, q2, r2, u2, v2 = g
    # g: A = p2 a + q2 NR a + r2 N b ; B = u2 R a + v2 b
    # R(A) = (p2 + 3 q2) R a + 3 r2 b ;  NR(A) = (p2 + 3 q2) NR a + 3 r2 N b
    # N(B) = u2 NR a + v2 N b
    ra, rb = p2 + 3 * q2, 3 * r2
    p = p1 * p2
    q = p1 * q2 + q1 * ra + r1 * u2
    r = p1 * r2 + q1 * rb + r1 * v2
    u = u1 * ra + v1 * u2
    v = u1 * rb + v1 * v2
    return (p, q, r, u, v)


@dataclass(frozen=True)
class WeylElement:
    """One of the twelve elements, stored as its shortlex-minimal word.

    The word ``"ab"`` denotes ``w_alpha w_beta`` (``w_beta`` acts first).
    """

    word: str
    matrix: tuple = field(compare=False, repr=False)
    discrete: tuple = field(compare=False, repr=False)

    def __call__(self, x: Lambda) -> Lambda:
        (m11, m12), (m21, m22) = self.matrix
        return (m11 * x[0] + m12 * x[1], m21 * x[0] + m22 * x[1])

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return _by_matrix()[_matmul(self.matrix, other.matrix)]

    def inverse(self) -> "WeylElement":
        return element(self.word[::-1])

    def __len__(self):
        return len(self.word)

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.matrix
        return a * d - b * c

    def act_on_coroot(self, gamma: PositiveCoroot) -> tuple[int, PositiveCoroot]:
        """Return ``(sign, delta)`` with ``gamma∘w^{-1} = sign * delta``."""
        (a, b), (c, d) = self.inverse().matrix
        f = (gamma.c1 * a + gamma.c2 * c, gamma.c1 * b + gamma.c2 * d)
        for delta in COROOTS:
            if delta.form == f:
                return 1, delta
            if delta.form == (-f[0], -f[1]):
                return -1, delta
        raise AssertionError(f"{self.word} does not permute coroots")

    def maps_positive(self, gamma: PositiveCoroot) -> bool:
        return self.act_on_coroot(gamma)[0] > 0

    def pretty(self) -> str:
        if not self.word:
            return "1"
        return "".join("w_α" if c == "a" else "w_β" for c in self.word)

    def __str__(self):
        return self.word or "1"


@lru_cache(maxsize=None)
def weyl_group() -> tuple[WeylElement, ...]:
    """All twelve elements in shortlex order of their reduced words."""
    ident = ((1, 0), (0, 1))
    seen = {ident: WeylElement("", ident, (1, 0, 0, 0, 1))}
    frontier = [seen[ident]]
    while frontier:
        nxt = []
        for w in frontier:
            for g in "ab":
                m = _matmul(w.matrix, _GEN_MATRIX[g])
                if m not in seen:
                    d = _disc_compose(w.discrete, _GEN_DISCRETE[g])
                    seen[m] = WeylElement(w.word + g, m, d)
                    nxt.append(seen[m])
        frontier = sorted(nxt, key=lambda e: e.word)
    return tuple(sorted(seen.values(), key=lambda e: (len(e.word), e.word)))


@lru_cache(maxsize=None)
def _by_matrix():
    return {w.matrix: w for w in weyl_group()}


@lru_cache(maxsize=None)
def element(word: str) -> WeylElement:
    """Element represented by an arbitrary (not necessarily reduced) word."""
    m = ((1, 0), (0, 1))
    for g in word:
        m = _matmul(m, _GEN_MATRIX[g])
    return _by_matrix()[m]


IDENTITY = element("")
W_ALPHA = element("a")
W_BETA = element("b")
LONG = next(w for w in weyl_group() if w.matrix == ((-1, 0), (0, -1)))


@lru_cache(maxsize=None)
def reflection(name: str) -> WeylElement:
    """Reflection attached to the positive root with the given name."""
    gamma = coroot(name)
    for w in weyl_group():
        if w.det == -1 and w.act_on_coroot(gamma) == (-1, gamma):
            return w
    raise KeyError(name)


W_TILDE = {"a": reflection("3a+2b"), "b": reflection("2a+b")}
RHO_B = (5, 3)  # 5 alpha + 3 beta, in (alpha, beta) coefficients


# ---------------------------------------------------------------------------
# Operations


def reflect(w: WeylElement, x: Lambda) -> Lambda:
    return w(x)


def orbit_multiset(x: Lambda) -> list[Lambda]:
    return [w(x) for w in weyl_group()]


def orbit_formula(x: Lambda) -> list[Lambda]:
    """The twelve points listed as six ± pairs, written out directly."""
    s1, s2 = x
    pairs = [
        (s1, s2),
        (s1 - s2, -s2),
        (2 * s1 - s2, 3 * s1 - s2),
        (2 * s1 - s2, 3 * s1 - 2 * s2),
        (s1 - s2, 3 * s1 - 2 * s2),
        (s1, 3 * s1 - s2),
    ]
    return [p for a, b in pairs for p in ((a, b), (-a, -b))]


def pairing(x: Lambda, gamma: PositiveCoroot | str) -> Fraction:
    if isinstance(gamma, str):
        gamma = coroot(gamma)
    return Fraction(gamma(x))


def in_chamber(x: Lambda) -> bool:
    """Closed dominant chamber ``0 <= 3/2 s2 <= 3 s1 <= 2 s2``."""
    s1, s2 = x
    return 0 <= Fraction(3, 2) * s2 <= 3 * s1 <= 2 * s2


def dominant_representative(x: Lambda) -> tuple[Lambda, WeylElement]:
    # weyl_group() is already in (length, word) order
    for w in weyl_group():
        y = w(x)
        if in_chamber(y):
            return y, w
    raise AssertionError("no dominant conjugate")  # pragma: no cover


def cone_position(x: Lambda) -> str:
    s1, s2 = x
    if s1 > 0 and s2 > 0:
        return "strictly-positive"
    if s1 >= 0 and s2 >= 0:
        return "boundary-nonnegative"
    return "outside"


def positive_on(elements: Iterable[WeylElement], gamma: PositiveCoroot | str):
    """Elements mapping the root ``gamma`` to a positive root."""
    if isinstance(gamma, str):
        gamma = coroot(gamma)
    return [w for w in elements if w.maps_positive(gamma)]
