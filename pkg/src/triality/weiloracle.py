"""Exact character theory of finite groups, used as a stand-in for Weil groups.

A Weil group is replaced by a finite split extension ``A ⋊ Q`` where ``A``
plays a finite quotient of ``L^×`` and ``Q`` the Galois group of ``L/F``.
Characters of ``L^×`` become characters of ``A`` and restriction of a
character of ``L^×`` to ``K^×`` is realized as composition with the transfer
``W_K → A``.

All character values live in a cyclotomic field and every comparison is exact.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

__all__ = [
    "Cyclotomic",
    "FiniteGroup",
    "GroupCharacter",
    "MatrixRep",
    "WeilModel",
    "ModelError",
    "IncompleteData",
    "linear_characters",
    "irreducible_characters",
    "induce",
    "induced_rep",
    "tensor_induce",
    "tensor_induce_matrix",
    "tensor_induced_rep",
    "tensor_agreement",
    "index_three_subgroups",
    "transfer",
    "transfer_character",
    "conjugate_character",
    "sym_alt_ad",
    "invariants_dim",
    "prop314_verify",
    "lemma315_report",
    "lemma315_check",
    "thm317_report",
    "thm317_check",
    "SupercuspidalData",
    "thm37_predicate",
    "BUILTIN_MODELS",
    "builtin_model",
    "load_model",
    "parse_model",
]


class ModelError(ValueError):
    """A group model is malformed or lacks the required shape."""


class IncompleteData(ValueError):
    pass


# ---------------------------------------------------------------------------
# Cyclotomic numbers


def _poly_divide_exact(a: list, b: tuple) -> list:
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        coef = a[i + len(b) - 1]
        q[i] = coef
        if coef:
            for j, bj in enumerate(b):
                a[i + j] -= coef * bj
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple:
    """Coefficients of the m-th cyclotomic polynomial, lowest degree first."""
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _poly_divide_exact(num, cyclotomic_polynomial(d))
    return tuple(num)


def _reduce(coeffs: list, m: int) -> tuple:
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    r = list(coeffs)
    for i in range(len(r) - 1, deg - 1, -1):
        c = r[i]
        if c:
            base = i - deg
            for j in range(deg):
                r[base + j] -= c * phi[j]
            r[i] = 0
    r = r[:deg] + [0] * (deg - len(r))
    return tuple(r)


@lru_cache(maxsize=None)
def _root_table(m: int) -> tuple:
    deg = len(cyclotomic_polynomial(m)) - 1
    out = []
    for k in range(m):
        v = [0] * max(k + 1, deg)
        v[k] = 1
        out.append(_reduce(v, m))
    return tuple(out)


class Cyclotomic:
    """An element of Q(ζ_m), stored reduced in the power basis of ζ_m = exp(2πi/m)."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs):
        self.m = m
        self.coeffs = tuple(coeffs)

    @classmethod
    def root(cls, m: int, k: int) -> "Cyclotomic":
        return cls(m, _root_table(m)[k % m])

    @classmethod
    def const(cls, m: int, q) -> "Cyclotomic":
        deg = len(cyclotomic_polynomial(m)) - 1
        return cls(m, (q,) + (0,) * (deg - 1))

    @classmethod
    def from_exponents(cls, m: int, terms: dict) -> "Cyclotomic":
        table = _root_table(m)
        acc = [0] * len(table[0])
        for k, c in terms.items():
            if c:
                for i, x in enumerate(table[k % m]):
                    if x:
                        acc[i] += c * x
        return cls(m, acc)

    def _lift(self, big: int) -> "Cyclotomic":
        if big == self.m:
            return self
        step = big // self.m
        # coefficients are in the power basis of ζ_m = ζ_big^step
        return Cyclotomic.from_exponents(big, {i * step: c for i, c in enumerate(self.coeffs) if c})

    def _coerce(self, other) -> tuple["Cyclotomic", "Cyclotomic"]:
        if isinstance(other, Cyclotomic):
            if other.m == self.m:
                return self, other
            big = math.lcm(self.m, other.m)
            return self._lift(big), other._lift(big)
        return self, Cyclotomic.const(self.m, other)

    def __add__(self, other):
        a, b = self._coerce(other)
        return Cyclotomic(a.m, (x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.m, (-x for x in self.coeffs))

    def __sub__(self, other):
        return self + (-other if isinstance(other, Cyclotomic) else -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Cyclotomic):
            return Cyclotomic(self.m, (x * other for x in self.coeffs))
        a, b = self._coerce(other)
        prod = [0] * (2 * len(a.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic(a.m, _reduce(prod, a.m))

    __rmul__ = __mul__

    def __truediv__(self, q):
        if isinstance(q, Cyclotomic):
            raise TypeError("division by a cyclotomic number is not supported")
        return Cyclotomic(self.m, (Fraction(x) / q for x in self.coeffs))

    def conjugate(self) -> "Cyclotomic":
        return Cyclotomic.from_exponents(self.m, {(-i) % self.m: c for i, c in enumerate(self.coeffs) if c})

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (Cyclotomic, int, Fraction)):
            return (self - other).is_zero()
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.m, self.coeffs))

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.coeffs[0])

    def __complex__(self):
        z = complex(math.cos(2 * math.pi / self.m), math.sin(2 * math.pi / self.m))
        return sum((complex(float(c)) * z**i for i, c in enumerate(self.coeffs)), 0j)

    def __repr__(self):
        terms = [f"{c}·ζ^{i}" for i, c in enumerate(self.coeffs) if c]
        return f"Cyclotomic({self.m}: {' + '.join(terms) or '0'})"


# ---------------------------------------------------------------------------
# Finite groups


class FiniteGroup:
    """A group on ``0..n-1`` given by its multiplication table."""

    def __init__(self, table, name: str = "", field_m: int | None = None, check: bool = True):
        n = len(table)
        if n == 0 or any(len(r) != n for r in table):
            raise ModelError("multiplication table must be square and nonempty")
        self.n = n
        self.name = name
        self.table = tuple(tuple(r) for r in table)
        if any(not 0 <= x < n for r in self.table for x in r):
            raise ModelError("table entries out of range")
        ids = [e for e in range(n) if all(self.table[e][x] == x for x in range(n))]
        if not ids:
            raise ModelError("no identity element")
        self.identity = ids[0]
        inv = [None] * n
        for x in range(n):
            for y in range(n):
                if self.table[x][y] == self.identity:
                    inv[x] = y
                    break
            if inv[x] is None:
                raise ModelError(f"element {x} has no inverse")
        self.inverse = tuple(inv)
        if check:
            self._check_associative()
        self.orders = tuple(self._order(x) for x in range(n))
        self.exponent = math.lcm(*self.orders)
        self.field_m = field_m or self.exponent
        self._classes()

    def _check_associative(self):
        t = self.table
        if self.n <= 128:
            triples = itertools.product(range(self.n), repeat=3)
        else:
            rng = random.Random(0)
            triples = ((rng.randrange(self.n), rng.randrange(self.n), rng.randrange(self.n)) for _ in range(20000))
        for a, b, c in triples:
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise ModelError(f"not associative at ({a},{b},{c})")

    def _order(self, x: int) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self.table[y][x]
            k += 1
        return k

    def _classes(self):
        class_of = [-1] * self.n
        classes = []
        for x in range(self.n):
            if class_of[x] >= 0:
                continue
            cl = sorted({self.conj(g, x) for g in range(self.n)})
            for y in cl:
                class_of[y] = len(classes)
            classes.append(tuple(cl))
        self.classes = tuple(classes)
        self.class_of = tuple(class_of)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def prod(self, *xs: int) -> int:
        out = self.identity
        for x in xs:
            out = self.table[out][x]
        return out

    def power(self, x: int, k: int) -> int:
        k %= self.orders[x]
        out = self.identity
        for _ in range(k):
            out = self.table[out][x]
        return out

    def conj(self, g: int, x: int) -> int:
        """``g x g^{-1}``."""
        return self.table[self.table[g][x]][self.inverse[g]]

    def generated(self, xs) -> frozenset:
        seen = {self.identity}
        frontier = [self.identity]
        xs = list(xs)
        while frontier:
            nxt = []
            for y in frontier:
                for x in xs:
                    z = self.table[y][x]
                    if z not in seen:
                        seen.add(z)
                        nxt.append(z)
            frontier = nxt
        return frozenset(seen)

    def subgroup(self, elements, name: str = "") -> "Subgroup":
        return Subgroup(self, elements, name)

    def is_abelian(self) -> bool:
        return all(self.table[x][y] == self.table[y][x] for x in range(self.n) for y in range(x))

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"FiniteGroup({self.name or '?'}, order {self.n})"


class Subgroup(FiniteGroup):
    """A subgroup, with its own table and an embedding into the parent."""

    def __init__(self, parent: FiniteGroup, elements, name: str = ""):
        elems = sorted(set(elements))
        if not elems:
            raise ModelError("empty subgroup")
        local = {x: i for i, x in enumerate(elems)}
        try:
            table = [[local[parent.table[x][y]] for y in elems] for x in elems]
        except KeyError:
            raise ModelError(f"{name or 'subset'} is not closed under multiplication") from None
        self.parent = parent
        self.embed = tuple(elems)
        self.local = local
        super().__init__(table, name, field_m=parent.field_m, check=False)
        if parent.n % self.n:
            raise ModelError("subgroup order does not divide the group order")

    @property
    def index(self) -> int:
        return self.parent.n // self.n

    def __contains__(self, x: int) -> bool:
        return x in self.local

    def transversal(self) -> tuple:
        """Left coset representatives ``t_i`` (first element of each coset), identity first."""
        cached = self.__dict__.get("_transversal")
        if cached is None:
            cached = self._transversal = self._left_cosets()
        return cached

    def _left_cosets(self) -> tuple:
        G = self.parent
        seen: set = set()
        reps = []
        for g in range(G.n):
            if g in seen:
                continue
            reps.append(g)
            seen.update(G.table[g][h] for h in self.embed)
        e = G.identity
        reps.remove(e)
        return (e, *reps)

    def decompose(self, g: int, reps) -> tuple[int, int]:
        """``(i, h)`` with ``g = t_i h``."""
        G = self.parent
        for i, t in enumerate(reps):
            h = G.table[G.inverse[t]][g]
            if h in self.local:
                return i, h
        raise ModelError("transversal does not cover the group")

    def coset_action(self, g: int, reps) -> tuple[tuple, tuple]:
        """``π`` and ``h_i`` with ``g t_i = t_{π(i)} h_i``."""
        G = self.parent
        perm, hs = [], []
        for t in reps:
            j, h = self.decompose(G.table[g][t], reps)
            perm.append(j)
            hs.append(h)
        return tuple(perm), tuple(hs)


# ---------------------------------------------------------------------------
# Characters


class GroupCharacter:
    """A class function with values in Q(ζ_m), one value per conjugacy class."""

    __slots__ = ("group", "values")

    def __init__(self, group: FiniteGroup, values):
        self.group = group
        self.values = tuple(values)
        if len(self.values) != len(group.classes):
            raise ValueError("one value per conjugacy class required")

    @classmethod
    def from_function(cls, group: FiniteGroup, f) -> "GroupCharacter":
        return cls(group, (f(cl[0]) for cl in group.classes))

    @classmethod
    def trivial(cls, group: FiniteGroup) -> "GroupCharacter":
        one = Cyclotomic.const(group.field_m, 1)
        return cls(group, (one,) * len(group.classes))

    def __call__(self, x: int) -> Cyclotomic:
        return self.values[self.group.class_of[x]]

    @property
    def degree(self) -> int:
        d = self(self.group.identity).to_fraction()
        if d.denominator != 1:
            raise ArithmeticError("non-integral degree")
        return int(d)

    def _check(self, other: "GroupCharacter"):
        if other.group is not self.group:
            raise ValueError("characters of different groups")

    def inner(self, other: "GroupCharacter") -> Fraction:
        self._check(other)
        acc = Cyclotomic.const(self.group.field_m, 0)
        for cl, v, w in zip(self.group.classes, self.values, other.values):
            acc = acc + v * w.conjugate() * len(cl)
        return acc.to_fraction() / self.group.n

    def norm(self) -> Fraction:
        return self.inner(self)

    def is_irreducible(self) -> bool:
        return self.norm() == 1 and self.degree > 0

    def is_trivial(self) -> bool:
        return self == GroupCharacter.trivial(self.group)

    def __add__(self, other):
        self._check(other)
        return GroupCharacter(self.group, (a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        self._check(other)
        return GroupCharacter(self.group, (a - b for a, b in zip(self.values, other.values)))

    def __mul__(self, other):
        if isinstance(other, GroupCharacter):
            self._check(other)
            return GroupCharacter(self.group, (a * b for a, b in zip(self.values, other.values)))
        return GroupCharacter(self.group, (a * other for a in self.values))

    __rmul__ = __mul__

    def __truediv__(self, q):
        return GroupCharacter(self.group, (a / q for a in self.values))

    def dual(self) -> "GroupCharacter":
        return GroupCharacter(self.group, (a.conjugate() for a in self.values))

    def adams(self, k: int) -> "GroupCharacter":
        """``g ↦ χ(g^k)``."""
        G = self.group
        return GroupCharacter.from_function(G, lambda x: self(G.power(x, k)))

    def restrict(self, H: Subgroup) -> "GroupCharacter":
        if H.parent is not self.group:
            raise ValueError("not a subgroup of this character's group")
        return GroupCharacter.from_function(H, lambda x: self(H.embed[x]))

    def __eq__(self, other):
        if not isinstance(other, GroupCharacter):
            return NotImplemented
        return other.group is self.group and all(a == b for a, b in zip(self.values, other.values))

    def __hash__(self):
        return hash((id(self.group), self.values))

    def __repr__(self):
        vals = ", ".join(str(complex(v)) if not v.is_rational() else str(v.to_fraction()) for v in self.values)
        return f"GroupCharacter({self.group.name or '?'}: {vals})"


def linear_characters(H: FiniteGroup) -> list[GroupCharacter]:
    """All homomorphisms ``H → C^×``, by search over images of a generating set."""
    gens: list[int] = []
    span = frozenset({H.identity})
    for x in sorted(range(H.n), key=lambda y: -H.orders[y]):
        if x not in span:
            gens.append(x)
            span = H.generated(gens)
        if len(span) == H.n:
            break
    m = H.field_m
    found: dict = {}
    choices = [range(H.orders[g]) for g in gens]
    for pick in itertools.product(*choices):
        gen_exp = [p * (m // H.orders[g]) for p, g in zip(pick, gens)]
        val = {H.identity: 0}
        frontier = [H.identity]
        ok = True
        while frontier and ok:
            nxt = []
            for x in frontier:
                for g, e in zip(gens, gen_exp):
                    y = H.table[x][g]
                    v = (val[x] + e) % m
                    if y not in val:
                        val[y] = v
                        nxt.append(y)
                    elif val[y] != v:
                        ok = False
                        break
                if not ok:
                    break
            frontier = nxt
        if ok:
            key = tuple(val[cl[0]] for cl in H.classes)
            if all(val[y] == val[cl[0]] for cl in H.classes for y in cl):
                found[key] = key
    return [GroupCharacter(H, (Cyclotomic.root(m, k) for k in key)) for key in sorted(found)]


def conjugate_character(chi: GroupCharacter, g: int) -> GroupCharacter:
    """``χ^g(h) = χ(g h g^{-1})`` for ``g`` normalizing the subgroup carrying ``χ``."""
    H = chi.group
    if not isinstance(H, Subgroup):
        return chi
    G = H.parent

    def f(x):
        y = G.conj(g, H.embed[x])
        if y not in H:
            raise ModelError("element does not normalize the subgroup")
        return chi(H.local[y])

    return GroupCharacter.from_function(H, f)


def induce(H: Subgroup, chi: GroupCharacter) -> GroupCharacter:
    """Induced character ``Ind_H^G χ``."""
    if not isinstance(H, Subgroup) or chi.group is not H:
        raise ModelError("induction needs a character of a subgroup")
    G = H.parent
    reps = H.transversal()
    zero = Cyclotomic.const(G.field_m, 0)

    def f(g):
        acc = zero
        for t in reps:
            y = G.prod(G.inverse[t], g, t)
            if y in H:
                acc = acc + chi(H.local[y])
        return acc

    return GroupCharacter.from_function(G, f)


# ---------------------------------------------------------------------------
# Matrix representations


def _matmul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = None
            for t in range(k):
                x, y = a[i][t], b[t][j]
                if x.is_zero() or y.is_zero():
                    continue
                acc = x * y if acc is None else acc + x * y
            row.append(acc if acc is not None else a[0][0] * 0)
        out.append(tuple(row))
    return tuple(out)


def _trace(a):
    acc = a[0][0]
    for i in range(1, len(a)):
        acc = acc + a[i][i]
    return acc


@dataclass
class MatrixRep:
    """Explicit matrices ``ρ(g)`` for every element of the group."""

    group: FiniteGroup
    matrices: dict

    def __post_init__(self):
        if set(self.matrices) != set(range(self.group.n)):
            raise ModelError("a matrix is required for every element")
        self.degree = len(self.matrices[self.group.identity])

    def check(self, generators=None) -> bool:
        """``ρ(g)ρ(x) = ρ(gx)`` for ``g`` in a generating set and every ``x``."""
        G = self.group
        gens = generators or _generating_set(G)
        for g in gens:
            for x in range(G.n):
                lhs = _matmul(self.matrices[g], self.matrices[x])
                rhs = self.matrices[G.table[g][x]]
                if any(a != b for ra, rb in zip(lhs, rhs) for a, b in zip(ra, rb)):
                    return False
        return True

    def character(self) -> GroupCharacter:
        return GroupCharacter.from_function(self.group, lambda x: _trace(self.matrices[x]))


def _generating_set(G: FiniteGroup) -> list[int]:
    gens: list[int] = []
    span = frozenset({G.identity})
    for x in sorted(range(G.n), key=lambda y: -G.orders[y]):
        if x not in span:
            gens.append(x)
            span = G.generated(gens)
        if len(span) == G.n:
            break
    return gens


def induced_rep(H: Subgroup, chi: GroupCharacter) -> MatrixRep:
    """Monomial matrices of ``Ind_H^G χ`` for a linear ``χ``."""
    if chi.degree != 1:
        raise ModelError("induced_rep needs a linear character")
    G = H.parent
    reps = H.transversal()
    zero = Cyclotomic.const(G.field_m, 0)
    mats = {}
    for g in range(G.n):
        perm, hs = H.coset_action(g, reps)
        rows = [[zero] * len(reps) for _ in reps]
        for j, (i, h) in enumerate(zip(perm, hs)):
            rows[i][j] = chi(H.local[h])
        mats[g] = tuple(tuple(r) for r in rows)
    return MatrixRep(G, mats)


def tensor_induce_matrix(H: Subgroup, rep: MatrixRep, g: int):
    """The matrix of ``g`` on ``V^{⊗n}`` for the tensor-induced representation."""
    if rep.group is not H:
        raise ModelError("representation is not on the given subgroup")
    reps = H.transversal()
    perm, hs = H.coset_action(g, reps)
    d, n = rep.degree, len(reps)
    mats = [rep.matrices[H.local[h]] for h in hs]
    # nonzero[i][j]: the nonzero entries (row, value) of column j of ρ(h_i)
    nonzero = [[[(r, m[r][j]) for r in range(d) if not m[r][j].is_zero()] for j in range(d)] for m in mats]
    zero = Cyclotomic.const(H.field_m, 0)
    basis = list(itertools.product(range(d), repeat=n))
    pos = {b: i for i, b in enumerate(basis)}
    out = [[zero] * len(basis) for _ in basis]
    for col, J in enumerate(basis):
        # factor i goes to slot perm[i] and is acted on by ρ(h_i)
        per_slot = [None] * n
        for i in range(n):
            per_slot[perm[i]] = nonzero[i][J[i]]
        for combo in itertools.product(*per_slot):
            coef = combo[0][1]
            for _, c in combo[1:]:
                coef = coef * c
            row = pos[tuple(r for r, _ in combo)]
            out[row][col] = out[row][col] + coef
    return tuple(tuple(r) for r in out)


def _tensor_formula_value(H: Subgroup, rep: MatrixRep, g: int) -> Cyclotomic:
    reps = H.transversal()
    perm, hs = H.coset_action(g, reps)
    G = H.parent
    seen = [False] * len(reps)
    val = None
    for start in range(len(reps)):
        if seen[start]:
            continue
        cycle = []
        i = start
        while not seen[i]:
            seen[i] = True
            cycle.append(i)
            i = perm[i]
        # trace of ρ(h_{last} ... h_{second} h_{first}) around the cycle
        prod = G.identity
        for i in cycle:
            prod = G.table[hs[i]][prod]
        t = _trace(rep.matrices[H.local[prod]])
        val = t if val is None else val * t
    return val


def tensor_induce(H: Subgroup, rep: MatrixRep, method: str = "both") -> GroupCharacter:
    """Character of the tensor induction ``⊗-Ind_H^G ρ``.

    ``method`` is ``formula`` (cycle products of traces), ``matrix`` (traces
    of the constructed ``d^n``-dimensional matrices) or ``both``, which
    computes the two and raises ``ArithmeticError`` on any disagreement.
    """
    if H.index != 3:
        raise ModelError(f"tensor induction needs index 3, got {H.index}")
    if rep.group is not H:
        raise ModelError("representation is not on the given subgroup")
    G = H.parent
    formula = matrix = None
    if method in ("formula", "both"):
        formula = GroupCharacter.from_function(G, lambda g: _tensor_formula_value(H, rep, g))
    if method in ("matrix", "both"):
        matrix = GroupCharacter.from_function(G, lambda g: _trace(tensor_induce_matrix(H, rep, g)))
    if formula is None and matrix is None:
        raise ValueError(f"unknown method {method!r}")
    if formula is not None and matrix is not None and formula != matrix:
        raise ArithmeticError("tensor induction: matrix and formula disagree")
    return formula if formula is not None else matrix


def tensor_induced_rep(H: Subgroup, rep: MatrixRep) -> MatrixRep:
    """The tensor-induced representation with matrices for every element."""
    G = H.parent
    return MatrixRep(G, {g: tensor_induce_matrix(H, rep, g) for g in range(G.n)})


def index_three_subgroups(model: "WeilModel") -> list[Subgroup]:
    """Named index-3 subgroups, or for groups of order ≤ 48 all subgroups generated by two elements."""
    G = model.group
    found = [H for H in model.subgroups.values() if H.index == 3]
    if found or G.n > 48:
        return found
    seen = set()
    for x in range(G.n):
        for y in range(x, G.n):
            S = G.generated([x, y])
            if len(S) * 3 == G.n and S not in seen:
                seen.add(S)
                found.append(G.subgroup(S))
    return found


def _small_reps(H: Subgroup) -> list[MatrixRep]:
    reps = []
    for lam in linear_characters(H):
        reps.append(MatrixRep(H, {x: ((lam(x),),) for x in range(H.n)}))
    for K in _index_two_subgroups(H):
        for lam in linear_characters(K):
            reps.append(induced_rep(K, lam))
    return reps


def tensor_agreement(model: "WeilModel") -> tuple[int, int]:
    """Compare matrix traces and the cycle formula on every class; returns ``(compared, mismatches)``."""
    compared = mismatches = 0
    for H in index_three_subgroups(model):
        for rep in _small_reps(H):
            for cl in model.group.classes:
                g = cl[0]
                compared += 1
                if _trace(tensor_induce_matrix(H, rep, g)) != _tensor_formula_value(H, rep, g):
                    mismatches += 1
    return compared, mismatches


# ---------------------------------------------------------------------------
# Transfer


def transfer(H: Subgroup, g: int, reps=None) -> int:
    """Verlagerung ``G → H^{ab}``: the product of the ``h_i`` in ``g t_i = t_{π(i)} h_i``.

    The returned element of ``H`` is well defined modulo ``[H, H]``.
    """
    reps = reps or H.transversal()
    _, hs = H.coset_action(g, reps)
    return H.parent.prod(*hs)


def transfer_character(H: Subgroup, chi: GroupCharacter, reps=None) -> GroupCharacter:
    """``χ ∘ Ver_{G→H}`` for a linear character ``χ`` of ``H``."""
    if chi.group is not H:
        raise ModelError("character is not on the given subgroup")
    return GroupCharacter.from_function(H.parent, lambda g: chi(H.local[transfer(H, g, reps)]))


def commutator_subgroup(G: FiniteGroup) -> frozenset:
    comms = {G.prod(x, y, G.inverse[x], G.inverse[y]) for x in range(G.n) for y in range(G.n)}
    return G.generated(comms)


# ---------------------------------------------------------------------------
# Sym², ∧², Ad and invariants


def sym_alt_ad(phi: GroupCharacter) -> tuple[GroupCharacter, GroupCharacter, GroupCharacter]:
    if phi.degree != 2:
        raise ValueError("sym_alt_ad needs a 2-dimensional character")
    sq, ad2 = phi * phi, phi.adams(2)
    alt = (sq - ad2) / 2
    sym = sq - alt
    return sym, alt, sym * alt.dual()


def invariants_dim(x) -> int:
    """Dimension of the invariants; for a :class:`MatrixRep` the averaging projector is checked too."""
    if isinstance(x, GroupCharacter):
        d = x.inner(GroupCharacter.trivial(x.group))
        if d.denominator != 1 or d < 0:
            raise ArithmeticError("not a character")
        return int(d)
    if isinstance(x, MatrixRep):
        G = x.group
        by_char = invariants_dim(x.character())
        acc = None
        for g in range(G.n):
            m = x.matrices[g]
            acc = m if acc is None else tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(acc, m))
        proj = tuple(tuple(a / G.n for a in r) for r in acc)
        sq = _matmul(proj, proj)
        if any(a != b for r, s in zip(sq, proj) for a, b in zip(r, s)):
            raise ArithmeticError("averaging operator is not idempotent")
        # for an idempotent the rank equals the trace
        rank = _trace(proj).to_fraction()
        if rank != by_char:
            raise ArithmeticError("projector rank and character inner product disagree")
        return by_char
    raise TypeError("expected a GroupCharacter or MatrixRep")


def irreducible_characters(G: FiniteGroup, seeds=()) -> list[GroupCharacter]:
    """Irreducible characters found by peeling products and cyclic inductions.

    Raises ``ArithmeticError`` if the degrees found do not account for ``|G|``.
    """
    known = list(linear_characters(G))
    queue = [s.character() if isinstance(s, MatrixRep) else s for s in seeds]
    for cl in G.classes:
        C = G.subgroup(G.generated([cl[0]]))
        queue.extend(induce(C, lam) for lam in linear_characters(C))

    def total():
        return sum(c.degree**2 for c in known)

    def peel(x):
        for c in known:
            k = x.inner(c)
            if k:
                x = x - c * k
        return x

    def absorb(x) -> bool:
        r = peel(x)
        if r.norm() == 1 and r.degree > 0:
            known.append(r)
            return True
        return False

    while queue and total() < G.n:
        absorb(queue.pop(0))
    rounds = 0
    while total() < G.n and rounds < 4:
        rounds += 1
        for a, b in itertools.combinations_with_replacement(list(known), 2):
            absorb(a * b)
            if total() >= G.n:
                break
    if total() != G.n:
        raise ArithmeticError(f"irreducible characters of {G!r} not found")
    return sorted(known, key=lambda c: c.degree)


# ---------------------------------------------------------------------------
# Models


@dataclass
class WeilModel:
    name: str
    group: FiniteGroup
    subgroups: dict = field(default_factory=dict)
    seeds: tuple = ()

    def sub(self, name: str) -> Subgroup:
        if name not in self.subgroups:
            raise ModelError(f"model {self.name!r} lacks subgroup {name!r}")
        return self.subgroups[name]

    def to_text(self) -> str:
        G = self.group
        lines = [f"order {G.n} exponent {G.exponent}"]
        lines += [" ".join(map(str, row)) for row in G.table]
        for name, H in self.subgroups.items():
            lines.append(f"subgroup {name} : {' '.join(map(str, H.embed))}")
        return "\n".join(lines) + "\n"


def parse_model(text: str, name: str = "model") -> WeilModel:
    """Read ``order n exponent m``, ``n`` table rows and ``subgroup <name> : <elements>`` lines."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ModelError("empty model")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "order" or head[2] != "exponent":
        raise ModelError("header must read 'order <n> exponent <m>'")
    try:
        n, m = int(head[1]), int(head[3])
        rows = [[int(x) for x in ln.replace(",", " ").split()] for ln in lines[1 : n + 1]]
    except ValueError as exc:
        raise ModelError(f"bad number: {exc}") from None
    if len(rows) != n:
        raise ModelError("truncated multiplication table")
    G = FiniteGroup(rows, name)
    if G.exponent != m:
        raise ModelError(f"declared exponent {m} but the table has exponent {G.exponent}")
    subs = {}
    for ln in lines[n + 1 :]:
        if not ln.startswith("subgroup "):
            raise ModelError(f"unexpected line {ln!r}")
        lhs, _, rhs = ln[len("subgroup ") :].partition(":")
        sname = lhs.strip()
        try:
            elems = [int(x) for x in rhs.replace(",", " ").split()]
        except ValueError:
            raise ModelError(f"bad element list for {sname}") from None
        subs[sname] = G.subgroup(elems, sname)
    return WeilModel(name, G, subs)


def _group_from_generators(gens, mul, name):
    elems = list(dict.fromkeys(gens))
    index = {x: i for i, x in enumerate(elems)}
    i = 0
    while i < len(elems):
        for g in gens:
            y = mul(elems[i], g)
            if y not in index:
                index[y] = len(elems)
                elems.append(y)
        i += 1
    e = next(x for x in elems if all(mul(x, g) == g for g in gens))
    elems.remove(e)
    elems.insert(0, e)
    index = {x: i for i, x in enumerate(elems)}
    table = [[index[mul(x, y)] for y in elems] for x in elems]
    return FiniteGroup(table, name), elems, index


def _perm_mul(p, q):
    return tuple(p[q[i]] for i in range(len(p)))


def _dihedral(n: int) -> WeilModel:
    r = tuple((i + 1) % n for i in range(n))
    s = tuple((-i) % n for i in range(n))
    G, _, _ = _group_from_generators([r, s], _perm_mul, f"D{2 * n}")
    return WeilModel(f"d{2 * n}", G)


# 2x2 matrices over Q(i); entries are (re, im) pairs of Fractions
def _gmul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _gadd(x, y):
    return (x[0] + y[0], x[1] + y[1])


def _mat2_mul(a, b):
    return tuple(
        tuple(_gadd(_gmul(a[i][0], b[0][j]), _gmul(a[i][1], b[1][j])) for j in range(2)) for i in range(2)
    )


def _g(re, im=0):
    return (Fraction(re), Fraction(im))


def _quaternion_model(name: str, gens) -> WeilModel:
    G, elems, _ = _group_from_generators(gens, _mat2_mul, name)
    m = G.field_m
    i_root = Cyclotomic.root(m, m // 4)

    def cyc(x):
        return Cyclotomic.const(m, x[0]) + i_root * x[1]

    mats = {k: tuple(tuple(cyc(x) for x in row) for row in e) for k, e in enumerate(elems)}
    return WeilModel(name, G, {}, (MatrixRep(G, mats),))


_QI = ((_g(0, 1), _g(0)), (_g(0), _g(0, -1)))
_QJ = ((_g(0), _g(1)), (_g(-1), _g(0)))
_QW = (
    (_g(Fraction(-1, 2), Fraction(1, 2)), _g(Fraction(1, 2), Fraction(1, 2))),
    (_g(Fraction(-1, 2), Fraction(1, 2)), _g(Fraction(-1, 2), Fraction(-1, 2))),
)


def _split_extension(name, moduli, q_gens, q_mul, q_id, action, q_subgroups) -> WeilModel:
    """``A ⋊ Q`` with ``A = ∏ Z/n_i`` and ``q`` acting on factor ``i`` by ``action(q)[i]``."""

    def mul(x, y):
        (a, q), (b, r) = x, y
        u = action(q)
        return (tuple((ai + ui * bi) % n for ai, ui, bi, n in zip(a, u, b, moduli)), q_mul(q, r))

    zero = tuple(0 for _ in moduli)
    gens = [(tuple(1 if j == i else 0 for j in range(len(moduli))), q_id) for i in range(len(moduli))]
    gens += [(zero, q) for q in q_gens]
    G, elems, _ = _group_from_generators(gens, mul, name)
    subs = {}
    for sname, qs in q_subgroups.items():
        qs = set(qs)
        subs[sname] = G.subgroup([k for k, (a, q) in enumerate(elems) if q in qs], sname)
    return WeilModel(name, G, subs)


def _c6_model(name, moduli, units):
    # Q = Z/6 = <c>, c acting on factor i by units[i]
    return _split_extension(
        name,
        moduli,
        [1],
        lambda q, r: (q + r) % 6,
        0,
        lambda q: tuple(pow(u, q, n) for u, n in zip(units, moduli)),
        {"L": [0], "E": [0, 3], "K": [0, 2, 4]},
    )


def _d12_mul(x, y):
    (r1, s1), (r2, s2) = x, y
    return ((r1 + (-1) ** s1 * r2) % 6, (s1 + s2) % 2)


def _d12_model(name, moduli):
    # σ0 = (1, 0) acts by -1 on A, τ = (0, 1) acts trivially
    return _split_extension(
        name,
        moduli,
        [(1, 0), (0, 1)],
        _d12_mul,
        (0, 0),
        lambda q: tuple((-1) ** q[0] for _ in moduli),
        {
            "L": [(0, 0)],
            "E": [(0, 0), (3, 0), (0, 1), (3, 1)],
            "Ec": [(0, 0), (3, 0)],
            "K": [(0, 0), (2, 0), (4, 0)],
            "M1": [(0, 0), (0, 1)],
            "M2": [(0, 0), (3, 1)],
        },
    )


_BUILDERS = {
    "d8": lambda: _dihedral(4),
    "d12": lambda: _dihedral(6),
    "q8": lambda: _quaternion_model("q8", [_QI, _QJ]),
    "sl23": lambda: _quaternion_model("sl23", [_QI, _QJ, _QW]),
    "f42": lambda: _c6_model("f42", (7,), (3,)),
    "f42xc2": lambda: _c6_model("f42xc2", (7, 2), (3, 1)),
    "d12c13": lambda: _d12_model("d12c13", (13,)),
    "d12c39": lambda: _d12_model("d12c39", (3, 13)),
}

BUILTIN_MODELS = tuple(_BUILDERS)


@lru_cache(maxsize=None)
def builtin_model(name: str) -> WeilModel:
    if name not in _BUILDERS:
        raise ModelError(f"unknown builtin model {name!r}; choose from {', '.join(BUILTIN_MODELS)}")
    return _BUILDERS[name]()


def load_model(spec: str) -> WeilModel:
    """A builtin model by name, or a model file path."""
    if spec in _BUILDERS:
        return builtin_model(spec)
    path = Path(spec)
    if not path.exists():
        raise ModelError(f"no builtin model or file named {spec!r}")
    return parse_model(path.read_text(), path.stem)


# ---------------------------------------------------------------------------
# Triple products of 2-dimensional representations


@dataclass
class Prop314Report:
    model: str
    two_dim: int
    triples: int = 0
    nonzero: int = 0
    equivalence_failures: list = field(default_factory=list)
    determinant_failures: list = field(default_factory=list)
    uniqueness_failures: list = field(default_factory=list)
    shared_dihedral_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (
            self.equivalence_failures
            or self.determinant_failures
            or self.uniqueness_failures
            or self.shared_dihedral_failures
        )


def _index_two_subgroups(G: FiniteGroup) -> list[Subgroup]:
    out = []
    for lam in linear_characters(G):
        vals = [v for v in lam.values]
        if all(v == 1 or v == -1 for v in vals) and any(v == -1 for v in vals):
            kernel = [x for x in range(G.n) if lam(x) == 1]
            out.append(G.subgroup(kernel))
    return out


def prop314_verify(model: WeilModel | FiniteGroup) -> Prop314Report:
    """Invariants of ``φ1⊗φ2⊗φ3`` versus a common dihedral realization, over all triples."""
    if isinstance(model, FiniteGroup):
        model = WeilModel(model.name, model)
    G = model.group
    irr = irreducible_characters(G, model.seeds)
    phis = [c for c in irr if c.degree == 2]
    rep = Prop314Report(model.name, len(phis))
    # for each index-2 subgroup K: for each φ, the regular χ of K with Ind χ = φ
    realizations = []
    for K in _index_two_subgroups(G):
        tau = next(x for x in range(G.n) if x not in K)
        omega = GroupCharacter.from_function(G, lambda x, K=K: Cyclotomic.const(G.field_m, 1 if x in K else -1))
        table = {i: [] for i in range(len(phis))}
        for chi in linear_characters(K):
            if conjugate_character(chi, tau) == chi:
                continue
            ind = induce(K, chi)
            for i, phi in enumerate(phis):
                if ind == phi:
                    table[i].append(chi)
        realizations.append((K, omega, table))
    dihedral = {i: {id(K) for K, _, t in realizations if t[i]} for i in range(len(phis))}
    dets = [sym_alt_ad(p)[1] for p in phis]
    for trip in itertools.product(range(len(phis)), repeat=3):
        rep.triples += 1
        i, j, k = trip
        lhs = invariants_dim(phis[i] * phis[j] * phis[k]) != 0
        witnesses = []
        for K, omega, table in realizations:
            if any(
                (a * b * c).is_trivial() for a in table[i] for b in table[j] for c in table[k]
            ):
                witnesses.append(omega)
        if lhs != bool(witnesses):
            rep.equivalence_failures.append(trip)
        if not lhs:
            continue
        rep.nonzero += 1
        if len(witnesses) != 1:
            rep.uniqueness_failures.append(trip)
            continue
        if dets[i] * dets[j] * dets[k] != witnesses[0]:
            rep.determinant_failures.append(trip)
        for a, b in itertools.combinations(trip, 2):
            if len(dihedral[a] & dihedral[b]) >= 3:
                rep.shared_dihedral_failures.append(trip)
                break
    return rep


# ---------------------------------------------------------------------------
# Cyclic sextic Galois closure


@dataclass
class Lemma315Report:
    model: str
    regular: int = 0
    skipped: int = 0
    identity_failures: list = field(default_factory=list)
    latter_case_hits: list = field(default_factory=list)
    criterion_failures: list = field(default_factory=list)
    decomposition_failures: list = field(default_factory=list)
    determinant_failures: list = field(default_factory=list)
    trivial_on_k: int = 0

    @property
    def ok(self) -> bool:
        return not (
            self.identity_failures
            or self.latter_case_hits
            or self.criterion_failures
            or self.decomposition_failures
            or self.determinant_failures
        )


def _outside(H: Subgroup, inside: Subgroup) -> int:
    for x in H.embed:
        if x not in inside:
            return x
    raise ModelError(f"{H.name} does not strictly contain {inside.name}")


def _as_sub(parent: Subgroup, child: Subgroup, name: str) -> Subgroup:
    return parent.subgroup([parent.local[x] for x in child.embed], name)


def _lift_to(parent: Subgroup, child_in_parent: Subgroup, chi: GroupCharacter) -> GroupCharacter:
    # move a character of the model's subgroup onto the same subgroup viewed inside ``parent``
    return GroupCharacter.from_function(
        child_in_parent, lambda x: chi(chi.group.local[parent.embed[child_in_parent.embed[x]]])
    )


def lemma315_report(model: WeilModel) -> Lemma315Report:
    """Tensor induction of dihedral ``φ = Ind_{W_L}^{W_E} χ`` when ``Gal(L/F)`` is cyclic of order 6."""
    G = model.group
    A, HE, HK = model.sub("L"), model.sub("E"), model.sub("K")
    if HE.index != 3 or HK.index != 2 or A.index != 6 or not A.is_abelian():
        raise ModelError("model shape: need abelian L of index 6, E of index 3 and K of index 2")
    if set(HE.embed) & set(HK.embed) != set(A.embed):
        raise ModelError("model shape: E ∩ K must equal L")
    tau, sig = _outside(HE, A), _outside(HK, A)
    A_in_E, A_in_K = _as_sub(HE, A, "L"), _as_sub(HK, A, "L")
    omega_k = GroupCharacter.from_function(G, lambda x: Cyclotomic.const(G.field_m, 1 if x in HK else -1))
    rep = Lemma315Report(model.name)
    for idx, chi in enumerate(linear_characters(A)):
        chi_t = conjugate_character(chi, tau)
        if chi_t == chi:
            rep.skipped += 1
            continue
        rep.regular += 1
        phi = induced_rep(A_in_E, _lift_to(HE, A_in_E, chi))
        rho = tensor_induce(HE, phi)
        on_k = transfer_character(A_in_K, _lift_to(HK, A_in_K, chi))
        triple = chi_t * conjugate_character(chi, sig) * conjugate_character(chi, G.prod(sig, sig))
        rhs = induce(HK, on_k) + induce(A, triple)
        key = idx
        if rho != rhs:
            rep.identity_failures.append(key)
        if triple.is_trivial():
            rep.latter_case_hits.append(key)
        trivial_k = on_k.is_trivial()
        rep.trivial_on_k += trivial_k
        if (invariants_dim(rho) != 0) != trivial_k:
            rep.criterion_failures.append(key)
        if trivial_k:
            expected = induce(HK, GroupCharacter.trivial(HK)) + induce(A, chi_t * chi.dual())
            if rho != expected:
                rep.decomposition_failures.append(key)
            det_phi = sym_alt_ad(phi.character())[1]
            if transfer_character(HE, det_phi) != omega_k:
                rep.determinant_failures.append(key)
    return rep


def lemma315_check(model: WeilModel) -> bool:
    return lemma315_report(model).ok


# ---------------------------------------------------------------------------
# Dihedral closure of order 12


@dataclass
class Thm317Report:
    model: str
    regular: int = 0
    skipped: int = 0
    representations: int = 0
    nonzero: int = 0
    trivial_on_k: int = 0
    # invariants without χ∘Ver = 1, and χ∘Ver = 1 without invariants
    forward_failures: list = field(default_factory=list)
    converse_failures: list = field(default_factory=list)
    # χ∘Ver = 1 but not exactly one of φ, φ⊗ω_{E^c/E} has invariants
    twist_failures: list = field(default_factory=list)
    reduction_failures: list = field(default_factory=list)
    completeness_failures: list = field(default_factory=list)
    restriction_failures: list = field(default_factory=list)

    @property
    def forward_ok(self) -> bool:
        return not self.forward_failures

    @property
    def ok(self) -> bool:
        return not (
            self.forward_failures
            or self.converse_failures
            or self.reduction_failures
            or self.completeness_failures
            or self.restriction_failures
        )


def _order_six_lift(G, A, K, Ec) -> int:
    for g in range(G.n):
        g2, g3 = G.power(g, 2), G.power(g, 3)
        if g2 in K and g2 not in A and g3 in Ec and g3 not in A:
            return g
    raise ModelError("model shape: no lift of an order-6 rotation")


def thm317_report(model: WeilModel) -> Thm317Report:
    """Tensor induction of ``φ`` with ``φ|_{W_{E^c}} = Ind_{W_L}^{W_{E^c}} χ`` irreducible, ``Gal(L/F) ≅ D12``."""
    G = model.group
    A, HE, Ec, HK = model.sub("L"), model.sub("E"), model.sub("Ec"), model.sub("K")
    Ms = [model.sub("M1"), model.sub("M2")]
    if A.index != 12 or HE.index != 3 or Ec.index != 6 or HK.index != 4 or not A.is_abelian():
        raise ModelError("model shape: need L, E, Ec, K of index 12, 3, 6, 4")
    sigma1 = _outside(Ec, A)
    s0 = _order_six_lift(G, A, HK, Ec)
    A_in = {name: _as_sub(H, A, "L") for name, H in (("E", HE), ("Ec", Ec), ("K", HK))}
    Ec_in_E = _as_sub(HE, Ec, "Ec")
    Ms_in_E = [_as_sub(HE, M, M.name) for M in Ms]
    A_in_M = [_as_sub(M, A, "L") for M in Ms]
    rep = Thm317Report(model.name)
    for idx, chi in enumerate(linear_characters(A)):
        if conjugate_character(chi, sigma1) == chi:
            rep.skipped += 1
            continue
        rep.regular += 1
        key = idx
        ind_e = induce(A_in["E"], _lift_to(HE, A_in["E"], chi))
        reducible_m = [induce(Am, _lift_to(M, Am, chi)).norm() > 1 for M, Am in zip(Ms, A_in_M)]
        if ind_e.norm() > 1 and not any(reducible_m):
            rep.reduction_failures.append(key)
        target = induce(A_in["Ec"], _lift_to(Ec, A_in["Ec"], chi))
        phis: list[MatrixRep] = []
        chars: list[GroupCharacter] = []
        for M, Me, Am in zip(Ms, Ms_in_E, A_in_M):
            chi_m = _lift_to(M, Am, chi)
            for ext in linear_characters(M):
                if ext.restrict(Am) != chi_m:
                    continue
                ext_e = GroupCharacter.from_function(Me, lambda x, ext=ext, Me=Me: ext(M.local[HE.embed[Me.embed[x]]]))
                phi = induced_rep(Me, ext_e)
                c = phi.character()
                if not c.is_irreducible() or c in chars:
                    continue
                if c.restrict(Ec_in_E) != _lift_to_sub(target, HE, Ec_in_E):
                    continue
                chars.append(c)
                phis.append(phi)
        found = sum(chars[1:], chars[0]) if chars else None
        if (found != ind_e) if chars else ind_e.norm() > 1:
            rep.completeness_failures.append(key)
        on_k = transfer_character(A_in["K"], _lift_to(HK, A_in["K"], chi))
        trivial_k = on_k.is_trivial()
        chi_s = [conjugate_character(chi, G.power(s0, k)) for k in range(6)]
        four = (
            on_k
            + transfer_character(A_in["K"], _lift_to(HK, A_in["K"], conjugate_character(chi, sigma1)))
            + induce(A_in["K"], _lift_to(HK, A_in["K"], chi_s[0] * chi_s[1] * chi_s[2]))
            + induce(A_in["K"], _lift_to(HK, A_in["K"], chi_s[0] * chi_s[1] * chi_s[5]))
        )
        rep.trivial_on_k += trivial_k
        hits = 0
        for phi in phis:
            rep.representations += 1
            rho = tensor_induce(HE, phi)
            nz = invariants_dim(rho) != 0
            hits += nz
            if nz and not trivial_k:
                rep.forward_failures.append(key)
            if trivial_k and not nz:
                rep.converse_failures.append(key)
            if rho.restrict(HK) != four:
                rep.restriction_failures.append(key)
        rep.nonzero += hits
        if trivial_k and phis and hits != len(phis) // 2:
            rep.twist_failures.append(key)
    return rep


def _lift_to_sub(psi: GroupCharacter, parent: Subgroup, sub_in_parent: Subgroup) -> GroupCharacter:
    # psi lives on a model subgroup S; view it on S realized inside ``parent``
    S = psi.group
    return GroupCharacter.from_function(sub_in_parent, lambda x: psi(S.local[parent.embed[sub_in_parent.embed[x]]]))


def thm317_check(model: WeilModel) -> bool:
    return thm317_report(model).ok


# ---------------------------------------------------------------------------
# Supercuspidal-support unitarity predicates


@dataclass(frozen=True)
class SupercuspidalData:
    """Abstract data of ``J_α(s, ρ⊗χ2)`` (``case="a"``) or ``J_β(s, χ1⊗ρ)`` (``case="b"``).

    ``central_ok`` is the matching of ``ω_ρ`` with the GL1 character that makes
    the inducing datum live on the Levi of the adjoint group.  The remaining
    flags describe the dihedral structure of the Langlands parameter ``τ``.
    """

    case: str
    s: Fraction
    self_dual: bool | None = None
    central_ok: bool | None = None
    character_trivial: bool | None = None
    galois: bool = True
    # case a, Galois: ρ = Ind_{W_{E^c}}^{W_E}(χ0) with χ0|_S = 1, χ2∘N_{S/F} = 1
    sextic_dihedral: bool | None = None
    # case a, non-Galois: τ|_{W_{E^c}} = Ind_{W_L}(χ0) irreducible, Gal(L/F) = D12, and the three conditions
    d12_dihedral: bool | None = None
    d12_conditions: tuple | None = None
    # case b: Im(τ) ≅ S3 cut out by the non-Galois E
    image_s3: bool | None = None


def thm37_predicate(data: SupercuspidalData) -> dict:
    """Unitarizability of Langlands quotients with supercuspidal GL2 support."""
    s = Fraction(data.s)
    if s <= 0:
        raise ValueError("s must be positive")
    for name in ("self_dual", "central_ok", "character_trivial"):
        if getattr(data, name) is None:
            raise IncompleteData(f"missing {name}")
    out = {"unitarizable": False, "boundary": False, "clause": ""}
    if not data.central_ok:
        out["clause"] = "central character condition fails"
        return out
    if not data.self_dual:
        out["clause"] = "ρ is not self-dual"
        return out
    if data.character_trivial and s <= Fraction(1, 2):
        return {"unitarizable": True, "boundary": s == Fraction(1, 2), "clause": f"{data.case}: trivial character, s ≤ 1/2"}
    if data.case == "a":
        if data.galois:
            if data.sextic_dihedral is None:
                raise IncompleteData("missing sextic_dihedral")
            if data.sextic_dihedral and s <= 1:
                return {"unitarizable": True, "boundary": s == 1, "clause": "a: dihedral from the sextic, s ≤ 1"}
        else:
            if data.d12_dihedral is None:
                raise IncompleteData("missing d12_dihedral")
            conds = data.d12_conditions
            if data.d12_dihedral:
                if conds is None or len(conds) != 3:
                    raise IncompleteData("d12_conditions needs three flags")
                if all(conds) and s <= 1:
                    return {"unitarizable": True, "boundary": s == 1, "clause": "a: D12 dihedral family, s ≤ 1"}
    elif data.case == "b":
        if data.image_s3 is None:
            raise IncompleteData("missing image_s3")
        if data.image_s3 and not data.galois and s <= 1:
            return {"unitarizable": True, "boundary": s == 1, "clause": "b: Im(τ) ≅ S3, s ≤ 1"}
    else:
        raise ValueError("case must be 'a' or 'b'")
    out["clause"] = "no clause applies"
    return out
