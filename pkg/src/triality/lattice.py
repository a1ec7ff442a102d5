"""Integer row lattices: Hermite normal form, canonical coset reps, kernels."""

from __future__ import annotations

from fractions import Fraction
from math import lcm


def _echelon(rows, ncols, track=False):
    """Row-reduce over Z. Returns (echelon rows, transforms, pivot columns).

    With ``track`` each output row carries the integer combination of the
    input rows producing it; zero rows are kept (they span the kernel).
    """
    rows = [list(r) for r in rows]
    trans = [[int(i == j) for j in range(len(rows))] for i in range(len(rows))] if track else None
    pivots = []
    top = 0
    for col in range(ncols):
        while True:
            nz = [i for i in range(top, len(rows)) if rows[i][col] != 0]
            if not nz:
                break
            i = min(nz, key=lambda k: abs(rows[k][col]))
            rows[top], rows[i] = rows[i], rows[top]
            if track:
                trans[top], trans[i] = trans[i], trans[top]
            done = True
            for k in range(top + 1, len(rows)):
                if rows[k][col]:
                    f = rows[k][col] // rows[top][col]
                    rows[k] = [x - f * y for x, y in zip(rows[k], rows[top])]
                    if track:
                        trans[k] = [x - f * y for x, y in zip(trans[k], trans[top])]
                    if rows[k][col]:
                        done = False
            if done:
                break
        if top < len(rows) and rows[top][col] != 0:
            if rows[top][col] < 0:
                rows[top] = [-x for x in rows[top]]
                if track:
                    trans[top] = [-x for x in trans[top]]
            p = rows[top][col]
            for k in range(top):
                f = rows[k][col] // p
                if f:
                    rows[k] = [x - f * y for x, y in zip(rows[k], rows[top])]
                    if track:
                        trans[k] = [x - f * y for x, y in zip(trans[k], trans[top])]
            pivots.append(col)
            top += 1
    return rows, trans, pivots


class Lattice:
    """Subgroup of Z^n spanned by integer rows, kept in Hermite normal form."""

    def __init__(self, n: int, rows=()):
        self.n = n
        ech, _, piv = _echelon([tuple(r) for r in rows], n)
        self.basis = [tuple(r) for r in ech[: len(piv)]]
        self.pivots = piv

    def reduce(self, v) -> tuple:
        """Canonical representative of ``v`` modulo the lattice."""
        v = list(v)
        for row, col in zip(self.basis, self.pivots):
            f = v[col] // row[col]
            if f:
                v = [x - f * y for x, y in zip(v, row)]
        return tuple(v)

    def reduce_balanced(self, v) -> tuple:
        """Like :meth:`reduce` but with pivot entries in ``(-p/2, p/2]``."""
        v = list(v)
        for row, col in zip(self.basis, self.pivots):
            p = row[col]
            f = (v[col] + (p - 1) // 2) // p
            if f:
                v = [x - f * y for x, y in zip(v, row)]
        return tuple(v)

    def contains(self, v) -> bool:
        return not any(self.reduce(v))

    def order(self, v):
        """Order of ``v`` in Z^n / L, or ``None`` when infinite."""
        # solve c * basis = v over Q by forward substitution on pivot columns
        rem = [Fraction(x) for x in v]
        coeffs = []
        for row, col in zip(self.basis, self.pivots):
            c = rem[col] / row[col]
            coeffs.append(c)
            rem = [x - c * y for x, y in zip(rem, row)]
        if any(rem):
            return None
        return lcm(1, *(c.denominator for c in coeffs))

    def __add__(self, other: "Lattice") -> "Lattice":
        return Lattice(self.n, self.basis + other.basis)

    def __eq__(self, other):
        return isinstance(other, Lattice) and (self.n, self.basis) == (other.n, other.basis)

    def __hash__(self):
        return hash((self.n, tuple(self.basis)))


def integer_kernel(rows, ncols):
    """Z-basis of ``{c : sum c_i rows_i = 0}``."""
    ech, trans, piv = _echelon(rows, ncols, track=True)
    return [tuple(t) for r, t in zip(ech, trans) if not any(r)]
