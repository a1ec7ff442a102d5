"""Root data checked against a Euclidean model of G2 built with sympy."""

from collections import Counter
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from triality.rootdata import (
    COROOTS,
    IDENTITY,
    LONG,
    W_ALPHA,
    W_BETA,
    coroot,
    dominant_representative,
    element,
    in_chamber,
    lam,
    orbit_formula,
    orbit_multiset,
    reflection,
    weyl_group,
)

# alpha short, beta long, angle 150 degrees
ALPHA = sp.Matrix([1, 0])
BETA = sp.Matrix([sp.Rational(-3, 2), sp.sqrt(3) / 2])
BASIS = sp.Matrix.hstack(3 * ALPHA, BETA)  # (s1, s2) -> 3 s1 alpha + s2 beta

rationals = st.fractions(min_value=-8, max_value=8, max_denominator=12)


def euclid(x):
    return BASIS * sp.Matrix([sp.Rational(x[0].numerator, x[0].denominator), sp.Rational(x[1].numerator, x[1].denominator)])


def back(v):
    c = BASIS.solve(v)
    return tuple(Fraction(int(sp.fraction(sp.nsimplify(t))[0]), int(sp.fraction(sp.nsimplify(t))[1])) for t in c)


def euclid_reflection(root):
    return sp.eye(2) - 2 * root * root.T / (root.T * root)[0]


def euclid_group():
    gens = [euclid_reflection(ALPHA), euclid_reflection(BETA)]
    elems = [sp.eye(2)]
    frontier = list(elems)
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                p = sp.simplify(g * m)
                if all(sp.simplify(p - e) != sp.zeros(2) for e in elems):
                    elems.append(p)
                    nxt.append(p)
        frontier = nxt
    return elems


EUCLID_W = euclid_group()


def positive_roots():
    a, b = ALPHA, BETA
    return {"a": a, "b": b, "a+b": a + b, "2a+b": 2 * a + b, "3a+b": 3 * a + b, "3a+2b": 3 * a + 2 * b}


def test_group_order_is_twelve():
    assert len(EUCLID_W) == 12
    assert len(weyl_group()) == 12
    assert len({w.matrix for w in weyl_group()}) == 12


def test_simple_reflections_match_euclidean_model():
    x = lam(Fraction(2, 7), Fraction(-5, 3))
    for w, root in ((W_ALPHA, ALPHA), (W_BETA, BETA)):
        assert w(x) == back(euclid_reflection(root) * euclid(x))


def test_word_convention_right_factor_acts_first():
    x = lam(1, 3)
    assert element("ab")(x) == W_ALPHA(W_BETA(x))


def test_long_element_is_minus_one():
    assert LONG(lam(3, 5)) == lam(-3, -5)
    assert IDENTITY(lam(3, 5)) == lam(3, 5)


def test_coroot_forms_are_positive_multiples_of_true_pairings():
    x = lam(Fraction(5, 2), Fraction(7, 3))
    v = euclid(x)
    for name, root in positive_roots().items():
        true = sp.nsimplify((2 * root.T * v / (root.T * root)[0])[0])
        mine = coroot(name)(x)
        ratio = sp.nsimplify(true / sp.Rational(mine.numerator, mine.denominator))
        assert ratio in (1, 3), name


def test_reflections_fix_their_hyperplane():
    for g in COROOTS:
        r = reflection(g.name)
        # a point on g = 0 is fixed; pick one by solving c1 s1 + c2 s2 = 0
        x = lam(g.c2, -g.c1)
        assert r(x) == x
        assert r(r(lam(1, 2))) == lam(1, 2)


@settings(max_examples=20)
@given(rationals, rationals)
def test_orbit_matches_euclidean_orbit(s1, s2):
    x = lam(s1, s2)
    mine = Counter(orbit_multiset(x))
    theirs = Counter(back(m * euclid(x)) for m in EUCLID_W)
    assert mine == theirs


@given(rationals, rationals)
def test_orbit_stabilizer(s1, s2):
    x = lam(s1, s2)
    counts = Counter(orbit_multiset(x))
    assert all(k * len(counts) == 12 for k in counts.values())
    assert set(counts) == set(orbit_formula(x))


@given(rationals, rationals)
def test_dominant_representative(s1, s2):
    y, w = dominant_representative(lam(s1, s2))
    assert in_chamber(y)
    assert w(lam(s1, s2)) == y


@pytest.mark.parametrize(
    "x, size",
    [((0, 0), 1), ((3, 5), 12), ((1, 2), 6), ((1, 1), 6), ((2, 3), 6), ((1, Fraction(3, 2)), 6)],
)
def test_orbit_sizes(x, size):
    assert len(set(orbit_multiset(lam(*x)))) == size
