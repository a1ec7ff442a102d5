import cmath
from fractions import Fraction
from functools import lru_cache

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from triality import weiloracle as wo
from triality.weiloracle import (
    Cyclotomic,
    FiniteGroup,
    GroupCharacter,
    IncompleteData,
    ModelError,
    SupercuspidalData,
    commutator_subgroup,
    cyclotomic_polynomial,
    induce,
    induced_rep,
    invariants_dim,
    irreducible_characters,
    linear_characters,
    sym_alt_ad,
    tensor_induce,
    tensor_induced_rep,
    thm37_predicate,
    transfer,
    transfer_character,
)

MODULI = st.sampled_from([1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 13, 21, 39])


@st.composite
def cyclotomics(draw, m=None):
    m = m or draw(MODULI)
    terms = draw(st.dictionaries(st.integers(0, m - 1), st.integers(-5, 5), max_size=4))
    return Cyclotomic.from_exponents(m, terms), m, terms


def embed(m, terms):
    return sum((c * cmath.exp(2j * cmath.pi * k / m) for k, c in terms.items()), 0j)


# ---------------------------------------------------------------------------
# cyclotomic arithmetic


@pytest.mark.parametrize("m", [1, 2, 3, 4, 6, 7, 8, 9, 12, 15, 21, 39])
def test_cyclotomic_polynomial_matches_sympy(m):
    x = sp.Symbol("x")
    expected = sp.Poly(sp.cyclotomic_poly(m, x), x).all_coeffs()[::-1]
    assert list(cyclotomic_polynomial(m)) == [int(c) for c in expected]


@given(cyclotomics())
def test_embedding_is_faithful(z):
    c, m, terms = z
    assert abs(complex(c) - embed(m, terms)) < 1e-9
    assert (abs(embed(m, terms)) < 1e-9) == c.is_zero()


@given(MODULI.flatmap(lambda m: st.tuples(cyclotomics(m), cyclotomics(m))))
def test_ring_operations(pair):
    (a, m, ta), (b, _, tb) = pair
    za, zb = embed(m, ta), embed(m, tb)
    assert abs(complex(a + b) - (za + zb)) < 1e-8
    assert abs(complex(a * b) - (za * zb)) < 1e-8
    assert abs(complex(a - b) - (za - zb)) < 1e-8
    assert a * b == b * a
    assert (a + b) * a == a * a + b * a


@given(cyclotomics(), cyclotomics())
def test_mixed_moduli_coerce(x, y):
    (a, m, ta), (b, n, tb) = x, y
    assert abs(complex(a * b) - embed(m, ta) * embed(n, tb)) < 1e-8


@given(cyclotomics())
def test_conjugation(z):
    c, m, terms = z
    assert abs(complex(c.conjugate()) - embed(m, terms).conjugate()) < 1e-9
    n = c * c.conjugate()
    assert abs(complex(n).imag) < 1e-9


@pytest.mark.parametrize("m", [3, 5, 12, 13])
def test_roots_of_unity(m):
    z = Cyclotomic.root(m, 1)
    p = Cyclotomic.const(m, 1)
    for _ in range(m):
        p = p * z
    assert p == 1
    total = sum((Cyclotomic.root(m, k) for k in range(m)), Cyclotomic.const(m, 0))
    assert total.is_zero() or m == 1


def test_rational_conversion():
    assert Cyclotomic.const(7, Fraction(3, 2)).to_fraction() == Fraction(3, 2)
    with pytest.raises(ValueError):
        Cyclotomic.root(7, 1).to_fraction()
    assert (Cyclotomic.root(4, 1) * Cyclotomic.root(4, 1)) == -1


# ---------------------------------------------------------------------------
# groups and characters

MODEL_NAMES = ["d8", "d12", "q8", "sl23", "f42", "f42xc2"]


@pytest.fixture(scope="module")
def irreducibles():
    out = {}
    for name in MODEL_NAMES:
        m = wo.builtin_model(name)
        out[name] = (m, irreducible_characters(m.group, m.seeds))
    return out


@pytest.mark.parametrize("name", MODEL_NAMES)
def test_character_tables_are_orthonormal(irreducibles, name):
    model, chars = irreducibles[name]
    G = model.group
    assert len(chars) == len(G.classes)
    assert sum(c.degree**2 for c in chars) == G.n
    for i, a in enumerate(chars):
        for j, b in enumerate(chars):
            assert a.inner(b) == (1 if i == j else 0)


@pytest.mark.parametrize(
    "name, degrees",
    [("d8", [1, 1, 1, 1, 2]), ("q8", [1, 1, 1, 1, 2]), ("d12", [1, 1, 1, 1, 2, 2]), ("sl23", [1, 1, 1, 2, 2, 2, 3]), ("f42", [1] * 6 + [6])],
)
def test_known_degree_patterns(irreducibles, name, degrees):
    assert sorted(c.degree for c in irreducibles[name][1]) == degrees


@lru_cache(maxsize=None)
def _subgroups(name: str):
    """Every subgroup generated by at most two elements."""
    G = wo.builtin_model(name).group
    subs = {G.generated([x, y]) for x in range(G.n) for y in range(x, G.n)}
    return [G.subgroup(sorted(S)) for S in sorted(subs, key=sorted)]


@settings(max_examples=40)
@given(st.sampled_from(["d8", "d12", "q8", "f42"]), st.randoms(use_true_random=False))
def test_frobenius_reciprocity(name, rnd):
    model = wo.builtin_model(name)
    G = model.group
    H = rnd.choice(_subgroups(name))
    chi = rnd.choice(linear_characters(H))
    psi = rnd.choice(irreducible_characters(G, model.seeds))
    assert induce(H, chi).inner(psi) == chi.inner(psi.restrict(H))
    assert induce(H, chi).degree == H.index


@settings(max_examples=30)
@given(st.sampled_from(["d8", "d12", "f42", "f42xc2"]), st.randoms(use_true_random=False))
def test_transfer_independent_of_transversal(name, rnd):
    model = wo.builtin_model(name)
    G = model.group
    H = rnd.choice([S for S in _subgroups(name) if S.n < G.n])
    comm = commutator_subgroup(H)
    base = H.transversal()
    # re-pick each representative inside its coset
    other = [G.table[t][H.embed[rnd.randrange(H.n)]] for t in base]
    for g in range(G.n):
        a, b = transfer(H, g, base), transfer(H, g, other)
        assert H.local[G.prod(a, G.inverse[b])] in comm


@settings(max_examples=20)
@given(st.sampled_from(["d8", "d12", "f42"]), st.randoms(use_true_random=False))
def test_transfer_is_a_homomorphism(name, rnd):
    model = wo.builtin_model(name)
    G = model.group
    H = rnd.choice([S for S in _subgroups(name) if S.n < G.n])
    for chi in linear_characters(H):
        v = transfer_character(H, chi)
        for g in range(G.n):
            for x in range(G.n):
                assert v(G.mul(g, x)) == v(g) * v(x)


@settings(max_examples=8)
@given(st.sampled_from(["d8", "d12", "q8", "f42"]), st.randoms(use_true_random=False))
def test_projector_rank_equals_invariant_multiplicity(name, rnd):
    model = wo.builtin_model(name)
    G = model.group
    H = rnd.choice([S for S in _subgroups(name) if S.n < G.n])
    chi = rnd.choice(linear_characters(H))
    rep = induced_rep(H, chi)
    assert rep.check()
    assert rep.character() == induce(H, chi)
    assert invariants_dim(rep) == (1 if chi.is_trivial() else 0)


@pytest.mark.parametrize("name", ["d12", "sl23", "f42", "d12c13"])
def test_tensor_induction_matrix_vs_formula(name):
    compared, bad = wo.tensor_agreement(wo.builtin_model(name))
    assert compared > 0 and bad == 0


@pytest.mark.parametrize("name", ["sl23", "f42", "f42xc2"])
def test_tensor_induction_of_linear_characters(name):
    model = wo.builtin_model(name)
    for H in wo.index_three_subgroups(model):
        for chi in linear_characters(H):
            rep = wo.MatrixRep(H, {x: ((chi(x),),) for x in range(H.n)})
            t = tensor_induced_rep(H, rep)
            assert t.degree == 1 and t.check()
            assert t.character() == tensor_induce(H, rep, "formula")
            # a one-dimensional tensor induction is the transfer character
            assert t.character() == transfer_character(H, chi)


def test_tensor_induction_degree_is_cubed():
    model = wo.builtin_model("d12")
    built = 0
    for H in wo.index_three_subgroups(model):
        for K in (S for S in _subgroups("d12") if S.n * 2 == H.n and set(S.embed) <= set(H.embed)):
            sub = H.subgroup([H.local[x] for x in K.embed])
            for lam in linear_characters(sub):
                rep = induced_rep(sub, lam)
                t = tensor_induced_rep(H, rep)
                assert t.degree == 8 and t.check()
                assert t.character() == tensor_induce(H, rep, "formula")
                built += 1
    assert built > 0


@pytest.mark.parametrize("name", ["q8", "d8", "sl23"])
def test_sym_alt_ad(irreducibles, name):
    _, chars = irreducibles[name]
    for phi in (c for c in chars if c.degree == 2):
        sym, alt, ad = sym_alt_ad(phi)
        assert sym + alt == phi * phi
        assert sym.degree == 3 and alt.degree == 1
        assert alt.is_irreducible()
        assert ad == sym * alt.dual() and ad.degree == 3
        # the determinant: alt(g) = (φ(g)^2 - φ(g^2)) / 2 is multiplicative
        G = phi.group
        assert all(alt(G.mul(x, y)) == alt(x) * alt(y) for x in range(G.n) for y in range(G.n))


def test_sym_alt_ad_requires_degree_two():
    G = wo.builtin_model("d8").group
    with pytest.raises(ValueError):
        sym_alt_ad(GroupCharacter.trivial(G))


# ---------------------------------------------------------------------------
# model files


@pytest.mark.parametrize("name", MODEL_NAMES)
def test_model_text_round_trip(name):
    m = wo.builtin_model(name)
    again = wo.parse_model(m.to_text(), name)
    assert again.group.table == m.group.table
    assert {k: v.embed for k, v in again.subgroups.items()} == {k: v.embed for k, v in m.subgroups.items()}


@pytest.mark.parametrize(
    "text, match",
    [
        ("", "empty"),
        ("order 2\n0 1\n1 0", "header"),
        ("order 2 exponent 3\n0 1\n1 0", "exponent"),
        ("order 2 exponent 2\n0 1", "truncated"),
        ("order 2 exponent 2\n0 1\n1 x", "number"),
        ("order 3 exponent 3\n0 1 2\n1 2 0\n2 0 1\nsubgroup H : 0 1", "closed"),
        ("order 2 exponent 2\n0 1\n1 0\nbogus", "unexpected"),
    ],
)
def test_bad_model_files(text, match):
    with pytest.raises(ModelError, match=match):
        wo.parse_model(text)


def test_non_group_tables_rejected():
    with pytest.raises(ModelError):
        FiniteGroup([[0, 1, 2], [1, 0, 0], [2, 0, 1]])


def test_load_model_from_file(tmp_path):
    p = tmp_path / "c3.txt"
    p.write_text("# cyclic of order 3\norder 3 exponent 3\n0 1 2\n1 2 0\n2 0 1\nsubgroup T : 0\n")
    m = wo.load_model(str(p))
    assert m.group.n == 3 and m.sub("T").n == 1
    with pytest.raises(ModelError):
        m.sub("nope")
    with pytest.raises(ModelError):
        wo.load_model(str(tmp_path / "missing.txt"))


# ---------------------------------------------------------------------------
# triple products and the dihedral criteria


@pytest.mark.parametrize("name", ["d8", "q8"])
def test_triple_product_criterion(name):
    rep = wo.prop314_verify(wo.builtin_model(name))
    assert rep.ok
    assert rep.triples == rep.two_dim**3


def test_f42_regular_characters():
    rep = wo.lemma315_report(wo.builtin_model("f42"))
    assert rep.ok and rep.regular == 6


def test_f42xc2_tests_both_directions():
    rep = wo.lemma315_report(wo.builtin_model("f42xc2"))
    assert rep.ok and rep.regular == 12
    assert 0 < rep.trivial_on_k < rep.regular


def test_d12c13_regular_characters():
    rep = wo.thm317_report(wo.builtin_model("d12c13"))
    assert rep.ok and rep.regular == 12
    assert rep.nonzero == 0 and rep.trivial_on_k == 0


@pytest.fixture(scope="module")
def d12c39():
    return wo.thm317_report(wo.builtin_model("d12c39"))


def test_larger_model_forward_direction(d12c39):
    assert d12c39.forward_ok
    assert not d12c39.reduction_failures and not d12c39.restriction_failures
    assert not d12c39.completeness_failures and not d12c39.twist_failures


def test_larger_model_converse_fails_for_one_of_each_twist_pair(d12c39):
    # each χ trivial on K gives two φ differing by a quadratic twist; exactly one has invariants
    assert d12c39.trivial_on_k == 2
    assert d12c39.nonzero == d12c39.trivial_on_k
    assert len(d12c39.converse_failures) == d12c39.trivial_on_k
    assert not d12c39.ok


# ---------------------------------------------------------------------------
# supercuspidal predicate


def _data(**kw):
    base = dict(case="a", s=Fraction(1, 3), self_dual=True, central_ok=True, character_trivial=False, sextic_dihedral=False)
    base.update(kw)
    return SupercuspidalData(**base)


@pytest.mark.parametrize(
    "kw, unit, boundary",
    [
        (dict(character_trivial=True), True, False),
        (dict(character_trivial=True, s=Fraction(1, 2)), True, True),
        (dict(character_trivial=True, s=Fraction(3, 4)), False, False),
        (dict(sextic_dihedral=True, s=1), True, True),
        (dict(sextic_dihedral=True, s=Fraction(5, 4)), False, False),
        (dict(self_dual=False), False, False),
        (dict(central_ok=False, character_trivial=True), False, False),
        (dict(case="b", image_s3=True, galois=False, s=1), True, True),
        (dict(case="b", image_s3=True, galois=True, s=1), False, False),
        (dict(galois=False, d12_dihedral=True, d12_conditions=(True, True, True), s=Fraction(9, 10)), True, False),
        (dict(galois=False, d12_dihedral=True, d12_conditions=(True, False, True), s=Fraction(9, 10)), False, False),
    ],
)
def test_supercuspidal_predicate(kw, unit, boundary):
    out = thm37_predicate(_data(**kw))
    assert out["unitarizable"] is unit and out["boundary"] is boundary


def test_supercuspidal_predicate_incomplete():
    with pytest.raises(IncompleteData):
        thm37_predicate(_data(self_dual=None))
    with pytest.raises(IncompleteData):
        thm37_predicate(_data(sextic_dihedral=None))
    with pytest.raises(IncompleteData):
        thm37_predicate(_data(case="b"))
    with pytest.raises(ValueError):
        thm37_predicate(_data(s=0))
