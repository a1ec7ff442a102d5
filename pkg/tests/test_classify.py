import json
from collections import Counter
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from triality.cases import CASES, case_by_key
from triality.charlattice import ScenarioError, TorusCharacter, parse_scenario
from triality.classify import (
    NON_TEMPERED,
    classify,
    classify_case,
    gps_reducibility,
    normalize,
    rank1_set,
    special_exponents,
)
from triality.grothendieck import r0_of_full_ps
from triality.rootdata import in_chamber, lam

GOLDEN = Path(__file__).parent / "golden"


def T(s1, s2, a=None, b=None, scn=None):
    return TorusCharacter.make(s1, s2, a, b, scn) if scn else TorusCharacter.make(s1, s2, a, b)


@pytest.mark.parametrize("entry", CASES, ids=lambda e: e.key)
def test_database_cases_are_consistent(entry):
    rep = classify_case(entry.key)
    assert rep.problems() == []
    assert rep.total_jacquet() == r0_of_full_ps(rep.chi)


def test_case_1_2_1_1_totals():
    rep = classify_case("1,2,1,1")
    total = rep.total_jacquet()
    expected = Counter({T(*p): 2 for p in ((1, 2), (1, 1), (0, 1), (0, -1), (-1, -1), (-1, -2))})
    assert dict(total.terms) == dict(expected)


def test_unknown_case_key():
    with pytest.raises(KeyError):
        case_by_key("9,9,9,9")


# pairings (α, β, α+β, 2α+β, 3α+β, 3α+2β) = (2s1-s2, -3s1+2s2, -s1+s2, s1, 3s1-s2, s2)
@pytest.mark.parametrize(
    "x, expected",
    [
        ((3, 5), ("a", "b")),  # 1, 1, 2, 3, 4, 5
        ((1, 2), ("b", "a+b", "2a+b", "3a+b")),  # 0, 1, 1, 1, 1, 2
        ((2, 3), ("a", "a+b")),  # 1, 0, 1, 2, 3, 3
        ((Fraction(1, 2), 1), ("3a+2b",)),  # 0, 1/2, 1/2, 1/2, 1/2, 1
        ((Fraction(11, 3), 6), ("b",)),  # 4/3, 1, 7/3, 11/3, 5, 6
        ((4, 7), ("a",)),  # 1, 2, 3, 4, 5, 7
    ],
)
def test_rank1_sets_trivial_character(x, expected):
    assert tuple(rank1_set(T(*x))) == expected


def test_rank1_set_with_discrete_conditions():
    scn = parse_scenario("atom chi1 domain E order 3\nrel res(chi1) = 0")
    assert tuple(rank1_set(T(Fraction(2, 3), 1, "chi1", None, scn))) == ("3a+b", "3a+2b")
    scn2 = parse_scenario("atom chi2 domain F order 3\nrel nm(chi2) = 0")
    assert tuple(rank1_set(T(2, 3, None, "chi2", scn2))) == ("a", "a+b")


def test_rank1_set_requires_dominant_input():
    with pytest.raises(ValueError):
        rank1_set(T(5, 7))


@given(st.fractions(-6, 6, max_denominator=6), st.fractions(-6, 6, max_denominator=6))
def test_normalize_lands_in_chamber(s1, s2):
    chi, w = normalize(T(s1, s2))
    assert in_chamber(chi.lam)
    assert w(lam(s1, s2)) == chi.lam


@given(st.fractions(-6, 6, max_denominator=6), st.fractions(-6, 6, max_denominator=6))
def test_classify_verdicts(s1, s2):
    rep = classify(T(s1, s2))
    assert rep.verdict in ("irreducible", "reducible", "unclassified")
    if rep.verdict == "irreducible":
        assert len(rep.rset) == 0
    if rep.verdict == "reducible":
        assert rep.length and rep.length >= 2
        assert rep.problems() == []
        assert rep.total_jacquet() == r0_of_full_ps(rep.chi)


def test_weyl_conjugates_classify_alike():
    a, b = classify(T(1, 1)), classify(T(1, 2))
    assert a.case == b.case and a.length == b.length


def test_unclassified_character_is_reported():
    scn = parse_scenario("atom chi1 domain E order 2\nrel res(chi1) = 0")
    rep = classify(T(1, 2, "chi1", None, scn))
    assert rep.verdict == "unclassified"


def test_irreducible_generic_point():
    rep = classify(T(Fraction(1, 7), Fraction(3, 11)))
    assert rep.verdict == "irreducible"
    assert rep.length == 1


def test_non_galois_drops_norm_families():
    text = "atom chi2 domain F order 3\nrel nm(chi2) = 0"
    assert classify(T(2, 3, None, "chi2", parse_scenario(text))).case.startswith("(2,3,1,χ2;χ2∘N=1")
    with pytest.raises(ScenarioError):
        classify_case("2,3,1,chi2;norm", galois=False)
    with pytest.raises(ScenarioError):
        classify_case("1,2,1,chi2;norm", galois=False)
    for e in CASES:
        if e.key not in ("2,3,1,chi2;norm", "1,2,1,chi2;norm"):
            a, b = classify_case(e.key), classify_case(e.key, galois=False)
            assert a.render() == b.render()


@pytest.mark.parametrize(
    "gamma, s, expected",
    [
        ("a", Fraction(5, 2), True),
        ("b", Fraction(9, 2), True),
        ("a", Fraction(1, 2), True),
        ("b", Fraction(3, 2), True),
        ("a", Fraction(3, 2), False),
        ("b", Fraction(5, 2), False),
        ("a", Fraction(1), False),
    ],
)
def test_gps_reducibility_trivial(gamma, s, expected):
    assert gps_reducibility(gamma, s) is expected


def test_gps_reducibility_norm_trivial_character():
    scn = parse_scenario("atom chi2 domain F order 3\nrel nm(chi2) = 0")
    assert gps_reducibility("a", Fraction(3, 2), "1", "chi2", scn)
    assert not gps_reducibility("a", Fraction(5, 2), "1", "chi2", scn)


def test_special_exponents():
    ex = special_exponents()
    assert {lam(3, 5), lam(1, 2), lam(2, 3)} <= ex
    assert len(ex) < 20


@pytest.mark.parametrize("stem, x", [("3_5_1_1", (3, 5)), ("1_2_1_1", (1, 2))])
def test_golden_reports(stem, x):
    rep = classify(T(*x))
    assert rep.render() == (GOLDEN / f"report_{stem}.txt").read_text()
    assert rep.to_json() + "\n" == (GOLDEN / f"report_{stem}.json").read_text()


@pytest.mark.parametrize("entry", CASES, ids=lambda e: e.key)
def test_json_round_trip(entry):
    rep = classify_case(entry.key)
    data = json.loads(rep.to_json())
    assert json.loads(json.dumps(data)) == data
    assert data["case"] == rep.case
    assert len(data["constituents"]) == len(rep.constituents)


def test_langlands_quotients_are_non_tempered():
    for e in CASES:
        for c in classify_case(e.key).constituents:
            if c.datum is not None and c.datum.parabolic != "G":
                assert c.temperedness == NON_TEMPERED, (e.key, c.label)
