"""Database of the explicitly worked principal-series decompositions.

Each entry fixes a dominant exponent, a hypothesis predicate on the discrete
data ``(a, b) = (χ1, χ2)`` and the Jacquet modules of the constituents.

Jacquet lists use the notation ``k(s1,s2,χ1,χ2)``.  An entry written
``-k(x)`` stands for ``k`` copies of ``w_0 x = (-s1,-s2,χ1^{-1},χ2^{-1})``;
this is the only reading under which every list sums to ``r_∅(I(χ))``.
An entry ``(s1,s2)`` without discrete data is completed from the orbit
of the base character (it must be unique there).
"""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["ConstituentSpec", "CaseEntry", "CASES", "case_by_key"]


@dataclass(frozen=True)
class ConstituentSpec:
    key: str
    label: str
    role: str  # subrepresentation | subquotient | Langlands quotient | irreducible
    jacquet: str
    multiplicity: int = 1
    reconstructed: bool = False
    claimed_square_integrable: bool | None = None


@dataclass(frozen=True)
class CaseEntry:
    key: str
    title: str
    lam: tuple
    scenario: str
    base: tuple  # (a, b) expressions of the representative character
    predicate: str
    length: int
    multiplicity: int
    constituents: tuple = ()
    alias_of: str | None = None
    singular: bool = False
    notes: tuple = field(default_factory=tuple)


_NORM3 = "atom chi2 domain F order 3\nrel nm(chi2) = 0\n"
_QUAD2 = "atom chi2 domain F order 2\n"
_RES1 = "atom chi1 domain E order inf\nrel res(chi1) = 0\n"

CASES: tuple[CaseEntry, ...] = (
    CaseEntry(
        key="3,5,1,1",
        title="(3,5,1,1)",
        lam=(3, 5),
        scenario="",
        base=("1", "1"),
        predicate="a = 0, b = 0",
        length=4,
        multiplicity=1,
        constituents=(
            ConstituentSpec("St", "St_G", "subrepresentation", "(3,5)",
                            reconstructed=True, claimed_square_integrable=True),
            ConstituentSpec("Jb", "J_β(9/2,1⊗δ(1))", "subquotient",
                            "(2,5), (2,1), (-1,1), (-1,-4), (-3,-4)", reconstructed=True),
            ConstituentSpec("Ja", "J_α(5/2,δ(1)⊗1)", "subquotient",
                            "(3,4), (1,4), (1,-1), (-2,-1), (-2,-5)"),
            ConstituentSpec("1", "1_G", "Langlands quotient", "(-3,-5)",
                            claimed_square_integrable=False),
        ),
        notes=(
            "St_G list restored from conservation",
            "J_β list carries (-1,1) in place of a second (1,-1); fixed by r_∅(I_β(St)) ⊇ St_G + J_β",
        ),
    ),
    CaseEntry(
        key="1,2,1,1",
        title="(1,2,1,1;⟨w_α⟩)",
        lam=(1, 2),
        scenario="",
        base=("1", "1"),
        predicate="a = 0, b = 0",
        length=6,
        multiplicity=2,
        singular=True,
        constituents=(
            ConstituentSpec("pi", "π(1)", "subrepresentation", "2(1,2), (1,1)",
                            reconstructed=True, claimed_square_integrable=True),
            ConstituentSpec("pi'", "π(1)′", "subrepresentation", "(1,1)",
                            claimed_square_integrable=True),
            ConstituentSpec("Ja", "J_α(1/2,δ(1)⊗1)", "subquotient", "(0,1), (0,-1)",
                            multiplicity=2),
            ConstituentSpec("Jb", "J_β(3/2,1⊗δ(1))", "subquotient", "(-1,-1)"),
            ConstituentSpec("LQ", "J_α(1,I^α(1⊗1)⊗1)", "Langlands quotient", "2(-1,-2), (-1,-1)",
                            claimed_square_integrable=False),
        ),
        notes=("π(1) list restored from conservation",),
    ),
    CaseEntry(
        key="1,2,1,chi2;norm",
        title="(1,2,1,χ2;⟨w_α⟩;χ2≠1 & χ2∘N=1)",
        lam=(1, 2),
        scenario=_NORM3,
        base=("1", "chi2"),
        predicate="a = 0, nm(b) = 0, b != 0",
        length=2,
        multiplicity=1,
        singular=True,
        constituents=(
            ConstituentSpec("sub", "I_α(1/2,δ(1)⊗χ2)", "subrepresentation",
                            "2(1,2,1,chi2), 2(1,1,1,-chi2), (0,1,1,2*chi2), (0,-1,1,chi2)",
                            claimed_square_integrable=True),
            ConstituentSpec("LQ", "J_α(1,I^α(1⊗1)⊗χ2^{-1})", "Langlands quotient",
                            "-2(1,2,1,chi2), -2(1,1,1,-chi2), (0,1,1,2*chi2), (0,-1,1,chi2)",
                            claimed_square_integrable=False),
        ),
    ),
    CaseEntry(
        key="1,2,chi1,chi2;quad",
        title="(1,2,χ1,χ2;χ2≠1 & χ1²=1, χ1=χ2)",
        lam=(1, 2),
        scenario=_QUAD2,
        base=("nm(chi2)", "chi2"),
        predicate="a = nm(b), 2*b = 0, b != 0",
        length=4,
        multiplicity=1,
        alias_of="1,2,1,chi2;quad",
    ),
    CaseEntry(
        key="1,2,1,chi2;quad",
        title="(1,2,1,χ2;χ2≠1 & χ2²=1)",
        lam=(1, 2),
        scenario=_QUAD2,
        base=("1", "chi2"),
        predicate="a = 0, 2*b = 0, b != 0",
        length=4,
        multiplicity=1,
        constituents=(
            ConstituentSpec("pi", "π(χ2)", "subrepresentation",
                            "(1,2,1,chi2), (1,2,nm(chi2),chi2), (1,1,nm(chi2),1)",
                            claimed_square_integrable=True),
            ConstituentSpec("Ja", "J_α(1/2,δ(χ2∘N)⊗1)", "subquotient",
                            "(1,1,1,chi2), (0,1,nm(chi2),chi2), (0,-1,nm(chi2),1)",
                            reconstructed=True),
            ConstituentSpec("Jb", "J_β(3/2,1⊗δ(χ2))", "subquotient",
                            "-(1,1,1,chi2), -(0,1,nm(chi2),chi2), -(0,-1,nm(chi2),1)",
                            reconstructed=True),
            ConstituentSpec("LQ", "J_α(1,I^α(1⊗χ2∘N)⊗χ2)", "Langlands quotient",
                            "-(1,2,1,chi2), -(1,2,nm(chi2),chi2), -(1,1,nm(chi2),1)",
                            claimed_square_integrable=False),
        ),
        notes=(
            "J_α and J_β lists rebuilt from r_∅ of their standard modules; "
            "the (0,±1) entries carried swapped discrete parts",
        ),
    ),
    CaseEntry(
        key="1,2,chi1,1;res",
        title="(1,2,χ1,1;χ1≠1 & χ1|F×=1)",
        lam=(1, 2),
        scenario=_RES1,
        base=("chi1", "1"),
        predicate="b = 0, res(a) = 0, 2*a != 0",
        length=4,
        multiplicity=1,
        constituents=(
            ConstituentSpec("pi", "π(χ1)", "subrepresentation",
                            "(1,2,chi1,1), (1,2,-chi1,1)", claimed_square_integrable=True),
            ConstituentSpec("Jb+", "J_β(3/2,χ1⊗δ(1))", "subquotient",
                            "(1,1,chi1,1), (0,1,-chi1,1), (0,-1,-chi1,1), (-1,-1,chi1,1)"),
            ConstituentSpec("Jb-", "J_β(3/2,χ1^{-1}⊗δ(1))", "subquotient",
                            "-(1,1,chi1,1), -(0,1,-chi1,1), -(0,-1,-chi1,1), -(-1,-1,chi1,1)"),
            ConstituentSpec("LQ", "J_α(1,I^α(χ1⊗χ1^{-1})⊗1)", "Langlands quotient",
                            "(-1,-2,-chi1,1), (-1,-2,chi1,1)", claimed_square_integrable=False),
        ),
    ),
    CaseEntry(
        key="2/3,1,chi1,1",
        title="(2/3,1,χ1,1;⟨w_β⟩;χ1|F×=1)",
        lam=("2/3", 1),
        scenario=_RES1,
        base=("chi1", "1"),
        predicate="b = 0, res(a) = 0",
        length=2,
        multiplicity=1,
        singular=True,
        constituents=(
            ConstituentSpec("sub", "I_β(1/2,χ1⊗δ(1))", "subrepresentation",
                            "2(2/3,1), 2(1/3,1), (1/3,0), (-1/3,0)"),
            ConstituentSpec("LQ", "J_β(1,χ1^{-1}⊗I^β(1⊗1))", "Langlands quotient",
                            "2(-2/3,-1), 2(-1/3,-1), (1/3,0), (-1/3,0)",
                            claimed_square_integrable=False),
        ),
        notes=("discrete parts completed from the orbit",),
    ),
    CaseEntry(
        key="2,3,1,chi2;norm",
        title="(2,3,1,χ2;χ2∘N=1, χ2≠1)",
        lam=(2, 3),
        scenario=_NORM3,
        base=("1", "chi2"),
        predicate="a = 0, nm(b) = 0, b != 0",
        length=4,
        multiplicity=1,
        constituents=(
            ConstituentSpec("pi", "π(χ2)", "subrepresentation",
                            "(2,3,1,chi2), (2,3,1,-chi2)", claimed_square_integrable=True),
            ConstituentSpec("Ja-", "J_α(3/2,δ(1)⊗χ2^{-1})", "subquotient",
                            "-(1,3,1,chi2), -(1,0,1,-chi2), -(-1,0,1,-chi2), -(-1,-3,1,chi2)"),
            ConstituentSpec("Ja+", "J_α(3/2,δ(1)⊗χ2)", "subquotient",
                            "(1,3,1,chi2), (1,0,1,-chi2), (-1,0,1,-chi2), (-1,-3,1,chi2)"),
            ConstituentSpec("LQ", "J_β(3,1⊗I^β(χ2⊗χ2^{-1}))", "Langlands quotient",
                            "-(2,3,1,chi2), -(2,3,1,-chi2)", claimed_square_integrable=False),
        ),
    ),
    CaseEntry(
        key="2,3,1,1",
        title="(2,3,1,1;⟨w_β⟩)",
        lam=(2, 3),
        scenario="",
        base=("1", "1"),
        predicate="a = 0, b = 0",
        length=2,
        multiplicity=1,
        singular=True,
        constituents=(
            ConstituentSpec("sub", "I_α(3/2,δ(1)⊗1)", "subrepresentation",
                            "2(2,3), (1,0), (1,3), (-1,0), (-1,-3)"),
            ConstituentSpec("LQ", "J_β(3,1⊗I^β(1⊗1))", "Langlands quotient",
                            "2(-2,-3), (1,0), (1,3), (-1,0), (-1,-3)",
                            claimed_square_integrable=False),
        ),
    ),
)


def case_by_key(key: str) -> CaseEntry:
    for c in CASES:
        if c.key == key:
            return c
    raise KeyError(f"unknown case {key!r}; known: {', '.join(c.key for c in CASES)}")
