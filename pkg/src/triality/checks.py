"""Invariant suite run by ``triality check --all``."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .cases import CASES
from .charlattice import TorusCharacter, parse_scenario
from .classify import classify_case, special_exponents
from .grothendieck import (
    GrothendieckElement,
    MClass,
    PSClass,
    aubert,
    aubert_identities_check,
    r0_of_full_ps,
)
from .rootdata import lam, orbit_formula, orbit_multiset
from .tables import emit_tables
from .unitary import aubert_preserves_unitarity_check, lemma35_lines
from . import weiloracle as wo


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}" + (f": {self.detail}" if self.detail else "")


def _rand_q(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-12, 12), rng.randint(1, 6))


def check_orbits(n: int = 200, seed: int = 1) -> CheckResult:
    rng = random.Random(seed)
    for _ in range(n):
        x = lam(_rand_q(rng), _rand_q(rng))
        multi = Counter(orbit_multiset(x))
        if any(k * len(multi) != 12 for k in multi.values()):
            return CheckResult("orbit/stabilizer", False, f"at {x}")
        if set(multi) != set(orbit_formula(x)):
            return CheckResult("orbit/stabilizer", False, f"formula differs at {x}")
    return CheckResult("orbit/stabilizer", True, f"{n} random exponents")


def check_cases() -> CheckResult:
    bad = []
    for e in CASES:
        rep = classify_case(e.key)
        if rep.problems() or rep.total_jacquet() != r0_of_full_ps(rep.chi):
            bad.append(e.title)
    return CheckResult("jacquet conservation", not bad, ", ".join(bad) or f"{len(CASES)} cases")


_SCN = parse_scenario("atom chi1 domain E order 6\natom chi2 domain F order 4")


def _random_character(rng: random.Random) -> TorusCharacter:
    a = f"{rng.randint(0, 5)}*chi1"
    b = f"{rng.randint(0, 3)}*chi2"
    return TorusCharacter.make(_rand_q(rng), _rand_q(rng), a, b, _SCN)


def check_aubert(n: int = 100, seed: int = 2) -> CheckResult:
    rng = random.Random(seed)
    for _ in range(n):
        x = GrothendieckElement.of("G", [PSClass(_random_character(rng))])
        if aubert(aubert(x)) != x:
            return CheckResult("aubert involution", False, str(x))
    for _ in range(n // 4):
        gamma = rng.choice("ab")
        kind = rng.choice(("PS", "St", "Triv"))
        sigma = GrothendieckElement.of("Ma" if gamma == "a" else "Mb", [MClass(gamma, kind, _random_character(rng))])
        if not aubert_identities_check(gamma, sigma):
            return CheckResult("aubert involution", False, f"commutation at {sigma}")
    return CheckResult("aubert involution", True, f"{n} classes, {n // 4} Levi inputs")


NON_GALOIS_FAMILIES = frozenset({"(2,3,1,χ2;χ2∘N=1, χ2≠1)", "(1,2,1,χ2;⟨w_α⟩;χ2≠1 & χ2∘N=1)"})


def dropped_families() -> set[str]:
    """Family titles appearing in some Galois table row but in no non-Galois row."""
    full = emit_tables()
    reduced = emit_tables(galois=False)
    out: set[str] = set()
    for a, b in zip(full, reduced):
        kept = {cell for row in b.rows for cell in row}
        for row in a.rows:
            if row not in b.rows:
                out.update(cell for cell in row if cell.startswith("(") and cell not in kept)
    return out


def check_tables() -> CheckResult:
    counts = tuple(len(t.rows) for t in emit_tables())
    dropped = dropped_families()
    ok = counts == (6, 8, 6, 5, 5) and dropped == NON_GALOIS_FAMILIES
    return CheckResult("tables", ok, f"rows {counts}, non-Galois drops {len(dropped)} families")


def check_unitary() -> CheckResult:
    ok = aubert_preserves_unitarity_check() and len(lemma35_lines()) == 6
    ex = special_exponents()
    ok = ok and all(lam(*p) in ex for p in ((3, 5), (1, 2), (2, 3)))
    return CheckResult("unitarity", ok, f"{len(ex)} special exponents")


def check_weil() -> CheckResult:
    failures = []
    for name in ("d8", "q8"):
        if not wo.prop314_verify(wo.builtin_model(name)).ok:
            failures.append(f"prop314 {name}")
    if not wo.lemma315_check(wo.builtin_model("f42")):
        failures.append("lemma315 f42")
    if not wo.thm317_check(wo.builtin_model("d12c13")):
        failures.append("thm317 d12c13")
    for name in ("d12", "sl23", "f42", "d12c13"):
        if wo.tensor_agreement(wo.builtin_model(name))[1]:
            failures.append(f"tensor {name}")
    return CheckResult("weil oracle", not failures, ", ".join(failures))


ALL_CHECKS = (check_orbits, check_cases, check_aubert, check_tables, check_unitary, check_weil)


def run_all() -> list[CheckResult]:
    return [f() for f in ALL_CHECKS]
