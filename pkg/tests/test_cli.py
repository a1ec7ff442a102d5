import io
import json
from pathlib import Path

import pytest

from triality.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_orbit_of_trivial_character():
    code, text = run("orbit", "--s1", "0", "--s2", "0")
    assert code == 0
    assert text.splitlines()[0] == "(0,0)\t12"
    assert "stabilizer order 12" in text


def test_orbit_of_regular_character():
    code, text = run("orbit", "--s1", "3", "--s2", "5")
    assert code == 0
    assert len([ln for ln in text.splitlines() if ln.startswith("(")]) == 12


def test_rational_arguments():
    assert run("orbit", "--s1", "7/3", "--s2", "-1")[0] == 0


@pytest.mark.parametrize("bad", ["0.5", "1/0", "x", "1/-2"])
def test_decimal_and_malformed_rationals_exit_two(bad, capsys):
    assert run("orbit", "--s1", bad, "--s2", "1")[0] == 2
    assert "error" in capsys.readouterr().err


def test_missing_verb_exits_two():
    assert run()[0] == 2


def test_classify_text_and_json():
    code, text = run("classify", "--s1", "3", "--s2", "5")
    assert code == 0 and text == (GOLDEN / "report_3_5_1_1.txt").read_text()
    code, text = run("classify", "--s1", "1", "--s2", "2", "--json")
    assert code == 0
    data = json.loads(text)
    assert data == json.loads((GOLDEN / "report_1_2_1_1.json").read_text())


def test_classify_with_scenario_file(tmp_path):
    scn = tmp_path / "chi.scn"
    scn.write_text("atom chi2 domain F order 3\nrel nm(chi2) = 0\n")
    code, text = run("classify", "--s1", "2", "--s2", "3", "--chi2", "chi2", "--scenario", str(scn))
    assert code == 0 and "χ2∘N=1" in text
    code, _ = run("classify", "--s1", "2", "--s2", "3", "--chi2", "chi2", "--scenario", str(scn), "--non-galois")
    assert code == 1


def test_unclassified_character_is_not_an_error(tmp_path):
    scn = tmp_path / "chi.scn"
    scn.write_text("atom chi1 domain E order 2\nrel res(chi1) = 0\n")
    code, text = run("classify", "--s1", "1", "--s2", "2", "--chi1", "chi1", "--scenario", str(scn))
    assert code == 0 and "unclassified" in text


def test_missing_scenario_file_is_an_error(capsys):
    code, _ = run("classify", "--s1", "1", "--s2", "2", "--scenario", "/nonexistent/file")
    assert code == 1
    assert capsys.readouterr().err.startswith("error:")


def test_rank1():
    code, text = run("rank1", "--s1", "1", "--s2", "2")
    assert code == 0
    assert text.splitlines()[-1] == "R = {β, α+β, 2α+β, 3α+β}"


def test_jacquet_and_aubert():
    code, text = run("jacquet", "--case", "3,5,1,1")
    assert code == 0 and "r_∅(I(χ))" in text
    code, text = run("aubert", "--case", "3,5,1,1")
    assert code == 0
    assert "1_G -> St_G" in text and "St_G -> 1_G" in text


def test_unknown_case_exits_one(capsys):
    assert run("jacquet", "--case", "9,9,9,9")[0] == 1
    assert "error:" in capsys.readouterr().err


def test_norm_case_rejected_in_non_galois_mode():
    assert run("aubert", "--case", "2,3,1,chi2;norm", "--non-galois")[0] == 1
    assert run("aubert", "--case", "2,3,1,1", "--non-galois")[0] == 0


def test_cases_lists_every_key():
    from triality.cases import CASES

    code, text = run("cases")
    assert code == 0
    assert [ln.split("\t")[0] for ln in text.splitlines()] == [e.key for e in CASES]


@pytest.mark.parametrize("which", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("fmt", ["md", "csv"])
@pytest.mark.parametrize("mode", ["galois", "nongalois"])
def test_tables_match_goldens(which, fmt, mode):
    argv = ["tables", "--which", str(which), "--format", fmt] + (["--non-galois"] if mode == "nongalois" else [])
    code, text = run(*argv)
    assert code == 0
    assert text == (GOLDEN / f"table{which}_{mode}.{fmt}").read_text()


@pytest.mark.parametrize("spec", ["1,3", "1..5", "2-4"])
def test_table_selection_syntax(spec):
    assert run("tables", "--which", spec)[0] == 0


def test_bad_table_selection_exits_two():
    assert run("tables", "--which", "7")[0] == 2


@pytest.mark.parametrize("suffix", ["csv", "svg"])
def test_region_output(tmp_path, suffix):
    target = tmp_path / f"region.{suffix}"
    code, _ = run("region", "--grid", "20", "--out", str(target))
    assert code == 0
    text = target.read_text()
    if suffix == "csv":
        assert text.splitlines()[0] == "s1,s2,verdict,witness"
        assert len(text.splitlines()) == 401
    else:
        assert text.startswith("<svg")


def test_region_rejects_unknown_suffix(tmp_path):
    assert run("region", "--grid", "4", "--out", str(tmp_path / "x.png"))[0] == 1


@pytest.mark.parametrize("check", ["prop314", "lemma315", "thm317", "tensor"])
def test_weil_checks_pass_on_defaults(check):
    code, text = run("weil", "--check", check)
    assert code == 0
    assert "ok\tTrue" in text or text.rstrip().endswith(" 0 mismatches")


def test_weil_with_model_file(tmp_path):
    from triality.weiloracle import builtin_model

    path = tmp_path / "q8.txt"
    path.write_text(builtin_model("q8").to_text())
    code, text = run("weil", "--check", "prop314", "--model", str(path))
    assert code == 0 and "ok\tTrue" in text


def test_weil_unknown_model_exits_one():
    assert run("weil", "--check", "prop314", "--model", "nosuchmodel")[0] == 1


def test_check_all():
    code, text = run("check", "--all")
    assert code == 0
    lines = text.strip().splitlines()
    assert lines and all(ln.startswith("PASS") for ln in lines)


def test_help_exits_zero(capsys):
    assert run("--help")[0] == 0
    assert "classify" in capsys.readouterr().out


def test_console_script_propagates_exit_codes():
    import subprocess
    import sys

    cmd = [sys.executable, "-c", "import sys; from triality.cli import main; sys.exit(main())"]
    assert subprocess.run(cmd + ["orbit", "--s1", "0.5", "--s2", "1"], capture_output=True).returncode == 2
    assert subprocess.run(cmd + ["aubert", "--case", "nope"], capture_output=True).returncode == 1
    assert subprocess.run(cmd + ["cases"], capture_output=True).returncode == 0
