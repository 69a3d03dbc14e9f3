from __future__ import annotations

import json
import subprocess
import sys

import pytest

from hecke_phigamma.cli import (VerificationReport, cmd_appendix, cmd_enumerate, main,
                                null_coroot_coefficients)
from hecke_phigamma.finite_field import FiniteField
from hecke_phigamma.fixtures import APPENDIX_CASES, E6_STRING, E7_STRING, parse_word
from hecke_phigamma.phigamma import construct_rank_one, direct_sum
from hecke_phigamma.rootdata import build_root_system


def test_fixture_strings():
    assert len(parse_word(E6_STRING)) == 48
    assert len(parse_word(E7_STRING)) == 54
    assert set(APPENDIX_CASES) == {"e6", "e6dual", "e7"}


def test_null_coroot_coefficients():
    assert null_coroot_coefficients(build_root_system("E6")) == [1, 1, 2, 2, 3, 2, 1]
    assert null_coroot_coefficients(build_root_system("E7")) == [1, 2, 2, 3, 4, 3, 2, 1]


@pytest.mark.parametrize("case", ["e6", "e6dual", "e7"])
def test_appendix(case):
    rep = cmd_appendix(case)
    assert rep.ok, rep.render_text()
    assert rep.runtime < 10
    want = {"e6": (48, 16), "e6dual": (48, 16), "e7": (54, 27)}[case]
    assert (rep.data["length_t"], rep.data["wall_set_size"]) == want


def test_verify_c3_p5(capsys, tmp_path):
    out = tmp_path / "r.json"
    assert main(["--json", str(out), "--seed", "7", "verify", "--type", "C", "--d", "3",
                 "--p", "5"]) == 0
    text = capsys.readouterr().out
    assert "phi^3 diagonal display" in text
    rep = VerificationReport.from_json(json.loads(out.read_text()))
    assert rep.ok and rep.totals["fail"] == 0
    assert all(it.anchor for it in rep.items)


def test_verify_d4_has_omega(capsys):
    assert main(["verify", "--type", "D", "--d", "4", "--p", "3"]) == 0
    assert "omega^2 = p id" in capsys.readouterr().out


def test_verify_b3_m_table(capsys):
    assert main(["verify", "--type", "B", "--d", "3", "--p", "3"]) == 0
    assert "m_alpha = 2 for alpha = (1, 0, 0)" in capsys.readouterr().out


def test_verify_bad_params():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--type", "C", "--d", "1", "--p", "3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["verify", "--type", "C", "--d", "2", "--p", "4"])


def test_enumerate_count(capsys):
    assert main(["enumerate", "--family", "C", "--r", "2", "--p", "3", "--count-only"]) == 0
    assert "6 classes" in capsys.readouterr().out
    assert cmd_enumerate("C", 2, 3, count_only=True)["count"] == 6


def test_enumerate_rejects_b_even():
    with pytest.raises(SystemExit):
        main(["enumerate", "--family", "B", "--r", "2", "--p", "3"])


def test_enumerate_rows(tmp_path):
    out = tmp_path / "e.json"
    assert main(["--json", str(out), "enumerate", "--family", "D", "--r", "4", "--p", "3"]) == 0
    res = json.loads(out.read_text())
    assert res["count"] == len(res["rows"])
    for row in res["rows"]:
        assert row["n"] % 2 == 0


def test_bijection_c2(capsys):
    assert main(["bijection", "--type", "C", "--d", "2", "--p", "3"]) == 0
    assert "FAIL" not in capsys.readouterr().out


def test_bijection_a1(tmp_path):
    out = tmp_path / "b.json"
    assert main(["--json", str(out), "bijection", "--type", "A", "--d", "1", "--p", "3"]) == 0
    rep = VerificationReport.from_json(json.loads(out.read_text()))
    assert rep.data["bijection"]["r"] == 2


def test_bijection_b3_reports_failure(capsys):
    assert main(["bijection", "--type", "B", "--d", "3", "--p", "3"]) == 1
    text = capsys.readouterr().out
    assert "[FAIL] surjective" in text and "witness" in text


def test_classify_module(tmp_path, capsys):
    F = FiniteField(3)
    mod = direct_sum([construct_rank_one(2, F, 4, 1, 2).to_phigamma(),
                      construct_rank_one(2, F, 2, 0, 1).to_phigamma()])
    path = tmp_path / "m.json"
    path.write_text(mod.dumps())
    assert main(["classify-module", str(path)]) == 0
    res = json.loads(capsys.readouterr().out)
    assert res["summands"] == [{"n": 4, "s": 1, "xi": 2}, {"n": 2, "s": 0, "xi": 1}]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hecke_phigamma", "appendix", "e7"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "8/8 passed" in proc.stdout
