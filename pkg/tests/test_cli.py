import json

import pytest

from multischeme.cli import main

INPUT = """\
# a multiplicity-four structure on the line x = y = 0
ring z0,z1,x,y / char 0 / grevlex
support x, y
(x^2 + z0*y,
 y^2)
"""


@pytest.fixture
def infile(tmp_path):
    p = tmp_path / "structure.ms"
    p.write_text(INPUT)
    return str(p)


def test_gb_prints_reduced_basis(infile, capsys):
    assert main(["gb", infile]) == 0
    out = capsys.readouterr().out.strip()
    assert out == "(x^2 + z0*y, y^2)"


def test_hilb_plain_and_pbasis(infile, capsys):
    assert main(["hilb", infile]) == 0
    assert capsys.readouterr().out.strip() == "4*P_1 - 4*P_0"
    assert main(["hilb", infile, "--pbasis"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == {"basis": "P", "coeffs": {"1": 4, "0": -4}}


def test_cm_verdict(infile, capsys):
    assert main(["cm", infile]) == 0
    assert capsys.readouterr().out.strip() == "locally-cm: true"


def test_filt_report_is_json(infile, capsys):
    assert main(["filt", infile]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["multiplicity"] == 4
    assert rep["verdicts"]["type_i"] is True
    assert len(rep["filtration"]) == 4


def test_verify_single_scenario(capsys):
    assert main(["verify", "hm-hilbert"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "1/1 scenarios passed" in out


def test_verify_json_format(capsys):
    assert main(["verify", "degree3-catalog", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["summary"]["exit_code"] == 0


def test_verify_unknown_scenario_is_usage_error(capsys):
    assert main(["verify", "nope"]) == 3


def test_missing_ring_declaration_is_usage_error(tmp_path, capsys):
    p = tmp_path / "bad.ms"
    p.write_text("(x, y)\n")
    assert main(["gb", str(p)]) == 3


def test_missing_file_is_usage_error(capsys):
    assert main(["gb", "/nonexistent/file.ms"]) == 3


def test_bad_subcommand_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 3


def test_max_degree_guard_makes_inconclusive(tmp_path, capsys):
    p = tmp_path / "deep.ms"
    p.write_text("ring x,y / char 0 / grevlex\n(x^5 - y^4, x*y^4 - x^3)\n")
    assert main(["--max-degree", "2", "gb", str(p)]) == 2


def test_catalog_list(capsys):
    assert main(["catalog", "list"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert len(out) == 30
    assert all("mult=" in line for line in out)
    assert any("chars=p0,p2" in line for line in out)
