import json
import subprocess
import sys

import pytest

from lgmirror.cli import JobSpec, main, parse_group, read_job_file, run_job
from lgmirror.errors import InputError
from lgmirror.polyform import parse_polynomial


def run(argv, capsys):
    code = main(argv)
    return code, capsys.readouterr().out


def run_json(argv, capsys):
    code, out = run(argv + ["--json"], capsys)
    return code, json.loads(out)


def test_analyze_two_cubics(capsys):
    code, rep = run_json(["analyze", "x^3+y^3"], capsys)
    assert code == 0
    assert [a["kind"] for a in rep["atoms"]] == ["fermat", "fermat"]
    assert rep["q"] == ["1/3", "1/3"]
    assert rep["central_charge"] == "2/3"
    assert rep["gmax_order"] == 9


def test_analyze_loop(capsys):
    code, rep = run_json(["analyze", "--poly", "x^2*y+y^2*x"], capsys)
    assert code == 0 and rep["central_charge"] == "2/3"
    assert [a["kind"] for a in rep["atoms"]] == ["loop"]


def test_malformed_polynomial_is_input_error(capsys):
    code, rep = run_json(["analyze", "x^3+*y"], capsys)
    assert code == 2 and "ParseError" in rep["error"]


def test_missing_command(capsys):
    assert main([]) == 2


def test_dual_of_cubic(capsys):
    code, rep = run_json(["dual", "x^3"], capsys)
    assert code == 0
    assert rep["WT"] == "x^3"
    assert rep["GT_order"] == 1
    assert rep["A_total"] == rep["B_total"] == 2


def test_dual_of_two_cubics(capsys):
    code, rep = run_json(["dual", "x^3+y^3", "--group", "J"], capsys)
    assert code == 0
    assert rep["GT"] == [["1/3", "2/3"]]


def test_inadmissible_group(capsys):
    code, rep = run_json(["dual", "x^3+y^3", "--group", "[1/3,0]"], capsys)
    assert code == 2 and "NotAdmissible" in rep["error"]


@pytest.mark.parametrize("poly", ["x^3", "x^2*y+y^2*x"])
def test_verify_passes(poly, capsys):
    code, rep = run_json(["verify", poly], capsys)
    assert code == 0 and rep["passed"]


def test_verify_property1_violation(capsys):
    code, rep = run_json(["verify", "x^3+y^2*z+z^3", "--group", "[1/3,5/6,1/3]"], capsys)
    assert code == 3
    assert rep["witnesses"]


def test_verify_mutation_fails(capsys):
    code, rep = run_json(["verify", "x^3+y^3", "--group", "J", "--mutate-seed", "0"], capsys)
    assert code == 3 and not rep["passed"]


def test_resource_bound(capsys):
    code, rep = run_json(["dual", "x^5+y^5+z^5", "--max-group-order", "10"], capsys)
    assert code == 4


def test_catalog_only_fermat(capsys):
    code, rep = run_json(["catalog", "--only", "fermat"], capsys)
    assert code == 0
    assert [r["entry"] for r in rep["rows"]] == ["x3", "x4", "x5"]


def test_catalog_unknown_filter(capsys):
    code, rep = run_json(["catalog", "--only", "nope"], capsys)
    assert code == 2


def test_oracle_command(capsys):
    code, rep = run_json(["oracle", "x^2*y+y^3"], capsys)
    assert code == 0
    assert rep["checks"]["quotient_dim"] == {"engine": 4, "oracle": 4, "passed": True}


def test_text_output(capsys):
    code, out = run(["verify", "x^3"], capsys)
    assert code == 0 and "PASS" in out


def test_json_round_trip():
    code, rep = run_job(JobSpec(command="verify", poly="x^3+y^3", group="J"))
    assert code == 0
    assert json.loads(json.dumps(rep)) == rep


def test_job_file(tmp_path, capsys):
    p = tmp_path / "job.txt"
    p.write_text("# two cubics\ncommand = dual\npoly = x^3+y^3\ngroup = J\nformat = json\n",
                 encoding="utf-8")
    job = read_job_file(str(p))
    assert job.command == "dual" and job.group == "J"
    code, out = run(["--job", str(p)], capsys)
    assert code == 0 and json.loads(out)["GT"] == [["1/3", "2/3"]]


def test_job_file_rejects_unknown_keys(tmp_path):
    p = tmp_path / "job.txt"
    p.write_text("command = dual\ncolour = blue\n", encoding="utf-8")
    with pytest.raises(InputError):
        read_job_file(str(p))


def test_group_syntax():
    W = parse_polynomial("x^3+y^3")
    assert parse_group("max", W).order == 9
    assert parse_group("J", W).order == 3
    assert parse_group("0", W).order == 1
    assert parse_group("[1/3,2/3],[0,0]", W).order == 3
    assert parse_group('[["1/3","1/3"]]', W).order == 3
    with pytest.raises(InputError):
        parse_group("[1/3,", W)


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "lgmirror", "analyze", "x^3", "--json"],
                         capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)["gmax_order"] == 3
