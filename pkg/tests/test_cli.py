import json
import subprocess
import sys

import pytest

from cablowup.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_charts_text(capsys):
    code, out, _ = run(capsys, "charts", "--germ", "xy + z^4 + u^4", "--weights", "1,3,1,1")
    assert code == 0
    assert out.splitlines()[1] == "U2 = { x + z^4 + u^4 } / Z_3(-1,1,-1,-1)"
    assert len(out.splitlines()) == 4


def test_quotient_terminal(capsys):
    code, out, _ = run(capsys, "quotient", "1/3(1,1,1)", "--test", "terminal")
    assert code == 0 and out.strip().endswith("terminal: false")
    code, out, _ = run(capsys, "quotient", "1/2(1,1,1)", "--format", "json")
    assert json.loads(out)["result"] is True


@pytest.mark.parametrize("test, expected", [
    ("isolated", "true"), ("reid-tai", "true"), ("canonical", "1/4(1,1,3)"),
])
def test_quotient_other_tests(capsys, test, expected):
    code, out, _ = run(capsys, "quotient", "1/4(3,1,1)", "--test", test)
    assert code == 0 and out.strip().endswith(expected)


def test_quotient_duval_and_hyper(capsys):
    code, out, _ = run(capsys, "quotient", "1/3(1,2)", "--test", "duval")
    assert out.strip() == "1/3(1,2) duval: A_2 chain [2,2]"
    code, out, _ = run(capsys, "quotient", "1/5(-1,1,-2,-2)", "--equation-weight", "-1",
                       "--test", "hyperquotient")
    assert code == 0 and out.strip().endswith("false")
    code, _, err = run(capsys, "quotient", "1/5(1,2,2)", "--test", "hyperquotient")
    assert code == 2 and "equation weight" in err


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "--germ", "xy + z^3 + u^4", "--bound", "6",
                       "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert [a["weights"] for a in data["accepted"]] == [[1, 2, 1, 1], [2, 1, 1, 1]]
    # round trip: re-rendering the parsed JSON gives the same bytes
    assert json.dumps(data, indent=2) + "\n" == out


def test_classify_expect(capsys, tmp_path):
    fixture = tmp_path / "expected.json"
    fixture.write_text(json.dumps({"accepted": [{"weights": [1, 2, 1, 1], "discrepancy": 1},
                                                {"weights": [2, 1, 1, 1], "discrepancy": 1}]}))
    args = ["classify", "--germ", "xy + z^3 + u^4", "--bound", "5", "--expect", str(fixture)]
    code, _, err = run(capsys, *args)
    assert code == 0 and err == ""
    fixture.write_text(json.dumps({"discrepancy_one_count": 3}))
    code, _, err = run(capsys, *args)
    assert code == 1 and "discrepancy_one_count" in err


def test_classify_text_tsv_and_filters(capsys):
    base = ["classify", "--germ", "xy + z^2 + u^5", "--bound", "4"]
    code, out, _ = run(capsys, *base, "--explain")
    assert "rejected:" in out and "discrepancy-1 count: 1" in out
    code, out, _ = run(capsys, *base, "--format", "tsv", "--max-discrepancy", "1")
    assert out.splitlines() == ["a\tb\tc\td\tdiscrepancy", "1\t1\t1\t1\t1"]
    code, out, _ = run(capsys, *base, "--format", "tsv", "--min-discrepancy", "2")
    assert len(out.splitlines()) == 3


def test_verdict_text_and_json_agree(capsys):
    args = ["verdict", "--germ", "xy + z^3 + u^3", "--weights", "1,5,2,2"]
    _, text, _ = run(capsys, *args)
    _, js, _ = run(capsys, *args, "--format", "json")
    data = json.loads(js)
    assert f"discrepancy: {data['discrepancy']}" in text
    assert f"terminal: {'yes' if data['terminal'] else 'no'}" in text
    assert f"rejection: {data['rejection_reason']}" in text
    for p in data["singular_points"]:
        assert p["type"] in text
    assert json.dumps(data, indent=2) + "\n" == js


def test_surface_text_and_json_agree(capsys):
    args = ["surface", "--germ", "xy + z^3 + u^4", "--weights", "1,2,1,1"]
    code, text, _ = run(capsys, *args)
    _, js, _ = run(capsys, *args, "--format", "json")
    data = json.loads(js)
    assert code == 0
    assert data["k2"] == "6" and data["picard"] == 1
    assert sorted(p["label"] for p in data["singular_points"]) == ["A_1", "A_2"]
    for p in data["singular_points"]:
        assert p["label"] in text
    assert "Picard number              1" in text
    assert data["curve_data"]["resolved_self_intersection"] == "-1"


def test_quotient_blowup(capsys):
    code, out, _ = run(capsys, "quotient-blowup", "--order", "1", "--weights", "1,1,1")
    assert code == 0 and out.splitlines()[0].startswith("U1 = C^3 / Z_1(1,-1,-1)")


@pytest.mark.parametrize("argv", [
    ["charts", "--germ", "xy + z^", "--weights", "1,1,1,1"],
    ["charts", "--germ", "xy + z^3", "--weights", "2,2,2,2"],
    ["charts", "--germ", "xy + z^3"],
    ["quotient", "1/3(1,x,1)"],
    ["classify", "--germ", "xy + z^3 + u^3", "--bound", "0"],
    ["nonsense"],
])
def test_input_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        sys.exit(main(argv))
    assert exc.value.code == 2
    out, err = capsys.readouterr()
    assert out == "" and err


def test_unsupported_exit_3(capsys):
    code, out, err = run(capsys, "surface", "--germ", "xy + z^2 + u^2", "--weights", "1,1,1,2")
    assert code == 3 and out == "" and err.startswith("unsupported:")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cablowup", "quotient", "1/2(1,1,1)"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "1/2(1,1,1) terminal: true"
