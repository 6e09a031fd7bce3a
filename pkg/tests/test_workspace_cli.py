import copy
import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from gvbimod.cli import main
from gvbimod.fields import GF
from gvbimod.workspace import (
    EXIT_ASSERTION,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_VALIDATION,
    load_and_run,
    parse_workspace,
    report_to_json,
    run_workspace,
    serialize_workspace,
)

ROOT = Path(__file__).resolve().parents[1]
SHIPPED = ROOT / "workspaces" / "a3_distributor.json"


def shipped_doc():
    return json.loads(SHIPPED.read_text())


def test_shipped_workspace_passes():
    code, report = load_and_run(str(SHIPPED))
    assert code == EXIT_OK
    first = report["tasks"][0]
    assert first["result"]["kernel_dim"] == 6
    assert first["result"]["image_dim"] == 2
    assert report["all_passed"]


def test_shipped_workspace_over_prime_field():
    code, report = load_and_run(str(SHIPPED), field=GF(5))
    assert code == EXIT_OK
    assert report["field"]["characteristic"] == 5


def test_corrupted_algebra_gives_validation_exit(tmp_path):
    doc = {
        "field": {"characteristic": 0},
        "algebras": {"A": {
            "structure_constants": [[["1", "0"], ["0", "1"]],
                                    [["0", "1"], ["1", "0"]]],
            "unit": ["1", "0"]}},
        "bimodules": {},
        "tasks": [],
    }
    # corrupt unitality: 1*x = 1
    doc["algebras"]["A"]["structure_constants"][0][1] = ["1", "0"]
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(doc))
    code, report = load_and_run(str(p))
    assert code == EXIT_VALIDATION
    assert "unit" in report["message"]


def test_empty_tasks_ok(tmp_path):
    doc = {"algebras": {"A": {"builtin": "dual_numbers"}},
           "bimodules": {"P": {"construct": "regular", "algebra": "A"}},
           "tasks": []}
    p = tmp_path / "empty.json"
    p.write_text(json.dumps(doc))
    code, report = load_and_run(str(p))
    assert code == EXIT_OK
    assert report["tasks"] == []


def test_parse_errors(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("{not json")
    assert load_and_run(str(p))[0] == EXIT_PARSE
    p2 = tmp_path / "badop.json"
    p2.write_text(json.dumps({"algebras": {}, "bimodules": {},
                              "tasks": [{"op": "no_such_op", "args": []}]}))
    assert load_and_run(str(p2))[0] == EXIT_PARSE


def test_unresolved_name_is_validation_error(tmp_path):
    doc = {"algebras": {}, "bimodules":
           {"P": {"construct": "regular", "algebra": "MISSING"}}, "tasks": []}
    p = tmp_path / "miss.json"
    p.write_text(json.dumps(doc))
    code, report = load_and_run(str(p))
    assert code == EXIT_VALIDATION
    assert "MISSING" in report["message"]


def test_assertion_failure_exit(tmp_path):
    doc = shipped_doc()
    doc["tasks"] = [{"op": "tensor_over", "args": ["I", "I"],
                     "expect": {"dim": 5}}]
    p = tmp_path / "wrong.json"
    p.write_text(json.dumps(doc))
    code, report = load_and_run(str(p))
    assert code == EXIT_ASSERTION
    assert not report["all_passed"]
    detail = report["tasks"][0]["assertions"]["details"]["dim"]
    assert detail == {"expected": 5, "actual": 4, "ok": False}


def test_roundtrip_serialization():
    ws = parse_workspace(shipped_doc())
    doc2 = serialize_workspace(ws)
    ws2 = parse_workspace(doc2)
    assert set(ws.algebras) == set(ws2.algebras)
    for name in ws.algebras:
        assert ws.algebras[name].key == ws2.algebras[name].key
    for name in ws.bimodules:
        assert ws.bimodules[name].key == ws2.bimodules[name].key
    assert ws.tasks == ws2.tasks
    # and the re-parsed workspace executes identically
    r1 = run_workspace(ws)[1]
    r2 = run_workspace(ws2)[1]
    assert report_to_json(r1) == report_to_json(r2)


def test_explicit_bimodule_and_twist_constructs(tmp_path):
    doc = {
        "algebras": {"A": {"builtin": "square_zero_pair"}},
        "bimodules": {
            "W": {"construct": "twist", "algebra": "A",
                  "automorphism": [["1", "0", "0"], ["0", "0", "1"],
                                   ["0", "1", "0"]]},
            "E": {"left_algebra": "A", "right_algebra": "A", "dim": 1,
                  "left_actions": [[["1"]], [["0"]], [["0"]]],
                  "right_actions": [[["1"]], [["0"]], [["0"]]]},
            "T": {"construct": "tensor_over", "of": ["W", "E"]},
        },
        "tasks": [{"op": "tensor_over", "args": ["W", "E"],
                   "expect": {"dim": 1}}],
    }
    p = tmp_path / "tw.json"
    p.write_text(json.dumps(doc))
    code, report = load_and_run(str(p))
    assert code == EXIT_OK


def test_cli_run_and_report_dir(tmp_path):
    runner = CliRunner()
    result = runner.invoke(main, ["run", str(SHIPPED)],
                           env={"GVBIMOD_REPORT_DIR": str(tmp_path)})
    assert result.exit_code == 0
    parsed = json.loads(result.output)
    assert parsed["all_passed"]
    written = tmp_path / "a3_distributor.report.json"
    assert written.exists()
    assert json.loads(written.read_text()) == parsed


def test_cli_pretty_and_field_flag():
    runner = CliRunner()
    result = runner.invoke(main, ["run", str(SHIPPED), "--pretty",
                                  "--field", "p=7"])
    assert result.exit_code == 0
    assert "all passed" in result.output
    result = runner.invoke(main, ["run", str(SHIPPED), "--field", "bogus"])
    assert result.exit_code == EXIT_PARSE


def test_cli_suite_unknown_and_determinism():
    runner = CliRunner()
    result = runner.invoke(main, ["suite", "nonsense"])
    assert result.exit_code == EXIT_PARSE
    r1 = runner.invoke(main, ["suite", "paper-examples", "--seed", "7"])
    r2 = runner.invoke(main, ["suite", "paper-examples", "--seed", "7"])
    assert r1.exit_code == 0
    assert r1.output == r2.output


def test_report_is_json_stable():
    code, report = load_and_run(str(SHIPPED))
    text1 = report_to_json(report)
    code2, report2 = load_and_run(str(SHIPPED))
    assert text1 == report_to_json(report2)
