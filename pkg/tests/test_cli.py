import json
import subprocess
import sys

import pytest

from brext.cli import main
from brext.config import data_path

from conftest import FIXTURES, GOLDEN, fault_files

C2C2 = str(data_path("c2c2"))
TRIVIAL = str(data_path("trivial"))


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def golden(name: str) -> str:
    return (GOLDEN / name).read_text()


def test_mul_worked_example_matches_golden(capsys):
    code, out, _ = run(capsys, "mul", "--system", C2C2, "(0,0:1,1)", "(2,1:1,0)")
    assert code == 0
    assert out == golden("mul_c2c2.ndjson")
    assert json.loads(out)["result"] == "(1,1:0,0)"


def test_mul_without_system_is_bicyclic(capsys):
    code, out, _ = run(capsys, "mul", "(2,3)", "(1,4)")
    assert code == 0
    assert json.loads(out)["result"] == "(2,6)"


def test_mul_rejects_triple_syntax_without_system(capsys):
    code, out, err = run(capsys, "mul", "(0,0:1,1)", "(2,1:1,0)")
    assert code == 2
    assert out == ""
    assert "error:" in err


def test_inv_both_domains(capsys):
    code, out, _ = run(capsys, "inv", "(5,2)")
    assert (code, json.loads(out)["result"]) == (0, "(2,5)")
    code, out, _ = run(capsys, "inv", "--system", C2C2, "(3,1:1,7)")
    assert (code, json.loads(out)["result"]) == (0, "(7,1:1,3)")


def test_eta(capsys):
    code, out, _ = run(capsys, "eta", "(3,1:1,7)")
    assert (code, json.loads(out)["result"]) == (0, "(3,7)")


def test_order_reports_both_routes(capsys):
    code, out, _ = run(capsys, "order", "--system", C2C2, "(3,0:0,4)", "(1,0:0,2)")
    rec = json.loads(out)
    assert code == 0
    assert rec["result"] is True and rec["oracle"] is True and rec["ok"] is True
    code, out, _ = run(capsys, "order", "--system", C2C2, "(1,0:0,2)", "(3,0:0,4)")
    assert code == 0
    assert json.loads(out)["result"] is False


def test_validate_ok_matches_golden(capsys):
    code, out, _ = run(capsys, "validate", "--system", C2C2)
    assert code == 0
    assert out == golden("validate_c2c2.ndjson")


@pytest.mark.parametrize("path,fragment", fault_files(), ids=lambda v: getattr(v, "stem", v))
def test_validate_fault_corpus_exits_one_with_violations(capsys, path, fragment):
    code, out, _ = run(capsys, "validate", "--system", str(path))
    assert code == 1
    rec = json.loads(out)
    assert rec["ok"] is False
    assert any(fragment in v for v in rec["violations"])


def test_validate_parse_damage_exits_two(capsys):
    for bad in ("junk.json", "malformed_table.json"):
        code, out, err = run(capsys, "validate", "--system", str(FIXTURES / bad))
        assert code == 2
        assert out == ""
        assert "error:" in err


def test_missing_system_flag_exits_two(capsys):
    code, out, err = run(capsys, "order", "(0,0:0,0)", "(0,0:0,0)")
    assert code == 2
    assert "needs --system" in err


def test_idempotents_matches_golden(capsys):
    code, out, _ = run(capsys, "idempotents", "--system", C2C2, "--window", "2")
    assert code == 0
    assert out == golden("idempotents_c2c2.ndjson")


def test_window_cap_is_enforced(capsys):
    code, _, err = run(capsys, "idempotents", "--system", C2C2, "--window", "17")
    assert code == 2
    assert "1..16" in err


def test_hclass(capsys):
    code, out, _ = run(capsys, "hclass", "--system", C2C2, "(1,0:1,2)")
    assert code == 0
    assert json.loads(out)["result"] == ["(1,0:0,2)", "(1,0:1,2)"]


def test_witness_matches_golden(capsys):
    code, out, _ = run(capsys, "witness", "--system", C2C2, "(0,0:1,1)", "(3,1:1,2)")
    assert code == 0
    assert out == golden("witness_c2c2.ndjson")


def test_witness_rejects_zero(capsys):
    code, out, err = run(capsys, "witness", "--system", C2C2, "0", "(0,0:0,0)")
    assert code == 2
    assert "error:" in err


def test_zeroscan(capsys):
    code, out, _ = run(capsys, "zeroscan", "--system", C2C2, "--window", "2")
    rec = json.loads(out)
    assert code == 0
    assert rec["counterexamples"] == [] and rec["checked"] == 256


def test_zeroscan_without_zero_exits_two(capsys, tmp_path, c2c2_obj):
    p = tmp_path / "nozero.json"
    p.write_text(json.dumps(dict(c2c2_obj, with_zero=False)))
    code, _, err = run(capsys, "zeroscan", "--system", str(p))
    assert code == 2
    assert "zero" in err


def test_continuity_matches_golden(capsys):
    code, out, _ = run(
        capsys, "continuity", "--system", C2C2, "(1,0:0,2)", "--side", "left",
        "--exclude", "1,5",
    )
    assert code == 0
    assert out == golden("continuity_c2c2.ndjson")
    rec = json.loads(out)
    assert rec["found_excluded"] == [[0, 3], [1, 4], [2, 5]]


def test_continuity_right_side(capsys):
    code, out, _ = run(
        capsys, "continuity", "--system", C2C2, "(1,0:0,2)", "--side", "right",
        "--exclude", "3,2",
    )
    assert code == 0
    assert json.loads(out)["found_excluded"] == [[2, 0], [3, 1]]


def test_classify_matches_goldens(capsys):
    code, out, _ = run(capsys, "classify", "excluded_boxes")
    assert (code, out) == (0, golden("classify_excluded.ndjson"))
    code, out, _ = run(capsys, "classify", "isolated")
    assert (code, out) == (0, golden("classify_isolated.ndjson"))
    code, out, _ = run(capsys, "classify", '{"kind": "isolated"}')
    assert code == 0 and json.loads(out)["verdict"] == "isolated_zero"


def test_classify_unknown_descriptor_exits_two(capsys):
    code, _, err = run(capsys, "classify", "open_sesame")
    assert code == 2
    assert "descriptor" in err


def test_pushforward_matches_golden(capsys):
    code, out, _ = run(
        capsys, "pushforward", "excluded_boxes", "--exclude", "1,2", "--exclude", "0,4"
    )
    assert code == 0
    assert out == golden("pushforward_excluded.ndjson")


def test_verify_needs_all_flag(capsys):
    code, _, err = run(capsys, "verify", "--system", C2C2)
    assert code == 2
    assert "--all" in err


def test_verify_all_small_window_passes(capsys):
    for system in (C2C2, TRIVIAL):
        code, out, _ = run(capsys, "verify", "--all", "--system", system, "--window", "2")
        assert code == 0
        lines = [json.loads(line) for line in out.splitlines()]
        assert lines[-1]["op"] == "verify_summary"
        assert lines[-1]["failed"] == 0
        assert all(rec["ok"] for rec in lines)


def test_verify_fault_config_exits_one(capsys):
    path, fragment = fault_files()[0]
    code, out, _ = run(capsys, "verify", "--all", "--system", str(path))
    assert code == 1
    rec = json.loads(out)
    assert rec["ok"] is False and rec["op"] == "verify"
    assert any(fragment in v for v in rec["violations"])


def test_unknown_command_exits_two(capsys):
    assert main(["frobnicate"]) == 2


def test_stdout_is_identical_with_and_without_json_flag(capsys):
    _, plain, err_plain = run(capsys, "mul", "(2,3)", "(1,4)")
    _, quiet, err_quiet = run(capsys, "mul", "(2,3)", "(1,4)", "--json")
    assert plain == quiet
    assert err_plain != "" and err_quiet == ""


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "brext.cli", "validate", "--system", C2C2, "--json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["ok"] is True
