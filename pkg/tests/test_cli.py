"""End-to-end tests of the command-line dispatcher: output bytes + exit codes."""

import json

from artifact.cli import main


def run(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_kron_worked_example(capsys):
    assert run(capsys, "kron", "2,1", "2,1", "2,1") == (0, "1\n", "")


def test_lr_worked_example(capsys):
    assert run(capsys, "lr", "6,4,3", "3,1", "4,3,2") == (0, "2\n", "")


def test_kron_size_mismatch_is_invalid_input(capsys):
    code, out, err = run(capsys, "kron", "2,1", "2,1", "4")
    assert code == 1
    assert out == ""
    assert "size" in err


def test_partition_grammar_accepted(capsys):
    # exponent form and the '-' spelling of the empty partition
    assert run(capsys, "char", "2^2,1", "1^5") == (0, "5\n", "")
    assert run(capsys, "kostka", "-", "-") == (0, "1\n", "")
    assert run(capsys, "rkron", "-", "-", "-") == (0, "1\n", "")


def test_bad_partition_is_invalid_input(capsys):
    code, out, err = run(capsys, "kron", "oops", "2,1", "2,1")
    assert code == 1 and out == ""
    assert "oops" in err


def test_unknown_command_is_invalid_input(capsys):
    code, out, err = run(capsys, "frobnicate", "2,1")
    assert code == 1 and out == ""
    assert "frobnicate" in err


def test_help_exits_zero(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
    assert "Usage:" in out


def test_kron_json_schema(capsys):
    code, out, _ = run(capsys, "kron", "2,1", "2,1", "2,1", "--json")
    assert code == 0
    record = json.loads(out)
    assert record == {
        "lambda": ["2", "1"],
        "mu": ["2", "1"],
        "nu": ["2", "1"],
        "g": "1",
    }


def test_char_json_schema(capsys):
    code, out, _ = run(capsys, "char", "3,1", "2,1,1")
    assert (code, out) == (0, "1\n")
    code, out, _ = run(capsys, "char", "3,1", "2,1,1", "--json")
    record = json.loads(out)
    assert record == {"lambda": ["3", "1"], "alpha": ["2", "1", "1"], "value": "1"}


def test_schur_method_agrees_with_char(capsys):
    for trip in (("2,1", "2,1", "2,1"), ("3,1", "2,2", "2,1,1")):
        _, by_char, _ = run(capsys, "kron", *trip)
        _, by_schur, _ = run(capsys, "kron", *trip, "--method", "schur")
        assert by_char == by_schur


def test_schur_method_cap(capsys):
    code, out, err = run(capsys, "kron", "4,3", "4,3", "4,3", "--method", "schur")
    assert code == 1 and out == ""
    code, out, _ = run(
        capsys, "kron", "4,3", "4,3", "4,3", "--method", "schur", "--cap", "7"
    )
    assert code == 0
    _, by_char, _ = run(capsys, "kron", "4,3", "4,3", "4,3")
    assert out == by_char


def test_rkron_known_value(capsys):
    code, out, _ = run(capsys, "rkron", "2,1", "1", "1,1", "--json")
    assert code == 0
    assert json.loads(out)["gbar"] == "1"


def test_pleth_coefficients(capsys):
    assert run(capsys, "pleth", "2,2", "1,1", "2") == (0, "1\n", "")
    assert run(capsys, "pleth", "3,1", "1,1", "2") == (0, "0\n", "")
    code, out, _ = run(capsys, "pleth", "2,2", "1,1", "2", "--json")
    assert json.loads(out) == {
        "target": ["2", "2"],
        "inner": ["1", "1"],
        "outer": ["2"],
        "a": "1",
    }


def test_pleth_size_mismatch(capsys):
    code, out, err = run(capsys, "pleth", "3,1", "1,1", "3")
    assert code == 1 and out == ""


def test_pleth_hn_plain_listing(capsys):
    code, out, _ = run(capsys, "pleth-hn", "2", "2")
    assert code == 0
    assert out == "4: 1\n2^2: 1\n"


def test_pleth_hn_json(capsys):
    code, out, _ = run(capsys, "pleth-hn", "3", "2", "--json")
    assert code == 0
    record = json.loads(out)
    assert record["d"] == "3" and record["n"] == "2"
    entries = {tuple(r["lambda"]): r["a"] for r in record["coeffs"]}
    assert entries[("6",)] == "1"
    assert entries[("4", "2")] == "1"
    assert entries[("2", "2", "2")] == "1"
    assert ("5", "1") not in entries
    for row in record["coeffs"]:
        assert all(part.isdigit() for part in row["lambda"])
        assert row["a"].isdigit()


def test_pleth_hn_cap_guard(capsys):
    code, out, err = run(capsys, "pleth-hn", "5", "4")
    assert code == 1 and out == ""
    assert "cap" in err


def test_verify_pass_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "tworow", "--n", "8")
    assert code == 0
    assert out.startswith("tworow: pass (checked 68,")


def test_verify_json_report(capsys):
    code, out, _ = run(capsys, "verify", "murnaghan", "--n", "3", "--json")
    assert code == 0
    record = json.loads(out)
    assert record["status"] == "pass"
    assert record["params"] == {"max_size": "3"}
    assert record["checked_count"] == "42"
    assert record["elapsed_ms"].isdigit()


def test_verify_fail_exit_two(capsys):
    # the printed n >= 9 claim genuinely fails at n = 9; the dispatcher must
    # surface that as a property failure, not an error
    code, out, err = run(capsys, "verify", "tensor-square", "--n", "9", "--json")
    assert code == 2
    record = json.loads(out)
    assert record["status"] == "fail"
    assert record["witness"]["covering"] == []


def test_verify_saturation_search_inconclusive_is_success(capsys):
    code, out, _ = run(capsys, "verify", "saturation-cex", "--k", "3", "--n-max", "2")
    assert code == 0
    assert "inconclusive-within-range" in out.splitlines()[0]
    witness = json.loads(out.splitlines()[1])
    assert witness["base_value"] == "0"


def test_verify_unknown_property(capsys):
    code, out, err = run(capsys, "verify", "nonsense")
    assert code == 1 and out == ""
    assert "unknown property" in err


def test_verify_bad_range_is_invalid_input(capsys):
    code, _, err = run(capsys, "verify", "orthogonality", "--n", "0")
    assert code == 1
    code, _, err = run(capsys, "verify", "saxl", "--k", "7")
    assert code == 1


def test_verify_jobs_do_not_change_output(capsys):
    _, serial, _ = run(capsys, "verify", "orthogonality", "--n", "5", "--json")
    _, pooled, _ = run(capsys, "verify", "orthogonality", "--n", "5", "--jobs", "3", "--json")
    a, b = json.loads(serial), json.loads(pooled)
    del a["elapsed_ms"], b["elapsed_ms"]
    assert a == b


def test_table_kron_rows_and_jobs_determinism(capsys):
    code, serial, _ = run(capsys, "table", "kron", "--n", "4")
    assert code == 0
    code, pooled, _ = run(capsys, "table", "kron", "--n", "4", "--jobs", "8")
    assert code == 0
    assert serial == pooled
    lines = serial.splitlines()
    assert len(lines) == 35  # multisets of size 3 from the 5 partitions of 4
    first = json.loads(lines[0])
    assert first == {"lambda": ["4"], "mu": ["4"], "nu": ["4"], "g": "1"}
    for line in lines:
        row = json.loads(line)
        assert set(row) == {"lambda", "mu", "nu", "g"}
        assert row["g"].isdigit()


def test_out_flag_writes_file(capsys, tmp_path):
    target = tmp_path / "value.txt"
    code, out, _ = run(capsys, "kron", "2,1", "2,1", "2,1", "--out", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text() == "1\n"
