"""Command-line interface: output shapes, exit codes, determinism."""

import importlib.resources
import json
import re

import jsonschema
import pytest

from flagtke.cli import EXIT_OK, EXIT_USAGE, EXIT_VERIFY, main

RATIONAL = re.compile(r"^-?[0-9]+(/[0-9]+)?$")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out), err


@pytest.fixture(scope="module")
def schema():
    ref = importlib.resources.files("flagtke").joinpath("schema/result.schema.json")
    return json.loads(ref.read_text(encoding="utf-8"))


# ---------------------------------------------------------------------------
# worked examples


def test_flag_full_a2(capsys):
    code, out, _ = run(capsys, "flag", "A2", "--theta", "")
    assert code == EXIT_OK
    assert "koszul: [2, 2]" in out
    assert "dim: 3" in out
    assert "degree: 48" in out
    assert "snow bound (n+1)^n: 64" in out


def test_flag_complement_spec(capsys):
    code, doc, _ = run_json(capsys, "flag", "A3", "--complement", "2,3")
    assert code == EXIT_OK
    assert doc["command"] == "flag"
    assert doc["input"]["theta"] == [1]
    assert doc["input"]["complement"] == [2, 3]
    assert doc["result"]["koszul"] == [3, 2]
    assert doc["result"]["dim"] == 5
    assert doc["result"]["degree"] == "4500"
    assert doc["result"]["snow_ok"] is True


def test_flag_all_nodes_crossed_is_usage_error(capsys):
    code, out, err = run(capsys, "flag", "D5", "--theta", "1,2,3,4,5")
    assert code == EXIT_USAGE
    assert out == ""
    assert err.startswith("error:")
    assert "point" in err


def test_tke_exists_on_p1(capsys):
    code, doc, _ = run_json(capsys, "tke", "A1", "--theta", "", "--beta", "1")
    assert code == EXIT_OK
    assert doc["result"]["exists"] is True
    assert doc["result"]["metric"] == ["1"]
    assert doc["result"]["margins"] == {"1": "1"}


def test_tke_negative_verdict_still_exits_zero(capsys):
    code, out, _ = run(capsys, "tke", "A1", "--theta", "", "--beta", "2")
    assert code == EXIT_OK
    assert "tke exists: no" in out
    assert "metric omega: (none" in out


def test_tke_rational_twist(capsys):
    code, doc, _ = run_json(
        capsys, "tke", "A3", "--complement", "2,3", "--beta", "5/2,1"
    )
    assert code == EXIT_OK
    assert doc["result"]["exists"] is True
    assert doc["result"]["metric"] == ["1/2", "1"]
    assert doc["result"]["margins"] == {"2": "1/2", "3": "1"}
    assert doc["input"]["beta"] == ["5/2", "1"]


def test_grlb_projective_plane(capsys):
    code, out, _ = run(capsys, "grlb", "A2", "--theta", "2", "--xi", "1")
    assert code == EXIT_OK
    assert "greatest Ricci lower bound: 3" in out
    code, doc, _ = run_json(capsys, "grlb", "A2", "--theta", "2", "--xi", "1")
    assert doc["result"]["value"] == "3"
    assert doc["result"]["argmin"] == [1]


def test_grlb_decimal_hint_respects_digits(capsys):
    code, out, _ = run(capsys, "grlb", "A2", "--theta", "2", "--xi", "7", "--digits", "3")
    assert code == EXIT_OK
    assert "3/7 (~0.429)" in out


def test_volume_projective_plane(capsys):
    code, doc, _ = run_json(capsys, "volume", "A2", "--theta", "2", "--xi", "3")
    assert code == EXIT_OK
    assert doc["result"]["volume"] == "9"
    assert doc["result"]["cross_check"] == "9"
    assert doc["result"]["dim"] == 2


def test_report_full_a2_bound_chain(capsys):
    code, out, _ = run(capsys, "report", "A2", "--theta", "", "--xi", "1,1")
    assert code == EXIT_OK
    assert "grlb^n * vol = 48 <= degree = 48 <= (n+1)^n = 64" in out
    assert "left: ok (equality)" in out
    assert "right: ok (strict)" in out
    code, doc, _ = run_json(capsys, "report", "A2", "--theta", "", "--xi", "1,1")
    assert doc["result"]["r_pow_vol"] == "48"
    assert doc["result"]["degree"] == "48"
    assert doc["result"]["snow_bound"] == "64"
    assert doc["result"]["left_equality"] is True
    assert doc["result"]["right_equality"] is False


def test_roots_g2(capsys):
    code, doc, _ = run_json(capsys, "roots", "G2")
    assert code == EXIT_OK
    assert doc["result"]["count"] == 6
    assert doc["result"]["cartan"] == [[2, -1], [-3, 2]]
    assert doc["result"]["maximal_root"] == [3, 2]
    assert doc["result"]["symmetrizer"] == ["1", "3"]


def test_sweep_rank_one(capsys):
    code, doc, _ = run_json(capsys, "sweep", "--max-rank", "1", "--samples", "3")
    assert code == EXIT_OK
    assert doc["result"]["flags"] == 1
    assert doc["result"]["samples"] == 3
    assert doc["result"]["ok"] is True
    assert doc["result"]["failures"] == []


def test_sweep_check_subset(capsys):
    code, doc, _ = run_json(
        capsys, "sweep", "--max-rank", "2", "--checks", "snow,cross"
    )
    assert code == EXIT_OK
    assert doc["input"]["checks"] == ["snow", "cross"]
    assert doc["result"]["ok"] is True


def test_table_family_three_below_threshold(capsys):
    code, doc, _ = run_json(capsys, "table", "--family", "III", "--max-rank", "5")
    assert code == EXIT_OK
    assert doc["result"]["count"] == 0
    assert any("starts at rank 6" in w for w in doc["warnings"])


def test_table_family_two_rows(capsys):
    code, doc, _ = run_json(capsys, "table", "--family", "II", "--max-rank", "7")
    assert code == EXIT_OK
    assert doc["result"]["mismatches"] == 0
    assert doc["result"]["family_inconsistencies"] == 0
    rows = {(r["type"], tuple(r["complement"])): r for r in doc["result"]["rows"]}
    assert rows[("E6", (1, 3))]["expected"] == [2, 8]
    assert rows[("E7", (6, 7))]["expected"] == [12, 2]
    assert all(r["match"] for r in rows.values())


def test_table_text_has_header_and_summary(capsys):
    code, out, _ = run(capsys, "table", "--family", "I", "--max-rank", "4")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0].startswith("family")
    assert any(line.startswith("rows:") for line in lines)


# ---------------------------------------------------------------------------
# exit codes and validation


def test_missing_node_choice_is_usage_error(capsys):
    code, _, err = run(capsys, "flag", "A2")
    assert code == EXIT_USAGE


def test_both_node_choices_is_usage_error(capsys):
    code, _, _ = run(capsys, "flag", "A2", "--theta", "1", "--complement", "2")
    assert code == EXIT_USAGE


def test_bad_rational_is_usage_error(capsys):
    code, _, _ = run(capsys, "tke", "A1", "--theta", "", "--beta", "1,x")
    assert code == EXIT_USAGE


def test_bad_type_token_is_usage_error(capsys):
    code, _, err = run(capsys, "flag", "X9", "--theta", "")
    assert code == EXIT_USAGE
    assert err.startswith("error:")


def test_wrong_arity_is_usage_error(capsys):
    code, _, _ = run(capsys, "grlb", "A2", "--theta", "2", "--xi", "1,1")
    assert code == EXIT_USAGE


def test_nonpositive_kahler_is_usage_error(capsys):
    code, _, _ = run(capsys, "volume", "A2", "--theta", "2", "--xi", "0")
    assert code == EXIT_USAGE


def test_zero_denominator_is_usage_error(capsys):
    code, _, _ = run(capsys, "grlb", "A2", "--theta", "2", "--xi", "1/0")
    assert code == EXIT_USAGE


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0
    assert run(capsys, "flag", "--help")[0] == 0


def test_no_subcommand_is_usage_error(capsys):
    assert run(capsys)[0] == EXIT_USAGE


def test_verify_exit_code_constant():
    assert (EXIT_OK, EXIT_VERIFY, EXIT_USAGE) == (0, 1, 2)


# ---------------------------------------------------------------------------
# serialization contract


ALL_JSON_CASES = (
    ("roots", "E6"),
    ("flag", "A3", "--complement", "2,3"),
    ("tke", "A3", "--complement", "2,3", "--beta", "5/2,1"),
    ("tke", "A1", "--theta", "", "--beta", "2"),
    ("grlb", "B3", "--theta", "2,3", "--xi", "4/3"),
    ("volume", "A2", "--theta", "", "--xi", "1,2"),
    ("report", "C3", "--complement", "1,3", "--xi", "2,5/3"),
    ("sweep", "--max-rank", "2", "--samples", "2"),
    ("table", "--family", "II", "--max-rank", "6"),
)


@pytest.mark.parametrize("argv", ALL_JSON_CASES, ids=lambda a: a[0])
def test_every_command_validates_against_schema(capsys, schema, argv):
    code, doc, _ = run_json(capsys, *argv)
    assert code == EXIT_OK
    jsonschema.validate(doc, schema)
    assert set(doc) == {"command", "input", "result", "warnings"}


def test_rational_fields_match_pattern(capsys):
    _, doc, _ = run_json(capsys, "tke", "A3", "--complement", "2,3", "--beta", "5/2,1")
    for v in doc["result"]["metric"] + list(doc["result"]["margins"].values()):
        assert RATIONAL.match(v)
    _, doc, _ = run_json(capsys, "report", "A2", "--theta", "", "--xi", "1,1")
    for key in ("grlb", "volume", "r_pow_vol", "degree", "snow_bound"):
        assert RATIONAL.match(doc["result"][key])


def test_json_is_canonical(capsys):
    _, out, _ = run(capsys, "flag", "A3", "--complement", "2,3", "--json")
    doc = json.loads(out)
    assert out == json.dumps(doc, indent=2, sort_keys=True) + "\n"


def test_json_byte_identical_across_runs(capsys):
    argvs = [
        ("report", "D4", "--complement", "1,3", "--xi", "2,3/2", "--json"),
        ("sweep", "--max-rank", "2", "--seed", "9", "--json"),
        ("table", "--max-rank", "5", "--json"),
    ]
    for argv in argvs:
        _, first, _ = run(capsys, *argv)
        _, second, _ = run(capsys, *argv)
        assert first == second


def test_out_file_carries_json_even_in_text_mode(capsys, tmp_path):
    target = tmp_path / "doc.json"
    code, out, _ = run(
        capsys, "volume", "A2", "--theta", "2", "--xi", "3", "--out", str(target)
    )
    assert code == EXIT_OK
    assert "volume: 9" in out  # stdout stays text
    on_disk = target.read_text(encoding="utf-8")
    _, json_out, _ = run(capsys, "volume", "A2", "--theta", "2", "--xi", "3", "--json")
    assert on_disk == json_out


def test_units_raw_annotates_but_does_not_rescale(capsys):
    _, plain, _ = run(capsys, "flag", "A3", "--complement", "2,3")
    _, raw, _ = run(capsys, "flag", "A3", "--complement", "2,3", "--units", "raw")
    assert "koszul: [3, 2]" in plain and "* 2pi" not in plain
    assert "koszul: [3, 2] * 2pi" in raw
    _, vol_raw, _ = run(
        capsys, "volume", "A2", "--theta", "2", "--xi", "3", "--units", "raw"
    )
    assert "volume: 9 * (2pi)^2" in vol_raw
    _, doc_plain, _ = run_json(capsys, "volume", "A2", "--theta", "2", "--xi", "3")
    _, doc_raw, _ = run_json(
        capsys, "volume", "A2", "--theta", "2", "--xi", "3", "--units", "raw"
    )
    assert doc_plain["result"] == doc_raw["result"]
    assert doc_raw["input"]["units"] == "raw"


def test_console_script_entry_point_is_exposed():
    import flagtke.cli as cli

    assert callable(cli.main)
