"""End-to-end tests for the ambitlab command line.

Exit codes: 0 when every check passes, 1 when one fails, 2 when the inputs
cannot be used.
"""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from ambitlab.cli import main


def _write(path: Path, data) -> Path:
    path.write_text(json.dumps(data), encoding="utf-8")
    return path


@pytest.fixture
def nat_measures(tmp_path: Path) -> tuple[Path, Path]:
    mu = _write(tmp_path / "mu.json", {"semigroup": "nat-plus", "terms": [["0", "1"], ["1", "2"]]})
    nu = _write(tmp_path / "nu.json", {"semigroup": "nat-plus", "terms": [["1", "3"]]})
    return mu, nu


def test_no_arguments_shows_usage(capsys):
    assert main([]) == 0
    assert "ambit build" in capsys.readouterr().err


def test_unknown_command(capsys):
    assert main(["frobnicate"]) == 2
    assert "unknown command" in capsys.readouterr().err


def test_convolve_to_stdout(nat_measures, capsys):
    assert main(["convolve", *map(str, nat_measures)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["terms"] == [["1", "3"], ["2", "6"]]


def test_convolve_to_file_round_trips(nat_measures, tmp_path: Path, capsys):
    out = tmp_path / "product.json"
    assert main(["convolve", *map(str, nat_measures), "--out", str(out)]) == 0
    report = capsys.readouterr().out
    assert "CHECK round-trip PASS" in report
    assert json.loads(out.read_text(encoding="utf-8"))["terms"] == [["1", "3"], ["2", "6"]]


def test_convolve_output_is_deterministic(nat_measures, capsys):
    main(["convolve", *map(str, nat_measures)])
    first = capsys.readouterr().out
    main(["convolve", *map(str, nat_measures)])
    assert capsys.readouterr().out == first


def test_norm(tmp_path: Path, capsys):
    data = {"semigroup": "nat-plus", "terms": [["0", "2"], ["1", "-3"]]}
    path = _write(tmp_path / "m.json", data)
    assert main(["norm", str(path)]) == 0
    assert capsys.readouterr().out == "CHECK norm INFO 5\nCHECK positive INFO false\n"


def test_ueb_distance_discrete(tmp_path: Path, capsys):
    x = _write(tmp_path / "x.json", {"semigroup": "nat-plus", "terms": [["0", "1"]]})
    y = _write(tmp_path / "y.json", {"semigroup": "nat-plus", "terms": [["1", "1"]]})
    assert main(["ueb-distance", str(x), str(y)]) == 0
    assert capsys.readouterr().out == (
        "CHECK ueb-distance INFO 1\nCHECK norm-bound PASS 1 <= 2 = norm(mu - nu)\n"
    )


def test_ueb_distance_table_metric(tmp_path: Path, capsys):
    x = _write(tmp_path / "x.json", {"semigroup": "nat-plus", "terms": [["0", "1"]]})
    y = _write(tmp_path / "y.json", {"semigroup": "nat-plus", "terms": [["1", "1"]]})
    d = _write(tmp_path / "d.json", {"kind": "table", "window": [0, 1], "matrix": [[0, 3], [3, 0]]})
    assert main(["ueb-distance", str(x), str(y), "--metric", str(d)]) == 0
    assert "CHECK ueb-distance INFO 2\n" in capsys.readouterr().out


def test_check_semigroup_right_zero_fails_property_1(capsys):
    assert main(["check-semigroup", "--semigroup", "right-zero"]) == 1
    out = capsys.readouterr().out
    assert "CHECK property-1 FAIL property (1) fails on window" in out
    assert "qualifying set {}" in out


def test_check_semigroup_left_zero_fails_property_2(capsys):
    assert main(["check-semigroup", "--semigroup", "left-zero:5"]) == 1
    out = capsys.readouterr().out
    assert "CHECK property-1 PASS" in out
    assert "CHECK property-2 FAIL" in out
    assert "fills every window" in out


def test_check_semigroup_passes_on_naturals(capsys):
    assert main(["check-semigroup", "--semigroup", "nat-plus", "--window", "10"]) == 0
    out = capsys.readouterr().out
    assert "CHECK associativity INFO holds by the defining law of nat-plus" in out
    assert "10 of 10 elements separate F = {0, 1}" in out


def test_check_semigroup_cayley_file(tmp_path: Path, capsys):
    path = _write(tmp_path / "z2.json", {"kind": "cayley", "table": [[0, 1], [1, 0]]})
    assert main(["check-semigroup", "--semigroup", str(path)]) == 0
    out = capsys.readouterr().out
    assert "CHECK associativity PASS all 8 triples" in out
    assert "group true" in out


def test_non_associative_file_is_an_input_error(tmp_path: Path, capsys):
    path = _write(tmp_path / "bad.json", {"kind": "cayley", "table": [[1, 0], [0, 0]]})
    assert main(["check-semigroup", "--semigroup", str(path)]) == 2
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "(0,0,1)" in captured.err


def test_orbit_trace(tmp_path: Path, capsys):
    f = _write(tmp_path / "f.json", {"values": {"3": "1"}})
    argv = ["orbit-trace", "--semigroup", "nat-plus", "--function", str(f), "--window", "6"]
    assert main(argv) == 0
    assert capsys.readouterr().out.splitlines() == [
        "CHECK orbit-trace INFO 3 distinct vectors on F = {0, 1} over 6 translates",
        "CHECK vector INFO (0, 0) first at x = 0",
        "CHECK vector INFO (0, 1) first at x = 2",
        "CHECK vector INFO (1, 0) first at x = 3",
    ]


def test_ambit_build_and_verify_free2(tmp_path: Path, capsys):
    out = tmp_path / "witness.json"
    argv = ["ambit", "build", "--semigroup", "free2", "--count", "100", "--budget", "1000000"]
    assert main([*argv, "--out", str(out)]) == 0
    report = capsys.readouterr().out
    assert "CHECK approximation PASS all 100 neighborhoods matched exactly" in report
    assert out.exists()

    assert main(["ambit", "verify", str(out)]) == 0
    verified = capsys.readouterr().out
    assert "CHECK disjoint PASS" in verified
    assert "FAIL" not in verified

    assert main([*argv, "--out", str(out)]) == 0
    assert capsys.readouterr().out == report


def test_ambit_build_right_zero_exhausts_budget(tmp_path: Path, capsys):
    argv = [
        "ambit",
        "build",
        "--semigroup",
        "right-zero",
        "--count",
        "5",
        "--max-window",
        "3",
        "--grid",
        "1",
        "--budget",
        "50",
        "--out",
        str(tmp_path / "w.json"),
    ]
    assert main(argv) == 1
    out = capsys.readouterr().out
    assert "CHECK greedy FAIL no admissible element for neighborhood 3 within 50 candidates" in out
    assert not (tmp_path / "w.json").exists()


def test_ambit_verify_tampered_witness(tmp_path: Path, capsys):
    witness = {
        "semigroup": {"kind": "free", "generators": ["a", "b"]},
        "neighborhoods": [
            {"F": ["a"], "h": {"a": "1/2"}, "eps": "1/2"},
            {"F": ["a"], "h": {"a": "1/4"}, "eps": "1/4"},
        ],
        "selections": ["a", "a"],
        "f": {"values": {"aa": "1/2"}, "default": "0"},
    }
    path = _write(tmp_path / "w.json", witness)
    assert main(["ambit", "verify", str(path)]) == 1
    assert "CHECK disjoint FAIL neighborhoods 1 and 2 both claim aa" in capsys.readouterr().out


def test_ambit_needs_subcommand(capsys):
    assert main(["ambit"]) == 2
    assert "needs a subcommand" in capsys.readouterr().err


def test_props_selected_suites(capsys):
    argv = ["props", "test", "--suite", "equicontinuity", "--suite", "commutativity"]
    assert main(argv) == 0
    lines = capsys.readouterr().out.splitlines()
    assert [line.split()[1:3] for line in lines] == [
        ["commutativity", "PASS"],
        ["equicontinuity", "PASS"],
    ]


def test_non_positive_option_is_rejected(capsys):
    assert main(["ambit", "build", "--semigroup", "free2", "--count", "0"]) == 2
    assert "--count" in capsys.readouterr().err


def test_missing_file_is_an_input_error(tmp_path: Path, capsys):
    assert main(["norm", str(tmp_path / "absent.json")]) == 2
    assert "error" in capsys.readouterr().err


def test_ambit_verify_uncovered_point_is_a_failure(tmp_path: Path, capsys):
    out = tmp_path / "witness.json"
    assert main(["ambit", "build", "--semigroup", "free2", "--count", "3", "--out", str(out)]) == 0
    capsys.readouterr()
    witness = json.loads(out.read_text(encoding="utf-8"))
    dropped = next(iter(witness["f"]["values"]))
    del witness["f"]["values"][dropped]
    witness["f"]["default"] = None
    _write(out, witness)

    assert main(["ambit", "verify", str(out)]) == 1
    captured = capsys.readouterr()
    assert captured.err == ""
    assert "CHECK formula FAIL default is undefined, expected 0" in captured.out
    assert f"CHECK approximation FAIL f undefined at {dropped} in neighborhood 1" in captured.out


def test_check_semigroup_trivial_group_skips_property_2(tmp_path: Path, capsys):
    path = _write(tmp_path / "trivial.json", {"kind": "cayley", "table": [[0]]})
    assert main(["check-semigroup", "--semigroup", str(path)]) == 0
    out = capsys.readouterr().out
    expected = "CHECK property-2 INFO precondition card P < card X not met (card P = 1, card X = 1)"
    assert expected in out
    assert "FAIL" not in out
