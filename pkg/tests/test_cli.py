"""End-to-end command line behavior through dispatch().

Covers the documented exit-code contract (0 success, 1 domain error
with JSON on stderr, 2 usage error), environment-variable overrides
and their precedence below explicit flags, format selection, and the
byte-identical-output guarantee for repeated identical configs.
"""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from rootcensus.cli import dispatch


def _run(capsys, argv):
    code = dispatch(argv)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def _run_json(capsys, argv):
    code, out, err = _run(capsys, argv)
    assert code == 0, err
    return json.loads(out)


# -- exit code contract ---------------------------------------------------------


def test_domain_error_exit_1_with_json_stderr(capsys):
    code, out, err = _run(capsys, ["roots", "--poly", "0,0"])
    assert code == 1
    blob = json.loads(err)
    assert blob["error"] == "ZeroPolynomial"
    assert blob["message"]


def test_usage_error_exit_2(capsys):
    assert dispatch(["roots"]) == 2  # --poly is required
    assert dispatch(["bogus-subcommand"]) == 2
    assert dispatch([]) == 2
    capsys.readouterr()


def test_bad_coefficient_string_exit_1(capsys):
    code, _, err = _run(capsys, ["classify", "--poly", "1,x,3"])
    assert code == 1
    assert json.loads(err)["error"] == "BadParameters"


# -- roots ------------------------------------------------------------------------


def test_roots_output_shape(capsys):
    blob = _run_json(capsys, ["roots", "--poly", "1,0,-2"])
    assert blob["status"] == "CERTIFIED"
    assert blob["config"]["format"] == "json"
    assert "version" in blob
    disks = blob["roots"]
    assert len(disks) == 2
    assert sorted(d["multiplicity"] for d in disks) == [1, 1]
    assert all(d["is_real"] for d in disks)
    res = sorted(d["center_re"] for d in disks)
    assert abs(res[0] + 2**0.5) < 1e-9 and abs(res[1] - 2**0.5) < 1e-9


def test_roots_csv_format_rejected(capsys):
    code, _, err = _run(capsys, ["roots", "--poly", "1,0,-2", "--format", "csv"])
    assert code == 1
    assert json.loads(err)["error"] == "BadParameters"


# -- classify --------------------------------------------------------------------------


def test_classify_profile_known(capsys):
    blob = _run_json(capsys, ["classify", "--poly", "1,0,1", "--profile"])
    assert blob["k_max"] == 2 and blob["k_min"] == 2
    assert blob["dominant"] is False


def test_classify_all_sections(capsys):
    blob = _run_json(capsys, ["classify", "--poly", "1,0,-5,0,4", "--all"])
    assert (blob["r"], blob["s"]) == (4, 0)
    assert blob["irreducible"] is False
    got = {(f["coeffs"], f["multiplicity"]) for f in blob["factors"]}
    assert got == {("1,-2", 1), ("1,-1", 1), ("1,1", 1), ("1,2", 1)}
    assert blob["multiplicative_relation"] is True  # 1*(-2) = (-1)*2


def test_classify_default_is_all(capsys):
    a = _run_json(capsys, ["classify", "--poly", "1,1,1"])
    b = _run_json(capsys, ["classify", "--poly", "1,1,1", "--all"])
    a.pop("runtime_seconds", None)
    b.pop("runtime_seconds", None)
    assert a == b


def test_classify_sn_verdicts(capsys):
    blob = _run_json(capsys, ["classify", "--poly", "1,0,-1,-1", "--sn"])
    assert blob["sn_verdict"] == "CERTIFIED_SN"
    assert blob["sn_witnesses"]
    blob = _run_json(capsys, ["classify", "--poly", "1,0,-1", "--sn"])
    assert blob["sn_verdict"] == "UNDECIDED"  # reducible: no certificate


# -- census ------------------------------------------------------------------------------


def test_census_monic_known(capsys):
    blob = _run_json(
        capsys, ["census", "--n", "2", "--height", "1", "--monic", "--counters", "A"]
    )
    assert blob["counters"]["A"] == {"1": 4, "2": 5}
    assert blob["totals"] == 9


def test_census_counter_alias_E(capsys):
    blob = _run_json(
        capsys,
        ["census", "--n", "2", "--height", "1", "--monic", "--counters", "A,E"],
    )
    assert "E_upper" in blob["counters"]


def test_census_csv(capsys):
    code, out, _ = _run(
        capsys,
        ["census", "--n", "2", "--height", "1", "--monic", "--counters", "A",
         "--format", "csv"],
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "n,H,family,label,count"
    assert '2,1,A,"1",4' in lines


def test_census_byte_identical_runs(capsys):
    argv = ["census", "--n", "2", "--height", "2", "--counters", "A*"]
    _, out1, _ = _run(capsys, argv)
    _, out2, _ = _run(capsys, argv)
    strip = lambda s: [l for l in s.split("\n") if "runtime_seconds" not in l]
    assert strip(out1) == strip(out2)


def test_census_out_file(capsys, tmp_path):
    path = tmp_path / "table.json"
    code, out, _ = _run(
        capsys,
        ["census", "--n", "2", "--height", "1", "--monic", "--counters", "A",
         "--out", str(path)],
    )
    assert code == 0 and out == ""
    blob = json.loads(path.read_text())
    assert blob["counters"]["A"] == {"1": 4, "2": 5}


# -- environment precedence -------------------------------------------------------------------


def test_env_sets_format(capsys, monkeypatch):
    monkeypatch.setenv("ROOTCENSUS_FORMAT", "csv")
    code, out, _ = _run(
        capsys, ["census", "--n", "2", "--height", "1", "--monic", "--counters", "A"]
    )
    assert code == 0
    assert out.startswith("n,H,family,label,count")


def test_flag_beats_env(capsys, monkeypatch):
    monkeypatch.setenv("ROOTCENSUS_FORMAT", "csv")
    blob = _run_json(
        capsys,
        ["census", "--n", "2", "--height", "1", "--monic", "--counters", "A",
         "--format", "json"],
    )
    assert blob["config"]["format"] == "json"


def test_env_seed_recorded_in_config(capsys, monkeypatch):
    monkeypatch.setenv("ROOTCENSUS_SEED", "99")
    blob = _run_json(
        capsys,
        ["generate", "--family", "theorem31", "--n", "2", "--height", "30",
         "--count", "5"],
    )
    assert blob["config"]["seed"] == 99


# -- generate -----------------------------------------------------------------------------------


def test_generate_theorem31_count(capsys):
    blob = _run_json(
        capsys,
        ["generate", "--family", "theorem31", "--n", "2", "--height", "100",
         "--count", "1000"],
    )
    assert blob["count"] == 380
    assert all("," in m for m in blob["members"])


def test_generate_text_format_is_plain_lines(capsys):
    code, out, _ = _run(
        capsys,
        ["generate", "--family", "theorem31", "--n", "2", "--height", "30",
         "--count", "4", "--format", "text"],
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 4
    for line in lines:
        parts = line.split(",")
        assert parts[0] == "1" and len(parts) == 3


def test_generate_near_target_with_validation(capsys):
    blob = _run_json(
        capsys,
        ["generate", "--family", "near-target", "--target", "0,1;0,-1",
         "--height", "40", "--count", "25", "--validate", "b*=2,2"],
    )
    assert blob["count"] == 25
    assert blob["validation"]["pass_fraction"] == 1.0


def test_generate_validate_predicates(capsys):
    blob = _run_json(
        capsys,
        ["generate", "--family", "a3star3", "--n", "3", "--height", "5",
         "--count", "20", "--validate", "k_max=3"],
    )
    assert blob["validation"]["pass_fraction"] == 1.0
    code, _, err = _run(
        capsys,
        ["generate", "--family", "a3star3", "--n", "3", "--height", "5",
         "--validate", "nonsense=1"],
    )
    assert code == 1
    assert json.loads(err)["error"] == "BadParameters"


def test_generate_near_target_needs_target(capsys):
    code, _, err = _run(
        capsys, ["generate", "--family", "near-target", "--height", "40"]
    )
    assert code == 1
    assert json.loads(err)["error"] == "BadParameters"


# -- fit ------------------------------------------------------------------------------------------


def test_fit_points(capsys):
    blob = _run_json(capsys, ["fit", "--points", "10:100,20:400,40:1600"])
    assert abs(blob["slope"] - 2.0) < 1e-9
    assert blob["residual"] < 1e-9
    assert len(blob["points"]) == 3


def test_fit_tables(capsys, tmp_path):
    paths = []
    for h in (1, 2, 3):
        code, out, _ = _run(
            capsys, ["census", "--n", "2", "--height", str(h), "--counters", "A*"]
        )
        assert code == 0
        p = tmp_path / ("t%d.json" % h)
        p.write_text(out)
        paths.append(str(p))
    blob = _run_json(
        capsys,
        ["fit", "--tables", *paths, "--family", "A*", "--label", "1"],
    )
    assert len(blob["points"]) == 3
    assert 2.0 < blob["slope"] < 3.5


def test_fit_too_few_points(capsys):
    code, _, err = _run(capsys, ["fit", "--points", "10:100,20:400"])
    assert code == 1
    assert json.loads(err)["error"] == "InsufficientPoints"


# -- verify ------------------------------------------------------------------------------------------


def test_verify_single_criterion(capsys):
    blob = _run_json(capsys, ["verify", "--suite", "quick", "--criteria", "1"])
    assert len(blob["results"]) == 1
    assert blob["results"][0]["status"] == "PASS"
    assert blob["suite_exit"] == 0


def test_verify_text_format(capsys):
    code, out, _ = _run(
        capsys, ["verify", "--suite", "quick", "--criteria", "1,9", "--format", "text"]
    )
    assert code == 0
    assert "PASS" in out


# -- console script ------------------------------------------------------------------------------------


def test_console_script_smoke():
    proc = subprocess.run(
        [sys.executable, "-m", "rootcensus.cli", "classify", "--poly", "1,0,1",
         "--profile"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["k_max"] == 2
