import json
import subprocess
import sys

import pytest

from semifock.cli import main, run_scenario_data, report_to_json

FOCK_SCENARIO = {
    "kind": "fock-verify",
    "module": {"domain": "Z", "free_rank": 1, "torsion": []},
    "module_box": 16,
    "semigroup_bound": 6,
    "m_radius": 1,
    "r_sample": [1, -1, 2],
    "seed": 0,
}

SUBMODULE_SCENARIO = {
    "kind": "submodule-test",
    "module": {"domain": "Zi", "free_rank": 2, "torsion": [],
               "i_action": [[0, -1], [1, 0]]},
    "subgroup": [[1, 0]],
    "r_sample": [[0, 1], [1, 1]],
    "coset_box": 6,
}

ENVELOPE_SCENARIO = {
    "kind": "envelope",
    "module": {"domain": "Z", "free_rank": 2, "torsion": []},
    "samples": 5,
}

GAUSSIAN_ENVELOPE_SCENARIO = {
    "kind": "envelope",
    "module": {"domain": "Zi", "free_rank": 2, "torsion": [],
               "i_action": [[0, -1], [1, 0]]},
    "samples": 5,
}

LOCALIZE_SCENARIO = {
    "kind": "envelope",
    "module": {"domain": "Z", "free_rank": 1, "torsion": [6]},
}

TRIVIALIZE_SCENARIO = {
    "kind": "trivialize",
    "module": {"domain": "Z", "free_rank": 1, "torsion": []},
    "subgroup": [[5]],
    "rotation": [1, 4],
    "counterexample": True,
}

PRODUCT_SCENARIO = {
    "kind": "product-decomp",
    "module": {"domain": "Z", "free_rank": 0, "torsion": [5]},
    "samples": 25,
    "diagonal_pairs": 10,
}

DYNAMICS_SCENARIO = {
    "kind": "dynamics",
    "system": {"size": 4, "sigma": [1, 0, 3, 2]},
    "expect": {"components": 2, "generator_count": 2,
               "certified": True, "dimension": 4},
}

POLY_SCENARIO = {
    "kind": "poly-example",
    "degree_cap": 8,
    "depth": 3,
    "expect_pivots": [0, 1, 2, 4, 8],
    "expect_member": [[0, 0, 0, 0, 1]],
    "expect_not_member": [[0, 0, 0, 1]],
}

ALL_SCENARIOS = [
    FOCK_SCENARIO,
    SUBMODULE_SCENARIO,
    ENVELOPE_SCENARIO,
    GAUSSIAN_ENVELOPE_SCENARIO,
    LOCALIZE_SCENARIO,
    TRIVIALIZE_SCENARIO,
    PRODUCT_SCENARIO,
    DYNAMICS_SCENARIO,
    POLY_SCENARIO,
]


@pytest.mark.parametrize("scenario", ALL_SCENARIOS, ids=lambda s: s["kind"])
def test_scenarios_pass_in_process(scenario):
    report = run_scenario_data(scenario)
    assert report["pass"], report
    assert report["report_version"] == 1


@pytest.mark.parametrize("scenario", ALL_SCENARIOS, ids=lambda s: s["kind"])
def test_exit_zero_end_to_end_per_kind(scenario, tmp_path):
    scen = tmp_path / "scenario.json"
    scen.write_text(json.dumps(scenario))
    out = tmp_path / "report.json"
    assert main(["run", str(scen), "--json", str(out), "--quiet"]) == 0
    assert json.loads(out.read_text())["pass"] is True


def test_submodule_scenario_reports_disagreeing_verdicts():
    report = run_scenario_data(SUBMODULE_SCENARIO)
    assert report["is_submodule"] is False
    assert report["covariance"] is False
    assert report["agree"] is True


@pytest.mark.parametrize("scenario", ALL_SCENARIOS, ids=lambda s: s["kind"])
def test_reports_are_deterministic(scenario):
    first = report_to_json(run_scenario_data(scenario))
    second = report_to_json(run_scenario_data(scenario))
    assert first.encode() == second.encode()


def test_exit_codes(tmp_path):
    good = tmp_path / "good.json"
    good.write_text(json.dumps(DYNAMICS_SCENARIO))
    assert main(["run", str(good), "--quiet"]) == 0

    failing = dict(DYNAMICS_SCENARIO)
    failing["expect"] = {"components": 3}
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(failing))
    assert main(["run", str(bad), "--quiet"]) == 1

    malformed = tmp_path / "broken.json"
    malformed.write_text("{not json")
    assert main(["run", str(malformed), "--quiet"]) == 2

    unknown = tmp_path / "unknown.json"
    unknown.write_text(json.dumps({"kind": "nope"}))
    assert main(["run", str(unknown), "--quiet"]) == 2

    bad_params = tmp_path / "bad_params.json"
    bad_params.write_text(json.dumps({"kind": "dynamics"}))  # missing system
    assert main(["run", str(bad_params), "--quiet"]) == 2

    bad_module = tmp_path / "bad_module.json"
    bad_module.write_text(
        json.dumps({"kind": "envelope", "module": {"domain": "Z", "torsion": [4, 6]}})
    )
    assert main(["run", str(bad_module), "--quiet"]) == 2


def test_json_report_written_and_stable(tmp_path):
    scen = tmp_path / "scen.json"
    scen.write_text(json.dumps(POLY_SCENARIO))
    out1 = tmp_path / "r1.json"
    out2 = tmp_path / "r2.json"
    assert main(["run", str(scen), "--json", str(out1), "--quiet"]) == 0
    assert main(["run", str(scen), "--json", str(out2), "--quiet"]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    payload = json.loads(out1.read_text())
    assert payload["pass"] is True
    assert payload["basis_pivots"] == [0, 1, 2, 4, 8]


def test_toml_scenario_accepted(tmp_path):
    scen = tmp_path / "scen.toml"
    scen.write_text(
        "\n".join(
            [
                'kind = "dynamics"',
                "[system]",
                "size = 4",
                "sigma = [1, 0, 3, 2]",
            ]
        )
    )
    assert main(["run", str(scen), "--quiet"]) == 0


def test_parallel_multiple_scenarios(tmp_path):
    paths = []
    for i, scenario in enumerate([DYNAMICS_SCENARIO, POLY_SCENARIO]):
        p = tmp_path / f"s{i}.json"
        p.write_text(json.dumps(scenario))
        paths.append(str(p))
    out = tmp_path / "combined.json"
    code = main(["run", *paths, "--parallel", "--json", str(out), "--quiet"])
    assert code == 0
    payload = json.loads(out.read_text())
    assert len(payload["reports"]) == 2


def test_list_suites(capsys):
    assert main(["list-suites"]) == 0
    human = capsys.readouterr().out
    assert main(["list-suites", "--json"]) == 0
    catalog = json.loads(capsys.readouterr().out)
    assert len(catalog) == 7
    for kind in catalog:
        assert kind in human


def test_fock_scenario_matrix_dump(tmp_path):
    dump_path = tmp_path / "op.txt"
    scenario = dict(FOCK_SCENARIO)
    scenario["dump_operator"] = {"kind": "S", "param": 2, "path": str(dump_path)}
    report = run_scenario_data(scenario)
    assert report["pass"]
    lines = dump_path.read_text().strip().splitlines()
    assert lines
    for line in lines:
        row, col, re, im = line.split()
        assert float(re) == 1.0 and float(im) == 0.0


def test_cli_subprocess_end_to_end(tmp_path):
    scen = tmp_path / "scen.json"
    scen.write_text(json.dumps(DYNAMICS_SCENARIO))
    out = tmp_path / "report.json"
    proc = subprocess.run(
        [sys.executable, "-m", "semifock", "run", str(scen), "--json", str(out)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert "[PASS] dynamics" in proc.stdout
    assert json.loads(out.read_text())["pass"] is True


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["run"])  # missing scenario path
    assert exc.value.code == 2
