#!/usr/bin/env python
# -*- coding: utf-8 -*-

# The MIT License (MIT)

# Copyright (c) 2017 Juan Cabral

# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:

# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.

# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

# =============================================================================
# DOC
# =============================================================================

"""Command line tests"""


# =============================================================================
# IMPORTS
# =============================================================================

import json

import pandas as pd

import pytest

from reilly_verify import cli, core, mesh as mesh_module, spectra
from reilly_verify.bounds.core import Tolerances, make_bound_report


# =============================================================================
# CONSTANTS
# =============================================================================

SPHERE = """
[scenario]
id = sphere

[shape]
name = round_sphere
refinement = 2
"""

DISK = """
[scenario]
id = disk

[shape]
name = flat_disk
refinement = 3

[problems]
steklov = yes
"""

DISK_COPY = DISK.replace("id = disk", "id = disk_copy")


# =============================================================================
# HELPERS
# =============================================================================


def outputs(directory):
    if not directory.exists():
        return []
    return sorted(p.name for p in directory.iterdir())


# =============================================================================
# GENERATE
# =============================================================================


def test_generate(tmp_path, capsys):
    path = tmp_path / "disk.wmesh"
    code = cli.main(
        ["generate", "flat_disk", "--refine", "1", "-o", str(path)]
    )
    assert code == cli.EXIT_OK
    mesh = mesh_module.read_mesh(str(path))
    assert not mesh.is_closed
    out = capsys.readouterr().out
    assert f"{mesh.num_vertices} vertices" in out
    assert "boundary: 1 loop(s)" in out


def test_generate_in_directory(tmp_path):
    code = cli.main(
        [
            "generate",
            "round_sphere",
            "--refine",
            "1",
            "--radius",
            "2",
            "--density",
            "constant",
            "--coefficients",
            "0.5",
            "--out",
            str(tmp_path),
        ]
    )
    assert code == cli.EXIT_OK
    mesh = mesh_module.read_mesh(str(tmp_path / "round_sphere.wmesh"))
    assert mesh.num_vertices == 42
    assert mesh.density[0] == 0.5


def test_generate_invalid_shape_parameter(tmp_path):
    code = cli.main(
        ["generate", "round_sphere", "--radius", "-1", "--out", str(tmp_path)]
    )
    assert code == cli.EXIT_USAGE
    assert outputs(tmp_path) == []


def test_unknown_shape():
    with pytest.raises(SystemExit):
        cli.main(["generate", "torus"])


# =============================================================================
# SPECTRUM
# =============================================================================


def test_spectrum(scenario_file, capsys):
    code = cli.main(["spectrum", "--config", scenario_file(SPHERE)])
    assert code == cli.EXIT_OK
    assert capsys.readouterr().out.startswith("closed: ")


def test_spectrum_wentzell(scenario_file, capsys):
    code = cli.main(
        [
            "spectrum",
            "--config",
            scenario_file(DISK),
            "--refine",
            "2",
            "--problem",
            "wentzell",
            "--b",
            "0.5",
            "--b",
            "2",
        ]
    )
    assert code == cli.EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert [line.split(":")[0] for line in lines] == [
        "wentzell[b=0.5]",
        "wentzell[b=2]",
    ]


def test_spectrum_dump_matrices(tmp_path, scenario_file):
    code = cli.main(
        [
            "spectrum",
            "--config",
            scenario_file(DISK),
            "--refine",
            "1",
            "--out",
            str(tmp_path / "out"),
            "--dump-matrices",
        ]
    )
    assert code == cli.EXIT_OK
    assert outputs(tmp_path / "out") == [
        "disk_boundary_mass.txt",
        "disk_boundary_stiffness.txt",
        "disk_mass.txt",
        "disk_stiffness.txt",
    ]


def test_spectrum_invalid_problem(scenario_file):
    code = cli.main(
        ["spectrum", "--config", scenario_file(SPHERE), "--problem", "steklov"]
    )
    assert code == cli.EXIT_USAGE


# =============================================================================
# CHECK
# =============================================================================


def test_check_disk_finding(tmp_path, scenario_file):
    out = tmp_path / "reports"
    code = cli.main(
        ["check", "--config", scenario_file(DISK), "--out", str(out)]
    )
    assert code == cli.EXIT_OK
    assert outputs(out) == ["disk.csv", "disk.json", "disk.meta.json"]

    report = json.loads((out / "disk.json").read_text())
    assert report["scenario"] == "disk"
    assert report["findings"] == ["THM2_CASE1"]
    assert report["failures"] == []

    df = pd.read_csv(out / "disk.csv")
    assert "THM2_CASE1" in set(df.bound_id)

    meta = json.loads((out / "disk.meta.json").read_text())
    assert meta["scenario"] == "disk"
    assert meta["problems"] == ["steklov"]
    assert meta["S"] == "identity"
    assert "created" in meta


def test_check_is_deterministic(tmp_path, scenario_file):
    path = scenario_file(DISK)
    cli.main(["check", "--config", path, "--out", str(tmp_path / "a")])
    cli.main(["check", "--config", path, "--out", str(tmp_path / "b")])
    for name in ("disk.json", "disk.csv"):
        assert (tmp_path / "a" / name).read_bytes() == (
            tmp_path / "b" / name
        ).read_bytes()


def test_check_failure(tmp_path, scenario_file, monkeypatch, caplog):
    def violated(config, mesh=None):
        report = make_bound_report("GENERAL_1_7", 3.0, 2.0, [], Tolerances())
        return core.ScenarioReport(config.scenario_id, reports=[report])

    monkeypatch.setattr(cli, "run_scenario", violated)
    out = tmp_path / "reports"
    code = cli.main(
        ["check", "--config", scenario_file(DISK), "--out", str(out)]
    )
    assert code == cli.EXIT_FAILED
    report = json.loads((out / "disk.json").read_text())
    assert report["failures"] == ["GENERAL_1_7"]
    assert "disk: GENERAL_1_7 violated" in caplog.text


def test_check_paper_suite(tmp_path, monkeypatch):
    seen = []

    def passing(config, mesh=None):
        seen.append((config.scenario_id, config.refinement))
        report = make_bound_report("REILLY_1_1", 1.0, 2.0, [], Tolerances())
        return core.ScenarioReport(config.scenario_id, reports=[report])

    monkeypatch.setattr(cli, "run_scenario", passing)
    out = tmp_path / "reports"
    code = cli.main(
        ["check", "--suite", "paper", "--refine", "1", "--out", str(out)]
    )
    assert code == cli.EXIT_OK
    assert len(seen) == 12
    assert {refinement for _, refinement in seen} == {1}
    assert len(outputs(out)) == 36


def test_check_many_scenarios(tmp_path, scenario_file):
    out = tmp_path / "reports"
    code = cli.main(
        [
            "check",
            "--config",
            scenario_file(DISK, "disk.ini"),
            "--config",
            scenario_file(DISK_COPY, "disk_copy.ini"),
            "--out",
            str(out),
            "--workers",
            "2",
        ]
    )
    assert code == cli.EXIT_OK
    assert len(outputs(out)) == 6


def test_check_negative_b_writes_nothing(tmp_path, scenario_file):
    out = tmp_path / "reports"
    text = DISK + "wentzell = -1\n"
    code = cli.main(
        ["check", "--config", scenario_file(text), "--out", str(out)]
    )
    assert code == cli.EXIT_USAGE
    assert outputs(out) == []


def test_check_corrupt_mesh_writes_nothing(tmp_path, scenario_file):
    (tmp_path / "bad.wmesh").write_text("WMESH\n")
    out = tmp_path / "reports"
    good = scenario_file(DISK, "disk.ini")
    bad = scenario_file("[scenario]\nid = bad\n[shape]\nfile = bad.wmesh\n")
    code = cli.main(
        ["check", "--config", good, "--config", bad, "--out", str(out)]
    )
    assert code == cli.EXIT_USAGE
    assert outputs(out) == []


def test_check_duplicated_ids(tmp_path, scenario_file):
    path = scenario_file(DISK)
    code = cli.main(
        ["check", "--config", path, "--config", path, "--out", str(tmp_path)]
    )
    assert code == cli.EXIT_USAGE


def test_check_solver_breakdown(tmp_path, scenario_file, monkeypatch):
    def broken(config, mesh=None):
        raise spectra.SolverConvergenceError("no convergence", residual=1.0)

    monkeypatch.setattr(cli, "run_scenario", broken)
    out = tmp_path / "reports"
    code = cli.main(
        ["check", "--config", scenario_file(DISK), "--out", str(out)]
    )
    assert code == cli.EXIT_FAILED
    assert outputs(out) == []


def test_check_requires_a_source():
    with pytest.raises(SystemExit):
        cli.main(["check"])
