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

"""Scenario context, report and check suite tests"""


# =============================================================================
# IMPORTS
# =============================================================================

import io
import json

from matplotlib import axes

import numpy as np

import pandas as pd

import pytest

from pytest_unordered import unordered

from reilly_verify import core
from reilly_verify.bounds import bnd_classical
from reilly_verify.bounds.core import (
    BoundReport,
    EQUALITY,
    HOLDS,
    Hypothesis,
    Tolerances,
    UNMET,
    VIOLATED,
    make_bound_report,
    make_identity_report,
)


# =============================================================================
# CONSTANTS
# =============================================================================

TOL = Tolerances()

LOOSE = Tolerances(identity_tol=5e-2, pointwise_tol=1e-1)


# =============================================================================
# FIXTURES
# =============================================================================


@pytest.fixture
def scenario_report():
    closed = Hypothesis("closed", True)
    reports = [
        make_bound_report("REILLY_1_1", 2.0, 2.01, [closed], TOL),
        make_bound_report("HEINTZE_1_6", 2.0, 3.0, [closed], TOL),
        BoundReport("THM2_CASE1", 1.0, 0.0, VIOLATED, finding=True),
        make_bound_report("GENERAL_1_7", 3.0, 2.0, [closed], TOL),
        make_identity_report("HM_INTEGRAL", 1.0, 1.0, 1.0, [closed], 1e-3),
    ]
    return core.ScenarioReport(
        scenario_id="unit_sphere",
        provenance={"shape": "round_sphere", "refinement": 3},
        tolerances=TOL,
        spectra={"closed": {"eigenvalue_1": 2.0}},
        reports=reports,
    )


# =============================================================================
# CONTEXT
# =============================================================================


def test_context_laplacian_is_reused(make_context, sphere):
    context = make_context(sphere)
    assert context.laplacian_result is context.closed_result
    assert context.S_boundary is None
    assert context.space is sphere.space


def test_context_laplacian_of_scaled_tensor(make_context, sphere):
    context = make_context(sphere, T="scaled_identity(2)")
    assert context.laplacian_result is not context.closed_result
    assert context.closed_result.eigenvalue_1 == pytest.approx(
        2 * context.laplacian_result.eigenvalue_1
    )


def test_context_centers(make_context, disk):
    context = make_context(disk, problems=("steklov",))
    assert context.S_boundary == 1.0
    assert context.center("boundary") is context.center("boundary")
    assert context.identity_center is context.center("boundary")
    np.testing.assert_allclose(context.center("domain").point, 0.0, atol=1e-8)
    with pytest.raises(ValueError):
        context.center("everything")


def test_context_drift_is_cached(make_context, sphere):
    context = make_context(sphere)
    assert context.drift(context.T) is context.drift(context.T)


def test_spectra_summary(make_context, disk):
    context = make_context(
        disk, problems=("steklov", "wentzell"), b_values=(0.5, 2)
    )
    summary = context.spectra_summary()
    assert list(summary) == ["steklov", "wentzell"]
    assert list(summary["wentzell"]) == ["b=0.5", "b=2"]
    assert summary["wentzell"]["b=2"]["eigenvalue_1"] == pytest.approx(
        3.0, rel=2e-2
    )


# =============================================================================
# REPORT
# =============================================================================


def test_report_kinds(scenario_report):
    assert len(scenario_report.bounds) == 4
    assert len(scenario_report.identities) == 1
    assert [r.check_id for r in scenario_report.findings] == ["THM2_CASE1"]
    assert [r.check_id for r in scenario_report.failures] == ["GENERAL_1_7"]
    assert scenario_report.exit_code == 1


def test_report_is_sorted(scenario_report):
    assert [r.check_id for r in scenario_report] == [
        "GENERAL_1_7",
        "HEINTZE_1_6",
        "HM_INTEGRAL",
        "REILLY_1_1",
        "THM2_CASE1",
    ]


def test_report_getitem(scenario_report):
    (report,) = scenario_report["REILLY_1_1"]
    assert report.status == EQUALITY
    with pytest.raises(KeyError):
        scenario_report["REILLY_1_3"]


def test_report_repr(scenario_report):
    assert repr(scenario_report) == (
        "ScenarioReport('unit_sphere', reports=5, findings=1, exit_code=1)"
    )


def test_findings_do_not_fail():
    finding = BoundReport("THM2_CASE1", 1.0, 0.0, VIOLATED, finding=True)
    report = core.ScenarioReport("disk", reports=[finding])
    assert report.exit_code == 0
    assert report.as_dict()["findings"] == ["THM2_CASE1"]


def test_as_dict(scenario_report):
    data = scenario_report.as_dict()
    assert list(data) == unordered(
        [
            "scenario",
            "mesh",
            "conventions",
            "tolerances",
            "spectra",
            "bounds",
            "identities",
            "findings",
            "failures",
        ]
    )
    assert data["mesh"] == {"shape": "round_sphere", "refinement": 3}
    assert data["tolerances"]["equality_tol"] == 0.02
    assert data["failures"] == ["GENERAL_1_7"]


def test_to_json_is_deterministic(scenario_report):
    text = scenario_report.to_json()
    assert text == scenario_report.to_json()
    assert text.endswith("\n")
    data = json.loads(text)
    assert list(data) == sorted(data)
    assert data["scenario"] == "unit_sphere"


def test_as_dataframe(scenario_report):
    df = scenario_report.as_dataframe()
    assert isinstance(df, pd.DataFrame)
    assert list(df.columns) == [
        "id",
        "kind",
        "variant",
        "lhs",
        "rhs",
        "slack",
        "status",
        "finding",
    ]
    assert len(df) == 5


def test_to_csv(scenario_report):
    buf = io.StringIO()
    scenario_report.to_csv(buf)
    buf.seek(0)
    df = pd.read_csv(buf)
    assert list(df.columns) == ["bound_id", "lhs", "rhs", "slack", "status"]
    row = df[df.bound_id == "HEINTZE_1_6"].iloc[0]
    assert row.slack == 1.0
    assert row.status == HOLDS


def test_to_csv_variants():
    report = core.ScenarioReport(
        "sphere",
        reports=[
            make_bound_report("REILLY_1_2", 2.0, 2.0, [], TOL, variant="r=1")
        ],
    )
    assert report.to_csv().splitlines() == [
        "bound_id,lhs,rhs,slack,status",
        "REILLY_1_2[r=1],2,2,0,equality_within_tol",
    ]


def test_plot(scenario_report):
    assert isinstance(scenario_report.plot(), axes.Axes)


# =============================================================================
# SUITE
# =============================================================================


def test_suite_unknown_id():
    with pytest.raises(core.CheckNotFound):
        core.CheckSuite(only=["REILLY_9_9"])
    with pytest.raises(core.CheckNotFound):
        core.CheckSuite(exclude=["REILLY_9_9"])


def test_suite_nothing_selected():
    with pytest.raises(core.CheckSuiteError):
        core.CheckSuite(only=["REILLY_1_1"], exclude=["REILLY_1_1"])


def test_suite_selection():
    suite = core.CheckSuite(only=["REILLY_1_1", "HM_INTEGRAL"])
    assert suite.selected_ == frozenset(["REILLY_1_1", "HM_INTEGRAL"])
    assert [type(c).__name__ for c in suite.checks_] == unordered(
        ["ClassicalEuclidean", "HsiungMinkowski"]
    )


def test_suite_check_params():
    suite = core.CheckSuite(
        only=["REILLY_1_2"], ClassicalEuclidean={"orders": (1,)}
    )
    (check,) = suite.checks_
    assert isinstance(check, bnd_classical.ClassicalEuclidean)
    assert check.params == {"orders": (1,)}
    with pytest.raises(core.CheckNotFound):
        core.CheckSuite(only=["REILLY_1_2"], TheoremTwo={})


def test_applicable(make_context, sphere, disk):
    suite = core.CheckSuite()
    closed = {type(c).__name__ for c in suite.applicable(make_context(sphere))}
    assert "ClassicalEuclidean" in closed
    assert "TheoremTwo" not in closed
    assert "BallRadius" not in closed

    steklov = make_context(disk, problems=("steklov",))
    boundary = {type(c).__name__ for c in suite.applicable(steklov)}
    assert "TheoremTwo" in boundary
    assert "TheoremThree" not in boundary
    assert "DriftLemmas" not in boundary


def test_run_sphere(make_context, sphere):
    context = make_context(sphere, tolerances=LOOSE, scenario_id="sphere")
    suite = core.CheckSuite(only=["REILLY_1_1", "HM_INTEGRAL", "PROP5"])
    report = suite.run(context)
    assert report.scenario_id == "sphere"
    assert [r.check_id for r in report] == ["HM_INTEGRAL", "REILLY_1_1"]
    assert all(r.passes for r in report)
    assert report.exit_code == 0
    assert report.spectra["closed"]["eigenvalue_1"] == pytest.approx(
        2.0, rel=2e-2
    )
    assert report.provenance["shape"] == "round_sphere"


def test_run_disk_flags_the_finding(make_context, disk):
    context = make_context(disk, problems=("steklov",))
    report = core.CheckSuite().run(context)
    (finding,) = report.findings
    assert finding.check_id == "THM2_CASE1"
    assert report["THM2_CASE2"][0].status == UNMET
    assert report["STEKLOV_EUCLIDEAN"][0].passes
    assert report.exit_code == 0
