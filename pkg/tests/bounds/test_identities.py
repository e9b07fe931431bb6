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

"""Integral identities and center of mass lemmas tests"""


# =============================================================================
# IMPORTS
# =============================================================================

import numpy as np

import pytest

from reilly_verify import curvature
from reilly_verify.bounds import core, idt_identities


# =============================================================================
# CONSTANTS
# =============================================================================

#: the discrete curvature of the shared meshes is accurate to about 1e-2
LOOSE = core.Tolerances(identity_tol=5e-2, pointwise_tol=1e-1)

IDS = [
    "HM_INTEGRAL",
    "HM_WEIGHTED_X",
    "HM_POINTWISE",
    "LEMSD",
    "LEM31",
    "LEM32",
    "PROP5",
]


# =============================================================================
# HELPERS
# =============================================================================


def checks(mesh, T=None, tolerances=LOOSE, **kwargs):
    field = curvature.second_fundamental_form(mesh)
    T = curvature.identity_tensor(mesh) if T is None else T
    reports = idt_identities.identity_checks(
        mesh, T, field, tolerances=tolerances, **kwargs
    )
    return {r.identity_id: r for r in reports}


# =============================================================================
# CLOSED
# =============================================================================


def test_ids(sphere):
    assert list(checks(sphere)) == IDS


def test_unit_sphere(sphere):
    reports = checks(sphere)
    for identity_id in IDS[:5]:
        report = reports[identity_id]
        assert report.passes, report
        assert abs(report.normalized_residual) < LOOSE.identity_tol
    assert reports["LEM32"].status == core.UNMET
    assert reports["PROP5"].status == core.UNMET


def test_unit_sphere_values(sphere):
    reports = checks(sphere)
    hm = reports["HM_INTEGRAL"]
    assert hm.lhs == pytest.approx(8 * np.pi, rel=2e-2)
    assert hm.rhs == pytest.approx(8 * np.pi, rel=5e-2)
    lem31 = reports["LEM31"]
    assert lem31.lhs == pytest.approx(1.0, rel=5e-2)
    assert lem31.rhs == pytest.approx(1.0, rel=1e-6)
    assert reports["HM_WEIGHTED_X"].rhs == 0.0
    assert reports["HM_POINTWISE"].locus.startswith("vertex ")


def test_geodesic_sphere_in_s3(s3_sphere):
    reports = checks(s3_sphere)
    lem32 = reports["LEM32"]
    # both sides are 1 - cos(pi / 6)^2
    assert lem32.lhs == pytest.approx(0.25, rel=5e-2)
    assert lem32.rhs == pytest.approx(0.25, rel=1e-6)
    assert lem32.passes
    assert reports["LEM31"].status == core.UNMET
    assert reports["HM_INTEGRAL"].passes


def test_geodesic_sphere_in_h3(h3_sphere):
    reports = checks(h3_sphere)
    for identity_id in ("HM_INTEGRAL", "HM_WEIGHTED_X", "LEMSD", "LEM31"):
        assert reports[identity_id].passes, reports[identity_id]


def test_separate_tensor_of_the_lemmas(sphere):
    S = curvature.identity_tensor(sphere, 2.0)
    reports = checks(sphere, S=S)
    assert reports["LEMSD"].lhs == pytest.approx(
        2 * checks(sphere)["LEMSD"].lhs
    )
    assert reports["LEM31"].passes


def test_indefinite_tensor(sphere):
    T = curvature.identity_tensor(sphere, -1.0)
    with pytest.raises(curvature.NotPositiveDefiniteError):
        checks(sphere, T=T)


# =============================================================================
# BOUNDARY
# =============================================================================


def test_flat_disk(disk):
    reports = checks(disk)
    for identity_id in ("HM_INTEGRAL", "HM_WEIGHTED_X", "LEMSD", "LEM31"):
        assert reports[identity_id].status == core.UNMET
    pointwise = reports["HM_POINTWISE"]
    # div X = 2 = tr(Id) at every interior vertex of a flat domain
    assert pointwise.status == core.EQUALITY
    assert abs(pointwise.normalized_residual) < 1e-10
    assert pointwise.metadata["interior_vertices"] == (
        disk.num_vertices - len(disk.boundary_vertices)
    )
    assert reports["PROP5"].status == core.UNMET


def test_ball_radius_of_a_cap(s3_cap):
    reports = checks(s3_cap, tolerances=core.Tolerances(identity_tol=1e-1))
    prop5 = reports["PROP5"]
    # s(pi / 6)^2 (|H|^2 + 1) = (3 + 1) / 4
    assert prop5.lhs == 1.0
    assert prop5.rhs == pytest.approx(1.0, rel=1e-1)
    assert prop5.status in (core.EQUALITY, core.HOLDS)
    assert prop5.metadata["R"] == pytest.approx(np.pi / 6, rel=1e-6)


# =============================================================================
# CHECKS
# =============================================================================


def test_context_checks(make_context, sphere):
    context = make_context(sphere, tolerances=LOOSE)
    hm = idt_identities.HsiungMinkowski().run(context)
    lemmas = idt_identities.DriftLemmas().run(context)
    assert [r.identity_id for r in hm + lemmas] == IDS[:6]
    assert all(r.passes for r in hm + lemmas[:2])


def test_ball_radius_check(make_context, disk):
    context = make_context(disk, problems=("steklov",))
    (report,) = idt_identities.BallRadius().run(context)
    assert report.status == core.UNMET
    np.testing.assert_allclose(
        report.metadata["center_of_mass"], 0.0, atol=1e-8
    )
