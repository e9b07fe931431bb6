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

"""Model space tests"""


# =============================================================================
# IMPORTS
# =============================================================================

import numpy as np

import pytest

from reilly_verify import spaceform
from reilly_verify.spaceform import SpaceForm


# =============================================================================
# HELPERS
# =============================================================================


def hyperbolic_point(t, delta=-1.0):
    kappa = np.sqrt(-delta)
    return np.array(
        [np.cosh(kappa * t) / kappa, np.sinh(kappa * t) / kappa, 0, 0]
    )


def sphere_point(t, delta=1.0):
    kappa = np.sqrt(delta)
    return np.array(
        [np.cos(kappa * t) / kappa, np.sin(kappa * t) / kappa, 0, 0]
    )


# =============================================================================
# PROFILES
# =============================================================================


def test_radial_profile_euclidean():
    assert spaceform.radial_profile(0.0, 1.7) == (1.7, 1.0)


@pytest.mark.parametrize("delta", [1.0, -1.0, 0.3, -4.0])
def test_radial_profile_pythagorean_identity(delta):
    r = np.linspace(0, 1.0, 50)
    s, c = spaceform.radial_profile(delta, r)
    np.testing.assert_allclose(c ** 2 + delta * s ** 2, 1.0, atol=1e-12)


def test_radial_profile_hyperbolic_values():
    s, c = spaceform.radial_profile(-1.0, 1.0)
    np.testing.assert_allclose([s, c], [np.sinh(1.0), np.cosh(1.0)])


def test_radial_profile_series_is_continuous():
    r = np.array([0.0, 1e-6, 1e-5, 1e-3])
    s, c = spaceform.radial_profile(2.0, r)
    k = np.sqrt(2.0)
    np.testing.assert_allclose(s, np.sin(k * r) / k, rtol=1e-12)
    np.testing.assert_allclose(c, np.cos(k * r), rtol=1e-12)


def test_radial_profile_negative_distance():
    with pytest.raises(spaceform.DomainError):
        spaceform.radial_profile(0.0, -1.0)


def test_radial_profile_beyond_antipode():
    with pytest.raises(spaceform.DomainError):
        spaceform.radial_profile(1.0, 3.5)


def test_sinc_profile_limit():
    values = spaceform.sinc_profile(1.0, np.array([0.0, 1e-8, 0.5]))
    np.testing.assert_allclose(values, [1.0, 1.0, np.sin(0.5) / 0.5])


# =============================================================================
# SPACE FORM
# =============================================================================


def test_model_names():
    assert SpaceForm(0.0).model == spaceform.EUCLIDEAN
    assert SpaceForm(2.0).model == spaceform.SPHERE
    assert SpaceForm(-1.0).model == spaceform.HYPERBOLIC


def test_from_model_mismatch():
    with pytest.raises(ValueError):
        SpaceForm.from_model("SPHERE", -1.0)


def test_origin_satisfies_constraint():
    for delta in (0.5, -2.0):
        space = SpaceForm(delta)
        assert space.constraint_defect(space.origin) < 1e-15


def test_check_points_rejects_off_model_points():
    with pytest.raises(spaceform.InvalidPointError):
        SpaceForm(1.0).check_points([1.0, 1.0, 0.0, 0.0])


def test_check_points_rejects_wrong_sheet():
    with pytest.raises(spaceform.InvalidPointError):
        SpaceForm(-1.0).check_points([-1.0, 0.0, 0.0, 0.0])


def test_project_on_hyperboloid():
    space = SpaceForm(-1.0)
    point = space.project([7.0, 0.3, 0.4, 0.0])
    assert space.constraint_defect(point) < 1e-12


# =============================================================================
# DISTANCES
# =============================================================================


def test_euclidean_distance():
    space = SpaceForm(0.0)
    dist = spaceform.geodesic_distance(space, [0, 0, 0], [3, 4, 0])
    np.testing.assert_allclose(dist, 5.0)


def test_sphere_distance():
    space = SpaceForm(1.0)
    dist = spaceform.geodesic_distance(space, space.origin, sphere_point(1.2))
    np.testing.assert_allclose(dist, 1.2)


def test_hyperbolic_distance():
    space = SpaceForm(-1.0)
    dist = spaceform.geodesic_distance(
        space, space.origin, hyperbolic_point(1.0)
    )
    np.testing.assert_allclose(dist, 1.0)


def test_distance_is_symmetric():
    space = SpaceForm(-0.5)
    a, b = hyperbolic_point(0.3, -0.5), hyperbolic_point(-1.1, -0.5)
    np.testing.assert_allclose(
        spaceform.geodesic_distance(space, a, b),
        spaceform.geodesic_distance(space, b, a),
    )


# =============================================================================
# EXP AND LOG
# =============================================================================


@pytest.mark.parametrize("delta", [1.0, -1.0])
def test_exp_inverts_log(delta):
    space = SpaceForm(delta)
    p = space.origin
    x = sphere_point(0.8) if delta > 0 else hyperbolic_point(0.8)
    v = spaceform.log_map(space, p, x)
    np.testing.assert_allclose(space.norm(v), 0.8)
    np.testing.assert_allclose(spaceform.exp_map(space, p, v), x, atol=1e-12)


def test_log_of_antipode():
    space = SpaceForm(1.0)
    with pytest.raises(spaceform.InjectivityDomainError):
        spaceform.log_map(space, space.origin, -space.origin)


def test_exp_of_non_tangent_vector():
    space = SpaceForm(1.0)
    with pytest.raises(spaceform.NonTangentError):
        spaceform.exp_map(space, space.origin, [1.0, 0.0, 0.0, 0.0])


@pytest.mark.parametrize("delta", [0.0, 1.0, -1.0])
def test_tangent_basis_is_orthonormal(delta):
    space = SpaceForm(delta)
    p = space.origin if delta == 0 else (
        sphere_point(0.7) if delta > 0 else hyperbolic_point(0.7)
    )
    basis = spaceform.tangent_basis(space, p)
    gram = space.inner(basis[:, None, :], basis[None, :, :])
    np.testing.assert_allclose(gram, np.eye(3), atol=1e-12)
    if delta != 0:
        np.testing.assert_allclose(space.inner(basis, p), 0.0, atol=1e-12)


def test_parallel_transport_is_an_isometry():
    space = SpaceForm(-1.0)
    x, y = space.origin, hyperbolic_point(0.9)
    basis = spaceform.tangent_basis(space, x)
    moved = spaceform.parallel_transport(space, x, y, basis)
    gram = space.inner(moved[:, None, :], moved[None, :, :])
    np.testing.assert_allclose(gram, np.eye(3), atol=1e-12)
    np.testing.assert_allclose(space.inner(moved, y), 0.0, atol=1e-12)


# =============================================================================
# RADIAL FRAME
# =============================================================================


def test_radial_frame_euclidean():
    space = SpaceForm(0.0)
    frame = spaceform.radial_frame(space, np.zeros(3), [[0.0, 3.0, 4.0]])
    np.testing.assert_allclose(frame.r, [5.0])
    np.testing.assert_allclose(frame.X, [[0.0, 3.0, 4.0]])
    assert frame.radius == 5.0


@pytest.mark.parametrize("delta", [1.0, -1.0])
def test_position_field_norm_is_s(delta):
    space = SpaceForm(delta)
    points = np.array(
        [
            sphere_point(t) if delta > 0 else hyperbolic_point(t)
            for t in (0.2, 0.5, 1.0)
        ]
    )
    frame = spaceform.radial_frame(space, space.origin, points)
    s, _ = spaceform.radial_profile(delta, frame.r)
    np.testing.assert_allclose(space.norm(frame.X), s)
    np.testing.assert_allclose(
        np.linalg.norm(frame.normal_coords, axis=1), frame.r
    )


def test_validity_region():
    space = SpaceForm(1.0)
    near = spaceform.radial_frame(space, space.origin, [sphere_point(0.5)])
    far = spaceform.radial_frame(space, space.origin, [sphere_point(1.7)])
    assert near.within_validity_region
    assert not far.within_validity_region
