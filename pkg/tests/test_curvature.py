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

"""Curvature and tensor field tests"""


# =============================================================================
# IMPORTS
# =============================================================================

import numpy as np

import pytest

from reilly_verify import curvature, mesh as mesh_module, shapes
from reilly_verify.mesh import ImmersedMesh
from reilly_verify.spaceform import SpaceForm


# =============================================================================
# HELPERS
# =============================================================================


def _disk_in_r4():
    disk = shapes.generate_shape("flat_disk", refinement=2)
    vertices = np.column_stack([disk.vertices, np.zeros(disk.num_vertices)])
    return ImmersedMesh(SpaceForm(0.0, 4), vertices, disk.cells)


# =============================================================================
# SECOND FUNDAMENTAL FORM
# =============================================================================


def test_sphere_principal_curvatures(sphere_field):
    kappas = curvature.principal_curvatures(sphere_field)
    np.testing.assert_allclose(kappas, 1.0, atol=5e-2)


def test_sphere_mean_curvature_vector_points_inward(sphere, sphere_field):
    H = sphere_field.mean_vector
    np.testing.assert_allclose(sphere_field.mean_norm, 1.0, atol=5e-2)
    inward = -sphere.vertices
    assert np.all(np.einsum("kd,kd->k", H, inward) > 0)


def test_mean_curvatures_columns(sphere_field):
    H = curvature.mean_curvatures(sphere_field)
    assert H.shape == (sphere_field.mesh.num_vertices, 3)
    np.testing.assert_array_equal(H[:, 0], 1.0)
    np.testing.assert_allclose(H[:, 1], 1.0, atol=5e-2)
    np.testing.assert_allclose(H[:, 2], 1.0, atol=1e-1)


def test_frames_are_orthonormal(sphere_field):
    t, n = sphere_field.tangent_frames, sphere_field.normal_frames
    frames = np.concatenate([t, n], axis=1)
    gram = np.einsum("kad,kbd->kab", frames, frames)
    np.testing.assert_allclose(
        gram, np.broadcast_to(np.eye(3), gram.shape), atol=1e-10
    )


def test_flat_disk_is_flat(disk_field):
    np.testing.assert_allclose(disk_field.second_fund, 0.0, atol=1e-10)


def test_s3_geodesic_sphere(s3_sphere):
    field = curvature.second_fundamental_form(s3_sphere)
    expected = 1.0 / np.tan(np.pi / 6)
    assert np.mean(field.mean_norm) == pytest.approx(expected, rel=2e-2)


def test_h3_geodesic_sphere(h3_sphere):
    field = curvature.second_fundamental_form(h3_sphere)
    expected = 1.0 / np.tanh(0.5)
    assert np.mean(field.mean_norm) == pytest.approx(expected, rel=2e-2)
    np.testing.assert_allclose(
        h3_sphere.space.inner(field.unit_normal, h3_sphere.vertices),
        0.0,
        atol=1e-10,
    )


def test_higher_codimension():
    flat = _disk_in_r4()
    field = curvature.second_fundamental_form(flat)
    assert field.codimension == 2
    assert not field.is_hypersurface
    np.testing.assert_allclose(field.mean_norm, 0.0, atol=1e-10)
    with pytest.raises(curvature.CodimensionError):
        field.shape_operator
    with pytest.raises(curvature.CodimensionError):
        curvature.newton_tensor(field, 1)


def test_curve_mesh_has_no_curvature_field(disk):
    boundary = mesh_module.boundary_complex(disk)
    with pytest.raises(ValueError):
        curvature.second_fundamental_form(boundary)


# =============================================================================
# TENSORS
# =============================================================================


def test_identity_tensor(sphere):
    T = curvature.identity_tensor(sphere)
    assert T.name == "identity"
    assert T.divergence_free == curvature.ASSERTED
    np.testing.assert_allclose(T.traces, 2.0)
    assert T.is_positive_definite


def test_scaled_identity_tensor(sphere):
    T = curvature.identity_tensor(sphere, 2.5)
    assert T.name == "scaled_identity(2.5)"
    assert T.isotropic_scale == 2.5
    assert T.min_eigenvalue == 2.5
    half = T.scaled(0.5)
    assert half.isotropic_scale == 1.25
    np.testing.assert_allclose(half.traces, 2.5)


def test_tensor_shape_mismatch(sphere):
    with pytest.raises(curvature.FrameMismatchError):
        curvature.TangentTensorField(sphere, np.zeros((3, 2, 2)))


def test_tensor_must_be_symmetric(triangle_mesh):
    with pytest.raises(ValueError):
        curvature.TangentTensorField(triangle_mesh, [[[1.0, 0.5], [0.0, 1.0]]])


def test_not_positive_definite(sphere):
    T = curvature.identity_tensor(sphere, -1.0)
    assert not T.is_positive_definite
    with pytest.raises(curvature.NotPositiveDefiniteError):
        T.check_positive_definite("S")


def test_newton_tensors_of_the_sphere(sphere_field):
    T0 = curvature.newton_tensor(sphere_field, 0)
    T1 = curvature.newton_tensor(sphere_field, 1)
    assert T0.name == "newton(0)"
    assert T1.name == "newton(1)"
    np.testing.assert_allclose(T1.traces, 2.0, atol=1e-1)
    assert T1.is_positive_definite


def test_newton_tensor_order(sphere_field):
    with pytest.raises(ValueError):
        curvature.newton_tensor(sphere_field, 2)


def test_newton_tensor_of_a_flat_disk_warns(disk_field):
    with pytest.warns(curvature.IndefiniteTensorWarning):
        T1 = curvature.newton_tensor(disk_field, 1)
    assert not T1.is_positive_definite


def test_at_vertices_of_isotropic_tensor(sphere, sphere_field):
    T = curvature.identity_tensor(sphere, 3.0)
    values = T.at_vertices(sphere_field.tangent_frames)
    expected = np.broadcast_to(3 * np.eye(2), values.shape)
    np.testing.assert_allclose(values, expected)


# =============================================================================
# GENERALIZED MEAN CURVATURE AND DRIFT
# =============================================================================


def test_generalized_mean_curvature_of_identity(sphere, sphere_field):
    H_T = curvature.generalized_mean_curvature(
        sphere_field, curvature.identity_tensor(sphere)
    )
    np.testing.assert_allclose(H_T, 2.0 * sphere_field.mean_vector, atol=1e-10)


def test_generalized_mean_curvature_other_mesh(sphere_field, ellipsoid):
    with pytest.raises(curvature.FrameMismatchError):
        curvature.generalized_mean_curvature(
            sphere_field, curvature.identity_tensor(ellipsoid)
        )


def test_drift_of_unweighted_sphere(sphere, sphere_field):
    drift = curvature.drift_term(
        sphere, sphere_field, curvature.identity_tensor(sphere)
    )
    np.testing.assert_allclose(drift.norms, 2.0, atol=1e-1)
    np.testing.assert_allclose(drift.tangent_part, 0.0, atol=1e-12)
    assert drift.inf_trace == 2.0
    assert drift.integral_sq == pytest.approx(16 * np.pi, rel=5e-2)


def test_drift_of_linear_density(sphere, sphere_field):
    weighted = sphere.with_density(sphere.vertices[:, 2])
    field = curvature.CurvatureField(
        mesh=weighted,
        tangent_frames=sphere_field.tangent_frames,
        normal_frames=sphere_field.normal_frames,
        second_fund=sphere_field.second_fund,
    )
    drift = curvature.drift_term(
        weighted, field, curvature.identity_tensor(weighted)
    )
    # tangential part of e3 is e3 - <e3, x> x
    e3 = np.array([0.0, 0.0, 1.0])
    expected = e3 - sphere.vertices[:, 2:3] * sphere.vertices
    np.testing.assert_allclose(drift.gradient, expected, atol=1e-1)
    normal = np.einsum("kd,kd->k", drift.tangent_part, drift.normal_part)
    np.testing.assert_allclose(normal, 0.0, atol=1e-10)


# =============================================================================
# BOUNDARY
# =============================================================================


def test_disk_boundary_curvature(disk):
    bc = curvature.boundary_curvature(disk)
    np.testing.assert_allclose(bc.curvature, 1.0, rtol=1e-2)
    np.testing.assert_allclose(bc.df_ds, 0.0)
    boundary_points = bc.boundary.vertices
    # the curvature vector of a circle points to its center
    cos = np.einsum("kd,kd->k", bc.curvature_vectors, -boundary_points)
    assert np.all(cos > 0)


def test_boundary_drift(disk):
    bc = curvature.boundary_curvature(disk)
    np.testing.assert_allclose(
        bc.drift_norms(np.full(bc.boundary.num_vertices, 2.0)), 2.0, rtol=1e-2
    )


def test_boundary_curvature_of_closed_mesh(sphere):
    with pytest.raises(mesh_module.ClosedMeshError):
        curvature.boundary_curvature(sphere)


def test_boundary_scalar_at_vertices(disk):
    boundary = mesh_module.boundary_complex(disk)
    values = curvature.boundary_scalar_at_vertices(boundary, 3.0)
    np.testing.assert_allclose(values, 3.0)


# =============================================================================
# TENSOR FILES
# =============================================================================


@pytest.fixture
def triangle_mesh():
    return ImmersedMesh(
        SpaceForm(0.0), [[0, 0, 0], [1, 0, 0], [0, 1, 0]], [[0, 1, 2]]
    )


def test_read_tensor_field(tmp_path, disk):
    T = curvature.identity_tensor(disk, 1.5)
    path = tmp_path / "T.tensor"
    path.write_text(curvature.write_tensor_field(T))
    loaded = curvature.read_tensor_field(str(path), disk)
    np.testing.assert_allclose(loaded.matrices, T.matrices)
    assert loaded.divergence_free == curvature.UNCHECKED
    assert loaded.name == f"file:{path}"


def test_read_incomplete_tensor_field(tmp_path, disk):
    path = tmp_path / "T.tensor"
    path.write_text("0 1 0 1\n")
    with pytest.raises(curvature.FrameMismatchError):
        curvature.read_tensor_field(str(path), disk)


@pytest.mark.parametrize("row", ["0 1 x 1", "0 1 0", "99999 1 0 1"])
def test_read_malformed_tensor_field(tmp_path, disk, row):
    path = tmp_path / "T.tensor"
    path.write_text(f"# header\n{row}\n")
    with pytest.raises(mesh_module.MeshParseError) as err:
        curvature.read_tensor_field(str(path), disk)
    assert err.value.lineno == 2
