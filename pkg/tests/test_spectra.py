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

"""Eigen solver tests"""


# =============================================================================
# IMPORTS
# =============================================================================

import numpy as np

import pytest

from reilly_verify import assembly, curvature, shapes, spectra
from reilly_verify.mesh import ClosedMeshError


# =============================================================================
# FIXTURES
# =============================================================================


@pytest.fixture(scope="module")
def sphere_system(sphere):
    return assembly.assemble_system(sphere)


@pytest.fixture(scope="module")
def disk_system(disk):
    return assembly.assemble_system(disk)


@pytest.fixture(scope="module")
def jittered_ellipsoid_system():
    mesh = shapes.generate_shape(
        "ellipsoid", refinement=3, seed=7, a=1.0, b=1.0, c=1.5
    )
    return assembly.assemble_system(mesh)


# =============================================================================
# CLOSED
# =============================================================================


def test_unit_sphere(sphere_system):
    result = spectra.solve_closed(sphere_system)
    assert result.problem_kind == spectra.CLOSED
    assert result.method == "dense"
    assert result.eigenvalue_1 == pytest.approx(2.0, rel=2e-2)
    # the first eigenvalue of the round sphere has multiplicity three
    np.testing.assert_allclose(result.next_eigenvalues[:2], 2.0, rtol=2e-2)
    assert result.next_eigenvalues[2] == pytest.approx(6.0, rel=5e-2)
    assert result.relative_residual < 1e-8
    assert result.deflation_report < 1e-8
    assert not result.outside_hypotheses


def test_eigenvector_is_normalized(sphere_system):
    result = spectra.solve_closed(sphere_system)
    x = result.eigenvector_1
    assert x @ sphere_system.mass @ x == pytest.approx(1.0)
    assert spectra.rayleigh_quotient(
        sphere_system, spectra.CLOSED, x
    ) == pytest.approx(result.eigenvalue_1)


def test_lanczos_agrees_with_dense(jittered_ellipsoid_system, monkeypatch):
    system = jittered_ellipsoid_system
    dense = spectra.solve_closed(system, force_dense=True)
    monkeypatch.setattr(spectra, "DENSE_LIMIT", 10)
    lanczos = spectra.solve_closed(system)
    again = spectra.solve_closed(system)
    assert lanczos.method == "lanczos"
    expected = [dense.eigenvalue_1, *dense.next_eigenvalues]
    found = [lanczos.eigenvalue_1, *lanczos.next_eigenvalues]
    assert len(found) == 4
    np.testing.assert_allclose(found, expected, rtol=1e-9)
    assert lanczos.relative_residual < spectra.RESIDUAL_LIMIT
    assert lanczos.deflation_report < 1e-8
    assert again.eigenvalue_1 == lanczos.eigenvalue_1


def test_inaccurate_eigenpair_is_rejected(sphere_system, monkeypatch):
    deflated = spectra._dense_deflated

    def perturbed(A, B, count):
        vals, vecs = deflated(A, B, count)
        vecs = vecs.copy()
        vecs[:, 0] += 1e-2 * vecs[:, -1]
        return vals, vecs

    monkeypatch.setattr(spectra, "_dense_deflated", perturbed)
    with pytest.raises(spectra.SolverConvergenceError) as err:
        spectra.solve_closed(sphere_system)
    assert err.value.residual >= spectra.RESIDUAL_LIMIT


@pytest.mark.slow
@pytest.mark.parametrize(
    "name, solve, exact",
    [
        ("round_sphere", spectra.solve_closed, 2.0),
        ("flat_disk", spectra.solve_steklov, 1.0),
    ],
)
def test_second_order_convergence(name, solve, exact):
    errors = []
    for refinement in (3, 4, 5):
        mesh = shapes.generate_shape(name, refinement=refinement)
        result = solve(assembly.assemble_system(mesh))
        assert result.relative_residual < spectra.RESIDUAL_LIMIT
        errors.append(abs(result.eigenvalue_1 - exact))
    order = np.log2(errors[0] / errors[-1]) / 2
    assert order >= 1.8


def test_force_dense(sphere_system, monkeypatch):
    monkeypatch.setattr(spectra, "DENSE_LIMIT", 100)
    result = spectra.solve_closed(sphere_system, force_dense=True)
    assert result.method == "dense"


def test_closed_problem_on_a_disk(disk_system):
    with pytest.raises(ValueError):
        spectra.solve_closed(disk_system)


def test_scaled_tensor_scales_the_eigenvalue(sphere, sphere_system):
    system = assembly.assemble_system(
        sphere, curvature.identity_tensor(sphere, 3.0)
    )
    plain = spectra.solve_closed(sphere_system).eigenvalue_1
    scaled = spectra.solve_closed(system).eigenvalue_1
    assert scaled == pytest.approx(3 * plain)


# =============================================================================
# STEKLOV
# =============================================================================


def test_unit_disk_steklov(disk_system):
    result = spectra.solve_steklov(disk_system)
    assert result.problem_kind == spectra.STEKLOV
    assert result.eigenvalue_1 == pytest.approx(1.0, rel=2e-2)
    assert result.next_eigenvalues[0] == pytest.approx(1.0, rel=2e-2)
    assert result.next_eigenvalues[1] == pytest.approx(2.0, rel=3e-2)
    assert result.eigenvector_1.shape == (disk_system.size,)


def test_steklov_rayleigh_quotient(disk_system):
    result = spectra.solve_steklov(disk_system)
    quotient = spectra.rayleigh_quotient(
        disk_system, spectra.STEKLOV, result.eigenvector_1
    )
    assert quotient == pytest.approx(result.eigenvalue_1, rel=1e-8)


def test_full_pencil_agrees_with_condensation(disk_system):
    condensed = spectra.solve_steklov(disk_system)
    full = spectra.solve_steklov_full(disk_system)
    assert full.method == "dense-spectral-transform"
    assert full.eigenvalue_1 == pytest.approx(condensed.eigenvalue_1, rel=1e-6)


def test_full_pencil_positive_shift(disk_system):
    with pytest.raises(spectra.InvalidParameterError):
        spectra.solve_steklov_full(disk_system, shift=1.0)


def test_steklov_on_a_closed_mesh(sphere_system):
    with pytest.raises(ClosedMeshError):
        spectra.solve_steklov(sphere_system)


def test_steklov_scales_inversely_with_the_radius(disk):
    big = assembly.assemble_system(disk.scaled(2.0))
    small = assembly.assemble_system(disk)
    assert spectra.solve_steklov(big).eigenvalue_1 == pytest.approx(
        spectra.solve_steklov(small).eigenvalue_1 / 2
    )


# =============================================================================
# WENTZELL
# =============================================================================


@pytest.mark.parametrize("b", [0.5, 2.0])
def test_unit_disk_wentzell(disk_system, b):
    result = spectra.solve_wentzell(disk_system, b)
    assert result.problem_kind == spectra.WENTZELL
    assert result.parameters == {"b": b}
    assert result.eigenvalue_1 == pytest.approx(1.0 + b, rel=2e-2)
    quotient = spectra.rayleigh_quotient(
        disk_system, spectra.WENTZELL, result.eigenvector_1, b
    )
    assert quotient == pytest.approx(result.eigenvalue_1, rel=1e-8)


def test_wentzell_without_boundary_term_is_steklov(disk_system):
    steklov = spectra.solve_steklov(disk_system)
    wentzell = spectra.solve_wentzell(disk_system, 0.0)
    assert wentzell.eigenvalue_1 == pytest.approx(steklov.eigenvalue_1)


@pytest.mark.parametrize("low, high", [(0.0, 0.5), (0.5, 1.0), (1.0, 2.0)])
def test_wentzell_increases_with_b(disk_system, low, high):
    first = spectra.solve_wentzell(disk_system, low).eigenvalue_1
    second = spectra.solve_wentzell(disk_system, high).eigenvalue_1
    assert first < second


def test_wentzell_negative_b(disk_system):
    with pytest.raises(spectra.InvalidParameterError):
        spectra.solve_wentzell(disk_system, -1.0)


def test_wentzell_outside_hypotheses(disk):
    weighted = disk.with_density(0.1 * disk.vertices[:, 0])
    system = assembly.assemble_system(
        weighted, curvature.identity_tensor(weighted, 2.0), 2.0
    )
    with pytest.warns(spectra.OutsideHypothesesWarning):
        result = spectra.solve_wentzell(system, 1.0)
    assert result.outside_hypotheses
    assert len(result.notes) == 2


# =============================================================================
# RESULTS
# =============================================================================


def test_unknown_problem_rayleigh_quotient(disk_system):
    with pytest.raises(spectra.InvalidParameterError):
        spectra.rayleigh_quotient(
            disk_system, "dirichlet", np.ones(disk_system.size)
        )


def test_as_dict(disk_system):
    data = spectra.solve_wentzell(disk_system, 1.0).as_dict()
    assert set(data) == {
        "problem_kind",
        "eigenvalue_1",
        "next_eigenvalues",
        "residual",
        "relative_residual",
        "deflation_report",
        "method",
        "parameters",
        "notes",
    }
    assert data["parameters"] == {"b": 1.0}
    assert isinstance(data["next_eigenvalues"], list)


def test_convergence_error_message():
    err = spectra.SolverConvergenceError("no luck", residual=0.5)
    assert err.residual == 0.5
    assert "best residual 5.000e-01" in str(err)
