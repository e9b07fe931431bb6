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
# DOCS
# =============================================================================

"""Quantities shared by the bound and identity checks.

Supremum and infimum of continuous fields are taken over vertex values.

"""

# =============================================================================
# IMPORTS
# =============================================================================

import numpy as np

from .core import Hypothesis
from .. import mesh as _mesh, spaceform

# =============================================================================
# CONSTANTS
# =============================================================================

#: intrinsic dimension of every checked domain
SURFACE_DIM = 2

CONVENTIONS = {
    "sup_inf": "max/min over vertex values",
    "integrals": "P1 quadrature against mu_f (mass matrix row sums)",
    "mean_curvature": "H = tr(B)/n; H_T = sum T_ij B_ij, so H_Id = n H",
    "normal": "chosen so the round sphere has shape operator +Id",
}


# =============================================================================
# MEASURES
# =============================================================================


def unweighted(mesh):
    """The mesh with ``f = 0``."""
    if np.all(mesh.density == 0):
        return mesh
    return mesh.with_density(np.zeros(mesh.num_vertices))


def volume(mesh):
    """``V_f`` of a surface or boundary curve."""
    return float(np.sum(_mesh.vertex_weights(mesh)))


def integral(mesh, values):
    return float(_mesh.integrate(mesh, values))


# =============================================================================
# TANGENTIAL PARTS
# =============================================================================


def tangential_components(space, tangent_frames, vectors):
    """Components of ambient vectors in the vertex tangent frames (k, 2)."""
    return space.inner(vectors[:, None, :], tangent_frames)


def quadratic_form(matrices, components):
    """``<T v, v>`` for stacked 2x2 matrices and 2-vectors."""
    return np.einsum("ki,kij,kj->k", components, matrices, components)


def corner_components(mesh, vectors):
    """Vertex vectors of every triangle corner in the triangle frame.

    The vector at each corner is transported to the first corner, where the
    frame of :func:`reilly_verify.mesh.triangle_frames` lives, and
    projected on it. Shape (m, 3, 2).

    """
    space, V, tri = mesh.space, mesh.vertices, mesh.cells
    frames = _mesh.triangle_frames(mesh).frames
    out = np.empty((mesh.num_cells, 3, 2))
    for corner in range(3):
        moved = spaceform.parallel_transport(
            space, V[tri[:, corner]], V[tri[:, 0]], vectors[tri[:, corner]]
        )
        out[:, corner] = space.inner(frames, moved[:, None, :])
    return out


# =============================================================================
# HYPOTHESES
# =============================================================================


def curvature_sign(space, sign):
    """Hypothesis on the sign of the ambient curvature."""
    delta = space.delta
    checks = {
        "nonpositive": (delta <= 0, "delta <= 0"),
        "positive": (delta > 0, "delta > 0"),
        "negative": (delta < 0, "delta < 0"),
        "zero": (delta == 0, "delta == 0"),
    }
    passed, name = checks[sign]
    return Hypothesis(name, passed, f"delta = {delta:g}")


def closed_mesh(mesh, expected=True):
    if expected:
        return Hypothesis("closed", mesh.is_closed, repr(mesh))
    return Hypothesis("has boundary", not mesh.is_closed, repr(mesh))


def positive_definite(tensor, role):
    low = tensor.min_eigenvalue
    return Hypothesis(
        f"{role} positive definite",
        low > 0,
        f"{role} = {tensor.name}, min eigenvalue {low:.6g}",
    )


def positive_scalar(value, role):
    value = float(np.min(value))
    return Hypothesis(
        f"{role} positive", value > 0, f"min {role} = {value:.6g}"
    )


def laplacian_operator(tensor, mesh):
    is_identity = tensor is None or tensor.isotropic_scale == 1.0
    unweighted_mesh = bool(np.all(mesh.density == 0))
    return Hypothesis(
        "operator is the Laplacian",
        is_identity and unweighted_mesh,
        "T = Id and f = 0 required",
    )


def inside_ball(center, radius_limit, label):
    """Hypothesis ``R < radius_limit`` about a computed center of mass."""
    return Hypothesis(
        f"contained in ball of radius {label}",
        center.radius < radius_limit,
        f"R = {center.radius:.6g}, limit = {radius_limit:.6g}",
    )


def center_metadata(center):
    return {
        "center_of_mass": np.asarray(center.point).tolist(),
        "center_defect": center.defect,
        "center_iterations": center.iterations,
        "R": center.radius,
    }
