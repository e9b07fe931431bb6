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

"""Trianglewise gradient inequality of the test functions
``s_delta(r) x_i / r`` built from normal coordinates ``x_i`` about ``p``::

    sum_i <T grad u_i, grad u_i> <= tr(T) - delta <T X^t, X^t>

"""

__all__ = ["GradientInequality", "grosjean_check"]


# =============================================================================
# IMPORTS
# =============================================================================

import numpy as np

from . import terms
from .core import Bound, Tolerances, make_identity_report
from .. import mesh as _mesh, spaceform


# =============================================================================
# FUNCTIONS
# =============================================================================


def trial_gradients(mesh, p):
    """Constant gradients of the P1 interpolants of ``s(r) x_i / r`` on
    every triangle, shape (m, N, 2).

    """
    frame = spaceform.radial_frame(mesh.space, p, mesh.vertices)
    values = spaceform.sinc_profile(mesh.space.delta, frame.r)
    values = values[:, None] * frame.normal_coords
    gradients = _mesh.triangle_frames(mesh).gradients
    return np.einsum("mci,mck->mik", values[mesh.cells], gradients), frame


def grosjean_check(mesh, T, p, tolerances=None):
    """Worst trianglewise residual of the gradient inequality.

    The left side uses the P1 gradients of the interpolated test functions,
    the right side ``tr(T)`` of the triangle and the average over the corners
    of ``<T X^t, X^t>``. The residual of every triangle is normalized by its
    ``tr(T)``; the report carries the worst triangle as ``locus``.

    Parameters
    ----------
    mesh : ImmersedMesh
    T : TangentTensorField
    p : array-like
        Base point of the normal coordinates.
    tolerances : Tolerances, optional
        ``pointwise_tol`` is the discretization margin.

    Returns
    -------
    IdentityReport

    Raises
    ------
    InjectivityDomainError
        If ``p`` lies in the cut locus of a vertex.

    Examples
    --------

    .. code-block:: pycon

        >>> sphere = generate_shape("round_sphere", refinement=3)
        >>> report = grosjean_check(sphere, identity_tensor(sphere), [0, 0, 0])
        >>> report.status
        'equality_within_tol'

    """
    tolerances = Tolerances() if tolerances is None else tolerances
    delta = mesh.space.delta
    grads, frame = trial_gradients(mesh, p)
    mats = np.asarray(T.matrices)

    lhs = np.einsum("mik,mkl,mil->m", grads, mats, grads)
    corners = terms.corner_components(mesh, frame.X)
    quadratic = np.einsum("mci,mij,mcj->m", corners, mats, corners) / 3.0
    traces = T.traces
    rhs = traces - delta * quadratic

    normalized = (lhs - rhs) / traces
    worst = int(np.argmax(normalized))
    return make_identity_report(
        "GROSJEAN_PTWISE",
        lhs[worst],
        rhs[worst],
        traces[worst],
        [terms.positive_definite(T, "T")],
        tolerances.pointwise_tol,
        locus=f"triangle {worst}",
        metadata={
            "center_of_mass": np.asarray(frame.base_point).tolist(),
            "R": frame.radius,
            "margin": tolerances.pointwise_tol,
            "mean_normalized_residual": float(np.mean(normalized)),
        },
    )


# =============================================================================
# CHECKS
# =============================================================================


class GradientInequality(Bound):
    """Gradient inequality of the test functions about the center of mass."""

    reports = ["GROSJEAN_PTWISE"]

    def evaluate(self, context):
        return [
            grosjean_check(
                context.mesh,
                context.T,
                context.identity_center.point,
                context.tolerances,
            )
        ]
