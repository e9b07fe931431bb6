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

"""Upper bounds of the first Steklov eigenvalue of a weighted domain
``Omega`` with boundary curve ``M``.

On surfaces the boundary is one dimensional, so the boundary tensor ``S`` is
a positive scalar ``S_boundary`` with ``tr(S) = S_boundary`` and
``H_S = S_boundary kappa``, ``kappa`` being the curvature vector of ``M`` in
the model.

"""

__all__ = ["TheoremTwo", "SteklovEuclidean", "bound_thm2", "steklov_euclidean"]


# =============================================================================
# IMPORTS
# =============================================================================

import attr

import numpy as np

from . import terms
from .center import center_of_mass, enclosing_radius, quarter_ball_radius
from .core import Bound, Hypothesis, Tolerances, make_bound_report
from .. import curvature, spaceform


# =============================================================================
# BOUNDARY DATA
# =============================================================================


@attr.s(frozen=True)
class BoundaryData:
    """Statistics of ``H_S - S grad f`` along the boundary curve."""

    boundary = attr.ib()
    S_boundary = attr.ib(converter=float)
    drift_norms = attr.ib()
    volume_f = attr.ib(converter=float)

    @property
    def sup_sq(self):
        return float(np.max(self.drift_norms)) ** 2

    @property
    def integral_sq(self):
        return terms.integral(self.boundary, self.drift_norms ** 2)

    @property
    def integral_trace(self):
        return self.S_boundary * self.volume_f

    def as_dict(self):
        return {
            "S_boundary": self.S_boundary,
            "V_f_boundary": self.volume_f,
            "sup_HS_minus_SgradF_sq": self.sup_sq,
            "int_HS_minus_SgradF_sq": self.integral_sq,
        }


def boundary_data(bcurv, S_boundary):
    nb = bcurv.boundary.num_vertices
    return BoundaryData(
        boundary=bcurv.boundary,
        S_boundary=S_boundary,
        drift_norms=bcurv.drift_norms(np.full(nb, float(S_boundary))),
        volume_f=terms.volume(bcurv.boundary),
    )


def _s_squared(delta, R):
    if delta > 0:
        R = min(R, np.pi / np.sqrt(delta))
    s_R, _ = spaceform.radial_profile(delta, R)
    return float(s_R) ** 2


def _common_hypotheses(mesh, T, S_boundary):
    return [
        terms.closed_mesh(mesh, expected=False),
        terms.positive_definite(T, "T"),
        terms.positive_scalar(S_boundary, "S_boundary"),
    ]


# =============================================================================
# BOUNDS
# =============================================================================


def _case1(mesh, T, result, drift_T, bdata, R, tolerances, metadata):
    delta = mesh.space.delta
    hypotheses = _common_hypotheses(mesh, T, bdata.S_boundary)
    hypotheses.append(terms.curvature_sign(mesh.space, "nonpositive"))
    rhs = np.nan
    metadata = dict(metadata)
    if drift_T is not None:
        ratio = float(np.max(drift_T.norms / drift_T.traces))
        first = float(np.max(delta * drift_T.traces + ratio * drift_T.norms))
        second = delta + bdata.sup_sq / bdata.S_boundary ** 2
        volumes = terms.volume(mesh) / bdata.volume_f
        s_R2 = _s_squared(delta, R)
        rhs = first * second * volumes * s_R2
        metadata.update(
            {
                "interior_factor": first,
                "boundary_factor": second,
                "volume_ratio": volumes,
                "s_delta_R_sq": s_R2,
            }
        )
    return make_bound_report(
        "THM2_CASE1",
        result.eigenvalue_1,
        rhs,
        hypotheses,
        tolerances,
        metadata=metadata,
    )


def _positive_curvature_hypotheses(mesh, T, bdata, R):
    delta = mesh.space.delta
    hypotheses = _common_hypotheses(mesh, T, bdata.S_boundary)
    hypotheses.append(terms.curvature_sign(mesh.space, "positive"))
    limit = quarter_ball_radius(delta)
    hypotheses.append(
        Hypothesis(
            "contained in ball of radius pi/(4 sqrt(delta))",
            R < limit,
            f"R = {R:.6g}, limit = {limit:.6g}",
        )
    )
    return hypotheses


def _case2(mesh, T, result, drift_T, bdata, R, tolerances, metadata):
    delta = mesh.space.delta
    hypotheses = _positive_curvature_hypotheses(mesh, T, bdata, R)
    rhs = np.nan
    metadata = dict(metadata)
    if drift_T is not None:
        int_trT = terms.integral(mesh, drift_T.traces)
        boundary_factor = delta + bdata.integral_sq / (
            bdata.volume_f * bdata.S_boundary ** 2
        )
        rhs = int_trT / bdata.volume_f * boundary_factor
        metadata.update(
            {"int_trT": int_trT, "boundary_factor": boundary_factor}
        )
    return make_bound_report(
        "THM2_CASE2",
        result.eigenvalue_1,
        rhs,
        hypotheses,
        tolerances,
        metadata=metadata,
    )


def _case2_radius(mesh, T, result, drift_T, bdata, R, tolerances, metadata):
    delta = mesh.space.delta
    hypotheses = _positive_curvature_hypotheses(mesh, T, bdata, R)
    rhs = np.nan
    metadata = dict(metadata)
    if drift_T is not None:
        sup_trT = float(np.max(drift_T.traces))
        interior_factor = sup_trT * (
            drift_T.sup_norm ** 2 / drift_T.inf_trace ** 2 + delta
        )
        boundary_factor = delta + bdata.integral_sq / (
            bdata.volume_f * bdata.S_boundary ** 2
        )
        volumes = terms.volume(mesh) / bdata.volume_f
        s_R2 = _s_squared(delta, R)
        rhs = interior_factor * boundary_factor * volumes * s_R2
        metadata.update(
            {
                "interior_factor": interior_factor,
                "boundary_factor": boundary_factor,
                "volume_ratio": volumes,
                "s_delta_R_sq": s_R2,
            }
        )
    return make_bound_report(
        "THM2_CASE2_RADIUS",
        result.eigenvalue_1,
        rhs,
        hypotheses,
        tolerances,
        metadata=metadata,
    )


def bound_thm2(
    mesh,
    T,
    S_boundary,
    field,
    result,
    tolerances=None,
    bcurv=None,
    center=None,
):
    """Bounds of the first Steklov eigenvalue ``sigma_1``.

    ``p`` is the center of mass of the boundary ``M`` for the boundary
    measure and ``R`` the largest distance from ``p`` to ``Omega``.

    Case 1 (``delta <= 0``)::

        sigma_1 <= sup_Omega[delta tr(T) + sup(|D_T| / tr(T)) |D_T|]
                   (delta + sup_M |D_S|^2 / S^2) V_f(Omega) / V_f(M) s(R)^2

    Case 2 (``delta > 0``, ``R < pi/(4 sqrt(delta))``)::

        sigma_1 <= int_Omega tr(T) / V_f(M)
                   (delta + int_M |D_S|^2 / (V_f(M) S^2))

    ``THM2_CASE2_RADIUS`` is the intermediate estimate of case 2 that still
    depends on ``R``. ``D_T = H_T - T grad f`` on ``Omega`` and
    ``D_S = S (kappa - f' t)`` on ``M``.

    Parameters
    ----------
    mesh : ImmersedMesh
        Weighted surface with boundary.
    T : TangentTensorField
    S_boundary : float
        Boundary tensor.
    field : CurvatureField
        Curvature of ``mesh``.
    result : SpectralResult
        First Steklov eigenvalue.
    tolerances : Tolerances, optional
    bcurv : BoundaryCurvature, optional
    center : CenterOfMass, optional
        Center of mass of the boundary complex.

    Returns
    -------
    list of BoundReport

    """
    tolerances = Tolerances() if tolerances is None else tolerances
    bcurv = curvature.boundary_curvature(mesh) if bcurv is None else bcurv
    bdata = boundary_data(bcurv, S_boundary)
    center = center_of_mass(bcurv.boundary) if center is None else center
    R = enclosing_radius(mesh, center.point)
    drift_T = (
        curvature.drift_term(mesh, field, T)
        if T.is_positive_definite
        else None
    )

    metadata = terms.center_metadata(center)
    metadata.update(bdata.as_dict())
    metadata.update(
        {
            "delta": mesh.space.delta,
            "R": R,
            "R_boundary": center.radius,
            "V_f": terms.volume(mesh),
        }
    )
    args = (mesh, T, result, drift_T, bdata, R, tolerances, metadata)
    return [_case1(*args), _case2(*args), _case2_radius(*args)]


def steklov_euclidean(
    mesh, T, S_boundary, field, result, tolerances=None, bcurv=None
):
    """``sigma_1 (int_M S)^2 <= int_Omega tr(T) int_M |D_S|^2`` for
    ``delta = 0``, reported divided by ``(int_M S)^2``.

    """
    tolerances = Tolerances() if tolerances is None else tolerances
    bcurv = curvature.boundary_curvature(mesh) if bcurv is None else bcurv
    bdata = boundary_data(bcurv, S_boundary)
    hypotheses = _common_hypotheses(mesh, T, S_boundary)
    hypotheses.append(terms.curvature_sign(mesh.space, "zero"))
    metadata = bdata.as_dict()
    rhs = np.nan
    if T.is_positive_definite:
        traces = np.trace(
            T.at_vertices(field.tangent_frames), axis1=1, axis2=2
        )
        int_trT = terms.integral(mesh, traces)
        int_S = bdata.integral_trace
        rhs = int_trT * bdata.integral_sq / int_S ** 2
        metadata.update(
            {
                "int_trT": int_trT,
                "int_S": int_S,
                "lhs_squared_form": result.eigenvalue_1 * int_S ** 2,
                "rhs_squared_form": int_trT * bdata.integral_sq,
            }
        )
    return make_bound_report(
        "STEKLOV_EUCLIDEAN",
        result.eigenvalue_1,
        rhs,
        hypotheses,
        tolerances,
        metadata=metadata,
    )


# =============================================================================
# CHECKS
# =============================================================================


class TheoremTwo(Bound):
    """Steklov bounds in models of curvature ``delta``.

    On a flat domain ``H_T`` vanishes and the case 1 bound is zero while
    ``sigma_1`` is not: the violation is reported as a finding.

    """

    reports = ["THM2_CASE1", "THM2_CASE2", "THM2_CASE2_RADIUS"]
    mesh_kind = "boundary"
    problem = "steklov"
    findings = ["THM2_CASE1"]

    def evaluate(self, context):
        return bound_thm2(
            context.mesh,
            context.T,
            context.S_boundary,
            context.field,
            context.steklov_result,
            context.tolerances,
            bcurv=context.boundary_curvature,
            center=context.center("boundary"),
        )


class SteklovEuclidean(Bound):
    """Steklov bound of Euclidean domains."""

    reports = ["STEKLOV_EUCLIDEAN"]
    mesh_kind = "boundary"
    problem = "steklov"

    def evaluate(self, context):
        return [
            steklov_euclidean(
                context.mesh,
                context.T,
                context.S_boundary,
                context.field,
                context.steklov_result,
                context.tolerances,
                bcurv=context.boundary_curvature,
            )
        ]
