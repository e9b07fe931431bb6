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

"""Upper bounds of the first eigenvalue of ``L_{T,f}`` on closed
submanifolds of models with curvature ``delta``.

"""

__all__ = ["TheoremOne", "bound_thm1"]


# =============================================================================
# IMPORTS
# =============================================================================

import numpy as np

from . import terms
from .center import center_of_mass, quarter_ball_radius
from .core import Bound, Tolerances, make_bound_report
from .. import curvature


# =============================================================================
# FUNCTIONS
# =============================================================================


def _drifts(mesh, field, T, S):
    if not (T.is_positive_definite and S.is_positive_definite):
        return None, None
    return (
        curvature.drift_term(mesh, field, T),
        curvature.drift_term(mesh, field, S),
    )


def _case1(mesh, T, S, result, drift_T, drift_S, tolerances):
    delta = mesh.space.delta
    hypotheses = [
        terms.closed_mesh(mesh),
        terms.curvature_sign(mesh.space, "nonpositive"),
        terms.positive_definite(T, "T"),
        terms.positive_definite(S, "S"),
    ]
    reports = []
    for trace in ("S", "T"):
        metadata = {"delta": delta, "trace_in_sup": trace}
        rhs = np.nan
        if drift_T is not None:
            denominator = drift_S.traces if trace == "S" else drift_T.traces
            constant = float(np.max(drift_T.norms / denominator))
            bracket = delta * drift_T.traces + constant * drift_S.norms
            rhs = float(np.max(bracket))
            metadata.update(
                {
                    "sup_ratio": constant,
                    "sup_HS_minus_SgradF": drift_S.sup_norm,
                    "sup_HT_minus_TgradF": drift_T.sup_norm,
                    "literal": trace == "S",
                }
            )
        reports.append(
            make_bound_report(
                "THM1_CASE1",
                result.eigenvalue_1,
                rhs,
                hypotheses,
                tolerances,
                metadata=metadata,
                variant=f"trace={trace}",
            )
        )
    return reports


def _case2(mesh, T, S, result, drift_T, drift_S, center, tolerances):
    delta = mesh.space.delta
    hypotheses = [
        terms.closed_mesh(mesh),
        terms.curvature_sign(mesh.space, "positive"),
        terms.positive_definite(T, "T"),
        terms.positive_definite(S, "S"),
    ]
    metadata = {"delta": delta}
    if center is not None:
        hypotheses.append(
            terms.inside_ball(
                center, quarter_ball_radius(delta), "pi/(4 sqrt(delta))"
            )
        )
        metadata.update(terms.center_metadata(center))

    rhs = np.nan
    if drift_T is not None:
        V_f = terms.volume(mesh)
        int_trT = terms.integral(mesh, drift_T.traces)
        inf_trS = drift_S.inf_trace
        rhs = (int_trT / V_f) * (
            delta + drift_S.integral_sq / (V_f * inf_trS ** 2)
        )
        metadata.update(
            {
                "V_f": V_f,
                "int_trT": int_trT,
                "inf_trS": inf_trS,
                "int_HS_minus_SgradF_sq": drift_S.integral_sq,
            }
        )
    return make_bound_report(
        "THM1_CASE2",
        result.eigenvalue_1,
        rhs,
        hypotheses,
        tolerances,
        metadata=metadata,
    )


def bound_thm1(mesh, T, S, field, result, tolerances=None, center=None):
    """Both cases of the bound of ``lambda_1(L_{T,f})`` on a closed mesh.

    Case 1 (``delta <= 0``)::

        lambda_1 <= sup_M [delta tr(T) + C |H_S - S grad f|]

    with ``C = sup_M(|H_T - T grad f| / tr(S))`` as literally written
    (variant ``trace=S``) and with ``tr(T)`` in the denominator (variant
    ``trace=T``). Case 2 (``delta > 0``, ``M`` inside a ball of radius
    ``pi/(4 sqrt(delta))`` about its center of mass)::

        lambda_1 <= (int tr(T) / V_f) (delta + int |H_S - S grad f|^2
                    / (V_f inf tr(S)^2))

    Both cases are always reported; the one whose curvature sign does not
    match ``delta`` has status ``hypotheses_unmet``.

    Parameters
    ----------
    mesh : ImmersedMesh
        Closed weighted surface.
    T, S : TangentTensorField
    field : CurvatureField
    result : SpectralResult
        First eigenvalue of ``L_{T,f}``.
    tolerances : Tolerances, optional
    center : CenterOfMass, optional
        Center of mass of ``mesh``; computed when ``delta > 0`` and not
        given.

    Returns
    -------
    list of BoundReport
        ``THM1_CASE1`` twice (``trace=S`` and ``trace=T``) and
        ``THM1_CASE2``.

    """
    tolerances = Tolerances() if tolerances is None else tolerances
    drift_T, drift_S = _drifts(mesh, field, T, S)
    if center is None and mesh.space.delta > 0 and mesh.is_closed:
        center = center_of_mass(mesh)
    reports = _case1(mesh, T, S, result, drift_T, drift_S, tolerances)
    reports.append(
        _case2(mesh, T, S, result, drift_T, drift_S, center, tolerances)
    )
    return reports


# =============================================================================
# CHECKS
# =============================================================================


class TheoremOne(Bound):
    """Bounds of ``lambda_1(L_{T,f})`` in models of curvature ``delta``."""

    reports = ["THM1_CASE1", "THM1_CASE2"]
    mesh_kind = "closed"
    problem = "closed"

    def evaluate(self, context):
        center = context.center("mesh") if context.space.delta > 0 else None
        return bound_thm1(
            context.mesh,
            context.T,
            context.S,
            context.field,
            context.closed_result,
            context.tolerances,
            center=center,
        )
