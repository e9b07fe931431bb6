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

"""Upper bounds of the first Wentzell eigenvalue ``alpha_1`` of an
unweighted domain ``Omega``.

"""

__all__ = [
    "TheoremThree",
    "WentzellEuclidean",
    "bound_thm3",
    "wentzell_euclidean",
]


# =============================================================================
# IMPORTS
# =============================================================================

import numpy as np

from . import terms
from .center import center_of_mass, quarter_ball_radius
from .core import Bound, Hypothesis, Tolerances, make_bound_report
from .. import curvature, spaceform
from ..spectra import InvalidParameterError


# =============================================================================
# FUNCTIONS
# =============================================================================


def _check_b(b):
    b = float(b)
    if b < 0:
        raise InvalidParameterError(f"b must be non negative, got {b}")
    return b


def _hypotheses(mesh, T, S_boundary, b):
    return [
        terms.closed_mesh(mesh, expected=False),
        terms.laplacian_operator(T, mesh),
        terms.positive_scalar(S_boundary, "S_boundary"),
        Hypothesis("b > 0", b > 0, f"b = {b:g}"),
    ]


def _volumes(mesh, bcurv):
    return (
        terms.volume(terms.unweighted(mesh)),
        terms.volume(terms.unweighted(bcurv.boundary)),
    )


def bound_thm3(
    mesh,
    S_boundary,
    field,
    result,
    b,
    tolerances=None,
    T=None,
    bcurv=None,
    center=None,
):
    """Bounds of the first Wentzell eigenvalue for ``Delta`` on ``Omega``.

    ``p`` is the center of mass of ``Omega`` and ``R`` the largest distance
    from ``p`` to a vertex of ``Omega``. With ``n = 2``,
    ``q = V(Omega) / V(M)`` and ``kappa`` the curvature vector of ``M``:

    Case 1 (``delta <= 0``)::

        alpha_1 <= [n q + b (n - 1) - delta s(R)^2 (q + b)]
                   (delta + sup_M |S kappa|^2 / S^2)

    Case 2 (``delta > 0``, ``R < pi/(4 sqrt(delta))``)::

        alpha_1 <= (n q + b (n - 1)) (delta + int_M |S kappa|^2 / (V(M) S^2))

    Parameters
    ----------
    mesh : ImmersedMesh
        Surface with boundary; the bound requires ``f = 0``.
    S_boundary : float
    field : CurvatureField
        Unused by the formulas, kept for a uniform signature.
    result : SpectralResult
        First Wentzell eigenvalue for ``b``.
    b : float
        Boundary Laplacian weight.
    tolerances : Tolerances, optional
    T : TangentTensorField, optional
        Tensor the eigenvalue was computed with; only ``T = Id`` meets the
        hypotheses.
    bcurv : BoundaryCurvature, optional
    center : CenterOfMass, optional
        Center of mass of ``Omega``.

    Returns
    -------
    list of BoundReport
        ``THM3_CASE1`` and ``THM3_CASE2`` with variant ``b=<b>``.

    Raises
    ------
    InvalidParameterError
        If ``b < 0``.

    Examples
    --------

    .. code-block:: pycon

        >>> [r.rhs for r in bound_thm3(disk, 1., field, result, b=0.5)]
        [1.5..., 1.5...]

    """
    b = _check_b(b)
    tolerances = Tolerances() if tolerances is None else tolerances
    bcurv = curvature.boundary_curvature(mesh) if bcurv is None else bcurv
    if center is None:
        center = center_of_mass(terms.unweighted(mesh))
    space, n = mesh.space, terms.SURFACE_DIM
    delta = space.delta
    S = float(S_boundary)

    V_omega, V_M = _volumes(mesh, bcurv)
    q = V_omega / V_M
    hs = S * bcurv.curvature
    plain_boundary = terms.unweighted(bcurv.boundary)
    sup_hs2 = float(np.max(hs)) ** 2
    int_hs2 = terms.integral(plain_boundary, hs ** 2)
    R = center.radius

    metadata = terms.center_metadata(center)
    metadata.update(
        {
            "delta": delta,
            "b": b,
            "n": n,
            "V_Omega": V_omega,
            "V_boundary": V_M,
            "sup_HS_sq": sup_hs2,
            "int_HS_sq": int_hs2,
            "center": "center of mass of Omega",
        }
    )
    hypotheses = _hypotheses(mesh, T, S, b)
    variant = f"b={b:g}"

    s_R = 0.0
    if delta <= 0 or R <= np.pi / np.sqrt(delta):
        s_R, _ = spaceform.radial_profile(delta, R)
    first = n * q + b * (n - 1) - delta * s_R ** 2 * (q + b)
    case1 = make_bound_report(
        "THM3_CASE1",
        result.eigenvalue_1,
        first * (delta + sup_hs2 / S ** 2) if S > 0 else np.nan,
        hypotheses + [terms.curvature_sign(space, "nonpositive")],
        tolerances,
        metadata=dict(metadata, s_delta_R=float(s_R), volume_factor=first),
        variant=variant,
    )

    limit = quarter_ball_radius(delta)
    case2 = make_bound_report(
        "THM3_CASE2",
        result.eigenvalue_1,
        (n * q + b * (n - 1)) * (delta + int_hs2 / (V_M * S ** 2))
        if S > 0
        else np.nan,
        hypotheses
        + [
            terms.curvature_sign(space, "positive"),
            Hypothesis(
                "contained in ball of radius pi/(4 sqrt(delta))",
                R < limit,
                f"R = {R:.6g}, limit = {limit:.6g}",
            ),
        ],
        tolerances,
        metadata=metadata,
        variant=variant,
    )
    return [case1, case2]


def wentzell_euclidean(
    mesh, S_boundary, result, b, tolerances=None, T=None, bcurv=None
):
    """``alpha_1 (int_M S)^2 <= (n V(Omega) + b (n-1) V(M)) int_M |H_S|^2``
    for ``delta = 0``, reported divided by ``(int_M S)^2``.

    """
    b = _check_b(b)
    tolerances = Tolerances() if tolerances is None else tolerances
    bcurv = curvature.boundary_curvature(mesh) if bcurv is None else bcurv
    n = terms.SURFACE_DIM
    S = float(S_boundary)
    V_omega, V_M = _volumes(mesh, bcurv)
    plain_boundary = terms.unweighted(bcurv.boundary)
    int_hs2 = terms.integral(plain_boundary, (S * bcurv.curvature) ** 2)
    int_S = S * V_M
    volume_factor = n * V_omega + b * (n - 1) * V_M

    hypotheses = _hypotheses(mesh, T, S, b)
    hypotheses.append(terms.curvature_sign(mesh.space, "zero"))
    return make_bound_report(
        "WENTZELL_EUCLIDEAN",
        result.eigenvalue_1,
        volume_factor * int_hs2 / int_S ** 2 if S > 0 else np.nan,
        hypotheses,
        tolerances,
        metadata={
            "b": b,
            "V_Omega": V_omega,
            "V_boundary": V_M,
            "int_HS_sq": int_hs2,
            "int_S": int_S,
            "lhs_squared_form": result.eigenvalue_1 * int_S ** 2,
            "rhs_squared_form": volume_factor * int_hs2,
        },
        variant=f"b={b:g}",
    )


# =============================================================================
# CHECKS
# =============================================================================


class TheoremThree(Bound):
    """Wentzell bounds in models of curvature ``delta``, one pair of
    reports for every ``b`` of the scenario.

    """

    reports = ["THM3_CASE1", "THM3_CASE2"]
    mesh_kind = "boundary"
    problem = "wentzell"

    def evaluate(self, context):
        reports = []
        center = context.center("domain")
        for b, result in context.wentzell_results.items():
            reports.extend(
                bound_thm3(
                    context.mesh,
                    context.S_boundary,
                    context.field,
                    result,
                    b,
                    context.tolerances,
                    T=context.T,
                    bcurv=context.boundary_curvature,
                    center=center,
                )
            )
        return reports


class WentzellEuclidean(Bound):
    """Wentzell bound of Euclidean domains, for every ``b``."""

    reports = ["WENTZELL_EUCLIDEAN"]
    mesh_kind = "boundary"
    problem = "wentzell"

    def evaluate(self, context):
        return [
            wentzell_euclidean(
                context.mesh,
                context.S_boundary,
                result,
                b,
                context.tolerances,
                T=context.T,
                bcurv=context.boundary_curvature,
            )
            for b, result in context.wentzell_results.items()
        ]
