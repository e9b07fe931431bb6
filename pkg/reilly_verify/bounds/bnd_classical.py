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

"""Classical upper bounds of the first Laplace eigenvalue of closed
submanifolds, and their weighted tensor generalization.

All the bounds are reported in normalized form ``lambda_1 <= rhs``; the
squared integral forms are kept in the metadata.

"""

__all__ = [
    "ClassicalEuclidean",
    "ClassicalSpaceForm",
    "GeneralTensor",
    "classical_bounds",
    "reilly_mean_curvature",
    "reilly_higher_order",
    "reilly_space_form",
    "heintze",
    "general_tensor_bound",
]


# =============================================================================
# IMPORTS
# =============================================================================

import numpy as np

from . import terms
from .core import Bound, Hypothesis, Tolerances, make_bound_report
from .. import curvature


# =============================================================================
# BOUNDS
# =============================================================================


def _mean_sq(field):
    return field.mean_norm ** 2


def reilly_mean_curvature(
    mesh, field, result, tolerances, bound_id="REILLY_1_1"
):
    """``lambda_1 <= n / V int |H|^2`` for closed Euclidean submanifolds.

    ``REILLY_1_1`` is the hypersurface statement and ``REILLY_1_3`` the one
    of arbitrary codimension; both share the formula.

    """
    plain = terms.unweighted(mesh)
    n = terms.SURFACE_DIM
    V = terms.volume(plain)
    int_h2 = terms.integral(plain, _mean_sq(field))
    rhs = n / V * int_h2

    hypotheses = [
        terms.closed_mesh(mesh),
        terms.curvature_sign(mesh.space, "zero"),
    ]
    if bound_id == "REILLY_1_1":
        hypotheses.append(
            Hypothesis(
                "codimension 1",
                field.is_hypersurface,
                f"codimension = {field.codimension}",
            )
        )
    return make_bound_report(
        bound_id,
        result.eigenvalue_1,
        rhs,
        hypotheses,
        tolerances,
        metadata={"V": V, "int_H2": int_h2, "n": n},
    )


def reilly_higher_order(mesh, field, result, r, tolerances):
    """``lambda_1 (int H_{r-1})^2 <= n V int H_r^2`` for hypersurfaces.

    The factor ``n`` makes round spheres equality cases for every ``r``; the
    value without it is stored as ``literal_rhs``.

    """
    plain = terms.unweighted(mesh)
    n = terms.SURFACE_DIM
    V = terms.volume(plain)
    hypotheses = [
        terms.closed_mesh(mesh),
        terms.curvature_sign(mesh.space, "zero"),
        Hypothesis(
            "codimension 1",
            field.is_hypersurface,
            f"codimension = {field.codimension}",
        ),
        Hypothesis(f"1 <= r <= {n}", 1 <= r <= n, f"r = {r}"),
    ]
    metadata = {"V": V, "r": r, "n": n}
    rhs = np.nan
    if all(h.passed for h in hypotheses):
        H = curvature.mean_curvatures(field)
        int_prev = terms.integral(plain, H[:, r - 1])
        int_sq = terms.integral(plain, H[:, r] ** 2)
        hypotheses.append(
            Hypothesis(
                f"int H_{r - 1} != 0", abs(int_prev) > 0, f"{int_prev:.6g}"
            )
        )
        if int_prev:
            rhs = n * V * int_sq / int_prev ** 2
            metadata.update(
                {
                    f"int_H{r - 1}": int_prev,
                    f"int_H{r}_sq": int_sq,
                    "lhs_squared_form": result.eigenvalue_1 * int_prev ** 2,
                    "rhs_squared_form": n * V * int_sq,
                    "literal_rhs": V * int_sq / int_prev ** 2,
                }
            )
    return make_bound_report(
        "REILLY_1_2",
        result.eigenvalue_1,
        rhs,
        hypotheses,
        tolerances,
        metadata=metadata,
        variant=f"r={r}",
    )


def reilly_space_form(mesh, field, result, tolerances, bound_id):
    """``lambda_1 <= n / V int (|H|^2 + delta)`` in curved models.

    ``REILLY_SPHERE_1_4`` is stated for ``delta > 0`` (the unit sphere
    is ``delta = 1``) and ``REILLY_HYP_1_5`` for ``delta < 0``.

    """
    plain = terms.unweighted(mesh)
    n = terms.SURFACE_DIM
    delta = mesh.space.delta
    V = terms.volume(plain)
    int_h2 = terms.integral(plain, _mean_sq(field))
    rhs = n / V * (int_h2 + delta * V)
    sign = "positive" if bound_id == "REILLY_SPHERE_1_4" else "negative"
    hypotheses = [
        terms.closed_mesh(mesh),
        terms.curvature_sign(mesh.space, sign),
    ]
    return make_bound_report(
        bound_id,
        result.eigenvalue_1,
        rhs,
        hypotheses,
        tolerances,
        metadata={"V": V, "int_H2": int_h2, "delta": delta, "n": n},
    )


def heintze(mesh, field, result, tolerances):
    """``lambda_1 <= n (sup |H|^2 + delta)``."""
    n = terms.SURFACE_DIM
    delta = mesh.space.delta
    sup_h2 = float(np.max(_mean_sq(field)))
    return make_bound_report(
        "HEINTZE_1_6",
        result.eigenvalue_1,
        n * (sup_h2 + delta),
        [terms.closed_mesh(mesh)],
        tolerances,
        metadata={"sup_H2": sup_h2, "delta": delta, "n": n},
    )


def general_tensor_bound(mesh, field, T, S, result, tolerances):
    """Weighted bound of ``L_{T,f}`` in Euclidean space.

    ``lambda_1 (int tr(S) mu_f)^2 <= int tr(T) mu_f int (|H_S|^2 +
    |S grad f|^2) mu_f``, reported divided by ``(int tr(S) mu_f)^2``.

    The inequality holds for submanifolds of Euclidean space only; in
    curved space forms the report is ``hypotheses_unmet``.

    """
    hypotheses = [
        terms.closed_mesh(mesh),
        terms.curvature_sign(mesh.space, "zero"),
        terms.positive_definite(T, "T"),
        terms.positive_definite(S, "S"),
    ]
    metadata = {}
    rhs = np.nan
    if all(h.passed for h in hypotheses):
        drift_S = curvature.drift_term(mesh, field, S)
        drift_T = curvature.drift_term(mesh, field, T)
        int_trT = terms.integral(mesh, drift_T.traces)
        int_trS = terms.integral(mesh, drift_S.traces)
        int_d2 = drift_S.integral_sq
        rhs = int_trT * int_d2 / int_trS ** 2
        metadata = {
            "int_trT": int_trT,
            "int_trS": int_trS,
            "int_HS2_plus_SgradF2": int_d2,
            "V_f": terms.volume(mesh),
            "lhs_squared_form": result.eigenvalue_1 * int_trS ** 2,
            "rhs_squared_form": int_trT * int_d2,
        }
    return make_bound_report(
        "GENERAL_1_7",
        result.eigenvalue_1,
        rhs,
        hypotheses,
        tolerances,
        metadata=metadata,
    )


def classical_bounds(
    mesh,
    field,
    result,
    T=None,
    S=None,
    weighted_result=None,
    tolerances=None,
    orders=(1, 2),
):
    """Every classical bound of a closed mesh.

    Parameters
    ----------
    mesh : ImmersedMesh
        Closed surface; its density is only used by ``GENERAL_1_7``.
    field : CurvatureField
    result : SpectralResult
        First eigenvalue of the Laplacian (``T = Id``, ``f = 0``).
    T, S : TangentTensorField, optional
        Tensors of ``GENERAL_1_7``; default to the identity.
    weighted_result : SpectralResult, optional
        First eigenvalue of ``L_{T,f}``; defaults to ``result``.
    tolerances : Tolerances, optional
    orders : sequence of int
        Orders ``r`` of ``REILLY_1_2``.

    Returns
    -------
    list of BoundReport

    """
    tolerances = Tolerances() if tolerances is None else tolerances
    T = curvature.identity_tensor(mesh) if T is None else T
    S = curvature.identity_tensor(mesh) if S is None else S
    weighted_result = result if weighted_result is None else weighted_result

    reports = [reilly_mean_curvature(mesh, field, result, tolerances)]
    reports.extend(
        reilly_higher_order(mesh, field, result, r, tolerances) for r in orders
    )
    reports.append(
        reilly_mean_curvature(mesh, field, result, tolerances, "REILLY_1_3")
    )
    for bound_id in ("REILLY_SPHERE_1_4", "REILLY_HYP_1_5"):
        reports.append(
            reilly_space_form(mesh, field, result, tolerances, bound_id)
        )
    reports.append(heintze(mesh, field, result, tolerances))
    reports.append(
        general_tensor_bound(mesh, field, T, S, weighted_result, tolerances)
    )
    return reports


# =============================================================================
# CHECKS
# =============================================================================


class ClassicalEuclidean(Bound):
    """Reilly's bounds for closed submanifolds of Euclidean space.

    ``REILLY_1_1`` and ``REILLY_1_3``: ``lambda_1 <= n/V int |H|^2``;
    ``REILLY_1_2``: the higher order mean curvature version for every
    ``r`` in ``orders``.

    """

    reports = ["REILLY_1_1", "REILLY_1_2", "REILLY_1_3"]
    mesh_kind = "closed"
    problem = "closed"
    params = {"orders": (1, 2)}

    def evaluate(self, context, orders):
        mesh, field = context.mesh, context.field
        result, tol = context.laplacian_result, context.tolerances
        reports = [reilly_mean_curvature(mesh, field, result, tol)]
        for r in orders:
            reports.append(reilly_higher_order(mesh, field, result, r, tol))
        reports.append(
            reilly_mean_curvature(mesh, field, result, tol, "REILLY_1_3")
        )
        return reports


class ClassicalSpaceForm(Bound):
    """Bounds in the sphere, the hyperbolic space and Heintze's bound."""

    reports = ["REILLY_SPHERE_1_4", "REILLY_HYP_1_5", "HEINTZE_1_6"]
    mesh_kind = "closed"
    problem = "closed"

    def evaluate(self, context):
        mesh, field = context.mesh, context.field
        result, tol = context.laplacian_result, context.tolerances
        return [
            reilly_space_form(mesh, field, result, tol, "REILLY_SPHERE_1_4"),
            reilly_space_form(mesh, field, result, tol, "REILLY_HYP_1_5"),
            heintze(mesh, field, result, tol),
        ]


class GeneralTensor(Bound):
    """Weighted tensor bound of ``L_{T,f}`` in Euclidean space."""

    reports = ["GENERAL_1_7"]
    mesh_kind = "closed"
    problem = "closed"

    def evaluate(self, context):
        return [
            general_tensor_bound(
                context.mesh,
                context.field,
                context.T,
                context.S,
                context.closed_result,
                context.tolerances,
            )
        ]
