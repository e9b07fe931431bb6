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

"""Integral and pointwise inequalities relating ``tr(T)``, the position
field ``X = s_delta(r) grad r`` about a center ``p`` and the drift
``H_T - T grad f``.

All the checks are oriented as ``lhs <= rhs`` so a positive normalized
residual ``lhs - rhs`` beyond the tolerance is a violation.

"""

__all__ = [
    "HsiungMinkowski",
    "DriftLemmas",
    "BallRadius",
    "identity_checks",
    "hm_integral",
    "hm_weighted_x",
    "hm_pointwise",
    "lemma_sd",
    "lemma_nonpositive",
    "lemma_positive",
    "ball_radius",
]


# =============================================================================
# IMPORTS
# =============================================================================

import attr

import numpy as np

from . import terms
from .center import center_of_mass, enclosing_radius, quarter_ball_radius
from .core import Bound, Hypothesis, Tolerances, make_identity_report
from .. import curvature, mesh as _mesh, spaceform


# =============================================================================
# RADIAL DATA
# =============================================================================


@attr.s(frozen=True)
class RadialData:
    """Vertex quantities about the center ``p`` shared by the checks."""

    mesh = attr.ib()
    frame = attr.ib()
    s = attr.ib()
    c = attr.ib()
    tangential = attr.ib()

    @classmethod
    def build(cls, mesh, field, p):
        frame = spaceform.radial_frame(mesh.space, p, mesh.vertices)
        s, c = frame.profiles
        tangential = terms.tangential_components(
            mesh.space, field.tangent_frames, frame.X
        )
        return cls(mesh=mesh, frame=frame, s=s, c=c, tangential=tangential)

    def integral(self, values):
        return terms.integral(self.mesh, values)


def _magnitude(*values):
    return max(abs(v) for v in values)


def _closed_hypotheses(mesh, tensor, role):
    return [terms.closed_mesh(mesh), terms.positive_definite(tensor, role)]


def _metadata(radial, **kwargs):
    meta = {
        "center_of_mass": np.asarray(radial.frame.base_point).tolist(),
        "R": radial.frame.radius,
    }
    meta.update(kwargs)
    return meta


# =============================================================================
# HSIUNG-MINKOWSKI
# =============================================================================


def hm_integral(radial, drift_T, T, tol):
    """``int tr(T) c mu_f <= -int <X, H_T - T grad f> mu_f``."""
    space = radial.mesh.space
    lhs = radial.integral(drift_T.traces * radial.c)
    rhs = -radial.integral(space.inner(radial.frame.X, drift_T.vectors))
    return make_identity_report(
        "HM_INTEGRAL",
        lhs,
        rhs,
        _magnitude(lhs, rhs),
        _closed_hypotheses(radial.mesh, T, "T"),
        tol,
        metadata=_metadata(radial),
    )


def hm_weighted_x(radial, drift_T, T, tol):
    """``int tr(T) c^2 - int |H_T - T grad f| s c <= delta int <TX, X>``."""
    delta = radial.mesh.space.delta
    first = radial.integral(drift_T.traces * radial.c ** 2)
    second = radial.integral(drift_T.norms * radial.s * radial.c)
    quadratic = terms.quadratic_form(
        drift_T.tensor_vertices, radial.tangential
    )
    rhs = delta * radial.integral(quadratic)
    lhs = first - second
    return make_identity_report(
        "HM_WEIGHTED_X",
        lhs,
        rhs,
        _magnitude(first, second, rhs),
        _closed_hypotheses(radial.mesh, T, "T"),
        tol,
        metadata=_metadata(radial, int_trT_c2=first, int_drift_sc=second),
    )


def _weak_divergence(mesh, T, radial):
    """Lumped weak ``div_f`` of ``T X^t`` at every vertex."""
    frames = _mesh.triangle_frames(mesh)
    corners = terms.corner_components(mesh, radial.frame.X)
    field = np.einsum("mij,mj->mi", T.matrices, corners.mean(axis=1))
    area_f = _mesh.weighted_measures(mesh).element_area_f
    local = -np.einsum("mak,mk->ma", frames.gradients, field) * area_f[:, None]
    total = np.zeros(mesh.num_vertices)
    for corner in range(3):
        np.add.at(total, mesh.cells[:, corner], local[:, corner])
    return total / _mesh.vertex_weights(mesh)


def hm_pointwise(radial, drift_T, T, tol):
    """``tr(T) c + <X, H_T - T grad f> <= div_f(T X^t)`` at every interior
    vertex, with the lumped weak divergence.

    The residual is normalized by the largest ``|tr(T) c| + |<X, D>|`` and
    the report carries the worst vertex.

    """
    mesh = radial.mesh
    space = mesh.space
    trace_term = drift_T.traces * radial.c
    drift_term = space.inner(radial.frame.X, drift_T.vectors)
    lhs = trace_term + drift_term
    rhs = _weak_divergence(mesh, T, radial)

    interior = np.ones(mesh.num_vertices, dtype=bool)
    if not mesh.is_closed:
        interior[mesh.boundary_vertices] = False
    idx = np.flatnonzero(interior)
    scale = float(np.max(np.abs(trace_term[idx]) + np.abs(drift_term[idx])))
    worst = idx[np.argmax(lhs[idx] - rhs[idx])]
    return make_identity_report(
        "HM_POINTWISE",
        lhs[worst],
        rhs[worst],
        scale,
        [terms.positive_definite(T, "T")],
        tol,
        locus=f"vertex {worst}",
        metadata=_metadata(radial, interior_vertices=len(idx)),
    )


# =============================================================================
# CENTER OF MASS LEMMAS
# =============================================================================


def lemma_sd(radial, drift_S, S, tol):
    """``int tr(S) s c mu_f <= int |H_S - S grad f| s^2 mu_f``."""
    lhs = radial.integral(drift_S.traces * radial.s * radial.c)
    rhs = radial.integral(drift_S.norms * radial.s ** 2)
    return make_identity_report(
        "LEMSD",
        lhs,
        rhs,
        _magnitude(lhs, rhs),
        _closed_hypotheses(radial.mesh, S, "S"),
        tol,
        metadata=_metadata(radial),
    )


def lemma_nonpositive(radial, drift_S, S, tol):
    """``1 / (delta + sup|D_S|^2 / inf tr(S)^2) <= int |X|^2 mu_f / V_f``
    for ``delta <= 0``.

    """
    space = radial.mesh.space
    delta = space.delta
    denominator = delta + drift_S.sup_norm ** 2 / drift_S.inf_trace ** 2
    lhs = 1.0 / denominator if denominator > 0 else np.nan
    rhs = radial.integral(radial.s ** 2) / terms.volume(radial.mesh)
    hypotheses = _closed_hypotheses(radial.mesh, S, "S") + [
        terms.curvature_sign(space, "nonpositive"),
        Hypothesis(
            "positive constant", denominator > 0, f"{denominator:.6g}"
        ),
    ]
    return make_identity_report(
        "LEM31",
        lhs,
        rhs,
        _magnitude(lhs, rhs),
        hypotheses,
        tol,
        metadata=_metadata(radial, constant=denominator),
    )


def lemma_positive(radial, drift_S, S, tol):
    """``1 / (1 + int |D_S|^2 / (delta inf tr(S)^2 V_f)) <= 1 - (int c /
    V_f)^2`` for ``delta > 0`` inside the ball of radius
    ``pi/(2 sqrt(delta))``.

    """
    space = radial.mesh.space
    delta = space.delta
    V_f = terms.volume(radial.mesh)
    hypotheses = _closed_hypotheses(radial.mesh, S, "S") + [
        terms.curvature_sign(space, "positive"),
        Hypothesis(
            "contained in ball of radius pi/(2 sqrt(delta))",
            radial.frame.within_validity_region,
            f"R = {radial.frame.radius:.6g}",
        ),
    ]
    lhs = np.nan
    if delta > 0:
        ratio = drift_S.integral_sq / (delta * drift_S.inf_trace ** 2 * V_f)
        lhs = 1.0 / (1.0 + ratio)
    rhs = 1.0 - (radial.integral(radial.c) / V_f) ** 2
    return make_identity_report(
        "LEM32",
        lhs,
        rhs,
        _magnitude(lhs, rhs) if delta > 0 else 1.0,
        hypotheses,
        tol,
        metadata=_metadata(radial, V_f=V_f),
    )


# =============================================================================
# BALL RADIUS
# =============================================================================


def ball_radius(mesh, drift_T, T, center, tol):
    """``1 <= s(R)^2 (sup|D_T|^2 / inf tr(T)^2 + delta)`` for a domain
    inside a ball of radius ``R < pi/(4 sqrt(delta))`` about the center of
    mass of its boundary.

    """
    space = mesh.space
    delta = space.delta
    R = enclosing_radius(mesh, center.point)
    limit = quarter_ball_radius(delta)
    hypotheses = [
        terms.closed_mesh(mesh, expected=False),
        terms.positive_definite(T, "T"),
        terms.curvature_sign(space, "positive"),
        Hypothesis(
            "contained in ball of radius pi/(4 sqrt(delta))",
            R < limit,
            f"R = {R:.6g}, limit = {limit:.6g}",
        ),
    ]
    if delta > 0:
        R = min(R, np.pi / np.sqrt(delta))
    s_R, _ = spaceform.radial_profile(delta, R)
    ratio = drift_T.sup_norm ** 2 / drift_T.inf_trace ** 2
    rhs = float(s_R) ** 2 * (ratio + delta)
    metadata = terms.center_metadata(center)
    metadata.update({"R": R, "sup_ratio_sq": ratio})
    return make_identity_report(
        "PROP5",
        1.0,
        rhs,
        _magnitude(1.0, rhs),
        hypotheses,
        tol,
        metadata=metadata,
    )


# =============================================================================
# ALL TOGETHER
# =============================================================================


def identity_checks(mesh, T, field, S=None, center=None, tolerances=None):
    """Evaluate every integral and pointwise inequality of a mesh.

    Parameters
    ----------
    mesh : ImmersedMesh
    T : TangentTensorField
        Tensor of the Hsiung-Minkowski checks and the ball radius bound.
    field : CurvatureField
    S : TangentTensorField, optional
        Tensor of the center of mass lemmas; defaults to ``T``.
    center : CenterOfMass, optional
        Center of mass of ``mesh`` when it is closed, of its boundary
        otherwise.
    tolerances : Tolerances, optional

    Returns
    -------
    list of IdentityReport
        The checks that are theorems on closed meshes report
        ``hypotheses_unmet`` on meshes with boundary, ``PROP5`` the other
        way around.

    Examples
    --------

    .. code-block:: pycon

        >>> sphere = generate_shape("round_sphere", refinement=3)
        >>> field = second_fundamental_form(sphere)
        >>> Id = identity_tensor(sphere)
        >>> [r.status for r in identity_checks(sphere, Id, field)][:2]
        ['equality_within_tol', 'equality_within_tol']

    """
    tolerances = Tolerances() if tolerances is None else tolerances
    S = T if S is None else S
    if center is None:
        target = mesh if mesh.is_closed else _mesh.boundary_complex(mesh)
        center = center_of_mass(target)
    radial = RadialData.build(mesh, field, center.point)
    drift_T = curvature.drift_term(mesh, field, T)
    drift_S = curvature.drift_term(mesh, field, S)
    tol, ptol = tolerances.identity_tol, tolerances.pointwise_tol
    reports = [
        hm_integral(radial, drift_T, T, tol),
        hm_weighted_x(radial, drift_T, T, tol),
        hm_pointwise(radial, drift_T, T, ptol),
        lemma_sd(radial, drift_S, S, tol),
        lemma_nonpositive(radial, drift_S, S, tol),
        lemma_positive(radial, drift_S, S, tol),
        ball_radius(mesh, drift_T, T, center, tol),
    ]
    return reports


# =============================================================================
# CHECKS
# =============================================================================


def _radial(context):
    return RadialData.build(
        context.mesh, context.field, context.identity_center.point
    )


class HsiungMinkowski(Bound):
    """Integral, weighted and pointwise Hsiung-Minkowski inequalities."""

    reports = ["HM_INTEGRAL", "HM_WEIGHTED_X", "HM_POINTWISE"]

    def evaluate(self, context):
        radial, T = _radial(context), context.T
        drift_T = context.drift(T)
        tol = context.tolerances
        return [
            hm_integral(radial, drift_T, T, tol.identity_tol),
            hm_weighted_x(radial, drift_T, T, tol.identity_tol),
            hm_pointwise(radial, drift_T, T, tol.pointwise_tol),
        ]


class DriftLemmas(Bound):
    """Inequalities satisfied about the center of mass of a closed mesh."""

    reports = ["LEMSD", "LEM31", "LEM32"]
    mesh_kind = "closed"

    def evaluate(self, context):
        radial, S = _radial(context), context.S
        drift_S = context.drift(S)
        tol = context.tolerances.identity_tol
        return [
            lemma_sd(radial, drift_S, S, tol),
            lemma_nonpositive(radial, drift_S, S, tol),
            lemma_positive(radial, drift_S, S, tol),
        ]


class BallRadius(Bound):
    """Lower bound of the radius of a ball containing a domain."""

    reports = ["PROP5"]
    mesh_kind = "boundary"

    def evaluate(self, context):
        T = context.T
        return [
            ball_radius(
                context.mesh,
                context.drift(T),
                T,
                context.center("boundary"),
                context.tolerances.identity_tol,
            )
        ]
