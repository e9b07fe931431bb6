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

"""Weighted center of mass and enclosing radius of a mesh."""

__all__ = [
    "CenterOfMassError",
    "CenterOfMass",
    "center_of_mass",
    "enclosing_radius",
    "quarter_ball_radius",
]


# =============================================================================
# IMPORTS
# =============================================================================

import logging

import attr

import numpy as np

from .. import mesh as _mesh, spaceform


# =============================================================================
# CONSTANTS
# =============================================================================

DEFECT_TOL = 1e-10

MAX_ITERATIONS = 200

logger = logging.getLogger("reilly_verify")


# =============================================================================
# EXCEPTIONS
# =============================================================================


class CenterOfMassError(RuntimeError):
    """The center of mass iteration did not converge."""


# =============================================================================
# FUNCTIONS
# =============================================================================


def quarter_ball_radius(delta):
    """``pi / (4 sqrt(delta))`` for ``delta > 0``, infinite otherwise."""
    if delta <= 0:
        return np.inf
    return np.pi / (4.0 * np.sqrt(delta))


@attr.s(frozen=True, repr=False)
class CenterOfMass:
    """Result of :func:`center_of_mass`.

    Attributes
    ----------
    point : ndarray
        The center ``p``.
    defect : float
        ``|int (s(r)/r) x_i mu_f| / (V_f diam)`` at ``p``.
    iterations : int
    radius : float
        Largest distance from ``p`` to a vertex of the mesh.

    """

    point = attr.ib()
    defect = attr.ib(converter=float)
    iterations = attr.ib(converter=int)
    radius = attr.ib(converter=float)
    delta = attr.ib(converter=float)

    def __repr__(self):
        return (
            f"CenterOfMass(defect={self.defect:.2e}, "
            f"iterations={self.iterations}, R={self.radius:.6g})"
        )

    @property
    def within_quarter_ball(self):
        return self.radius < quarter_ball_radius(self.delta)


def _weighted_field(space, p, vertices, weights):
    """``int (s(r)/r) log_p(x) mu_f`` and the largest distance."""
    logs = spaceform.log_map(space, p, vertices)
    r = space.norm(logs)
    factor = spaceform.sinc_profile(space.delta, r)
    field = np.tensordot(weights, factor[:, None] * logs, axes=(0, 0))
    return field, float(np.max(r))


def center_of_mass(mesh, weights=None, initial=None, tol=DEFECT_TOL):
    """Center of mass of ``mesh`` for its weighted measure.

    The point ``p`` where ``int (s_delta(r)/r) x_i mu_f = 0`` for the normal
    coordinates ``x_i`` at ``p``. It is found by the fixed point iteration
    ``p <- exp_p(int (s(r)/r) log_p(x) mu_f / V_f)`` started at the
    extrinsic mean projected to the model.

    Parameters
    ----------
    mesh : ImmersedMesh
        Surface or boundary curve.
    weights : array-like, optional
        Integration weight of every vertex; defaults to
        :func:`reilly_verify.mesh.vertex_weights`.
    initial : array-like, optional
        Starting point.
    tol : float
        Defect at which the iteration stops.

    Returns
    -------
    CenterOfMass

    Raises
    ------
    CenterOfMassError
        If the defect does not reach ``tol`` in 200 iterations.
    InjectivityDomainError
        If a vertex reaches the cut locus of an iterate.

    Examples
    --------

    .. code-block:: pycon

        >>> sphere = generate_shape("round_sphere", center=[1, 2, 3])
        >>> center_of_mass(sphere).point
        array([1., 2., 3.])

    """
    space = mesh.space
    vertices = np.asarray(mesh.vertices)
    weights = (
        _mesh.vertex_weights(mesh)
        if weights is None
        else np.asarray(weights, dtype=float)
    )
    volume = float(np.sum(weights))
    if initial is None:
        mean = np.tensordot(weights, vertices, axes=(0, 0)) / volume
        p = space.project(mean)
    else:
        p = space.check_points(initial)

    defect = np.inf
    for iteration in range(1, MAX_ITERATIONS + 1):
        field, radius = _weighted_field(space, p, vertices, weights)
        diameter = max(2.0 * radius, np.finfo(float).tiny)
        defect = float(space.norm(field)) / (volume * diameter)
        logger.debug(
            "center of mass iteration %d: defect %.3e", iteration, defect
        )
        if defect < tol:
            break
        p = space.reproject(spaceform.exp_map(space, p, field / volume))
    else:
        raise CenterOfMassError(
            f"center of mass did not converge after {MAX_ITERATIONS} "
            f"iterations (defect {defect:.3e})"
        )

    return CenterOfMass(
        point=p,
        defect=defect,
        iterations=iteration,
        radius=enclosing_radius(mesh, p),
        delta=space.delta,
    )


def enclosing_radius(mesh, p):
    """Largest geodesic distance from ``p`` to a vertex of ``mesh``.

    Examples
    --------

    .. code-block:: pycon

        >>> disk = generate_shape("flat_disk", radius=2.)
        >>> enclosing_radius(disk, [0., 0., 0.])
        2.0

    """
    p = mesh.space.check_points(p)
    distances = spaceform.geodesic_distance(mesh.space, p, mesh.vertices)
    return float(np.max(distances))
