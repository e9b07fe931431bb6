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

"""Exact geometry of the constant curvature model spaces.

Three models are supported, all selected by the curvature parameter
``delta``:

- ``delta == 0``: the Euclidean space R^N.
- ``delta > 0``: the round sphere of radius ``1/sqrt(delta)`` embedded in
  R^(N+1).
- ``delta < 0``: the upper sheet of the hyperboloid
  ``<x, x>_L = 1/delta`` in the Minkowski space R^(1,N) with signature
  ``(-, +, ..., +)``.

Every function works on stacked points (the last axis is the representation
axis) and is a pure function of its inputs.

"""

__all__ = [
    "DomainError",
    "InvalidPointError",
    "InjectivityDomainError",
    "NonTangentError",
    "SpaceForm",
    "RadialFrame",
    "radial_profile",
    "sinc_profile",
    "geodesic_distance",
    "log_map",
    "exp_map",
    "tangent_basis",
    "parallel_transport",
    "radial_frame",
]


# =============================================================================
# IMPORTS
# =============================================================================

import attr

import numpy as np


# =============================================================================
# CONSTANTS
# =============================================================================

EUCLIDEAN, SPHERE, HYPERBOLIC = "EUCLIDEAN", "SPHERE", "HYPERBOLIC"

MODELS = (EUCLIDEAN, SPHERE, HYPERBOLIC)

#: below this value of r*sqrt(|delta|) the radial profiles use their series.
SERIES_THRESHOLD = 1e-4

#: tolerance on the model constraint of a point.
POINT_TOLERANCE = 1e-10

#: points drifting more than this from the constraint surface are projected.
REPROJECT_TOLERANCE = 1e-12


# =============================================================================
# EXCEPTIONS
# =============================================================================


class DomainError(ValueError):
    """A radial function was evaluated outside of its domain."""


class InvalidPointError(ValueError):
    """A point does not satisfy the constraint of the model space."""


class InjectivityDomainError(ValueError):
    """A point lies outside the injectivity domain of a base point.

    On the sphere model this happens for (almost) antipodal points, where the
    logarithm is not defined.

    """


class NonTangentError(ValueError):
    """A vector is not tangent to the model space at its base point."""


# =============================================================================
# RADIAL PROFILES
# =============================================================================


def _profiles(delta, r):
    r = np.asarray(r, dtype=float)
    kappa = np.sqrt(abs(delta))
    x = r * kappa

    r2 = r * r
    d1, d2, d3 = delta * r2, (delta * r2) ** 2, (delta * r2) ** 3
    s_series = r * (1.0 - d1 / 6.0 + d2 / 120.0 - d3 / 5040.0)
    c_series = 1.0 - d1 / 2.0 + d2 / 24.0 - d3 / 720.0

    safe_kappa = kappa if kappa > 0 else 1.0
    if delta > 0:
        s_exact, c_exact = np.sin(x) / safe_kappa, np.cos(x)
    elif delta < 0:
        s_exact, c_exact = np.sinh(x) / safe_kappa, np.cosh(x)
    else:
        s_exact, c_exact = r, np.ones_like(r)

    small = x < SERIES_THRESHOLD
    s = np.where(small, s_series, s_exact)
    c = np.where(small, c_series, c_exact)
    return s, c


def radial_profile(delta, r):
    """Generalized sine and cosine of the model of curvature ``delta``.

    Parameters
    ----------
    delta : float
        Curvature of the model space.
    r : float or array-like
        Non negative geodesic distances. If ``delta > 0`` they must not
        exceed ``pi / sqrt(delta)``.

    Returns
    -------
    s, c : float or ndarray
        ``s_delta(r)`` and ``c_delta(r)``. Both are continuous in ``delta``
        and satisfy ``c**2 + delta * s**2 == 1``.

    Examples
    --------

    .. code-block:: pycon

        >>> radial_profile(0., 1.7)
        (1.7, 1.0)
        >>> radial_profile(-1., 1.)
        (1.1752011936438014, 1.5430806348152437)

    """
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr < 0):
        raise DomainError("radial profiles are defined for r >= 0 only")
    if delta > 0 and np.any(r_arr > np.pi / np.sqrt(delta) * (1 + 1e-12)):
        raise DomainError(
            f"r must not exceed pi/sqrt(delta) = {np.pi / np.sqrt(delta)}"
        )
    s, c = _profiles(delta, r_arr)
    if np.ndim(r) == 0:
        return float(s), float(c)
    return s, c


def sinc_profile(delta, r):
    """Return ``s_delta(r) / r`` with its limit 1 at ``r = 0``."""
    r = np.asarray(r, dtype=float)
    kappa = np.sqrt(abs(delta))
    d1 = delta * r * r
    series = 1.0 - d1 / 6.0 + d1 ** 2 / 120.0 - d1 ** 3 / 5040.0
    small = r * kappa < SERIES_THRESHOLD
    safe_r = np.where(small, 1.0, r)
    exact = _profiles(delta, safe_r)[0] / safe_r
    return np.where(small, series, exact)


# =============================================================================
# SPACE FORM
# =============================================================================


@attr.s(frozen=True, repr=False)
class SpaceForm:
    """Model space of constant curvature ``delta`` and dimension N.

    Parameters
    ----------
    delta : float
        Sectional curvature, in units of 1/length**2.
    ambient_dim : int
        Dimension N of the model space (not of its linear representation).

    """

    delta = attr.ib(converter=float)
    ambient_dim = attr.ib(default=3, converter=int)

    @delta.validator
    def _check_delta(self, attribute, value):
        if not np.isfinite(value):
            raise ValueError("delta must be finite")

    @ambient_dim.validator
    def _check_ambient_dim(self, attribute, value):
        if value < 2:
            raise ValueError("ambient_dim must be >= 2")

    def __repr__(self):
        return (
            f"SpaceForm(model={self.model}, delta={self.delta}, "
            f"N={self.ambient_dim})"
        )

    @classmethod
    def from_model(cls, model, delta, ambient_dim=3):
        """Build a space form checking that ``model`` agrees with ``delta``."""
        model = model.upper()
        if model not in MODELS:
            raise ValueError(f"unknown model {model!r}")
        expected = (
            EUCLIDEAN if delta == 0 else (SPHERE if delta > 0 else HYPERBOLIC)
        )
        if model != expected:
            raise ValueError(
                f"model {model} is incompatible with delta={delta}"
            )
        return cls(delta=delta, ambient_dim=ambient_dim)

    @property
    def model(self):
        if self.delta == 0:
            return EUCLIDEAN
        return SPHERE if self.delta > 0 else HYPERBOLIC

    @property
    def kappa(self):
        return np.sqrt(abs(self.delta))

    @property
    def representation_dim(self):
        """Number of coordinates of a point in the linear representation."""
        return self.ambient_dim + (0 if self.delta == 0 else 1)

    @property
    def origin(self):
        """Base point of the model (``e0 / sqrt(|delta|)`` if curved)."""
        point = np.zeros(self.representation_dim)
        if self.delta != 0:
            point[0] = 1.0 / self.kappa
        return point

    def inner(self, a, b):
        """Inner product of the representation space along the last axis."""
        a, b = np.asarray(a, dtype=float), np.asarray(b, dtype=float)
        prod = a * b
        if self.delta < 0:
            return prod[..., 1:].sum(axis=-1) - prod[..., 0]
        return prod.sum(axis=-1)

    def norm(self, v):
        """Norm of tangent (space-like) vectors."""
        return np.sqrt(np.maximum(self.inner(v, v), 0.0))

    def constraint_defect(self, x):
        """``|delta <x, x> - 1|`` for curved models, zero otherwise."""
        x = np.asarray(x, dtype=float)
        if self.delta == 0:
            return np.zeros(x.shape[:-1])
        return np.abs(self.delta * self.inner(x, x) - 1.0)

    def check_points(self, x, tol=POINT_TOLERANCE):
        """Validate the shape and the model constraint of points ``x``.

        Raises
        ------
        InvalidPointError
            If any point violates the constraint beyond ``tol``.

        """
        x = np.asarray(x, dtype=float)
        if x.shape[-1] != self.representation_dim:
            raise InvalidPointError(
                f"points of {self!r} have {self.representation_dim} "
                f"coordinates, got {x.shape[-1]}"
            )
        if not np.all(np.isfinite(x)):
            raise InvalidPointError("points must be finite")
        defect = self.constraint_defect(x)
        if np.any(defect > tol):
            raise InvalidPointError(
                f"model constraint violated by {float(np.max(defect)):.3e}"
            )
        if self.delta < 0 and np.any(x[..., 0] <= 0):
            raise InvalidPointError("hyperboloid points need x0 > 0")
        return x

    def project(self, x):
        """Project points onto the constraint surface of the model."""
        x = np.array(x, dtype=float)
        if self.delta > 0:
            norms = np.linalg.norm(x, axis=-1, keepdims=True)
            return x / (norms * self.kappa)
        if self.delta < 0:
            spatial = np.sum(x[..., 1:] ** 2, axis=-1)
            x[..., 0] = np.sqrt(1.0 / abs(self.delta) + spatial)
        return x

    def reproject(self, x):
        """Project only if some point drifted beyond the reprojection tol."""
        x = np.asarray(x, dtype=float)
        if np.any(self.constraint_defect(x) > REPROJECT_TOLERANCE):
            return self.project(x)
        return x


# =============================================================================
# DISTANCES, EXP AND LOG
# =============================================================================


def _chord_sq(space, a, b):
    w = np.asarray(b, dtype=float) - np.asarray(a, dtype=float)
    return np.maximum(space.inner(w, w), 0.0)


def geodesic_distance(space, a, b):
    """Geodesic distance between points ``a`` and ``b`` of ``space``.

    The curved branches are evaluated from the chord ``b - a``, which is
    equivalent to the ``arccos``/``arcosh`` expressions and keeps full
    relative precision for nearby points.

    """
    a = space.check_points(a)
    b = space.check_points(b)
    chord = np.sqrt(_chord_sq(space, a, b))
    if space.delta == 0:
        return chord
    kappa = space.kappa
    if space.delta > 0:
        return 2.0 / kappa * np.arcsin(np.clip(kappa * chord / 2.0, 0.0, 1.0))
    return 2.0 / kappa * np.arcsinh(kappa * chord / 2.0)


def log_map(space, p, x):
    """Logarithm of the point(s) ``x`` at the base point ``p``.

    Returns the tangent vector at ``p`` whose norm is the geodesic distance
    and whose exponential is ``x``; these are the normal coordinates of the
    model centered at ``p``.

    Raises
    ------
    InjectivityDomainError
        On the sphere model when ``x`` is (almost) antipodal to ``p``.

    """
    p = space.check_points(p)
    x = space.check_points(x)
    if space.delta == 0:
        return x - p
    dist = geodesic_distance(space, p, x)
    if space.delta > 0 and np.any(dist >= np.pi / space.kappa * (1 - 1e-9)):
        raise InjectivityDomainError(
            "antipodal points are outside the injectivity domain"
        )
    q = _chord_sq(space, p, x)
    # x - delta <p, x> p, written with the chord to avoid cancellation.
    u = (x - p) + (space.delta * q / 2.0)[..., None] * p
    return u / sinc_profile(space.delta, dist)[..., None]


def exp_map(space, p, v):
    """Exponential of the tangent vector(s) ``v`` at ``p``.

    Raises
    ------
    NonTangentError
        If ``v`` is not model-orthogonal to ``p``.

    """
    p = space.check_points(p)
    v = np.asarray(v, dtype=float)
    if space.delta == 0:
        return p + v
    scale = np.maximum(1.0, np.linalg.norm(p) * np.linalg.norm(v, axis=-1))
    if np.any(np.abs(space.inner(p, v)) > POINT_TOLERANCE * scale):
        raise NonTangentError("vector is not tangent at the base point")
    t = space.norm(v)
    _, c = _profiles(space.delta, t)
    x = c[..., None] * p + sinc_profile(space.delta, t)[..., None] * v
    return space.reproject(x)


def tangent_basis(space, p):
    """Model-orthonormal basis of the tangent space at ``p``.

    Returns
    -------
    ndarray of shape (N, D)
        One basis vector per row, expressed in the representation space.

    """
    p = space.check_points(p)
    n, dim = space.ambient_dim, space.representation_dim
    if space.delta == 0:
        return np.eye(n)

    q = p * space.kappa
    eye = np.eye(dim)
    if space.delta > 0:
        # householder reflection sending e0 to q
        w = q - eye[0]
        wn = np.dot(w, w)
        if wn < 1e-30:
            return eye[1:]
        reflection = eye - 2.0 * np.outer(w, w) / wn
        return reflection[1:]

    # lorentz boost sending e0 to q
    factor = q[1:] / (1.0 + q[0])
    return eye[1:] + factor[:, None] * (q + eye[0])[None, :]


def parallel_transport(space, x, y, w):
    """Transport tangent vectors ``w`` at ``x`` to ``y`` along the geodesic.

    Uses the closed form ``w - delta <y, w> / (1 + delta <x, y>) (x + y)``,
    which reduces to the identity on the Euclidean model.

    """
    w = np.asarray(w, dtype=float)
    if space.delta == 0:
        return w.copy()
    x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
    denom = 2.0 - space.delta * _chord_sq(space, x, y) / 2.0
    coef = space.delta * space.inner(y, w) / denom
    return w - coef[..., None] * (x + y)


# =============================================================================
# RADIAL FRAME
# =============================================================================


def _as_readonly(arr):
    arr = np.array(arr, dtype=float)
    arr.setflags(write=False)
    return arr


@attr.s(frozen=True, repr=False)
class RadialFrame:
    """Radial data of a set of vertices with respect to a base point.

    Attributes
    ----------
    space : SpaceForm
    base_point : ndarray
        The point ``p``.
    r : ndarray
        Geodesic distance of every vertex to ``p``.
    normal_coords : ndarray of shape (k, N)
        Normal coordinates ``x_i`` of every vertex, in ``basis``.
    X : ndarray of shape (k, D)
        Position field ``s_delta(r) grad(r)`` at every vertex.
    basis : ndarray of shape (N, D)
        Orthonormal basis of the tangent space at ``p``.

    """

    space = attr.ib()
    base_point = attr.ib(converter=_as_readonly)
    r = attr.ib(converter=_as_readonly)
    normal_coords = attr.ib(converter=_as_readonly)
    X = attr.ib(converter=_as_readonly)
    basis = attr.ib(converter=_as_readonly)

    def __repr__(self):
        return f"RadialFrame(k={len(self.r)}, R={self.radius:.6g})"

    @property
    def radius(self):
        """Largest distance from the base point."""
        return float(np.max(self.r)) if len(self.r) else 0.0

    @property
    def profiles(self):
        """``(s_delta(r), c_delta(r))`` per vertex."""
        return _profiles(self.space.delta, self.r)

    def within_ball(self, radius):
        return self.radius < radius

    @property
    def within_validity_region(self):
        """True if every vertex is closer than ``pi/(2 sqrt(delta))``."""
        if self.space.delta <= 0:
            return True
        return self.within_ball(np.pi / (2.0 * self.space.kappa))


def radial_frame(space, p, vertices):
    """Radial distances, normal coordinates and position field at vertices.

    Parameters
    ----------
    space : SpaceForm
    p : array-like
        Base point.
    vertices : array-like of shape (k, D)

    Returns
    -------
    RadialFrame

    Examples
    --------

    .. code-block:: pycon

        >>> space = SpaceForm(0., 3)
        >>> frame = radial_frame(space, np.zeros(3), [[0., 3., 4.]])
        >>> frame.r, frame.X
        (array([5.]), array([[0., 3., 4.]]))

    """
    p = space.check_points(p)
    vertices = space.check_points(np.atleast_2d(vertices))

    logs = log_map(space, p, vertices)
    r = geodesic_distance(space, p, vertices)
    basis = tangent_basis(space, p)
    coords = space.inner(logs[:, None, :], basis[None, :, :])

    q = _chord_sq(space, p, vertices)
    # delta <x, p> x - p, written with the chord to avoid cancellation.
    X = (vertices - p) - (space.delta * q / 2.0)[:, None] * vertices

    return RadialFrame(
        space=space,
        base_point=p,
        r=r,
        normal_coords=coords,
        X=X,
        basis=basis,
    )
