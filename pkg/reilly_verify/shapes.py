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

"""Builtin analytic shapes.

Every generator returns a valid :class:`reilly_verify.mesh.ImmersedMesh`
whose edge length behaves like ``2**-refinement``.

"""

__all__ = [
    "ShapeParameterError",
    "SHAPES",
    "DENSITY_PRESETS",
    "generate_shape",
    "density_field",
    "round_sphere",
    "ellipsoid",
    "flat_disk",
    "hemisphere",
    "annulus",
    "cylinder",
    "geodesic_sphere_in_S3",
    "geodesic_sphere_in_H3",
    "spherical_cap_in_S3",
]


# =============================================================================
# IMPORTS
# =============================================================================

import os

import numpy as np

from . import spaceform
from .mesh import ImmersedMesh
from .spaceform import SpaceForm


# =============================================================================
# CONSTANTS
# =============================================================================

SEED_ENV = "REILLY_VERIFY_SEED"

MAX_REFINEMENT = 8

#: jitter amplitude as a fraction of the mesh size
JITTER = 0.1

DENSITY_PRESETS = ("zero", "constant", "linear", "quadratic")

_GOLDEN = (1.0 + np.sqrt(5.0)) / 2.0

_ICOSAHEDRON_VERTICES = np.array(
    [
        [-1, _GOLDEN, 0],
        [1, _GOLDEN, 0],
        [-1, -_GOLDEN, 0],
        [1, -_GOLDEN, 0],
        [0, -1, _GOLDEN],
        [0, 1, _GOLDEN],
        [0, -1, -_GOLDEN],
        [0, 1, -_GOLDEN],
        [_GOLDEN, 0, -1],
        [_GOLDEN, 0, 1],
        [-_GOLDEN, 0, -1],
        [-_GOLDEN, 0, 1],
    ]
)

_ICOSAHEDRON_FACES = np.array(
    [
        [0, 11, 5],
        [0, 5, 1],
        [0, 1, 7],
        [0, 7, 10],
        [0, 10, 11],
        [1, 5, 9],
        [5, 11, 4],
        [11, 10, 2],
        [10, 7, 6],
        [7, 1, 8],
        [3, 9, 4],
        [3, 4, 2],
        [3, 2, 6],
        [3, 6, 8],
        [3, 8, 9],
        [4, 9, 5],
        [2, 4, 11],
        [6, 2, 10],
        [8, 6, 7],
        [9, 8, 1],
    ]
)


# =============================================================================
# EXCEPTIONS
# =============================================================================


class ShapeParameterError(ValueError):
    """Invalid parameters for a builtin shape."""


# =============================================================================
# PRIMITIVES
# =============================================================================


def _random_state(seed):
    if seed is None:
        seed = os.getenv(SEED_ENV)
    if seed is None or seed == "":
        return None
    return np.random.RandomState(int(seed))


def _check_refinement(refinement):
    refinement = int(refinement)
    if not 0 <= refinement <= MAX_REFINEMENT:
        raise ShapeParameterError(
            f"refinement must be in [0, {MAX_REFINEMENT}], got {refinement}"
        )
    return refinement


def _positive(name, value):
    value = float(value)
    if not (np.isfinite(value) and value > 0):
        raise ShapeParameterError(f"{name} must be positive, got {value}")
    return value


def _icosphere(refinement, random_state=None):
    """Unit icosphere with outward counterclockwise triangles."""
    radius = np.linalg.norm(_ICOSAHEDRON_VERTICES[0])
    vertices = list(_ICOSAHEDRON_VERTICES / radius)
    faces = _ICOSAHEDRON_FACES.tolist()
    for _ in range(refinement):
        cache, new_faces = {}, []

        def midpoint(a, b):
            key = (min(a, b), max(a, b))
            if key not in cache:
                mid = vertices[a] + vertices[b]
                vertices.append(mid / np.linalg.norm(mid))
                cache[key] = len(vertices) - 1
            return cache[key]

        for a, b, c in faces:
            ab, bc, ca = midpoint(a, b), midpoint(b, c), midpoint(c, a)
            new_faces.extend(
                [[a, ab, ca], [b, bc, ab], [c, ca, bc], [ab, bc, ca]]
            )
        faces = new_faces

    vertices = np.asarray(vertices)
    if random_state is not None:
        size = 1.1 * 2.0 ** -refinement
        vertices = vertices + JITTER * size * random_state.normal(
            size=vertices.shape
        )
        vertices /= np.linalg.norm(vertices, axis=1, keepdims=True)

    faces = np.asarray(faces)
    # orientation guard: outward for a star shaped closed surface
    det = np.einsum(
        "ij,ij->i",
        vertices[faces[:, 0]],
        np.cross(vertices[faces[:, 1]], vertices[faces[:, 2]]),
    )
    flip = det < 0
    faces[flip] = faces[flip][:, [0, 2, 1]]
    return vertices, faces


def _zipper(inner, outer):
    """Triangulate the band between two rings of vertex indices."""
    ni, no = len(inner), len(outer)
    triangles, a, b = [], 0, 0
    while a < ni or b < no:
        # compare the angular positions of the next inner and outer points
        if b == no or (a < ni and (a + 1) * no < (b + 1) * ni):
            triangles.append(
                [inner[a % ni], outer[b % no], inner[(a + 1) % ni]]
            )
            a += 1
        else:
            triangles.append(
                [inner[a % ni], outer[b % no], outer[(b + 1) % no]]
            )
            b += 1
    return triangles


def _rings(counts, fractions, random_state=None, fixed=()):
    """Polar parameter points for concentric rings.

    Returns the list of ``(fraction, angle)`` pairs and the triangles. A ring
    with a single point is a pole. Rings listed in ``fixed`` are not
    jittered.

    """
    params, triangles, rings = [], [], []
    for idx, (count, frac) in enumerate(zip(counts, fractions)):
        angles = 2.0 * np.pi * np.arange(count) / count
        fracs = np.full(count, float(frac))
        if random_state is not None and idx not in fixed and count > 1:
            step_a = 2.0 * np.pi / count
            step_r = abs(fractions[1] - fractions[0])
            angles = angles + JITTER * step_a * random_state.uniform(
                -1, 1, count
            )
            fracs = fracs + JITTER * step_r * random_state.uniform(
                -1, 1, count
            )
        start = len(params)
        params.extend(zip(fracs, angles))
        rings.append(list(range(start, start + count)))

    for inner, outer in zip(rings[:-1], rings[1:]):
        if len(inner) == 1:
            pole = inner[0]
            triangles.extend(
                [pole, outer[j], outer[(j + 1) % len(outer)]]
                for j in range(len(outer))
            )
        else:
            triangles.extend(_zipper(inner, outer))
    return np.asarray(params), np.asarray(triangles)


def _disk_rings(refinement, random_state=None):
    n = 2 ** refinement
    counts = [1] + [6 * i for i in range(1, n + 1)]
    fractions = np.arange(n + 1) / n
    return _rings(counts, fractions, random_state, fixed=(0, n))


def _round_cap(refinement, opening, random_state=None):
    """Unit sphere directions of the cap ``theta <= opening`` about e3."""
    params, triangles = _disk_rings(refinement, random_state)
    theta = opening * params[:, 0]
    phi = params[:, 1]
    directions = np.column_stack(
        [
            np.sin(theta) * np.cos(phi),
            np.sin(theta) * np.sin(phi),
            np.cos(theta),
        ]
    )
    return directions, triangles


def _model_sphere(delta, rho, directions):
    """Points at geodesic distance ``rho`` of the model origin."""
    space = SpaceForm(delta, 3)
    s, c = spaceform.radial_profile(delta, rho)
    points = np.column_stack(
        [np.full(len(directions), c / space.kappa), s * directions]
    )
    return space, space.project(points)


def _check_curved_radius(delta, rho):
    rho = _positive("rho", rho)
    if delta > 0 and rho >= np.pi / (2.0 * np.sqrt(delta)):
        raise ShapeParameterError(
            f"rho must be smaller than pi/(2 sqrt(delta)) = "
            f"{np.pi / (2 * np.sqrt(delta)):.6g}, got {rho}"
        )
    return rho


# =============================================================================
# SHAPES
# =============================================================================


def round_sphere(radius=1.0, refinement=3, center=None, random_state=None):
    radius = _positive("radius", radius)
    vertices, faces = _icosphere(refinement, random_state)
    center = np.zeros(3) if center is None else np.asarray(center, float)
    return SpaceForm(0.0, 3), radius * vertices + center, faces


def ellipsoid(a=1.0, b=1.0, c=1.5, refinement=3, random_state=None):
    axes = np.array([_positive(n, v) for n, v in zip("abc", (a, b, c))])
    vertices, faces = _icosphere(refinement, random_state)
    return SpaceForm(0.0, 3), vertices * axes, faces


def flat_disk(radius=1.0, refinement=3, random_state=None):
    radius = _positive("radius", radius)
    params, triangles = _disk_rings(refinement, random_state)
    r, phi = radius * params[:, 0], params[:, 1]
    vertices = np.column_stack([r * np.cos(phi), r * np.sin(phi), 0.0 * r])
    return SpaceForm(0.0, 3), vertices, triangles


def hemisphere(radius=1.0, refinement=3, random_state=None):
    """Upper half of the sphere of ``radius`` about the origin."""
    radius = _positive("radius", radius)
    directions, triangles = _round_cap(refinement, np.pi / 2, random_state)
    return SpaceForm(0.0, 3), radius * directions, triangles


def annulus(r0=0.5, r1=1.0, refinement=3, random_state=None):
    r0, r1 = _positive("r0", r0), _positive("r1", r1)
    if r0 >= r1:
        raise ShapeParameterError("annulus needs r0 < r1")
    n = max(2 ** refinement, 1)
    fractions = np.arange(n + 1) / n
    radii = r0 + (r1 - r0) * fractions
    step = (r1 - r0) / n
    counts = [max(6, int(round(2 * np.pi * rad / step))) for rad in radii]
    params, triangles = _rings(counts, fractions, random_state, fixed=(0, n))
    r = r0 + (r1 - r0) * params[:, 0]
    phi = params[:, 1]
    vertices = np.column_stack([r * np.cos(phi), r * np.sin(phi), 0.0 * r])
    return SpaceForm(0.0, 3), vertices, triangles


def cylinder(radius=1.0, height=1.0, refinement=3, random_state=None):
    """Open cylinder of ``radius`` and ``height`` around the third axis."""
    radius, height = _positive("radius", radius), _positive("height", height)
    n_theta = 6 * 2 ** refinement
    step = 2 * np.pi * radius / n_theta
    n_z = max(1, int(round(height / step)))
    theta = 2 * np.pi * np.arange(n_theta) / n_theta
    z = np.linspace(0.0, height, n_z + 1)
    tt, zz = np.meshgrid(theta, z)
    vertices = np.column_stack(
        [radius * np.cos(tt.ravel()), radius * np.sin(tt.ravel()), zz.ravel()]
    )

    def index(i, j):
        return j * n_theta + (i % n_theta)

    triangles = []
    for j in range(n_z):
        for i in range(n_theta):
            a, b = index(i, j), index(i + 1, j)
            c, d = index(i + 1, j + 1), index(i, j + 1)
            triangles.extend([[a, b, c], [a, c, d]])
    return SpaceForm(0.0, 3), vertices, np.asarray(triangles)


def geodesic_sphere_in_S3(rho, refinement=3, delta=1.0, random_state=None):
    """Geodesic sphere of radius ``rho`` about the origin of S^3."""
    delta = _positive("delta", delta)
    rho = _check_curved_radius(delta, rho)
    directions, faces = _icosphere(refinement, random_state)
    space, points = _model_sphere(delta, rho, directions)
    return space, points, faces


def geodesic_sphere_in_H3(rho, refinement=3, delta=-1.0, random_state=None):
    """Geodesic sphere of radius ``rho`` about the origin of H^3."""
    if not delta < 0:
        raise ShapeParameterError("hyperbolic shapes need delta < 0")
    rho = _check_curved_radius(delta, rho)
    directions, faces = _icosphere(refinement, random_state)
    space, points = _model_sphere(delta, rho, directions)
    return space, points, faces


def spherical_cap_in_S3(
    rho, refinement=3, opening=np.pi / 2, delta=1.0, random_state=None
):
    """Cap ``theta <= opening`` of the geodesic sphere of radius ``rho``.

    With the default opening the cap is half of the geodesic sphere and its
    boundary is a great circle of that sphere.

    """
    delta = _positive("delta", delta)
    rho = _check_curved_radius(delta, rho)
    opening = _positive("opening", opening)
    if opening >= np.pi:
        raise ShapeParameterError("opening must be smaller than pi")
    directions, triangles = _round_cap(refinement, opening, random_state)
    space, points = _model_sphere(delta, rho, directions)
    return space, points, triangles


SHAPES = {
    "round_sphere": round_sphere,
    "ellipsoid": ellipsoid,
    "flat_disk": flat_disk,
    "hemisphere": hemisphere,
    "annulus": annulus,
    "cylinder": cylinder,
    "geodesic_sphere_in_S3": geodesic_sphere_in_S3,
    "geodesic_sphere_in_H3": geodesic_sphere_in_H3,
    "spherical_cap_in_S3": spherical_cap_in_S3,
}


# =============================================================================
# DENSITY
# =============================================================================


def density_field(vertices, preset="zero", coefficients=None):
    """Evaluate a density preset at ambient vertex coordinates.

    Presets
    -------
    ``zero``
        ``f = 0``.
    ``constant``
        ``f = c`` with ``coefficients = c``.
    ``linear``
        ``f = a . x`` with ``coefficients = a`` (missing entries are 0).
    ``quadratic``
        ``f = a |x|^2`` with ``coefficients = a``.

    """
    vertices = np.asarray(vertices, dtype=float)
    if preset not in DENSITY_PRESETS:
        raise ShapeParameterError(
            f"unknown density preset {preset!r}; "
            f"choose one of {', '.join(DENSITY_PRESETS)}"
        )
    if preset == "zero":
        return np.zeros(len(vertices))
    coefficients = np.atleast_1d(
        np.asarray(0.0 if coefficients is None else coefficients, float)
    )
    if preset == "linear":
        a = np.zeros(vertices.shape[1])
        if len(coefficients) > len(a):
            raise ShapeParameterError("too many linear density coefficients")
        a[: len(coefficients)] = coefficients
        return vertices @ a
    if len(coefficients) != 1:
        raise ShapeParameterError(f"{preset} density takes one coefficient")
    if preset == "constant":
        return np.full(len(vertices), coefficients[0])
    return coefficients[0] * np.sum(vertices ** 2, axis=1)


# =============================================================================
# API
# =============================================================================


def generate_shape(
    name,
    refinement=3,
    density="zero",
    coefficients=None,
    seed=None,
    **params,
):
    """Build one of the builtin shapes.

    Parameters
    ----------
    name : str
        One of the keys of :data:`SHAPES`.
    refinement : int
        Subdivision level in ``[0, 8]``; edge lengths scale as
        ``2**-refinement``.
    density : str
        Density preset (see :func:`density_field`).
    coefficients : float or sequence, optional
        Density preset coefficients.
    seed : int, optional
        Jitter seed. Defaults to the ``REILLY_VERIFY_SEED`` environment
        variable; without seed the mesh is not jittered.
    params :
        Shape parameters (``radius``, ``rho``, ``a``, ``b``, ``c``, ...).

    Returns
    -------
    ImmersedMesh

    Examples
    --------

    .. code-block:: pycon

        >>> generate_shape("round_sphere", radius=1, refinement=4)
        ImmersedMesh(SpaceForm(model=EUCLIDEAN, delta=0.0, N=3),
                     vertices=2562, triangles=5120, closed=True)

    """
    if name not in SHAPES:
        raise ShapeParameterError(
            f"unknown shape {name!r}; choose one of {', '.join(SHAPES)}"
        )
    refinement = _check_refinement(refinement)
    random_state = _random_state(seed)
    try:
        space, vertices, cells = SHAPES[name](
            refinement=refinement, random_state=random_state, **params
        )
    except TypeError as err:
        raise ShapeParameterError(f"invalid parameters for {name}: {err}")

    provenance = {"shape": name, "refinement": refinement}
    provenance.update(
        {k: float(v) for k, v in params.items() if np.isscalar(v)}
    )
    provenance["density"] = density
    if coefficients is not None:
        provenance["coefficients"] = np.atleast_1d(coefficients).tolist()
    if random_state is not None:
        if seed is None:
            seed = os.getenv(SEED_ENV)
        provenance["jitter_seed"] = int(seed)

    return ImmersedMesh(
        space=space,
        vertices=vertices,
        cells=cells,
        density=density_field(vertices, density, coefficients),
        provenance=provenance,
    )
