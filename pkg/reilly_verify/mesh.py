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

"""Triangulated manifolds immersed in a model space, with a density.

The intrinsic geometry of every triangle is the flat metric determined by
the *geodesic* lengths of its edges in the ambient model, so curved models
get the correct induced metric up to O(h^2).

"""

__all__ = [
    "MeshParseError",
    "NonManifoldError",
    "DegenerateTriangleError",
    "ClosedMeshError",
    "ImmersedMesh",
    "WeightedMeasures",
    "TriangleFrames",
    "parse_mesh",
    "write_mesh",
    "read_mesh",
    "edge_lengths",
    "induced_metric",
    "triangle_areas",
    "triangle_frames",
    "weighted_measures",
    "vertex_weights",
    "integrate",
    "boundary_complex",
    "boundary_loops",
]


# =============================================================================
# IMPORTS
# =============================================================================

from collections import Counter
from functools import cached_property

import attr

import numpy as np

from scipy import sparse
from scipy.sparse import csgraph

from . import spaceform
from .spaceform import SpaceForm


# =============================================================================
# CONSTANTS
# =============================================================================

MAGIC = "WMESH"

#: strict triangle inequality tolerance (relative to the longest edge).
TRIANGLE_INEQUALITY_TOL = 1e-12

#: triangles with area below this fraction of the mean area are rejected.
DEGENERATE_AREA_TOL = 1e-12

#: 2-point Gauss abscissae on [0, 1].
GAUSS_POINTS = (0.5 - 0.5 / np.sqrt(3.0), 0.5 + 0.5 / np.sqrt(3.0))


# =============================================================================
# EXCEPTIONS
# =============================================================================


class MeshParseError(ValueError):
    """Malformed mesh file. ``lineno`` is the offending 1-based line."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class NonManifoldError(ValueError):
    """The cell complex is not a connected oriented manifold."""


class DegenerateTriangleError(ValueError):
    """A triangle is degenerate in the induced metric."""


class ClosedMeshError(ValueError):
    """A boundary was requested from a closed mesh."""


# =============================================================================
# MESH
# =============================================================================


def _readonly(dtype):
    def convert(value):
        arr = np.array(value, dtype=dtype)
        arr.setflags(write=False)
        return arr

    return convert


@attr.s(frozen=True, repr=False)
class ImmersedMesh:
    """Immutable triangulated (or polygonal) manifold with density.

    Parameters
    ----------
    space : SpaceForm
        Ambient model.
    vertices : array-like of shape (k, D)
        Model points.
    cells : array-like of int, shape (m, 3) or (m, 2)
        Triangles (surfaces) or oriented edges (curves).
    density : array-like of shape (k,), optional
        Density exponent ``f`` at every vertex (``mu_f = exp(-f) dv``).
    provenance : dict, optional
        Free description of where the mesh comes from.
    parent_vertices : array-like of int, optional
        For boundary complexes, the vertex indices in the parent mesh.

    """

    space = attr.ib(validator=attr.validators.instance_of(SpaceForm))
    vertices = attr.ib(converter=_readonly(float))
    cells = attr.ib(converter=_readonly(np.int64))
    density = attr.ib(default=None)
    provenance = attr.ib(factory=dict)
    parent_vertices = attr.ib(default=None)

    def __attrs_post_init__(self):
        density = self.density
        if density is None:
            density = np.zeros(len(self.vertices))
        object.__setattr__(self, "density", _readonly(float)(density))
        if self.parent_vertices is not None:
            object.__setattr__(
                self,
                "parent_vertices",
                _readonly(np.int64)(self.parent_vertices),
            )
        self._validate()

    def __repr__(self):
        kind = "triangles" if self.intrinsic_dim == 2 else "edges"
        return (
            f"ImmersedMesh({self.space!r}, vertices={self.num_vertices}, "
            f"{kind}={self.num_cells}, closed={self.is_closed})"
        )

    # VALIDATION ==============================================================

    def _validate(self):
        space, cells = self.space, self.cells
        if self.vertices.ndim != 2 or len(self.vertices) == 0:
            raise ValueError("vertices must be a non empty 2D array")
        space.check_points(self.vertices)
        if self.density.shape != (self.num_vertices,):
            raise ValueError("one density value per vertex is required")
        if not np.all(np.isfinite(self.density)):
            raise ValueError("density must be finite")
        if cells.ndim != 2 or cells.shape[1] not in (2, 3) or not len(cells):
            raise NonManifoldError("cells must be edges or triangles")
        if cells.min() < 0 or cells.max() >= self.num_vertices:
            raise NonManifoldError("cell references an unknown vertex")
        if any(len(set(c)) != len(c) for c in cells.tolist()):
            raise NonManifoldError("cell with repeated vertices")
        if len(np.unique(cells)) != self.num_vertices:
            raise NonManifoldError("mesh has unreferenced vertices")

        if self.intrinsic_dim == 2:
            self._validate_surface()
        else:
            counts = np.bincount(cells.ravel(), minlength=self.num_vertices)
            if counts.max() > 2:
                raise NonManifoldError("curve vertex shared by > 2 edges")

        ncomp, _ = csgraph.connected_components(self.adjacency)
        if ncomp != 1:
            raise NonManifoldError(f"mesh has {ncomp} connected components")

    def _validate_surface(self):
        directed = Counter()
        for tri in self.cells.tolist():
            for a, b in zip(tri, tri[1:] + tri[:1]):
                directed[(a, b)] += 1
        undirected = Counter()
        for (a, b), count in directed.items():
            if count > 1:
                raise NonManifoldError(
                    f"edge ({a}, {b}) used twice with the same orientation"
                )
            undirected[(min(a, b), max(a, b))] += 1
        bad = [edge for edge, count in undirected.items() if count > 2]
        if bad:
            raise NonManifoldError(
                f"edge {bad[0]} shared by more than two triangles"
            )
        # computed eagerly so degenerate triangles fail at construction
        triangle_areas(self)

    # PROPERTIES ==============================================================

    @property
    def intrinsic_dim(self):
        return self.cells.shape[1] - 1

    @property
    def num_vertices(self):
        return len(self.vertices)

    @property
    def num_cells(self):
        return len(self.cells)

    @property
    def triangles(self):
        if self.intrinsic_dim != 2:
            raise AttributeError("a curve has no triangles")
        return self.cells

    @cached_property
    def edges(self):
        """Sorted unique undirected edges, shape (e, 2)."""
        if self.intrinsic_dim == 1:
            return np.unique(np.sort(self.cells, axis=1), axis=0)
        tri = self.cells
        pairs = np.concatenate(
            [tri[:, [0, 1]], tri[:, [1, 2]], tri[:, [2, 0]]]
        )
        return np.unique(np.sort(pairs, axis=1), axis=0)

    @cached_property
    def adjacency(self):
        """Symmetric vertex adjacency matrix (CSR, boolean pattern)."""
        edges = self.edges
        k = self.num_vertices
        data = np.ones(2 * len(edges))
        rows = np.concatenate([edges[:, 0], edges[:, 1]])
        cols = np.concatenate([edges[:, 1], edges[:, 0]])
        return sparse.csr_matrix((data, (rows, cols)), shape=(k, k))

    @cached_property
    def boundary_edges(self):
        """Oriented edges that belong to exactly one triangle."""
        if self.intrinsic_dim != 2:
            return np.empty((0, 2), dtype=np.int64)
        tri = self.cells
        directed = np.concatenate(
            [tri[:, [0, 1]], tri[:, [1, 2]], tri[:, [2, 0]]]
        )
        keys = np.sort(directed, axis=1)
        _, inverse, counts = np.unique(
            keys, axis=0, return_inverse=True, return_counts=True
        )
        once = counts[np.ravel(inverse)] == 1
        return directed[once]

    @property
    def is_closed(self):
        if self.intrinsic_dim == 1:
            counts = np.bincount(self.cells.ravel())
            return bool(np.all(counts == 2))
        return len(self.boundary_edges) == 0

    @cached_property
    def boundary_vertices(self):
        return np.unique(self.boundary_edges)

    @property
    def euler_characteristic(self):
        faces = self.num_cells if self.intrinsic_dim == 2 else 0
        return self.num_vertices - len(self.edges) + faces

    @cached_property
    def mesh_size(self):
        """Longest geodesic edge length ``h``."""
        return float(np.max(edge_lengths(self)))

    # DERIVED MESHES ==========================================================

    def with_density(self, density):
        """Copy of the mesh carrying another density."""
        return attr.evolve(self, density=np.asarray(density, dtype=float))

    def scaled(self, factor):
        """Homothetic copy. Only defined for the Euclidean model."""
        if self.space.delta != 0:
            raise ValueError("only Euclidean meshes can be scaled")
        provenance = dict(self.provenance, scale=float(factor))
        return attr.evolve(
            self,
            vertices=np.asarray(self.vertices) * factor,
            provenance=provenance,
        )


# =============================================================================
# INTRINSIC GEOMETRY
# =============================================================================


def edge_lengths(mesh):
    """Geodesic edge lengths.

    Returns
    -------
    ndarray
        Shape (m, 3) for triangles, with column ``i`` the length of the edge
        opposite to corner ``i``; shape (m,) for curves.

    """
    cached = mesh.__dict__.get("_edge_lengths")
    if cached is not None:
        return cached
    V, C = mesh.vertices, mesh.cells
    dist = spaceform.geodesic_distance
    if mesh.intrinsic_dim == 1:
        lengths = dist(mesh.space, V[C[:, 0]], V[C[:, 1]])
    else:
        lengths = np.column_stack(
            [
                dist(mesh.space, V[C[:, 1]], V[C[:, 2]]),
                dist(mesh.space, V[C[:, 2]], V[C[:, 0]]),
                dist(mesh.space, V[C[:, 0]], V[C[:, 1]]),
            ]
        )
    lengths.setflags(write=False)
    mesh.__dict__["_edge_lengths"] = lengths
    return lengths


def _check_triangle_inequality(lengths):
    ordered = -np.sort(-lengths, axis=1)
    a, b, c = ordered.T
    slack = (b + c) - a
    bad = np.flatnonzero(slack <= TRIANGLE_INEQUALITY_TOL * a)
    if len(bad):
        raise DegenerateTriangleError(
            f"triangle {bad[0]} violates the strict triangle inequality"
        )
    return a, b, c


def induced_metric(mesh):
    """Flat metric of every triangle from its geodesic edge lengths.

    The metric is written in the basis ``(v1 - v0, v2 - v0)``, so
    ``g11 = l2**2``, ``g22 = l1**2`` and ``g12`` follows from the law of
    cosines.

    Returns
    -------
    ndarray of shape (m, 2, 2)

    """
    lengths = edge_lengths(mesh)
    _check_triangle_inequality(lengths)
    l0, l1, l2 = (lengths[:, i] ** 2 for i in range(3))
    g12 = (l2 + l1 - l0) / 2.0
    metric = np.empty((len(lengths), 2, 2))
    metric[:, 0, 0], metric[:, 1, 1] = l2, l1
    metric[:, 0, 1] = metric[:, 1, 0] = g12
    return metric


def triangle_areas(mesh):
    """Triangle areas by the numerically stable form of Heron's formula."""
    cached = mesh.__dict__.get("_triangle_areas")
    if cached is not None:
        return cached
    a, b, c = _check_triangle_inequality(edge_lengths(mesh))
    prod = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c))
    areas = 0.25 * np.sqrt(np.maximum(prod, 0.0))
    tiny = np.flatnonzero(areas < DEGENERATE_AREA_TOL * areas.mean())
    if len(tiny):
        raise DegenerateTriangleError(f"triangle {tiny[0]} has zero area")
    areas.setflags(write=False)
    mesh.__dict__["_triangle_areas"] = areas
    return areas


@attr.s(frozen=True, repr=False)
class TriangleFrames:
    """Local flat coordinates of every triangle and the matching frame.

    Attributes
    ----------
    coords : ndarray of shape (m, 3, 2)
        Corner coordinates: ``v0 = (0, 0)``, ``v1 = (l2, 0)``, ``v2`` above
        the first axis.
    gradients : ndarray of shape (m, 3, 2)
        Constant gradients of the three barycentric functions.
    frames : ndarray of shape (m, 2, D)
        Orthonormal tangent vectors at ``v0`` (ambient representation)
        aligned with the two coordinate axes.

    """

    coords = attr.ib()
    gradients = attr.ib()
    frames = attr.ib()

    def __repr__(self):
        return f"TriangleFrames(m={len(self.coords)})"

    def to_ambient(self, vectors_2d):
        """Map per-triangle 2D vectors to ambient vectors at ``v0``."""
        return np.einsum("mk,mkd->md", vectors_2d, self.frames)


def triangle_frames(mesh):
    """Flat coordinates, barycentric gradients and tangent frames."""
    cached = mesh.__dict__.get("_triangle_frames")
    if cached is not None:
        return cached

    lengths = edge_lengths(mesh)
    areas = triangle_areas(mesh)
    l0, l1, l2 = lengths.T
    x2 = (l2 ** 2 + l1 ** 2 - l0 ** 2) / (2.0 * l2)
    y2 = 2.0 * areas / l2

    m = len(lengths)
    coords = np.zeros((m, 3, 2))
    coords[:, 1, 0] = l2
    coords[:, 2, 0], coords[:, 2, 1] = x2, y2

    edges = np.stack(
        [coords[:, 1] - coords[:, 0], coords[:, 2] - coords[:, 0]]
    )
    edges = np.transpose(edges, (1, 2, 0))  # columns are the edge vectors
    inv = np.linalg.inv(edges)  # rows are grad(lambda1), grad(lambda2)
    gradients = np.empty((m, 3, 2))
    gradients[:, 1:] = inv
    gradients[:, 0] = -inv.sum(axis=1)

    space, V, T = mesh.space, mesh.vertices, mesh.cells
    base = V[T[:, 0]]
    e1 = spaceform.log_map(space, base, V[T[:, 1]])
    e2 = spaceform.log_map(space, base, V[T[:, 2]])
    e1 = e1 / space.norm(e1)[:, None]
    e2 = e2 - space.inner(e2, e1)[:, None] * e1
    e2 = e2 / space.norm(e2)[:, None]
    frames = np.stack([e1, e2], axis=1)

    result = TriangleFrames(coords=coords, gradients=gradients, frames=frames)
    mesh.__dict__["_triangle_frames"] = result
    return result


# =============================================================================
# MEASURES
# =============================================================================


@attr.s(frozen=True, repr=False)
class WeightedMeasures:
    """Weighted areas and lengths of a mesh (``mu_f = exp(-f) dv``)."""

    element_area_f = attr.ib(converter=_readonly(float))
    boundary_length_f = attr.ib(converter=_readonly(float))
    total_volume_f = attr.ib(converter=float)
    boundary_volume_f = attr.ib(converter=float)

    def __repr__(self):
        return (
            f"WeightedMeasures(V_f={self.total_volume_f:.6g}, "
            f"V_f(boundary)={self.boundary_volume_f:.6g})"
        )


def _midpoint_factors(mesh):
    # exp(-f) at the three edge midpoints; column i is opposite to corner i
    f = mesh.density[mesh.cells]
    mid = np.column_stack(
        [
            (f[:, 1] + f[:, 2]) / 2,
            (f[:, 2] + f[:, 0]) / 2,
            (f[:, 0] + f[:, 1]) / 2,
        ]
    )
    return np.exp(-mid)


def _gauss_factors(mesh, edges, lengths):
    f = mesh.density[edges]
    factors = [
        np.exp(-((1 - t) * f[:, 0] + t * f[:, 1])) for t in GAUSS_POINTS
    ]
    return np.column_stack(factors), lengths


def _curve_weighted_lengths(mesh, edges):
    lengths = spaceform.geodesic_distance(
        mesh.space, mesh.vertices[edges[:, 0]], mesh.vertices[edges[:, 1]]
    )
    factors, lengths = _gauss_factors(mesh, edges, lengths)
    return lengths / 2.0 * factors.sum(axis=1)


def weighted_measures(mesh):
    """Per-element weighted areas and boundary lengths.

    Triangles use the 3-point mid-edge rule on the linearly interpolated
    density and boundary edges the 2-point Gauss rule. On a curve mesh
    ``element_area_f`` holds the weighted edge lengths.

    Examples
    --------

    .. code-block:: pycon

        >>> sphere = generate_shape("round_sphere", radius=1, refinement=4)
        >>> weighted_measures(sphere).total_volume_f  # ~ 4 pi
        12.5...

    """
    if mesh.intrinsic_dim == 1:
        elements = _curve_weighted_lengths(mesh, mesh.cells)
        boundary = np.empty(0)
    else:
        areas = triangle_areas(mesh)
        elements = areas / 3.0 * _midpoint_factors(mesh).sum(axis=1)
        boundary = (
            _curve_weighted_lengths(mesh, mesh.boundary_edges)
            if not mesh.is_closed
            else np.empty(0)
        )
    return WeightedMeasures(
        element_area_f=elements,
        boundary_length_f=boundary,
        total_volume_f=np.sum(elements),
        boundary_volume_f=np.sum(boundary),
    )


def vertex_weights(mesh):
    """Integration weight of every vertex (row sums of the mass matrix)."""
    cached = mesh.__dict__.get("_vertex_weights")
    if cached is not None:
        return cached
    k = mesh.num_vertices
    if mesh.intrinsic_dim == 1:
        edges = mesh.cells
        lengths = edge_lengths(mesh)
        factors, _ = _gauss_factors(mesh, edges, lengths)
        t = np.asarray(GAUSS_POINTS)
        w_a = lengths / 2.0 * (factors * (1 - t)).sum(axis=1)
        w_b = lengths / 2.0 * (factors * t).sum(axis=1)
        weights = np.bincount(edges[:, 0], w_a, minlength=k)
        weights += np.bincount(edges[:, 1], w_b, minlength=k)
    else:
        tri = mesh.cells
        third = triangle_areas(mesh) / 3.0
        mid = _midpoint_factors(mesh)
        weights = np.zeros(k)
        for corner in range(3):
            # the two midpoints touching a corner are the edges not opposite
            others = [i for i in range(3) if i != corner]
            local = third * 0.5 * mid[:, others].sum(axis=1)
            weights += np.bincount(tri[:, corner], local, minlength=k)
    weights.setflags(write=False)
    mesh.__dict__["_vertex_weights"] = weights
    return weights


def integrate(mesh, values):
    """Integral of a vertex field against ``mu_f``.

    Equals ``1^T M u`` with ``M`` the weighted mass matrix, i.e. the
    quadrature of the piecewise linear interpolant. ``values`` may carry
    extra trailing axes.

    """
    values = np.asarray(values, dtype=float)
    return np.tensordot(vertex_weights(mesh), values, axes=(0, 0))


# =============================================================================
# BOUNDARY
# =============================================================================


def boundary_loops(mesh):
    """Boundary polylines as lists of vertex indices in traversal order."""
    edges = mesh.boundary_edges
    if not len(edges):
        return []
    following = {}
    for a, b in edges.tolist():
        if a in following:
            raise NonManifoldError(f"boundary pinches at vertex {a}")
        following[a] = b

    loops, pending = [], set(following)
    for start in sorted(following):
        if start not in pending:
            continue
        loop, current = [], start
        while current in pending:
            pending.discard(current)
            loop.append(current)
            current = following[current]
        loops.append(np.array(loop, dtype=np.int64))
    return loops


def boundary_complex(mesh):
    """Boundary curve(s) of a surface mesh as a 1-dimensional mesh.

    The edges keep the orientation induced by the triangles so the outward
    conormal points to the right of the traversal direction. Vertices keep
    their positions and densities; ``parent_vertices`` maps back to
    ``mesh``.

    Raises
    ------
    ClosedMeshError
        If ``mesh`` has no boundary.

    """
    if mesh.intrinsic_dim != 2:
        raise ValueError("boundary_complex expects a surface mesh")
    if mesh.is_closed:
        raise ClosedMeshError("a closed mesh has no boundary")
    edges = mesh.boundary_edges
    parent = np.unique(edges)
    local = np.searchsorted(parent, edges)
    return _BoundaryMesh(
        space=mesh.space,
        vertices=mesh.vertices[parent],
        cells=local,
        density=mesh.density[parent],
        provenance=dict(mesh.provenance, boundary_of=True),
        parent_vertices=parent,
    )


class _BoundaryMesh(ImmersedMesh):
    # several loops (annulus) are a valid boundary
    def _validate(self):
        self.space.check_points(self.vertices)
        counts = np.bincount(self.cells.ravel(), minlength=self.num_vertices)
        if counts.max() > 2:
            raise NonManifoldError("boundary vertex shared by > 2 edges")

    @property
    def num_loops(self):
        ncomp, _ = csgraph.connected_components(self.adjacency)
        return ncomp


# =============================================================================
# IO
# =============================================================================


def parse_mesh(text, source="<string>"):
    """Build an :class:`ImmersedMesh` from WMESH text.

    The format is line oriented: a ``WMESH <model> <delta>`` header, a
    ``<num_vertices> <num_triangles> <ambient_coord_count>`` line, one line
    per vertex (coordinates then the density value) and one line per
    triangle (three 0-based indices, counterclockwise with respect to the
    outward orientation). Lines starting with ``#`` are ignored.

    Raises
    ------
    MeshParseError
        With the line number of the first malformed line.

    """
    lines = [
        (number, line.strip())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise MeshParseError(f"{source} is empty")

    def numbers(entry, count, kind, what):
        lineno, line = entry
        tokens = line.split()
        if len(tokens) != count:
            raise MeshParseError(
                f"expected {count} values in {what}, found {len(tokens)}",
                lineno,
            )
        try:
            return [kind(tok) for tok in tokens]
        except ValueError:
            raise MeshParseError(f"malformed {what}: {line!r}", lineno)

    lineno, header = lines[0]
    tokens = header.split()
    if len(tokens) != 3 or tokens[0] != MAGIC:
        raise MeshParseError(f"header must be '{MAGIC} <model> <delta>'", 1)
    try:
        delta = float(tokens[2])
    except ValueError:
        raise MeshParseError(f"invalid delta {tokens[2]!r}", lineno)
    model = tokens[1].upper()

    if len(lines) < 2:
        raise MeshParseError("missing counts line", lineno)
    nv, nt, ncoords = numbers(lines[1], 3, int, "counts line")
    if nv <= 0 or nt <= 0 or ncoords < 2:
        raise MeshParseError("counts must be positive", lines[1][0])

    ambient_dim = ncoords if model == spaceform.EUCLIDEAN else ncoords - 1
    try:
        space = SpaceForm.from_model(model, delta, ambient_dim)
    except ValueError as err:
        raise MeshParseError(str(err), lineno)

    body = lines[2:]
    if len(body) != nv + nt:
        last = body[-1][0] if body else lines[1][0]
        raise MeshParseError(
            f"expected {nv} vertex and {nt} triangle lines, "
            f"found {len(body)} data lines",
            last,
        )
    rows = [numbers(e, ncoords + 1, float, "vertex line") for e in body[:nv]]
    tris = [numbers(e, 3, int, "triangle line") for e in body[nv:]]
    for entry, tri in zip(body[nv:], tris):
        if min(tri) < 0 or max(tri) >= nv:
            raise MeshParseError(f"vertex index out of range {tri}", entry[0])

    rows = np.asarray(rows)
    return ImmersedMesh(
        space=space,
        vertices=rows[:, :-1],
        cells=tris,
        density=rows[:, -1],
        provenance={"source": str(source)},
    )


def write_mesh(mesh):
    """Serialize a surface mesh to WMESH text."""
    if mesh.intrinsic_dim != 2:
        raise ValueError("only surface meshes can be written")
    space = mesh.space
    lines = [
        f"{MAGIC} {space.model} {space.delta!r}",
        f"# {_provenance_line(mesh.provenance)}",
        f"{mesh.num_vertices} {mesh.num_cells} {space.representation_dim}",
    ]
    for point, f in zip(mesh.vertices.tolist(), mesh.density.tolist()):
        lines.append(" ".join(repr(v) for v in point + [f]))
    for tri in mesh.cells.tolist():
        lines.append(" ".join(str(v) for v in tri))
    return "\n".join(lines) + "\n"


def _provenance_line(provenance):
    return ", ".join(f"{k}={v}" for k, v in sorted(provenance.items()))


def read_mesh(path):
    """Parse the WMESH file at ``path``."""
    with open(path, encoding="utf-8") as fp:
        return parse_mesh(fp.read(), source=path)
