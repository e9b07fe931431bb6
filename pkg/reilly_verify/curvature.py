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

"""Discrete second fundamental form and the curvature quantities built on it.

Conventions
-----------

- ``B(X, Y)`` is the normal part of the ambient covariant derivative and
  ``H = tr(B) / n`` is the mean curvature vector (arithmetic mean).
- For a tensor ``T`` the generalized mean curvature is the normal vector
  ``H_T = tr(T o B)``, so ``H_Id = n H``.
- On hypersurfaces the chosen unit normal is opposite to the orientation
  normal of the triangles (the inner normal of an outward oriented closed
  surface); the shape operator ``A`` is taken with respect to it and
  ``H_r = e_r(k) / C(n, r)``, which makes ``H_r = 1`` on the unit sphere.

"""

__all__ = [
    "DegenerateNeighborhoodError",
    "CodimensionError",
    "NotPositiveDefiniteError",
    "FrameMismatchError",
    "IndefiniteTensorWarning",
    "CurvatureField",
    "TangentTensorField",
    "DriftTerm",
    "BoundaryCurvature",
    "second_fundamental_form",
    "principal_curvatures",
    "mean_curvatures",
    "identity_tensor",
    "newton_tensor",
    "generalized_mean_curvature",
    "drift_term",
    "boundary_curvature",
    "boundary_scalar_at_vertices",
    "read_tensor_field",
    "write_tensor_field",
]


# =============================================================================
# IMPORTS
# =============================================================================

import warnings

import attr

import numpy as np

from . import mesh as _mesh, spaceform


# =============================================================================
# CONSTANTS
# =============================================================================

#: minimum number of two-ring neighbours of the quadratic fit
MIN_NEIGHBORS = 5

#: symmetric tolerance of tensor matrices
SYMMETRY_TOL = 1e-12

ASSERTED, UNCHECKED = "asserted", "unchecked"


# =============================================================================
# EXCEPTIONS
# =============================================================================


class DegenerateNeighborhoodError(ValueError):
    """The local quadratic fit at a vertex is rank deficient."""


class CodimensionError(ValueError):
    """A hypersurface-only quantity was requested in higher codimension."""


class NotPositiveDefiniteError(ValueError):
    """A tensor used as T or S is not positive definite."""


class FrameMismatchError(ValueError):
    """A tensor field and a curvature field live on different meshes."""


class IndefiniteTensorWarning(UserWarning):
    """A Newton tensor is indefinite somewhere on the mesh."""


warnings.simplefilter("always", IndefiniteTensorWarning)


# =============================================================================
# FRAME TRANSFER
# =============================================================================


def _frame_transfer(
    space, source_points, source_frames, target_points, target_frames
):
    """Components of transported source frames in target frames.

    Returns ``C`` with ``C[..., a, b] = <target_a, P(source_b)>``.

    """
    src = np.repeat(source_points[:, None, :], source_frames.shape[1], axis=1)
    dst = np.repeat(target_points[:, None, :], source_frames.shape[1], axis=1)
    moved = spaceform.parallel_transport(space, src, dst, source_frames)
    return space.inner(target_frames[:, :, None, :], moved[:, None, :, :])


def _triangle_corner_transfer(mesh, vertex_frames, corner):
    """Transfer matrices from the vertex frames of a corner to triangles."""
    tri = mesh.cells
    frames = _mesh.triangle_frames(mesh).frames
    V = mesh.vertices
    return _frame_transfer(
        mesh.space,
        V[tri[:, corner]],
        vertex_frames[tri[:, corner]],
        V[tri[:, 0]],
        frames,
    )


def _vertex_to_triangles(mesh, vertex_frames, vertex_mats):
    total = np.zeros((mesh.num_cells, 2, 2))
    for corner in range(3):
        C = _triangle_corner_transfer(mesh, vertex_frames, corner)
        M = vertex_mats[mesh.cells[:, corner]]
        total += C @ M @ np.transpose(C, (0, 2, 1))
    return total / 3.0


def _triangles_to_vertex(mesh, vertex_frames, tri_mats):
    tri, V = mesh.cells, mesh.vertices
    frames = _mesh.triangle_frames(mesh).frames
    areas = _mesh.triangle_areas(mesh)
    total = np.zeros((mesh.num_vertices, 2, 2))
    weight = np.zeros(mesh.num_vertices)
    for corner in range(3):
        v = tri[:, corner]
        C = _frame_transfer(
            mesh.space, V[tri[:, 0]], frames, V[v], vertex_frames[v]
        )
        local = C @ tri_mats @ np.transpose(C, (0, 2, 1))
        np.add.at(total, v, areas[:, None, None] * local)
        np.add.at(weight, v, areas)
    return total / weight[:, None, None]


def _triangle_vectors_to_vertex(mesh, vertex_frames, vectors_2d):
    """Area weighted vertex average of per-triangle tangent vectors."""
    tri, V = mesh.cells, mesh.vertices
    frames = _mesh.triangle_frames(mesh)
    ambient = frames.to_ambient(vectors_2d)
    areas = _mesh.triangle_areas(mesh)
    total = np.zeros((mesh.num_vertices, 2))
    weight = np.zeros(mesh.num_vertices)
    for corner in range(3):
        v = tri[:, corner]
        moved = spaceform.parallel_transport(
            mesh.space, V[tri[:, 0]], V[v], ambient
        )
        comps = mesh.space.inner(vertex_frames[v], moved[:, None, :])
        np.add.at(total, v, areas[:, None] * comps)
        np.add.at(weight, v, areas)
    return total / weight[:, None]


# =============================================================================
# CURVATURE FIELD
# =============================================================================


@attr.s(frozen=True, repr=False)
class CurvatureField:
    """Per-vertex second fundamental form of a surface mesh.

    Attributes
    ----------
    mesh : ImmersedMesh
    tangent_frames : ndarray of shape (k, 2, D)
        Orthonormal tangent frame of every vertex.
    normal_frames : ndarray of shape (k, p, D)
        Orthonormal normal frame; ``p`` is the codimension. On hypersurfaces
        the single normal is the chosen unit normal.
    second_fund : ndarray of shape (k, p, 2, 2)
        Components ``<B(t_i, t_j), n_a>``.

    """

    mesh = attr.ib()
    tangent_frames = attr.ib()
    normal_frames = attr.ib()
    second_fund = attr.ib()

    def __repr__(self):
        return (
            f"CurvatureField(k={len(self.second_fund)}, "
            f"codimension={self.codimension})"
        )

    @property
    def codimension(self):
        return self.normal_frames.shape[1]

    @property
    def is_hypersurface(self):
        return self.codimension == 1

    @property
    def vectors(self):
        """Vector valued second fundamental form, shape (k, 2, 2, D)."""
        return np.einsum(
            "kpij,kpd->kijd", self.second_fund, self.normal_frames
        )

    @property
    def mean_vector(self):
        """Mean curvature vector ``H = tr(B) / n`` at every vertex."""
        traces = np.trace(self.second_fund, axis1=2, axis2=3)
        return 0.5 * np.einsum("kp,kpd->kd", traces, self.normal_frames)

    @property
    def mean_norm(self):
        return self.mesh.space.norm(self.mean_vector)

    @property
    def unit_normal(self):
        self._require_hypersurface()
        return self.normal_frames[:, 0]

    @property
    def shape_operator(self):
        """Shape operator w.r.t. the chosen unit normal, shape (k, 2, 2)."""
        self._require_hypersurface()
        return self.second_fund[:, 0]

    def _require_hypersurface(self):
        if not self.is_hypersurface:
            raise CodimensionError(
                f"quantity defined on hypersurfaces only "
                f"(codimension is {self.codimension})"
            )


def _two_ring(mesh):
    adj = mesh.adjacency
    ring = (adj + adj @ adj).tocsr()
    ring.setdiag(0)
    ring.eliminate_zeros()
    ring.sort_indices()
    return ring


def _incident_pairs(mesh):
    """For each vertex, the (next, previous) corners of incident triangles."""
    pairs = [[] for _ in range(mesh.num_vertices)]
    for tri in mesh.cells.tolist():
        for c in range(3):
            pairs[tri[c]].append((tri[(c + 1) % 3], tri[(c + 2) % 3]))
    return [np.asarray(p, dtype=np.int64) for p in pairs]


def _fit(u, z, weights, vertex):
    design = np.column_stack(
        [0.5 * u[:, 0] ** 2, u[:, 0] * u[:, 1], 0.5 * u[:, 1] ** 2, u]
    )
    sw = np.sqrt(weights)[:, None]
    coef, _, rank, sv = np.linalg.lstsq(sw * design, sw * z, rcond=None)
    if rank < design.shape[1] or sv[-1] <= 1e-12 * sv[0]:
        raise DegenerateNeighborhoodError(
            f"rank deficient quadratic fit at vertex {vertex}"
        )
    hess = np.empty((z.shape[1], 2, 2))
    hess[:, 0, 0], hess[:, 0, 1] = coef[0], coef[1]
    hess[:, 1, 0], hess[:, 1, 1] = coef[1], coef[2]
    return hess, coef[3:]  # (p, 2, 2), (2, p)


def second_fundamental_form(mesh):
    """Estimate the second fundamental form at every vertex.

    Two-ring neighbours are mapped to the geodesic normal coordinates of the
    ambient model at the vertex, where the Christoffel symbols vanish. The
    tangent plane is the top-2 singular subspace of the weighted
    displacement cloud, corrected once by the fitted slope, and every normal
    coordinate is fitted by a weighted quadratic whose Hessian is the second
    fundamental form.

    Raises
    ------
    DegenerateNeighborhoodError
        If a vertex has fewer than 5 two-ring neighbours or a rank deficient
        fit.

    """
    if mesh.intrinsic_dim != 2:
        raise ValueError("curvature is defined for surface meshes")
    space, V = mesh.space, mesh.vertices
    ring = _two_ring(mesh)
    sigma = float(np.mean(_mesh.edge_lengths(mesh)))
    incident = _incident_pairs(mesh)
    n_amb = space.ambient_dim

    k, dim = mesh.num_vertices, space.representation_dim
    tangents = np.empty((k, 2, dim))
    normals = np.empty((k, n_amb - 2, dim))
    second = np.empty((k, n_amb - 2, 2, 2))

    for v in range(k):
        nbrs = ring.indices[ring.indptr[v] : ring.indptr[v + 1]]
        if len(nbrs) < MIN_NEIGHBORS:
            raise DegenerateNeighborhoodError(
                f"vertex {v} has {len(nbrs)} two-ring neighbours "
                f"(at least {MIN_NEIGHBORS} needed)"
            )
        basis = spaceform.tangent_basis(space, V[v])
        logs = spaceform.log_map(space, V[v], V[nbrs])
        Y = space.inner(logs[:, None, :], basis[None, :, :])
        weights = np.exp(-np.sum(Y ** 2, axis=1) / (2.0 * sigma ** 2))

        _, _, vt = np.linalg.svd(np.sqrt(weights)[:, None] * Y)
        frame = vt
        for _ in range(2):
            u, z = Y @ frame[:2].T, Y @ frame[2:].T
            hess, slope = _fit(u, z, weights, v)
            tilted = frame[:2] + slope @ frame[2:]
            q, _ = np.linalg.qr(np.vstack([tilted, frame[2:]]).T)
            frame = q.T
        u, z = Y @ frame[:2].T, Y @ frame[2:].T
        hess, _ = _fit(u, z, weights, v)

        if n_amb == 3:
            # the chosen unit normal is opposite to the orientation normal
            pairs = incident[v]
            lp = space.inner(
                spaceform.log_map(space, V[v], V[pairs.ravel()])[:, None, :],
                basis[None, :, :],
            ).reshape(len(pairs), 2, n_amb)
            orient = np.cross(lp[:, 0], lp[:, 1]).sum(axis=0)
            if np.dot(orient, frame[2]) > 0:
                frame[2] = -frame[2]
                hess = -hess

        tangents[v] = frame[:2] @ basis
        normals[v] = frame[2:] @ basis
        second[v] = hess

    return CurvatureField(
        mesh=mesh,
        tangent_frames=tangents,
        normal_frames=normals,
        second_fund=second,
    )


def principal_curvatures(field):
    """Eigenvalues of the shape operator, ascending, shape (k, 2)."""
    return np.linalg.eigvalsh(field.shape_operator)


def mean_curvatures(field):
    """Normalized mean curvatures ``H_0, H_1, H_2`` as columns, shape (k, 3).

    ``H_r = e_r(k1, k2) / C(2, r)``.

    """
    k1, k2 = principal_curvatures(field).T
    return np.column_stack([np.ones_like(k1), (k1 + k2) / 2.0, k1 * k2])


# =============================================================================
# TENSOR FIELDS
# =============================================================================


@attr.s(frozen=True, repr=False)
class TangentTensorField:
    """Symmetric (1,1)-tensor field on a surface mesh.

    The tensor is constant on every triangle and written in the orthonormal
    frame returned by :func:`reilly_verify.mesh.triangle_frames`.

    Attributes
    ----------
    mesh : ImmersedMesh
    matrices : ndarray of shape (m, 2, 2)
    name : str
        Human readable description (``identity``, ``newton(1)``, ...).
    divergence_free : str
        ``"asserted"`` for builtin tensors, ``"unchecked"`` otherwise.
    isotropic_scale : float or None
        If set the tensor is ``isotropic_scale * Id`` everywhere.
    vertex_matrices, vertex_frames : ndarray or None
        Exact vertex values, when the tensor is built from vertex data.

    """

    mesh = attr.ib()
    matrices = attr.ib()
    name = attr.ib(default="custom")
    divergence_free = attr.ib(default=UNCHECKED)
    isotropic_scale = attr.ib(default=None)
    vertex_matrices = attr.ib(default=None)
    vertex_frames = attr.ib(default=None)

    def __attrs_post_init__(self):
        mats = np.asarray(self.matrices, dtype=float)
        if mats.shape != (self.mesh.num_cells, 2, 2):
            raise FrameMismatchError(
                f"expected {self.mesh.num_cells} 2x2 matrices, "
                f"got shape {mats.shape}"
            )
        if np.max(np.abs(mats - np.transpose(mats, (0, 2, 1)))) > SYMMETRY_TOL:
            raise ValueError("tensor matrices must be symmetric")

    def __repr__(self):
        return f"TangentTensorField({self.name}, m={len(self.matrices)})"

    @property
    def frame(self):
        return _mesh.triangle_frames(self.mesh).frames

    @property
    def traces(self):
        return np.trace(self.matrices, axis1=1, axis2=2)

    @property
    def min_eigenvalue(self):
        return float(np.min(np.linalg.eigvalsh(self.matrices)))

    @property
    def is_positive_definite(self):
        return self.min_eigenvalue > 0

    def check_positive_definite(self, role="T"):
        """Raise if the tensor cannot be used as ``role``."""
        low = self.min_eigenvalue
        if low <= 0:
            raise NotPositiveDefiniteError(
                f"{role} = {self.name} is not positive definite "
                f"(min eigenvalue {low:.3e}); the bounds require a positive "
                f"definite tensor"
            )
        return self

    def at_vertices(self, frames):
        """Vertex values in the given vertex frames, shape (k, 2, 2)."""
        if self.isotropic_scale is not None:
            return np.broadcast_to(
                self.isotropic_scale * np.eye(2), (len(frames), 2, 2)
            ).copy()
        if self.vertex_matrices is not None:
            C = self.mesh.space.inner(
                frames[:, :, None, :], self.vertex_frames[:, None, :, :]
            )
            return C @ self.vertex_matrices @ np.transpose(C, (0, 2, 1))
        return _triangles_to_vertex(self.mesh, frames, self.matrices)

    def scaled(self, factor):
        factor = float(factor)
        return attr.evolve(
            self,
            matrices=factor * np.asarray(self.matrices),
            name=f"{factor:g}*{self.name}",
            isotropic_scale=(
                None
                if self.isotropic_scale is None
                else factor * self.isotropic_scale
            ),
            vertex_matrices=(
                None
                if self.vertex_matrices is None
                else factor * self.vertex_matrices
            ),
        )


def identity_tensor(mesh, scale=1.0):
    """The tensor ``scale * Id``."""
    scale = float(scale)
    name = "identity" if scale == 1 else f"scaled_identity({scale:g})"
    return TangentTensorField(
        mesh=mesh,
        matrices=np.broadcast_to(scale * np.eye(2), (mesh.num_cells, 2, 2)),
        name=name,
        divergence_free=ASSERTED,
        isotropic_scale=scale,
    )


def newton_tensor(field, r):
    """Newton tensor ``T_r`` of a hypersurface (``r`` in ``{0, 1}``).

    ``T_0 = Id`` and ``T_1 = tr(A) Id - A``. Positivity is not guaranteed:
    an :class:`IndefiniteTensorWarning` is emitted and callers must check
    before using the result as T or S.

    """
    field._require_hypersurface()
    n = 2
    if r not in range(n):
        raise ValueError(f"r must be in [0, {n - 1}] for surfaces, got {r}")
    mesh = field.mesh
    if r == 0:
        tensor = identity_tensor(mesh)
        return attr.evolve(tensor, name="newton(0)")

    A = field.shape_operator
    vertex_mats = np.trace(A, axis1=1, axis2=2)[:, None, None] * np.eye(2) - A
    tri_mats = _vertex_to_triangles(mesh, field.tangent_frames, vertex_mats)
    tri_mats = 0.5 * (tri_mats + np.transpose(tri_mats, (0, 2, 1)))
    tensor = TangentTensorField(
        mesh=mesh,
        matrices=tri_mats,
        name=f"newton({r})",
        divergence_free=ASSERTED,
        vertex_matrices=vertex_mats,
        vertex_frames=field.tangent_frames,
    )
    if not tensor.is_positive_definite:
        warnings.warn(
            f"newton({r}) is indefinite (min eigenvalue "
            f"{tensor.min_eigenvalue:.3e})",
            IndefiniteTensorWarning,
        )
    return tensor


def _same_mesh(a, b):
    return a is b or (
        a.num_vertices == b.num_vertices
        and a.num_cells == b.num_cells
        and np.array_equal(a.cells, b.cells)
        and np.array_equal(a.vertices, b.vertices)
    )


def _check_same_mesh(field, tensor):
    if not _same_mesh(tensor.mesh, field.mesh):
        raise FrameMismatchError(
            "tensor field and curvature field belong to different meshes"
        )


def generalized_mean_curvature(field, T):
    """Normal vector ``H_T = sum_ij T_ij B_ij`` at every vertex.

    Raises
    ------
    FrameMismatchError
        If ``T`` is defined on another mesh.
    NotPositiveDefiniteError
        If ``T`` is not positive definite.

    """
    _check_same_mesh(field, T)
    T.check_positive_definite()
    Tv = T.at_vertices(field.tangent_frames)
    return np.einsum(
        "kij,kpij,kpd->kd", Tv, field.second_fund, field.normal_frames
    )


# =============================================================================
# DRIFT
# =============================================================================


@attr.s(frozen=True, repr=False)
class DriftTerm:
    """The vertex field ``H_T - T(grad f)`` and its statistics."""

    mesh = attr.ib()
    normal_part = attr.ib()
    tangent_part = attr.ib()
    gradient = attr.ib()
    tensor_vertices = attr.ib()

    def __repr__(self):
        return (
            f"DriftTerm(sup={self.sup_norm:.6g}, "
            f"inf_trace={self.inf_trace:.6g})"
        )

    @property
    def vectors(self):
        return self.normal_part + self.tangent_part

    @property
    def norms(self):
        return self.mesh.space.norm(self.vectors)

    @property
    def traces(self):
        return np.trace(self.tensor_vertices, axis1=1, axis2=2)

    @property
    def sup_norm(self):
        return float(np.max(self.norms))

    @property
    def inf_trace(self):
        return float(np.min(self.traces))

    @property
    def integral_sq(self):
        """``int |H_T - T grad f|^2 mu_f``."""
        return float(_mesh.integrate(self.mesh, self.norms ** 2))

    def integral_sc(self, frame):
        """``int |H_T - T grad f| s_delta c_delta mu_f`` about a radial
        frame.

        """
        s, c = frame.profiles
        return float(_mesh.integrate(self.mesh, self.norms * s * c))


def drift_term(mesh, field, T):
    """Vertexwise drift ``H_T - T(grad f)`` of a weighted surface.

    ``grad f`` is the intrinsic gradient of the piecewise linear density,
    averaged to the vertices; the tangent part ``-T(grad f)`` and the normal
    part ``H_T`` are orthogonal by construction.

    """
    _check_same_mesh(field, T)
    if mesh is not field.mesh and not _same_mesh(mesh, field.mesh):
        raise FrameMismatchError("curvature field belongs to another mesh")
    T.check_positive_definite()
    normal = generalized_mean_curvature(field, T)
    Tv = T.at_vertices(field.tangent_frames)

    frames = _mesh.triangle_frames(mesh)
    grad_tri = np.einsum(
        "mi,mik->mk", mesh.density[mesh.cells], frames.gradients
    )
    grad = _triangle_vectors_to_vertex(mesh, field.tangent_frames, grad_tri)
    tgrad = np.einsum("kij,kj->ki", Tv, grad)

    return DriftTerm(
        mesh=mesh,
        normal_part=normal,
        tangent_part=-np.einsum("ka,kad->kd", tgrad, field.tangent_frames),
        gradient=np.einsum("ka,kad->kd", grad, field.tangent_frames),
        tensor_vertices=Tv,
    )


# =============================================================================
# BOUNDARY CURVES
# =============================================================================


@attr.s(frozen=True, repr=False)
class BoundaryCurvature:
    """Curvature data of the boundary curve of a surface.

    Arrays are indexed like the vertices of ``boundary`` (the boundary
    complex). ``curvature_vectors`` are the curvature vectors of the curve
    in the ambient model, ``df_ds`` the derivative of the density along the
    unit ``tangents``.

    """

    boundary = attr.ib()
    tangents = attr.ib()
    curvature_vectors = attr.ib()
    df_ds = attr.ib()

    def __repr__(self):
        return f"BoundaryCurvature(k={len(self.df_ds)})"

    @property
    def curvature(self):
        return self.boundary.space.norm(self.curvature_vectors)

    def drift(self, scalars):
        """``H_S - S grad f`` for a scalar ``S`` per boundary vertex."""
        scalars = np.asarray(scalars, dtype=float)
        vec = self.curvature_vectors - self.df_ds[:, None] * self.tangents
        return scalars[:, None] * vec

    def drift_norms(self, scalars):
        return self.boundary.space.norm(self.drift(scalars))


def boundary_curvature(mesh):
    """Curvature vectors of the boundary polyline(s) of ``mesh``.

    At every vertex the two adjacent chords are taken in the normal
    coordinates of the ambient model; the discrete curvature vector
    ``2 (u_prev + u_next) / (l_prev + l_next)`` (``u`` unit chord
    directions) is exact on uniform polygons inscribed in circles.

    """
    boundary = _mesh.boundary_complex(mesh)
    space, parent = mesh.space, boundary.parent_vertices
    nb = boundary.num_vertices
    dim = space.representation_dim
    tangents = np.empty((nb, dim))
    curv = np.empty((nb, dim))
    df_ds = np.empty(nb)

    for loop in _mesh.boundary_loops(mesh):
        prev, nxt = np.roll(loop, 1), np.roll(loop, -1)
        here = mesh.vertices[loop]
        to_prev = spaceform.log_map(space, here, mesh.vertices[prev])
        to_next = spaceform.log_map(space, here, mesh.vertices[nxt])
        lp, ln = space.norm(to_prev), space.norm(to_next)
        up, un = to_prev / lp[:, None], to_next / ln[:, None]

        tangent = un - up
        tangent /= space.norm(tangent)[:, None]
        kappa = 2.0 * (up + un) / (lp + ln)[:, None]
        kappa -= space.inner(kappa, tangent)[:, None] * tangent

        f = mesh.density
        fv, fp, fn = f[loop], f[prev], f[nxt]
        slope = ((fn - fv) / ln * lp + (fv - fp) / lp * ln) / (lp + ln)

        local = np.searchsorted(parent, loop)
        tangents[local], curv[local], df_ds[local] = tangent, kappa, slope

    return BoundaryCurvature(
        boundary=boundary,
        tangents=tangents,
        curvature_vectors=curv,
        df_ds=df_ds,
    )


def boundary_scalar_at_vertices(boundary, values):
    """Average per-edge scalars of a boundary complex to its vertices."""
    values = np.broadcast_to(np.asarray(values, float), (boundary.num_cells,))
    total = np.zeros(boundary.num_vertices)
    count = np.zeros(boundary.num_vertices)
    for col in range(2):
        np.add.at(total, boundary.cells[:, col], values)
        np.add.at(count, boundary.cells[:, col], 1.0)
    return total / count


# =============================================================================
# TENSOR FILES
# =============================================================================


def write_tensor_field(T):
    """Serialize a tensor as ``t a11 a12 a22`` rows in the triangle frame."""
    lines = [f"# tensor {T.name} in the triangle frames of the mesh"]
    for idx, mat in enumerate(np.asarray(T.matrices).tolist()):
        lines.append(f"{idx} {mat[0][0]!r} {mat[0][1]!r} {mat[1][1]!r}")
    return "\n".join(lines) + "\n"


def read_tensor_field(path, mesh):
    """Load a per-triangle tensor file written for ``mesh``."""
    mats = np.full((mesh.num_cells, 2, 2), np.nan)
    with open(path, encoding="utf-8") as fp:
        for lineno, line in enumerate(fp, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            tokens = line.split()
            try:
                idx = int(tokens[0])
                a11, a12, a22 = (float(tok) for tok in tokens[1:])
            except ValueError:
                raise _mesh.MeshParseError(
                    f"malformed tensor row {line!r}", lineno
                )
            if not 0 <= idx < mesh.num_cells:
                raise _mesh.MeshParseError(f"unknown triangle {idx}", lineno)
            mats[idx] = [[a11, a12], [a12, a22]]
    if np.isnan(mats).any():
        raise FrameMismatchError(
            f"{path} does not define a tensor on every triangle"
        )
    return TangentTensorField(
        mesh=mesh,
        matrices=mats,
        name=f"file:{path}",
        divergence_free=UNCHECKED,
    )
