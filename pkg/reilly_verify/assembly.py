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

"""Linear finite element assembly of the weighted bilinear forms.

All forms are assembled in weak form against ``mu_f = exp(-f) dv``:

- stiffness ``K``: ``int <T grad u, grad v> mu_f`` (the operator
  ``L_{T,f} = -div(T grad u) + <grad f, T grad u>``);
- mass ``M``: ``int u v mu_f``;
- boundary mass ``B`` and boundary stiffness ``K_b`` on the boundary curve,
  extended by zero to the interior.

"""

__all__ = [
    "AssembledSystem",
    "assemble_stiffness",
    "assemble_mass",
    "assemble_boundary",
    "assemble_system",
    "dump_matrix",
]


# =============================================================================
# IMPORTS
# =============================================================================

import os

import attr

import numpy as np

from scipy import sparse

from . import curvature, mesh as _mesh


# =============================================================================
# FUNCTIONS
# =============================================================================


def _scatter(n, cells, local):
    """Sum element matrices ``local`` (e, q, q) into an n x n CSR matrix."""
    q = cells.shape[1]
    rows = np.repeat(cells, q, axis=1).ravel()
    cols = np.tile(cells, (1, q)).ravel()
    matrix = sparse.coo_matrix((local.ravel(), (rows, cols)), shape=(n, n))
    return matrix.tocsr()


def assemble_stiffness(mesh, T=None):
    """Weighted tensor stiffness matrix.

    Parameters
    ----------
    mesh : ImmersedMesh
    T : TangentTensorField, optional
        Positive definite tensor, constant per triangle. Defaults to the
        identity.

    Returns
    -------
    scipy.sparse.csr_matrix

    Examples
    --------

    .. code-block:: pycon

        >>> K = assemble_stiffness(square)  # two flat triangles, T = Id
        >>> K.toarray()
        array([[ 1. , -0.5,  0. , -0.5],
               [-0.5,  1. , -0.5,  0. ],
               [ 0. , -0.5,  1. , -0.5],
               [-0.5,  0. , -0.5,  1. ]])

    """
    if T is None:
        T = curvature.identity_tensor(mesh)
    T.check_positive_definite()
    grads = _mesh.triangle_frames(mesh).gradients
    weights = _mesh.weighted_measures(mesh).element_area_f
    mats = np.asarray(T.matrices)
    local = np.einsum("mik,mkl,mjl->mij", grads, mats, grads)
    local *= weights[:, None, None]
    return _scatter(mesh.num_vertices, mesh.cells, local)


def assemble_mass(mesh):
    """Consistent weighted mass matrix (3-point mid-edge quadrature).

    With ``f = 0`` it is the classical P1 matrix (``area/6`` on the
    diagonal, ``area/12`` off it); its row sums are the weighted vertex
    areas.

    """
    areas = _mesh.triangle_areas(mesh)
    mid = _mesh._midpoint_factors(mesh)
    # basis values at the midpoint opposite to corner q: 1/2 on the two
    # other corners
    values = 0.5 * (1.0 - np.eye(3))
    local = np.einsum("mq,qi,qj->mij", mid, values, values)
    local *= (areas / 3.0)[:, None, None]
    return _scatter(mesh.num_vertices, mesh.cells, local)


def assemble_boundary(mesh, S_boundary=1.0):
    """Boundary mass and boundary stiffness on the boundary curve.

    Parameters
    ----------
    mesh : ImmersedMesh
        Surface mesh with boundary.
    S_boundary : float or array-like
        Positive scalar per boundary edge weighting the boundary stiffness.

    Returns
    -------
    boundary_mass, boundary_stiffness : scipy.sparse.csr_matrix
        Both of full size, zero on interior vertices.

    Raises
    ------
    ClosedMeshError
        If the mesh is closed.

    """
    boundary = _mesh.boundary_complex(mesh)
    edges = boundary.parent_vertices[boundary.cells]
    lengths = _mesh.edge_lengths(boundary)
    S = np.broadcast_to(np.asarray(S_boundary, float), (len(edges),))
    if np.any(S <= 0):
        raise curvature.NotPositiveDefiniteError(
            "boundary tensor must be positive"
        )

    factors, _ = _mesh._gauss_factors(boundary, boundary.cells, lengths)
    t = np.asarray(_mesh.GAUSS_POINTS)
    phi = np.stack([1.0 - t, t])  # (basis, gauss point)
    mass = np.einsum("eg,ig,jg->eij", factors, phi, phi)
    mass *= (lengths / 2.0)[:, None, None]

    weighted_length = lengths / 2.0 * factors.sum(axis=1)
    unit = np.array([[1.0, -1.0], [-1.0, 1.0]])
    stiff = (S * weighted_length / lengths ** 2)[:, None, None] * unit

    n = mesh.num_vertices
    return _scatter(n, edges, mass), _scatter(n, edges, stiff)


def dump_matrix(matrix, path):
    """Write ``row col value`` triples (0-based) of a sparse matrix."""
    coo = sparse.coo_matrix(matrix)
    order = np.lexsort((coo.col, coo.row))
    with open(path, "w", encoding="utf-8") as fp:
        for i, j, v in zip(coo.row[order], coo.col[order], coo.data[order]):
            fp.write(f"{i} {j} {v!r}\n")


# =============================================================================
# SYSTEM
# =============================================================================


@attr.s(frozen=True, repr=False)
class AssembledSystem:
    """Matrices of one weighted spectral problem.

    Attributes
    ----------
    mesh : ImmersedMesh
    stiffness, mass : scipy.sparse.csr_matrix
    boundary_mass, boundary_stiffness : scipy.sparse.csr_matrix or None
        ``None`` on closed meshes.
    dof_map : ndarray
        Row of every vertex (the identity for P1 elements).
    boundary_dofs : ndarray
        Rows of the boundary vertices.
    tensor_name : str
        Description of T, for reports.

    """

    mesh = attr.ib()
    stiffness = attr.ib()
    mass = attr.ib()
    boundary_mass = attr.ib(default=None)
    boundary_stiffness = attr.ib(default=None)
    dof_map = attr.ib(default=None)
    boundary_dofs = attr.ib(default=None)
    tensor_name = attr.ib(default="identity")

    def __repr__(self):
        return (
            f"AssembledSystem(dofs={self.size}, "
            f"boundary_dofs={len(self.boundary_dofs)}, T={self.tensor_name})"
        )

    @property
    def size(self):
        return self.stiffness.shape[0]

    @property
    def is_closed(self):
        return self.boundary_mass is None

    @property
    def interior_dofs(self):
        mask = np.ones(self.size, dtype=bool)
        mask[self.boundary_dofs] = False
        return np.flatnonzero(mask)

    @property
    def is_unweighted(self):
        return bool(np.all(self.mesh.density == 0))

    @property
    def has_identity_tensor(self):
        return self.tensor_name in ("identity", "newton(0)")

    def dump(self, directory, prefix="system"):
        """Write every matrix as ``<prefix>_<name>.txt`` in ``directory``."""
        written = []
        names = ("stiffness", "mass", "boundary_mass", "boundary_stiffness")
        for name in names:
            matrix = getattr(self, name)
            if matrix is None:
                continue
            path = os.path.join(directory, f"{prefix}_{name}.txt")
            dump_matrix(matrix, path)
            written.append(path)
        return written


def assemble_system(mesh, T=None, S_boundary=1.0):
    """Assemble every matrix needed by the three spectral problems."""
    T = curvature.identity_tensor(mesh) if T is None else T
    stiffness = assemble_stiffness(mesh, T)
    mass = assemble_mass(mesh)
    bmass = bstiff = None
    bdofs = np.empty(0, dtype=np.int64)
    if not mesh.is_closed:
        bmass, bstiff = assemble_boundary(mesh, S_boundary)
        bdofs = mesh.boundary_vertices
    return AssembledSystem(
        mesh=mesh,
        stiffness=stiffness,
        mass=mass,
        boundary_mass=bmass,
        boundary_stiffness=bstiff,
        dof_map=np.arange(mesh.num_vertices),
        boundary_dofs=bdofs,
        tensor_name=T.name,
    )
