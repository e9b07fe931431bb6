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

"""First positive eigenvalues of the closed, Steklov and Wentzell problems.

Every problem is posed as a symmetric pencil ``A x = lambda B x`` with a
non negative spectrum whose kernel is the constants. The constant mode is
removed by an explicit ``B``-orthogonal projection instead of a shift.

"""

__all__ = [
    "SolverConvergenceError",
    "InvalidParameterError",
    "OutsideHypothesesWarning",
    "SpectralResult",
    "solve_closed",
    "solve_steklov",
    "solve_steklov_full",
    "solve_wentzell",
    "rayleigh_quotient",
]


# =============================================================================
# IMPORTS
# =============================================================================

import logging
import warnings

import attr

import numpy as np

from scipy import linalg, sparse
from scipy.sparse import linalg as splinalg

from .mesh import ClosedMeshError


# =============================================================================
# CONSTANTS
# =============================================================================

CLOSED, STEKLOV, WENTZELL = "closed", "steklov", "wentzell"

PROBLEMS = (CLOSED, STEKLOV, WENTZELL)

#: below this size the pencils are solved densely
DENSE_LIMIT = 3000

#: relative tolerance and iteration cap of the Lanczos solver
TOLERANCE = 1e-12
MAX_ITERATIONS = 5000

#: largest accepted relative residual of the first eigenpair
RESIDUAL_LIMIT = 1e-8

#: how many eigenvalues after the first are reported
NEXT_EIGENVALUES = 3

logger = logging.getLogger("reilly_verify")


# =============================================================================
# EXCEPTIONS
# =============================================================================


class SolverConvergenceError(RuntimeError):
    """The eigen solver did not converge.

    ``residual`` is the best residual reached, when known.

    """

    def __init__(self, message, residual=None):
        self.residual = residual
        if residual is not None:
            message = f"{message} (best residual {residual:.3e})"
        super().__init__(message)


class InvalidParameterError(ValueError):
    """Invalid parameter of a spectral problem."""


class OutsideHypothesesWarning(UserWarning):
    """A problem is solved outside of the setting of the known bounds."""


warnings.simplefilter("always", OutsideHypothesesWarning)


# =============================================================================
# RESULT
# =============================================================================


@attr.s(frozen=True, repr=False)
class SpectralResult:
    """First positive eigenpair of a spectral problem.

    Attributes
    ----------
    problem_kind : str
        ``"closed"``, ``"steklov"`` or ``"wentzell"``.
    eigenvalue_1 : float
    eigenvector_1 : ndarray
        Values at every vertex of the mesh.
    next_eigenvalues : tuple of float
    residual : float
        ``|A x - lambda B x| / |x|``.
    relative_residual : float
        The residual divided by ``|A x| + |lambda| |B x|``.
    deflation_report : float
        ``|1^T B x| / |x|_B``.
    method : str
        ``"dense"`` or ``"lanczos"``.
    parameters : dict
        Problem parameters (``b`` for Wentzell).
    notes : tuple of str
        Hypotheses of the known bounds that the problem does not meet.

    """

    problem_kind = attr.ib()
    eigenvalue_1 = attr.ib(converter=float)
    eigenvector_1 = attr.ib()
    next_eigenvalues = attr.ib(converter=tuple)
    residual = attr.ib(converter=float)
    relative_residual = attr.ib(converter=float)
    deflation_report = attr.ib(converter=float)
    method = attr.ib()
    parameters = attr.ib(factory=dict)
    notes = attr.ib(factory=tuple, converter=tuple)

    def __repr__(self):
        return (
            f"SpectralResult({self.problem_kind}, "
            f"eigenvalue_1={self.eigenvalue_1:.10g}, "
            f"residual={self.relative_residual:.2e})"
        )

    @property
    def outside_hypotheses(self):
        return bool(self.notes)

    def as_dict(self):
        return {
            "problem_kind": self.problem_kind,
            "eigenvalue_1": self.eigenvalue_1,
            "next_eigenvalues": list(self.next_eigenvalues),
            "residual": self.residual,
            "relative_residual": self.relative_residual,
            "deflation_report": self.deflation_report,
            "method": self.method,
            "parameters": dict(self.parameters),
            "notes": list(self.notes),
        }


# =============================================================================
# PENCIL SOLVERS
# =============================================================================


def _dense(matrix):
    return matrix.toarray() if sparse.issparse(matrix) else np.asarray(matrix)


def _complement_basis(w):
    """Orthonormal basis of the Euclidean complement of ``w``.

    Built from a Householder reflection, shape (n, n - 1).

    """
    n = len(w)
    u = w / np.linalg.norm(w)
    e = np.zeros(n)
    e[0] = 1.0
    v = u - e if u[0] <= 0 else u + e
    v /= np.linalg.norm(v)
    H = np.eye(n) - 2.0 * np.outer(v, v)
    return H[:, 1:]


def _dense_deflated(A, B, count):
    """Smallest eigenpairs of ``(A, B)`` on the B-complement of constants."""
    A, B = _dense(A), _dense(B)
    n = A.shape[0]
    Q = _complement_basis(B @ np.ones(n))
    Ar, Br = Q.T @ A @ Q, Q.T @ B @ Q
    count = min(count, n - 1)
    vals, vecs = linalg.eigh(
        0.5 * (Ar + Ar.T), 0.5 * (Br + Br.T), subset_by_index=[0, count - 1]
    )
    return vals, Q @ vecs


def _lanczos_deflated(A, B, count):
    """Shift-invert Lanczos restricted to the B-complement of constants."""
    n = A.shape[0]
    ones = np.ones(n)
    Bones = B @ ones
    total = float(ones @ Bones)

    scale = abs(A.diagonal()).max() / max(abs(B.diagonal()).max(), 1e-300)
    sigma = -1e-3 * scale / n
    solve = splinalg.splu((A - sigma * B).tocsc()).solve

    def project(y):
        return y - ones * (Bones @ y) / total

    def project_dual(y):
        return y - Bones * (ones @ y) / total

    # the operator receives B x; P S P^T B stays B-self-adjoint
    op = splinalg.LinearOperator(
        (n, n), matvec=lambda y: project(solve(project_dual(y))), dtype=float
    )
    # fixed start vector so repeated runs give identical reports
    v0 = project(np.random.RandomState(0).uniform(-1.0, 1.0, n))
    try:
        vals, vecs = splinalg.eigsh(
            A,
            k=count,
            M=B,
            sigma=sigma,
            which="LM",
            OPinv=op,
            v0=v0,
            tol=TOLERANCE,
            maxiter=MAX_ITERATIONS,
        )
    except splinalg.ArpackNoConvergence as err:
        best = None
        if len(err.eigenvalues):
            x = err.eigenvectors[:, 0]
            best = _residual(A, B, err.eigenvalues[0], x)[0]
        raise SolverConvergenceError(
            "Lanczos iteration did not converge", best
        )
    order = np.argsort(vals)
    vecs = np.apply_along_axis(project, 0, vecs[:, order])
    return vals[order], vecs


def _residual(A, B, value, x):
    Ax, Bx = A @ x, B @ x
    res = np.linalg.norm(Ax - value * Bx)
    scale = np.linalg.norm(Ax) + abs(value) * np.linalg.norm(Bx)
    rel = res / max(scale, 1e-300)
    return res / np.linalg.norm(x), rel


def _check_residual(relative, method):
    if not relative < RESIDUAL_LIMIT:
        raise SolverConvergenceError(
            f"{method} eigenpair is not accurate enough", relative
        )


def _solve_pencil(A, B, force_dense=False):
    n = A.shape[0]
    count = min(NEXT_EIGENVALUES + 1, n - 1)
    if n < DENSE_LIMIT or force_dense or count >= n - 2:
        method = "dense"
        vals, vecs = _dense_deflated(A, B, count)
    else:
        method = "lanczos"
        A, B = sparse.csr_matrix(A), sparse.csr_matrix(B)
        vals, vecs = _lanczos_deflated(A, B, count)
    logger.debug("solved %dx%d pencil with %s method", n, n, method)

    x = vecs[:, 0]
    Bx = B @ x
    x = x / np.sqrt(x @ Bx)
    Bx = B @ x
    residual, relative = _residual(A, B, vals[0], x)
    _check_residual(relative, method)
    deflation = abs(np.sum(Bx))
    if vals[0] <= 0:
        raise SolverConvergenceError(
            f"first deflated eigenvalue is not positive ({vals[0]:.3e})"
        )
    return vals, x, residual, relative, deflation, method


def _result(kind, vals, x, residual, relative, deflation, method, **kwargs):
    return SpectralResult(
        problem_kind=kind,
        eigenvalue_1=vals[0],
        eigenvector_1=x,
        next_eigenvalues=[float(v) for v in vals[1:]],
        residual=residual,
        relative_residual=relative,
        deflation_report=deflation,
        method=method,
        **kwargs,
    )


# =============================================================================
# PROBLEMS
# =============================================================================


def solve_closed(system, force_dense=False):
    """Smallest positive eigenvalue of ``K u = lambda M u`` on closed meshes.

    Raises
    ------
    ValueError
        If the mesh has boundary.
    SolverConvergenceError
        If the iteration does not converge or the relative residual of the
        first eigenpair is not below ``RESIDUAL_LIMIT``.

    """
    if not system.is_closed:
        raise ValueError("the closed problem needs a mesh without boundary")
    solved = _solve_pencil(system.stiffness, system.mass, force_dense)
    return _result(CLOSED, *solved)


def _condensed(system):
    if system.is_closed:
        raise ClosedMeshError("boundary problems need a mesh with boundary")
    K = sparse.csr_matrix(system.stiffness)
    bd, it = system.boundary_dofs, system.interior_dofs
    Kbb = _dense(K[bd][:, bd])
    if len(it) == 0:
        return Kbb, None, bd, it
    Kii = K[it][:, it].tocsc()
    Kib = K[it][:, bd]
    try:
        lu = splinalg.splu(Kii)
    except RuntimeError as err:
        raise SolverConvergenceError(f"singular interior block: {err}")
    X = lu.solve(_dense(Kib))
    schur = Kbb - _dense(Kib).T @ X
    return 0.5 * (schur + schur.T), X, bd, it


def _extend(system, y, X, bd, it):
    u = np.zeros(system.size)
    u[bd] = y
    if X is not None:
        u[it] = -X @ y
    return u


def solve_steklov(system):
    """First Steklov eigenvalue by interior condensation.

    The Schur complement of the stiffness on the boundary dofs is the
    discrete Dirichlet-to-Neumann map; the pencil with the boundary mass is
    solved on boundary dofs and the eigenvector is extended harmonically.

    """
    schur, X, bd, it = _condensed(system)
    Bbb = _dense(system.boundary_mass[bd][:, bd])
    vals, y, residual, relative, deflation, method = _solve_pencil(schur, Bbb)
    return _result(
        STEKLOV,
        vals,
        _extend(system, y, X, bd, it),
        residual,
        relative,
        deflation,
        method,
    )


def solve_steklov_full(system, shift=-1.0):
    """First Steklov eigenvalue from the uncondensed pencil ``K u = s B u``.

    ``B`` is singular on interior dofs, so the spectral transformation
    ``(K - shift B)^-1 B`` is solved densely: the interior (infinite)
    eigenvalues map to zero and the constant mode is discarded explicitly.

    """
    if system.is_closed:
        raise ClosedMeshError("boundary problems need a mesh with boundary")
    if shift >= 0:
        raise InvalidParameterError("the shift must be negative")
    K, B = _dense(system.stiffness), _dense(system.boundary_mass)
    C = K - shift * B
    mu, vecs = linalg.eigh(0.5 * (B + B.T), 0.5 * (C + C.T))
    mu_max = np.max(np.abs(mu))
    keep = mu > 1e-12 * mu_max
    sigma = shift + 1.0 / mu[keep]
    vecs = vecs[:, keep]

    ones = np.ones(len(K))
    constness = np.abs(ones @ B @ vecs) / np.sqrt(
        np.einsum("ij,ij->j", vecs, B @ vecs) * (ones @ B @ ones)
    )
    drop = np.argmax(constness)
    sigma, vecs = np.delete(sigma, drop), np.delete(vecs, drop, axis=1)

    order = np.argsort(sigma)
    x = vecs[:, order[0]]
    x = x / np.sqrt(x @ B @ x)
    residual, relative = _residual(K, B, sigma[order[0]], x)
    _check_residual(relative, "dense-spectral-transform")
    return _result(
        STEKLOV,
        sigma[order[: NEXT_EIGENVALUES + 1]],
        x,
        residual,
        relative,
        abs(ones @ B @ x),
        "dense-spectral-transform",
    )


def solve_wentzell(system, b):
    """First Wentzell eigenvalue ``(S_dtn + b K_b) y = alpha B y``.

    ``b = 0`` is accepted and gives the Steklov eigenvalue; only ``b < 0``
    is rejected. Only ``T = Id`` and ``f = 0`` are covered by the known
    bounds; other settings are solved and flagged.

    Raises
    ------
    InvalidParameterError
        If ``b < 0``.

    """
    b = float(b)
    if not np.isfinite(b) or b < 0:
        raise InvalidParameterError(
            f"b must be a non negative number, got {b}"
        )
    notes = []
    if not system.has_identity_tensor:
        notes.append(f"T = {system.tensor_name} (bounds assume T = Id)")
    if not system.is_unweighted:
        notes.append("weighted density (bounds assume f = 0)")
    for note in notes:
        warnings.warn(
            f"Wentzell problem solved with {note}", OutsideHypothesesWarning
        )

    schur, X, bd, it = _condensed(system)
    Kb = _dense(system.boundary_stiffness[bd][:, bd])
    Bbb = _dense(system.boundary_mass[bd][:, bd])
    vals, y, residual, relative, deflation, method = _solve_pencil(
        schur + b * Kb, Bbb
    )
    return _result(
        WENTZELL,
        vals,
        _extend(system, y, X, bd, it),
        residual,
        relative,
        deflation,
        method,
        parameters={"b": b},
        notes=notes,
    )


def rayleigh_quotient(system, kind, u, b=0.0):
    """Rayleigh quotient of a full vertex vector for one of the problems."""
    u = np.asarray(u, dtype=float)
    K = system.stiffness
    if kind == CLOSED:
        return float(u @ (K @ u)) / float(u @ (system.mass @ u))
    if kind not in (STEKLOV, WENTZELL):
        raise InvalidParameterError(f"unknown problem {kind!r}")
    num = float(u @ (K @ u)) + b * float(u @ (system.boundary_stiffness @ u))
    return num / float(u @ (system.boundary_mass @ u))
