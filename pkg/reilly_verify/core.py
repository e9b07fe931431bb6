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

"""Scenario evaluation: the lazily computed data of a scenario, the
selection of checks and the immutable report they produce.

"""

__all__ = [
    "CheckNotFound",
    "CheckSuiteError",
    "ScenarioContext",
    "CheckSuite",
    "ScenarioReport",
]


# =============================================================================
# IMPORTS
# =============================================================================

import json
import logging
from functools import cached_property

import attr

import matplotlib.pyplot as plt

import numpy as np

import pandas as pd

from . import assembly, bounds, curvature, spectra
from .bounds import terms
from .bounds.center import center_of_mass
from .bounds.core import (
    EQUALITY,
    HOLDS,
    Tolerances,
    UNMET,
    VIOLATED,
    _json_value,
)


logger = logging.getLogger("reilly_verify")


# =============================================================================
# CONSTANTS
# =============================================================================

STATUS_COLORS = {
    HOLDS: "tab:green",
    EQUALITY: "tab:blue",
    VIOLATED: "tab:red",
    UNMET: "tab:gray",
}


# =============================================================================
# EXCEPTIONS
# =============================================================================


class CheckNotFound(ValueError):
    """Raised when a non registered bound or identity id is requested."""


class CheckSuiteError(ValueError):
    """The CheckSuite can't be configured with the given parameters."""


# =============================================================================
# CONTEXT
# =============================================================================


class ScenarioContext:
    """Everything the checks of one scenario need, computed on demand.

    Parameters
    ----------
    mesh : ImmersedMesh
        The weighted surface.
    T_spec, S_spec : object
        Tensor presets with a ``build(mesh, field)`` method; ``S_spec``
        also provides ``boundary_scale()`` on meshes with boundary.
    problems : sequence of str
        Spectral problems of the scenario (``closed``, ``steklov``,
        ``wentzell``).
    b_values : sequence of float
        Wentzell parameters.
    tolerances : Tolerances, optional
    scenario_id : str
    force_dense : bool
        Solve closed problems with dense eigensolvers.

    """

    def __init__(
        self,
        mesh,
        T_spec,
        S_spec,
        problems=(spectra.CLOSED,),
        b_values=(),
        tolerances=None,
        scenario_id="scenario",
        force_dense=False,
    ):
        self.mesh = mesh
        self.T_spec = T_spec
        self.S_spec = S_spec
        self.problems = tuple(problems)
        self.b_values = tuple(float(b) for b in b_values)
        self.tolerances = Tolerances() if tolerances is None else tolerances
        self.scenario_id = scenario_id
        self.force_dense = force_dense
        self._drifts = {}
        self._centers = {}

    def __repr__(self):
        return (
            f"ScenarioContext({self.scenario_id!r}, {self.mesh!r}, "
            f"problems={self.problems})"
        )

    # GEOMETRY ================================================================

    @property
    def space(self):
        return self.mesh.space

    @cached_property
    def field(self):
        return curvature.second_fundamental_form(self.mesh)

    @cached_property
    def T(self):
        return self.T_spec.build(self.mesh, self.field)

    @cached_property
    def S(self):
        return self.S_spec.build(self.mesh, self.field)

    @cached_property
    def S_boundary(self):
        if self.mesh.is_closed:
            return None
        return self.S_spec.boundary_scale()

    @cached_property
    def boundary_curvature(self):
        return curvature.boundary_curvature(self.mesh)

    def drift(self, tensor):
        """Cached :func:`reilly_verify.curvature.drift_term` of a tensor."""
        key = id(tensor)
        if key not in self._drifts:
            self._drifts[key] = (
                tensor,
                curvature.drift_term(self.mesh, self.field, tensor),
            )
        return self._drifts[key][1]

    def center(self, which):
        """Center of mass of the ``mesh``, its ``boundary`` or the
        unweighted ``domain``.

        """
        if which not in self._centers:
            if which == "mesh":
                target = self.mesh
            elif which == "boundary":
                target = self.boundary_curvature.boundary
            elif which == "domain":
                target = terms.unweighted(self.mesh)
            else:
                raise ValueError(f"unknown center {which!r}")
            self._centers[which] = center_of_mass(target)
            logger.debug(
                "%s: center of %s %r",
                self.scenario_id,
                which,
                self._centers[which],
            )
        return self._centers[which]

    @property
    def identity_center(self):
        return self.center("mesh" if self.mesh.is_closed else "boundary")

    # SPECTRA =================================================================

    @cached_property
    def system(self):
        return assembly.assemble_system(self.mesh, self.T)

    @cached_property
    def closed_result(self):
        """First eigenvalue of ``L_{T,f}``."""
        return spectra.solve_closed(self.system, force_dense=self.force_dense)

    @cached_property
    def laplacian_result(self):
        """First eigenvalue of the Laplacian (``T = Id``, ``f = 0``)."""
        if self.system.has_identity_tensor and self.system.is_unweighted:
            return self.closed_result
        plain = assembly.assemble_system(terms.unweighted(self.mesh))
        return spectra.solve_closed(plain, force_dense=self.force_dense)

    @cached_property
    def steklov_result(self):
        return spectra.solve_steklov(self.system)

    @cached_property
    def wentzell_results(self):
        return {
            b: spectra.solve_wentzell(self.system, b) for b in self.b_values
        }

    def spectra_summary(self):
        """Computed results of the scenario problems, as dicts."""
        summary = {}
        if spectra.CLOSED in self.problems:
            summary["closed"] = self.closed_result.as_dict()
            summary["laplacian"] = self.laplacian_result.as_dict()
        if spectra.STEKLOV in self.problems:
            summary["steklov"] = self.steklov_result.as_dict()
        if spectra.WENTZELL in self.problems:
            summary["wentzell"] = {
                f"b={b:g}": r.as_dict()
                for b, r in self.wentzell_results.items()
            }
        return summary


# =============================================================================
# REPORT
# =============================================================================


def _sorted_reports(reports):
    return tuple(sorted(reports, key=lambda r: (r.check_id, r.variant)))


@attr.s(frozen=True, repr=False)
class ScenarioReport:
    """Immutable result of running a :class:`CheckSuite` on a scenario."""

    scenario_id = attr.ib()
    provenance = attr.ib(factory=dict)
    tolerances = attr.ib(factory=Tolerances)
    spectra = attr.ib(factory=dict)
    reports = attr.ib(factory=tuple, converter=_sorted_reports)

    def __repr__(self):
        return (
            f"ScenarioReport({self.scenario_id!r}, "
            f"reports={len(self.reports)}, "
            f"findings={len(self.findings)}, exit_code={self.exit_code})"
        )

    def __iter__(self):
        return iter(self.reports)

    def __getitem__(self, check_id):
        """All the reports of a bound or identity id."""
        found = [r for r in self.reports if r.check_id == check_id]
        if not found:
            raise KeyError(check_id)
        return found

    @property
    def bounds(self):
        return tuple(r for r in self.reports if r.kind == "bound")

    @property
    def identities(self):
        return tuple(r for r in self.reports if r.kind == "identity")

    @property
    def findings(self):
        """Violations of steps known to need boundary terms."""
        return tuple(r for r in self.reports if r.finding)

    @property
    def failures(self):
        return tuple(
            r for r in self.reports if r.status == VIOLATED and not r.finding
        )

    @property
    def exit_code(self):
        return 1 if self.failures else 0

    def as_dict(self):
        def label(report):
            return report.check_id + (
                f"[{report.variant}]" if report.variant else ""
            )

        return {
            "scenario": self.scenario_id,
            "mesh": _json_value(self.provenance),
            "conventions": dict(terms.CONVENTIONS),
            "tolerances": self.tolerances.as_dict(),
            "spectra": _json_value(self.spectra),
            "bounds": [r.as_dict() for r in self.bounds],
            "identities": [r.as_dict() for r in self.identities],
            "findings": [label(r) for r in self.findings],
            "failures": [label(r) for r in self.failures],
        }

    def to_json(self):
        """Deterministic JSON document of the report."""
        return json.dumps(self.as_dict(), sort_keys=True, indent=2) + "\n"

    def as_dataframe(self):
        """One row per report."""
        rows = [
            {
                "id": r.check_id,
                "kind": r.kind,
                "variant": r.variant,
                "lhs": r.lhs,
                "rhs": r.rhs,
                "slack": r.slack,
                "status": r.status,
                "finding": r.finding,
            }
            for r in self.reports
        ]
        columns = [
            "id",
            "kind",
            "variant",
            "lhs",
            "rhs",
            "slack",
            "status",
            "finding",
        ]
        return pd.DataFrame(rows, columns=columns)

    def to_csv(self, path_or_buf=None):
        """Summary table ``bound_id, lhs, rhs, slack, status``.

        The variant, when present, is appended to the id in brackets.

        """
        df = self.as_dataframe()
        suffix = df.variant.map(lambda v: f"[{v}]" if v else "")
        summary = pd.DataFrame(
            {
                "bound_id": df.id + suffix,
                "lhs": df.lhs,
                "rhs": df.rhs,
                "slack": df.slack,
                "status": df.status,
            }
        )
        return summary.to_csv(path_or_buf, index=False, float_format="%.12g")

    def plot(self, ax=None, **plot_kws):
        """Horizontal bar chart of the relative slack of every report.

        Parameters
        ----------
        ax : matplotlib axes object, default None.
        `**plot_kws` : keywords
            Options to pass to matplotlib ``barh``.

        Returns
        -------
        ax : matplotlib.axes.Axes

        """
        ax = plt.gca() if ax is None else ax
        df = self.as_dataframe()
        scale = np.maximum(np.maximum(df.lhs.abs(), df.rhs.abs()), 1e-30)
        relative = (df.slack / scale).fillna(0.0)
        labels = [
            f"{i}[{v}]" if v else i for i, v in zip(df.id, df.variant)
        ]
        colors = [STATUS_COLORS[s] for s in df.status]
        plot_kws.setdefault("color", colors)
        ax.barh(labels, relative, **plot_kws)
        ax.axvline(0, color="k", lw=0.8)
        ax.set_xlabel("relative slack")
        ax.set_title(self.scenario_id)
        return ax


# =============================================================================
# SUITE
# =============================================================================


class CheckSuite:
    """Selection of bound and identity checks.

    Parameters
    ----------
    only : array-like, optional
        Ids to evaluate; all the registered ids by default.
    exclude : array-like, optional
        Ids not to evaluate.
    kwargs
        Extra configuration of the checks, as
        ``CheckName={param: value, ...}``.

    Examples
    --------

    .. code-block:: pycon

        >>> suite = CheckSuite(only=["REILLY_1_1", "HM_INTEGRAL"])
        >>> report = suite.run(context)
        >>> [r.status for r in report]
        ['equality_within_tol', 'equality_within_tol']

    """

    def __init__(self, only=None, exclude=None, **kwargs):
        registered = bounds.registered_bounds()
        self._kwargs = kwargs

        for ids, what in ((only, "only"), (exclude, "exclude")):
            for check_id in ids or ():
                if check_id not in registered:
                    raise CheckNotFound(f"{check_id} (in '{what}')")
        self._only = frozenset(only or registered)
        self._exclude = frozenset(exclude or ())
        self._selected = frozenset(self._only.difference(self._exclude))
        if not self._selected:
            raise CheckSuiteError("No check was selected")

        classes = []
        for cls in dict.fromkeys(registered.values()):
            if cls.get_reports().intersection(self._selected):
                classes.append(cls)
        names = {cls.__name__ for cls in classes}
        not_found = set(kwargs).difference(names)
        if not_found:
            raise CheckNotFound(
                "This suite has no check(s) "
                f"{', '.join(sorted(not_found))} to assign the given "
                "parameter(s)"
            )
        self._checks = tuple(
            cls(**kwargs.get(cls.__name__, {})) for cls in classes
        )

    def __repr__(self):
        checks = ", ".join(str(c) for c in self._checks)
        return f"<CheckSuite: {checks}>"

    @property
    def selected_(self):
        return self._selected

    @property
    def checks_(self):
        return self._checks

    def applicable(self, context):
        """Checks whose mesh kind and spectral problem fit the scenario."""
        out = []
        for check in self._checks:
            if not check.applies_to(context.mesh):
                continue
            problem = check.get_problem()
            if problem is not None and problem not in context.problems:
                continue
            if problem == spectra.WENTZELL and not context.b_values:
                continue
            out.append(check)
        return out

    def run(self, context):
        """Evaluate the applicable checks of a scenario.

        Returns
        -------
        ScenarioReport

        """
        logger.info("%s: running %r", context.scenario_id, context.mesh)
        reports = []
        for check in self.applicable(context):
            logger.debug("%s: evaluating %r", context.scenario_id, check)
            reports.extend(
                r for r in check.run(context) if r.check_id in self._selected
            )
        report = ScenarioReport(
            scenario_id=context.scenario_id,
            provenance=dict(context.mesh.provenance),
            tolerances=context.tolerances,
            spectra=context.spectra_summary(),
            reports=reports,
        )
        logger.info(
            "%s: %d reports, %d findings, %d failures",
            context.scenario_id,
            len(report.reports),
            len(report.findings),
            len(report.failures),
        )
        return report
