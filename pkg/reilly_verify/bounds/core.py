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

"""Base classes of the bound and identity checks."""

__all__ = [
    "BOUND_IDS",
    "IDENTITY_IDS",
    "STATUSES",
    "Tolerances",
    "Hypothesis",
    "BoundReport",
    "IdentityReport",
    "Bound",
    "BoundBadDefinedError",
    "BoundContractError",
    "OutsideHypothesesWarning",
    "bound_status",
    "identity_status",
]


# =============================================================================
# IMPORTS
# =============================================================================

import logging
import math

import attr

import numpy as np

from ..spectra import OutsideHypothesesWarning


logger = logging.getLogger("reilly_verify")


# =============================================================================
# CONSTANTS
# =============================================================================

HOLDS = "holds"
EQUALITY = "equality_within_tol"
VIOLATED = "violated"
UNMET = "hypotheses_unmet"

STATUSES = (HOLDS, EQUALITY, VIOLATED, UNMET)

BOUND_IDS = (
    "REILLY_1_1",
    "REILLY_1_2",
    "REILLY_1_3",
    "REILLY_SPHERE_1_4",
    "REILLY_HYP_1_5",
    "HEINTZE_1_6",
    "GENERAL_1_7",
    "THM1_CASE1",
    "THM1_CASE2",
    "THM2_CASE1",
    "THM2_CASE2",
    "THM2_CASE2_RADIUS",
    "THM3_CASE1",
    "THM3_CASE2",
    "STEKLOV_EUCLIDEAN",
    "WENTZELL_EUCLIDEAN",
)

IDENTITY_IDS = (
    "HM_POINTWISE",
    "HM_INTEGRAL",
    "HM_WEIGHTED_X",
    "LEMSD",
    "LEM31",
    "LEM32",
    "GROSJEAN_PTWISE",
    "PROP5",
)

#: identities that are theorems on closed meshes
CLOSED_IDENTITIES = ("HM_INTEGRAL", "HM_WEIGHTED_X", "LEMSD", "LEM31", "LEM32")

MESH_KINDS = ("closed", "boundary", "any")

PROBLEMS = ("closed", "steklov", "wentzell")

_TINY = 1e-30


# =============================================================================
# EXCEPTIONS
# =============================================================================


class BoundBadDefinedError(Exception):
    """The bound check is not properly defined."""


class BoundContractError(ValueError):
    """The bound check did not produce the declared reports or got
    unexpected parameters.

    """


# =============================================================================
# TOLERANCES AND STATUS
# =============================================================================


def _positive(instance, attribute, value):
    if not value > 0:
        raise ValueError(f"{attribute.name} must be positive, got {value}")


@attr.s(frozen=True)
class Tolerances:
    """Tolerances used to classify the reports.

    Attributes
    ----------
    equality_tol : float
        Relative band around ``rhs`` where a bound counts as an equality.
    hold_tol : float
        Relative slack below zero still counted as ``holds``.
    identity_tol : float
        Band for normalized residuals of the integral identities.
    pointwise_tol : float
        Band for the worst normalized residual of pointwise checks.

    """

    equality_tol = attr.ib(default=0.02, converter=float, validator=_positive)
    hold_tol = attr.ib(default=1e-9, converter=float, validator=_positive)
    identity_tol = attr.ib(default=1e-3, converter=float, validator=_positive)
    pointwise_tol = attr.ib(default=0.05, converter=float, validator=_positive)

    def as_dict(self):
        return attr.asdict(self)


@attr.s(frozen=True)
class Hypothesis:
    """A checked precondition."""

    name = attr.ib()
    passed = attr.ib(converter=bool)
    detail = attr.ib(default="")

    def as_dict(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
        }


def _finite(value):
    return value is not None and math.isfinite(value)


def bound_status(lhs, rhs, hypotheses, tolerances):
    """Classify ``lhs <= rhs``.

    Examples
    --------

    .. code-block:: pycon

        >>> bound_status(2.0, 2.01, [], Tolerances())
        'equality_within_tol'
        >>> bound_status(1.0, 0.0, [], Tolerances())
        'violated'

    """
    if not all(h.passed for h in hypotheses):
        return UNMET
    if not (_finite(lhs) and _finite(rhs)):
        return UNMET
    slack = rhs - lhs
    scale = max(abs(lhs), abs(rhs))
    if abs(slack) <= tolerances.equality_tol * scale:
        return EQUALITY
    if slack >= -tolerances.hold_tol * max(scale, _TINY):
        return HOLDS
    return VIOLATED


def identity_status(residual, scale, hypotheses, tol):
    """Classify a residual ``lhs - rhs`` normalized by ``scale``."""
    if not all(h.passed for h in hypotheses):
        return UNMET
    if not (_finite(residual) and _finite(scale)):
        return UNMET
    normalized = residual / max(scale, _TINY)
    if normalized > tol:
        return VIOLATED
    if abs(normalized) <= tol:
        return EQUALITY
    return HOLDS


def _json_float(value):
    if value is None:
        return None
    value = float(value)
    return value if math.isfinite(value) else None


def _json_value(value):
    if isinstance(value, dict):
        return {str(k): _json_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        items = np.asarray(value, dtype=object).tolist()
        return [_json_value(v) for v in items]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return _json_float(value)
    return value


# =============================================================================
# REPORTS
# =============================================================================


@attr.s(frozen=True, repr=False)
class BoundReport:
    """Comparison of a computed eigenvalue against an upper bound.

    Attributes
    ----------
    bound_id : str
    lhs : float
        The computed eigenvalue.
    rhs : float
        The evaluated bound.
    status : str
    hypotheses : tuple of Hypothesis
    metadata : dict
        Center of mass, radii, volumes and the sup/inf statistics used.
    variant : str
        Distinguishes several reports of the same bound (``r=2``,
        ``trace=T``, ``b=0.5``).
    finding : bool
        A violation of a step known to need boundary terms. Findings are
        reported but never fail a suite.

    """

    bound_id = attr.ib()
    lhs = attr.ib(converter=float)
    rhs = attr.ib(converter=float)
    status = attr.ib(validator=attr.validators.in_(STATUSES))
    hypotheses = attr.ib(factory=tuple, converter=tuple)
    metadata = attr.ib(factory=dict)
    variant = attr.ib(default="")
    finding = attr.ib(default=False, converter=bool)

    def __repr__(self):
        variant = f"[{self.variant}]" if self.variant else ""
        return (
            f"BoundReport({self.bound_id}{variant}, lhs={self.lhs:.6g}, "
            f"rhs={self.rhs:.6g}, status={self.status})"
        )

    @property
    def kind(self):
        return "bound"

    @property
    def check_id(self):
        return self.bound_id

    @property
    def slack(self):
        return self.rhs - self.lhs

    @property
    def passes(self):
        return self.status in (HOLDS, EQUALITY)

    def as_dict(self):
        return {
            "bound_id": self.bound_id,
            "variant": self.variant,
            "lhs": _json_float(self.lhs),
            "rhs": _json_float(self.rhs),
            "slack": _json_float(self.slack),
            "status": self.status,
            "finding": self.finding,
            "hypotheses": [h.as_dict() for h in self.hypotheses],
            "metadata": _json_value(self.metadata),
        }


@attr.s(frozen=True, repr=False)
class IdentityReport:
    """Check of an integral or pointwise inequality ``lhs <= rhs``.

    ``residual = lhs - rhs``; ``scale`` is the magnitude the residual is
    normalized by before it is compared with the tolerance; ``locus`` is
    ``"integral"`` or the worst vertex/triangle of a pointwise check.

    """

    identity_id = attr.ib()
    lhs = attr.ib(converter=float)
    rhs = attr.ib(converter=float)
    residual = attr.ib(converter=float)
    scale = attr.ib(converter=float)
    status = attr.ib(validator=attr.validators.in_(STATUSES))
    locus = attr.ib(default="integral")
    hypotheses = attr.ib(factory=tuple, converter=tuple)
    metadata = attr.ib(factory=dict)
    variant = attr.ib(default="")
    finding = attr.ib(default=False, converter=bool)

    def __repr__(self):
        return (
            f"IdentityReport({self.identity_id}, "
            f"residual={self.normalized_residual:.3e}, status={self.status})"
        )

    @property
    def kind(self):
        return "identity"

    @property
    def check_id(self):
        return self.identity_id

    @property
    def slack(self):
        return -self.residual

    @property
    def normalized_residual(self):
        return self.residual / max(self.scale, _TINY)

    @property
    def passes(self):
        return self.status in (HOLDS, EQUALITY)

    def as_dict(self):
        return {
            "identity_id": self.identity_id,
            "variant": self.variant,
            "lhs": _json_float(self.lhs),
            "rhs": _json_float(self.rhs),
            "residual": _json_float(self.residual),
            "scale": _json_float(self.scale),
            "normalized_residual": _json_float(self.normalized_residual),
            "status": self.status,
            "locus": self.locus,
            "finding": self.finding,
            "hypotheses": [h.as_dict() for h in self.hypotheses],
            "metadata": _json_value(self.metadata),
        }


def make_bound_report(
    bound_id, lhs, rhs, hypotheses, tolerances, metadata=None, variant=""
):
    hypotheses = tuple(hypotheses)
    return BoundReport(
        bound_id=bound_id,
        lhs=lhs,
        rhs=rhs,
        status=bound_status(lhs, rhs, hypotheses, tolerances),
        hypotheses=hypotheses,
        metadata=metadata or {},
        variant=variant,
    )


def make_identity_report(
    identity_id,
    lhs,
    rhs,
    scale,
    hypotheses,
    tol,
    locus="integral",
    metadata=None,
    variant="",
):
    hypotheses = tuple(hypotheses)
    residual = lhs - rhs
    return IdentityReport(
        identity_id=identity_id,
        lhs=lhs,
        rhs=rhs,
        residual=residual,
        scale=scale,
        status=identity_status(residual, scale, hypotheses, tol),
        locus=locus,
        hypotheses=hypotheses,
        metadata=metadata or {},
        variant=variant,
    )


# =============================================================================
# BASE CLASS
# =============================================================================


class BoundMeta(type):
    """Validate the declaration of every :class:`Bound` subclass."""

    def __new__(mcls, name, bases, namespace):
        cls = super().__new__(mcls, name, bases, namespace)

        try:
            cls != Bound
        except NameError:
            return cls

        if not getattr(cls, "reports", None):
            raise BoundBadDefinedError(f"'{cls}' must redefine 'reports'")
        known = BOUND_IDS + IDENTITY_IDS
        for report in cls.reports:
            if report not in known:
                raise BoundBadDefinedError(
                    f"'reports' must be values in {known}. Found '{report}'"
                )
        if len(set(cls.reports)) != len(cls.reports):
            raise BoundBadDefinedError(
                f"'reports' has duplicated values: {cls.reports}"
            )

        mesh_kind = getattr(cls, "mesh_kind", "any")
        if mesh_kind not in MESH_KINDS:
            raise BoundBadDefinedError(
                f"'mesh_kind' must be one of {MESH_KINDS}. Found '{mesh_kind}'"
            )

        problem = getattr(cls, "problem", None)
        if problem is not None and problem not in PROBLEMS:
            raise BoundBadDefinedError(
                f"'problem' must be None or one of {PROBLEMS}. "
                f"Found '{problem}'"
            )

        findings = getattr(cls, "findings", ())
        if set(findings).difference(cls.reports):
            raise BoundBadDefinedError(
                "'findings' must be a subset of 'reports'"
            )

        params = getattr(cls, "params", {})
        for pname in params:
            if not isinstance(pname, str):
                raise BoundBadDefinedError(
                    f"Params names must be strings. Found {type(pname)}"
                )

        if cls.evaluate is Bound.evaluate:
            raise BoundBadDefinedError(
                f"'{cls}' must redefine evaluate method"
            )

        cls._conf = {
            "reports": frozenset(cls.reports),
            "mesh_kind": mesh_kind,
            "problem": problem,
            "findings": frozenset(findings),
            "params": tuple(params.items()),
        }
        del cls.reports
        for attr_name in ("mesh_kind", "problem", "findings", "params"):
            if attr_name in namespace:
                delattr(cls, attr_name)
        return cls


class Bound(metaclass=BoundMeta):
    """Base class of every check.

    Subclasses declare the ids they produce in ``reports``, the kind of
    mesh they apply to in ``mesh_kind`` (``closed``, ``boundary`` or
    ``any``), the eigenvalue ``problem`` they compare against (``None``
    for identities), the ids whose violations are documented ``findings`` and
    default ``params``; and implement ``evaluate(context, **params)``
    returning a list of reports.

    """

    _conf = None

    @classmethod
    def get_reports(cls):
        return cls._conf["reports"]

    @classmethod
    def get_mesh_kind(cls):
        return cls._conf["mesh_kind"]

    @classmethod
    def get_problem(cls):
        return cls._conf["problem"]

    @classmethod
    def get_findings(cls):
        return cls._conf["findings"]

    @classmethod
    def get_default_params(cls):
        return dict(cls._conf["params"])

    @classmethod
    def applies_to(cls, mesh):
        kind = cls.get_mesh_kind()
        if kind == "any":
            return True
        return mesh.is_closed == (kind == "closed")

    def __init__(self, **cparams):
        self.name = type(self).__name__
        self.params = self.get_default_params()
        not_allowed = set(cparams).difference(self.params)
        if not_allowed:
            raise BoundContractError(
                f"Bound '{self.name}' does not allow the parameters: "
                f"{', '.join(sorted(not_allowed))}"
            )
        self.params.update(cparams)

    def __repr__(self):
        params = ", ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.name}({params})"

    def evaluate(self, context, **params):
        raise NotImplementedError()

    def run(self, context):
        """Evaluate the check and validate the produced reports."""
        reports = list(self.evaluate(context, **self.params))
        expected, findings = self.get_reports(), self.get_findings()
        produced = set()
        out = []
        for report in reports:
            if report.check_id not in expected:
                raise BoundContractError(
                    f"'{self.name}' produced the undeclared report "
                    f"'{report.check_id}'"
                )
            produced.add(report.check_id)
            if report.check_id in findings and report.status == VIOLATED:
                report = attr.evolve(report, finding=True)
            if report.status == UNMET:
                failed = [h.name for h in report.hypotheses if not h.passed]
                if failed:
                    logger.warning(
                        "%s%s: hypotheses not met (%s)",
                        report.check_id,
                        f"[{report.variant}]" if report.variant else "",
                        ", ".join(failed),
                    )
            out.append(report)
        missing = expected.difference(produced)
        if missing:
            raise BoundContractError(
                f"'{self.name}' must produce the reports "
                f"[{', '.join(sorted(expected))}], missing: "
                f"[{', '.join(sorted(missing))}]"
            )
        return out
