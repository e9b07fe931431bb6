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

"""Scenario files: parsing, validation and the shipped scenario suite.

A scenario file is a bracket-section ``key = value`` document::

    [scenario]
    id = unit_sphere

    [shape]
    name = round_sphere
    refinement = 4
    radius = 1

    [density]
    preset = linear
    coefficients = 0 0 1

    [tensors]
    T = identity
    S = scaled_identity(2)

    [problems]
    closed = yes
    steklov = no
    wentzell = 0.5 2

    [checks]
    only = REILLY_1_1 HM_INTEGRAL
    exclude =

    [tolerances]
    equality_tol = 0.02

    [output]
    directory = reports
    dump_matrices = no

Instead of a builtin ``name`` the ``[shape]`` section may give a ``file`` with
a WMESH mesh. Relative paths are resolved against the scenario file.

"""

__all__ = [
    "ConfigError",
    "TensorSpec",
    "ScenarioConfig",
    "parse_config",
    "load_config",
    "validate",
    "build_context",
    "run_scenario",
    "shipped_suite",
]


# =============================================================================
# IMPORTS
# =============================================================================

import configparser
import logging
import os
import re

import attr

import numpy as np

from . import curvature, mesh as _mesh, shapes, spaceform, spectra
from .bounds import registered_bounds
from .bounds.core import Tolerances
from .core import CheckSuite, ScenarioContext


logger = logging.getLogger("reilly_verify")


# =============================================================================
# CONSTANTS
# =============================================================================

TENSOR_KINDS = ("identity", "scaled_identity", "newton", "file")

SECTIONS = (
    "scenario",
    "shape",
    "density",
    "tensors",
    "problems",
    "checks",
    "tolerances",
    "output",
)

_TENSOR_RX = re.compile(r"^(?P<kind>\w+)\s*(\((?P<value>[^)]*)\))?$")

_SHAPE_KEYS = ("name", "file", "refinement", "seed")


# =============================================================================
# EXCEPTIONS
# =============================================================================


class ConfigError(ValueError):
    """Invalid scenario configuration."""


# =============================================================================
# TENSORS
# =============================================================================


def _tensor_kind(instance, attribute, value):
    if value not in TENSOR_KINDS:
        raise ConfigError(
            f"unknown tensor {value!r}; "
            f"choose one of {', '.join(TENSOR_KINDS)}"
        )


@attr.s(frozen=True)
class TensorSpec:
    """Builtin tensor preset or tensor file.

    Attributes
    ----------
    kind : str
        ``identity``, ``scaled_identity``, ``newton`` or ``file``.
    value : float, int or str, optional
        Scale, order of the Newton tensor or file path.

    """

    kind = attr.ib(default="identity", validator=_tensor_kind)
    value = attr.ib(default=None)

    @classmethod
    def parse(cls, text, base_dir=None):
        """Read ``identity``, ``scaled_identity(c)``, ``newton(r)`` or
        ``file:<path>``.

        """
        text = text.strip()
        if text.startswith("file:"):
            path = text[len("file:"):].strip()
            if base_dir and not os.path.isabs(path):
                path = os.path.join(base_dir, path)
            return cls("file", path)
        match = _TENSOR_RX.match(text)
        if match is None:
            raise ConfigError(f"malformed tensor {text!r}")
        kind, value = match.group("kind"), match.group("value")
        try:
            if kind == "identity":
                if value:
                    raise ConfigError("identity takes no argument")
                return cls(kind)
            if kind == "scaled_identity":
                return cls(kind, float(value))
            if kind == "newton":
                return cls(kind, int(value))
        except (TypeError, ValueError) as err:
            raise ConfigError(f"invalid tensor {text!r}: {err}")
        return cls(kind, value)

    def __str__(self):
        if self.kind == "identity":
            return "identity"
        if self.kind == "file":
            return f"file:{self.value}"
        return f"{self.kind}({self.value:g})"

    def build(self, mesh, field):
        """The :class:`reilly_verify.curvature.TangentTensorField` on
        ``mesh``.

        """
        if self.kind == "identity":
            return curvature.identity_tensor(mesh)
        if self.kind == "scaled_identity":
            return curvature.identity_tensor(mesh, self.value)
        if self.kind == "newton":
            return curvature.newton_tensor(field, self.value)
        return curvature.read_tensor_field(self.value, mesh)

    def boundary_scale(self):
        """Constant value of the tensor along a boundary curve.

        Boundary terms only accept isotropic constant tensors.

        """
        if self.kind == "identity" or (
            self.kind == "newton" and self.value == 0
        ):
            return 1.0
        if self.kind == "scaled_identity":
            return float(self.value)
        raise ConfigError(
            f"S = {self} is not a constant multiple of the identity; "
            "meshes with boundary need identity, scaled_identity(c) "
            "or newton(0)"
        )


# =============================================================================
# SCENARIO
# =============================================================================


def _as_tuple(value):
    return tuple(value) if value is not None else ()


@attr.s(frozen=True)
class ScenarioConfig:
    """Everything needed to build and check one scenario."""

    scenario_id = attr.ib(default="scenario")
    shape = attr.ib(default=None)
    shape_params = attr.ib(factory=dict)
    mesh_file = attr.ib(default=None)
    refinement = attr.ib(default=3, converter=int)
    seed = attr.ib(default=None)
    density = attr.ib(default=None)
    coefficients = attr.ib(default=None)
    T = attr.ib(factory=TensorSpec)
    S = attr.ib(factory=TensorSpec)
    problems = attr.ib(default=(spectra.CLOSED,), converter=tuple)
    b_values = attr.ib(default=(), converter=tuple)
    only = attr.ib(default=(), converter=_as_tuple)
    exclude = attr.ib(default=(), converter=_as_tuple)
    tolerances = attr.ib(factory=Tolerances)
    out_dir = attr.ib(default=".")
    dump_matrices = attr.ib(default=False, converter=bool)
    force_dense = attr.ib(default=False, converter=bool)

    def replace(self, **kwargs):
        return attr.evolve(self, **kwargs)

    def build_mesh(self):
        """Generate the builtin shape or read the mesh file."""
        if self.mesh_file is not None:
            mesh = _mesh.read_mesh(self.mesh_file)
            if self.density is not None:
                mesh = mesh.with_density(
                    shapes.density_field(
                        mesh.vertices, self.density, self.coefficients
                    )
                )
            return mesh
        return shapes.generate_shape(
            self.shape,
            refinement=self.refinement,
            density=self.density or "zero",
            coefficients=self.coefficients,
            seed=self.seed,
            **self.shape_params,
        )


# =============================================================================
# PARSER
# =============================================================================


def _floats(text, what):
    try:
        return tuple(float(tok) for tok in text.replace(",", " ").split())
    except ValueError:
        raise ConfigError(f"{what} must be a list of numbers, got {text!r}")


def _number(text, what):
    values = _floats(text, what)
    if len(values) != 1:
        raise ConfigError(f"{what} must be a single number, got {text!r}")
    return values[0]


def _flag(section, key, default=False):
    try:
        return section.getboolean(key, fallback=default)
    except ValueError as err:
        raise ConfigError(f"[{section.name}] {key}: {err}")


def _shape_section(parser, base_dir):
    if not parser.has_section("shape"):
        raise ConfigError("missing [shape] section")
    section = parser["shape"]
    name, path = section.get("name"), section.get("file")
    if (name is None) == (path is None):
        raise ConfigError("[shape] needs exactly one of 'name' or 'file'")
    if path is not None and base_dir and not os.path.isabs(path):
        path = os.path.join(base_dir, path)
    params = {
        key: _number(value, f"[shape] {key}")
        for key, value in section.items()
        if key not in _SHAPE_KEYS
    }
    seed = section.get("seed")
    return {
        "shape": name,
        "mesh_file": path,
        "shape_params": params,
        "refinement": int(
            _number(section.get("refinement", "3"), "refinement")
        ),
        "seed": None if seed is None else int(_number(seed, "seed")),
    }


def _problems_section(parser):
    if not parser.has_section("problems"):
        return {"problems": (spectra.CLOSED,), "b_values": ()}
    section = parser["problems"]
    problems = []
    if _flag(section, spectra.CLOSED):
        problems.append(spectra.CLOSED)
    if _flag(section, spectra.STEKLOV):
        problems.append(spectra.STEKLOV)
    b_values = _floats(section.get(spectra.WENTZELL, ""), "wentzell")
    if b_values:
        problems.append(spectra.WENTZELL)
    unknown = set(section).difference(spectra.PROBLEMS)
    if unknown:
        raise ConfigError(f"unknown problem(s) {', '.join(sorted(unknown))}")
    return {"problems": tuple(problems), "b_values": b_values}


def parse_config(text, base_dir=None):
    """Parse the text of a scenario file.

    Parameters
    ----------
    text : str
    base_dir : str, optional
        Directory relative paths are resolved against.

    Returns
    -------
    ScenarioConfig

    Raises
    ------
    ConfigError
        On syntax errors, unknown sections and invalid values.

    """
    parser = configparser.ConfigParser(
        inline_comment_prefixes=("#", ";"), interpolation=None
    )
    try:
        parser.read_string(text)
    except configparser.Error as err:
        raise ConfigError(f"scenario file syntax error: {err}")

    unknown = set(parser.sections()).difference(SECTIONS)
    if unknown:
        raise ConfigError(f"unknown section(s) {', '.join(sorted(unknown))}")

    kwargs = _shape_section(parser, base_dir)
    kwargs.update(_problems_section(parser))

    scenario = parser["scenario"] if parser.has_section("scenario") else {}
    kwargs["scenario_id"] = scenario.get("id", "scenario")

    if parser.has_section("density"):
        density = parser["density"]
        kwargs["density"] = density.get("preset", "zero")
        coefficients = density.get("coefficients")
        if coefficients:
            kwargs["coefficients"] = list(
                _floats(coefficients, "coefficients")
            )

    if parser.has_section("tensors"):
        tensors = parser["tensors"]
        kwargs["T"] = TensorSpec.parse(tensors.get("t", "identity"), base_dir)
        kwargs["S"] = TensorSpec.parse(tensors.get("s", "identity"), base_dir)

    if parser.has_section("checks"):
        checks = parser["checks"]
        kwargs["only"] = tuple(checks.get("only", "").split())
        kwargs["exclude"] = tuple(checks.get("exclude", "").split())
        kwargs["force_dense"] = _flag(checks, "force_dense")

    if parser.has_section("tolerances"):
        values = {
            key: _number(value, f"[tolerances] {key}")
            for key, value in parser["tolerances"].items()
        }
        try:
            kwargs["tolerances"] = Tolerances(**values)
        except (TypeError, ValueError) as err:
            raise ConfigError(f"invalid tolerances: {err}")

    if parser.has_section("output"):
        output = parser["output"]
        directory = output.get("directory", ".")
        if base_dir and not os.path.isabs(directory):
            directory = os.path.join(base_dir, directory)
        kwargs["out_dir"] = directory
        kwargs["dump_matrices"] = _flag(output, "dump_matrices")

    return ScenarioConfig(**kwargs)


def load_config(path):
    """Read and parse a scenario file."""
    try:
        with open(path, encoding="utf-8") as fp:
            text = fp.read()
    except OSError as err:
        raise ConfigError(f"cannot read scenario file {path}: {err}")
    return parse_config(text, base_dir=os.path.dirname(os.path.abspath(path)))


# =============================================================================
# VALIDATION
# =============================================================================


def validate(config):
    """Build every input of ``config`` before anything is solved.

    Returns
    -------
    ImmersedMesh
        The mesh of the scenario.

    Raises
    ------
    ConfigError
        Wrapping the mesh, shape, tensor and parameter errors.

    """
    if not 0 <= config.refinement <= shapes.MAX_REFINEMENT:
        raise ConfigError(
            f"refinement must be in [0, {shapes.MAX_REFINEMENT}], "
            f"got {config.refinement}"
        )
    unknown = set(config.problems).difference(spectra.PROBLEMS)
    if unknown:
        raise ConfigError(f"unknown problem(s) {', '.join(sorted(unknown))}")
    negative = [b for b in config.b_values if b < 0]
    if negative:
        raise ConfigError(f"wentzell b must be non negative, got {negative}")
    if spectra.WENTZELL in config.problems and not config.b_values:
        raise ConfigError("the wentzell problem needs at least one b value")

    registered = registered_bounds()
    for check_id in config.only + config.exclude:
        if check_id not in registered:
            raise ConfigError(f"unknown check {check_id!r}")

    for spec in (config.T, config.S):
        if spec.kind == "file" and not os.path.isfile(spec.value):
            raise ConfigError(f"tensor file {spec.value} does not exist")

    try:
        mesh = config.build_mesh()
    except OSError as err:
        raise ConfigError(f"cannot read mesh: {err}")
    except (
        _mesh.MeshParseError,
        _mesh.NonManifoldError,
        _mesh.DegenerateTriangleError,
        shapes.ShapeParameterError,
        spaceform.DomainError,
        spaceform.InvalidPointError,
    ) as err:
        raise ConfigError(f"invalid mesh: {err}")

    if mesh.is_closed and set(config.problems) & {
        spectra.STEKLOV,
        spectra.WENTZELL,
    }:
        raise ConfigError("steklov and wentzell problems need a boundary")
    if not mesh.is_closed:
        if spectra.CLOSED in config.problems:
            raise ConfigError("the closed problem needs a closed mesh")
        config.S.boundary_scale()

    for spec in (config.T, config.S):
        if spec.kind == "file":
            try:
                curvature.read_tensor_field(spec.value, mesh)
            except ValueError as err:
                raise ConfigError(f"invalid tensor file {spec.value}: {err}")
    logger.debug("%s: validated %r", config.scenario_id, mesh)
    return mesh


def build_context(config, mesh=None):
    """The :class:`reilly_verify.core.ScenarioContext` of ``config``."""
    mesh = validate(config) if mesh is None else mesh
    return ScenarioContext(
        mesh,
        config.T,
        config.S,
        problems=config.problems,
        b_values=config.b_values,
        tolerances=config.tolerances,
        scenario_id=config.scenario_id,
        force_dense=config.force_dense,
    )


def run_scenario(config, mesh=None):
    """Validate, solve and check one scenario.

    Returns
    -------
    ScenarioReport

    """
    context = build_context(config, mesh)
    suite = CheckSuite(
        only=config.only or None, exclude=config.exclude or None
    )
    report = suite.run(context)
    provenance = dict(report.provenance, T=str(config.T), S=str(config.S))
    return attr.evolve(report, provenance=provenance)


# =============================================================================
# SHIPPED SCENARIOS
# =============================================================================


def shipped_suite(refinement=4):
    """The twelve shipped scenarios at ``refinement``."""
    scaled = TensorSpec("scaled_identity", 2.0)
    newton = TensorSpec("newton", 1)

    def scenario(scenario_id, shape, **kwargs):
        return ScenarioConfig(
            scenario_id=scenario_id,
            shape=shape,
            refinement=refinement,
            **kwargs,
        )

    return [
        scenario("unit_sphere", "round_sphere", shape_params={"radius": 1.0}),
        scenario(
            "ellipsoid",
            "ellipsoid",
            shape_params={"a": 1.0, "b": 1.0, "c": 1.5},
        ),
        scenario(
            "s3_geodesic_sphere",
            "geodesic_sphere_in_S3",
            shape_params={"rho": np.pi / 6},
        ),
        scenario(
            "h3_geodesic_sphere",
            "geodesic_sphere_in_H3",
            shape_params={"rho": 0.5},
        ),
        scenario(
            "sphere_linear_density",
            "round_sphere",
            density="linear",
            coefficients=[0.0, 0.0, 1.0],
        ),
        scenario(
            "sphere_quadratic_density",
            "round_sphere",
            density="quadratic",
            coefficients=[0.5],
            T=scaled,
            S=scaled,
        ),
        scenario(
            "flat_disk",
            "flat_disk",
            shape_params={"radius": 1.0},
            problems=(spectra.STEKLOV, spectra.WENTZELL),
            b_values=(0.5, 2.0),
        ),
        scenario(
            "hemisphere",
            "hemisphere",
            problems=(spectra.STEKLOV, spectra.WENTZELL),
            b_values=(1.0,),
        ),
        scenario(
            "s3_cap",
            "spherical_cap_in_S3",
            shape_params={"rho": np.pi / 6},
            problems=(spectra.STEKLOV,),
        ),
        scenario(
            "annulus",
            "annulus",
            shape_params={"r0": 0.5, "r1": 1.0},
            problems=(spectra.STEKLOV,),
        ),
        scenario(
            "cylinder",
            "cylinder",
            shape_params={"radius": 1.0, "height": 1.0},
            problems=(spectra.STEKLOV,),
        ),
        scenario("ellipsoid_newton", "ellipsoid", T=newton, S=newton),
    ]
