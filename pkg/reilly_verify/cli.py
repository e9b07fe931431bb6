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

"""Command line interface: ``reilly-verify generate|spectrum|check``.

Exit codes are ``0`` when every check passes (violations flagged as findings
included), ``1`` when a check fails or a solver breaks down and ``2`` on
invalid input. Invalid input never produces output files.

"""

__all__ = [
    "main",
    "create_parser",
    "cmd_generate",
    "cmd_spectrum",
    "cmd_check",
]


# =============================================================================
# IMPORTS
# =============================================================================

import argparse
import datetime as dt
import json
import logging
import os
import sys

import joblib

from . import VERSION, mesh as _mesh, shapes, spaceform, spectra
from .bounds import terms
from .bounds.center import CenterOfMassError
from .config import (
    ConfigError,
    build_context,
    load_config,
    shipped_suite,
    run_scenario,
    validate,
)


logger = logging.getLogger("reilly_verify")


# =============================================================================
# CONSTANTS
# =============================================================================

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

LOG_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"

SHAPE_OPTIONS = (
    "radius",
    "rho",
    "a",
    "b",
    "c",
    "r0",
    "r1",
    "height",
    "opening",
    "delta",
)

SUITES = {"paper": shipped_suite}

#: errors of a valid scenario that cannot be evaluated
RUNTIME_ERRORS = (
    spectra.SolverConvergenceError,
    CenterOfMassError,
    spaceform.InjectivityDomainError,
)


# =============================================================================
# GENERATE
# =============================================================================


def cmd_generate(args):
    """Write a builtin shape as a WMESH file and describe it."""
    params = {
        name: getattr(args, name)
        for name in SHAPE_OPTIONS
        if getattr(args, name) is not None
    }
    try:
        mesh = shapes.generate_shape(
            args.shape,
            refinement=args.refine,
            density=args.density,
            coefficients=args.coefficients,
            **params,
        )
    except (shapes.ShapeParameterError, spaceform.DomainError) as err:
        logger.error("invalid shape: %s", err)
        return EXIT_USAGE

    path = args.output or os.path.join(args.out, f"{args.shape}.wmesh")
    try:
        with open(path, "w", encoding="utf-8") as fp:
            fp.write(_mesh.write_mesh(mesh))
    except OSError as err:
        logger.error("cannot write %s: %s", path, err)
        return EXIT_USAGE

    print(f"{path}: {mesh.num_vertices} vertices, {mesh.num_cells} triangles")
    print(f"area: {terms.volume(terms.unweighted(mesh)):.10g}")
    if not mesh.is_closed:
        boundary = _mesh.boundary_complex(mesh)
        print(
            f"boundary: {len(_mesh.boundary_loops(mesh))} loop(s), "
            f"length {terms.volume(terms.unweighted(boundary)):.10g}"
        )
    return EXIT_OK


# =============================================================================
# SPECTRUM
# =============================================================================


def _override(config, args):
    changes = {}
    if getattr(args, "refine", None) is not None:
        changes["refinement"] = args.refine
    if getattr(args, "out", None) is not None:
        changes["out_dir"] = args.out
    if getattr(args, "dump_matrices", False):
        changes["dump_matrices"] = True
    problem = getattr(args, "problem", None)
    if problem is not None:
        changes["problems"] = (problem,)
        if problem != spectra.WENTZELL:
            changes["b_values"] = ()
    if getattr(args, "b", None):
        changes["b_values"] = tuple(args.b)
    return config.replace(**changes) if changes else config


def _format_result(name, result):
    return (
        f"{name}: {result['eigenvalue_1']:.10g} "
        f"(residual {result['residual']:.3e}, method {result['method']})"
    )


def cmd_spectrum(args):
    """Solve the spectral problems of a scenario and print the first
    eigenvalues.

    """
    try:
        config = _override(load_config(args.config), args)
        mesh = validate(config)
    except ConfigError as err:
        logger.error("%s", err)
        return EXIT_USAGE

    context = build_context(config, mesh)
    try:
        summary = context.spectra_summary()
    except RUNTIME_ERRORS as err:
        logger.error("%s: %s", config.scenario_id, err)
        return EXIT_FAILED

    for name, result in summary.items():
        if name == spectra.WENTZELL:
            for variant, sub in result.items():
                print(_format_result(f"{name}[{variant}]", sub))
        else:
            print(_format_result(name, result))

    if config.dump_matrices:
        os.makedirs(config.out_dir, exist_ok=True)
        for path in context.system.dump(config.out_dir, config.scenario_id):
            logger.info("wrote %s", path)
    return EXIT_OK


# =============================================================================
# CHECK
# =============================================================================


def _sidecar(config):
    return {
        "scenario": config.scenario_id,
        "created": dt.datetime.now(dt.timezone.utc).isoformat(),
        "version": VERSION,
        "T": str(config.T),
        "S": str(config.S),
        "problems": list(config.problems),
        "b": list(config.b_values),
    }


def _write_report(config, report, mesh):
    os.makedirs(config.out_dir, exist_ok=True)
    base = os.path.join(config.out_dir, config.scenario_id)
    with open(f"{base}.json", "w", encoding="utf-8") as fp:
        fp.write(report.to_json())
    with open(f"{base}.csv", "w", encoding="utf-8", newline="") as fp:
        report.to_csv(fp)
    with open(f"{base}.meta.json", "w", encoding="utf-8") as fp:
        json.dump(_sidecar(config), fp, indent=2, sort_keys=True)
        fp.write("\n")
    if config.dump_matrices:
        build_context(config, mesh).system.dump(
            config.out_dir, config.scenario_id
        )
    logger.info("%s: wrote %s.json", config.scenario_id, base)


def _scenarios(args):
    if args.suite is not None:
        configs = SUITES[args.suite](4 if args.refine is None else args.refine)
        flags = argparse.Namespace(
            out=args.out, dump_matrices=args.dump_matrices
        )
        configs = [_override(config, flags) for config in configs]
    else:
        configs = [_override(load_config(path), args) for path in args.config]
    ids = [c.scenario_id for c in configs]
    duplicated = sorted({i for i in ids if ids.count(i) > 1})
    if duplicated:
        raise ConfigError(f"duplicated scenario id(s) {', '.join(duplicated)}")
    return configs


def cmd_check(args):
    """Run every applicable bound and identity of the scenarios and write
    ``<id>.json``, ``<id>.csv`` and ``<id>.meta.json`` reports.

    """
    try:
        configs = _scenarios(args)
        meshes = [validate(config) for config in configs]
    except ConfigError as err:
        logger.error("%s", err)
        return EXIT_USAGE

    try:
        reports = joblib.Parallel(n_jobs=args.workers)(
            joblib.delayed(run_scenario)(config, mesh)
            for config, mesh in zip(configs, meshes)
        )
    except RUNTIME_ERRORS as err:
        logger.error("%s", err)
        return EXIT_FAILED

    exit_code = EXIT_OK
    for config, mesh, report in zip(configs, meshes, reports):
        _write_report(config, report, mesh)
        for failure in report.failures:
            logger.warning(
                "%s: %s %s (lhs=%.6g, rhs=%.6g)",
                config.scenario_id,
                failure.check_id,
                failure.status,
                failure.lhs,
                failure.rhs,
            )
        exit_code = max(exit_code, report.exit_code)
    return exit_code


# =============================================================================
# PARSER
# =============================================================================


def create_parser():
    parser = argparse.ArgumentParser(
        prog="reilly-verify",
        description=(
            "Numerical verification of upper bounds of first eigenvalues "
            "on weighted surfaces of space forms."
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {VERSION}"
    )
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="Debug logging."
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    generate = subparsers.add_parser("generate", help="Write a builtin shape.")
    generate.add_argument("shape", choices=sorted(shapes.SHAPES))
    generate.add_argument("--refine", type=int, default=3)
    generate.add_argument("-o", "--output", help="Mesh file path.")
    generate.add_argument("--out", default=".", help="Output directory.")
    generate.add_argument(
        "--density", default="zero", choices=shapes.DENSITY_PRESETS
    )
    generate.add_argument("--coefficients", type=float, nargs="+")
    for name in SHAPE_OPTIONS:
        generate.add_argument(f"--{name}", type=float)
    generate.set_defaults(func=cmd_generate)

    spectrum = subparsers.add_parser(
        "spectrum", help="First eigenvalues of a scenario."
    )
    spectrum.add_argument("--config", required=True)
    spectrum.add_argument("--refine", type=int)
    spectrum.add_argument("--out")
    spectrum.add_argument("--dump-matrices", action="store_true")
    spectrum.add_argument("--problem", choices=spectra.PROBLEMS)
    spectrum.add_argument(
        "--b", type=float, action="append", help="Wentzell parameter."
    )
    spectrum.set_defaults(func=cmd_spectrum)

    check = subparsers.add_parser(
        "check", help="Run the bounds and identities."
    )
    source = check.add_mutually_exclusive_group(required=True)
    source.add_argument("--config", action="append")
    source.add_argument("--suite", choices=sorted(SUITES))
    check.add_argument("--refine", type=int)
    check.add_argument("--out")
    check.add_argument("--dump-matrices", action="store_true")
    check.add_argument("--workers", type=int, default=1)
    check.set_defaults(func=cmd_check)
    return parser


def main(argv=None):
    parser = create_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        format=LOG_FORMAT,
        level=logging.DEBUG if args.verbose else logging.INFO,
    )
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
