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
# DOC
# =============================================================================

"""Pytest configuration"""


# =============================================================================
# IMPORTS
# =============================================================================

import os

import numpy as np

import pytest

from reilly_verify import config, curvature, shapes
from reilly_verify.core import ScenarioContext


# =============================================================================
# CONSTANTS
# =============================================================================

#: refinement of the meshes shared by most tests
REFINEMENT = 3


# =============================================================================
# MESHES
# =============================================================================


@pytest.fixture(scope="session", autouse=True)
def no_jitter():
    seed = os.environ.pop(shapes.SEED_ENV, None)
    yield
    if seed is not None:
        os.environ[shapes.SEED_ENV] = seed


@pytest.fixture(scope="session")
def sphere():
    return shapes.generate_shape("round_sphere", refinement=REFINEMENT)


@pytest.fixture(scope="session")
def fine_sphere():
    return shapes.generate_shape("round_sphere", refinement=4)


@pytest.fixture(scope="session")
def ellipsoid():
    return shapes.generate_shape(
        "ellipsoid", refinement=REFINEMENT, a=1.0, b=1.0, c=1.5
    )


@pytest.fixture(scope="session")
def disk():
    return shapes.generate_shape("flat_disk", refinement=REFINEMENT)


@pytest.fixture(scope="session")
def hemisphere():
    return shapes.generate_shape("hemisphere", refinement=REFINEMENT)


@pytest.fixture(scope="session")
def annulus():
    return shapes.generate_shape("annulus", refinement=2, r0=0.5, r1=1.0)


@pytest.fixture(scope="session")
def s3_sphere():
    return shapes.generate_shape(
        "geodesic_sphere_in_S3", refinement=REFINEMENT, rho=np.pi / 6
    )


@pytest.fixture(scope="session")
def h3_sphere():
    return shapes.generate_shape(
        "geodesic_sphere_in_H3", refinement=REFINEMENT, rho=0.5
    )


@pytest.fixture(scope="session")
def s3_cap():
    return shapes.generate_shape(
        "spherical_cap_in_S3", refinement=REFINEMENT, rho=np.pi / 6
    )


@pytest.fixture(scope="session")
def sphere_field(sphere):
    return curvature.second_fundamental_form(sphere)


@pytest.fixture(scope="session")
def disk_field(disk):
    return curvature.second_fundamental_form(disk)


# =============================================================================
# SCENARIOS
# =============================================================================


@pytest.fixture
def make_context():
    def make(
        mesh,
        T="identity",
        S="identity",
        problems=("closed",),
        b_values=(),
        **kwargs,
    ):
        return ScenarioContext(
            mesh,
            config.TensorSpec.parse(T),
            config.TensorSpec.parse(S),
            problems=problems,
            b_values=b_values,
            **kwargs,
        )

    return make


@pytest.fixture
def scenario_file(tmp_path):
    def write(text, name="scenario.ini"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write
