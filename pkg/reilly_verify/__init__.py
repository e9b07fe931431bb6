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

"""reilly_verify: numerical verification of eigenvalue upper bounds.

Reilly-type inequalities bound the first nonzero eigenvalue of a closed
surface by integrals of its mean curvature. Their generalizations cover
weighted surfaces (a density ``e^{-f}``), drift operators
``L_{T,f} = -div(T grad u) + <grad f, T grad u>`` built from a symmetric
tensor ``T``, surfaces of the sphere and of hyperbolic space, and the first
Steklov and Wentzell eigenvalues of surfaces with boundary.

This package discretizes those surfaces with P1 finite elements, computes the
first eigenvalues and every term of the bounds, and reports for each bound
its two sides, the slack and a status (``holds``, ``equality_within_tol``,
``violated`` or ``hypotheses_unmet``). The integral identities the proofs rely
on are checked the same way.

"""


# =============================================================================
# META
# =============================================================================

__version__ = ("0", "1", "0")

NAME = "reilly_verify"

DOC = __doc__

VERSION = ".".join(__version__)

AUTHORS = "JuanBC"

EMAIL = "jbc.develop@gmail.com"

URL = None

LICENSE = "MIT"

KEYWORDS = (
    "spectral-geometry",
    "eigenvalues",
    "finite-elements",
    "mean-curvature",
    "steklov",
)


# =============================================================================
# IMPORTS
# =============================================================================

import os  # noqa

if os.getenv("REILLY_VERIFY_IN_SETUP") != "True":
    from .core import *  # noqa
    from .bounds import *  # noqa
    from .config import *  # noqa
    from .shapes import generate_shape  # noqa

del os
