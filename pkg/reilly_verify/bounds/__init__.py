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

"""Bound and identity checks and their register utilities."""

__all__ = [
    "BOUND_IDS",
    "IDENTITY_IDS",
    "register_bound",
    "registered_bounds",
    "is_registered",
    "available_reports",
    "bound_of",
    "BoundBadDefinedError",
    "BoundContractError",
    "Bound",
    "Tolerances",
    "center_of_mass",
    "enclosing_radius",
]


# =============================================================================
# IMPORTS
# =============================================================================

import inspect

from .center import center_of_mass, enclosing_radius  # noqa
from .core import (  # noqa
    BOUND_IDS,
    IDENTITY_IDS,
    Bound,
    BoundBadDefinedError,
    BoundContractError,
    Tolerances,
)


# =============================================================================
# REGISTER UTILITY
# =============================================================================

_bounds = {}


def register_bound(cls):
    """Register a :class:`Bound` subclass for every id it reports.

    Raises
    ------
    TypeError
        If ``cls`` is not a :class:`Bound` subclass.
    BoundBadDefinedError
        If one of its ids is already reported by another check.

    """
    if not inspect.isclass(cls) or not issubclass(cls, Bound):
        raise TypeError(f"'cls' must be a subclass of Bound. Found: {cls}")
    for report in cls.get_reports():
        owner = _bounds.get(report)
        if owner is not None and owner is not cls:
            raise BoundBadDefinedError(
                f"'{report}' is already reported by {owner.__name__}"
            )
    _bounds.update((report, cls) for report in cls.get_reports())
    return cls


def registered_bounds():
    return dict(_bounds)


def is_registered(obj):
    if isinstance(obj, str):
        reports = [obj]
    elif not inspect.isclass(obj) or not issubclass(obj, Bound):
        raise TypeError(f"'obj' must be a subclass of Bound. Found: {obj}")
    else:
        reports = obj.get_reports()
    return {r: (r in _bounds) for r in reports}


def available_reports():
    return sorted(_bounds)


def bound_of(report_id):
    return _bounds[report_id]


# =============================================================================
# REGISTERS
# =============================================================================

from .bnd_classical import *  # noqa
from .bnd_theorem1 import *  # noqa
from .bnd_theorem2 import *  # noqa
from .bnd_theorem3 import *  # noqa
from .idt_grosjean import *  # noqa
from .idt_identities import *  # noqa

for cls in Bound.__subclasses__():
    register_bound(cls)

del cls
