"""Dual polar graphs over small finite fields.

Enumerates classical polar spaces, builds their dual polar and collinearity
graphs, computes the exact rank of the generator/point incidence matrix and
extracts verified resolving sets from its row bases.
"""

from .errors import (CriticalInvariantError, InvalidParameterError, InvariantViolation,
                     PolarError, ResourceError, UnsupportedOperationError)
from .forms import PolarSpaceDescriptor, make_polar_space
from .gf import FieldTable, make_field
from .kernels import BACKEND as KERNEL_BACKEND
from .pipeline import Instance
from .subspace import Subspace

__version__ = "0.1.0"

__all__ = [
    "CriticalInvariantError", "FieldTable", "Instance", "InvalidParameterError",
    "InvariantViolation", "KERNEL_BACKEND", "PolarError", "PolarSpaceDescriptor",
    "ResourceError", "Subspace", "UnsupportedOperationError", "make_field",
    "make_polar_space",
]
