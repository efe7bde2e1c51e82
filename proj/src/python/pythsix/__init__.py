"""Factorization of quaternionic polynomials and degree-(2,2) Pythagorean 6-tuples."""

from ._core import *  # noqa: F401,F403
from ._core import PythsixError, __doc__  # noqa: F401
