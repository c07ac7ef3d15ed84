"""Maximal-order matrices over GF(2): counting, generation and verification."""

from ._core import *  # noqa: F401,F403
from ._core import CapExceeded, Matrix, Poly, SingularMatrix

__version__ = "0.1.0"
