"""Proximity predicates, antipodal matching search, ring torus geometry and
EEG trace embedding backed by the strbut C++ core."""

from ._strbut import *  # noqa: F401,F403
from ._strbut import StrbutError, Region, RingTorus, StringPath  # noqa: F401

__version__ = "0.1.0"
