"""Tilted-beam slot/monopole antenna model (C++ core)."""

from ._tiltbeam import *  # noqa: F401,F403
from ._tiltbeam import __doc__  # noqa: F401
