"""Spatial spinor fields over a double-covered 3-space.

Thin re-export of the compiled core; see the package README for the
mathematical conventions and the CLI counterpart.
"""

from ._spinor3 import *  # noqa: F401,F403
from ._spinor3 import __doc__  # noqa: F401

__version__ = "0.1.0"
