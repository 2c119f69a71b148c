"""PT-symmetric matrix model toolkit: spectra, domain boundary, exceptional
points, and the two-level metric family."""

from ._ptspec import *  # noqa: F401,F403
from ._ptspec import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
