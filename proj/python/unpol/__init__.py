"""Two-mode SU(2) polarization algebra and unpolarized-light checks."""

from ._unpol import *  # noqa: F401,F403
from ._unpol import __version__  # noqa: F401
