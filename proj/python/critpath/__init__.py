"""Critical-path analysis on CPM and PERT activity networks.

The heavy lifting lives in the compiled extension; this package re-exports it.
"""

from critpath._core import *  # noqa: F401,F403
from critpath._core import __version__  # noqa: F401
