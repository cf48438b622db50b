from clustnet._core import *  # noqa: F401,F403
from clustnet._core import __version__  # noqa: F401
