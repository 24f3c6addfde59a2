"""Exact invariants of finite group actions on graphs and posets.

The heavy lifting lives in the compiled extension; this package re-exports
its surface unchanged.
"""

from asphera._asphera import *  # noqa: F401,F403
from asphera._asphera import __version__  # noqa: F401
