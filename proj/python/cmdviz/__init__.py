"""Cognitive Move Diagram toolkit: clustering, group states and diagram rendering."""

from ._cmdviz import *  # noqa: F401,F403
from ._cmdviz import __doc__  # noqa: F401
