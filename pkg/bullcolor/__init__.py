"""Optimal coloring of bull-reducible Berge graphs with no antihole."""

from .util import __version__
from .graph import Graph
from .coloring import Coloring, WeightedColoring
from .driver import color_driver, weighted_color, trichotomy
from .recognition import is_class_member
from . import output
