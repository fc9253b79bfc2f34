"""Exact geometry kernel for the similar-triangle constructions DEF and D'E'F'.

Submodules:

* ``numeric`` -- Fractions and Gaussian rationals
* ``kernel`` -- points, lines, triangles, constructions, predicates
* ``naka`` -- DEF, D'E'F', auxiliary points, ratios, enumeration
* ``identities`` -- exact checks of the complex identities
* ``dsl`` -- the ``.geo`` construction-script language
* ``svg`` -- scene rendering
* ``cli`` -- the ``geoforge`` command
"""

from .errors import (
    AmbiguousIntersectionError,
    ConstructionError,
    DegenerateInputError,
    GeometryError,
    NoIntersectionError,
)
from .kernel import Backend, Line, Point, Triangle, tolerance
from .naka import naka_report
from .numeric import GaussianRational

__version__ = "0.1.0"
