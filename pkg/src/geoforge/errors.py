class GeometryError(ValueError):
    """Base class for failed geometric constructions."""


class DegenerateInputError(GeometryError):
    """Coincident or collinear input where distinct/general points are needed."""


class NoIntersectionError(GeometryError):
    """The two lines are parallel and distinct."""


class AmbiguousIntersectionError(GeometryError):
    """The two lines are identical, so they meet everywhere."""


class ConstructionError(GeometryError):
    """A named construction step failed.

    ``pair`` names the two objects whose intersection could not be formed,
    e.g. ``("CF", "O'D")``.
    """

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair
