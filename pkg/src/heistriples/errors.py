"""Exception types shared across the package."""


class GeometryError(ValueError):
    """A geometric operation received input outside its domain."""


class DegenerateConfiguration(GeometryError):
    """Points coincide, or a construction quantity vanishes numerically."""


class NotEquidistant(GeometryError):
    """A triple failed the equidistance check.

    The relative spread of the three pairwise distances is kept on the
    exception so callers can report how far off the input was.
    """

    def __init__(self, message: str, spread: float):
        super().__init__(message)
        self.spread = spread


class OffSurface(GeometryError):
    """An angle triple does not satisfy the surface equation.

    Carries the residual cos(a) + cos(b) + cos(c) - 3/2.
    """

    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual
