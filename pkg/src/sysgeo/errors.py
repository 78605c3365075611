"""Exception types shared across the package."""


class SysgeoError(Exception):
    """Base class for all package-specific errors."""


class InvalidGeometryError(SysgeoError):
    """Edge lengths or triangle side lengths do not describe flat geometry."""


class RegularValueError(SysgeoError):
    """A radius collides with a vertex distance value."""

    def __init__(self, radius, vertex, value):
        self.radius = radius
        self.vertex = vertex
        self.value = value
        super().__init__(
            f"radius {radius!r} is not a regular value: vertex {vertex} "
            f"has distance {value!r}"
        )


class TrivialCocycleError(SysgeoError):
    """The cocycle is a coboundary, so no loop has nontrivial holonomy."""


class SurgeryPreconditionError(SysgeoError):
    """A buffer-surgery precondition failed (e.g. the ball is not small)."""


class DegenerateSamplingError(SysgeoError):
    """No usable regular radii exist for the requested sampling."""


class EnumerationCapError(SysgeoError):
    """Refusing to enumerate a cohomology group beyond the size cap."""
