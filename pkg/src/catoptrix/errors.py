"""Exception hierarchy. Every error carries a machine-readable code (the class name)."""


class CatoptrixError(Exception):
    """Base class for all domain errors raised by this package."""

    @property
    def code(self) -> str:
        return type(self).__name__


class NonFinitePoint(CatoptrixError, ValueError):
    """A coordinate was NaN or infinite."""


class DegenerateLeadingCoefficient(CatoptrixError):
    """Leading coefficient vanishes; the polynomial drops degree."""


class NoConvergence(CatoptrixError):
    """Root polishing failed to reach the residual bound."""


class PointOutsideDomain(CatoptrixError):
    """An input point lies outside the open unit disk."""


class PointInsideDomain(CatoptrixError):
    """An input point lies inside the closed unit disk."""


class CoincidentPoints(CatoptrixError):
    """The two input points coincide (within 1e-14)."""


class NoRootOnCircle(CatoptrixError):
    """No candidate root passed the unit-circle test; tolerance or regime failure."""


class InvalidObserver(CatoptrixError):
    """Observer radius must exceed the mirror radius (r > 1)."""


class ShadowRegion(CatoptrixError):
    """Observer lies behind the mirror and no physically valid root exists."""


class RootAtOne(CatoptrixError):
    """A root coincides with w = 1, the pole of the Moebius map."""


class NotOnCircle(CatoptrixError):
    """Expected a point on the unit circle."""


class InvalidFocus(CatoptrixError):
    """Focus must lie on the real axis with a > 1."""
