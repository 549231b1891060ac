"""Exception types shared across the package."""


class LemonError(Exception):
    """Base class for all package errors."""


class DomainError(LemonError):
    """A construction parameter lies outside its admissible range."""


class RangeError(LemonError):
    """A boundary coordinate lies outside its arc."""


class SingularityError(LemonError):
    """An orbit probe ran into a corner or a tangential direction."""


class ItineraryChange(LemonError):
    """A finite-difference stencil straddles a discontinuity of the map."""


class ExtensionInvalid(LemonError):
    """A segment cannot be extended by same-arc bounces on both sides."""


class NoReturn(LemonError):
    """An orbit exceeded the step cap without returning to the section."""
