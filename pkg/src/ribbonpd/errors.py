"""Exception hierarchy shared by the library and the command line."""


class RibbonError(ValueError):
    """Base class for domain errors (CLI exit code 1)."""


class ParseError(RibbonError):
    """Malformed textual or JSON input (CLI exit code 2)."""


class MalformedPresentationError(ParseError):
    """An arrow presentation where some label does not occur exactly twice."""


class NonOrientableError(RibbonError):
    """The described gluing produces a non-orientable surface."""


class UnknownEdgeError(RibbonError):
    """An edge label that is not an edge of the graph."""


class NotASummandError(RibbonError):
    """An edge set that is not a join-summand of the graph."""


class NonPrimeError(RibbonError):
    """A routine that needs a prime graph was handed a join."""


class NotPlaneError(RibbonError):
    """A routine that needs a plane ribbon graph got a higher genus one."""


class NotADiagramError(RibbonError):
    """A 4-valent map that is not a connected diagram on the sphere."""


class BoundsError(RibbonError):
    """Input exceeds the size guard of an exhaustive routine."""
