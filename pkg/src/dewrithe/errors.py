"""Exception types shared across the library and the CLI."""


class ParseError(ValueError):
    """Malformed textual input (braid words, normal forms, files, series)."""


class GeometryError(Exception):
    """Base class for domain failures on configurations and loops."""


class DegenerateConfigurationError(GeometryError):
    """Two points of a configuration are closer than the separation floor."""


class NonGenericLoopError(GeometryError):
    """A loop violates the genericity needed to read off a braid word."""


class ResolutionError(GeometryError):
    """Samples are spaced too coarsely for the requested computation."""
