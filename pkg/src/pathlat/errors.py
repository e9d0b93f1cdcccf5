class PathLatticeError(Exception):
    pass


class ParseError(PathLatticeError, ValueError):
    pass


class DomainError(PathLatticeError, ValueError):
    pass


class CapExceeded(PathLatticeError):
    """An enumeration would produce more elements than the caller allowed."""


class LimitExceeded(PathLatticeError):
    """A brute-force oracle was asked for an instance above its size limit."""
