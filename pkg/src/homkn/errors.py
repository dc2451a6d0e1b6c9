"""Exception types shared across the package."""


class HomknError(Exception):
    """Base class for all errors raised by homkn."""


class InputError(HomknError):
    """Malformed or out-of-range user input (graphs, cells, chains, paths)."""


class PreconditionError(HomknError):
    """An algorithm's hypothesis is not met by the given instance."""


class ResourceLimitError(HomknError):
    """Enumeration exceeded the configured cell cap.

    ``dimension`` is the cell dimension being enumerated when the cap was
    hit; ``count`` the number of cells produced so far.
    """

    def __init__(self, message, dimension=None, count=None):
        super().__init__(message)
        self.dimension = dimension
        self.count = count


class InternalInvariantError(HomknError):
    """A quantity the algorithm guarantees to vanish did not.

    This is never a property of the input: it indicates an implementation
    bug and is raised instead of silently producing a wrong certificate.
    """
