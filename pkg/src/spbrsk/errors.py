"""Exception types raised by the library and mapped to CLI exit codes."""


class InvalidInputError(ValueError):
    """Malformed or out-of-domain input (wrong shape, not in I(d), ...)."""


class EmptyMonomialError(InvalidInputError):
    """A peeling step was requested on the empty monomial."""


class NotInvertibleError(ValueError):
    """A notched tableau pair that is not in the image of BRSK."""


class ConsistencyError(RuntimeError):
    """An internal identity failed; this means a reconstructed rule is wrong."""
