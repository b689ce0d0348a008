"""Exception types shared across the toolkit."""


class BadParameter(ValueError):
    """A specialization parameter outside the admissible range (e.g. s = -2)."""


class NotAUnit(ArithmeticError):
    """Inversion was requested for a non-unit of Z[q,q^-1][1/(q+1)]."""


class WrongKind(ValueError):
    """Operation requires a different kind of quadratic extension."""


class WrongCharacteristic(ValueError):
    """Operation only defined in a specific characteristic."""


class ZeroElement(ZeroDivisionError):
    """Multiplicative data requested for the zero element."""


class Unsupported(ValueError):
    """Parameter choice excluded by the construction recipes."""


class SearchFailed(RuntimeError):
    """A bounded search that was expected to succeed came up empty."""


class CapExceeded(RuntimeError):
    """A closure or enumeration grew past its configured cap.

    ``partial`` carries the count reached before giving up.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class LevelTooLarge(CapExceeded):
    """|SL2(Z/N)| for the generalized level N exceeds the closure cap."""


class Inconclusive(RuntimeError):
    """The verdict could not be decided within the configured resources."""
