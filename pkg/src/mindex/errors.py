"""Exception hierarchy. Everything raised on purpose derives from MindexError."""


class MindexError(Exception):
    pass


class UsageError(MindexError, ValueError):
    """Caller passed arguments outside an operation's contract."""


class DuplicateSeedError(UsageError):
    """An index set repeats a (degree, type) pair; the Wronskian vanishes."""


class DegenerateParameterError(MindexError):
    """A parameter choice kills a leading coefficient or an energy gap."""


class ConventionError(MindexError):
    """A construction produced the wrong degree or a non-exact division."""


class CalibrationError(MindexError):
    """No convention candidate reproduced the required identities."""


class NotCheckPolynomialError(MindexError):
    """A ring element is not the image of a polynomial in the sinusoidal coordinate."""


class InternalConsistencyError(MindexError):
    """A self-check inside the engine failed; indicates a bug, not bad input."""


class UnsupportedError(MindexError):
    """Requested construction is outside the supported scope."""
