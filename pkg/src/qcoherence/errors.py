"""Exception hierarchy. Every error is a ``ValueError`` so callers can catch broadly."""


class CoherenceError(ValueError):
    pass


class NotHermitian(CoherenceError):
    pass


class NotPositive(CoherenceError):
    pass


class TraceMismatch(CoherenceError):
    pass


class AlphaOutOfRange(CoherenceError):
    pass


class MeasureUndefined(CoherenceError):
    pass


class DimensionMismatch(CoherenceError):
    pass


class IncompleteKraus(CoherenceError):
    """Kraus operators violate sum_n K_n^* K_n = I."""


class NotGio(CoherenceError):
    pass


class NotIo(CoherenceError):
    pass


class ParamOutOfRange(CoherenceError):
    pass


class ResolutionTooCoarse(CoherenceError):
    pass


class MatrixFormatError(CoherenceError):
    """Malformed plain-text matrix or channel file."""
