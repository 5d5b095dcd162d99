"""Exception types raised across the package.

All derive from builtin families (mostly ``ValueError``) so callers that only
care about "bad input" can catch the builtin, while tests and the CLI can tell
the cases apart.
"""


class FrameMismatchError(ValueError):
    """Two frames (or a frame and a residual) do not share dimensions."""


class PGMError(ValueError):
    """A PGM file could not be decoded."""


class MalformedHeaderError(PGMError):
    """The PGM header is not ``P5 <width> <height> <maxval>``."""


class UnsupportedMaxvalError(PGMError):
    """The PGM declares a maxval other than 255."""


class TruncatedDataError(PGMError):
    """The PGM payload is shorter than ``width * height`` bytes."""


class InvalidCandidateError(ValueError):
    """A displacement outside the search window was handed to a cost probe."""


class FieldMismatchError(ValueError):
    """A vector field does not fit the frame/block geometry it is applied to."""


class ReconstructionRangeError(ValueError):
    """``prediction + residual`` left the 8-bit range: the inputs are corrupted."""
