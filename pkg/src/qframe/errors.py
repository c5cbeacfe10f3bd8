"""Exception types shared across the package.

Everything derives from ``QframeError`` so callers can catch broadly, while
the CLI maps the specific subclasses onto distinct exit codes.
"""

from __future__ import annotations


class QframeError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatchError(QframeError, ValueError):
    """Operands live on incompatible Hilbert-space or label dimensions."""


class UnsupportedDimensionError(QframeError, ValueError):
    """A construction was requested in a dimension where it is not defined."""


class NotAFrameError(QframeError, ValueError):
    """An operator family fails the lower frame bound (does not span)."""


class SingularBasisError(QframeError, ValueError):
    """A Gram matrix or operator basis is numerically singular."""


class FiducialSearchError(QframeError, RuntimeError):
    """Numerical fiducial search failed to reach the acceptance residual."""


class UnsupportedTransformError(QframeError, ValueError):
    """Transformation between the requested representations is unavailable."""


class ParseError(QframeError, ValueError):
    """Malformed serialized input (JSON documents, label lists, ...)."""
