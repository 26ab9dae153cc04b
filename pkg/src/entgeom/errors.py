"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class EntanglementError(ValueError):
    """Base class for all errors raised by :mod:`entgeom`."""


class LengthMismatch(EntanglementError):
    pass


class ZeroVector(EntanglementError):
    pass


class NotNormalized(EntanglementError):
    pass


class InvalidParameters(EntanglementError):
    pass


class InvalidDims(InvalidParameters):
    pass


class UnknownName(InvalidParameters):
    pass


class InvalidBipartition(EntanglementError):
    pass


class InvalidSubset(InvalidBipartition):
    pass


class OverlappingSubsets(InvalidBipartition):
    pass


class DimensionMismatch(EntanglementError):
    pass


class NotThreeParty(DimensionMismatch):
    pass


class NotThreeQubit(NotThreeParty):
    pass


class NotDensityMatrix(EntanglementError):
    pass


class BadOutcomeIndex(EntanglementError):
    pass


class KetSyntaxError(EntanglementError):
    """Rejected ket expression. ``position`` is a 0-based column in the source text."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.reason = message
        self.position = position
        self.text = text
        super().__init__(f"{message} (at position {position})")

    def pointer(self) -> str:
        """Two-line rendering of the source with a caret under the offending column."""
        return f"{self.text}\n{' ' * self.position}^"


class InconsistentKetLength(KetSyntaxError):
    pass


class DigitExceedsDimension(KetSyntaxError):
    pass
