"""Exception hierarchy.

Every error raised on purpose by the package derives from :class:`BinedgeError`,
so callers (and the CLI) can map families of failures to exit codes.
"""

from __future__ import annotations


class BinedgeError(Exception):
    """Base class for all package errors."""


class InputError(BinedgeError, ValueError):
    """Malformed or out-of-range user input."""


class ParseError(InputError):
    pass


class RangeError(InputError):
    pass


class DuplicateEdge(InputError):
    pass


class SelfLoop(InputError):
    pass


class Unsupported(InputError):
    """Valid input in a form this package deliberately does not handle."""


class CapExceeded(BinedgeError):
    """The brute-force subset scan would exceed the configured candidate cap."""

    def __init__(self, candidates: int, cap: int):
        super().__init__(f"{candidates} candidate vertices exceed the cap of {cap}")
        self.candidates = candidates
        self.cap = cap


class StructureError(BinedgeError, ValueError):
    """A structural precondition of an operation does not hold."""


class NotAPath(StructureError):
    pass


class NotTheta(StructureError):
    pass


class HypothesisViolated(StructureError):
    pass


class NotC4(StructureError):
    pass


class UnsupportedBlock(StructureError):
    pass


class NotCactus(StructureError):
    pass


class NotBicyclic(StructureError):
    pass
