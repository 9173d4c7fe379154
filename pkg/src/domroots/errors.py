"""Exception types raised across the package."""

from __future__ import annotations


class DomRootsError(ValueError):
    """Base class for every error raised by this package."""


class InvalidEdge(DomRootsError):
    pass


class SelfLoop(DomRootsError):
    pass


class InvalidVertex(DomRootsError):
    pass


class ParseError(DomRootsError):
    """Malformed graph6 input; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class TooLarge(DomRootsError):
    pass


class InvalidPolynomial(DomRootsError):
    pass


class NoConvergence(DomRootsError):
    """Root iteration did not converge.

    The best iterates and their residuals are kept so callers can still report
    partial output.
    """

    def __init__(self, message: str, roots, residuals, zero_multiplicity: int):
        super().__init__(message)
        self.roots = list(roots)
        self.residuals = list(residuals)
        self.zero_multiplicity = zero_multiplicity


class HypothesisNotMet(DomRootsError):
    def __init__(self, condition: str):
        super().__init__(f"hypothesis not met: {condition}")
        self.condition = condition


class InvalidSpec(DomRootsError):
    pass
