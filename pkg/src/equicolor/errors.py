"""Exception types shared across the package."""

from __future__ import annotations


class EquicolorError(Exception):
    """Base class for all errors raised by this package."""


class InvalidEdgeError(EquicolorError, ValueError):
    """An edge is malformed: endpoint out of range or a self-loop."""


class DuplicateEdgeError(InvalidEdgeError):
    """The same undirected edge appears more than once."""


class GraphFormatError(EquicolorError, ValueError):
    """A graph or coloring file does not match its declared format."""


class OddCycleError(EquicolorError, ValueError):
    """The input graph is not bipartite.

    Attributes:
        witness: closed walk [v0, v1, ..., v0] of odd edge length whose
            every consecutive pair is an edge of the input graph.
    """

    def __init__(self, witness: list[int]):
        self.witness = list(witness)
        super().__init__(f"graph contains an odd cycle: {self.witness}")


class DegreeTooSmallError(EquicolorError, ValueError):
    """The coloring pipeline requires maximum degree at least 2."""


class PreconditionViolation(EquicolorError, ValueError):
    """A caller-facing precondition of an engine step does not hold."""


class InfeasibleSplitError(EquicolorError, ValueError):
    """No balanced split exists: the requested mass exceeds t * H."""


class SizeMismatchError(EquicolorError, ValueError):
    """A vertex pool cannot be cut into the requested class sizes."""


class ExhaustedBError(EquicolorError, RuntimeError):
    """Internal invariant failure: the greedy fill ran out of B-vertices.

    Unreachable when the feasibility conditions hold; raised instead of
    silently producing a short class.
    """


class NoBVertexError(EquicolorError, RuntimeError):
    """Internal invariant failure: a class slated to shrink has no B-vertex."""


class TooLargeError(EquicolorError, ValueError):
    """The brute-force oracle refuses inputs above its size guard."""


class ZetaTooSmallError(EquicolorError, ValueError):
    """The density ratio must exceed 41/2 for the constants to exist."""
