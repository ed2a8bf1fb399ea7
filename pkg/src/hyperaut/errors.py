"""Exception hierarchy for hyperaut.

Two families matter to callers: ``ParseError`` (malformed input files) and
``CapExceeded`` (a configured size limit was hit).  Everything else signals
programmer error in how the API was called.
"""

from __future__ import annotations


class HyperautError(Exception):
    """Base class for all hyperaut errors."""


# --- construction / argument errors ---------------------------------------

class DuplicateDomain(HyperautError):
    """A partial's domain lists the same point twice."""


class DuplicateImage(HyperautError):
    """A partial's image lists the same point twice (injectivity)."""


class LengthMismatch(HyperautError):
    """Domain and image lists of a partial differ in length."""


class SizeMismatch(HyperautError):
    """Transversal endpoints have different cardinalities."""


class MixedDomainSizes(HyperautError):
    """Fast order readout needs every term to share one domain set."""


class ArityMismatch(HyperautError):
    """Edge bracket of two edges with different cardinalities."""


class NotHomogeneous(HyperautError):
    """Canonical matrix requested for a hypergraph with mixed edge sizes."""


class DimensionMismatch(HyperautError):
    """Matrix operands have incompatible shapes."""


class NotAGraph(HyperautError):
    """Operation defined only for 2-homogeneous hypergraphs."""


class NotAnAutomorphism(HyperautError):
    """A supplied permutation moves some edge outside the edge family."""


# --- size caps -------------------------------------------------------------

class CapExceeded(HyperautError):
    """A configurable size cap would be exceeded; nothing was computed."""


class ExpansionTooLarge(CapExceeded):
    """Expanding a class into explicit permutations would exceed the cap."""


class ArityTooLarge(CapExceeded):
    """Edge bracket arity k exceeds the cap (the bracket has k! terms)."""


class DimensionTooLarge(CapExceeded):
    """Permutation-sum determinant requested above its dimension cap."""


class GroundSetTooLarge(CapExceeded):
    """Brute-force oracle asked to sweep a ground set above its cap."""


# --- input files -----------------------------------------------------------

class ParseError(HyperautError):
    """Malformed hypergraph file; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnknownLabel(ParseError):
    """An edge references a vertex label that was never declared."""


class DuplicateEdge(ParseError):
    """The same edge (as a vertex set) appears twice."""
