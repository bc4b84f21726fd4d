"""
Error types for aslkit

Every failure raised by the library derives from AslkitError so the CLI and the
verification suites can catch the whole family in one place.
"""


class AslkitError(Exception):
    """Base class for all aslkit errors"""


class FormatError(AslkitError):
    """Malformed poset, facet or polynomial text"""


class CycleDetected(AslkitError):
    """Cover relation closes a cycle, so the order is not antisymmetric"""


class UnknownLabel(AslkitError):
    """A label that is not an element (or vertex) of the object at hand"""


class EmptyPoset(AslkitError):
    """Query that needs at least one element was given the empty poset"""


class NotComparable(AslkitError):
    """Interval endpoints that are not ordered a <= b"""


class NotALattice(AslkitError):
    """Some pair has no unique meet or join"""


class SizeCapExceeded(AslkitError):
    """Input is larger than a configured resource cap"""

    def __init__(self, cap, limit, actual):
        super().__init__(f"{cap}: {actual} exceeds limit {limit}")
        self.cap = cap
        self.limit = limit
        self.actual = actual


class IdealNotUpwardClosed(AslkitError):
    """Subset passed as a dual order ideal is not upward closed"""


class FaceNotInComplex(AslkitError):
    """Face argument is not a face of the complex"""


class BadArguments(AslkitError):
    """Arguments outside the documented domain"""


class NotDistributiveType(AslkitError):
    """Poset is not of distributive type"""


class Inconclusive(AslkitError):
    """A search ran out of budget before reaching a verdict"""

    def __init__(self, cap, detail=""):
        msg = f"inconclusive ({cap})"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.cap = cap


class DegreeBoundExceeded(AslkitError):
    """Betti table may continue past the requested degree window"""

    def __init__(self, bound, partial):
        super().__init__(f"nonzero Betti numbers on the boundary diagonal j - i = {bound}")
        self.bound = bound
        self.partial = partial


class InternalMismatch(AslkitError):
    """Two computations that must agree did not"""


class ConsistencyFailure(AslkitError):
    """Algebraic and topological oracles disagree"""
