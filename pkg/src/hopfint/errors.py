"""Exception hierarchy.

Mathematical negatives (no integral, not separable, ...) are returned as
values, never raised.  Exceptions signal misuse, violated preconditions,
or capability limits of the ring tower.
"""


class HopfIntError(Exception):
    """Base class for every error raised by the package."""


class RingMismatch(HopfIntError):
    pass


class NotAUnit(HopfIntError):
    pass


class UnsupportedRingTier(HopfIntError):
    """The ring's linear-algebra tier cannot answer this question."""


class DimensionMismatch(HopfIntError):
    pass


class MalformedTable(HopfIntError):
    pass


class NotAssociative(HopfIntError):
    pass


class NotAGroup(HopfIntError):
    pass


class NotAMonoid(HopfIntError):
    pass


class AntipodeRequired(HopfIntError):
    pass


class NotAnIntegral(HopfIntError):
    pass


class NotCentralizing(HopfIntError):
    pass


class NotASubbialgebra(HopfIntError):
    def __init__(self, closure, detail=""):
        self.closure = closure
        super().__init__(f"{closure}: {detail}" if detail else closure)


class NotNormal(HopfIntError):
    pass


class InducedStructureIllDefined(HopfIntError):
    pass


class NotAnEndomorphismAction(HopfIntError):
    pass


class NotCocommutative(HopfIntError):
    pass


class HypothesisUnsatisfied(HopfIntError):
    def __init__(self, equation, detail=""):
        self.equation = equation
        msg = f"hypothesis {equation} unsatisfied"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class InvalidModulus(HopfIntError):
    pass


class NotIdempotent(HopfIntError):
    pass


class TruncationOverflow(HopfIntError):
    """A truncated product discarded a nonzero term above the degree bound."""


class ParseError(HopfIntError):
    def __init__(self, message, line=None, source=None):
        self.line = line
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)
