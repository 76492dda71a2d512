"""Exception hierarchy shared by every module of the package."""


class SttiltError(Exception):
    """Base class for all errors raised by :mod:`sttilt`."""


# quiver
class LoopPresent(SttiltError):
    pass


class NotTree(SttiltError):
    pass


# exact linear algebra
class DimensionMismatch(SttiltError):
    pass


# algebra construction
class RelationTooShort(SttiltError):
    pass


class NotAdmissible(SttiltError):
    def __init__(self, nilbound, message=None):
        self.nilbound = nilbound
        super().__init__(
            message
            or f"Rad^{nilbound} is not contained in the ideal; increase nilbound"
        )


class IsLoop(SttiltError):
    pass


class IdealNotInRadical(SttiltError):
    pass


class PropagationFailed(SttiltError):
    pass


class InvalidCartan(SttiltError):
    pass


class InvalidOrientation(SttiltError):
    pass


# complexes and mutation
class AlgebraMismatch(SttiltError):
    pass


class NotMinimized(SttiltError):
    pass


class SplitFailure(SttiltError):
    pass


class NotSilting(SttiltError):
    pass


class NotTwoTerm(NotSilting):
    """The mutation cone leaves the two-term window (the mutation goes upward)."""


class IncompletePoset(SttiltError):
    pass


# posets
class NotComparable(SttiltError):
    pass


class ShapeViolation(SttiltError):
    pass


# split-by-nilpotent extensions
class PreconditionFailed(SttiltError):
    pass


class CGViolated(SttiltError):
    def __init__(self, part, witness):
        self.part = part
        self.witness = witness
        super().__init__(f"condition CG({part}) violated: {witness}")


class IsoFailure(SttiltError):
    def __init__(self, message, pair=None):
        self.pair = pair
        super().__init__(message)


# file formats
class ParseError(SttiltError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
