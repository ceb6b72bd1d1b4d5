"""Exception hierarchy shared by every layer of the prover."""

from __future__ import annotations


class AreaMethodError(Exception):
    """Base class for all errors raised by :mod:`areamethod`."""


class DegenerateDenominator(AreaMethodError, ZeroDivisionError):
    """A denominator simplified to the zero polynomial."""


class ConstructionError(AreaMethodError):
    """Base class for errors in the construction itself."""

    def __init__(self, message: str, position: tuple[int, int] | None = None):
        if position is not None:
            message = f"{message} (line {position[0]}, column {position[1]})"
        super().__init__(message)
        self.position = position


class UnknownPoint(ConstructionError):
    pass


class DuplicatePoint(ConstructionError):
    pass


class ConstructionInconsistent(ConstructionError):
    """An ndg check failed: the negation of the ndg is provable."""

    def __init__(self, step, ndg):
        super().__init__(
            f"construction inconsistent at {step}: ndg {ndg.description} violated "
            f"(the statement {ndg.negation_text()} is provable)"
        )
        self.step = step
        self.ndg = ndg


class TooFewFreePoints(ConstructionError):
    pass


class UnsupportedShape(AreaMethodError):
    """No elimination lemma applies to a quantity."""


class UnsupportedAtom(AreaMethodError):
    """An atom has no area-coordinate rewrite (e.g. a ratio over free points)."""


class ResidualOddPower(AreaMethodError):
    """An odd power of S[O,X,Y] decides the statement; its sign is not assumed."""


class SqrtOfNegative(AreaMethodError):
    pass


class DegenerateAfterRetries(AreaMethodError):
    """The oracle could not draw a non-degenerate realization."""


class NonParallelRatio(AreaMethodError, ZeroDivisionError):
    """A distance ratio was evaluated on segments that are not parallel."""


class ParseError(AreaMethodError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
