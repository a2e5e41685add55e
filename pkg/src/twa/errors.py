"""Exception types shared across the library."""


class TwaError(Exception):
    """Base class for every error raised by this library."""


class TagMismatchError(TwaError):
    """Operands belong to different semirings, or the tag is unsupported here."""


class DimensionError(TwaError):
    """Matrix or vector dimensions do not line up, or a state index is out of range."""


class AlphabetError(TwaError):
    """An unknown symbol was used, or two alphabets do not match."""


class PositiveCycleError(TwaError):
    """A star/closure diverges because the graph contains a positive-weight cycle."""


class NotNonpositiveError(TwaError):
    """A construction required a nonpositive series but found a value above zero.

    The offending word is available as ``witness``.
    """

    def __init__(self, witness: str):
        super().__init__(f"series is positive on witness {witness!r}")
        self.witness = witness


class NotEqualError(TwaError):
    """Two automata that were required to be equivalent are not.

    A word on which they differ is available as ``witness``.
    """

    def __init__(self, witness: str):
        super().__init__(f"series differ on witness {witness!r}")
        self.witness = witness


class CapExceededError(TwaError):
    """A configurable resource cap (monoid closure, subset construction) was hit."""

    def __init__(self, what: str, cap: int):
        super().__init__(f"{what} exceeded cap of {cap}")
        self.what = what
        self.cap = cap


class FormatError(TwaError):
    """A text file or literal does not conform to the expected syntax."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class OracleBoundError(TwaError):
    """A brute-force enumeration would exceed its safety bound."""
