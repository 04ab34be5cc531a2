class EssGBError(Exception):
    """Base class for errors raised by this package."""


class NotPrimeError(EssGBError, ValueError):
    pass


class DuplicatePointError(EssGBError, ValueError):
    def __init__(self, first, second):
        self.rows = (first, second)
        super().__init__(f"duplicate point at rows {first + 1} and {second + 1}")


class RankDeficientError(EssGBError, ValueError):
    pass


class ParseError(EssGBError, ValueError):
    """Malformed polynomial string or points file.

    ``line``/``column`` are 1-based; ``line`` is None for one-line inputs.
    """

    def __init__(self, message, column, line=None):
        self.column = column
        self.line = line
        where = f"line {line}, column {column}" if line is not None else f"position {column}"
        super().__init__(f"{where}: {message}")


class GenerationError(EssGBError, RuntimeError):
    pass


class ChecksumMismatchError(EssGBError, RuntimeError):
    pass
