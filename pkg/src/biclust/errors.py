"""Exception types shared across the toolkit."""


class BiclustError(Exception):
    """Base class for all toolkit errors."""


class ParseError(BiclustError, ValueError):
    """Malformed input file (bad cell, duplicate id, ragged row, ...).

    Carries enough context to point the user at the offending location.
    """

    def __init__(self, message, *, path=None, row=None, column=None):
        loc = []
        if path is not None:
            loc.append(str(path))
        if row is not None:
            loc.append(f"row {row}")
        if column is not None:
            loc.append(f"column {column}")
        if loc:
            message = f"{message} ({', '.join(loc)})"
        super().__init__(message)
        self.path = path
        self.row = row
        self.column = column


class IoError(BiclustError, OSError):
    """File could not be read or written."""


class CapacityError(BiclustError, RuntimeError):
    """A configured enumeration budget was exceeded."""


class EmptyPatternError(BiclustError, ValueError):
    """An operation that requires a non-empty pattern received an empty one."""


class NotClosedError(BiclustError, ValueError):
    """An itemset expected to be closed is not equal to its closure."""


class MatrixMismatchError(BiclustError, ValueError):
    """Biclusters refer to different source matrices."""
