"""Exception types shared across the package."""


class SternlikeError(Exception):
    """Base class for every error raised by this library."""


class SpecError(SternlikeError):
    """A sequence specification is malformed (bad coefficients, wrong init length, ...)."""


class UnknownPresetError(SternlikeError):
    """Requested preset name is not in the preset table."""


class RangeError(SternlikeError):
    """An index or range argument lies outside its valid domain."""


class DomainError(SternlikeError):
    """An expression evaluated outside its domain (negative sequence index or exponent)."""


class ParseError(SternlikeError):
    """Identity text does not conform to the grammar.

    `position` is the 0-based character offset of the offending token.
    """

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class UnknownIdentityError(SternlikeError):
    """Requested catalog identity does not exist."""


class SingularSystemError(SternlikeError):
    """The 2x2 coefficient-recovery system has determinant zero."""


class DivisionError(SternlikeError):
    """Series division is not defined (valuation mismatch or non-exact integer step)."""


class UnknownCheckError(SternlikeError):
    """Requested series check does not exist."""


class BFileError(SternlikeError):
    """A b-file is malformed.

    `line_no` is the 1-based line number of the offending line.
    """

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no
