"""
Exception Hierarchy

Every error raised by tame_langlands derives from ValidationError, so callers
(the CLI in particular) can separate bad input from a failed check.
"""


class ValidationError(Exception):
    """Base class for all tame_langlands errors"""


class InputError(ValidationError):
    """Malformed literal, unknown configuration key or out-of-range parameter"""


class NonTameError(InputError):
    """The residue characteristic divides a ramification index"""


class FieldMismatchError(ValidationError):
    """Objects defined over different fields were combined"""


class NotSubextensionError(ValidationError):
    """A field spec is not a sub-extension of the other"""


class NotRegularError(ValidationError):
    """A regularity precondition failed"""


class BoundExceededError(ValidationError):
    """An enumeration or oracle bound was exceeded"""


class InconsistentMarkingError(ValidationError):
    """Operator-group markings are missing or inconsistent"""


class DegenerateFormError(ValidationError):
    """A symplectic form is degenerate, not alternating, or not preserved"""


class CorrespondenceError(ValidationError):
    """A character matching that must be unique was not"""
