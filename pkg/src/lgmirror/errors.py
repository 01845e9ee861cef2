"""Exception hierarchy.

Input problems derive from ``InputError`` (CLI exit code 2), resource caps
from ``ResourceBoundExceeded`` (exit code 4). Everything else signals an
internal inconsistency and should never fire on valid input.
"""


class LGMirrorError(Exception):
    pass


class InputError(LGMirrorError, ValueError):
    pass


class ParseError(InputError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class NotInvertibleShape(InputError):
    pass


class ExponentTooSmall(InputError):
    pass


class NotASymmetry(InputError):
    pass


class NotAdmissible(InputError):
    pass


class NotSL(InputError):
    pass


class ResourceBoundExceeded(LGMirrorError):
    pass


class GroupTooLarge(ResourceBoundExceeded):
    pass


class DegreeBoundExceeded(ResourceBoundExceeded):
    pass


class OracleMismatch(LGMirrorError):
    pass


class HessianNotTop(LGMirrorError):
    pass


class NoCanonicalForm(LGMirrorError):
    pass


class DegenerateRescaling(LGMirrorError):
    pass


class SplitFailed(LGMirrorError):
    pass


class MixedPair(LGMirrorError):
    pass


class Property1Violation(LGMirrorError):
    def __init__(self, message: str, witnesses=()):
        self.witnesses = list(witnesses)
        super().__init__(message)
