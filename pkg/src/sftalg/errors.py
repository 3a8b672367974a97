"""Exception types raised by sftalg.

Every error carries a stable ``code`` string; the CLI prints it so scripts
can match on it without parsing messages.
"""


class SftError(Exception):
    code = "error"


class MalformedSpec(SftError):
    code = "malformed-spec"


class EmptyShift(SftError):
    code = "empty-shift"

    def __init__(self, msg="operation requires a nonempty shift"):
        super().__init__(msg)


class UnknownSymbol(SftError):
    code = "unknown-symbol"


class PointNotInShift(SftError):
    code = "point-not-in-shift"


class WordNotInLanguage(SftError):
    code = "word-not-in-language"


class ShiftMismatch(SftError):
    code = "shift-mismatch"


class Mismatch(ShiftMismatch):
    """Operands disagree on shift or coefficient ring."""

    code = "mismatch"


class NotInDomain(SftError):
    code = "not-in-domain"


class NonSimpleElement(SftError):
    code = "non-simple-element"


class ClassExplosion(SftError):
    code = "class-explosion"


class RingNotField(SftError):
    code = "ring-not-field"


class InternalInvariantViolation(SftError):
    """A mathematical invariant failed. Always a bug, never bad input."""

    code = "internal-invariant"


class ExprSyntaxError(SftError):
    code = "syntax-error"

    def __init__(self, msg, offset):
        super().__init__(f"{msg} at offset {offset}")
        self.offset = offset
