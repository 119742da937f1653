"""Exception hierarchy shared by all modules."""


class FengRaoError(Exception):
    """Base class for every error raised by this package."""


# -- fields -----------------------------------------------------------------

class FieldError(FengRaoError, ValueError):
    pass


class NonPrimeError(FieldError):
    pass


class ReducibleError(FieldError):
    pass


class SizeExceededError(FieldError):
    pass


class OutOfRangeError(FieldError):
    pass


class DivisionByZeroError(FengRaoError, ZeroDivisionError):
    pass


# -- linear algebra ---------------------------------------------------------

class LinearAlgebraError(FengRaoError, ValueError):
    pass


class SingularError(LinearAlgebraError):
    pass


class InconsistentError(LinearAlgebraError):
    pass


class NotUniqueError(LinearAlgebraError):
    pass


class NotInRowSpaceError(LinearAlgebraError):
    pass


class DimensionMismatchError(LinearAlgebraError):
    pass


# -- bases, tables, codes ---------------------------------------------------

class IndexOutOfRangeError(FengRaoError, IndexError):
    pass


class BasisMismatchError(FengRaoError, ValueError):
    pass


class EmptyIndexSetError(FengRaoError, ValueError):
    pass


class FullIndexSetError(FengRaoError, ValueError):
    pass


class NotDualPairError(FengRaoError, ValueError):
    pass


class TOutOfRangeError(FengRaoError, ValueError):
    pass


# -- algebras and codes -----------------------------------------------------

class NotInDeltaError(FengRaoError, ValueError):
    pass


class DuplicatePointError(FengRaoError, ValueError):
    pass


class EmptyPointSetError(FengRaoError, ValueError):
    pass


class DimOutOfRangeError(FengRaoError, ValueError):
    pass


class SideMismatchError(FengRaoError, ValueError):
    pass


class LengthMismatchError(FengRaoError, ValueError):
    pass


# -- decoding ---------------------------------------------------------------

class PrefixUnknownError(FengRaoError, ValueError):
    pass


class NotCandidateError(FengRaoError, ValueError):
    pass


class DecodeFailure(FengRaoError):
    """Decoding stopped at syndrome index `l`.

    `kind` is ``"NoCandidates"`` or ``"TiedVote"``; `transcript` holds the
    rounds completed so far (including the failing one).
    """

    def __init__(self, kind, l, transcript=None):
        self.kind = kind
        self.l = l
        self.transcript = transcript
        super().__init__(f"{kind} at syndrome index {l}")


class ConfigError(FengRaoError, ValueError):
    pass
