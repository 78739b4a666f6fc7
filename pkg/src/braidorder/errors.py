"""Exception hierarchy shared by every module of the package."""


class BraidError(ValueError):
    """Base class for domain errors raised by braidorder."""


class LetterTooSmall(BraidError):
    pass


class StrandMismatch(BraidError):
    pass


class StrandTooSmall(BraidError):
    pass


class IndexOutOfRange(BraidError):
    pass


class NotPositive(BraidError):
    pass


class MembershipViolation(BraidError):
    """A tower piece uses a generator outside its parabolic submonoid."""


class ContextMismatch(BraidError):
    """Two codes belong to different (strand count, arrangement) contexts."""


class BudgetExceeded(RuntimeError):
    """An exhaustive oracle would have to exceed its declared search budget."""
