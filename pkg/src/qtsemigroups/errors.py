"""Exception hierarchy.

Everything raised on purpose by this package derives from ``SemigroupError``;
input-validation failures additionally derive from ``ValueError`` so callers
that only care about "bad input" can catch that.
"""


class SemigroupError(Exception):
    pass


class InputError(SemigroupError, ValueError):
    pass


class LengthMismatch(InputError):
    pass


class ValueOutOfRange(InputError):
    pass


class ArityOrSizeInvalid(InputError):
    pass


class TupleArityMismatch(InputError):
    pass


class ArityTooSmall(InputError):
    pass


class ArityMismatch(InputError):
    pass


class EvenTargetArity(InputError):
    pass


class NotAPermutation(InputError):
    pass


class DomainError(InputError):
    pass


class ParseError(InputError):
    pass


class NotANeutralElement(SemigroupError):
    pass


class NotReducible(SemigroupError):
    pass


class NotQuasitrivial(SemigroupError):
    pass


class NotAssociativeQuasitrivial(SemigroupError):
    pass


class PreconditionViolated(SemigroupError):
    pass


class InternalContradiction(SemigroupError):
    """A check that the theory says cannot fail did fail. Never swallow this."""


class PartialOperation(SemigroupError):
    def __init__(self, tup):
        super().__init__(f"maximum undefined at {tup}: several distinct maximal elements")
        self.tuple = tup


class CostLimitExceeded(SemigroupError):
    def __init__(self, cost, budget, what="computation"):
        super().__init__(f"{what} needs {cost} steps, budget is {budget}")
        self.cost = cost
        self.budget = budget
