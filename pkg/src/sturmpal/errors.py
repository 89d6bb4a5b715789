"""Exception hierarchy.

``DomainError`` covers bad inputs (rational slopes, invalid seeds, syntax);
``InternalCheckError`` covers failed self-consistency assertions, which
indicate a bug rather than a user mistake.
"""


class DomainError(ValueError):
    pass


class NumberSyntaxError(DomainError):
    def __init__(self, message, text="", position=0):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


class FieldError(DomainError):
    """Invalid denominator, negative radicand, or mixed quadratic fields."""


class InvalidSystemError(DomainError):
    pass


class InvalidStateError(DomainError):
    pass


class BudgetExceededError(DomainError):
    pass


class ShapeError(DomainError):
    pass


class DegenerateSubstitutionError(DomainError):
    pass


class AmbiguityError(DomainError):
    def __init__(self, message, roots=()):
        super().__init__(message)
        self.roots = tuple(roots)


class NotProlongableError(DomainError):
    pass


class SeedError(DomainError):
    pass


class PrecisionError(DomainError):
    pass


class InternalCheckError(RuntimeError):
    pass


class AlignmentError(InternalCheckError):
    pass


class InconsistencyError(InternalCheckError):
    pass
