"""Exception types shared across the package."""


class FormatError(ValueError):
    """A text input cannot be parsed."""


class SliceWordError(FormatError):
    """A slice event is invalid against the running strand count."""


class DomainError(ValueError):
    """A well-formed value violates an operation's precondition."""


class CompositionError(DomainError):
    """Boundary arity mismatch in a groupoid product."""


class InvariantViolation(RuntimeError):
    """An internal structural invariant failed; indicates a bug."""
