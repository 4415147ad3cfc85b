"""Exception hierarchy shared by every module."""


class CategoryError(Exception):
    """Base class for all errors raised by centerbench."""


class FormatError(CategoryError):
    """A category or diagram description is malformed."""


class UnknownIdError(CategoryError, KeyError):
    def __init__(self, kind, name):
        super().__init__(f"unknown {kind} {name!r}")
        self.kind = kind
        self.name = name

    def __str__(self):
        return self.args[0]


class NotComposableError(CategoryError):
    pass


class PartialTableError(CategoryError):
    """A lookup hit an entry that a truncated (partial) table does not define."""


class GuardrailError(CategoryError):
    """An enumeration was refused because the input exceeds the size limits."""


class ConstructionError(CategoryError):
    """A constructed category failed to close under its own operations."""


class ColimitInconsistency(CategoryError):
    """A stored colimit produced zero or several mediating morphisms."""


class CocontinuityRefusal(CategoryError):
    """An inheritance construction was refused because a tensor functor is not cocontinuous."""

    def __init__(self, functor, witness=None):
        super().__init__(f"{functor} is not cocontinuous on the required diagram")
        self.functor = functor
        self.witness = witness


class TheoremCheckViolation(CategoryError):
    """A property asserted by the underlying theory failed on a concrete instance."""
