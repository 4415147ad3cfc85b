"""Finite strict monoidal categories: centers, centralizers, colimits, comonoids and braids."""

from .errors import (
    CategoryError,
    CocontinuityRefusal,
    ColimitInconsistency,
    ConstructionError,
    FormatError,
    GuardrailError,
    NotComposableError,
    PartialTableError,
    TheoremCheckViolation,
    UnknownIdError,
)
from .fincat import (
    Diagram,
    FinMonCat,
    Functor,
    Limits,
    TensorFunctor,
    ValidationReport,
    Violation,
    apply_tensor_functor,
    load_category,
    validate_category,
)

__version__ = "0.1.0"

__all__ = [
    "CategoryError",
    "CocontinuityRefusal",
    "ColimitInconsistency",
    "ConstructionError",
    "Diagram",
    "FinMonCat",
    "FormatError",
    "Functor",
    "GuardrailError",
    "Limits",
    "NotComposableError",
    "PartialTableError",
    "TensorFunctor",
    "TheoremCheckViolation",
    "UnknownIdError",
    "ValidationReport",
    "Violation",
    "apply_tensor_functor",
    "load_category",
    "validate_category",
]
