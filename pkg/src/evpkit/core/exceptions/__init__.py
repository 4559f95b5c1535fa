# ruff: noqa
from evpkit.core.exceptions.evp_exceptions import (
    EXIT_INPUT_ERROR,
    EXIT_SEMANTIC_FAILURE,
    CustomException,
    InputException,
    ParseException,
    SchemaMismatch,
    MalformedSystem,
    DimensionMismatch,
    IndexOutOfRange,
    NonpositiveScale,
    NonpositiveAlpha,
    InvalidWeights,
    SemanticException,
    NoSeparation,
    TooLarge,
    InvalidInstance,
    BoundViolation,
)
