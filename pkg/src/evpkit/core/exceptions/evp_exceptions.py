from typing import Any

EXIT_SEMANTIC_FAILURE = 1
EXIT_INPUT_ERROR = 2


class CustomException(Exception):
    """Base for every error raised by evpkit; `exit_code` is what the CLI returns for it."""

    exit_code: int = EXIT_SEMANTIC_FAILURE

    def __init__(self, detail: str | None = None, exit_code: int | None = None) -> None:
        self.detail = detail or self.__class__.__name__
        if exit_code is not None:
            self.exit_code = exit_code
        super().__init__(self.detail)


# -------------- input errors --------------


class InputException(CustomException):
    exit_code = EXIT_INPUT_ERROR


class ParseException(InputException):
    pass


class SchemaMismatch(ParseException):
    """A file parsed as JSON but does not fit its schema; `report` lists the offending paths."""

    def __init__(self, report: Any, detail: str | None = None) -> None:
        self.report = report
        super().__init__(detail)


class MalformedSystem(InputException):
    pass


class DimensionMismatch(InputException):
    pass


class IndexOutOfRange(InputException):
    pass


class NonpositiveScale(InputException):
    pass


class NonpositiveAlpha(InputException):
    pass


class InvalidWeights(InputException):
    pass


# -------------- semantic failures --------------


class SemanticException(CustomException):
    exit_code = EXIT_SEMANTIC_FAILURE


class NoSeparation(SemanticException):
    pass


class TooLarge(SemanticException):
    pass


class InvalidInstance(SemanticException):
    def __init__(self, report: Any, detail: str | None = None) -> None:
        self.report = report
        super().__init__(detail or "instance failed validation")


class BoundViolation(SemanticException):
    pass
