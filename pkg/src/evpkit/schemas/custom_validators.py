from fractions import Fraction
from typing import Any

from pydantic import GetCoreSchemaHandler
from pydantic_core import CoreSchema, PydanticCustomError, core_schema

from evpkit.core.exceptions import ParseException
from evpkit.numeric import format_rational, to_rational


class RationalStr(Fraction):
    """Exact rational carried as a string on the wire ("p/q", "3" or "0.25").

    JSON numbers are rejected: a binary float has already lost the exact value.
    """

    @classmethod
    def validate(cls, value: Any) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if not isinstance(value, str):
            raise PydanticCustomError(
                "rational_string",
                "rationals must be strings such as \"1/2\", got {kind}",
                {"kind": type(value).__name__},
            )
        try:
            return to_rational(value)
        except ParseException as exc:
            raise PydanticCustomError("rational_string", "invalid rational literal {value}", {"value": value}) from exc

    @classmethod
    def __get_pydantic_core_schema__(cls, _source_type: Any, _handler: GetCoreSchemaHandler) -> CoreSchema:
        return core_schema.no_info_plain_validator_function(
            cls.validate,
            serialization=core_schema.plain_serializer_function_ser_schema(format_rational),
        )


def json_path(loc: tuple[int | str, ...]) -> str:
    """Render a pydantic error location as a JSON path, e.g. ("dist", 0, 2) -> "$.dist[0][2]"."""
    path = "$"
    for part in loc:
        path += f"[{part}]" if isinstance(part, int) else f".{part}"
    return path
