"""Common error handling utilities for the command line front end."""

import logging
from typing import Any

from pydantic import ValidationError as PydanticValidationError

from ..errors import DegenerateCurveError, DomainError, ExpressionError, PreconditionError

logger = logging.getLogger(__name__)


def json_pointer(loc: tuple[Any, ...], prefix: str = "") -> str:
    """Pydantic error location as a JSON pointer, e.g. ('curves', 0, 'g') -> /curves/0/g"""
    parts = [str(part).replace("~", "~0").replace("/", "~1") for part in loc]
    return prefix + "/" + "/".join(parts) if parts else prefix or "/"


def format_pydantic_errors(error: PydanticValidationError, prefix: str = "") -> str:
    """One line per validation error, each led by its pointer"""
    return "; ".join(f"{json_pointer(e['loc'], prefix)}: {e['msg']}" for e in error.errors())


def first_error_pointer(error: PydanticValidationError, prefix: str = "") -> str:
    errors = error.errors()
    return json_pointer(errors[0]["loc"], prefix) if errors else prefix or "/"


def describe_error(exception: Exception) -> dict[str, Any]:
    """Structured description of a library error for reports and stderr"""
    description: dict[str, Any] = {"error": type(exception).__name__, "message": str(exception)}
    if isinstance(exception, DomainError):
        description.update(t=exception.t, subexpression=exception.subexpression)
    elif isinstance(exception, ExpressionError) and getattr(exception, "offset", None) is not None:
        description["offset"] = exception.offset
    if isinstance(exception, PreconditionError | DegenerateCurveError) and exception.witness is not None:
        description["witness"] = exception.witness
    pointer = getattr(exception, "pointer", None)
    if pointer is not None:
        description["pointer"] = pointer
    return description


def format_command_error(command: str, exception: Exception) -> str:
    """Single-line diagnostic printed to stderr"""
    details = describe_error(exception)
    extras = " ".join(f"{k}={v}" for k, v in details.items() if k not in ("error", "message") and v is not None)
    message = f"{command}: {details['error']}: {details['message']}"
    logger.debug("Command %s failed with %s", command, details["error"])
    return f"{message} ({extras})" if extras else message
