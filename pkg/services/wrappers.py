import logging
from functools import wraps
from typing import Any

import click

from services.exceptions import (
    ConstraintViolationError,
    EffNumError,
    ParseError,
    VerificationError,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_CONSTRAINT_VIOLATION = 3


def exit_codes(f):
    """Turn toolkit errors raised by a command into its exit code.

    1 verification failure, 2 malformed or invalid input,
    3 sum or norm constraint violated.
    """

    @wraps(f)
    def decorated_function(*args, **kwargs) -> Any:
        try:
            return f(*args, **kwargs)
        except VerificationError as exc:
            logger.warning("%s", exc)
            code = EXIT_VERIFICATION_FAILED
        except ConstraintViolationError as exc:
            logger.error("Constraint violated: %s", exc)  # noqa: TRY400
            click.echo(f"Error: {exc}", err=True)
            code = EXIT_CONSTRAINT_VIOLATION
        except ParseError as exc:
            logger.error("Could not parse input: %s", exc)  # noqa: TRY400
            click.echo(f"Error: {exc}", err=True)
            code = EXIT_INPUT_ERROR
        except EffNumError as exc:
            logger.error("Invalid input: %s", exc)  # noqa: TRY400
            click.echo(f"Error: {exc}", err=True)
            code = EXIT_INPUT_ERROR
        raise click.exceptions.Exit(code)

    return decorated_function
