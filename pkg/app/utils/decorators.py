"""
Custom Decorators
=================

Command decorators for error reporting and activity logging.
"""

import logging
from functools import wraps

import click

from app.utils.exceptions import KeyRateError


def handle_errors(f):
    """
    Decorator turning toolkit errors into one-line CLI diagnostics.

    Any KeyRateError raised by the wrapped command is logged and re-raised
    as click.ClickException, so click prints "Error: <message>" and exits
    with a non-zero status.

    Args:
        f: Command callback to decorate

    Returns:
        Decorated function

    Usage:
        @click.command()
        @handle_errors
        def bounds(...):
            ...
    """
    @wraps(f)
    def decorated_function(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except KeyRateError as e:
            logging.error(f"Command {f.__name__} failed: {e}")
            raise click.ClickException(str(e)) from e
    return decorated_function


def log_activity(action):
    """
    Decorator to log command activity.

    Args:
        action (str): Description of the action being logged

    Returns:
        Decorator function

    Usage:
        @click.command()
        @log_activity('computed capacity bounds')
        def bounds(...):
            ...
    """
    def decorator(f):
        @wraps(f)
        def decorated_function(*args, **kwargs):
            params = ', '.join(
                f"{key}={value}" for key, value in sorted(kwargs.items())
                if value is not None
            )
            logging.info(f"Command {f.__name__} {action} ({params})")
            return f(*args, **kwargs)
        return decorated_function
    return decorator
