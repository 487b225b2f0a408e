"""
Utilities Module
================

Validators, error types, decorators and the golden-section line search.
"""

from app.utils.validators import (
    validate_channel,
    validate_detector,
    validate_modulation,
    validate_channel_inputs,
    validate_sweep_range
)

from app.utils.exceptions import (
    KeyRateError,
    DomainError,
    UsageError,
    SingularityError
)

from app.utils.decorators import handle_errors, log_activity

__all__ = [
    'validate_channel',
    'validate_detector',
    'validate_modulation',
    'validate_channel_inputs',
    'validate_sweep_range',
    'KeyRateError',
    'DomainError',
    'UsageError',
    'SingularityError',
    'handle_errors',
    'log_activity'
]
