"""
Core infrastructure for the staraut toolkit.

Configuration, the exception hierarchy and structured logging shared by
the CLI and the algebra package.
"""

from .config import StarautConfig, resolve_config
from .exceptions import (
    StarautError, UsageError, GroupMismatchError, BoundExceededError,
    DimensionMismatchError, MalformedInputError, ConfigurationError,
    InvariantViolationError, InvalidFormError, CategoryError, SearchFailureError,
)
from .logging import StarautLogger, StructuredLogger

__all__ = [
    # Configuration
    'StarautConfig',
    'resolve_config',

    # Exceptions
    'StarautError',
    'UsageError',
    'GroupMismatchError',
    'BoundExceededError',
    'DimensionMismatchError',
    'MalformedInputError',
    'ConfigurationError',
    'InvariantViolationError',
    'InvalidFormError',
    'CategoryError',
    'SearchFailureError',

    # Logging
    'StarautLogger',
    'StructuredLogger',
]

__version__ = '0.1.0'
