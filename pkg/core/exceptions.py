"""
Custom exceptions for the staraut toolkit.

This module defines the exception hierarchy shared by the algebra modules,
the command layer and the CLI, so that every failure can be reported as a
self-contained JSON document.
"""
from __future__ import annotations

from typing import Any, Dict, Optional, Sequence


class StarautError(Exception):
    """Base exception for all staraut errors."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        """
        Initialize staraut error.

        Args:
            message: Error message
            details: Additional error details (must be JSON-serialisable)
        """
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        """Convert exception to dictionary representation."""
        return {
            'error_type': self.__class__.__name__,
            'message': self.message,
            'details': self.details,
        }


class UsageError(StarautError):
    """Base class for errors caused by the caller's input (CLI exit code 2)."""


class GroupMismatchError(UsageError):
    """Raised when an operation receives objects over different groups."""

    def __init__(self, operation: str, left: Any, right: Any,
                 details: Optional[Dict[str, Any]] = None):
        """
        Initialize group mismatch error.

        Args:
            operation: Name of the operation that was called
            left: Description of the first group
            right: Description of the second group
            details: Additional error details
        """
        message = f"{operation}: group mismatch ({left} vs {right})"
        super().__init__(message, {'left': str(left), 'right': str(right), **(details or {})})
        self.operation = operation


class BoundExceededError(UsageError):
    """Raised when a brute-force operation would exceed its configured bound."""

    def __init__(self, parameter: str, value: int, bound: int,
                 details: Optional[Dict[str, Any]] = None):
        """
        Initialize bound exceeded error.

        Args:
            parameter: Name of the bounded quantity
            value: Requested size
            bound: Configured maximum
            details: Additional error details
        """
        message = f"{parameter} = {value} exceeds the configured bound {bound}"
        super().__init__(message, {'parameter': parameter, 'value': value,
                                   'bound': bound, **(details or {})})
        self.parameter = parameter
        self.value = value
        self.bound = bound


class DimensionMismatchError(UsageError):
    """Raised when matrix or space shapes are incompatible."""

    def __init__(self, operation: str, left_shape: Sequence[int], right_shape: Sequence[int]):
        message = f"{operation}: incompatible shapes {tuple(left_shape)} and {tuple(right_shape)}"
        super().__init__(message, {'left_shape': list(left_shape), 'right_shape': list(right_shape)})
        self.operation = operation


class MalformedInputError(UsageError):
    """Raised when JSON input cannot be decoded into a domain object."""

    def __init__(self, field: str, reason: str):
        """
        Initialize malformed input error.

        Args:
            field: Dotted path of the offending field
            reason: What was wrong with it
        """
        message = f"Malformed input at '{field}': {reason}"
        super().__init__(message, {'field': field, 'reason': reason})
        self.field = field
        self.reason = reason


class ConfigurationError(UsageError):
    """Exception raised for configuration-related errors."""

    def __init__(self, parameter: str, value: Any, reason: str,
                 details: Optional[Dict[str, Any]] = None):
        """
        Initialize configuration error.

        Args:
            parameter: Configuration parameter name
            value: Invalid value
            reason: Reason why the value is invalid
            details: Additional error details
        """
        message = f"Invalid configuration for '{parameter}' = {value}: {reason}"
        super().__init__(message, details)
        self.parameter = parameter
        self.value = value
        self.reason = reason


class InvariantViolationError(StarautError):
    """Raised when an input violates a mathematical invariant (CLI exit code 1)."""

    def __init__(self, invariant: str, witness: Optional[Dict[str, Any]] = None):
        """
        Initialize invariant violation error.

        Args:
            invariant: Name of the violated condition
            witness: Counterexample data, already JSON-encoded
        """
        message = f"Invariant violated: {invariant}"
        super().__init__(message, {'invariant': invariant, 'witness': witness or {}})
        self.invariant = invariant
        self.witness = witness or {}


class InvalidFormError(InvariantViolationError):
    """Raised when a value table is not a (weak) quadratic form."""


class CategoryError(InvariantViolationError):
    """Raised for invalid finite categories, functors or profunctors."""


class SearchFailureError(StarautError):
    """Raised when a search that is guaranteed to succeed comes back empty."""

    def __init__(self, search: str, reason: str,
                 details: Optional[Dict[str, Any]] = None):
        message = f"Search '{search}' failed: {reason}"
        super().__init__(message, details)
        self.search = search
        self.reason = reason
