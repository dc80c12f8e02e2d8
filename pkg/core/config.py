"""
Configuration management for the staraut toolkit.

This module provides the search and enumeration bounds used by the
brute-force parts of the algebra package, with environment-based
overrides and validation.
"""
from __future__ import annotations

import os
from dataclasses import asdict, dataclass
from typing import Optional

from core.exceptions import BoundExceededError


def _positive_int(name: str) -> Optional[int]:
    value = os.getenv(name)
    if value and value.isdigit() and int(value) > 0:
        return int(value)
    return None


@dataclass
class StarautConfig:
    """Bounds and switches for the staraut toolkit."""

    # Brute-force bounds (group orders)
    max_aut_order: int = 64
    max_enumeration_order: int = 16
    max_witness_order: int = 9
    max_equivalence_order: int = 6

    # Search denominators divide denominator_factor * exp(G)^2
    denominator_factor: int = 2

    # Chu verification
    chu_max_dim: int = 3

    # Objects and hom-set sizes for the profunctor calculus
    max_category_size: int = 4

    # Logging
    log_level: str = "WARNING"

    def __post_init__(self):
        """Post-initialization validation and environment variable loading."""
        self._load_from_environment()
        self._validate_config()

    def _load_from_environment(self) -> None:
        """Load configuration from environment variables."""
        log_level = os.getenv('STARAUT_LOG_LEVEL', '').upper()
        if log_level in ('DEBUG', 'INFO', 'WARNING', 'ERROR'):
            self.log_level = log_level

        # One knob for both enumeration bounds
        max_order = _positive_int('STARAUT_MAX_GROUP_ORDER')
        if max_order:
            self.max_aut_order = max_order
            self.max_enumeration_order = max_order

        witness_order = _positive_int('STARAUT_MAX_WITNESS_ORDER')
        if witness_order:
            self.max_witness_order = witness_order

        equivalence_order = _positive_int('STARAUT_MAX_EQUIVALENCE_ORDER')
        if equivalence_order:
            self.max_equivalence_order = equivalence_order

        factor = _positive_int('STARAUT_DENOMINATOR_FACTOR')
        if factor:
            self.denominator_factor = factor

        chu_dim = _positive_int('STARAUT_CHU_MAX_DIM')
        if chu_dim:
            self.chu_max_dim = chu_dim

        category_size = _positive_int('STARAUT_MAX_CATEGORY_SIZE')
        if category_size:
            self.max_category_size = category_size

    def _validate_config(self) -> None:
        """Validate configuration values."""
        for name in ('max_aut_order', 'max_enumeration_order', 'max_witness_order',
                     'max_equivalence_order', 'denominator_factor', 'chu_max_dim', 'max_category_size'):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

        if self.log_level not in ('DEBUG', 'INFO', 'WARNING', 'ERROR'):
            raise ValueError("log_level must be one of DEBUG, INFO, WARNING, ERROR")

    def require(self, parameter: str, value: int) -> None:
        """
        Raise if value exceeds the bound stored under parameter.

        Args:
            parameter: Name of a bound field, e.g. 'max_aut_order'
            value: Requested size

        Raises:
            BoundExceededError: When value is larger than the bound
        """
        bound = getattr(self, parameter)
        if value > bound:
            raise BoundExceededError(parameter, value, bound)

    @classmethod
    def create_default(cls) -> StarautConfig:
        """Create a default configuration instance."""
        return cls()

    @classmethod
    def create_for_testing(cls) -> StarautConfig:
        """Create a configuration with small bounds and verbose logging."""
        return cls(
            max_aut_order=16,
            max_enumeration_order=9,
            max_witness_order=9,
            max_equivalence_order=6,
            log_level="DEBUG",
        )

    def update(self, **kwargs) -> StarautConfig:
        """
        Create a new config instance with updated values.

        Args:
            **kwargs: Configuration values to update

        Returns:
            New StarautConfig instance with updated values
        """
        current_values = self.to_dict()
        current_values.update(kwargs)
        return StarautConfig(**current_values)

    def to_dict(self) -> dict:
        """Convert configuration to dictionary."""
        return asdict(self)


def resolve_config(config: Optional[StarautConfig]) -> StarautConfig:
    """Return config, or a freshly loaded default when None."""
    return config if config is not None else StarautConfig.create_default()
