"""
Tests for core.config.StarautConfig
"""
import os
from unittest.mock import patch

import pytest

from core.config import StarautConfig, resolve_config
from core.exceptions import BoundExceededError


class TestStarautConfig:
    """Test suite for StarautConfig."""

    def test_default_configuration(self):
        """Test default configuration values."""
        with patch.dict(os.environ, {}, clear=True):
            config = StarautConfig()

        assert config.max_aut_order == 64
        assert config.max_enumeration_order == 16
        assert config.max_witness_order == 9
        assert config.max_equivalence_order == 6
        assert config.denominator_factor == 2
        assert config.chu_max_dim == 3
        assert config.max_category_size == 4
        assert config.log_level == "WARNING"

    def test_environment_variable_loading(self):
        """Test loading configuration from environment variables."""
        env_vars = {
            'STARAUT_LOG_LEVEL': 'debug',
            'STARAUT_MAX_GROUP_ORDER': '32',
            'STARAUT_MAX_WITNESS_ORDER': '4',
            'STARAUT_MAX_EQUIVALENCE_ORDER': '8',
            'STARAUT_DENOMINATOR_FACTOR': '3',
            'STARAUT_CHU_MAX_DIM': '5',
            'STARAUT_MAX_CATEGORY_SIZE': '6',
        }

        with patch.dict(os.environ, env_vars):
            config = StarautConfig()

            assert config.log_level == "DEBUG"
            assert config.max_aut_order == 32
            assert config.max_enumeration_order == 32
            assert config.max_witness_order == 4
            assert config.max_equivalence_order == 8
            assert config.denominator_factor == 3
            assert config.chu_max_dim == 5
            assert config.max_category_size == 6

    def test_invalid_environment_variables_ignored(self):
        """Test that invalid environment variables are ignored."""
        env_vars = {
            'STARAUT_LOG_LEVEL': 'LOUD',
            'STARAUT_MAX_GROUP_ORDER': 'many',
            'STARAUT_CHU_MAX_DIM': '0',
            'STARAUT_MAX_WITNESS_ORDER': '-3',
        }

        with patch.dict(os.environ, env_vars, clear=True):
            config = StarautConfig()

            assert config.log_level == "WARNING"
            assert config.max_aut_order == 64
            assert config.chu_max_dim == 3
            assert config.max_witness_order == 9

    def test_validation_rejects_non_positive_bounds(self):
        """Test that non-positive bounds fail validation."""
        with patch.dict(os.environ, {}, clear=True):
            with pytest.raises(ValueError, match="chu_max_dim must be positive"):
                StarautConfig(chu_max_dim=0)
            with pytest.raises(ValueError, match="max_category_size must be positive"):
                StarautConfig(max_category_size=-1)

    def test_validation_rejects_unknown_log_level(self):
        """Test that an unknown log level fails validation."""
        with patch.dict(os.environ, {}, clear=True):
            with pytest.raises(ValueError, match="log_level"):
                StarautConfig(log_level="VERBOSE")

    def test_require_within_bound(self):
        """Test that values up to the bound pass."""
        with patch.dict(os.environ, {}, clear=True):
            config = StarautConfig(chu_max_dim=3)
        config.require('chu_max_dim', 3)

    def test_require_beyond_bound(self):
        """Test that values beyond the bound raise with the bound in the details."""
        with patch.dict(os.environ, {}, clear=True):
            config = StarautConfig(max_enumeration_order=8)

        with pytest.raises(BoundExceededError) as exc_info:
            config.require('max_enumeration_order', 9)

        error = exc_info.value
        assert error.parameter == 'max_enumeration_order'
        assert error.value == 9
        assert error.bound == 8
        assert error.to_dict()['details']['bound'] == 8

    def test_create_for_testing(self):
        """Test the testing configuration."""
        with patch.dict(os.environ, {}, clear=True):
            config = StarautConfig.create_for_testing()

        assert config.max_aut_order == 16
        assert config.max_enumeration_order == 9
        assert config.log_level == "DEBUG"

    def test_update_returns_new_instance(self):
        """Test that update leaves the original untouched."""
        with patch.dict(os.environ, {}, clear=True):
            config = StarautConfig()
            updated = config.update(chu_max_dim=4, log_level="INFO")

        assert updated is not config
        assert updated.chu_max_dim == 4
        assert updated.log_level == "INFO"
        assert config.chu_max_dim == 3

    def test_to_dict(self):
        """Test dictionary conversion."""
        with patch.dict(os.environ, {}, clear=True):
            data = StarautConfig().to_dict()

        assert data['max_category_size'] == 4
        assert set(data) >= {'max_aut_order', 'denominator_factor', 'log_level'}

    def test_resolve_config(self):
        """Test that resolve_config keeps an explicit config and defaults otherwise."""
        with patch.dict(os.environ, {}, clear=True):
            config = StarautConfig(chu_max_dim=2)
            assert resolve_config(config) is config
            assert resolve_config(None).chu_max_dim == 3
