"""
Tests for commands.command_registry.CommandRegistry and commands.base_command
"""
import argparse
from unittest.mock import patch

import pytest

from commands.base_command import BaseCommand, CommandResult
from commands.command_registry import CommandRegistry
from commands.qf_command import QfCommand
from core.exceptions import MalformedInputError


class MockCommand(BaseCommand):
    """Mock command for testing."""

    def __init__(self, config=None, debug=False, should_fail=False):
        if should_fail:
            raise Exception("Initialization failed")
        super().__init__(config, debug)

    @property
    def name(self):
        return "mock"

    @property
    def description(self):
        return "Mock command for testing"

    @property
    def actions(self):
        return {"run": lambda args: CommandResult({"value": args.value}, passed=args.value > 0)}

    def register_arguments(self, subparsers):
        run_parser = subparsers.add_parser("run")
        run_parser.add_argument("--value", type=int, default=1)


class TestCommandRegistry:
    """Test suite for CommandRegistry."""

    def test_initialization_with_defaults(self, test_config):
        """Test that every core command is available."""
        registry = CommandRegistry(test_config)

        assert registry.debug is False
        assert set(registry.commands) == {"qf", "cocycle", "ribbon", "gvect", "chu", "prof"}
        assert registry.initialization_errors == []

    @patch('commands.command_registry.CommandRegistry.CORE_COMMANDS', {'mock': MockCommand})
    def test_successful_initialization(self, test_config):
        """Test that debug and config reach the command."""
        registry = CommandRegistry(test_config, debug=True)

        assert isinstance(registry.commands['mock'], MockCommand)
        assert registry.commands['mock'].debug_enabled is True
        assert registry.commands['mock'].config is test_config

    @patch('commands.command_registry.CommandRegistry.CORE_COMMANDS',
           {'failing': lambda config, debug: MockCommand(config, debug, should_fail=True)})
    def test_failed_initialization(self, test_config):
        """Test handling of failed command initialization."""
        registry = CommandRegistry(test_config)

        assert 'failing' not in registry.commands
        error = registry.initialization_errors[0]
        assert error.name == 'failing'
        assert "Initialization failed" in error.error
        assert error.exception_type == "Exception"
        assert len(registry.initialization_errors) == 1

    def test_synonyms(self, test_config):
        """Test that synonyms resolve to the same instance."""
        registry = CommandRegistry(test_config)

        assert registry.get_command('forms') is registry.get_command('qf')
        assert registry.get_command("profunctor") is registry.get_command("prof")
        assert registry.get_command('knot') is None
        assert registry.aliases_for('qf') == ['forms']

    def test_subparsers(self, test_config):
        """Test that commands and aliases are wired into argparse."""
        registry = CommandRegistry(test_config)
        parser = argparse.ArgumentParser()
        registry.add_subparsers(parser)

        args = parser.parse_args(["cocycles", "check", "--cocycle", "{}"])
        assert args.command == "cocycles"
        assert args.action == "check"


class TestBaseCommand:
    """Test suite for BaseCommand."""

    def test_execute_dispatches(self, test_config):
        """Test that the action handler runs."""
        result = MockCommand(test_config).execute(argparse.Namespace(action="run", value=3))

        assert result.payload == {"value": 3}
        assert result.passed is True

    def test_unknown_action(self, test_config):
        """Test that unknown actions are input errors."""
        with pytest.raises(MalformedInputError):
            MockCommand(test_config).execute(argparse.Namespace(action="walk"))

    def test_execute_with_debug_reraises(self, test_config):
        """Test that failures propagate through the debug wrapper."""
        command = QfCommand(test_config, debug=True)
        with pytest.raises(MalformedInputError):
            command.execute_with_debug(argparse.Namespace(action="enumerate", group="{}", kind="wqf"))

    def test_execute_with_debug_result(self, test_config):
        """Test that the wrapped result is unchanged."""
        result = MockCommand(test_config, debug=True).execute_with_debug(argparse.Namespace(action="run", value=-1))
        assert result.passed is False
