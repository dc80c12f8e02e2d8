"""
Command registry for the staraut subcommands.

This module provides centralized command management with graceful
initialization failures and argparse wiring.
"""
from __future__ import annotations

import argparse
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional

from commands.base_command import BaseCommand
from commands.chu_command import ChuCommand
from commands.cocycle_command import CocycleCommand
from commands.gvect_command import GvectCommand
from commands.prof_command import ProfCommand
from commands.qf_command import QfCommand
from commands.ribbon_command import RibbonCommand
from core.config import StarautConfig, resolve_config

logger = logging.getLogger(__name__)


@dataclass
class CommandInitializationError:
    """Represents a command initialization failure."""
    name: str
    error: str
    exception_type: str


class CommandRegistry:
    """Registry of subcommand groups, keyed by their command-line name."""

    CORE_COMMANDS = {
        'qf': QfCommand,
        'cocycle': CocycleCommand,
        'ribbon': RibbonCommand,
        'gvect': GvectCommand,
        'chu': ChuCommand,
        'prof': ProfCommand,
    }

    COMMAND_SYNONYMS = {
        'forms': 'qf',
        'cocycles': 'cocycle',
        'ribbons': 'ribbon',
        'graded': 'gvect',
        'profunctor': 'prof',
    }

    def __init__(self, config: Optional[StarautConfig] = None, debug: bool = False):
        """
        Initialize the command registry.

        Args:
            config: Bounds shared by every command
            debug: Enable debug output for commands
        """
        self.config = resolve_config(config)
        self.debug = debug
        self.commands: Dict[str, BaseCommand] = {}
        self.initialization_errors: List[CommandInitializationError] = []

        self._initialize_commands()

    def _initialize_commands(self) -> None:
        self.commands.clear()
        self.initialization_errors.clear()

        for command_name, command_class in self.CORE_COMMANDS.items():
            try:
                self.commands[command_name] = command_class(self.config, debug=self.debug)
                logger.debug(f"Initialized command: {command_name}")
            except Exception as e:
                self.initialization_errors.append(CommandInitializationError(
                    name=command_name,
                    error=str(e),
                    exception_type=type(e).__name__,
                ))
                logger.warning(f"Failed to initialize command {command_name}: {e}")

    def get_command(self, name: str) -> Optional[BaseCommand]:
        """
        Get a command by name, supporting synonyms.

        Args:
            name: Command name or synonym

        Returns:
            Command instance or None if not found
        """
        return self.commands.get(self.COMMAND_SYNONYMS.get(name, name))

    def aliases_for(self, name: str) -> List[str]:
        return sorted(alias for alias, target in self.COMMAND_SYNONYMS.items() if target == name)

    def add_subparsers(self, parser: argparse.ArgumentParser) -> None:
        """
        Add one subparser per command, with synonyms as aliases.

        Args:
            parser: Top-level parser; the chosen command lands in `command`
        """
        subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
        subparsers.required = True
        for name, command in self.commands.items():
            command.add_to(subparsers, aliases=self.aliases_for(name))

