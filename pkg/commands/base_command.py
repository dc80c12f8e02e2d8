"""
Base command class for staraut subcommands.
"""
from __future__ import annotations

import argparse
import json
import logging
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional

from rich.console import Console

from core.config import StarautConfig, resolve_config
from core.exceptions import MalformedInputError
from util.json_io import load_json_argument

logger = logging.getLogger(__name__)


@dataclass
class CommandResult:
    """JSON payload of a command and whether every check in it passed."""

    payload: Dict[str, Any]
    passed: bool = True


class BaseCommand(ABC):
    """Abstract base class for a subcommand group such as `qf` or `ribbon`."""

    def __init__(self, config: Optional[StarautConfig] = None, debug: bool = False):
        """
        Initialize the command.

        Args:
            config: Bounds for brute-force operations
            debug: Print inputs and outputs to the stderr console
        """
        self.config = resolve_config(config)
        self.console = Console(stderr=True)
        self.debug_enabled = debug

    @property
    @abstractmethod
    def name(self) -> str:
        """Subcommand name on the command line."""
        pass

    @property
    @abstractmethod
    def description(self) -> str:
        """One-line help text."""
        pass

    @property
    @abstractmethod
    def actions(self) -> Dict[str, Callable[[argparse.Namespace], CommandResult]]:
        """Action name -> handler."""
        pass

    @abstractmethod
    def register_arguments(self, subparsers: argparse._SubParsersAction) -> None:
        """
        Add one parser per action.

        Args:
            subparsers: The action subparsers of this command's parser
        """
        pass

    def add_to(self, subparsers: argparse._SubParsersAction, aliases: Optional[List[str]] = None) -> None:
        parser = subparsers.add_parser(self.name, aliases=aliases or [], help=self.description,
                                       description=self.description)
        action_parsers = parser.add_subparsers(dest="action", metavar="ACTION")
        action_parsers.required = True
        self.register_arguments(action_parsers)

    def execute(self, args: argparse.Namespace) -> CommandResult:
        """
        Run the action selected on the command line.

        Args:
            args: Parsed arguments, with `action` set

        Returns:
            Command result
        """
        handler = self.actions.get(args.action)
        if handler is None:
            raise MalformedInputError("action", f"unknown action '{args.action}' for {self.name}")
        return handler(args)

    def load(self, value: str, field: str) -> Any:
        return load_json_argument(value, field)

    def _debug_log(self, message: str, data: Any = None) -> None:
        if not self.debug_enabled:
            return
        self.console.print(f"[dim cyan]{message}[/dim cyan]")
        if data is not None:
            text = json.dumps(data, indent=2, default=str, sort_keys=True)
            if len(text) > 2000:
                text = text[:2000] + "... [truncated]"
            self.console.print(f"[dim]{text}[/dim]")

    def execute_with_debug(self, args: argparse.Namespace) -> CommandResult:
        """Execute with input and output logged to the console in debug mode."""
        self._debug_log(f"{self.name} {args.action}", {k: v for k, v in vars(args).items() if k != "handler"})
        start_time = time.perf_counter()
        try:
            result = self.execute(args)
        except Exception as e:
            elapsed = (time.perf_counter() - start_time) * 1000
            self._debug_log(f"{self.name} {args.action} failed ({elapsed:.1f}ms)",
                            {"error": str(e), "type": type(e).__name__})
            raise
        elapsed = (time.perf_counter() - start_time) * 1000
        self._debug_log(f"{self.name} {args.action} {'passed' if result.passed else 'failed'} ({elapsed:.1f}ms)")
        logger.debug(f"{self.name} {args.action} finished in {elapsed:.1f}ms")
        return result
