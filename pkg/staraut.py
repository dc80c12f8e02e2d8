#!/usr/bin/env python3
"""
staraut: exact verification of weak quadratic forms, ribbon structures on
graded vector spaces, Chu pairs and profunctor composition.

Every command prints one JSON document on stdout. Exit codes:
0 when every check passed, 1 when a mathematical check failed (the document
carries a counterexample), 2 for usage, input and IO errors, 3 for an
unexpected internal error (error_type "InternalError").
"""
from __future__ import annotations

import argparse
import logging
import sys
import traceback
from typing import Any, Dict, List, NoReturn, Optional

from rich.console import Console

from commands.command_registry import CommandRegistry
from core.config import StarautConfig
from core.exceptions import InvariantViolationError, MalformedInputError, SearchFailureError, UsageError
from core.logging import StarautLogger
from util.json_io import dumps, write_output

logger = logging.getLogger("staraut")

EXIT_PASSED = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

console = Console(stderr=True)


class JsonArgumentParser(argparse.ArgumentParser):
    """Argument parser that reports errors as MalformedInputError instead of exiting."""

    def error(self, message: str) -> NoReturn:
        raise MalformedInputError("argv", f"{self.prog}: {message}")


def build_parser(registry: CommandRegistry) -> JsonArgumentParser:
    parser = JsonArgumentParser(
        prog="staraut",
        description="Exact verification of star-autonomous and ribbon structures",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s qf enumerate --group '{"cyclic_orders":[2]}'
  %(prog)s qf classify --group '{"cyclic_orders":[3]}' --kind wrqf
  %(prog)s ribbon enumerate --group group.json
  %(prog)s chu verify --seed 7 --max-dim 3
  %(prog)s prof demo --category z2 --verbose
        """,
    )
    parser.add_argument(
        "--verbose",
        action="store_true",
        help="Enable verbose mode with DEBUG logging on stderr and tracebacks for internal errors",
    )
    parser.add_argument("--output", default=None, help="Also write the JSON result to this file")
    registry.add_subparsers(parser)
    return parser


def _emit(document: Dict[str, Any], output: Optional[str]) -> None:
    text = dumps(document)
    sys.stdout.write(text + "\n")
    try:
        write_output(text, output)
    except OSError as e:
        logger.error(f"Cannot write {output}: {e}")


def _output_option(argv: List[str]) -> Optional[str]:
    # Recovered by hand when parsing itself failed
    for i, arg in enumerate(argv):
        if arg == "--output" and i + 1 < len(argv):
            return argv[i + 1]
        if arg.startswith("--output="):
            return arg.split("=", 1)[1]
    return None


def main(argv: Optional[List[str]] = None) -> int:
    """CLI entry point; returns the process exit code."""
    argv = list(sys.argv[1:] if argv is None else argv)
    verbose = "--verbose" in argv
    StarautLogger.configure("DEBUG" if verbose else StarautConfig.create_default().log_level, console)

    output = _output_option(argv)
    try:
        registry = CommandRegistry(debug=verbose)
        args = build_parser(registry).parse_args(argv)
        output = args.output
        command = registry.get_command(args.command)
        if command is None:
            raise MalformedInputError("command", f"unknown command '{args.command}'")
        StarautLogger.set_context(command=f"{command.name} {args.action}", seed=getattr(args, "seed", None))
        with StarautLogger.get_logger().operation(f"{command.name} {args.action}"):
            result = command.execute_with_debug(args)
    except (InvariantViolationError, SearchFailureError) as e:
        _emit({"passed": False, "error": e.to_dict()}, output)
        return EXIT_CHECK_FAILED
    except UsageError as e:
        _emit({"passed": False, "error": e.to_dict()}, output)
        return EXIT_USAGE
    except OSError as e:
        _emit({"passed": False, "error": {
            "error_type": type(e).__name__, "message": str(e), "details": {},
        }}, output)
        return EXIT_USAGE
    except Exception as e:
        logger.error(f"Internal error: {e}")
        if verbose:
            console.print(f"[dim]{traceback.format_exc()}[/dim]")
        _emit({"passed": False, "error": {
            "error_type": "InternalError", "message": str(e), "details": {"exception_type": type(e).__name__},
        }}, output)
        return EXIT_INTERNAL
    finally:
        StarautLogger.clear_context()

    _emit({**result.payload, "passed": result.passed}, output)
    return EXIT_PASSED if result.passed else EXIT_CHECK_FAILED


if __name__ == "__main__":
    raise SystemExit(main())
