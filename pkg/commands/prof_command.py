"""
`prof` command: run the coend calculus on a finite category.
"""
from __future__ import annotations

import argparse
import re
from typing import Callable, Dict, Tuple

from algebra.prof import BUILTIN_CATEGORIES, FinCategory, builtin_category, profunctor_demo
from commands.base_command import BaseCommand, CommandResult


class ProfCommand(BaseCommand):
    """Set-valued profunctors on finite categories."""

    @property
    def name(self) -> str:
        return "prof"

    @property
    def description(self) -> str:
        return "Coends, ends, composition and the representable adjunction on a finite category"

    @property
    def actions(self) -> Dict[str, Callable[[argparse.Namespace], CommandResult]]:
        return {"demo": self._demo}

    def register_arguments(self, subparsers: argparse._SubParsersAction) -> None:
        demo_parser = subparsers.add_parser("demo", help="Run every profunctor check on one category")
        demo_parser.add_argument(
            "--category", required=True,
            help=f"Builtin name ({', '.join(BUILTIN_CATEGORIES)}, chainN, discreteN) or category JSON",
        )

    def _category(self, value: str) -> Tuple[FinCategory, str]:
        if value in BUILTIN_CATEGORIES or re.fullmatch(r"(chain|discrete)\d+", value):
            return builtin_category(value), value
        return FinCategory.from_json(self.load(value, "category"), "category"), "custom"

    def _demo(self, args: argparse.Namespace) -> CommandResult:
        category, label = self._category(args.category)
        report = profunctor_demo(category, label, self.config)
        return CommandResult(report, passed=all(report["checks"].values()))
