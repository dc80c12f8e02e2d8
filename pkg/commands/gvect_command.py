"""
`gvect` command: verify the graded-space identities on random and exhaustive data.
"""
from __future__ import annotations

import argparse
import random
from typing import Callable, Dict

from algebra.groups import FinAbGroup
from algebra.gvect import verify_graded_identities
from commands.base_command import BaseCommand, CommandResult


class GvectCommand(BaseCommand):
    """G-graded vector spaces."""

    @property
    def name(self) -> str:
        return "gvect"

    @property
    def description(self) -> str:
        return "Verify duality, tensor and internal-hom identities for graded spaces"

    @property
    def actions(self) -> Dict[str, Callable[[argparse.Namespace], CommandResult]]:
        return {"verify": self._verify}

    def register_arguments(self, subparsers: argparse._SubParsersAction) -> None:
        verify_parser = subparsers.add_parser("verify", help="Run every graded identity check")
        verify_parser.add_argument("--seed", type=int, default=0, help="Random seed (default: 0)")
        verify_parser.add_argument("--max-dim", dest="max_dim", type=int, default=2,
                                   help="Largest dimension per degree (default: 2)")
        verify_parser.add_argument("--group", required=True, help="Group JSON (inline or file path)")
        verify_parser.add_argument("--samples", type=int, default=10,
                                   help="Random samples per check (default: 10)")

    def _verify(self, args: argparse.Namespace) -> CommandResult:
        group = FinAbGroup.from_json(self.load(args.group, "group"), "group")
        self.config.require("max_enumeration_order", group.order)
        report = verify_graded_identities(group, args.max_dim, random.Random(args.seed), samples=args.samples)
        checks = report["checks"]
        return CommandResult({
            "group": group.to_json(),
            "seed": args.seed,
            "max_dim": args.max_dim,
            "checks": checks,
            "counterexample": report["counterexample"],
        }, passed=all(checks.values()))
