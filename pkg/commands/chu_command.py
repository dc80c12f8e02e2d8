"""
`chu` command: certify the Chu identities on seeded random pairs.
"""
from __future__ import annotations

import argparse
import logging
import random
from typing import Any, Callable, Dict, Optional

from algebra.chu import random_valid_pair, verify_identities
from commands.base_command import BaseCommand, CommandResult

logger = logging.getLogger(__name__)


class ChuCommand(BaseCommand):
    """Chu pairs over the rationals."""

    @property
    def name(self) -> str:
        return "chu"

    @property
    def description(self) -> str:
        return "Certify duality, internal-hom and tensor identities of Chu pairs"

    @property
    def actions(self) -> Dict[str, Callable[[argparse.Namespace], CommandResult]]:
        return {"verify": self._verify}

    def register_arguments(self, subparsers: argparse._SubParsersAction) -> None:
        verify_parser = subparsers.add_parser("verify", help="Check every identity on random valid pairs")
        verify_parser.add_argument("--seed", type=int, default=0, help="Random seed (default: 0)")
        verify_parser.add_argument("--max-dim", dest="max_dim", type=int, default=3,
                                   help="Largest pair dimension (default: 3)")
        verify_parser.add_argument("--samples", type=int, default=100,
                                   help="Number of random triples (default: 100)")

    def _verify(self, args: argparse.Namespace) -> CommandResult:
        self.config.require("chu_max_dim", args.max_dim)
        rng = random.Random(args.seed)
        totals: Dict[str, bool] = {}
        counterexample: Optional[Dict[str, Any]] = None
        for sample in range(args.samples):
            u, v, w = (random_valid_pair(rng, args.max_dim) for _ in range(3))
            report = verify_identities(u, v, w, rng)
            for name, passed in report["checks"].items():
                totals[name] = totals.get(name, True) and passed
            if counterexample is None and report["counterexample"] is not None:
                counterexample = {"sample": sample, **report["counterexample"]}
        logger.info(f"Checked {args.samples} Chu triples")
        return CommandResult({
            "seed": args.seed,
            "max_dim": args.max_dim,
            "samples": args.samples,
            "checks": totals,
            "counterexample": counterexample,
        }, passed=counterexample is None)
