"""
`qf` command: enumerate, decompose, classify and check quadratic forms.
"""
from __future__ import annotations

import argparse
import logging
from typing import Any, Callable, Dict

from algebra.groups import FinAbGroup, has_square_roots
from algebra.qforms import (
    WeakQuadraticForm, classify, classify_wrqf, classify_wsqf, decompose, enumerate_qf,
    enumerate_wqf, enumerate_wrqf, enumerate_wsqf, find_bilinearity_violation,
    find_symmetry_violation, table_from_json, wqf_class_bijection,
)
from commands.base_command import BaseCommand, CommandResult

logger = logging.getLogger(__name__)

KINDS = ("wqf", "qf", "wsqf", "wrqf")

ENUMERATORS = {
    "wqf": enumerate_wqf,
    "qf": enumerate_qf,
    "wsqf": enumerate_wsqf,
    "wrqf": enumerate_wrqf,
}


class QfCommand(BaseCommand):
    """Weak quadratic forms and their symmetric and representable variants."""

    @property
    def name(self) -> str:
        return "qf"

    @property
    def description(self) -> str:
        return "Enumerate, decompose, classify and check (weak) quadratic forms"

    @property
    def actions(self) -> Dict[str, Callable[[argparse.Namespace], CommandResult]]:
        return {
            "enumerate": self._enumerate,
            "decompose": self._decompose,
            "classify": self._classify,
            "check": self._check,
        }

    def register_arguments(self, subparsers: argparse._SubParsersAction) -> None:
        enumerate_parser = subparsers.add_parser("enumerate", help="List every form on a group")
        enumerate_parser.add_argument("--group", required=True, help="Group JSON (inline or file path)")
        enumerate_parser.add_argument("--kind", choices=KINDS, default="wqf", help="Which forms (default: wqf)")

        decompose_parser = subparsers.add_parser("decompose", help="Split q = q~ * eta")
        decompose_parser.add_argument("--form", required=True, help="Form JSON (inline or file path)")

        classify_parser = subparsers.add_parser("classify", help="Orbits under Aut(G)")
        classify_parser.add_argument("--group", required=True, help="Group JSON (inline or file path)")
        classify_parser.add_argument("--kind", choices=KINDS, default="wqf", help="Which forms (default: wqf)")

        check_parser = subparsers.add_parser("check", help="Check the form axioms on a value table")
        check_parser.add_argument("--form", required=True, help="Form JSON (inline or file path)")
        check_parser.add_argument("--symmetric-wrt", dest="symmetric_wrt", default=None,
                                  help="Element g0 as a JSON list; also check q(g) = q(-g + g0)")

    def _group(self, args: argparse.Namespace) -> FinAbGroup:
        return FinAbGroup.from_json(self.load(args.group, "group"), "group")

    def _enumerate(self, args: argparse.Namespace) -> CommandResult:
        group = self._group(args)
        items = ENUMERATORS[args.kind](group, self.config)
        logger.info(f"Enumerated {len(items)} {args.kind} data on {group}")
        return CommandResult({
            "group": group.to_json(),
            "kind": args.kind,
            "count": len(items),
            "forms": [item.to_json() for item in items],
        })

    def _decompose(self, args: argparse.Namespace) -> CommandResult:
        q = WeakQuadraticForm.from_json(self.load(args.form, "form"), "form")
        reduced, eta = decompose(q)
        checks = {
            "product": reduced * eta == q,
            "symmetric": reduced.is_symmetric(),
            "same_beta": reduced.beta.table == q.beta.table,
        }
        return CommandResult({
            "form": q.to_json(),
            "qform": reduced.to_json(),
            "character": eta.to_json(),
            "checks": checks,
        }, passed=all(checks.values()))

    def _classify(self, args: argparse.Namespace) -> CommandResult:
        group = self._group(args)
        payload: Dict[str, Any] = {"group": group.to_json(), "kind": args.kind}
        passed = True
        if args.kind in ("wqf", "qf"):
            orbits = classify(ENUMERATORS[args.kind](group, self.config), self.config)
        elif args.kind == "wsqf":
            orbits = classify_wsqf(enumerate_wsqf(group, self.config), self.config)
        else:
            orbits = classify_wrqf(enumerate_wrqf(group, self.config), self.config)
        payload["count"] = len(orbits)
        payload["orbits"] = [orbit.to_json() for orbit in orbits]

        if args.kind == "wqf":
            bijection = wqf_class_bijection(group, self.config)
            payload["bijection"] = bijection
            passed = bijection["well_defined"] and bijection["injective"] and bijection["surjective"]
        elif args.kind in ("wsqf", "wrqf") and has_square_roots(group):
            # both sides of the WRQF <-> WSQF correspondence
            other = classify_wrqf(enumerate_wrqf(group, self.config), self.config) if args.kind == "wsqf" \
                else classify_wsqf(enumerate_wsqf(group, self.config), self.config)
            payload["counterpart_count"] = len(other)
            passed = len(other) == len(orbits)
        return CommandResult(payload, passed=passed)

    def _check(self, args: argparse.Namespace) -> CommandResult:
        group, values = table_from_json(self.load(args.form, "form"), "form")
        q = WeakQuadraticForm(group, values)
        bilinearity = find_bilinearity_violation(group, values)
        symmetry = find_symmetry_violation(q, group.zero)
        payload: Dict[str, Any] = {
            "weak_qform": bilinearity is None,
            "qform": bilinearity is None and symmetry is None,
        }
        counterexample = bilinearity or symmetry
        if args.symmetric_wrt is not None:
            g0 = group.element_from_json(self.load(args.symmetric_wrt, "symmetric-wrt"), "symmetric-wrt")
            shifted = find_symmetry_violation(q, g0)
            payload["symmetric_wrt"] = shifted is None
            payload["g0"] = list(g0)
            counterexample = counterexample or shifted
        payload["counterexample"] = counterexample
        passed = all(v for k, v in payload.items() if isinstance(v, bool))
        return CommandResult(payload, passed=passed)
