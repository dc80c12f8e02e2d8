"""
`ribbon` command: build, check, enumerate and compare skeletal structures.
"""
from __future__ import annotations

import argparse
import logging
from typing import Any, Callable, Dict

from algebra.groups import FinAbGroup
from algebra.qforms import WRQFDatum, enumerate_wrqf
from algebra.ribbon import (
    SkeletalStructure, build_from_wrqf, check_all, equivalent_structures, ribbon_class_report,
    structure_violations,
)
from commands.base_command import BaseCommand, CommandResult

logger = logging.getLogger(__name__)


class RibbonCommand(BaseCommand):
    """Braided structures with twist on pointed categories."""

    @property
    def name(self) -> str:
        return "ribbon"

    @property
    def description(self) -> str:
        return "Build, check, enumerate and compare skeletal ribbon structures"

    @property
    def actions(self) -> Dict[str, Callable[[argparse.Namespace], CommandResult]]:
        return {
            "build": self._build,
            "check": self._check,
            "enumerate": self._enumerate,
            "equivalent": self._equivalent,
        }

    def register_arguments(self, subparsers: argparse._SubParsersAction) -> None:
        build_parser = subparsers.add_parser("build", help="Structure from a (q, eta, g0) datum")
        build_parser.add_argument("--datum", required=True, help="WRQF datum JSON (inline or file path)")

        check_parser = subparsers.add_parser("check", help="Check every axiom of a structure")
        check_parser.add_argument("--structure", required=True, help="Structure JSON (inline or file path)")

        enumerate_parser = subparsers.add_parser("enumerate", help="Every structure built from a group's data")
        enumerate_parser.add_argument("--group", required=True, help="Group JSON (inline or file path)")

        equivalent_parser = subparsers.add_parser("equivalent", help="Search for an equivalence")
        equivalent_parser.add_argument("--left", required=True, help="Structure JSON (inline or file path)")
        equivalent_parser.add_argument("--right", required=True, help="Structure JSON (inline or file path)")

    def _build(self, args: argparse.Namespace) -> CommandResult:
        datum = WRQFDatum.from_json(self.load(args.datum, "datum"), "datum")
        structure = build_from_wrqf(datum, self.config)
        checks = check_all(structure)
        return CommandResult({"structure": structure.to_json(), "checks": checks}, passed=all(checks.values()))

    def _check(self, args: argparse.Namespace) -> CommandResult:
        structure = SkeletalStructure.from_json(self.load(args.structure, "structure"), "structure")
        violations = structure_violations(structure)
        failing = [(name, witness) for name, witness in violations.items() if witness is not None]
        counterexample = {"axiom": failing[0][0], **failing[0][1]} if failing else None
        return CommandResult({
            "checks": {name: witness is None for name, witness in violations.items()},
            "counterexample": counterexample,
        }, passed=not failing)

    def _enumerate(self, args: argparse.Namespace) -> CommandResult:
        group = FinAbGroup.from_json(self.load(args.group, "group"), "group")
        entries = []
        for datum in enumerate_wrqf(group, self.config):
            structure = build_from_wrqf(datum, self.config)
            entries.append({"datum": datum.to_json(), "checks": check_all(structure)})
        report = ribbon_class_report(group, self.config)
        passed = report["all_axioms"] and report["round_trip"] is not False
        if report["wrqf_orbits"] is not None:
            passed = passed and report["wrqf_orbits"] == report["structure_classes"]
        logger.info(f"Built {len(entries)} structures on {group}")
        payload: Dict[str, Any] = {**report, "entries": entries}
        return CommandResult(payload, passed=passed)

    def _equivalent(self, args: argparse.Namespace) -> CommandResult:
        left = SkeletalStructure.from_json(self.load(args.left, "left"), "left")
        right = SkeletalStructure.from_json(self.load(args.right, "right"), "right")
        found = equivalent_structures(left, right, self.config)
        payload: Dict[str, Any] = {"equivalent": found is not None}
        if found is not None:
            f, kappa = found
            payload["automorphism"] = f.to_json()
            payload["kappa"] = kappa.to_json()
        return CommandResult(payload)
