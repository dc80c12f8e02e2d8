"""
`cocycle` command: check abelian 3-cocycles and solve for one from a quadratic form.
"""
from __future__ import annotations

import argparse
from typing import Any, Callable, Dict

from algebra.cohomology import AbelianCocycle3, cocycle_from_qform, em_qform, find_cocycle_violation
from algebra.qforms import QuadraticForm, WeakQuadraticForm
from commands.base_command import BaseCommand, CommandResult


class CocycleCommand(BaseCommand):
    """Abelian group cohomology in degree three."""

    @property
    def name(self) -> str:
        return "cocycle"

    @property
    def description(self) -> str:
        return "Check abelian 3-cocycles and build one from a quadratic form"

    @property
    def actions(self) -> Dict[str, Callable[[argparse.Namespace], CommandResult]]:
        return {"check": self._check, "from-qform": self._from_qform}

    def register_arguments(self, subparsers: argparse._SubParsersAction) -> None:
        check_parser = subparsers.add_parser("check", help="Closure, normalization and both hexagons")
        check_parser.add_argument("--cocycle", required=True, help="Cocycle JSON (inline or file path)")

        solve_parser = subparsers.add_parser("from-qform", help="A cocycle whose trace is the given form")
        solve_parser.add_argument("--form", required=True, help="Quadratic form JSON (inline or file path)")

    def _check(self, args: argparse.Namespace) -> CommandResult:
        cocycle = AbelianCocycle3.from_json(self.load(args.cocycle, "cocycle"), "cocycle")
        violation = find_cocycle_violation(cocycle.psi, cocycle.omega)
        payload: Dict[str, Any] = {
            "abelian_3cocycle": violation is None,
            "counterexample": violation,
        }
        if violation is None:
            payload["qform"] = em_qform(cocycle).to_json()
        return CommandResult(payload, passed=violation is None)

    def _from_qform(self, args: argparse.Namespace) -> CommandResult:
        q = WeakQuadraticForm.from_json(self.load(args.form, "form"), "form")
        cocycle = cocycle_from_qform(q, self.config)
        checks = {
            "abelian_3cocycle": find_cocycle_violation(cocycle.psi, cocycle.omega) is None,
            "trace_matches": em_qform(cocycle) == QuadraticForm(q.group, q.values),
        }
        return CommandResult({
            "form": q.to_json(),
            "cocycle": cocycle.to_json(),
            "checks": checks,
        }, passed=all(checks.values()))
