"""
Skeletal weak ribbon structures on G-graded vector spaces.

On the skeleton {k_g} a structure is four pieces of scalar data: the
associator psi, the braiding omega, the twist theta and the dualizing
degree g0. This module checks the coherence axioms on those tables,
builds structures from representable form data (q, eta, g0), extracts
the data back, and decides equivalence of structures by searching
Aut(G) for a braided monoidal functor k_g -> k_{f(g)} with structure
constants kappa.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from algebra.cohomology import (
    AbelianCocycle3, Cochain, ab_coboundary, coboundary, cocycle_from_qform, cohomologous_witness,
    commutator, em_qform, find_closure_violation, find_hexagon_violation,
)
from algebra.exact import RootOfUnity
from algebra.groups import (
    FinAbGroup, GroupAutomorphism, GroupElement, automorphisms, character_from_values,
    has_square_roots, require_same_group, square_roots,
)
from algebra.qforms import (
    Orbit, WeakQuadraticForm, WRQFDatum, check_wrqf, classify_wrqf, enumerate_wrqf,
    find_symmetry_violation,
)
from core.config import StarautConfig, resolve_config
from core.exceptions import InvariantViolationError, MalformedInputError, SearchFailureError

logger = logging.getLogger(__name__)

AXIOMS = ("pentagon", "triangle", "hexagons", "twist", "ribbon")


@dataclass(frozen=True)
class SkeletalStructure:
    """(psi, omega, theta, g0) on the simple objects k_g."""

    group: FinAbGroup
    psi: Cochain
    omega: Cochain
    theta: WeakQuadraticForm
    g0: GroupElement

    @property
    def cocycle(self) -> AbelianCocycle3:
        return AbelianCocycle3(self.group, self.psi, self.omega)

    def to_json(self) -> Dict[str, Any]:
        return {
            "group": self.group.to_json(),
            "psi": self.psi.to_json(),
            "omega": self.omega.to_json(),
            "theta": [[list(g), v.to_json()] for g, v in zip(self.group.elements, self.theta.values)],
            "g0": list(self.g0),
        }

    @classmethod
    def from_json(cls, data: Any, field: str = "structure") -> SkeletalStructure:
        if not isinstance(data, dict) or not {"group", "psi", "omega", "theta", "g0"} <= set(data):
            raise MalformedInputError(field, "expected {\"group\", \"psi\", \"omega\", \"theta\", \"g0\"}")
        cocycle = AbelianCocycle3.from_json(
            {"group": data["group"], "psi": data["psi"], "omega": data["omega"]}, field)
        group = cocycle.group
        theta = WeakQuadraticForm.from_json(
            {"group": data["group"], "values": data["theta"]}, f"{field}.theta", validate=False)
        return cls(group, cocycle.psi, cocycle.omega, theta, group.element_from_json(data["g0"], f"{field}.g0"))


# Axiom checks

def find_triangle_violation(psi: Cochain) -> Optional[Dict[str, Any]]:
    group = psi.group
    size = group.order
    for a in range(size):
        for b in range(size):
            if not psi.at(a, 0, b).is_identity():
                return {"condition": "psi(g, 0, h) = 1", "g": list(group.elements[a]), "h": list(group.elements[b])}
    return None


def find_twist_violation(omega: Cochain, theta: WeakQuadraticForm) -> Optional[Dict[str, Any]]:
    require_same_group("check_twist", omega.group, theta.group)
    group = omega.group
    add = group.addition_table
    t = theta.values
    for a in range(group.order):
        for b in range(group.order):
            expected = omega.at(b, a) * omega.at(a, b) * t[a] * t[b]
            if t[add[a][b]] != expected:
                return {
                    "condition": "theta(g + h) = omega(h, g) omega(g, h) theta(g) theta(h)",
                    "g": list(group.elements[a]), "h": list(group.elements[b]),
                }
    return None


def find_ribbon_violation(theta: WeakQuadraticForm, g0: GroupElement) -> Optional[Dict[str, Any]]:
    violation = find_symmetry_violation(theta, g0)
    if violation is None:
        return None
    return {"condition": "theta(-g + g0) = theta(g)", "g0": list(g0), **violation}


def check_pentagon(psi: Cochain) -> bool:
    return find_closure_violation(psi) is None


def check_triangle(psi: Cochain) -> bool:
    return find_triangle_violation(psi) is None


def check_hexagons(psi: Cochain, omega: Cochain) -> bool:
    return find_hexagon_violation(psi, omega) is None


def check_twist(omega: Cochain, theta: WeakQuadraticForm) -> bool:
    return find_twist_violation(omega, theta) is None


def check_ribbon_wrt(theta: WeakQuadraticForm, g0: GroupElement) -> bool:
    return find_ribbon_violation(theta, g0) is None


def structure_violations(structure: SkeletalStructure) -> Dict[str, Optional[Dict[str, Any]]]:
    """First counterexample per axiom (None where the axiom holds)."""
    return {
        "pentagon": find_closure_violation(structure.psi),
        "triangle": find_triangle_violation(structure.psi),
        "hexagons": find_hexagon_violation(structure.psi, structure.omega),
        "twist": find_twist_violation(structure.omega, structure.theta),
        "ribbon": find_ribbon_violation(structure.theta, structure.g0),
    }


def check_all(structure: SkeletalStructure) -> Dict[str, bool]:
    return {name: violation is None for name, violation in structure_violations(structure).items()}


# Construction and extraction

def build_from_wrqf(datum: WRQFDatum, config: Optional[StarautConfig] = None) -> SkeletalStructure:
    """
    (q, eta, g0) -> (psi_q, omega_q, q * eta, -2 g0).

    Raises:
        InvariantViolationError: If the datum is not representable
        SearchFailureError: If the built structure fails an axiom
    """
    check_wrqf(datum)
    group = datum.q.group
    cocycle = cocycle_from_qform(datum.q, config)
    structure = SkeletalStructure(
        group, cocycle.psi, cocycle.omega, datum.q * datum.eta, group.scale(-2, datum.g0)
    )
    violations = {k: v for k, v in structure_violations(structure).items() if v is not None}
    if violations:
        raise SearchFailureError("build_from_wrqf", "built structure fails coherence", violations)
    return structure


def extract_wrqf(structure: SkeletalStructure) -> WRQFDatum:
    """
    Recover (q, eta, g0) with q = omega(g, g), eta = theta / q and -2 g0 = s.g0.

    The square roots of s.g0 are tried in lexicographic order; for odd-order
    groups there is exactly one.

    Raises:
        InvariantViolationError: If theta / q is not a character or no
            square root of s.g0 gives a representable datum
    """
    group = structure.group
    q = em_qform(structure.cocycle)
    eta = character_from_values(group, (structure.theta / q).values)
    if eta is None:
        raise InvariantViolationError("theta / q is a character", {"theta": structure.to_json()["theta"]})
    roots = square_roots(group, structure.g0)
    if not roots:
        raise InvariantViolationError("g0 has a square root", {"g0": list(structure.g0)})
    for root in roots:
        datum = WRQFDatum(q, eta, group.neg(root))
        try:
            check_wrqf(datum)
        except InvariantViolationError:
            continue
        return datum
    raise InvariantViolationError("eta(g) = beta_q(g, -sqrt(g0)) for some square root",
                                  {"g0": list(structure.g0), "roots": [list(r) for r in roots]})


def classical_ribbon_check(structure: SkeletalStructure) -> bool:
    """With g0 = 0 the extracted character takes values in {+1, -1}."""
    if structure.g0 != structure.group.zero:
        raise InvariantViolationError("classical case needs g0 = 0", {"g0": list(structure.g0)})
    eta = extract_wrqf(structure).eta
    return all((v ** 2).is_identity() for v in eta.values)


def enumerate_structures(group: FinAbGroup, config: Optional[StarautConfig] = None) -> List[SkeletalStructure]:
    return [build_from_wrqf(datum, config) for datum in enumerate_wrqf(group, config)]


# Equivalence

def pushforward_structure(structure: SkeletalStructure, f: GroupAutomorphism) -> SkeletalStructure:
    """The structure s' with s' = f_*(s), so that f itself is an equivalence s -> s'."""
    f_inv = f.inverse()
    return SkeletalStructure(
        structure.group,
        structure.psi.pullback(f_inv),
        structure.omega.pullback(f_inv),
        WeakQuadraticForm(structure.group, [structure.theta.values[i] for i in f_inv.index_map]),
        f(structure.g0),
    )


def twist_structure(structure: SkeletalStructure, kappa: Cochain) -> SkeletalStructure:
    """(psi * d kappa, omega * kappa_comm, theta, g0)."""
    change = ab_coboundary(kappa)
    return SkeletalStructure(
        structure.group, structure.psi * change.psi, structure.omega * change.omega,
        structure.theta, structure.g0,
    )


def verify_monoidal_witness(s1: SkeletalStructure, s2: SkeletalStructure,
                            f: GroupAutomorphism, kappa: Cochain) -> bool:
    """
    Re-check a functor k_g -> k_{f(g)} with structure constants kappa.

    Monoidal: psi_1 = f*psi_2 * d kappa. Braided: omega_1 = f*omega_2 * kappa_comm.
    Ribbon: theta_1(g) = theta_2(f(g)) and f(g0_1) = g0_2.
    """
    require_same_group("verify_monoidal_witness", s1.group, s2.group)
    if not kappa.is_normalized():
        return False
    if s1.psi != s2.psi.pullback(f) * coboundary(kappa):
        return False
    if s1.omega != s2.omega.pullback(f) * commutator(kappa):
        return False
    if any(s1.theta.values[i] != s2.theta.values[j] for i, j in enumerate(f.index_map)):
        return False
    return f(s1.g0) == s2.g0


def equivalent_structures(s1: SkeletalStructure, s2: SkeletalStructure,
                          config: Optional[StarautConfig] = None
                          ) -> Optional[Tuple[GroupAutomorphism, Cochain]]:
    """
    Search for a braided ribbon equivalence s1 -> s2.

    Automorphisms are tried in lexicographic order of their generator
    images; the first one whose twist and dualizing data match and for
    which a cohomologous witness exists wins.

    Returns:
        (f, kappa) or None

    Raises:
        BoundExceededError: If |G| exceeds max_equivalence_order
    """
    config = resolve_config(config)
    require_same_group("equivalent_structures", s1.group, s2.group)
    group = s1.group
    config.require('max_equivalence_order', group.order)
    for f in automorphisms(group, config):
        if f(s1.g0) != s2.g0:
            continue
        if any(s1.theta.values[i] != s2.theta.values[j] for i, j in enumerate(f.index_map)):
            continue
        kappa = cohomologous_witness(s1.cocycle, s2.cocycle.pullback(f), config)
        if kappa is None:
            continue
        if not verify_monoidal_witness(s1, s2, f, kappa):
            raise SearchFailureError("equivalent_structures", "witness failed re-verification",
                                     {"f": f.to_json()})
        logger.debug(f"Structures on {group} are equivalent via {f.to_json()}")
        return f, kappa
    return None


def classify_structures(structures: Sequence[SkeletalStructure],
                        config: Optional[StarautConfig] = None) -> List[Orbit]:
    """Group structures into equivalence classes; the first member of each class represents it."""
    classes: List[List[SkeletalStructure]] = []
    for structure in structures:
        for members in classes:
            if equivalent_structures(structure, members[0], config) is not None:
                members.append(structure)
                break
        else:
            classes.append([structure])
    return [Orbit(members[0], tuple(members)) for members in classes]


def ribbon_class_report(group: FinAbGroup, config: Optional[StarautConfig] = None) -> Dict[str, Any]:
    """
    Build every structure from WRQF data and compare both sides.

    Class counts and the extract-after-build round trip are only computed
    for odd-order groups within max_equivalence_order.
    """
    config = resolve_config(config)
    data = enumerate_wrqf(group, config)
    structures = [build_from_wrqf(datum, config) for datum in data]
    report: Dict[str, Any] = {
        "group": group.to_json(),
        "structures": len(structures),
        "all_axioms": all(all(check_all(s).values()) for s in structures),
        "wrqf_orbits": None,
        "structure_classes": None,
        "round_trip": None,
    }
    if has_square_roots(group) and group.order <= config.max_equivalence_order:
        report["wrqf_orbits"] = len(classify_wrqf(data, config))
        report["structure_classes"] = len(classify_structures(structures, config))
        report["round_trip"] = all(extract_wrqf(s) == d for s, d in zip(structures, data))
    logger.debug(f"Ribbon class report on {group}: {report}")
    return report
