"""
Normalized cochains, abelian 3-cocycles and the Eilenberg-MacLane map.

A cochain of arity k is a flat table over G^k indexed in lexicographic
order of element indices. Abelian 3-cocycles are pairs (psi, omega) with
d psi = 1 and the two hexagon equations; em_qform sends them to the
quadratic form g -> omega(g, g). The inverse direction and the
cohomologous-witness search are linear congruence problems over Z/D,
solved exactly with algebra.exact.solve_mod.
"""
from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from algebra.exact import ONE, RootOfUnity, solve_mod
from algebra.groups import FinAbGroup, GroupAutomorphism, GroupElement, require_same_group
from algebra.qforms import QuadraticForm, WeakQuadraticForm, find_bilinearity_violation, find_symmetry_violation
from core.config import StarautConfig, resolve_config
from core.exceptions import (
    InvalidFormError, InvariantViolationError, MalformedInputError, SearchFailureError, UsageError,
)

logger = logging.getLogger(__name__)


def _flat_index(indices: Sequence[int], size: int) -> int:
    position = 0
    for i in indices:
        position = position * size + i
    return position


@dataclass(frozen=True)
class Cochain:
    """Function G^arity -> roots of unity, stored as a flat lexicographic table."""

    group: FinAbGroup
    arity: int
    table: Tuple[RootOfUnity, ...]

    def __post_init__(self):
        if len(self.table) != self.group.order ** self.arity:
            raise MalformedInputError("cochain", f"expected {self.group.order ** self.arity} entries")

    @classmethod
    def trivial(cls, group: FinAbGroup, arity: int) -> Cochain:
        return cls(group, arity, (ONE,) * group.order ** arity)

    @classmethod
    def from_function(cls, group: FinAbGroup, arity: int,
                      fn: Callable[..., RootOfUnity]) -> Cochain:
        return cls(group, arity, tuple(
            fn(*args) for args in itertools.product(group.elements, repeat=arity)
        ))

    def __call__(self, *args: GroupElement) -> RootOfUnity:
        return self.table[_flat_index([self.group.index(g) for g in args], self.group.order)]

    def at(self, *indices: int) -> RootOfUnity:
        return self.table[_flat_index(indices, self.group.order)]

    def is_normalized(self) -> bool:
        for indices in itertools.product(range(self.group.order), repeat=self.arity):
            if 0 in indices and not self.at(*indices).is_identity():
                return False
        return True

    def is_trivial(self) -> bool:
        return all(v.is_identity() for v in self.table)

    def _check_compatible(self, other: Cochain, operation: str) -> None:
        require_same_group(operation, self.group, other.group)
        if self.arity != other.arity:
            raise UsageError(f"{operation}: arity {self.arity} vs {other.arity}")

    def __mul__(self, other: Cochain) -> Cochain:
        self._check_compatible(other, "cochain product")
        return Cochain(self.group, self.arity, tuple(a * b for a, b in zip(self.table, other.table)))

    def __truediv__(self, other: Cochain) -> Cochain:
        self._check_compatible(other, "cochain quotient")
        return Cochain(self.group, self.arity, tuple(a / b for a, b in zip(self.table, other.table)))

    def inverse(self) -> Cochain:
        return Cochain(self.group, self.arity, tuple(v.inverse() for v in self.table))

    def pullback(self, f: GroupAutomorphism) -> Cochain:
        """(f*c)(g_1, ..., g_k) = c(f(g_1), ..., f(g_k))."""
        require_same_group("cochain pullback", self.group, f.group)
        index_map = f.index_map
        size = self.group.order
        return Cochain(self.group, self.arity, tuple(
            self.table[_flat_index([index_map[i] for i in indices], size)]
            for indices in itertools.product(range(size), repeat=self.arity)
        ))

    def to_json(self) -> List[List[Any]]:
        return [
            [list(g) for g in args] + [value.to_json()]
            for args, value in zip(itertools.product(self.group.elements, repeat=self.arity), self.table)
        ]

    @classmethod
    def from_json(cls, group: FinAbGroup, arity: int, data: Any, field: str = "cochain") -> Cochain:
        if not isinstance(data, list):
            raise MalformedInputError(field, f"expected a list of [g_1, ..., g_{arity}, root] rows")
        values: Dict[Tuple[GroupElement, ...], RootOfUnity] = {}
        for i, row in enumerate(data):
            if not isinstance(row, list) or len(row) != arity + 1:
                raise MalformedInputError(f"{field}[{i}]", f"expected {arity} elements and a root")
            args = tuple(group.element_from_json(g, f"{field}[{i}][{j}]") for j, g in enumerate(row[:-1]))
            if args in values:
                raise MalformedInputError(f"{field}[{i}]", "duplicate entry")
            values[args] = RootOfUnity.from_json(row[-1], f"{field}[{i}][{arity}]")
        table = []
        for args in itertools.product(group.elements, repeat=arity):
            if args not in values:
                raise MalformedInputError(field, f"table is not total, missing {[list(g) for g in args]}")
            table.append(values[args])
        return cls(group, arity, tuple(table))


@dataclass(frozen=True)
class AbelianCocycle3:
    """Pair (psi, omega) of normalized 3- and 2-cochains."""

    group: FinAbGroup
    psi: Cochain
    omega: Cochain

    @classmethod
    def trivial(cls, group: FinAbGroup) -> AbelianCocycle3:
        return cls(group, Cochain.trivial(group, 3), Cochain.trivial(group, 2))

    def __mul__(self, other: AbelianCocycle3) -> AbelianCocycle3:
        require_same_group("cocycle product", self.group, other.group)
        return AbelianCocycle3(self.group, self.psi * other.psi, self.omega * other.omega)

    def pullback(self, f: GroupAutomorphism) -> AbelianCocycle3:
        return AbelianCocycle3(self.group, self.psi.pullback(f), self.omega.pullback(f))

    def to_json(self) -> Dict[str, Any]:
        return {"group": self.group.to_json(), "psi": self.psi.to_json(), "omega": self.omega.to_json()}

    @classmethod
    def from_json(cls, data: Any, field: str = "cocycle") -> AbelianCocycle3:
        if not isinstance(data, dict) or not {"group", "psi", "omega"} <= set(data):
            raise MalformedInputError(field, "expected {\"group\": ..., \"psi\": [...], \"omega\": [...]}")
        group = FinAbGroup.from_json(data["group"], f"{field}.group")
        return cls(
            group,
            Cochain.from_json(group, 3, data["psi"], f"{field}.psi"),
            Cochain.from_json(group, 2, data["omega"], f"{field}.omega"),
        )


def coboundary(kappa: Cochain) -> Cochain:
    """
    d kappa(g_1, ..., g_{k+1}) = kappa(g_2, ..., g_{k+1})
        * prod_{i=1..k} kappa(..., g_i + g_{i+1}, ...)^{(-1)^i}
        * kappa(g_1, ..., g_k)^{(-1)^{k+1}}.
    """
    k = kappa.arity
    if not 1 <= k <= 3:
        raise UsageError(f"coboundary is defined here for arity 1..3, got {k}")
    group = kappa.group
    size = group.order
    add = group.addition_table
    table = kappa.table
    result = []
    for args in itertools.product(range(size), repeat=k + 1):
        exponent = table[_flat_index(args[1:], size)].exponent
        for i in range(k):
            merged = args[:i] + (add[args[i]][args[i + 1]],) + args[i + 2:]
            term = table[_flat_index(merged, size)].exponent
            exponent += -term if i % 2 == 0 else term
        last = table[_flat_index(args[:k], size)].exponent
        exponent += last if k % 2 else -last
        result.append(RootOfUnity(exponent))
    return Cochain(group, k + 1, tuple(result))


def commutator(kappa: Cochain) -> Cochain:
    """kappa_comm(g, h) = kappa(g, h) kappa(h, g)^-1."""
    if kappa.arity != 2:
        raise UsageError("commutator needs a 2-cochain")
    size = kappa.group.order
    return Cochain(kappa.group, 2, tuple(
        kappa.at(i, j) / kappa.at(j, i) for i in range(size) for j in range(size)
    ))


def ab_coboundary(kappa: Cochain) -> AbelianCocycle3:
    """d_ab(kappa) = (d kappa, kappa_comm)."""
    return AbelianCocycle3(kappa.group, coboundary(kappa), commutator(kappa))


def _integer_tables(*cochains: Cochain) -> Tuple[int, List[List[int]]]:
    n = math.lcm(1, *(v.exponent.denominator for c in cochains for v in c.table))
    return n, [[int(v.exponent * n) for v in c.table] for c in cochains]


def _require_shapes(psi: Cochain, omega: Optional[Cochain] = None) -> None:
    if psi.arity != 3 or (omega is not None and omega.arity != 2):
        raise UsageError("expected a 3-cochain psi and a 2-cochain omega")
    if omega is not None:
        require_same_group("abelian cocycle", psi.group, omega.group)


def find_closure_violation(psi: Cochain) -> Optional[Dict[str, Any]]:
    """First quadruple with d psi != 1, or None."""
    _require_shapes(psi)
    group = psi.group
    size = group.order
    add = group.addition_table
    n, (p,) = _integer_tables(psi)

    def P(a: int, b: int, c: int) -> int:
        return p[(a * size + b) * size + c]

    for a, b, c, d in itertools.product(range(size), repeat=4):
        value = P(b, c, d) - P(add[a][b], c, d) + P(a, add[b][c], d) - P(a, b, add[c][d]) + P(a, b, c)
        if value % n:
            return {"condition": "d psi = 1", "args": [list(group.elements[x]) for x in (a, b, c, d)]}
    return None


def find_hexagon_violation(psi: Cochain, omega: Cochain) -> Optional[Dict[str, Any]]:
    """First triple failing either hexagon equation, or None."""
    _require_shapes(psi, omega)
    group = psi.group
    elements = group.elements
    size = group.order
    add = group.addition_table
    n, (p, w) = _integer_tables(psi, omega)

    def P(a: int, b: int, c: int) -> int:
        return p[(a * size + b) * size + c]

    def W(a: int, b: int) -> int:
        return w[a * size + b]

    for a, b, c in itertools.product(range(size), repeat=3):
        lhs = -P(b, c, a) + W(a, add[b][c]) - P(a, b, c)
        rhs = W(a, c) - P(b, a, c) + W(a, b)
        if (lhs - rhs) % n:
            return {"condition": "first hexagon", "args": [list(elements[x]) for x in (a, b, c)]}
        lhs = P(c, a, b) + W(add[a][b], c) + P(a, b, c)
        rhs = W(a, c) + P(a, c, b) + W(b, c)
        if (lhs - rhs) % n:
            return {"condition": "second hexagon", "args": [list(elements[x]) for x in (a, b, c)]}
    return None


def find_cocycle_violation(psi: Cochain, omega: Cochain) -> Optional[Dict[str, Any]]:
    """
    First failing condition of an abelian 3-cocycle, or None.

    Checks normalization, d psi = 1 on all quadruples and both hexagon
    equations on all triples.
    """
    _require_shapes(psi, omega)
    for cochain, name in ((psi, "psi"), (omega, "omega")):
        if not cochain.is_normalized():
            return {"condition": f"{name} normalized"}
    return find_closure_violation(psi) or find_hexagon_violation(psi, omega)


def is_abelian_3cocycle(psi: Cochain, omega: Cochain) -> bool:
    return find_cocycle_violation(psi, omega) is None


def em_qform(cocycle: AbelianCocycle3) -> QuadraticForm:
    """
    q(g) = omega(g, g), with beta_q(g, h) = omega(g, h) omega(h, g) checked pointwise.

    Raises:
        InvalidFormError: If the diagonal is not a quadratic form
        InvariantViolationError: If beta_q differs from the symmetrized omega
    """
    group = cocycle.group
    size = group.order
    omega = cocycle.omega
    q = WeakQuadraticForm(group, [omega.at(i, i) for i in range(size)])
    violation = find_bilinearity_violation(group, q.values) or find_symmetry_violation(q, group.zero)
    if violation is not None:
        raise InvalidFormError("omega(g, g) is a quadratic form", violation)
    add = group.addition_table
    for i, j in itertools.product(range(size), repeat=2):
        beta = q.values[add[i][j]] / q.values[i] / q.values[j]
        if beta != omega.at(i, j) * omega.at(j, i):
            raise InvariantViolationError("beta_q(g, h) = omega(g, h) omega(h, g)", {
                "g": list(group.elements[i]), "h": list(group.elements[j]),
            })
    return QuadraticForm(group, q.values)


def em_homomorphism_check(c1: AbelianCocycle3, c2: AbelianCocycle3) -> bool:
    """em_qform(c1 * c2) = em_qform(c1) * em_qform(c2)."""
    return em_qform(c1 * c2) == em_qform(c1) * em_qform(c2)


# Solving for cocycles

def _search_modulus(group: FinAbGroup, config: StarautConfig, *values: RootOfUnity) -> int:
    return math.lcm(config.denominator_factor * group.exponent ** 2,
                    *(v.exponent.denominator for v in values))


@lru_cache(maxsize=256)
def _cyclic_cocycle(n: int, q_numerators: Tuple[int, ...], modulus: int
                    ) -> Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """
    Normalized (psi, omega) on Z_n with omega(k, k) = q(k), as numerators over modulus.

    Unknowns are the entries with all arguments non-zero; the equations are
    d psi = 1, both hexagons and the diagonal condition.
    """
    nonzero = range(1, n)
    psi_index = {args: i for i, args in enumerate(itertools.product(nonzero, repeat=3))}
    omega_offset = len(psi_index)
    omega_index = {args: omega_offset + i for i, args in enumerate(itertools.product(nonzero, repeat=2))}
    num_vars = omega_offset + len(omega_index)

    rows: List[Dict[int, int]] = []
    rhs: List[int] = []

    def emit(terms: Sequence[Tuple[int, Dict, Tuple[int, ...]]], b: int = 0) -> None:
        row: Dict[int, int] = {}
        for sign, index, args in terms:
            column = index.get(args)
            if column is not None:
                row[column] = row.get(column, 0) + sign
        row = {c: a for c, a in row.items() if a}
        if row or b % modulus:
            rows.append(row)
            rhs.append(b)

    def s(a: int, b: int) -> int:
        return (a + b) % n

    for a, b, c, d in itertools.product(range(n), repeat=4):
        emit([(1, psi_index, (b, c, d)), (-1, psi_index, (s(a, b), c, d)),
              (1, psi_index, (a, s(b, c), d)), (-1, psi_index, (a, b, s(c, d))),
              (1, psi_index, (a, b, c))])
    for a, b, c in itertools.product(range(n), repeat=3):
        emit([(-1, psi_index, (b, c, a)), (1, omega_index, (a, s(b, c))), (-1, psi_index, (a, b, c)),
              (-1, omega_index, (a, c)), (1, psi_index, (b, a, c)), (-1, omega_index, (a, b))])
        emit([(1, psi_index, (c, a, b)), (1, omega_index, (s(a, b), c)), (1, psi_index, (a, b, c)),
              (-1, omega_index, (a, c)), (-1, psi_index, (a, c, b)), (-1, omega_index, (b, c))])
    for k in nonzero:
        emit([(1, omega_index, (k, k))], q_numerators[k])

    solution = solve_mod(rows, rhs, modulus, num_vars)
    logger.debug(f"Cyclic cocycle system on Z{n}: {num_vars} unknowns, {len(rows)} equations, "
                 f"modulus {modulus}, solved={solution is not None}")
    if solution is None:
        return None

    psi = tuple(
        solution[psi_index[args]] if 0 not in args else 0
        for args in itertools.product(range(n), repeat=3)
    )
    omega = tuple(
        solution[omega_index[args]] if 0 not in args else 0
        for args in itertools.product(range(n), repeat=2)
    )
    return psi, omega


def cocycle_from_qform(q: WeakQuadraticForm, config: Optional[StarautConfig] = None) -> AbelianCocycle3:
    """
    An abelian 3-cocycle whose Eilenberg-MacLane form is q.

    Each cyclic factor is solved as a congruence system over Z/D with
    D = denominator_factor * n^2; the factor solutions are pulled back along
    the projections and multiplied with the bilinear cross term
    omega(g, h) = prod_{i<j} beta_q(e_i, e_j)^{g_i h_j}.

    Args:
        q: A quadratic form
        config: Bounds (max_enumeration_order, denominator_factor)

    Returns:
        A certified cocycle (psi, omega) with em_qform equal to q

    Raises:
        InvalidFormError: If q is not a quadratic form
        BoundExceededError: If |G| exceeds max_enumeration_order
        SearchFailureError: If no cocycle is found within the denominator bound
    """
    config = resolve_config(config)
    group = q.group
    config.require('max_enumeration_order', group.order)
    violation = find_bilinearity_violation(group, q.values) or find_symmetry_violation(q, group.zero)
    if violation is not None:
        raise InvalidFormError("q is a quadratic form", violation)

    factor_tables = []
    for i, n in enumerate(group.cyclic_orders):
        restricted = [q(tuple(k if j == i else 0 for j in range(group.rank))) for k in range(n)]
        modulus = math.lcm(config.denominator_factor * n * n, *(v.exponent.denominator for v in restricted))
        numerators = tuple(int(v.exponent * modulus) for v in restricted)
        solved = _cyclic_cocycle(n, numerators, modulus)
        if solved is None:
            raise SearchFailureError("cocycle_from_qform", f"no cocycle on factor Z{n} with denominator {modulus}")
        factor_tables.append((modulus, solved))

    beta = q.beta
    cross = {
        (i, j): beta(group.generators[i], group.generators[j]).exponent
        for i, j in itertools.combinations(range(group.rank), 2)
    }
    orders = group.cyclic_orders

    def psi_value(g: GroupElement, h: GroupElement, k: GroupElement) -> RootOfUnity:
        exponent = Fraction(0)
        for i, (modulus, (psi_i, _)) in enumerate(factor_tables):
            n = orders[i]
            exponent += Fraction(psi_i[(g[i] * n + h[i]) * n + k[i]], modulus)
        return RootOfUnity(exponent)

    def omega_value(g: GroupElement, h: GroupElement) -> RootOfUnity:
        exponent = Fraction(0)
        for i, (modulus, (_, omega_i)) in enumerate(factor_tables):
            exponent += Fraction(omega_i[g[i] * orders[i] + h[i]], modulus)
        for (i, j), beta_ij in cross.items():
            exponent += g[i] * h[j] * beta_ij
        return RootOfUnity(exponent)

    cocycle = AbelianCocycle3(
        group, Cochain.from_function(group, 3, psi_value), Cochain.from_function(group, 2, omega_value)
    )
    violation = find_cocycle_violation(cocycle.psi, cocycle.omega)
    if violation is not None:
        raise SearchFailureError("cocycle_from_qform", "assembled tables are not a cocycle", violation)
    if em_qform(cocycle) != q:
        raise SearchFailureError("cocycle_from_qform", "Eilenberg-MacLane round trip failed")
    logger.debug(f"Found abelian 3-cocycle for a quadratic form on {group}")
    return cocycle


def cohomologous_witness(c1: AbelianCocycle3, c2: AbelianCocycle3,
                         config: Optional[StarautConfig] = None) -> Optional[Cochain]:
    """
    A normalized 2-cochain kappa with c1 = c2 * d_ab(kappa), if one exists.

    Solves d kappa = psi_1 / psi_2 and kappa_comm = omega_1 / omega_2 over
    Z/D, D = lcm(denominator_factor * exp(G)^2, input denominators). The
    witness returned is the canonical solution of that system (free
    unknowns set to zero).

    Raises:
        GroupMismatchError: If the cocycles live on different groups
        BoundExceededError: If |G| exceeds max_witness_order
    """
    config = resolve_config(config)
    require_same_group("cohomologous_witness", c1.group, c2.group)
    group = c1.group
    config.require('max_witness_order', group.order)
    size = group.order
    add = group.addition_table

    psi_diff = c1.psi / c2.psi
    omega_diff = c1.omega / c2.omega
    modulus = _search_modulus(group, config, *psi_diff.table, *omega_diff.table)

    unknown = {(a, b): (a - 1) * (size - 1) + (b - 1) for a in range(1, size) for b in range(1, size)}
    rows: List[Dict[int, int]] = []
    rhs: List[int] = []

    def emit(terms: Sequence[Tuple[int, Tuple[int, int]]], target: RootOfUnity) -> None:
        row: Dict[int, int] = {}
        for sign, args in terms:
            column = unknown.get(args)
            if column is not None:
                row[column] = row.get(column, 0) + sign
        row = {col: coeff for col, coeff in row.items() if coeff}
        b = int(target.exponent * modulus)
        if row or b:
            rows.append(row)
            rhs.append(b)

    for a, b, c in itertools.product(range(size), repeat=3):
        emit([(1, (b, c)), (-1, (add[a][b], c)), (1, (a, add[b][c])), (-1, (a, b))],
             psi_diff.at(a, b, c))
    for a, b in itertools.product(range(size), repeat=2):
        emit([(1, (a, b)), (-1, (b, a))], omega_diff.at(a, b))

    solution = solve_mod(rows, rhs, modulus, len(unknown))
    if solution is None:
        logger.debug(f"No cohomologous witness on {group} with denominator {modulus}")
        return None

    def kappa_value(g: GroupElement, h: GroupElement) -> RootOfUnity:
        a, b = group.index(g), group.index(h)
        if a == 0 or b == 0:
            return ONE
        return RootOfUnity(Fraction(solution[unknown[(a, b)]], modulus))

    kappa = Cochain.from_function(group, 2, kappa_value)
    if c2 * ab_coboundary(kappa) != c1:
        raise SearchFailureError("cohomologous_witness", "witness fails c1 = c2 * d_ab(kappa)")
    return kappa
