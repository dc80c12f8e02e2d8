"""
Weak quadratic forms on finite abelian groups.

A weak quadratic form is a total value table q: G -> roots of unity whose
associated map beta_q(g, h) = q(g + h) q(g)^-1 q(h)^-1 is a bihomomorphism;
a quadratic form is additionally symmetric, q(g) = q(-g). Tables are the
source of truth; generator data is only used to enumerate them.

This module also houses the symmetric and representable variants (pairs
(q, g0) and triples (q, eta, g0)), the canonical decomposition q = q~ * eta
into a quadratic form and a character, and classification under pullback
along Aut(G).
"""
from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Callable, Dict, Hashable, List, Optional, Sequence, Tuple

from algebra.exact import ONE, RootOfUnity
from algebra.groups import (
    Character, FinAbGroup, GroupAutomorphism, GroupElement, automorphisms,
    character_from_values, characters, has_square_roots, require_same_group, square_root,
)
from core.config import StarautConfig, resolve_config
from core.exceptions import (
    InvalidFormError, InvariantViolationError, MalformedInputError, SearchFailureError,
)

logger = logging.getLogger(__name__)


def _integer_exponents(values: Sequence[RootOfUnity]) -> Tuple[int, List[int]]:
    """Common denominator N and the exponents scaled to integers mod N."""
    n = math.lcm(1, *(v.exponent.denominator for v in values))
    return n, [int(v.exponent * n) for v in values]


def _check_length(group: FinAbGroup, values: Sequence[RootOfUnity]) -> None:
    if len(values) != group.order:
        raise MalformedInputError("values", f"expected {group.order} values for {group}, got {len(values)}")


class WeakQuadraticForm:
    """Value table of a weak quadratic form, indexed like group.elements."""

    def __init__(self, group: FinAbGroup, values: Sequence[RootOfUnity]):
        _check_length(group, values)
        self.group = group
        self.values: Tuple[RootOfUnity, ...] = tuple(values)

    @classmethod
    def from_values(cls, group: FinAbGroup, values: Sequence[RootOfUnity]) -> WeakQuadraticForm:
        """Build a form, raising InvalidFormError unless beta_q is bilinear."""
        violation = find_bilinearity_violation(group, values)
        if violation is not None:
            raise InvalidFormError("beta_q is a bihomomorphism", violation)
        return cls(group, values)

    @classmethod
    def from_function(cls, group: FinAbGroup, fn: Callable[[GroupElement], RootOfUnity]) -> WeakQuadraticForm:
        return cls(group, [fn(g) for g in group.elements])

    @classmethod
    def constant_one(cls, group: FinAbGroup) -> WeakQuadraticForm:
        return cls(group, [ONE] * group.order)

    def __call__(self, g: GroupElement) -> RootOfUnity:
        return self.values[self.group.index(g)]

    @property
    def key(self) -> Tuple[RootOfUnity, ...]:
        """Lexicographic sort key (tables compare value by value)."""
        return self.values

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeakQuadraticForm):
            return NotImplemented
        return self.group == other.group and self.values == other.values

    def __hash__(self) -> int:
        return hash((self.group, self.values))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.group}, {list(self.values)})"

    @cached_property
    def beta(self) -> BiHom:
        return assoc_bihom(self)

    def __mul__(self, other: Any) -> WeakQuadraticForm:
        if isinstance(other, Character):
            require_same_group("form times character", self.group, other.group)
            factor = other.values
        elif isinstance(other, WeakQuadraticForm):
            require_same_group("form product", self.group, other.group)
            factor = other.values
        else:
            return NotImplemented
        return WeakQuadraticForm(self.group, [a * b for a, b in zip(self.values, factor)])

    def __truediv__(self, other: Any) -> WeakQuadraticForm:
        if isinstance(other, (Character, WeakQuadraticForm)):
            require_same_group("form quotient", self.group, other.group)
            return WeakQuadraticForm(self.group, [a / b for a, b in zip(self.values, other.values)])
        return NotImplemented

    def is_symmetric(self) -> bool:
        return is_symmetric_wrt(self, self.group.zero)

    def to_json(self) -> Dict[str, Any]:
        return {
            "group": self.group.to_json(),
            "values": [[list(g), v.to_json()] for g, v in zip(self.group.elements, self.values)],
        }

    @classmethod
    def from_json(cls, data: Any, field: str = "form", validate: bool = True) -> WeakQuadraticForm:
        group, values = table_from_json(data, field)
        if validate:
            violation = find_bilinearity_violation(group, values)
            if violation is not None:
                raise InvalidFormError("beta_q is a bihomomorphism", violation)
        return cls(group, values)


class QuadraticForm(WeakQuadraticForm):
    """Weak quadratic form with q(g) = q(-g)."""

    def __init__(self, group: FinAbGroup, values: Sequence[RootOfUnity]):
        super().__init__(group, values)
        violation = find_symmetry_violation(self, group.zero)
        if violation is not None:
            raise InvalidFormError("q(g) = q(-g)", violation)


def table_from_json(data: Any, field: str = "form") -> Tuple[FinAbGroup, List[RootOfUnity]]:
    """Decode {"group": ..., "values": [[element, root], ...]} into a total table."""
    if not isinstance(data, dict) or "group" not in data or "values" not in data:
        raise MalformedInputError(field, "expected {\"group\": ..., \"values\": [[g, root], ...]}")
    group = FinAbGroup.from_json(data["group"], f"{field}.group")
    entries = data["values"]
    if not isinstance(entries, list):
        raise MalformedInputError(f"{field}.values", "expected a list of [element, root] pairs")
    table: Dict[GroupElement, RootOfUnity] = {}
    for i, entry in enumerate(entries):
        if not isinstance(entry, list) or len(entry) != 2:
            raise MalformedInputError(f"{field}.values[{i}]", "expected [element, root]")
        g = group.element_from_json(entry[0], f"{field}.values[{i}][0]")
        if g in table:
            raise MalformedInputError(f"{field}.values[{i}]", f"duplicate entry for {list(g)}")
        table[g] = RootOfUnity.from_json(entry[1], f"{field}.values[{i}][1]")
    missing = [list(g) for g in group.elements if g not in table]
    if missing:
        raise MalformedInputError(f"{field}.values", f"table is not total, missing {missing[:4]}")
    return group, [table[g] for g in group.elements]


@dataclass(frozen=True)
class BiHom:
    """Table G x G -> roots of unity, table[i][j] for elements[i], elements[j]."""

    group: FinAbGroup
    table: Tuple[Tuple[RootOfUnity, ...], ...]

    def __call__(self, g: GroupElement, h: GroupElement) -> RootOfUnity:
        return self.table[self.group.index(g)][self.group.index(h)]

    def column(self, h: GroupElement) -> Tuple[RootOfUnity, ...]:
        """Values of g -> beta(g, h)."""
        j = self.group.index(h)
        return tuple(row[j] for row in self.table)

    def is_bilinear(self) -> bool:
        add = self.group.addition_table
        size = self.group.order
        for i, j, k in itertools.product(range(size), repeat=3):
            if self.table[add[i][j]][k] != self.table[i][k] * self.table[j][k]:
                return False
            if self.table[k][add[i][j]] != self.table[k][i] * self.table[k][j]:
                return False
        return True

    def to_json(self) -> Dict[str, Any]:
        elements = self.group.elements
        return {
            "group": self.group.to_json(),
            "values": [
                [list(g), list(h), self.table[i][j].to_json()]
                for i, g in enumerate(elements) for j, h in enumerate(elements)
            ],
        }


@dataclass(frozen=True)
class WSQFDatum:
    """(q, g0) with q(g) = q(-g + g0)."""

    q: WeakQuadraticForm
    g0: GroupElement

    def to_json(self) -> Dict[str, Any]:
        return {"q": self.q.to_json(), "g0": list(self.g0)}

    @classmethod
    def from_json(cls, data: Any, field: str = "wsqf") -> WSQFDatum:
        if not isinstance(data, dict) or "q" not in data or "g0" not in data:
            raise MalformedInputError(field, "expected {\"q\": form, \"g0\": element}")
        q = WeakQuadraticForm.from_json(data["q"], f"{field}.q")
        return cls(q, q.group.element_from_json(data["g0"], f"{field}.g0"))


@dataclass(frozen=True)
class WRQFDatum:
    """(q, eta, g0) with q a quadratic form and eta(g) = beta_q(g, g0)."""

    q: WeakQuadraticForm
    eta: Character
    g0: GroupElement

    def to_json(self) -> Dict[str, Any]:
        return {"q": self.q.to_json(), "eta": self.eta.to_json(), "g0": list(self.g0)}

    @classmethod
    def from_json(cls, data: Any, field: str = "wrqf") -> WRQFDatum:
        if not isinstance(data, dict) or not {"q", "eta", "g0"} <= set(data):
            raise MalformedInputError(field, "expected {\"q\": form, \"eta\": character, \"g0\": element}")
        q = WeakQuadraticForm.from_json(data["q"], f"{field}.q")
        eta = Character.from_json(q.group, data["eta"], f"{field}.eta")
        return cls(q, eta, q.group.element_from_json(data["g0"], f"{field}.g0"))


# Predicates and counterexamples

def find_bilinearity_violation(group: FinAbGroup, values: Sequence[RootOfUnity]) -> Optional[Dict[str, Any]]:
    """
    First (g1, g2, h) with beta(g1 + g2, h) != beta(g1, h) beta(g2, h), or None.

    beta_q is symmetric by construction, so additivity in the first
    argument is the whole bihomomorphism condition.
    """
    _check_length(group, values)
    n, e = _integer_exponents(values)
    add = group.addition_table
    size = group.order
    beta = [[(e[add[i][j]] - e[i] - e[j]) % n for j in range(size)] for i in range(size)]
    for i in range(size):
        for j in range(i, size):
            row_i, row_j, row_ij = beta[i], beta[j], beta[add[i][j]]
            for k in range(size):
                if (row_i[k] + row_j[k] - row_ij[k]) % n:
                    elements = group.elements
                    return {
                        "g1": list(elements[i]),
                        "g2": list(elements[j]),
                        "h": list(elements[k]),
                        "lhs": RootOfUnity(Fraction(row_ij[k], n)).to_json(),
                        "rhs": RootOfUnity(Fraction(row_i[k] + row_j[k], n)).to_json(),
                    }
    return None


def find_symmetry_violation(q: WeakQuadraticForm, g0: GroupElement) -> Optional[Dict[str, Any]]:
    """First g with q(g) != q(-g + g0), or None."""
    group = q.group
    g0 = group.check(g0, "g0")
    for g, value in zip(group.elements, q.values):
        mirrored = group._add(group._neg(g), g0)
        if value != q(mirrored):
            return {"g": list(g), "q(g)": value.to_json(), "q(-g+g0)": q(mirrored).to_json()}
    return None


def is_weak_qform(group: FinAbGroup, values: Sequence[RootOfUnity]) -> bool:
    if len(values) != group.order:
        return False
    return find_bilinearity_violation(group, values) is None


def is_qform(q: WeakQuadraticForm) -> bool:
    return is_weak_qform(q.group, q.values) and is_symmetric_wrt(q, q.group.zero)


def is_symmetric_wrt(q: WeakQuadraticForm, g0: GroupElement) -> bool:
    return find_symmetry_violation(q, g0) is None


def assoc_bihom(q: WeakQuadraticForm) -> BiHom:
    """
    beta_q(g1, g2) = q(g1 + g2) q(g1)^-1 q(g2)^-1.

    Raises:
        InvalidFormError: If beta_q is not bilinear
    """
    violation = find_bilinearity_violation(q.group, q.values)
    if violation is not None:
        raise InvalidFormError("beta_q is a bihomomorphism", violation)
    add = q.group.addition_table
    v = q.values
    size = q.group.order
    return BiHom(q.group, tuple(
        tuple(v[add[i][j]] / v[i] / v[j] for j in range(size)) for i in range(size)
    ))


def beta_character(q: WeakQuadraticForm, g0: GroupElement) -> Character:
    """The character g -> beta_q(g, g0)."""
    eta = character_from_values(q.group, q.beta.column(g0))
    if eta is None:
        raise InvalidFormError("beta_q(-, g0) is a character", {"g0": list(g0)})
    return eta


def check_wsqf(datum: WSQFDatum) -> None:
    violation = find_symmetry_violation(datum.q, datum.g0)
    if violation is not None:
        raise InvariantViolationError("q(g) = q(-g + g0)", {"g0": list(datum.g0), **violation})


def check_wrqf(datum: WRQFDatum) -> None:
    q = datum.q
    require_same_group("WRQF datum", q.group, datum.eta.group)
    symmetry = find_symmetry_violation(q, q.group.zero)
    if symmetry is not None:
        raise InvariantViolationError("q(g) = q(-g)", symmetry)
    column = q.beta.column(datum.g0)
    for g, expected, actual in zip(q.group.elements, column, datum.eta.values):
        if expected != actual:
            raise InvariantViolationError("eta(g) = beta_q(g, g0)", {
                "g": list(g), "g0": list(datum.g0),
                "eta(g)": actual.to_json(), "beta_q(g,g0)": expected.to_json(),
            })


# Enumeration

def _cyclic_parameters(n: int) -> List[Tuple[Fraction, Fraction]]:
    """(C, B) exponents with C^n * B^(n(n-1)/2) = 1, C in mu_{n^2}, B in mu_n."""
    return [
        (Fraction(c, n * n), Fraction(b, n))
        for b in range(n) for c in range(n * n)
        if (2 * c + b * n * (n - 1)) % (2 * n) == 0
    ]


def enumerate_wqf(group: FinAbGroup, config: Optional[StarautConfig] = None) -> List[WeakQuadraticForm]:
    """
    Every weak quadratic form on the group, sorted by table.

    A form is determined by q(e_i), beta(e_i, e_i) and the cross terms
    beta(e_i, e_j) for i < j; the table is rebuilt with
    q(k) = prod_i q(e_i)^{k_i} beta(e_i, e_i)^{k_i(k_i-1)/2} prod_{i<j} beta(e_i, e_j)^{k_i k_j}.

    Raises:
        BoundExceededError: If |G| exceeds max_enumeration_order
        SearchFailureError: If a rebuilt table fails the bilinearity check
    """
    resolve_config(config).require('max_enumeration_order', group.order)
    orders = group.cyclic_orders
    pairs = list(itertools.combinations(range(group.rank), 2))
    factor_choices = [_cyclic_parameters(n) for n in orders]
    cross_choices = [
        [Fraction(t, math.gcd(orders[i], orders[j])) for t in range(math.gcd(orders[i], orders[j]))]
        for i, j in pairs
    ]

    forms = []
    for factors in itertools.product(*factor_choices):
        for cross in itertools.product(*cross_choices):
            values = []
            for k in group.elements:
                exponent = Fraction(0)
                for ki, (c, b) in zip(k, factors):
                    exponent += ki * c + (ki * (ki - 1) // 2) * b
                for (i, j), beta_ij in zip(pairs, cross):
                    exponent += k[i] * k[j] * beta_ij
                values.append(RootOfUnity(exponent))
            violation = find_bilinearity_violation(group, values)
            if violation is not None:
                raise SearchFailureError("enumerate_wqf", "rebuilt table is not a weak quadratic form", violation)
            forms.append(WeakQuadraticForm(group, values))

    forms.sort(key=lambda q: q.key)
    logger.debug(f"Enumerated {len(forms)} weak quadratic forms on {group}")
    return forms


def enumerate_qf(group: FinAbGroup, config: Optional[StarautConfig] = None) -> List[QuadraticForm]:
    return [
        QuadraticForm(group, q.values) for q in enumerate_wqf(group, config) if q.is_symmetric()
    ]


def enumerate_wsqf(group: FinAbGroup, config: Optional[StarautConfig] = None) -> List[WSQFDatum]:
    """All (q, g0) with q(g) = q(-g + g0), ordered by (table, g0)."""
    return [
        WSQFDatum(q, g0)
        for q in enumerate_wqf(group, config) for g0 in group.elements
        if is_symmetric_wrt(q, g0)
    ]


def enumerate_wrqf(group: FinAbGroup, config: Optional[StarautConfig] = None) -> List[WRQFDatum]:
    """All (q, beta_q(-, g0), g0) with q a quadratic form, ordered by (table, g0)."""
    return [
        WRQFDatum(q, beta_character(q, g0), g0)
        for q in enumerate_qf(group, config) for g0 in group.elements
    ]


# Decomposition and power identities

def decompose(q: WeakQuadraticForm) -> Tuple[QuadraticForm, Character]:
    """
    Canonical splitting q = q~ * eta with q~ symmetric and eta a character.

    Factorwise with C = q(e_i), B = beta_q(e_i, e_i): eta(e_i) = C * s^-1 where
    s is the principal square root of B for even n_i, and the square root
    B^((n_i + 1) / 2) inside mu_{n_i} for odd n_i.

    Args:
        q: A weak quadratic form

    Returns:
        (q~, eta) with beta_q~ = beta_q

    Raises:
        InvalidFormError: If q is not a weak quadratic form
        SearchFailureError: If a postcondition fails
    """
    group = q.group
    beta = assoc_bihom(q)
    images = []
    for e, n in zip(group.generators, group.cyclic_orders):
        c_value = q(e)
        b_value = beta(e, e)
        root = b_value.principal_sqrt() if n % 2 == 0 else b_value ** ((n + 1) // 2)
        images.append(c_value / root)
    eta = Character(group, tuple(images))

    reduced = q / eta
    violation = find_symmetry_violation(reduced, group.zero)
    if violation is not None:
        raise SearchFailureError("decompose", "reduced form is not symmetric", violation)
    if assoc_bihom(reduced).table != beta.table:
        raise SearchFailureError("decompose", "associated bihomomorphisms differ")
    return QuadraticForm(group, reduced.values), eta


def sum_below(k: int) -> int:
    """1 + 2 + ... + (k - 1)."""
    return k * (k - 1) // 2


def power_identity_check(q: WeakQuadraticForm, g: GroupElement, k: int,
                         g0: Optional[GroupElement] = None) -> bool:
    """
    Check the power identities for q at g and k.

    Always checks q(kg) = q(g)^k beta(g, g)^{k(k-1)/2} and
    q(g)^m beta(g, g)^{m(m-1)/2} = 1 for m the order of g. With g0 it also
    checks q(kg) = q(g)^{k^2 - s} q(g + g0)^s, s = k(k-1)/2.

    Raises:
        InvariantViolationError: If g0 is given but (q, g0) is not symmetric
    """
    group = q.group
    g = group.check(g)
    b = q.beta(g, g)
    lhs = q(group.scale(k, g))
    if lhs != q(g) ** k * b ** sum_below(k):
        return False
    m = group.order_of(g)
    if not (q(g) ** m * b ** sum_below(m)).is_identity():
        return False
    if g0 is not None:
        check_wsqf(WSQFDatum(q, group.check(g0, "g0")))
        s = sum_below(k)
        if lhs != q(g) ** (k * k - s) * q(group.add(g, g0)) ** s:
            return False
    return True


def character_ratio(q1: WeakQuadraticForm, q2: WeakQuadraticForm) -> Optional[Character]:
    """q1 / q2 as a character, if it is one."""
    require_same_group("character_ratio", q1.group, q2.group)
    return character_from_values(q1.group, (q1 / q2).values)


# Symmetric and representable data

def wrqf_to_wsqf(datum: WRQFDatum) -> WSQFDatum:
    """(q, eta, g0) -> (q * eta, -2 g0)."""
    check_wrqf(datum)
    group = datum.q.group
    result = WSQFDatum(datum.q * datum.eta, group.scale(-2, datum.g0))
    violation = find_symmetry_violation(result.q, result.g0)
    if violation is not None:
        raise SearchFailureError("wrqf_to_wsqf", "image is not symmetric", violation)
    return result


def wsqf_to_wrqf(datum: WSQFDatum) -> WRQFDatum:
    """
    (q, g0) -> (q~, eta, -sqrt(g0)) with (q~, eta) = decompose(q).

    Raises:
        InvariantViolationError: If G has an even-order factor or the datum
            is not symmetric
    """
    group = datum.q.group
    if not has_square_roots(group):
        raise InvariantViolationError("every element has a unique square root",
                                      {"cyclic_orders": list(group.cyclic_orders)})
    check_wsqf(datum)
    reduced, eta = decompose(datum.q)
    root = square_root(group, datum.g0)
    result = WRQFDatum(reduced, eta, group.neg(root))
    try:
        check_wrqf(result)
    except InvariantViolationError as e:
        raise SearchFailureError("wsqf_to_wrqf", "image is not representable", e.details)
    return result


# Classification under Aut(G)

def pullback(q: WeakQuadraticForm, f: GroupAutomorphism) -> WeakQuadraticForm:
    """f*q(g) = q(f(g))."""
    require_same_group("pullback", q.group, f.group)
    return WeakQuadraticForm(q.group, [q.values[i] for i in f.index_map])


@dataclass(frozen=True)
class Orbit:
    """An Aut(G)-orbit: canonical representative plus the input members in it."""

    representative: Any
    members: Tuple[Any, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    def to_json(self) -> Dict[str, Any]:
        return {"representative": self.representative.to_json(), "size": self.size}


def _common_group(items: Sequence[Any], group_of: Callable[[Any], FinAbGroup], operation: str) -> FinAbGroup:
    group = group_of(items[0])
    for item in items[1:]:
        require_same_group(operation, group, group_of(item))
    return group


def _partition(items: Sequence[Any], keyed: Callable[[Any], Tuple[Hashable, Any]]) -> List[Orbit]:
    buckets: Dict[Hashable, List[Any]] = {}
    best: Dict[Hashable, Tuple[Any, Any]] = {}
    for item in items:
        orbit_key, (rank, representative) = keyed(item)
        buckets.setdefault(orbit_key, []).append(item)
        if orbit_key not in best or rank < best[orbit_key][0]:
            best[orbit_key] = (rank, representative)
    return [Orbit(best[k][1], tuple(buckets[k])) for k in sorted(buckets)]


def orbit_key(q: WeakQuadraticForm, auts: Sequence[GroupAutomorphism]) -> Tuple[RootOfUnity, ...]:
    """Least table among the pullbacks of q."""
    return min(tuple(q.values[i] for i in f.index_map) for f in auts)


def classify(forms: Sequence[WeakQuadraticForm], config: Optional[StarautConfig] = None) -> List[Orbit]:
    """
    Partition forms into Aut(G)-pullback orbits.

    Returns:
        Orbits sorted by representative; the representative is the least
        table of the whole orbit

    Raises:
        GroupMismatchError: If the forms live on different groups
        BoundExceededError: If |G| exceeds max_aut_order
    """
    if not forms:
        return []
    group = _common_group(forms, lambda q: q.group, "classify")
    auts = automorphisms(group, config)

    def keyed(q: WeakQuadraticForm):
        key = orbit_key(q, auts)
        return key, (key, WeakQuadraticForm(group, key))

    orbits = _partition(forms, keyed)
    logger.debug(f"Classified {len(forms)} forms on {group} into {len(orbits)} orbits")
    return orbits


def _with_inverses(auts: Sequence[GroupAutomorphism]) -> List[Tuple[GroupAutomorphism, GroupAutomorphism]]:
    return [(f, f.inverse()) for f in auts]


def classify_wsqf(data: Sequence[WSQFDatum], config: Optional[StarautConfig] = None) -> List[Orbit]:
    """Orbits of (q, g0) under (q, g0) ~ (q', g0') iff q = f*q' and f(g0) = g0'."""
    if not data:
        return []
    group = _common_group(data, lambda d: d.q.group, "classify_wsqf")
    pairs = _with_inverses(automorphisms(group, config))

    def keyed(d: WSQFDatum):
        key = min((tuple(d.q.values[i] for i in f.index_map), f_inv(d.g0)) for f, f_inv in pairs)
        return key, (key, WSQFDatum(WeakQuadraticForm(group, key[0]), key[1]))

    return _partition(data, keyed)


def classify_wrqf(data: Sequence[WRQFDatum], config: Optional[StarautConfig] = None) -> List[Orbit]:
    """Orbits of (q, eta, g0) under (q, eta, g0) ~ (q', eta', g0') iff q eta = f*(q' eta') and f(g0) = g0'."""
    if not data:
        return []
    group = _common_group(data, lambda d: d.q.group, "classify_wrqf")
    pairs = _with_inverses(automorphisms(group, config))

    def keyed(d: WRQFDatum):
        product = (d.q * d.eta).values
        candidates = []
        for f, f_inv in pairs:
            moved_q = tuple(d.q.values[i] for i in f.index_map)
            moved_eta = tuple(d.eta.values[i] for i in f.index_map)
            candidates.append((tuple(product[i] for i in f.index_map), f_inv(d.g0), moved_q, moved_eta))
        best = min(candidates)
        representative = WRQFDatum(
            QuadraticForm(group, best[2]), character_from_values(group, best[3]), best[1]
        )
        return best[:2], (best[2:], representative)

    return _partition(data, keyed)


def wqf_class_bijection(group: FinAbGroup, config: Optional[StarautConfig] = None) -> Dict[str, Any]:
    """
    Compare WQF/~ with (QF + Hom)/~ through the canonical decompose.

    Pairs (q~, eta) and (q~', eta') are related when q~ eta = f*(q~' eta'),
    so a class of pairs is named by the orbit key of the product.

    Returns:
        Report with orbit counts and the well-definedness, injectivity and
        surjectivity flags of [q] -> [decompose(q)]
    """
    auts = automorphisms(group, config)
    orbits = classify(enumerate_wqf(group, config), config)
    pair_classes = {
        orbit_key(qt * eta, auts)
        for qt in enumerate_qf(group, config) for eta in characters(group)
    }

    images = []
    well_defined = True
    for orbit in orbits:
        member_images = set()
        for q in orbit.members:
            reduced, eta = decompose(q)
            member_images.add(orbit_key(reduced * eta, auts))
        well_defined = well_defined and len(member_images) == 1
        images.append(min(member_images))

    report = {
        "group": group.to_json(),
        "wqf_orbits": len(orbits),
        "qf_hom_classes": len(pair_classes),
        "well_defined": well_defined,
        "injective": len(set(images)) == len(orbits),
        "surjective": set(images) == pair_classes,
    }
    logger.debug(f"WQF class bijection on {group}: {report}")
    return report
