"""
Finite abelian groups given as products of cyclic groups.

Elements are residue tuples; the group object owns the arithmetic, the
lexicographic element order and index tables used by the form and cochain
code. Characters and automorphisms are enumerated by brute force.
"""
from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Dict, List, Optional, Sequence, Tuple

from algebra.exact import RootOfUnity, ru_product
from core.config import StarautConfig, resolve_config
from core.exceptions import GroupMismatchError, MalformedInputError

logger = logging.getLogger(__name__)

GroupElement = Tuple[int, ...]


@dataclass(frozen=True)
class FinAbGroup:
    """The group Z_{n_1} + ... + Z_{n_r}; r = 0 is the trivial group."""

    cyclic_orders: Tuple[int, ...] = ()

    def __post_init__(self):
        orders = tuple(self.cyclic_orders)
        for i, n in enumerate(orders):
            if not isinstance(n, int) or isinstance(n, bool) or n < 2:
                raise MalformedInputError(f"cyclic_orders[{i}]", "cyclic orders must be integers >= 2")
        object.__setattr__(self, 'cyclic_orders', orders)

    @classmethod
    def cyclic(cls, n: int) -> FinAbGroup:
        return cls((n,)) if n > 1 else cls(())

    @property
    def rank(self) -> int:
        return len(self.cyclic_orders)

    @property
    def order(self) -> int:
        return math.prod(self.cyclic_orders)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.cyclic_orders) if self.cyclic_orders else 1

    @cached_property
    def elements(self) -> Tuple[GroupElement, ...]:
        return tuple(itertools.product(*(range(n) for n in self.cyclic_orders)))

    @cached_property
    def _index(self) -> Dict[GroupElement, int]:
        return {g: i for i, g in enumerate(self.elements)}

    @cached_property
    def addition_table(self) -> Tuple[Tuple[int, ...], ...]:
        """addition_table[i][j] = index of elements[i] + elements[j]."""
        elements = self.elements
        return tuple(
            tuple(self._index[self._add(g, h)] for h in elements) for g in elements
        )

    @cached_property
    def negation_table(self) -> Tuple[int, ...]:
        return tuple(self._index[self._neg(g)] for g in self.elements)

    @property
    def zero(self) -> GroupElement:
        return tuple(0 for _ in self.cyclic_orders)

    @property
    def generators(self) -> Tuple[GroupElement, ...]:
        return tuple(
            tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)
        )

    def _add(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return tuple((x + y) % n for x, y, n in zip(a, b, self.cyclic_orders))

    def _neg(self, a: GroupElement) -> GroupElement:
        return tuple((-x) % n for x, n in zip(a, self.cyclic_orders))

    def check(self, g: Sequence[int], field: str = "element") -> GroupElement:
        """Validate membership and return g as a tuple."""
        if len(g) != self.rank:
            raise GroupMismatchError(field, f"element of rank {len(g)}", f"group {self.cyclic_orders}")
        for k, n in zip(g, self.cyclic_orders):
            if not isinstance(k, int) or isinstance(k, bool) or not 0 <= k < n:
                raise GroupMismatchError(field, f"element {tuple(g)}", f"group {self.cyclic_orders}")
        return tuple(g)

    def index(self, g: GroupElement) -> int:
        try:
            return self._index[tuple(g)]
        except KeyError:
            raise GroupMismatchError("index", f"element {tuple(g)}", f"group {self.cyclic_orders}")

    def add(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return self._add(self.check(a), self.check(b))

    def neg(self, a: GroupElement) -> GroupElement:
        return self._neg(self.check(a))

    def sub(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return self._add(self.check(a), self._neg(self.check(b)))

    def scale(self, k: int, a: GroupElement) -> GroupElement:
        return tuple((k * x) % n for x, n in zip(self.check(a), self.cyclic_orders))

    def order_of(self, a: GroupElement) -> int:
        a = self.check(a)
        return math.lcm(*(n // math.gcd(x, n) for x, n in zip(a, self.cyclic_orders))) if a else 1

    # JSON

    def to_json(self) -> Dict[str, Any]:
        return {"cyclic_orders": list(self.cyclic_orders)}

    @classmethod
    def from_json(cls, data: Any, field: str = "group") -> FinAbGroup:
        if not isinstance(data, dict) or "cyclic_orders" not in data:
            raise MalformedInputError(field, "expected {\"cyclic_orders\": [n1, ...]}")
        orders = data["cyclic_orders"]
        if not isinstance(orders, list):
            raise MalformedInputError(f"{field}.cyclic_orders", "expected a list of integers")
        for i, n in enumerate(orders):
            if not isinstance(n, int) or isinstance(n, bool) or n < 2:
                raise MalformedInputError(f"{field}.cyclic_orders[{i}]", "cyclic orders must be integers >= 2")
        return cls(tuple(orders))

    def element_from_json(self, data: Any, field: str = "element") -> GroupElement:
        if not isinstance(data, list):
            raise MalformedInputError(field, "expected a list of residues")
        if len(data) != self.rank or any(
                not isinstance(k, int) or isinstance(k, bool) or not 0 <= k < n
                for k, n in zip(data, self.cyclic_orders)):
            raise MalformedInputError(field, f"not an element of {list(self.cyclic_orders)}")
        return tuple(data)

    def __str__(self) -> str:
        if not self.cyclic_orders:
            return "Z1"
        return "+".join(f"Z{n}" for n in self.cyclic_orders)


def require_same_group(operation: str, left: FinAbGroup, right: FinAbGroup) -> None:
    if left != right:
        raise GroupMismatchError(operation, left, right)


def g_zero(group: FinAbGroup) -> GroupElement:
    return group.zero


def g_add(group: FinAbGroup, a: GroupElement, b: GroupElement) -> GroupElement:
    return group.add(a, b)


def g_neg(group: FinAbGroup, a: GroupElement) -> GroupElement:
    return group.neg(a)


def g_order(group: FinAbGroup, a: GroupElement) -> int:
    return group.order_of(a)


def g_all(group: FinAbGroup) -> Tuple[GroupElement, ...]:
    return group.elements


@dataclass(frozen=True)
class Character:
    """Homomorphism G -> roots of unity, given by the images of the generators."""

    group: FinAbGroup
    images: Tuple[RootOfUnity, ...]

    def __post_init__(self):
        if len(self.images) != self.group.rank:
            raise GroupMismatchError("Character", f"{len(self.images)} images", self.group)
        for i, (image, n) in enumerate(zip(self.images, self.group.cyclic_orders)):
            if n % image.order():
                raise MalformedInputError(f"images[{i}]", f"order {image.order()} does not divide {n}")

    def __call__(self, g: GroupElement) -> RootOfUnity:
        return ru_product(image ** k for image, k in zip(self.images, g))

    @cached_property
    def values(self) -> Tuple[RootOfUnity, ...]:
        return tuple(self(g) for g in self.group.elements)

    def __mul__(self, other: Character) -> Character:
        require_same_group("character product", self.group, other.group)
        return Character(self.group, tuple(a * b for a, b in zip(self.images, other.images)))

    def to_json(self) -> Dict[str, Any]:
        return {"images": [image.to_json() for image in self.images]}

    @classmethod
    def from_json(cls, group: FinAbGroup, data: Any, field: str = "character") -> Character:
        if not isinstance(data, dict) or not isinstance(data.get("images"), list):
            raise MalformedInputError(field, "expected {\"images\": [root, ...]}")
        images = tuple(RootOfUnity.from_json(v, f"{field}.images[{i}]") for i, v in enumerate(data["images"]))
        if len(images) != group.rank:
            raise MalformedInputError(f"{field}.images", f"expected {group.rank} images")
        return cls(group, images)


def trivial_character(group: FinAbGroup) -> Character:
    return Character(group, tuple(RootOfUnity.identity() for _ in group.cyclic_orders))


def characters(group: FinAbGroup) -> List[Character]:
    """All |G| characters, ordered lexicographically by generator exponents."""
    return [
        Character(group, tuple(RootOfUnity(Fraction(a, n)) for a, n in zip(choice, group.cyclic_orders)))
        for choice in itertools.product(*(range(n) for n in group.cyclic_orders))
    ]


def character_from_values(group: FinAbGroup, values: Sequence[RootOfUnity]) -> Optional[Character]:
    """Return the character with these values (indexed like group.elements), if it is one."""
    images = tuple(values[group.index(e)] for e in group.generators)
    if any(n % image.order() for image, n in zip(images, group.cyclic_orders)):
        return None
    candidate = Character(group, images)
    return candidate if candidate.values == tuple(values) else None


def is_character(group: FinAbGroup, values: Sequence[RootOfUnity]) -> bool:
    return character_from_values(group, values) is not None


@dataclass(frozen=True)
class GroupAutomorphism:
    """Automorphism given by the images of the canonical generators."""

    group: FinAbGroup
    images: Tuple[GroupElement, ...]

    def __call__(self, g: GroupElement) -> GroupElement:
        result = self.group.zero
        for k, image in zip(g, self.images):
            result = tuple((x + k * y) % n for x, y, n in zip(result, image, self.group.cyclic_orders))
        return result

    @cached_property
    def index_map(self) -> Tuple[int, ...]:
        """index_map[i] = index of f(elements[i])."""
        return tuple(self.group.index(self(g)) for g in self.group.elements)

    def compose(self, other: GroupAutomorphism) -> GroupAutomorphism:
        """self after other."""
        require_same_group("compose automorphisms", self.group, other.group)
        return GroupAutomorphism(self.group, tuple(self(image) for image in other.images))

    def inverse(self) -> GroupAutomorphism:
        preimage = {self(g): g for g in self.group.elements}
        return GroupAutomorphism(self.group, tuple(preimage[e] for e in self.group.generators))

    def is_identity(self) -> bool:
        return self.images == self.group.generators

    def to_json(self) -> Dict[str, Any]:
        return {"images": [list(image) for image in self.images]}


def identity_automorphism(group: FinAbGroup) -> GroupAutomorphism:
    return GroupAutomorphism(group, group.generators)


def is_automorphism(group: FinAbGroup, images: Sequence[GroupElement]) -> bool:
    """Order-divisibility of generator images plus bijectivity."""
    if len(images) != group.rank:
        return False
    for image, n in zip(images, group.cyclic_orders):
        if any((n * x) % m for x, m in zip(image, group.cyclic_orders)):
            return False
    f = GroupAutomorphism(group, tuple(tuple(image) for image in images))
    return len({f(g) for g in group.elements}) == group.order


def automorphisms(group: FinAbGroup, config: Optional[StarautConfig] = None) -> List[GroupAutomorphism]:
    """
    Enumerate Aut(G) by brute force over generator-image tuples.

    Images are chosen factor by factor; a partial choice is kept only while
    the map on the factors chosen so far is injective, so the surviving
    full tuples are exactly the bijective homomorphisms.

    Args:
        group: The group
        config: Bounds (max_aut_order)

    Returns:
        All automorphisms, in lexicographic order of their image tuples

    Raises:
        BoundExceededError: If |G| exceeds the configured bound
    """
    resolve_config(config).require('max_aut_order', group.order)
    orders = group.cyclic_orders
    candidates = [
        [h for h in group.elements if all((n * x) % m == 0 for x, m in zip(h, orders))]
        for n in orders
    ]
    results: List[GroupAutomorphism] = []

    def extend(chosen: List[GroupElement], span: frozenset) -> None:
        if len(chosen) == group.rank:
            results.append(GroupAutomorphism(group, tuple(chosen)))
            return
        n = orders[len(chosen)]
        for h in candidates[len(chosen)]:
            multiples = [tuple((k * x) % m for x, m in zip(h, orders)) for k in range(n)]
            new_span = frozenset(group._add(s, t) for s in span for t in multiples)
            if len(new_span) == len(span) * n:
                extend(chosen + [h], new_span)

    extend([], frozenset([group.zero]))
    logger.debug(f"Enumerated {len(results)} automorphisms of {group}")
    return results


def square_root(group: FinAbGroup, g: GroupElement) -> Optional[GroupElement]:
    """Least x (lexicographically) with 2x = g, or None."""
    g = group.check(g)
    root = []
    for k, n in zip(g, group.cyclic_orders):
        if n % 2:
            root.append((k * (n + 1) // 2) % n)
        elif k % 2:
            return None
        else:
            root.append(k // 2)
    return tuple(root)


def has_square_roots(group: FinAbGroup) -> bool:
    return all(n % 2 for n in group.cyclic_orders)


def square_roots(group: FinAbGroup, g: GroupElement) -> List[GroupElement]:
    """All x with 2x = g, in lexicographic order."""
    g = group.check(g)
    return [x for x in group.elements if group._add(x, x) == g]
