"""
Finite-dimensional G-graded vector spaces over the rationals.

Spaces are dimension vectors indexed like group.elements; maps are
per-degree blocks. Every basis is canonical (degree, position), so the
graded tensor product, the internal hom and the duality V -> V^{g0} are
pure index bookkeeping, and each claimed isomorphism is an explicit block
matrix that can be checked exactly.
"""
from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from algebra.exact import RationalMatrix, mat_dsum, modular_consistency_check, random_large_prime
from algebra.groups import FinAbGroup, GroupElement, require_same_group
from core.exceptions import DimensionMismatchError, InvariantViolationError, MalformedInputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GradedSpace:
    """V = sum_g V_g with dims[i] = dim V_{elements[i]}."""

    group: FinAbGroup
    dims: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'dims', tuple(self.dims))
        if len(self.dims) != self.group.order:
            raise MalformedInputError("dims", f"expected {self.group.order} dimensions")
        if any(not isinstance(d, int) or isinstance(d, bool) or d < 0 for d in self.dims):
            raise MalformedInputError("dims", "dimensions must be non-negative integers")

    @classmethod
    def simple(cls, group: FinAbGroup, g: GroupElement) -> GradedSpace:
        """k_g: one-dimensional, concentrated in degree g."""
        i = group.index(group.check(g))
        return cls(group, tuple(int(j == i) for j in range(group.order)))

    @classmethod
    def zero(cls, group: FinAbGroup) -> GradedSpace:
        return cls(group, (0,) * group.order)

    def dim(self, g: GroupElement) -> int:
        return self.dims[self.group.index(g)]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def to_json(self) -> Dict[str, Any]:
        return {
            "group": self.group.to_json(),
            "dims": [[list(g), d] for g, d in zip(self.group.elements, self.dims)],
        }

    @classmethod
    def from_json(cls, data: Any, field: str = "space") -> GradedSpace:
        if not isinstance(data, dict) or "group" not in data or "dims" not in data:
            raise MalformedInputError(field, "expected {\"group\": ..., \"dims\": [[g, d], ...]}")
        group = FinAbGroup.from_json(data["group"], f"{field}.group")
        if not isinstance(data["dims"], list):
            raise MalformedInputError(f"{field}.dims", "expected a list of [element, dimension] pairs")
        dims = {}
        for i, entry in enumerate(data["dims"]):
            if not isinstance(entry, list) or len(entry) != 2 or not isinstance(entry[1], int) or entry[1] < 0:
                raise MalformedInputError(f"{field}.dims[{i}]", "expected [element, dimension]")
            dims[group.element_from_json(entry[0], f"{field}.dims[{i}][0]")] = entry[1]
        return cls(group, tuple(dims.get(g, 0) for g in group.elements))


@dataclass(frozen=True)
class GradedMap:
    """Degree-d map: blocks[i] sends V_{h} to W_{d + h}, h = elements[i]."""

    source: GradedSpace
    target: GradedSpace
    degree: GroupElement
    blocks: Tuple[RationalMatrix, ...]

    def __post_init__(self):
        group = self.source.group
        require_same_group("GradedMap", group, self.target.group)
        object.__setattr__(self, 'blocks', tuple(self.blocks))
        if len(self.blocks) != group.order:
            raise MalformedInputError("blocks", f"expected {group.order} blocks")
        for h, block in zip(group.elements, self.blocks):
            expected = (self.target.dim(group._add(self.degree, h)), self.source.dim(h))
            if block.shape != expected:
                raise DimensionMismatchError(f"block at degree {list(h)}", expected, block.shape)

    @property
    def group(self) -> FinAbGroup:
        return self.source.group

    def block(self, h: GroupElement) -> RationalMatrix:
        return self.blocks[self.group.index(h)]

    def compose(self, other: GradedMap) -> GradedMap:
        """self after other."""
        if other.target != self.source:
            raise DimensionMismatchError("compose", other.target.dims, self.source.dims)
        group = self.group
        blocks = [
            self.block(group._add(other.degree, h)) @ other.block(h) for h in group.elements
        ]
        return GradedMap(other.source, self.target, group._add(self.degree, other.degree), tuple(blocks))

    def is_iso(self) -> bool:
        return all(block.is_iso() for block in self.blocks)

    def inverse(self) -> GradedMap:
        group = self.group
        neg = group._neg(self.degree)
        blocks = []
        for k in group.elements:
            # the inverse sends W_k back to V_{k - degree}
            blocks.append(self.block(group._add(neg, k)).inverse())
        return GradedMap(self.target, self.source, neg, tuple(blocks))

    def coordinates(self) -> Tuple[Fraction, ...]:
        """Block entries in degree order, row-major."""
        return tuple(v for block in self.blocks for row in block.entries for v in row)

    def to_json(self) -> Dict[str, Any]:
        return {
            "degree": list(self.degree),
            "blocks": [[list(h), block.to_json()] for h, block in zip(self.group.elements, self.blocks)],
        }

    @classmethod
    def from_json(cls, source: GradedSpace, target: GradedSpace, data: Any, field: str = "map") -> GradedMap:
        if not isinstance(data, dict) or "degree" not in data or "blocks" not in data:
            raise MalformedInputError(field, "expected {\"degree\": g, \"blocks\": [[h, matrix], ...]}")
        group = source.group
        degree = group.element_from_json(data["degree"], f"{field}.degree")
        blocks = {}
        for i, entry in enumerate(data["blocks"] if isinstance(data["blocks"], list) else []):
            if not isinstance(entry, list) or len(entry) != 2:
                raise MalformedInputError(f"{field}.blocks[{i}]", "expected [element, matrix]")
            h = group.element_from_json(entry[0], f"{field}.blocks[{i}][0]")
            blocks[h] = RationalMatrix.from_json(entry[1], f"{field}.blocks[{i}][1]")
        missing = [list(h) for h in group.elements if h not in blocks]
        if missing:
            raise MalformedInputError(f"{field}.blocks", f"missing blocks for {missing}")
        return cls(source, target, degree, tuple(blocks[h] for h in group.elements))


def identity_map(space: GradedSpace) -> GradedMap:
    return GradedMap(space, space, space.group.zero,
                     tuple(RationalMatrix.identity(d) for d in space.dims))


def zero_map(source: GradedSpace, target: GradedSpace, degree: Optional[GroupElement] = None) -> GradedMap:
    group = source.group
    degree = group.zero if degree is None else degree
    return GradedMap(source, target, degree, tuple(
        RationalMatrix.zeros(target.dim(group._add(degree, h)), source.dim(h)) for h in group.elements
    ))


def _require_degree_zero(f: GradedMap, operation: str) -> None:
    if f.degree != f.group.zero:
        raise InvariantViolationError(f"{operation} needs a degree-0 map", {"degree": list(f.degree)})


# Tensor product

class TensorBasis:
    """Basis of (V (x) W)_g: triples (h, i, j) for v_i in V_h, w_j in W_{g-h}, h ascending."""

    def __init__(self, left: GradedSpace, right: GradedSpace):
        require_same_group("tensor", left.group, right.group)
        self.left = left
        self.right = right
        group = left.group
        self.positions: List[Dict[Tuple[int, int, int], int]] = []
        for g in group.elements:
            table = {}
            for h_index, h in enumerate(group.elements):
                k = group._add(g, group._neg(h))
                for i in range(left.dims[h_index]):
                    for j in range(right.dim(k)):
                        table[(h_index, i, j)] = len(table)
            self.positions.append(table)

    def space(self) -> GradedSpace:
        return GradedSpace(self.left.group, tuple(len(t) for t in self.positions))

    def position(self, g_index: int, h_index: int, i: int, j: int) -> int:
        return self.positions[g_index][(h_index, i, j)]


def tensor(left: GradedSpace, right: GradedSpace) -> GradedSpace:
    """(V (x) W)_g = sum_{h + k = g} V_h (x) W_k."""
    return TensorBasis(left, right).space()


def tensor_map(f: GradedMap, u: GradedMap) -> GradedMap:
    """f (x) u for degree-0 maps; block g is the direct sum over h of f_h (x) u_{g-h}."""
    _require_degree_zero(f, "tensor_map")
    _require_degree_zero(u, "tensor_map")
    require_same_group("tensor_map", f.group, u.group)
    group = f.group
    blocks = []
    for g in group.elements:
        block = RationalMatrix.zeros(0, 0)
        for h in group.elements:
            block = mat_dsum(block, f.block(h).kron(u.block(group._add(g, group._neg(h)))))
        blocks.append(block)
    return GradedMap(tensor(f.source, u.source), tensor(f.target, u.target), group.zero, tuple(blocks))


# Duality

def dual_g0(space: GradedSpace, g0: GroupElement) -> GradedSpace:
    """V^{g0} = Hom(V, k_{g0}), with (V^{g0})_g = (V_{g0 - g})^*."""
    group = space.group
    g0 = group.check(g0, "g0")
    return GradedSpace(group, tuple(space.dim(group._add(g0, group._neg(g))) for g in group.elements))


def dual_g0_map(f: GradedMap, g0: GroupElement) -> GradedMap:
    """f^{g0}: W^{g0} -> V^{g0}, the transpose of f_{g0 - g} in degree g."""
    _require_degree_zero(f, "dual_g0_map")
    group = f.group
    g0 = group.check(g0, "g0")
    blocks = tuple(f.block(group._add(g0, group._neg(g))).T for g in group.elements)
    return GradedMap(dual_g0(f.target, g0), dual_g0(f.source, g0), group.zero, blocks)


def double_dual_iso(space: GradedSpace, g0: GroupElement) -> GradedMap:
    """
    Evaluation V -> (V^{g0})^{g0}, v -> (phi -> phi(v)).

    In degree g the double dual is the dual of (V^{g0})_{g0 - g}, whose basis
    is the dual basis of V_{g0 - (g0 - g)}. Block entry (j, i) is the j-th
    dual functional evaluated on the i-th basis vector of V_g.
    """
    group = space.group
    g0 = group.check(g0, "g0")
    first = dual_g0(space, g0)
    target = dual_g0(first, g0)
    if target != space:
        raise InvariantViolationError("(V^{g0})^{g0} has the dimensions of V",
                                      {"dims": list(space.dims), "double_dual": list(target.dims)})
    blocks = []
    for g in group.elements:
        h = group._add(g0, group._neg(g))
        acts_on = group._add(g0, group._neg(h))
        if acts_on != g:
            raise InvariantViolationError("functionals of (V^{g0})_{g0 - g} act on V_g",
                                          {"g": list(g), "acts_on": list(acts_on)})
        functionals = RationalMatrix.identity(first.dim(h))
        vectors = RationalMatrix.identity(space.dim(acts_on))
        blocks.append(functionals @ vectors)
    return GradedMap(space, target, group.zero, tuple(blocks))


def double_dual_naturality(f: GradedMap, g0: GroupElement) -> bool:
    """(f^{g0})^{g0} after ev_V equals ev_W after f."""
    lhs = dual_g0_map(dual_g0_map(f, g0), g0).compose(double_dual_iso(f.source, g0))
    rhs = double_dual_iso(f.target, g0).compose(f)
    return lhs.blocks == rhs.blocks


def double_dual_general_dims(space: GradedSpace, g0: GroupElement, g1: GroupElement) -> bool:
    """dim ((V^{g0})^{g1})_g = dim V_{g - g1 + g0} for every g."""
    group = space.group
    twice = dual_g0(dual_g0(space, g0), g1)
    shift = group._add(group._neg(group.check(g1, "g1")), group.check(g0, "g0"))
    return all(twice.dim(g) == space.dim(group._add(g, shift)) for g in group.elements)


# Internal hom

class InternalHomBasis:
    """Basis of iHom(V, W)_g: elementary maps E_{r,j}: V_h -> W_{g+h}, h ascending, then row-major."""

    def __init__(self, source: GradedSpace, target: GradedSpace):
        require_same_group("internal_hom", source.group, target.group)
        self.source = source
        self.target = target
        group = source.group
        self.positions: List[Dict[Tuple[int, int, int], int]] = []
        for g in group.elements:
            table = {}
            for h_index, h in enumerate(group.elements):
                rows = target.dim(group._add(g, h))
                for r in range(rows):
                    for j in range(source.dims[h_index]):
                        table[(h_index, r, j)] = len(table)
            self.positions.append(table)

    def space(self) -> GradedSpace:
        return GradedSpace(self.source.group, tuple(len(t) for t in self.positions))


def internal_hom(source: GradedSpace, target: GradedSpace) -> GradedSpace:
    """iHom(V, W)_g = Hom_g(V, W), of dimension sum_h dim V_h dim W_{g+h}."""
    return InternalHomBasis(source, target).space()


def curry(f: GradedMap, u: GradedSpace, v: GradedSpace) -> GradedMap:
    """
    Hom_0(U (x) V, W) -> Hom_0(U, iHom(V, W)), f~(x)(y) = f(x (x) y).

    Args:
        f: Degree-0 map out of tensor(u, v)
        u: Left tensor factor
        v: Right tensor factor
    """
    _require_degree_zero(f, "curry")
    tensor_basis = TensorBasis(u, v)
    if f.source != tensor_basis.space():
        raise DimensionMismatchError("curry", f.source.dims, tensor_basis.space().dims)
    w = f.target
    hom_basis = InternalHomBasis(v, w)
    hom_space = hom_basis.space()
    group = u.group
    add = group.addition_table

    blocks = []
    for a in range(group.order):
        entries = [[Fraction(0)] * u.dims[a] for _ in range(hom_space.dims[a])]
        for (h, r, j), row in hom_basis.positions[a].items():
            g = add[a][h]
            source_block = f.blocks[g]
            for i in range(u.dims[a]):
                entries[row][i] = source_block[r, tensor_basis.position(g, a, i, j)]
        blocks.append(RationalMatrix.from_rows(entries, cols=u.dims[a]))
    return GradedMap(u, hom_space, group.zero, tuple(blocks))


def uncurry(f_tilde: GradedMap, v: GradedSpace, w: GradedSpace) -> GradedMap:
    """Inverse of curry: f(x (x) y) = f~(x)(y)."""
    _require_degree_zero(f_tilde, "uncurry")
    hom_basis = InternalHomBasis(v, w)
    if f_tilde.target != hom_basis.space():
        raise DimensionMismatchError("uncurry", f_tilde.target.dims, hom_basis.space().dims)
    u = f_tilde.source
    tensor_basis = TensorBasis(u, v)
    tensor_space = tensor_basis.space()
    group = u.group
    add = group.addition_table

    entries = [[[Fraction(0)] * tensor_space.dims[g] for _ in range(w.dims[g])] for g in range(group.order)]
    for a in range(group.order):
        block = f_tilde.blocks[a]
        for (h, r, j), row in hom_basis.positions[a].items():
            g = add[a][h]
            for i in range(u.dims[a]):
                entries[g][r][tensor_basis.position(g, a, i, j)] = block[row, i]
    blocks = tuple(
        RationalMatrix.from_rows(entries[g], cols=tensor_space.dims[g]) for g in range(group.order)
    )
    return GradedMap(tensor_space, w, group.zero, blocks)


# Second tensor products

def tensor_g0(left: GradedSpace, right: GradedSpace, g0: GroupElement) -> GradedSpace:
    """V (x)_{g0} W = (V^{g0} (x) W^{g0})^{g0}, checked against the shift (V (x) W)_{g + g0}."""
    group = left.group
    result = dual_g0(tensor(dual_g0(left, g0), dual_g0(right, g0)), g0)
    plain = tensor(left, right)
    for g in group.elements:
        if result.dim(g) != plain.dim(group._add(g, g0)):
            raise InvariantViolationError("(V (x)_{g0} W)_g = (V (x) W)_{g + g0}", {"g": list(g)})
    return result


def second_tensor(left: GradedSpace, right: GradedSpace, g0: GroupElement) -> GradedSpace:
    """x (x)' y = D^-1(D(y) (x) D(x)) for D = (-)^{g0}."""
    return dual_g0(tensor(dual_g0(right, g0), dual_g0(left, g0)), g0)


# Star-autonomy

@dataclass(frozen=True)
class StarAdjunction:
    """Hom_0(x (x) y, k_{g0}) <-> Hom_0(x, y^{g0}) via curry."""

    x: GradedSpace
    y: GradedSpace
    g0: GroupElement

    @cached_property
    def unit_object(self) -> GradedSpace:
        return GradedSpace.simple(self.x.group, self.g0)

    @cached_property
    def dual_y(self) -> GradedSpace:
        return dual_g0(self.y, self.g0)

    @property
    def left_dim(self) -> int:
        return tensor(self.x, self.y).dim(self.g0)

    @property
    def right_dim(self) -> int:
        return sum(a * b for a, b in zip(self.x.dims, self.dual_y.dims))

    def forward(self, f: GradedMap) -> GradedMap:
        curried = curry(f, self.x, self.y)
        # iHom(y, k_{g0}) and y^{g0} share dims and basis order
        return GradedMap(self.x, self.dual_y, curried.degree, curried.blocks)

    def backward(self, u: GradedMap) -> GradedMap:
        hom_space = internal_hom(self.y, self.unit_object)
        as_hom = GradedMap(u.source, hom_space, u.degree, u.blocks)
        return uncurry(as_hom, self.y, self.unit_object)

    def left_basis(self) -> Iterator[GradedMap]:
        return hom_basis(tensor(self.x, self.y), self.unit_object)

    def right_basis(self) -> Iterator[GradedMap]:
        return hom_basis(self.x, self.dual_y)

    def is_bijection(self) -> bool:
        if self.left_dim != self.right_dim:
            return False
        for f in self.left_basis():
            if self.backward(self.forward(f)) != f:
                return False
        for u in self.right_basis():
            if self.forward(self.backward(u)) != u:
                return False
        return True

    def naturality_holds(self, f: GradedMap, change: GradedMap) -> bool:
        """forward(f after (change (x) id_y)) = forward(f) after change, for change: x' -> x."""
        pulled = f.compose(tensor_map(change, identity_map(self.y)))
        moved = StarAdjunction(change.source, self.y, self.g0)
        return moved.forward(pulled) == self.forward(f).compose(change)


def star_adjunction_iso(x: GradedSpace, y: GradedSpace, g0: GroupElement) -> StarAdjunction:
    require_same_group("star_adjunction_iso", x.group, y.group)
    adjunction = StarAdjunction(x, y, x.group.check(g0, "g0"))
    if adjunction.left_dim != adjunction.right_dim:
        raise InvariantViolationError("dim Hom(x (x) y, k_g0) = dim Hom(x, y^g0)",
                                      {"left": adjunction.left_dim, "right": adjunction.right_dim})
    return adjunction


def hom_basis(source: GradedSpace, target: GradedSpace) -> Iterator[GradedMap]:
    """Elementary degree-0 maps, one per block entry, in coordinate order."""
    group = source.group
    for g_index in range(group.order):
        rows, cols = target.dims[g_index], source.dims[g_index]
        for r, c in itertools.product(range(rows), range(cols)):
            blocks = []
            for k in range(group.order):
                block = [[Fraction(0)] * source.dims[k] for _ in range(target.dims[k])]
                if k == g_index:
                    block[r][c] = Fraction(1)
                blocks.append(RationalMatrix.from_rows(block, cols=source.dims[k]))
            yield GradedMap(source, target, group.zero, tuple(blocks))


# Random data and the verification report

def random_space(group: FinAbGroup, max_dim: int, rng: random.Random) -> GradedSpace:
    return GradedSpace(group, tuple(rng.randint(0, max_dim) for _ in group.elements))


def random_map(source: GradedSpace, target: GradedSpace, rng: random.Random,
               degree: Optional[GroupElement] = None) -> GradedMap:
    group = source.group
    degree = group.zero if degree is None else degree
    blocks = []
    for h in group.elements:
        rows, cols = target.dim(group._add(degree, h)), source.dim(h)
        blocks.append(RationalMatrix.from_rows(
            [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)], cols=cols))
    return GradedMap(source, target, degree, tuple(blocks))


def all_spaces(group: FinAbGroup, max_dim: int) -> Iterator[GradedSpace]:
    for dims in itertools.product(range(max_dim + 1), repeat=group.order):
        yield GradedSpace(group, dims)


def verify_graded_identities(group: FinAbGroup, max_dim: int, rng: random.Random,
                             samples: int = 10, exhaustive_limit: int = 4096) -> Dict[str, Any]:
    """
    Run the graded-space identity checks.

    Dimension identities are exhaustive over all spaces with dims up to
    max_dim when there are at most exhaustive_limit of them, and sampled
    otherwise; map-level identities use seeded random maps.

    Returns:
        {"checks": {name: bool}, "counterexample": first failure or None}
    """
    checks: Dict[str, bool] = {}
    counterexample: Optional[Dict[str, Any]] = None

    def record(name: str, passed: bool, data: Dict[str, Any]) -> None:
        nonlocal counterexample
        checks[name] = checks.get(name, True) and passed
        if not passed and counterexample is None:
            counterexample = {"check": name, **data}

    prime = random_large_prime(rng)

    if (max_dim + 1) ** group.order <= exhaustive_limit:
        spaces = list(all_spaces(group, max_dim))
    else:
        spaces = [random_space(group, max_dim, rng) for _ in range(samples * 10)]

    for space in spaces:
        for g0 in group.elements:
            dual = dual_g0(space, g0)
            reindexed = all(dual.dim(g) == space.dim(group._add(g0, group._neg(g))) for g in group.elements)
            record("dual_reindexing", reindexed, {"dims": list(space.dims), "g0": list(g0)})
            record("dual_matches_internal_hom",
                   internal_hom(space, GradedSpace.simple(group, g0)) == dual,
                   {"dims": list(space.dims), "g0": list(g0)})
        g0, g1 = rng.choice(group.elements), rng.choice(group.elements)
        record("double_dual_invertible", double_dual_iso(space, g0).is_iso(),
               {"dims": list(space.dims), "g0": list(g0)})
        record("double_dual_general", double_dual_general_dims(space, g0, g1),
               {"dims": list(space.dims), "g0": list(g0), "g1": list(g1)})

    for _ in range(samples):
        v, w, u = (random_space(group, max_dim, rng) for _ in range(3))
        g0 = rng.choice(group.elements)
        try:
            tensor_g0(v, w, g0)
            record("tensor_g0_shift", True, {})
        except InvariantViolationError:
            record("tensor_g0_shift", False, {"v": list(v.dims), "w": list(w.dims), "g0": list(g0)})
        record("second_tensor_dims", second_tensor(v, w, g0) == tensor_g0(v, w, g0),
               {"v": list(v.dims), "w": list(w.dims), "g0": list(g0)})

        f = random_map(tensor(u, v), w, rng)
        record("curry_round_trip", uncurry(curry(f, u, v), v, w) == f,
               {"u": list(u.dims), "v": list(v.dims), "w": list(w.dims)})
        f_tilde = random_map(u, internal_hom(v, w), rng)
        record("uncurry_round_trip", curry(uncurry(f_tilde, v, w), u, v) == f_tilde,
               {"u": list(u.dims), "v": list(v.dims), "w": list(w.dims)})

        a, b = random_map(u, v, rng), random_map(v, w, rng)
        record("dual_contravariant",
               dual_g0_map(b.compose(a), g0) == dual_g0_map(a, g0).compose(dual_g0_map(b, g0)),
               {"u": list(u.dims), "v": list(v.dims), "w": list(w.dims), "g0": list(g0)})
        record("double_dual_natural", double_dual_naturality(a, g0),
               {"u": list(u.dims), "v": list(v.dims), "g0": list(g0)})
        blocks = [block for m in (a, b, b.compose(a), f, f_tilde) for block in m.blocks]
        record("modular_consistency", all(modular_consistency_check(block, rng, prime) for block in blocks),
               {"u": list(u.dims), "v": list(v.dims), "w": list(w.dims), "prime": prime})

        adjunction = star_adjunction_iso(u, v, g0)
        record("star_adjunction_bijective", adjunction.is_bijection(),
               {"x": list(u.dims), "y": list(v.dims), "g0": list(g0)})
        x_prime = random_space(group, max_dim, rng)
        change = random_map(x_prime, u, rng)
        f_star = random_map(tensor(u, v), adjunction.unit_object, rng)
        record("star_adjunction_natural", adjunction.naturality_holds(f_star, change),
               {"x": list(u.dims), "x_prime": list(x_prime.dims), "y": list(v.dims), "g0": list(g0)})

    logger.debug(f"Graded identity checks on {group}: {checks}")
    return {"checks": checks, "counterexample": counterexample}
