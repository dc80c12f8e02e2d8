"""
Finite-dimensional Chu pairs over the rationals.

A pair (V, W, <-,->) is stored as its pairing matrix B, <v, w> = v^T B w.
Morphisms (f, g): (V1, W1) -> (V2, W2) satisfy f^T B2 = B1 g. Hom spaces
are kernels of that linear system; the internal hom pairs Hom(P, Q) with
V1 (x) W2 in the Kronecker basis, and the tensor product is defined from
it through duality.
"""
from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from algebra.exact import RationalMatrix, mat_kernel, modular_consistency_check, random_large_prime
from core.exceptions import DimensionMismatchError, InvariantViolationError, MalformedInputError, SearchFailureError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChuPair:
    """(V, W, <-,->) with pairing of shape dim_v x dim_w."""

    dim_v: int
    dim_w: int
    pairing: RationalMatrix

    def __post_init__(self):
        if self.pairing.shape != (self.dim_v, self.dim_w):
            raise DimensionMismatchError("ChuPair", (self.dim_v, self.dim_w), self.pairing.shape)

    @classmethod
    def from_matrix(cls, pairing: RationalMatrix) -> ChuPair:
        return cls(pairing.rows, pairing.cols, pairing)

    def is_separated(self) -> bool:
        """V -> W* is injective."""
        return self.pairing.rank() == self.dim_v

    def is_extensional(self) -> bool:
        """W -> V* is injective."""
        return self.pairing.rank() == self.dim_w

    def is_valid(self) -> bool:
        return self.is_separated() and self.is_extensional()

    def to_json(self) -> Dict[str, Any]:
        return {"dimV": self.dim_v, "dimW": self.dim_w, "pairing": self.pairing.to_json()}

    @classmethod
    def from_json(cls, data: Any, field: str = "pair") -> ChuPair:
        if not isinstance(data, dict) or not {"dimV", "dimW", "pairing"} <= set(data):
            raise MalformedInputError(field, "expected {\"dimV\": a, \"dimW\": b, \"pairing\": matrix}")
        pairing = RationalMatrix.from_json(data["pairing"], f"{field}.pairing")
        if pairing.shape != (data["dimV"], data["dimW"]):
            raise MalformedInputError(f"{field}.pairing", f"shape {pairing.shape} does not match dimV x dimW")
        return cls(data["dimV"], data["dimW"], pairing)


def is_valid(pair: ChuPair) -> bool:
    return pair.is_valid()


def unit_pair() -> ChuPair:
    """k = (k, k, multiplication)."""
    return ChuPair(1, 1, RationalMatrix.identity(1))


@dataclass(frozen=True)
class ChuMorphism:
    """(f, g) with f: V1 -> V2 and g: W2 -> W1."""

    source: ChuPair
    target: ChuPair
    f: RationalMatrix
    g: RationalMatrix

    def __post_init__(self):
        if self.f.shape != (self.target.dim_v, self.source.dim_v):
            raise DimensionMismatchError("ChuMorphism.f", (self.target.dim_v, self.source.dim_v), self.f.shape)
        if self.g.shape != (self.source.dim_w, self.target.dim_w):
            raise DimensionMismatchError("ChuMorphism.g", (self.source.dim_w, self.target.dim_w), self.g.shape)

    def is_morphism(self) -> bool:
        """<f(v), w>_2 = <v, g(w)>_1, i.e. f^T B2 = B1 g."""
        return self.f.T @ self.target.pairing == self.source.pairing @ self.g

    def compose(self, other: ChuMorphism) -> ChuMorphism:
        """self after other."""
        if other.target != self.source:
            raise DimensionMismatchError("compose", other.target.pairing.shape, self.source.pairing.shape)
        return ChuMorphism(other.source, self.target, self.f @ other.f, other.g @ self.g)

    def is_iso(self) -> bool:
        return self.f.is_iso() and self.g.is_iso()

    def coordinates(self) -> Tuple[Fraction, ...]:
        """Entries of f, row-major."""
        return tuple(v for row in self.f.entries for v in row)

    def to_json(self) -> Dict[str, Any]:
        return {"f": self.f.to_json(), "g": self.g.to_json()}


def identity_morphism(pair: ChuPair) -> ChuMorphism:
    return ChuMorphism(pair, pair, RationalMatrix.identity(pair.dim_v), RationalMatrix.identity(pair.dim_w))


def compose_morphisms(second: ChuMorphism, first: ChuMorphism) -> ChuMorphism:
    return second.compose(first)


def morphism_from_f(source: ChuPair, target: ChuPair, f: RationalMatrix) -> ChuMorphism:
    """The unique (f, g) with g = B1^-1 f^T B2; needs an invertible source pairing."""
    if not source.pairing.is_iso():
        raise InvariantViolationError("source pairing is invertible", {"pair": source.to_json()})
    g = source.pairing.inverse() @ f.T @ target.pairing
    return ChuMorphism(source, target, f, g)


# Duality

def dual(pair: ChuPair) -> ChuPair:
    """(W, V, <-,-> o swap)."""
    return ChuPair(pair.dim_w, pair.dim_v, pair.pairing.T)


def dual_morphism(m: ChuMorphism) -> ChuMorphism:
    """(f, g)* = (g, f): Q* -> P*."""
    return ChuMorphism(dual(m.target), dual(m.source), m.g, m.f)


# Hom spaces

def hom_space(source: ChuPair, target: ChuPair) -> List[ChuMorphism]:
    """
    Basis of all (f, g) with f^T B2 = B1 g.

    Unknowns are ordered g first, then f (both row-major), so for an
    extensional source the free parameters are exactly the entries of f.
    """
    v1, w1 = source.dim_v, source.dim_w
    v2, w2 = target.dim_v, target.dim_w
    g_count = w1 * w2
    num_vars = g_count + v2 * v1
    b1, b2 = source.pairing, target.pairing

    rows = []
    for i, j in itertools.product(range(v1), range(w2)):
        row = [Fraction(0)] * num_vars
        # (f^T B2)[i][j] = sum_k f[k][i] B2[k][j]
        for k in range(v2):
            row[g_count + k * v1 + i] += b2[k, j]
        # (B1 g)[i][j] = sum_k B1[i][k] g[k][j]
        for k in range(w1):
            row[k * w2 + j] -= b1[i, k]
        rows.append(row)

    system = RationalMatrix.from_rows(rows, cols=num_vars)
    basis = []
    for vector in mat_kernel(system):
        g = RationalMatrix.from_rows(
            [vector[k * w2:(k + 1) * w2] for k in range(w1)], cols=w2)
        f = RationalMatrix.from_rows(
            [vector[g_count + k * v1:g_count + (k + 1) * v1] for k in range(v2)], cols=v1)
        basis.append(ChuMorphism(source, target, f, g))
    logger.debug(f"Hom space {source.pairing.shape} -> {target.pairing.shape} has dimension {len(basis)}")
    return basis


def hom_coordinates(m: ChuMorphism) -> Tuple[Fraction, ...]:
    """Coordinates of m in the hom_space basis (valid source pairs)."""
    return m.coordinates()


def internal_hom(source: ChuPair, target: ChuPair) -> ChuPair:
    """
    (Hom(P, Q), V1 (x) W2, <(f, g), v (x) w> = <f(v), w>_2).

    Raises:
        SearchFailureError: If the assembled pair is not valid for valid inputs
    """
    basis = hom_space(source, target)
    w2 = target.dim_w
    entries = []
    for m in basis:
        paired = m.f.T @ target.pairing
        entries.append([paired[i, j] for i in range(source.dim_v) for j in range(w2)])
    result = ChuPair(len(basis), source.dim_v * w2,
                     RationalMatrix.from_rows(entries, cols=source.dim_v * w2))
    if source.is_valid() and target.is_valid() and not result.is_valid():
        raise SearchFailureError("internal_hom", "internal hom of valid pairs is not valid",
                                 {"source": source.to_json(), "target": target.to_json()})
    return result


def tensor(left: ChuPair, right: ChuPair) -> ChuPair:
    """P (x) Q = Hom(P, Q*)*; its first component is V_P (x) V_Q in the Kronecker basis."""
    return dual(internal_hom(left, dual(right)))


def internal_hom_map(m1: ChuMorphism, m2: ChuMorphism) -> ChuMorphism:
    """
    Hom(m1, m2): iHom(P, Q) -> iHom(P', Q') for m1: P' -> P and m2: Q -> Q'.

    On first components h -> m2 h m1 (coordinates of the f-part); on second
    components V_P' (x) W_Q' -> V_P (x) W_Q by m1.f (x) m2.g.
    """
    source = internal_hom(m1.target, m2.source)
    target = internal_hom(m1.source, m2.target)
    columns = []
    for h in hom_space(m1.target, m2.source):
        moved = m2.f @ h.f @ m1.f
        columns.append([v for row in moved.entries for v in row])
    f = RationalMatrix.from_rows(
        [[column[r] for column in columns] for r in range(target.dim_v)], cols=source.dim_v)
    g = m1.f.kron(m2.g)
    return ChuMorphism(source, target, f, g)


# Canonical isomorphisms

def _permutation(size: int, image: Callable[[int], int]) -> RationalMatrix:
    """Matrix sending basis vector i to basis vector image(i)."""
    entries = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        entries[image(i)][i] = Fraction(1)
    return RationalMatrix.from_rows(entries, cols=size)


def _swap_kron(first: int, second: int) -> RationalMatrix:
    """A (x) B -> B (x) A on Kronecker bases."""
    return _permutation(first * second, lambda i: (i % second) * first + i // second)


def _certified(source: ChuPair, target: ChuPair, f: RationalMatrix, g: RationalMatrix) -> Optional[ChuMorphism]:
    """The pair (f, g) if it is an invertible Chu morphism."""
    try:
        m = ChuMorphism(source, target, f, g)
    except DimensionMismatchError:
        return None
    return m if m.is_morphism() and m.is_iso() else None


def unit_internal_hom_iso(pair: ChuPair) -> Optional[ChuMorphism]:
    """iHom(k, X) -> X, identity on both components."""
    ihom = internal_hom(unit_pair(), pair)
    return _certified(ihom, pair, RationalMatrix.identity(pair.dim_v), RationalMatrix.identity(pair.dim_w))


def exchange_iso(u: ChuPair, v: ChuPair, w: ChuPair) -> Optional[ChuMorphism]:
    """iHom(U, iHom(V, W)) -> iHom(V, iHom(U, W)) exchanging the U and V slots."""
    du, dv, dw = u.dim_v, v.dim_v, w.dim_v
    source = internal_hom(u, internal_hom(v, w))
    target = internal_hom(v, internal_hom(u, w))

    def first(i: int) -> int:
        a, x = divmod(i, du)
        r, c = divmod(a, dv)
        return (r * du + x) * dv + c

    dww = w.dim_w

    def second(i: int) -> int:
        c, rest = divmod(i, du * dww)
        x, s = divmod(rest, dww)
        return (x * dv + c) * dww + s

    return _certified(source, target,
                      _permutation(source.dim_v, first),
                      _permutation(target.dim_w, second))


def transpose_iso(v: ChuPair, w: ChuPair) -> Optional[ChuMorphism]:
    """iHom(V, W) -> iHom(W*, V*), (f, g) -> (g, f)."""
    source = internal_hom(v, w)
    target = internal_hom(dual(w), dual(v))
    columns = [[x for row in m.g.entries for x in row] for m in hom_space(v, w)]
    f = RationalMatrix.from_rows(
        [[column[r] for column in columns] for r in range(target.dim_v)], cols=source.dim_v)
    g = _swap_kron(w.dim_w, v.dim_v)
    return _certified(source, target, f, g)


def dual_functional_iso(pair: ChuPair) -> Optional[ChuMorphism]:
    """V* -> iHom(V, k), w -> <-, w>."""
    source = dual(pair)
    target = internal_hom(pair, unit_pair())
    return _certified(source, target, pair.pairing, RationalMatrix.identity(pair.dim_v))


def tensor_symmetry(left: ChuPair, right: ChuPair) -> Optional[ChuMorphism]:
    """P (x) Q -> Q (x) P: Kronecker swap on V, h -> h* on the hom component."""
    source = tensor(left, right)
    target = tensor(right, left)
    f = _swap_kron(left.dim_v, right.dim_v)
    # g sends Hom(Q, P*) to Hom(P, Q*) by dualizing
    columns = [list(dual_morphism(h).coordinates()) for h in hom_space(right, dual(left))]
    g = RationalMatrix.from_rows(
        [[column[r] for column in columns] for r in range(source.dim_w)], cols=target.dim_w)
    return _certified(source, target, f, g)


def tensor_associator(u: ChuPair, v: ChuPair, w: ChuPair) -> Optional[ChuMorphism]:
    """(U (x) V) (x) W -> U (x) (V (x) W), identity on Kronecker coordinates."""
    source = tensor(tensor(u, v), w)
    target = tensor(u, tensor(v, w))
    if source.dim_v != target.dim_v or not source.pairing.is_iso():
        return None
    m = morphism_from_f(source, target, RationalMatrix.identity(source.dim_v))
    return m if m.is_morphism() and m.is_iso() else None


def tensor_unit_iso(pair: ChuPair) -> Optional[ChuMorphism]:
    """k (x) P -> P, identity on V."""
    source = tensor(unit_pair(), pair)
    if source.dim_v != pair.dim_v or not source.pairing.is_iso():
        return None
    m = morphism_from_f(source, pair, RationalMatrix.identity(pair.dim_v))
    return m if m.is_morphism() and m.is_iso() else None


def double_dual_unit(pair: ChuPair) -> Optional[ChuMorphism]:
    """V -> iHom(iHom(V, k), k), v -> evaluation at v."""
    target = internal_hom(internal_hom(pair, unit_pair()), unit_pair())
    if target.dim_v != pair.dim_v or not pair.pairing.is_iso():
        return None
    m = morphism_from_f(pair, target, RationalMatrix.identity(pair.dim_v))
    return m if m.is_morphism() and m.is_iso() else None


# Tensor-hom adjunction

def curry_chu(m: ChuMorphism, u: ChuPair, v: ChuPair, w: ChuPair) -> ChuMorphism:
    """Hom(U (x) V, W) -> Hom(U, iHom(V, W)), f~[(r, c)][x] = f[r][(x, c)]."""
    du, dv, dw = u.dim_v, v.dim_v, w.dim_v
    f = RationalMatrix.from_rows(
        [[m.f[a // dv, x * dv + a % dv] for x in range(du)] for a in range(dw * dv)], cols=du)
    return morphism_from_f(u, internal_hom(v, w), f)


def uncurry_chu(m: ChuMorphism, u: ChuPair, v: ChuPair, w: ChuPair) -> ChuMorphism:
    du, dv, dw = u.dim_v, v.dim_v, w.dim_v
    f = RationalMatrix.from_rows(
        [[m.f[r * dv + col % dv, col // dv] for col in range(du * dv)] for r in range(dw)], cols=du * dv)
    return morphism_from_f(tensor(u, v), w, f)


def tensor_morphism(m1: ChuMorphism, m2: ChuMorphism) -> ChuMorphism:
    """m1 (x) m2 on the V components, Kronecker basis."""
    return morphism_from_f(tensor(m1.source, m2.source), tensor(m1.target, m2.target), m1.f.kron(m2.f))


def adjunction_holds(u: ChuPair, v: ChuPair, w: ChuPair, rng: random.Random) -> Dict[str, bool]:
    """curry is a bijection Hom(U (x) V, W) -> Hom(U, iHom(V, W)), natural in U."""
    tensor_uv = tensor(u, v)
    left = hom_space(tensor_uv, w)
    right = hom_space(u, internal_hom(v, w))
    round_trip = all(uncurry_chu(curry_chu(m, u, v, w), u, v, w) == m for m in left)
    round_trip = round_trip and all(curry_chu(uncurry_chu(m, u, v, w), u, v, w) == m for m in right)
    morphisms_ok = all(curry_chu(m, u, v, w).is_morphism() for m in left)

    u_prime = random_valid_pair(rng, max(1, u.dim_v))
    change = morphism_from_f(u_prime, u, _random_matrix(rng, u.dim_v, u_prime.dim_v))
    f = morphism_from_f(tensor_uv, w, _random_matrix(rng, w.dim_v, tensor_uv.dim_v))
    lhs = curry_chu(f.compose(tensor_morphism(change, identity_morphism(v))), u_prime, v, w)
    rhs = curry_chu(f, u, v, w).compose(change)
    return {
        "dimensions": len(left) == len(right),
        "round_trip": round_trip,
        "morphisms": morphisms_ok,
        "natural": lhs == rhs,
    }


# Random pairs and the verification report

def _random_matrix(rng: random.Random, rows: int, cols: int) -> RationalMatrix:
    return RationalMatrix.from_rows([[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)], cols=cols)


def random_valid_pair(rng: random.Random, max_dim: int) -> ChuPair:
    """Square pairing with invertible integer matrix; dimension in [1, max_dim]."""
    d = rng.randint(1, max_dim)
    while True:
        candidate = _random_matrix(rng, d, d)
        if candidate.is_iso():
            return ChuPair(d, d, candidate)


def verify_identities(u: ChuPair, v: ChuPair, w: ChuPair, rng: random.Random) -> Dict[str, Any]:
    """
    Certify the star-autonomous identities on three valid pairs.

    Returns:
        {"checks": {name: bool}, "counterexample": first failing check or None}
    """
    for name, pair in (("u", u), ("v", v), ("w", w)):
        if not pair.is_valid():
            raise InvariantViolationError(f"pair {name} is separated and extensional", {"pair": pair.to_json()})

    adjunction = adjunction_holds(u, v, w, rng)
    u_prime = random_valid_pair(rng, max(1, u.dim_v))
    u_second = random_valid_pair(rng, max(1, u.dim_v))
    a1 = morphism_from_f(u_prime, u, _random_matrix(rng, u.dim_v, u_prime.dim_v))
    a2 = morphism_from_f(u_second, u_prime, _random_matrix(rng, u_prime.dim_v, u_second.dim_v))
    w_prime = random_valid_pair(rng, max(1, w.dim_v))
    b1 = morphism_from_f(v, w, _random_matrix(rng, w.dim_v, v.dim_v))
    b2 = morphism_from_f(w, w_prime, _random_matrix(rng, w_prime.dim_v, w.dim_v))
    functorial = (
        internal_hom_map(a1.compose(a2), b2.compose(b1))
        == internal_hom_map(a2, b2).compose(internal_hom_map(a1, b1))
    )
    ihom_map_ok = internal_hom_map(a1, b1).is_morphism()
    prime = random_large_prime(rng)
    matrices = [p.pairing for p in (u, v, w, internal_hom(v, w), tensor(u, v))]
    matrices += [m.f for m in (a1, a2, b1, b2)] + [m.g for m in (a1, a2, b1, b2)]
    modular_ok = all(modular_consistency_check(m, rng, prime) for m in matrices)

    checks = {
        "dual_involution": dual(dual(u)) == u and dual_morphism(dual_morphism(a1)) == a1,
        "internal_hom_valid": all(internal_hom(p, q).is_valid() for p, q in ((u, v), (v, w), (u, w))),
        "unit_internal_hom": (
            len(hom_space(unit_pair(), internal_hom(v, w))) == len(hom_space(v, w))
            and unit_internal_hom_iso(internal_hom(v, w)) is not None
            and unit_internal_hom_iso(u) is not None
        ),
        "exchange": exchange_iso(u, v, w) is not None,
        "transpose": transpose_iso(v, w) is not None,
        "dual_functional": dual_functional_iso(u) is not None,
        "tensor_adjunction": all(adjunction.values()),
        "tensor_symmetry": tensor_symmetry(u, v) is not None,
        "tensor_associator": tensor_associator(u, v, w) is not None,
        "tensor_unit": tensor_unit_iso(u) is not None,
        "double_dual_unit": double_dual_unit(u) is not None,
        "internal_hom_functorial": functorial and ihom_map_ok,
        "modular_consistency": modular_ok,
    }
    failed = [name for name, passed in checks.items() if not passed]
    counterexample = None
    if failed:
        counterexample = {"check": failed[0], "u": u.to_json(), "v": v.to_json(), "w": w.to_json()}
    return {"checks": checks, "counterexample": counterexample}
