"""
Exact scalar arithmetic and exact linear algebra.

Roots of unity are stored additively as a reduced exponent in [0, 1), so
every equation between them is an equation between fractions. Rational
matrices keep Fraction entries and delegate elimination to sympy's
DomainMatrix over QQ. Linear congruences over Z/D (used by the cocycle and
witness searches) are solved by prime-power elimination plus CRT.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from sympy import GF, QQ, factorint, nextprime
from sympy.ntheory.modular import crt
from sympy.polys.matrices import DomainMatrix

from core.exceptions import DimensionMismatchError, MalformedInputError, SearchFailureError

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction, str]


def _fraction(value: Scalar, field: str = "value") -> Fraction:
    if isinstance(value, bool):
        raise MalformedInputError(field, "booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as e:
            raise MalformedInputError(field, f"not a rational: {value!r} ({e})")
    raise MalformedInputError(field, f"unsupported scalar type {type(value).__name__}")


@dataclass(frozen=True, order=True)
class RootOfUnity:
    """exp(2*pi*i*exponent) with exponent a reduced fraction in [0, 1)."""

    exponent: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, 'exponent', Fraction(self.exponent) % 1)

    @classmethod
    def of(cls, num: int, den: int = 1) -> RootOfUnity:
        return cls(Fraction(num, den))

    @classmethod
    def identity(cls) -> RootOfUnity:
        return cls(Fraction(0))

    def __mul__(self, other: RootOfUnity) -> RootOfUnity:
        return RootOfUnity(self.exponent + other.exponent)

    def __truediv__(self, other: RootOfUnity) -> RootOfUnity:
        return RootOfUnity(self.exponent - other.exponent)

    def __pow__(self, k: int) -> RootOfUnity:
        return RootOfUnity(self.exponent * k)

    def inverse(self) -> RootOfUnity:
        return RootOfUnity(-self.exponent)

    def order(self) -> int:
        return self.exponent.denominator

    def is_identity(self) -> bool:
        return self.exponent == 0

    def principal_sqrt(self) -> RootOfUnity:
        """Halve the exponent: a/N -> a/(2N)."""
        return RootOfUnity(self.exponent / 2)

    def to_json(self) -> Dict[str, int]:
        return {"num": self.exponent.numerator, "den": self.exponent.denominator}

    @classmethod
    def from_json(cls, data: Any, field: str = "root") -> RootOfUnity:
        if not isinstance(data, dict) or "num" not in data or "den" not in data:
            raise MalformedInputError(field, "expected {\"num\": a, \"den\": N}")
        num, den = data["num"], data["den"]
        if not isinstance(num, int) or not isinstance(den, int) or isinstance(num, bool) or den < 1:
            raise MalformedInputError(field, "num must be an integer and den a positive integer")
        return cls(Fraction(num, den))

    def __repr__(self) -> str:
        return f"RootOfUnity({self.exponent.numerator}/{self.exponent.denominator})"


ONE = RootOfUnity.identity()


def ru_mul(x: RootOfUnity, y: RootOfUnity) -> RootOfUnity:
    return x * y


def ru_pow(x: RootOfUnity, k: int) -> RootOfUnity:
    return x ** k


def ru_principal_sqrt(x: RootOfUnity) -> RootOfUnity:
    return x.principal_sqrt()


def ru_product(values: Iterable[RootOfUnity]) -> RootOfUnity:
    total = Fraction(0)
    for value in values:
        total += value.exponent
    return RootOfUnity(total)


@dataclass(frozen=True)
class RationalMatrix:
    """Immutable matrix of Fractions; elimination goes through DomainMatrix."""

    rows: int
    cols: int
    entries: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(row) != self.cols for row in self.entries):
            raise DimensionMismatchError("RationalMatrix", (self.rows, self.cols),
                                         (len(self.entries), len(self.entries[0]) if self.entries else 0))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]], cols: Optional[int] = None) -> RationalMatrix:
        entries = tuple(tuple(_fraction(v) for v in row) for row in rows)
        width = cols if cols is not None else (len(entries[0]) if entries else 0)
        return cls(len(entries), width, entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RationalMatrix:
        return cls(rows, cols, tuple(tuple(Fraction(0) for _ in range(cols)) for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls(n, n, tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    @classmethod
    def column(cls, values: Sequence[Scalar]) -> RationalMatrix:
        return cls.from_rows([[v] for v in values], cols=1)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i][j]

    def column_values(self, j: int) -> Tuple[Fraction, ...]:
        return tuple(row[j] for row in self.entries)

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.entries for v in row)

    # Arithmetic

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        if self.cols != other.rows:
            raise DimensionMismatchError("matmul", self.shape, other.shape)
        other_cols = [other.column_values(j) for j in range(other.cols)]
        entries = tuple(
            tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in other_cols)
            for row in self.entries
        )
        return RationalMatrix(self.rows, other.cols, entries)

    def __add__(self, other: RationalMatrix) -> RationalMatrix:
        if self.shape != other.shape:
            raise DimensionMismatchError("add", self.shape, other.shape)
        return RationalMatrix(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)))

    def __sub__(self, other: RationalMatrix) -> RationalMatrix:
        return self + other.scale(-1)

    def scale(self, factor: Scalar) -> RationalMatrix:
        c = _fraction(factor)
        return RationalMatrix(self.rows, self.cols, tuple(tuple(c * v for v in row) for row in self.entries))

    def transpose(self) -> RationalMatrix:
        return RationalMatrix(self.cols, self.rows, tuple(
            tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)))

    @property
    def T(self) -> RationalMatrix:
        return self.transpose()

    def kron(self, other: RationalMatrix) -> RationalMatrix:
        return mat_kron(self, other)

    # Elimination (DomainMatrix over QQ)

    def _to_domain(self) -> DomainMatrix:
        rows = [[QQ(v.numerator, v.denominator) for v in row] for row in self.entries]
        return DomainMatrix(rows, (self.rows, self.cols), QQ)

    @staticmethod
    def _from_domain(dm: DomainMatrix) -> RationalMatrix:
        rows, cols = dm.shape
        mat = dm.to_Matrix()
        return RationalMatrix(rows, cols, tuple(
            tuple(Fraction(int(mat[i, j].p), int(mat[i, j].q)) for j in range(cols))
            for i in range(rows)))

    def rref(self) -> Tuple[RationalMatrix, Tuple[int, ...]]:
        if self.rows == 0 or self.cols == 0:
            return self, ()
        reduced, pivots = self._to_domain().rref()
        return self._from_domain(reduced), tuple(pivots)

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        return int(self._to_domain().rank())

    def kernel(self) -> List[Tuple[Fraction, ...]]:
        return mat_kernel(self)

    def solve(self, b: Sequence[Scalar]) -> Optional[Tuple[Fraction, ...]]:
        return mat_solve(self, b)

    def is_iso(self) -> bool:
        return mat_is_iso(self)

    def inverse(self) -> RationalMatrix:
        if not self.is_iso():
            raise DimensionMismatchError("inverse of singular matrix", self.shape, self.shape)
        if self.rows == 0:
            return self
        return self._from_domain(self._to_domain().inv())

    # JSON

    def to_json(self) -> Dict[str, Any]:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[str(v) for v in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, data: Any, field: str = "matrix") -> RationalMatrix:
        if not isinstance(data, dict):
            raise MalformedInputError(field, "expected an object with rows, cols, entries")
        for key in ("rows", "cols", "entries"):
            if key not in data:
                raise MalformedInputError(f"{field}.{key}", "missing")
        rows, cols, entries = data["rows"], data["cols"], data["entries"]
        if not isinstance(entries, list) or len(entries) != rows:
            raise MalformedInputError(f"{field}.entries", f"expected {rows} rows")
        parsed = []
        for i, row in enumerate(entries):
            if not isinstance(row, list) or len(row) != cols:
                raise MalformedInputError(f"{field}.entries[{i}]", f"expected {cols} entries")
            parsed.append(tuple(_fraction(v, f"{field}.entries[{i}]") for v in row))
        return cls(rows, cols, tuple(parsed))


def mat_rank(a: RationalMatrix) -> int:
    return a.rank()


def mat_kernel(a: RationalMatrix) -> List[Tuple[Fraction, ...]]:
    """Kernel basis, one vector per free column of the RREF, ascending."""
    if a.cols == 0:
        return []
    reduced, pivots = a.rref()
    pivot_rows = {col: i for i, col in enumerate(pivots)}
    basis = []
    for free in range(a.cols):
        if free in pivot_rows:
            continue
        vector = [Fraction(0)] * a.cols
        vector[free] = Fraction(1)
        for col, i in pivot_rows.items():
            vector[col] = -reduced[i, free]
        basis.append(tuple(vector))
    return basis


def mat_solve(a: RationalMatrix, b: Sequence[Scalar]) -> Optional[Tuple[Fraction, ...]]:
    """Solve a x = b; free unknowns are set to zero. None when inconsistent."""
    rhs = [_fraction(v) for v in b]
    if len(rhs) != a.rows:
        raise DimensionMismatchError("solve", a.shape, (len(rhs), 1))
    if a.cols == 0:
        return () if all(v == 0 for v in rhs) else None
    augmented = RationalMatrix(a.rows, a.cols + 1, tuple(
        row + (value,) for row, value in zip(a.entries, rhs)))
    reduced, pivots = augmented.rref()
    if a.cols in pivots:
        return None
    solution = [Fraction(0)] * a.cols
    for i, col in enumerate(pivots):
        solution[col] = reduced[i, a.cols]
    return tuple(solution)


def mat_is_iso(a: RationalMatrix) -> bool:
    return a.rows == a.cols and a.rank() == a.rows


def mat_kron(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    entries = tuple(
        tuple(a.entries[i][j] * b.entries[k][l] for j in range(a.cols) for l in range(b.cols))
        for i in range(a.rows) for k in range(b.rows)
    )
    return RationalMatrix(a.rows * b.rows, a.cols * b.cols, entries)


def mat_dsum(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    zero = Fraction(0)
    top = tuple(row + (zero,) * b.cols for row in a.entries)
    bottom = tuple((zero,) * a.cols + row for row in b.entries)
    return RationalMatrix(a.rows + b.rows, a.cols + b.cols, top + bottom)


def mat_mul(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    return a @ b


def apply(a: RationalMatrix, vector: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    if len(vector) != a.cols:
        raise DimensionMismatchError("apply", a.shape, (len(vector), 1))
    return tuple(sum((x * y for x, y in zip(row, vector)), Fraction(0)) for row in a.entries)


# Modular consistency oracle

def random_large_prime(rng: random.Random) -> int:
    return int(nextprime(rng.randrange(2 ** 40, 2 ** 41)))


def _to_residue(value: Fraction, p: int) -> int:
    return value.numerator * pow(value.denominator, -1, p) % p


def modular_rank(a: RationalMatrix, p: int) -> int:
    """Rank of a reduced mod p (entries must have denominators prime to p)."""
    if a.rows == 0 or a.cols == 0:
        return 0
    field = GF(p)
    rows = [[field(_to_residue(v, p)) for v in row] for row in a.entries]
    return int(DomainMatrix(rows, a.shape, field).rank())


def modular_consistency_check(a: RationalMatrix, rng: random.Random, prime: Optional[int] = None) -> bool:
    """
    Reproduce rank and kernel of a at one random large prime.

    Args:
        a: Matrix to check
        rng: Source for the prime when none is given
        prime: Fixed prime shared by a batch of checks

    Returns:
        True when the modular rank equals the exact rank and every exact
        kernel vector is annihilated mod p
    """
    p = prime if prime is not None else random_large_prime(rng)
    if any(v.denominator % p == 0 for row in a.entries for v in row):
        logger.debug(f"Prime {p} divides a denominator, skipping modular check")
        return True
    exact_rank = a.rank()
    if modular_rank(a, p) != exact_rank:
        logger.warning(f"Modular rank disagrees with exact rank at prime {p}")
        return False
    for vector in a.kernel():
        image = apply(a, vector)
        if any(_to_residue(v, p) for v in image):
            return False
    return True


# Linear congruences over Z/D

def _valuation(value: int, p: int) -> int:
    v = 0
    while value % p == 0:
        value //= p
        v += 1
    return v


class _PrimePowerEliminator:
    """Echelon form over Z/p^e with closure rows, built incrementally."""

    def __init__(self, p: int, e: int):
        self.p = p
        self.e = e
        self.q = p ** e
        self.pivots: Dict[int, Tuple[Dict[int, int], int, int]] = {}
        self.consistent = True

    def _reduce(self, row: Dict[int, int], rhs: int) -> Tuple[Dict[int, int], int]:
        q = self.q
        return {c: a % q for c, a in row.items() if a % q}, rhs % q

    def insert(self, row: Dict[int, int], rhs: int) -> None:
        pending = [(row, rhs)]
        while pending and self.consistent:
            current, b = self._reduce(*pending.pop())
            while True:
                if not current:
                    if b:
                        self.consistent = False
                    break
                col = min(current)
                lead = current[col]
                v = _valuation(lead, self.p)
                unit_inv = pow(lead // self.p ** v, -1, self.q)
                current, b = self._reduce({c: a * unit_inv for c, a in current.items()}, b * unit_inv)
                if col not in self.pivots:
                    self.pivots[col] = (current, b, v)
                    if v > 0:
                        factor = self.p ** (self.e - v)
                        pending.append(({c: a * factor for c, a in current.items()}, b * factor))
                    break
                prow, pb, pv = self.pivots[col]
                if v < pv:
                    self.pivots[col] = (current, b, v)
                    if v > 0:
                        factor = self.p ** (self.e - v)
                        pending.append(({c: a * factor for c, a in current.items()}, b * factor))
                    current, b, v = prow, pb, pv
                    prow, pb, pv = self.pivots[col]
                factor = self.p ** (v - pv)
                merged = dict(current)
                for c, a in prow.items():
                    merged[c] = merged.get(c, 0) - factor * a
                current, b = self._reduce(merged, b - factor * pb)

    def solution(self, num_vars: int) -> Optional[List[int]]:
        if not self.consistent:
            return None
        x = [0] * num_vars
        for col in sorted(self.pivots, reverse=True):
            row, b, v = self.pivots[col]
            t = (b - sum(a * x[c] for c, a in row.items() if c != col)) % self.q
            if t % (self.p ** v):
                return None
            x[col] = (t // self.p ** v) % (self.p ** (self.e - v))
        return x


def solve_mod(rows: Sequence[Dict[int, int]], rhs: Sequence[int], modulus: int,
              num_vars: int) -> Optional[List[int]]:
    """
    Solve the sparse system sum_j rows[i][j] * x_j = rhs[i] (mod modulus).

    Args:
        rows: One {variable index: integer coefficient} dict per equation
        rhs: Right-hand sides
        modulus: D >= 1
        num_vars: Number of unknowns

    Returns:
        Canonical solution with entries in [0, D) (free unknowns are 0 in
        every prime-power component), or None if the system is inconsistent

    Raises:
        SearchFailureError: If the computed solution fails certification
    """
    if len(rows) != len(rhs):
        raise DimensionMismatchError("solve_mod", (len(rows), num_vars), (len(rhs), 1))
    if modulus == 1:
        return [0] * num_vars

    moduli: List[int] = []
    residues: List[List[int]] = []
    for p, e in sorted(factorint(modulus).items()):
        eliminator = _PrimePowerEliminator(int(p), int(e))
        for row, b in zip(rows, rhs):
            eliminator.insert(row, b)
            if not eliminator.consistent:
                logger.debug(f"Inconsistent congruence system modulo {p}^{e}")
                return None
        part = eliminator.solution(num_vars)
        if part is None:
            return None
        moduli.append(eliminator.q)
        residues.append(part)

    if len(moduli) == 1:
        solution = residues[0]
    else:
        solution = []
        for j in range(num_vars):
            value, _ = crt(moduli, [part[j] for part in residues])
            solution.append(int(value) % modulus)

    for i, (row, b) in enumerate(zip(rows, rhs)):
        if (sum(a * solution[c] for c, a in row.items()) - b) % modulus:
            raise SearchFailureError("solve_mod", f"solution fails equation {i}")
    return solution
