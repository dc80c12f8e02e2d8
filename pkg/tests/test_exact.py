"""
Tests for algebra.exact
"""
import random
from fractions import Fraction

import pytest

from algebra.exact import (
    ONE, RationalMatrix, RootOfUnity, apply, mat_dsum, mat_kernel, mat_kron, mat_solve,
    modular_consistency_check, modular_rank, ru_product, solve_mod,
)
from core.exceptions import DimensionMismatchError, MalformedInputError


class TestRootOfUnity:
    """Exact roots of unity as exponents in [0, 1)."""

    def test_exponent_is_reduced(self):
        """Test reduction modulo 1 and to lowest terms."""
        assert RootOfUnity.of(3, 2) == RootOfUnity.of(1, 2)
        assert RootOfUnity.of(-1, 4) == RootOfUnity.of(3, 4)
        assert RootOfUnity.of(2, 6).order() == 3

    def test_group_operations(self):
        """Test product, quotient, power and inverse."""
        x = RootOfUnity.of(1, 4)
        assert x * RootOfUnity.of(3, 4) == ONE
        assert (x ** 4).is_identity()
        assert x / x == ONE
        assert x.inverse() == RootOfUnity.of(3, 4)
        assert ru_product([x, x, x]) == RootOfUnity.of(3, 4)

    def test_principal_sqrt(self):
        """Test that the principal square root halves the exponent."""
        assert RootOfUnity.of(1, 2).principal_sqrt() == RootOfUnity.of(1, 4)
        assert RootOfUnity.of(1, 3).principal_sqrt() ** 2 == RootOfUnity.of(1, 3)

    def test_json(self):
        """Test the {num, den} encoding."""
        assert RootOfUnity.of(2, 6).to_json() == {"num": 1, "den": 3}
        assert RootOfUnity.from_json({"num": 5, "den": 4}) == RootOfUnity.of(1, 4)

    @pytest.mark.parametrize("data", [
        {"num": 1},
        {"num": 1, "den": 0},
        {"num": "1", "den": 2},
        [1, 2],
    ])
    def test_json_rejects_malformed(self, data):
        """Test that malformed roots raise MalformedInputError."""
        with pytest.raises(MalformedInputError):
            RootOfUnity.from_json(data)


class TestRationalMatrix:
    """Exact rational matrices."""

    def test_arithmetic(self):
        """Test product, sum and transpose."""
        a = RationalMatrix.from_rows([[1, 2], [3, 4]])
        assert a @ RationalMatrix.identity(2) == a
        assert a + a == a.scale(2)
        assert (a - a).is_zero()
        assert a.T[0, 1] == 3

    def test_string_entries(self):
        """Test that rationals may be given as strings."""
        a = RationalMatrix.from_rows([["1/2", "3"]])
        assert a[0, 0] == Fraction(1, 2)
        assert a.shape == (1, 2)

    def test_inverse(self):
        """Test exact inversion."""
        a = RationalMatrix.from_rows([[1, 2], [3, 4]])
        inverse = a.inverse()

        assert inverse == RationalMatrix.from_rows([[-2, 1], ["3/2", "-1/2"]])
        assert a @ inverse == RationalMatrix.identity(2)
        assert a.is_iso()

    def test_singular(self):
        """Test rank, kernel and solve on a singular matrix."""
        b = RationalMatrix.from_rows([[1, 2], [2, 4]])

        assert b.rank() == 1
        assert not b.is_iso()
        assert mat_kernel(b) == [(Fraction(-2), Fraction(1))]
        assert mat_solve(b, [3, 6]) == (Fraction(3), Fraction(0))
        assert mat_solve(b, [1, 0]) is None
        with pytest.raises(DimensionMismatchError):
            b.inverse()

    def test_kernel_vectors_are_annihilated(self):
        """Test that every kernel vector maps to zero."""
        c = RationalMatrix.from_rows([[1, 1, 0, 2], [0, 1, 1, 1]])
        kernel = c.kernel()

        assert len(kernel) == 2
        for vector in kernel:
            assert all(v == 0 for v in apply(c, vector))

    def test_shape_mismatch(self):
        """Test that incompatible shapes raise."""
        with pytest.raises(DimensionMismatchError):
            RationalMatrix.from_rows([[1, 2]]) @ RationalMatrix.from_rows([[1, 2]])
        with pytest.raises(DimensionMismatchError):
            mat_solve(RationalMatrix.identity(2), [1])

    def test_kron_and_dsum(self):
        """Test Kronecker product and direct sum layouts."""
        a = RationalMatrix.from_rows([[1, 2], [3, 4]])
        k = mat_kron(RationalMatrix.identity(2), a)

        assert k.shape == (4, 4)
        assert k[2, 3] == 2
        assert k[0, 2] == 0
        assert mat_dsum(a, RationalMatrix.identity(1)).shape == (3, 3)

    def test_json(self):
        """Test that entries are encoded as strings."""
        a = RationalMatrix.from_rows([["1/2", 0]])
        data = a.to_json()

        assert data == {"rows": 1, "cols": 2, "entries": [["1/2", "0"]]}
        assert RationalMatrix.from_json(data) == a

    def test_json_rejects_ragged_rows(self):
        """Test that the declared shape is enforced."""
        with pytest.raises(MalformedInputError):
            RationalMatrix.from_json({"rows": 2, "cols": 1, "entries": [["1"]]})


class TestModularOracle:
    """Rank and kernel reproduced at a random large prime."""

    def test_modular_rank_matches(self):
        """Test modular rank on an integer matrix."""
        a = RationalMatrix.from_rows([[1, 2], [2, 4]])
        assert modular_rank(a, 101) == 1

    def test_consistency_check(self):
        """Test the oracle on a rational matrix with a kernel."""
        a = RationalMatrix.from_rows([["1/2", 1, 0], [1, 2, 0]])
        assert modular_consistency_check(a, random.Random(0))

    @pytest.mark.parametrize("shape", [(0, 3), (2, 0), (0, 0)])
    def test_empty_matrices(self, shape):
        """Test that empty shapes are consistent."""
        assert modular_consistency_check(RationalMatrix.zeros(*shape), random.Random(0))

    def test_shared_prime(self):
        """Test that a fixed prime is used instead of drawing one."""
        a = RationalMatrix.from_rows([[1, 0], [0, 5]])
        assert modular_consistency_check(a, random.Random(0), prime=7)
        assert not modular_consistency_check(a, random.Random(0), prime=5)


class TestSolveMod:
    """Sparse linear congruences."""

    def test_prime_modulus(self):
        """Test a unique solution modulo 5."""
        assert solve_mod([{0: 1, 1: 1}, {0: 1, 1: -1}], [3, 1], 5, 2) == [2, 1]

    def test_prime_power_modulus(self):
        """Test a non-unit coefficient modulo 4."""
        assert solve_mod([{0: 2}], [2], 4, 1) == [1]
        assert solve_mod([{0: 2}], [1], 4, 1) is None

    def test_composite_modulus(self):
        """Test CRT recombination with a free component."""
        assert solve_mod([{0: 3}], [3], 6, 1) == [3]

    def test_trivial_modulus(self):
        """Test that modulus 1 gives the zero solution."""
        assert solve_mod([{0: 1}], [1], 1, 2) == [0, 0]

    def test_length_mismatch(self):
        """Test that rows and right-hand sides must agree."""
        with pytest.raises(DimensionMismatchError):
            solve_mod([{0: 1}], [], 5, 1)
