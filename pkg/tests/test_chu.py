"""
Tests for algebra.chu
"""
import random

import pytest

from algebra.chu import (
    ChuMorphism, ChuPair, dual, dual_functional_iso, dual_morphism, exchange_iso, hom_space,
    identity_morphism, internal_hom, is_valid, morphism_from_f, random_valid_pair, tensor,
    tensor_symmetry, tensor_unit_iso, transpose_iso, unit_internal_hom_iso, unit_pair, verify_identities,
)
from algebra.exact import RationalMatrix
from core.exceptions import DimensionMismatchError, InvariantViolationError, MalformedInputError


def identity_pair(n):
    return ChuPair(n, n, RationalMatrix.identity(n))


class TestValidity:
    """Separation and extensionality."""

    def test_identity_pairing(self):
        """Test the identity pairing in dimension 2."""
        assert is_valid(identity_pair(2))

    def test_zero_row(self):
        """Test that a zero row breaks separation."""
        pair = ChuPair(2, 2, RationalMatrix.from_rows([[1, 0], [0, 0]]))
        assert not pair.is_separated()
        assert not is_valid(pair)

    def test_tall_pairing(self):
        """Test a 3x2 pairing of rank 2."""
        pair = ChuPair(3, 2, RationalMatrix.from_rows([[1, 0], [0, 0], [0, 1]]))
        assert pair.is_extensional()
        assert not pair.is_separated()
        assert not is_valid(pair)

    def test_shape_checked(self):
        """Test that the pairing must be dimV x dimW."""
        with pytest.raises(DimensionMismatchError):
            ChuPair(2, 3, RationalMatrix.identity(2))

    def test_json(self):
        """Test pair encoding and shape validation."""
        pair = ChuPair(2, 2, RationalMatrix.from_rows([[1, 2], [3, 4]]))
        assert ChuPair.from_json(pair.to_json()) == pair

        with pytest.raises(MalformedInputError):
            ChuPair.from_json({"dimV": 1, "dimW": 2, "pairing": RationalMatrix.identity(2).to_json()})
        with pytest.raises(MalformedInputError):
            ChuPair.from_json({"dimV": 1})


class TestDuality:
    """Swapping the two components."""

    def test_dual_of_unit(self):
        """Test k* = k."""
        assert dual(unit_pair()) == unit_pair()

    def test_involution(self):
        """Test dual(dual(p)) = p on a non-square pair."""
        pair = ChuPair(3, 2, RationalMatrix.from_rows([[1, 2], [0, 1], [5, -1]]))
        assert dual(pair).pairing.shape == (2, 3)
        assert dual(dual(pair)) == pair

    def test_dual_morphism_keeps_validity(self, rng):
        """Test that (g, f) is a morphism of duals exactly when (f, g) is."""
        p, q = random_valid_pair(rng, 2), random_valid_pair(rng, 2)
        m = morphism_from_f(p, q, RationalMatrix.from_rows([[1] * p.dim_v for _ in range(q.dim_v)]))

        assert m.is_morphism()
        assert dual_morphism(m).is_morphism()
        assert dual_morphism(dual_morphism(m)) == m

        broken = ChuMorphism(p, q, m.f, m.g.scale(2))
        assert broken.is_morphism() == dual_morphism(broken).is_morphism()


class TestHomAndInternalHom:
    """Hom spaces as kernels and the internal hom built on them."""

    def test_hom_of_units(self):
        """Test Hom(k, k) is 1-dimensional."""
        assert len(hom_space(unit_pair(), unit_pair())) == 1

    def test_hom_of_identity_pairing(self):
        """Test that every f is admissible for a nondegenerate square pairing."""
        p = identity_pair(2)
        basis = hom_space(p, p)

        assert len(basis) == 4
        assert all(m.is_morphism() for m in basis)
        assert len(hom_space(p, unit_pair())) == 2

    def test_morphism_from_f_needs_invertible_pairing(self):
        """Test that g can only be solved for with an invertible source pairing."""
        degenerate = ChuPair(1, 1, RationalMatrix.zeros(1, 1))
        with pytest.raises(InvariantViolationError):
            morphism_from_f(degenerate, unit_pair(), RationalMatrix.identity(1))

    def test_unit_internal_hom(self, rng):
        """Test iHom(k, p) = p."""
        p = random_valid_pair(rng, 3)
        ihom = internal_hom(unit_pair(), p)

        assert (ihom.dim_v, ihom.dim_w) == (p.dim_v, p.dim_w)
        assert ihom.pairing.rank() == p.pairing.rank()
        assert unit_internal_hom_iso(p) is not None

    def test_internal_hom_into_unit(self, rng):
        """Test p* = iHom(p, k) with an explicit isomorphism."""
        p = random_valid_pair(rng, 3)
        assert dual_functional_iso(p) is not None

    def test_internal_hom_of_identity_pairings(self):
        """Test a 4 x 4 nondegenerate pair."""
        ihom = internal_hom(identity_pair(2), identity_pair(2))
        assert (ihom.dim_v, ihom.dim_w) == (4, 4)
        assert ihom.is_valid()

    def test_identity_morphism(self, rng):
        """Test that identities are invertible morphisms."""
        m = identity_morphism(random_valid_pair(rng, 3))
        assert m.is_morphism()
        assert m.is_iso()
        assert m.compose(m) == m


class TestTensor:
    """Tensor product through duality."""

    def test_unit_law(self, rng):
        """Test k (x) p = p."""
        p = random_valid_pair(rng, 2)
        assert tensor(unit_pair(), p).dim_v == p.dim_v
        assert tensor_unit_iso(p) is not None

    def test_kronecker_size(self):
        """Test the first component of a tensor of 2-dimensional pairs."""
        assert tensor(identity_pair(2), identity_pair(2)).dim_v == 4

    def test_symmetry(self, rng):
        """Test p (x) q = q (x) p with an explicit iso."""
        p, q = random_valid_pair(rng, 2), random_valid_pair(rng, 2)
        assert tensor(p, q).dim_v == tensor(q, p).dim_v
        assert tensor_symmetry(p, q) is not None


class TestIdentities:
    """Canonical isomorphisms and the full report."""

    def test_exchange_and_transpose(self):
        """Test iHom(U, iHom(V, W)) = iHom(V, iHom(U, W)) and iHom(V, W) = iHom(W*, V*)."""
        u, v, w = identity_pair(1), identity_pair(2), identity_pair(1)
        assert exchange_iso(u, v, w) is not None
        assert transpose_iso(v, w) is not None

    def test_unit_pairs(self):
        """Test that every identity holds on unit pairs."""
        report = verify_identities(unit_pair(), unit_pair(), unit_pair(), random.Random(0))
        assert all(report["checks"].values())
        assert report["counterexample"] is None

    def test_identity_pairings(self):
        """Test dimensions (2, 2, 2)."""
        p = identity_pair(2)
        report = verify_identities(p, p, p, random.Random(1))
        assert all(report["checks"].values())

    @pytest.mark.parametrize("seed", range(100))
    def test_random_pairs(self, seed):
        """Test seeded random pairs of dimension at most 3."""
        rng = random.Random(seed)
        u, v, w = (random_valid_pair(rng, 3) for _ in range(3))
        report = verify_identities(u, v, w, rng)

        assert report["counterexample"] is None
        assert all(report["checks"].values())
        assert {"tensor_adjunction", "modular_consistency"} <= set(report["checks"])

    def test_invalid_pair_rejected(self):
        """Test that the report needs valid pairs."""
        degenerate = ChuPair(1, 1, RationalMatrix.zeros(1, 1))
        with pytest.raises(InvariantViolationError):
            verify_identities(degenerate, unit_pair(), unit_pair(), random.Random(0))
