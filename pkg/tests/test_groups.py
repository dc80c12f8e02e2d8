"""
Tests for algebra.groups
"""
import pytest

from algebra.exact import RootOfUnity
from algebra.groups import (
    Character, FinAbGroup, automorphisms, character_from_values, characters, has_square_roots,
    identity_automorphism, is_automorphism, square_root, square_roots, trivial_character,
)
from core.config import StarautConfig
from core.exceptions import BoundExceededError, GroupMismatchError, MalformedInputError


class TestFinAbGroup:
    """Products of cyclic groups."""

    def test_elements_and_order(self, z2xz2):
        """Test lexicographic elements and the order."""
        assert z2xz2.order == 4
        assert z2xz2.elements == ((0, 0), (0, 1), (1, 0), (1, 1))
        assert z2xz2.exponent == 2

    def test_trivial_group(self):
        """Test the rank-zero group."""
        trivial = FinAbGroup(())
        assert trivial.order == 1
        assert trivial.elements == ((),)
        assert str(trivial) == "Z1"

    def test_arithmetic(self):
        """Test addition, negation and element orders."""
        group = FinAbGroup((4, 6))
        assert group.add((3, 5), (2, 2)) == (1, 1)
        assert group.neg((1, 2)) == (3, 4)
        assert group.order_of((2, 3)) == 2
        assert group.order_of((1, 1)) == 12

    def test_foreign_element_rejected(self, z3):
        """Test that out-of-range residues raise."""
        with pytest.raises(GroupMismatchError):
            z3.add((3,), (0,))

    def test_json(self):
        """Test group and element decoding."""
        group = FinAbGroup.from_json({"cyclic_orders": [2, 3]})
        assert group == FinAbGroup((2, 3))
        assert group.to_json() == {"cyclic_orders": [2, 3]}
        assert group.element_from_json([1, 2]) == (1, 2)

    @pytest.mark.parametrize("data", [
        {"cyclic_orders": [1]},
        {"cyclic_orders": "3"},
        {"orders": [3]},
        {"cyclic_orders": [True]},
    ])
    def test_json_rejects_malformed(self, data):
        """Test that invalid group documents raise MalformedInputError."""
        with pytest.raises(MalformedInputError):
            FinAbGroup.from_json(data)

    def test_element_json_rejects_out_of_range(self, z3):
        """Test element validation."""
        with pytest.raises(MalformedInputError):
            z3.element_from_json([3])


class TestCharacters:
    """Characters G -> roots of unity."""

    def test_count(self, z4, z2xz2):
        """Test that |Hom(G, U(1))| = |G|."""
        assert len(characters(z4)) == 4
        assert len(characters(z2xz2)) == 4

    def test_values(self, z4):
        """Test evaluation on every element."""
        chi = Character(z4, (RootOfUnity.of(1, 4),))
        assert chi((3,)) == RootOfUnity.of(3, 4)
        assert chi.values[2] == RootOfUnity.of(1, 2)

    def test_product(self, z4):
        """Test pointwise product."""
        chi = Character(z4, (RootOfUnity.of(1, 4),))
        assert chi * chi * chi * chi == trivial_character(z4)

    def test_image_order_must_divide(self, z3):
        """Test that a generator image of the wrong order is rejected."""
        with pytest.raises(MalformedInputError):
            Character(z3, (RootOfUnity.of(1, 2),))

    def test_from_values(self, z4):
        """Test recognising a character from its value table."""
        chi = Character(z4, (RootOfUnity.of(3, 4),))
        assert character_from_values(z4, chi.values) == chi

        broken = list(chi.values)
        broken[2] = RootOfUnity.identity()
        assert character_from_values(z4, broken) is None

    def test_json(self, z3):
        """Test the {images: [...]} encoding."""
        chi = Character(z3, (RootOfUnity.of(1, 3),))
        assert Character.from_json(z3, chi.to_json()) == chi


class TestAutomorphisms:
    """Brute-force Aut(G)."""

    @pytest.mark.parametrize("orders,count", [
        ((2,), 1),
        ((3,), 2),
        ((5,), 4),
        ((8,), 4),
        ((2, 2), 6),
        ((2, 4), 8),
        ((3, 3), 48),
    ])
    def test_counts(self, orders, count):
        """Test |Aut(G)| on small groups."""
        assert len(automorphisms(FinAbGroup(orders))) == count

    def test_inverse_and_compose(self, z2xz2):
        """Test that f o f^-1 is the identity."""
        for f in automorphisms(z2xz2):
            assert f.compose(f.inverse()).is_identity()
            assert is_automorphism(z2xz2, f.images)

    def test_identity_first(self, z3):
        """Test lexicographic order of image tuples."""
        assert automorphisms(z3)[0] == identity_automorphism(z3)

    def test_bound(self):
        """Test that the order bound is enforced."""
        config = StarautConfig(max_aut_order=8)
        with pytest.raises(BoundExceededError):
            automorphisms(FinAbGroup((9,)), config)

    def test_non_automorphism(self, z4):
        """Test that doubling on Z4 is rejected."""
        assert not is_automorphism(z4, [(2,)])


class TestSquareRoots:
    """Solutions of 2x = g."""

    def test_odd_order(self, z3):
        """Test the unique root in odd order."""
        assert has_square_roots(z3)
        assert square_root(z3, (1,)) == (2,)
        assert square_roots(z3, (1,)) == [(2,)]

    def test_even_order(self, z4):
        """Test roots in Z4."""
        assert not has_square_roots(z4)
        assert square_root(z4, (1,)) is None
        assert square_root(z4, (2,)) == (1,)
        assert square_roots(z4, (2,)) == [(1,), (3,)]
