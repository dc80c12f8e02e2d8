"""
Tests for algebra.prof
"""
import pytest

from algebra.prof import (
    FinCategory, Functor, associator, builtin_category, chain, check_adjunction, coend,
    coend_is_deterministic, coend_yoneda_check, compose, constant_functor, constant_profunctor, discrete,
    empty, end, end_matches_nat, functors, hom_profunctor, identity_functor, input_unitor,
    natural_transformations, nat_profunctor, output_unitor, profunctor_demo, representable_composition,
    representable_lower, representable_upper, three_object, z2,
)
from core.config import StarautConfig
from core.exceptions import BoundExceededError, CategoryError, MalformedInputError


def point_inclusion():
    """{0} -> (0 -> 1)."""
    return Functor(discrete(1), chain(2), {"0": "0"}, {"id0": "id0"})


class TestFinCategory:
    """Tables and their exhaustive validation."""

    def test_builtins(self):
        """Test the builtin shapes."""
        assert z2().morphisms == ("e", "s")
        assert len(chain(3).morphisms) == 6
        assert builtin_category("discrete4").objects == ("0", "1", "2", "3")
        assert builtin_category("chain2") == chain(2)

    def test_unknown_builtin(self):
        """Test that unknown names are input errors."""
        with pytest.raises(MalformedInputError):
            builtin_category("square")

    def test_json(self):
        """Test category encoding."""
        category = three_object()
        assert FinCategory.from_json(category.to_json()) == category

    def test_unit_laws_enforced(self):
        """Test that e o s = e is rejected."""
        table = {("e", "e"): "e", ("e", "s"): "e", ("s", "e"): "s", ("s", "s"): "e"}
        with pytest.raises(CategoryError):
            FinCategory(("*",), {("*", "*"): ("e", "s")}, table, {"*": "e"})

    def test_incomplete_table(self):
        """Test that every composable pair needs a composite."""
        table = {("e", "e"): "e", ("e", "s"): "s", ("s", "e"): "s"}
        with pytest.raises(CategoryError):
            FinCategory(("*",), {("*", "*"): ("e", "s")}, table, {"*": "e"})

    def test_missing_identity(self):
        """Test that every object needs an identity."""
        with pytest.raises(CategoryError):
            FinCategory(("a",), {("a", "a"): ("f",)}, {("f", "f"): "f"}, {})

    def test_malformed_json(self):
        """Test that a missing key names the field."""
        with pytest.raises(MalformedInputError) as exc_info:
            FinCategory.from_json({"objects": []})
        assert exc_info.value.details["field"] == "category"


class TestFunctors:
    """Functor tables."""

    def test_identity_and_constant(self):
        """Test that both tables validate."""
        category = chain(3)
        assert identity_functor(category).obj("1") == "1"
        assert constant_functor(category, category, "2")("0->1") == "id2"

    def test_invalid_functor(self):
        """Test that composition must be preserved."""
        with pytest.raises(CategoryError):
            Functor(z2(), z2(), {"*": "*"}, {"e": "s", "s": "s"})

    def test_enumeration(self):
        """Test endofunctor counts."""
        assert len(functors(z2(), z2())) == 2
        # monotone maps of a 3-chain
        assert len(functors(chain(3), chain(3))) == 10


class TestCoendAndEnd:
    """Union-find quotients and compatible families."""

    def test_constant_profunctor(self):
        """Test that a one-element profunctor has one class."""
        category = z2()
        assert coend(constant_profunctor(category, category)).size == 1

    def test_composite_on_z2(self):
        """Test Hom o Hom over Z2: four raw elements, two classes."""
        category = z2()
        composite = compose(hom_profunctor(category), hom_profunctor(category))

        assert len(composite.quotient[("*", "*")]) == 4
        assert len(composite.at("*", "*")) == 2

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_discrete(self, n):
        """Test that a discrete category has no relations."""
        assert coend(hom_profunctor(discrete(n))).size == n

    def test_representatives_are_least(self):
        """Test that class representatives come first in the fixed order."""
        result = coend(hom_profunctor(z2()))
        assert result.classes == (("*", "e"), ("*", "s"))
        assert result.injections["*"]["s"] == ("*", "s")

    def test_deterministic(self):
        """Test that shuffled relation orders give the same representatives."""
        hom = hom_profunctor(three_object())
        assert all(coend_is_deterministic(hom, seed) for seed in range(5))

    def test_end_of_discrete(self):
        """Test the product of the diagonal hom-sets."""
        assert end(hom_profunctor(discrete(2))) == [("id0", "id1")]

    def test_end_of_empty(self):
        """Test the empty product."""
        assert end(hom_profunctor(empty())) == [()]

    def test_nat_of_identity(self):
        """Test Nat(Id, Id) on Z2 via the end and directly."""
        identity = identity_functor(z2())
        assert len(end(nat_profunctor(identity, identity))) == 2
        assert len(natural_transformations(identity, identity)) == 2

    def test_end_matches_nat(self):
        """Test every endofunctor pair of a 3-chain."""
        report = end_matches_nat(chain(3))
        assert report["matches"]
        assert report["pairs"] == 100

    def test_coend_needs_endo_profunctor(self):
        """Test that coends are only defined for C -/-> C."""
        with pytest.raises(CategoryError):
            coend(constant_profunctor(z2(), chain(2)))


class TestComposition:
    """Composition, unitors and the associator."""

    def test_unitors(self):
        """Test that both unitors are natural isomorphisms."""
        p = representable_lower(point_inclusion())
        for unitor in (input_unitor(p), output_unitor(p)):
            assert unitor.is_iso()
            assert unitor.is_natural()

    def test_yoneda(self):
        """Test coend over x of Hom(u, x) x Hom(x, v) = Hom(u, v)."""
        for category in (z2(), chain(3), three_object()):
            report = coend_yoneda_check(category)
            assert report["well_defined"] and report["bijective"] and report["natural"]

    def test_associator(self):
        """Test associativity up to the canonical bijection."""
        hom = hom_profunctor(chain(3))
        alpha = associator(hom, hom, hom)
        assert alpha.is_iso()
        assert alpha.is_natural()

    def test_chain_sizes(self):
        """Test Hom o Hom on 0 -> 1 -> 2 has one class per morphism."""
        category = chain(3)
        composite = compose(hom_profunctor(category), hom_profunctor(category))
        assert composite.at("0", "2") and len(composite.at("0", "2")) == 1
        assert composite.at("2", "0") == ()
        assert composite.size() == 6

    def test_middle_category_checked(self):
        """Test that the middle categories must agree."""
        with pytest.raises(CategoryError):
            compose(hom_profunctor(z2()), hom_profunctor(chain(2)))


class TestRepresentables:
    """F_* and F^*."""

    def test_identity_functor(self):
        """Test that the identity functor represents Hom."""
        category = three_object()
        assert representable_lower(identity_functor(category)) == hom_profunctor(category)

    def test_constant_functor(self):
        """Test F_*(d, c) = Hom(d, d0) for a constant functor."""
        category = chain(2)
        lower = representable_lower(constant_functor(category, category, "1"))
        assert lower.at("0", "0") == ("0->1",)
        assert lower.at("1", "0") == ("id1",)

    def test_inclusion_tables(self):
        """Test both representables of {0} -> (0 -> 1)."""
        inclusion = point_inclusion()
        lower, upper = representable_lower(inclusion), representable_upper(inclusion)

        assert lower.at("0", "0") == ("id0",)
        assert lower.at("1", "0") == ()
        assert upper.at("0", "1") == ("0->1",)

    def test_representable_composition(self):
        """Test G_* o F_* = (GF)_* for every pair of Z2 endofunctors."""
        endofunctors = functors(z2(), z2())
        for f in endofunctors:
            for g in endofunctors:
                assert representable_composition(f, g).is_iso()


class TestAdjunction:
    """F_* -| F^*."""

    @pytest.mark.parametrize("category", [z2(), chain(3), three_object()])
    def test_identity_functor(self, category):
        """Test unit, counit and both triangles for the identity functor."""
        report = check_adjunction(identity_functor(category))
        assert report["passed"]
        assert report["witness"] is None

    def test_inclusion(self):
        """Test the inclusion of a point into an arrow."""
        report = check_adjunction(point_inclusion())
        assert all(report["checks"].values())

    def test_bound(self):
        """Test the category size bound."""
        with pytest.raises(BoundExceededError):
            check_adjunction(identity_functor(discrete(3)), StarautConfig(max_category_size=2))


class TestDemo:
    """The full report."""

    @pytest.mark.parametrize("name", ["z2", "chain3", "discrete2"])
    def test_demo_passes(self, name):
        """Test every check on the small builtins."""
        report = profunctor_demo(builtin_category(name), name)

        assert all(report["checks"].values())
        assert report["counterexample"] is None

    def test_demo_counts(self):
        """Test the reported sizes on Z2."""
        report = profunctor_demo(z2(), "z2")
        assert report["coend_of_hom"] == 2
        assert report["endofunctors"] == 2
        assert report["nat_pairs"] == 4
