"""
Tests for algebra.cohomology
"""
import random
from fractions import Fraction

import pytest

from algebra.cohomology import (
    AbelianCocycle3, Cochain, ab_coboundary, coboundary, cocycle_from_qform, cohomologous_witness,
    commutator, em_homomorphism_check, em_qform, find_closure_violation, find_cocycle_violation,
    find_hexagon_violation, is_abelian_3cocycle,
)
from algebra.exact import ONE, RootOfUnity
from algebra.groups import FinAbGroup
from algebra.qforms import WeakQuadraticForm, enumerate_qf
from core.config import StarautConfig
from core.exceptions import BoundExceededError, InvalidFormError, MalformedInputError


def random_normalized(group, arity, rng, den=4):
    """Normalized cochain with values in mu_den."""
    return Cochain.from_function(group, arity, lambda *args: ONE if any(not any(g) for g in args)
                                 else RootOfUnity.of(rng.randrange(den), den))


def bilinear_omega(group, den):
    """omega(g, h) = exp(2 pi i g_0 h_0 / den) on the first factor."""
    return Cochain.from_function(group, 2, lambda g, h: RootOfUnity.of(g[0] * h[0], den))


class TestCochains:
    """Coboundaries and commutators."""

    def test_coboundary_of_trivial(self, z3):
        """Test d(1) = 1."""
        assert coboundary(Cochain.trivial(z3, 2)).is_trivial()

    def test_d_squared(self, z3, rng):
        """Test d(d kappa) = 1."""
        kappa = random_normalized(z3, 2, rng, den=9)
        assert coboundary(coboundary(kappa)).is_trivial()

    def test_commutator_of_symmetric(self, z3):
        """Test that symmetric cochains have trivial commutator."""
        assert commutator(bilinear_omega(z3, 3)).is_trivial()

    def test_commutator_on_z2(self, z2):
        """Test that the diagonal never contributes."""
        kappa = Cochain.from_function(z2, 2, lambda g, h: RootOfUnity.of(1, 4) if g == h == (1,) else ONE)
        assert commutator(kappa).is_trivial()

    def test_commutator_on_klein_group(self, z2xz2):
        """Test a single off-diagonal -1."""
        kappa = Cochain.from_function(
            z2xz2, 2, lambda g, h: RootOfUnity.of(1, 2) if (g, h) == ((1, 0), (0, 1)) else ONE)
        comm = commutator(kappa)

        assert comm((1, 0), (0, 1)) == RootOfUnity.of(1, 2)
        assert comm((0, 1), (1, 0)) == RootOfUnity.of(1, 2)
        assert comm((1, 0), (1, 0)) == ONE

    def test_json(self, z2):
        """Test the row encoding."""
        kappa = Cochain.from_function(z2, 2, lambda g, h: RootOfUnity.of(g[0] * h[0], 2))
        assert Cochain.from_json(z2, 2, kappa.to_json()) == kappa

    def test_json_rejects_partial_table(self, z2):
        """Test that every tuple must be present."""
        with pytest.raises(MalformedInputError):
            Cochain.from_json(z2, 2, Cochain.trivial(z2, 2).to_json()[:-1])


class TestAbelianCocycles:
    """Closure, normalization and hexagons."""

    def test_trivial(self, z3):
        """Test (1, 1)."""
        c = AbelianCocycle3.trivial(z3)
        assert find_closure_violation(c.psi) is None
        assert is_abelian_3cocycle(c.psi, c.omega)

    def test_coboundaries_are_cocycles(self, z2xz2, rng):
        """Test d_ab(kappa) for random normalized kappa."""
        for _ in range(3):
            c = ab_coboundary(random_normalized(z2xz2, 2, rng))
            assert is_abelian_3cocycle(c.psi, c.omega)

    def test_bilinear_omega(self, z3):
        """Test (1, bilinear omega)."""
        assert is_abelian_3cocycle(Cochain.trivial(z3, 3), bilinear_omega(z3, 3))

    def test_perturbed_psi_not_closed(self, z3):
        """Test that changing psi(1, 1, 1) breaks d psi = 1."""
        table = list(Cochain.trivial(z3, 3).table)
        table[13] = RootOfUnity.of(1, 3)
        violation = find_closure_violation(Cochain(z3, 3, tuple(table)))

        assert violation is not None
        assert violation["condition"] == "d psi = 1"

    def test_non_bilinear_omega(self, z2xz2):
        """Test that a hexagon fails for non-bilinear omega."""
        omega = Cochain.from_function(
            z2xz2, 2, lambda g, h: RootOfUnity.of(1, 2) if g == h == (1, 0) else ONE)
        violation = find_hexagon_violation(Cochain.trivial(z2xz2, 3), omega)

        assert violation is not None
        assert "hexagon" in violation["condition"]

    def test_normalization(self, z2):
        """Test that an unnormalized omega is reported first."""
        omega = Cochain.from_function(z2, 2, lambda g, h: RootOfUnity.of(1, 2) if g == (0,) else ONE)
        violation = find_cocycle_violation(Cochain.trivial(z2, 3), omega)
        assert violation == {"condition": "omega normalized"}

    def test_json(self, z2):
        """Test the {group, psi, omega} encoding."""
        c = AbelianCocycle3(z2, Cochain.trivial(z2, 3), bilinear_omega(z2, 4))
        assert AbelianCocycle3.from_json(c.to_json()) == c


class TestEilenbergMacLane:
    """Cocycles to quadratic forms and back."""

    def test_trivial(self, z3):
        """Test that (1, 1) gives q = 1."""
        assert em_qform(AbelianCocycle3.trivial(z3)) == WeakQuadraticForm.constant_one(z3)

    def test_bilinear_diagonal(self, z3):
        """Test q(g) = w^(g^2) from omega(g, h) = w^(gh)."""
        q = em_qform(AbelianCocycle3(z3, Cochain.trivial(z3, 3), bilinear_omega(z3, 3)))
        assert list(q.values) == [ONE, RootOfUnity.of(1, 3), RootOfUnity.of(1, 3)]

    def test_homomorphism(self, z3):
        """Test em(c1 c2) = em(c1) em(c2)."""
        c1 = AbelianCocycle3(z3, Cochain.trivial(z3, 3), bilinear_omega(z3, 3))
        c2 = ab_coboundary(random_normalized(z3, 2, random.Random(5), den=3))
        assert em_homomorphism_check(c1, c2)

    @pytest.mark.parametrize("orders", [(2,), (3,), (4,), (5,), (2, 2), (2, 3)])
    def test_cocycle_from_every_qform(self, orders):
        """Test that the solved cocycle is valid and traces back to q."""
        group = FinAbGroup(orders)
        for q in enumerate_qf(group):
            c = cocycle_from_qform(q)
            assert find_cocycle_violation(c.psi, c.omega) is None
            assert em_qform(c) == q

    def test_i_on_z2(self, z2):
        """Test omega(1, 1) = i for q(1) = i."""
        q = WeakQuadraticForm(z2, [ONE, RootOfUnity.of(1, 4)])
        assert cocycle_from_qform(q).omega((1,), (1,)) == RootOfUnity.of(1, 4)

    def test_rejects_weak_form(self, z3):
        """Test that a non-symmetric input raises."""
        chi = WeakQuadraticForm(z3, [ONE, RootOfUnity.of(1, 3), RootOfUnity.of(2, 3)])
        with pytest.raises(InvalidFormError):
            cocycle_from_qform(chi)

    def test_bound(self):
        """Test the enumeration bound."""
        group = FinAbGroup((5,))
        config = StarautConfig(max_enumeration_order=4)
        with pytest.raises(BoundExceededError):
            cocycle_from_qform(WeakQuadraticForm.constant_one(group), config)


class TestCohomologousWitness:
    """Solving c1 = c2 d_ab(kappa)."""

    def test_self(self, z3):
        """Test that c vs c gives the trivial witness."""
        c = cocycle_from_qform(enumerate_qf(z3)[1])
        kappa = cohomologous_witness(c, c)

        assert kappa is not None
        assert kappa.is_trivial()

    def test_recovers_a_witness(self, z3, rng):
        """Test c d_ab(kappa0) vs c."""
        c = cocycle_from_qform(enumerate_qf(z3)[2])
        kappa0 = random_normalized(z3, 2, rng, den=9)
        twisted = c * ab_coboundary(kappa0)

        kappa = cohomologous_witness(twisted, c)

        assert kappa is not None
        assert c * ab_coboundary(kappa) == twisted

    def test_different_forms(self, z3):
        """Test that cocycles with different traces are not cohomologous."""
        q = WeakQuadraticForm(z3, [ONE, RootOfUnity.of(1, 3), RootOfUnity.of(1, 3)])
        assert cohomologous_witness(cocycle_from_qform(q), AbelianCocycle3.trivial(z3)) is None

    def test_bound(self):
        """Test the witness bound."""
        group = FinAbGroup((11,))
        with pytest.raises(BoundExceededError):
            cohomologous_witness(AbelianCocycle3.trivial(group), AbelianCocycle3.trivial(group),
                                 StarautConfig(max_witness_order=9))
