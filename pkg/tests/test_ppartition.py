"""Tests for the quasipsi.ppartition module.
"""
from collections import Counter
import numpy as np
import pytest
from quasipsi import LabeledPoset
from quasipsi import QSymElement
from quasipsi import composition as comp
from quasipsi import ppartition
from quasipsi import qsym
from quasipsi import utils
from quasipsi.poset import all_labelings
from quasipsi.poset import all_posets
from quasipsi.poset import antichain
from quasipsi.poset import chain
from quasipsi.poset import SkewShape
from quasipsi.ppartition import StarredPartition
from . import load_poset
from . import posets_of_size
from . import random_poset


def labeled_posets(max_n):
    """Shorthand for every labeling pattern of every poset up to a size."""
    return [
        labeled
        for n in range(1, max_n + 1)
        for poset in all_posets(n)
        for labeled in all_labelings(poset)
    ]



def assert_counts_natural(poset):
    """Pointed partitions of a natural poset all count +1 towards their weight."""
    pointed = ppartition.enumerate_pointed_partitions(poset)
    assert all(theta.sign == 1 for theta in pointed)
    counts = Counter(theta.weight for theta in pointed)
    expansion = ppartition.k_generating_function(poset).convert("psi")
    assert dict(counts) == dict(expansion.terms), poset

@pytest.fixture
def vee():
    return load_poset("poset_v.json")


class TestGeneratingFunction:
    """Test K through linear extensions."""

    def test_vee(self, vee):
        assert str(ppartition.k_generating_function(vee)) == "1*L[1,2] + 1*L[2,1]"

    def test_chain(self):
        assert ppartition.k_generating_function(chain(3)) == qsym.fundamental(3)

    def test_antichain(self):
        k = ppartition.k_generating_function(antichain(2))
        assert k == qsym.monomial(1) * qsym.monomial(1)

    def test_two_minima(self):
        k = ppartition.k_generating_function(load_poset("poset_two_minima.json"))
        expected = QSymElement(
            {
                (2, 3): 1,
                (1, 4): 1,
                (2, 2, 1): 2,
                (1, 3, 1): 2,
                (1, 2, 2): 2,
                (1, 1, 3): 1,
                (2, 1, 1, 1): 2,
                (1, 2, 1, 1): 4,
                (1, 1, 2, 1): 4,
                (1, 1, 1, 2): 2,
                (1, 1, 1, 1, 1): 8,
            }
        )
        assert k.convert("psi") == expected
        assert len(k.convert("psi")) == 11

    def test_disconnected_is_product(self):
        poset = load_poset("poset_two_chains.json")
        k = ppartition.k_generating_function(poset)
        factors = [
            ppartition.k_generating_function(part) for part in poset.components()
        ]
        assert k == factors[0] * factors[1]

    def test_guard(self):
        with pytest.raises(utils.GuardExceededError):
            ppartition.k_generating_function(antichain(5), guard=4)


class TestPointedPartitions:
    """Test the psi-expansion through pointed partitions."""

    def test_vee(self, vee):
        expansion = ppartition.psi_expansion_pointed(vee)
        assert str(expansion) == "-1*psi[3] + 2*psi[1,1,1]"

    def test_routes_agree(self):
        for poset in labeled_posets(4):
            pointed = ppartition.psi_expansion_pointed(poset)
            assert pointed == ppartition.k_generating_function(poset), poset

    def test_strict_poset(self):
        poset = load_poset("poset_strict.json")
        pointed = ppartition.psi_expansion_pointed(poset)
        expected = QSymElement(
            {
                (3, 2): -1,
                (2, 3): -1,
                (3, 1, 1): -1,
                (2, 2, 1): -1,
                (2, 1, 2): -3,
                (1, 2, 2): 1,
                (1, 1, 3): 1,
                (2, 1, 1, 1): -3,
                (1, 2, 1, 1): 1,
                (1, 1, 2, 1): 1,
                (1, 1, 1, 2): 3,
                (1, 1, 1, 1, 1): 3,
            }
        )
        assert pointed == expected
        assert len(pointed) == 12
        assert pointed == ppartition.k_generating_function(poset)

    def test_enumerate_vee(self, vee):
        pointed = ppartition.enumerate_pointed_partitions(vee)
        assert len(pointed) == 5
        assert all(theta.is_pointed() for theta in pointed)

    def test_signed_counts(self):
        for poset in labeled_posets(3):
            counts: Counter = Counter()
            for theta in ppartition.enumerate_pointed_partitions(poset):
                counts[theta.weight] += theta.sign
            expected = ppartition.psi_expansion_pointed(poset)
            assert {alpha: c for alpha, c in counts.items() if c} == dict(
                expected.terms
            )

    @pytest.mark.parametrize(
        "n", [1, 2, 3, 4, 5, pytest.param(6, marks=pytest.mark.slow)]
    )
    def test_natural_is_positive(self, n):
        for poset in posets_of_size(n):
            assert_counts_natural(poset)

    @pytest.mark.slow
    def test_natural_is_positive_random(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            assert_counts_natural(random_poset(rng, 7, labeled=False))

    def test_guard(self):
        with pytest.raises(utils.GuardExceededError):
            ppartition.psi_expansion_pointed(antichain(5), guard=4)


class TestStarredPartition:
    """Test the starred partition value type."""

    @pytest.fixture
    def theta(self):
        return StarredPartition({1: (1, "star"), 2: (2, "star"), 3: (1, "minus")})

    def test_str(self, theta):
        assert str(theta) == "1:1* 2:2* 3:1-"

    def test_weight(self, theta):
        assert theta.weight == (2, 1)
        assert theta.level(1) == [1, 3]
        assert theta.n_levels == 2

    def test_sign(self, theta):
        assert theta.sign == -1
        assert theta.ambiguity == (1, 1)
        assert theta.is_pointed()

    def test_not_pointed(self):
        theta = StarredPartition({1: (1, "star"), 2: (1, "star")})
        assert theta.ambiguity == (2,)
        assert not theta.is_pointed()

    def test_levels_not_onto(self):
        with pytest.raises(ValueError, match="not onto"):
            StarredPartition({1: (1, "star"), 2: (3, "star")})

    def test_invalid_mark(self):
        with pytest.raises(ValueError, match="Marks must be"):
            StarredPartition({1: (1, "x")})


class TestRootedDiagnosis:
    """Test the sets I and J, and Min1 of K."""

    def test_vee(self, vee):
        diagnosis = ppartition.rooted_diagnosis(vee)
        assert diagnosis.is_gbs
        assert diagnosis.ideal == {1, 3}
        assert diagnosis.roots == {1}
        assert diagnosis.rooted
        assert diagnosis.min1_value == -1

    def test_strict_poset(self):
        poset = load_poset("poset_strict.json")
        k = ppartition.k_generating_function(poset)
        assert ppartition.rooted_diagnosis(poset).min1_value == qsym.min1(k)

    def test_not_gbs(self):
        # 1 < 3 natural, then 3 < 2 strict.
        diagnosis = ppartition.rooted_diagnosis(LabeledPoset(3, [(1, 3), (3, 2)]))
        assert not diagnosis.is_gbs
        assert diagnosis.min1_value == 0

    def test_matches_min1(self):
        for poset in labeled_posets(4):
            k = ppartition.k_generating_function(poset)
            assert ppartition.rooted_diagnosis(poset).min1_value == qsym.min1(k)

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [5, 6])
    def test_matches_min1_random(self, n):
        rng = np.random.default_rng(n)
        for _ in range(200):
            poset = random_poset(rng, n)
            k = ppartition.k_generating_function(poset)
            assert ppartition.rooted_diagnosis(poset).min1_value == qsym.min1(k), poset

    def test_seven_elements(self):
        poset = LabeledPoset(
            7, [(7, 6), (7, 2), (3, 2), (6, 5), (1, 2), (1, 4), (2, 5), (4, 5)]
        )
        diagnosis = ppartition.rooted_diagnosis(poset)
        assert diagnosis.is_gbs
        assert diagnosis.ideal == {1, 3, 6, 7}
        ideal = LabeledPoset(
            7, [cover for cover in poset.covers if set(cover) <= diagnosis.ideal]
        )
        maximal = set(ideal.maximal_elements()) & diagnosis.ideal
        assert maximal == {1, 3, 6}
        assert diagnosis.roots == {1}
        assert diagnosis.min1_value == -1
        k = ppartition.k_generating_function(poset)
        assert qsym.min1(k) == -1

    def test_skew_shape(self):
        poset = SkewShape([6, 3, 3, 2], [2, 2, 1]).poset()
        assert poset.covers == [
            (1, 2),
            (3, 2),
            (3, 4),
            (5, 4),
            (6, 5),
            (6, 7),
            (7, 8),
            (8, 9),
        ]
        diagnosis = ppartition.rooted_diagnosis(poset)
        assert diagnosis.ideal == {1, 3, 5, 6}
        assert diagnosis.roots == {1}
        assert diagnosis.min1_value == -1

    def test_empty(self):
        with pytest.raises(ValueError, match="empty"):
            ppartition.rooted_diagnosis(LabeledPoset(0))


class TestCoproduct:
    """Test the order ideal formulas for the coproduct."""

    def test_order_ideal_coproduct(self):
        for poset in labeled_posets(3):
            k = ppartition.k_generating_function(poset)
            assert ppartition.order_ideal_coproduct(poset) == qsym.coproduct(k)

    def test_graded(self, vee):
        k = ppartition.k_generating_function(vee)
        for alpha in comp.compositions(3):
            tensor = ppartition.graded_order_ideal_coproduct(vee, alpha)
            assert tensor == qsym.graded_coproduct(k, alpha)

    def test_graded_min1(self, vee):
        # Min1 of every slice recovers the psi coefficients.
        expansion = ppartition.psi_expansion_pointed(vee)
        for alpha in comp.compositions(3):
            tensor = ppartition.graded_order_ideal_coproduct(vee, alpha)
            assert tensor.apply(qsym.min1) == expansion.coefficient(alpha)

    def test_graded_wrong_size(self, vee):
        with pytest.raises(utils.HomogeneityError):
            ppartition.graded_order_ideal_coproduct(vee, (2, 2))
        with pytest.raises(ValueError, match="nonempty"):
            ppartition.graded_order_ideal_coproduct(vee, ())


class TestAutomorphisms:
    """Test how omega, rho and omegarho act on labeled posets."""

    def test_omega_is_dual(self):
        for poset in labeled_posets(3):
            k = ppartition.k_generating_function(poset)
            dual = ppartition.k_generating_function(poset.dual())
            assert qsym.automorphism(k, "omega") == dual

    def test_rho_is_dual_complement(self):
        for poset in labeled_posets(3):
            k = ppartition.k_generating_function(poset)
            image = ppartition.k_generating_function(
                poset.dual().complement_labeling()
            )
            assert qsym.automorphism(k, "rho") == image

    def test_omegarho_is_complement(self):
        for poset in labeled_posets(3):
            k = ppartition.k_generating_function(poset)
            image = ppartition.k_generating_function(poset.complement_labeling())
            assert qsym.automorphism(k, "omegarho") == image
