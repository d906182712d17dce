"""Tests for the quasipsi.qsym module.
"""
import itertools
from collections import defaultdict
from fractions import Fraction
import pytest
from quasipsi import QSymElement
from quasipsi import TensorElement
from quasipsi import composition as comp
from quasipsi import qsym
from quasipsi import utils


def all_compositions(max_n):
    """Shorthand for every nonempty composition up to a size."""
    return [alpha for n in range(1, max_n + 1) for alpha in comp.compositions(n)]


def tensor_product(first, second):
    """Multiply two tensors of arity two leg by leg, in the psi basis."""
    terms: dict = defaultdict(Fraction)
    for (a1, a2), c in first.convert("psi").items():
        for (b1, b2), d in second.convert("psi").items():
            left = qsym.basis_element("psi", a1) * qsym.basis_element("psi", b1)
            right = qsym.basis_element("psi", a2) * qsym.basis_element("psi", b2)
            pairs = itertools.product(left.items(), right.items())
            for (gamma, x), (delta, y) in pairs:
                terms[gamma, delta] += c * d * x * y
    return TensorElement(terms, "psi", arity=2)


class TestQSymElement:
    """Test construction, arithmetic and printing of elements."""

    def test_str(self):
        f = QSymElement({(3, 2): -1, (3, 4, 3): "1/2"})
        assert str(f) == "-1*psi[3,2] + 1/2*psi[3,4,3]"

    def test_zero(self):
        zero = QSymElement({(1,): 0}, "M")
        assert str(zero) == "0"
        assert not zero
        assert zero == 0

    def test_repr_eval(self):
        f = QSymElement({(1, 1): 1, (2,): "1/2"}, basis="M")
        assert repr(f) == "QSymElement({(2,): '1/2', (1, 1): '1'}, basis='M')"
        assert eval(repr(f)) == f  # pylint: disable=eval-used

    def test_invalid_basis(self):
        with pytest.raises(ValueError, match="Unknown basis"):
            QSymElement({(1,): 1}, "X")

    def test_float_coefficient(self):
        with pytest.raises(TypeError, match="exact"):
            QSymElement({(1,): 0.5})

    def test_not_hashable(self):
        with pytest.raises(TypeError):
            hash(qsym.psi(1))

    def test_scalar_arithmetic(self):
        f = qsym.psi(2, 1)
        assert (f * 2 - f) == f
        assert (f / 3).coefficient((2, 1)) == Fraction(1, 3)
        assert (f + 1).coefficient(()) == 1
        assert (-f).coefficient((2, 1)) == -1

    def test_equality_across_bases(self):
        assert qsym.psi(1, 1) == QSymElement({(1, 1): 1, (2,): "1/2"}, "M")
        assert qsym.fundamental(2) != qsym.monomial(2)

    def test_degrees(self):
        f = qsym.psi(1) + qsym.psi(2, 1)
        assert f.degrees() == {1, 3}
        assert not f.is_homogeneous()

    def test_normalized(self):
        assert qsym.psi(2, 1, normalized=True).coefficient((2, 1)) == 2
        assert qsym.psi(1, 1).normalized_terms() == {(1, 1): Fraction(1, 2)}


class TestConversion:
    """Test the basis change tables."""

    def test_psi_to_monomial(self):
        assert dict(qsym.psi(1, 1).convert("M").terms) == {
            (2,): Fraction(1, 2),
            (1, 1): 1,
        }

    def test_psi_single_part(self):
        for n in range(1, 6):
            assert qsym.psi(n).convert("M") == QSymElement({(n,): Fraction(1, n)}, "M")

    def test_monomial_to_psi(self):
        assert str(qsym.monomial(2).convert("psi")) == "2*psi[2]"
        assert str(qsym.monomial(1, 1).convert("psi")) == "-1*psi[2] + 1*psi[1,1]"

    def test_fundamental_to_monomial(self):
        assert str(qsym.fundamental(1, 2).convert("M")) == "1*M[1,2] + 1*M[1,1,1]"

    def test_monomial_to_fundamental(self):
        assert str(qsym.monomial(1, 2).convert("L")) == "1*L[1,2] - 1*L[1,1,1]"

    @pytest.mark.parametrize("source", qsym.BASES)
    @pytest.mark.parametrize("target", qsym.BASES)
    def test_round_trip(self, source, target):
        for alpha in all_compositions(4):
            f = qsym.basis_element(source, alpha)
            back = f.convert(target).convert(source)
            assert dict(back.terms) == dict(f.terms)

    def test_power_sum_scaling(self):
        # p_n = n psi_n = M_n
        assert qsym.power_sum([3]) == qsym.monomial(3)
        assert qsym.power_sum([2, 1], over_z=True) == qsym.psi(1, 2) + qsym.psi(2, 1)

    def test_power_sum_is_symmetric(self):
        assert qsym.is_symmetric(qsym.power_sum([2, 1, 1]))
        assert not qsym.is_symmetric(qsym.psi(1, 2))

    def test_psi_coefficients_route(self):
        for alpha in all_compositions(4):
            f = qsym.fundamental(alpha)
            assert qsym.psi_coefficients(f) == dict(f.convert("psi").terms)


class TestProducts:
    """Test the shuffle and quasi-shuffle products."""

    def test_psi_shuffle(self):
        assert qsym.multiply(qsym.psi(1), qsym.psi(1)) == qsym.psi(1, 1) * 2
        assert qsym.psi(1) * qsym.psi(2) == qsym.psi(1, 2) + qsym.psi(2, 1)

    def test_monomial_quasi_shuffle(self):
        product = qsym.monomial(1) * qsym.monomial(1)
        assert str(product) == "1*M[2] + 2*M[1,1]"

    def test_routes_agree(self):
        for alpha, beta in itertools.product(all_compositions(3), repeat=2):
            if sum(alpha) + sum(beta) > 5:
                continue
            shuffle = qsym.multiply(qsym.psi(alpha), qsym.psi(beta))
            quasi_shuffle = qsym.multiply(
                qsym.psi(alpha).convert("M"), qsym.psi(beta).convert("M")
            )
            assert shuffle == quasi_shuffle

    def test_fundamental_product(self):
        product = qsym.fundamental(1) * qsym.fundamental(1)
        assert product.basis == "L"
        assert str(product) == "1*L[2] + 1*L[1,1]"

    def test_unit(self):
        f = qsym.psi(2, 1)
        assert f * QSymElement.one() == f


class TestCoproduct:
    """Test the coproduct and its graded components."""

    def test_psi_deconcatenation(self):
        tensor = qsym.coproduct(qsym.psi(1, 2))
        assert str(tensor) == (
            "1*psi[] (x) psi[1,2] + 1*psi[1] (x) psi[2] + 1*psi[1,2] (x) psi[]"
        )

    def test_fundamental_coproduct(self):
        tensor = qsym.coproduct(qsym.fundamental(2))
        assert tensor.coefficient([(1,), (1,)]) == 1
        assert tensor.coefficient([(2,), ()]) == 1
        assert tensor.coefficient([(), (2,)]) == 1

    def test_bases_agree(self):
        for alpha in all_compositions(4):
            f = qsym.fundamental(alpha)
            assert qsym.coproduct(f) == qsym.coproduct(f.convert("M"))
            assert qsym.coproduct(f) == qsym.coproduct(f.convert("psi"))

    @pytest.mark.parametrize("basis", qsym.BASES)
    def test_coassociative(self, basis):
        for alpha in all_compositions(6):
            tensor = qsym.coproduct(qsym.basis_element(basis, alpha))
            assert tensor.coproduct_at(0) == tensor.coproduct_at(1), alpha

    def test_product_compatibility(self):
        for alpha, beta in itertools.product(all_compositions(4), repeat=2):
            if sum(alpha) + sum(beta) > 6:
                continue
            f, g = qsym.psi(alpha), qsym.psi(beta)
            expected = tensor_product(qsym.coproduct(f), qsym.coproduct(g))
            assert qsym.coproduct(f * g) == expected, (alpha, beta)

    def test_graded(self):
        tensor = qsym.graded_coproduct(qsym.psi(1, 1, 4, 2, 1), (2, 7))
        assert dict(tensor.terms) == {((1, 1), (4, 2, 1)): 1}
        assert not qsym.graded_coproduct(qsym.psi(2, 1), (1, 2))

    def test_graded_wrong_degree(self):
        with pytest.raises(utils.HomogeneityError):
            qsym.graded_coproduct(qsym.psi(2, 1), (2, 2))

    def test_tensor_arity(self):
        with pytest.raises(ValueError, match="legs"):
            TensorElement({((1,),): 1}, "psi", arity=2)


class TestFunctionals:
    """Test Min1 and Max1."""

    def test_max1_example(self):
        assert qsym.max1(qsym.psi(3, 4, 2, 1)) == Fraction(4, 189)

    def test_monomial_values(self):
        assert qsym.max1(qsym.monomial(2, 3)) == -2
        assert qsym.min1(qsym.monomial(2, 3)) == -3

    def test_min1_psi(self):
        assert qsym.min1(qsym.psi(3)) == 1
        assert qsym.min1(qsym.psi(1, 2)) == 0

    def test_bases_agree(self):
        for alpha in all_compositions(4):
            f = qsym.fundamental(alpha)
            for functional in (qsym.min1, qsym.max1):
                assert functional(f) == functional(f.convert("M"))
                assert functional(f) == functional(f.convert("psi"))

    def test_vanish_on_products(self):
        for alpha, beta in itertools.product(all_compositions(3), repeat=2):
            product = qsym.psi(alpha) * qsym.psi(beta)
            assert qsym.min1(product) == 0
            assert qsym.max1(product) == 0

    def test_constant(self):
        with pytest.raises(utils.HomogeneityError, match="constants"):
            qsym.min1(QSymElement.one())

    def test_not_homogeneous(self):
        with pytest.raises(utils.HomogeneityError):
            qsym.max1(qsym.psi(1) + qsym.psi(2))

    def test_tensor_apply(self):
        tensor = qsym.graded_coproduct(qsym.psi(1, 2), (1, 2))
        assert tensor.apply(qsym.min1) == 1


class TestAutomorphisms:
    """Test omega, rho and omegarho."""

    def test_omega_psi(self):
        assert str(qsym.automorphism(qsym.psi(3, 2), "omega")) == "-1*psi[2,3]"

    def test_rho_psi(self):
        image = qsym.automorphism(qsym.psi(1, 2), "rho")
        assert image == qsym.psi(2, 1) + qsym.psi(3) / 2

    def test_omegarho_psi(self):
        image = qsym.automorphism(qsym.psi(3, 4, 2, 1), "omegarho")
        expected = QSymElement(
            {
                (3, 4, 2, 1): 1,
                (3, 4, 3): "1/2",
                (3, 6, 1): "1/4",
                (3, 7): "1/8",
                (7, 2, 1): "-1/12",
                (7, 3): "-1/24",
                (9, 1): "-1/28",
                (10,): "-4/189",
            }
        )
        assert image == expected
        assert len(image) == 8

    def test_omega_sign(self):
        for alpha in all_compositions(7):
            image = qsym.automorphism(qsym.psi(alpha), "omega")
            sign = (-1) ** (sum(alpha) - len(alpha))
            assert image == qsym.psi(alpha.reverse()) * sign

    def test_omega_is_rho_after_omegarho(self):
        for alpha in all_compositions(7):
            f = qsym.fundamental(alpha)
            composite = qsym.automorphism(qsym.automorphism(f, "omegarho"), "rho")
            assert composite == qsym.automorphism(f, "omega")

    @pytest.mark.parametrize("which", qsym.AUTOMORPHISMS)
    def test_routes_agree(self, which):
        for alpha in all_compositions(5):
            f = qsym.psi(alpha)
            via_fundamental = qsym.automorphism(f.convert("L"), which)
            assert qsym.automorphism(f, which) == via_fundamental

    @pytest.mark.parametrize("which", qsym.AUTOMORPHISMS)
    def test_involution(self, which):
        for alpha in all_compositions(5):
            f = qsym.psi(alpha)
            assert qsym.automorphism(qsym.automorphism(f, which), which) == f

    def test_unknown(self):
        with pytest.raises(ValueError, match="Unknown automorphism"):
            qsym.automorphism(qsym.psi(1), "sigma")


class TestProjections:
    """Test the length projections and evaluation."""

    def test_length_part(self):
        f = qsym.psi(3) + qsym.psi(1, 2) * 2 + qsym.psi(2, 1)
        assert f.length_part(2) == qsym.psi(1, 2) * 2 + qsym.psi(2, 1)
        assert f.min_length_part() == qsym.psi(3)
        assert f.psi_support() == [(3,), (1, 2), (2, 1)]

    def test_min_length_zero(self):
        assert not QSymElement({}, "psi").min_length_part()

    def test_evaluate(self):
        # M_(1,1)(x1, x2, x3) = x1 x2 + x1 x3 + x2 x3
        assert qsym.evaluate(qsym.monomial(1, 1), [1, 2, 3]) == 11
        assert qsym.evaluate(qsym.fundamental(2), [1, 2]) == 1 + 2 + 4
