"""Tests for the quasipsi.poset module.
"""
import numpy as np
import pytest
from quasipsi import LabeledPoset
from quasipsi import SkewShape
from quasipsi import poset as qposet
from quasipsi import utils
from . import load_poset


@pytest.fixture
def vee():
    return load_poset("poset_v.json")


@pytest.fixture
def two_minima():
    return load_poset("poset_two_minima.json")


class TestConstruction:
    """Test creating labeled posets."""

    def test_transitive_reduction(self):
        poset = LabeledPoset(3, [(1, 2), (2, 3), (1, 3)])
        assert poset.covers == [(1, 2), (2, 3)]

    def test_repr(self, vee):
        assert repr(vee) == "LabeledPoset(n=3, covers=[(1, 2), (3, 2)])"
        assert eval(repr(vee)) == vee  # pylint: disable=eval-used

    def test_hash(self, vee):
        assert len({vee, LabeledPoset(3, [(3, 2), (1, 2)])}) == 1
        assert len(vee) == 3

    def test_cycle(self):
        with pytest.raises(ValueError, match="cycle"):
            load_poset("poset_cycle.json")

    @pytest.mark.parametrize("cover", [(0, 1), (1, 4), (2, 2)])
    def test_invalid_cover(self, cover):
        with pytest.raises(ValueError, match="Invalid cover"):
            LabeledPoset(3, [cover])

    def test_negative_size(self):
        with pytest.raises(ValueError, match="negative"):
            LabeledPoset(-1)

    def test_empty(self):
        empty = LabeledPoset(0)
        assert empty.elements == []
        assert not empty.is_connected()
        assert empty.linear_extensions() == [()]


class TestStructure:
    """Test the order relations, edges and subposets."""

    def test_edges(self, vee):
        assert vee.strict_edges() == [(3, 2)]
        assert vee.natural_edges() == [(1, 2)]
        assert not vee.is_naturally_labeled()

    def test_extremal_elements(self, vee):
        assert vee.minimal_elements() == [1, 3]
        assert vee.maximal_elements() == [2]

    def test_order(self, two_minima):
        assert two_minima.less_than(1, 5)
        assert not two_minima.less_than(5, 1)
        assert two_minima.less_equal(4, 4)
        assert two_minima.down_set(5) == {1, 2, 3, 5}
        assert two_minima.up_set(2) == {2, 4, 5}
        assert two_minima.lower_covers(4) == [1, 2]
        assert two_minima.upper_covers(1) == [3, 4]

    def test_principal_filter(self, two_minima):
        assert two_minima.principal_filter({1}) == {1, 3, 4, 5}
        assert two_minima.principal_filter({1, 2}) == set(two_minima.elements)
        assert two_minima.principal_filter(set()) == set()

    def test_principal_filter_not_minimal(self, two_minima):
        with pytest.raises(ValueError, match="not minimal"):
            two_minima.principal_filter({3})

    def test_restrict(self, two_minima):
        assert two_minima.restrict([3, 4, 5]) == LabeledPoset(3, [(1, 3)])

    def test_restrict_out_of_range(self, vee):
        with pytest.raises(ValueError, match="not all in"):
            vee.restrict([1, 4])

    def test_components(self):
        poset = load_poset("poset_two_chains.json")
        assert poset.component_labels() == [[1, 2], [3, 4, 5]]
        assert poset.components() == [qposet.chain(2), qposet.chain(3)]
        assert not poset.is_connected()

    def test_comparability_matrix(self):
        matrix = qposet.chain(3).comparability_matrix()
        np.testing.assert_array_equal(matrix, np.triu(np.ones((3, 3), dtype=bool), 1))


class TestIdealsAndExtensions:
    """Test order ideals and linear extensions."""

    def test_order_ideals(self, vee):
        ideals = [sorted(ideal) for ideal in vee.order_ideals()]
        assert ideals == [[], [1], [3], [1, 3], [1, 2, 3]]
        assert vee.is_order_ideal({1, 3})
        assert not vee.is_order_ideal({1, 2})

    def test_linear_extensions(self, vee):
        assert vee.linear_extensions() == [(1, 3, 2), (3, 1, 2)]
        assert len(qposet.antichain(3).linear_extensions()) == 6
        assert qposet.chain(4).linear_extensions() == [(1, 2, 3, 4)]

    def test_linear_extension_guard(self):
        with pytest.raises(utils.GuardExceededError):
            qposet.antichain(5).linear_extensions(guard=4)


class TestConstructions:
    """Test duals, relabelings and combinations of posets."""

    def test_dual(self, vee):
        assert vee.dual().covers == [(2, 1), (2, 3)]

    def test_complement_labeling(self):
        assert qposet.chain(3).complement_labeling().covers == [(2, 1), (3, 2)]

    def test_relabel(self, vee):
        assert vee.relabel({1: 1, 2: 3, 3: 2}) == LabeledPoset(3, [(1, 3), (2, 3)])
        assert vee.relabel([1, 3, 2]) == LabeledPoset(3, [(1, 3), (2, 3)])

    def test_relabel_invalid(self, vee):
        with pytest.raises(ValueError, match="not a permutation"):
            vee.relabel([1, 1, 2])

    def test_disjoint_union(self):
        union = qposet.disjoint_union(qposet.chain(2), qposet.chain(1))
        assert union == LabeledPoset(3, [(1, 2)])

    def test_ordinal_sum(self):
        total = qposet.ordinal_sum(qposet.antichain(2), qposet.chain(1))
        assert total == LabeledPoset(3, [(1, 3), (2, 3)])


class TestIsomorphism:
    """Test canonical forms and enumeration of posets."""

    def test_canonical_form(self, vee):
        assert vee.canonical_form() == ((1, 3), (2, 3))
        assert LabeledPoset(3, [(2, 1), (3, 1)]).canonical_form() == ((1, 3), (2, 3))
        assert vee.dual().canonical_form() == ((1, 2), (1, 3))

    def test_naturally_label(self, vee):
        natural = vee.naturally_label()
        assert natural.is_naturally_labeled()
        assert natural.is_isomorphic(vee)
        assert not natural.is_isomorphic(vee, labeled=True)

    def test_labeled_isomorphism(self, vee):
        assert vee.is_isomorphic(LabeledPoset(3, [(1, 2), (3, 2)]), labeled=True)
        all_strict = LabeledPoset(3, [(3, 1), (2, 1)])
        assert vee.is_isomorphic(all_strict)
        assert not vee.is_isomorphic(all_strict, labeled=True)

    def test_all_posets(self):
        assert len(qposet.all_posets(5)) == 63
        for poset in qposet.all_posets(4):
            assert poset.is_naturally_labeled()

    def test_all_posets_distinct(self):
        forms = [poset.canonical_form() for poset in qposet.all_posets(4)]
        assert len(set(forms)) == len(forms)

    def test_all_posets_guard(self):
        with pytest.raises(utils.GuardExceededError):
            qposet.all_posets(7)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_all_labelings_chain(self, n):
        labelings = qposet.all_labelings(qposet.chain(n))
        patterns = set()
        for labeled in labelings:
            (order,) = labeled.linear_extensions()
            patterns.add(tuple(a > b for a, b in zip(order, order[1:])))
        assert len(patterns) == len(labelings) == 2 ** (n - 1)

    def test_all_labelings_antichain(self):
        assert qposet.all_labelings(qposet.antichain(2)) == [qposet.antichain(2)]

    def test_all_labelings_vee(self, vee):
        assert len(qposet.all_labelings(vee)) == 4


class TestSkewShape:
    """Test skew shapes and their posets."""

    @pytest.fixture
    def strip(self):
        return SkewShape([6, 3, 3, 2], [2, 2, 1])

    def test_str_repr(self, strip):
        assert str(strip) == "[6,3,3,2]/[2,2,1]"
        assert repr(SkewShape([2, 1])) == "SkewShape(outer=(2, 1), inner=())"
        assert eval(repr(strip)) == strip  # pylint: disable=eval-used

    def test_size(self, strip):
        assert strip.size == 9
        assert len(strip.cells) == 9

    def test_border_strip(self, strip):
        assert strip.is_connected()
        assert not strip.has_2x2_square()
        assert strip.is_border_strip()
        assert strip.height() == 3

    def test_not_border_strip(self):
        square = SkewShape([2, 2])
        assert square.has_2x2_square()
        with pytest.raises(utils.ShapeError, match="not a border strip"):
            square.height()
        assert not SkewShape([2, 1], [1]).is_connected()

    def test_grid(self):
        np.testing.assert_array_equal(
            SkewShape([2, 1]).grid(), np.array([[True, True], [True, False]])
        )

    def test_not_contained(self):
        with pytest.raises(utils.ShapeError, match="not contained"):
            SkewShape([1], [2])

    def test_no_cells(self):
        with pytest.raises(utils.ShapeError, match="no cells"):
            SkewShape([2, 2], [2, 2])
        assert SkewShape([]).size == 0

    def test_not_a_partition(self):
        with pytest.raises(utils.ShapeError, match="Invalid partition"):
            SkewShape([1, 2])

    def test_trailing_zeros(self):
        with pytest.warns(UserWarning, match="Trailing zero"):
            shape = SkewShape([2, 1, 0])
        assert shape == SkewShape([2, 1])

    def test_cell_labels(self, strip):
        labels = strip.cell_labels()
        assert [labels[cell] for cell in [(4, 1), (4, 2), (3, 2), (1, 3)]] == [
            1,
            2,
            3,
            6,
        ]
        assert labels[(1, 6)] == 9

    def test_poset(self, strip):
        poset = strip.poset()
        assert poset == qposet.skew_shape_poset(strip)
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
        assert poset.strict_edges() == [(3, 2), (5, 4), (6, 5)]

    def test_poset_21(self):
        shape = SkewShape([2, 1])
        assert shape.poset().covers == [(2, 1), (2, 3)]
