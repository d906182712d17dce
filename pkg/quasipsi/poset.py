"""Labeled posets on the labels 1..n, and the skew shapes that induce them.

Elements are identified with their labels, so a labeled poset is a set of cover
relations a < b on [n]. A cover is strict when a > b as integers, and natural
otherwise.
"""
import itertools
import logging
import warnings
from collections.abc import Iterable
from collections.abc import Mapping
from collections.abc import Sequence
from typing import Optional
from typing import Union
import networkx as nx
import numpy as np
from quasipsi import _plot
from quasipsi import utils
from quasipsi.composition import Partition


logger = logging.getLogger(__name__)

Cover = tuple[int, int]
Cell = tuple[int, int]


class LabeledPoset:
    """A finite poset whose elements are the labels 1..n."""

    def __init__(self, n: int, covers: Iterable[Iterable[int]] = ()) -> None:
        """Create a labeled poset from its cover relations.

        Redundant relations (implied by transitivity) are dropped, the cover
        graph is always stored transitively reduced.

        Args:
            n: The number of elements.
            covers: Pairs (a, b) meaning a < b. Labels must lie in 1..n.

        Raises:
            ValueError: If a label is out of range or the relations contain a cycle.

        Example:
            >>> from quasipsi import LabeledPoset
            >>> poset = LabeledPoset(3, [(1, 2), (3, 2), (1, 2)])
            >>> poset
            LabeledPoset(n=3, covers=[(1, 2), (3, 2)])
            >>> poset.strict_edges()
            [(3, 2)]

        """
        if n < 0:
            raise ValueError(f"A poset can not have a negative size ({n})")
        graph = nx.DiGraph()
        graph.add_nodes_from(range(1, n + 1))
        for pair in covers:
            a, b = (int(x) for x in pair)
            if not (1 <= a <= n and 1 <= b <= n) or a == b:
                raise ValueError(f"Invalid cover ({a}, {b}) for a poset on 1..{n}")
            graph.add_edge(a, b)
        if not nx.is_directed_acyclic_graph(graph):
            raise ValueError("The cover relations contain a cycle")
        reduced = nx.transitive_reduction(graph)
        if reduced.number_of_edges() < graph.number_of_edges():
            logger.debug(
                "Dropped %s relations implied by transitivity",
                graph.number_of_edges() - reduced.number_of_edges(),
            )

        self._n = n
        self._graph = nx.DiGraph()
        self._graph.add_nodes_from(range(1, n + 1))
        self._graph.add_edges_from((a, b, {"strict": a > b}) for a, b in reduced.edges)
        self._closure = nx.transitive_closure_dag(self._graph)

    @property
    def n(self) -> int:
        """Return the number of elements."""
        return self._n

    @property
    def covers(self) -> list[Cover]:
        """Return the sorted list of cover relations."""
        return sorted(self._graph.edges)

    @property
    def elements(self) -> list[int]:
        """Return the labels 1..n."""
        return list(range(1, self._n + 1))

    @property
    def cover_graph(self) -> nx.DiGraph:
        """Return a read-only view of the cover digraph (edges carry 'strict')."""
        return nx.freeze(self._graph.copy())

    def less_than(self, a: int, b: int) -> bool:
        """Return whether a < b in the poset order."""
        return self._closure.has_edge(a, b)

    def less_equal(self, a: int, b: int) -> bool:
        """Return whether a <= b in the poset order."""
        return a == b or self._closure.has_edge(a, b)

    def down_set(self, x: int) -> set[int]:
        """Return the principal order ideal {y : y <= x}."""
        return set(self._closure.predecessors(x)) | {x}

    def up_set(self, x: int) -> set[int]:
        """Return the principal filter {y : y >= x}."""
        return set(self._closure.successors(x)) | {x}

    def lower_covers(self, x: int) -> list[int]:
        """Return the elements covered by x."""
        return sorted(self._graph.predecessors(x))

    def upper_covers(self, x: int) -> list[int]:
        """Return the elements covering x."""
        return sorted(self._graph.successors(x))

    def strict_edges(self) -> list[Cover]:
        """Return the covers a < b with a > b as labels."""
        return [(a, b) for a, b in self.covers if a > b]

    def natural_edges(self) -> list[Cover]:
        """Return the covers a < b with a < b as labels."""
        return [(a, b) for a, b in self.covers if a < b]

    def is_naturally_labeled(self) -> bool:
        """Return whether the labeling is order preserving (no strict edges)."""
        return not self.strict_edges()

    def minimal_elements(self) -> list[int]:
        """Return the minimal elements, sorted by label."""
        return [x for x in self.elements if self._graph.in_degree(x) == 0]

    def maximal_elements(self) -> list[int]:
        """Return the maximal elements, sorted by label."""
        return [x for x in self.elements if self._graph.out_degree(x) == 0]

    def principal_filter(self, minimal: Iterable[int]) -> set[int]:
        """Return V(S), the filter of all elements above some z in S.

        Args:
            minimal: A set S of minimal elements.

        Raises:
            ValueError: If S contains a non-minimal element.
        """
        chosen = set(minimal)
        extra = chosen - set(self.minimal_elements())
        if extra:
            raise ValueError(f"The elements {sorted(extra)} are not minimal")
        return set().union(*(self.up_set(z) for z in chosen))

    def component_labels(self) -> list[list[int]]:
        """Return the labels of each connected component, ordered by smallest label."""
        return sorted(
            (sorted(part) for part in nx.weakly_connected_components(self._graph)),
            key=lambda part: part[0],
        )

    def components(self) -> list["LabeledPoset"]:
        """Return the connected components, each relabeled preserving label order."""
        return [self.restrict(part) for part in self.component_labels()]

    def is_connected(self) -> bool:
        """Return whether the poset is nonempty and connected."""
        return self._n > 0 and nx.is_weakly_connected(self._graph)

    def restrict(self, labels: Iterable[int]) -> "LabeledPoset":
        """Return the induced subposet, relabeled 1..k by the relative label order."""
        kept = sorted(set(labels))
        if any(not 1 <= x <= self._n for x in kept):
            raise ValueError(f"The labels {kept} are not all in 1..{self._n}")
        position = {x: i for i, x in enumerate(kept, start=1)}
        relations = [
            (position[a], position[b])
            for a, b in itertools.permutations(kept, 2)
            if self.less_than(a, b)
        ]
        return LabeledPoset(len(kept), relations)

    def is_order_ideal(self, labels: Iterable[int]) -> bool:
        """Return whether the set is closed downwards."""
        chosen = set(labels)
        return all(self.down_set(x) <= chosen for x in chosen)

    def order_ideals(self) -> list[frozenset[int]]:
        """Return all order ideals, sorted by size and then by their sorted labels."""
        ideals = {
            frozenset().union(*(self.down_set(x) for x in antichain))
            for antichain in nx.antichains(self._graph)
        }
        return sorted(ideals, key=lambda ideal: (len(ideal), sorted(ideal)))

    def linear_extensions(self, guard: Optional[int] = None) -> list[tuple[int, ...]]:
        """Return all linear extensions as words of labels, in lexicographic order.

        Args:
            guard: Largest poset size allowed. Defaults to
                `utils.LINEAR_EXTENSION_GUARD`.

        Raises:
            GuardExceededError: If the poset is larger than the guard.
        """
        utils.check_guard(
            self._n, guard, utils.LINEAR_EXTENSION_GUARD, "linear extensions"
        )
        if self._n == 0:
            return [()]
        return sorted(tuple(word) for word in nx.all_topological_sorts(self._graph))

    def dual(self) -> "LabeledPoset":
        """Return the dual poset P*, with the same labels."""
        return LabeledPoset(self._n, [(b, a) for a, b in self.covers])

    def complement_labeling(self) -> "LabeledPoset":
        """Return the same poset with the complementary labeling x -> n + 1 - x."""
        return self.relabel([self._n + 1 - x for x in self.elements])

    def relabel(
        self, labeling: Union[Sequence[int], Mapping[int, int]]
    ) -> "LabeledPoset":
        """Return the poset with every element x relabeled to labeling[x].

        Args:
            labeling: Either a mapping from old to new labels, or a sequence whose
                (x-1)-th entry is the new label of x.
        """
        if isinstance(labeling, Mapping):
            image = tuple(labeling[x] for x in self.elements)
        else:
            image = tuple(labeling)
        utils.check_permutation(image, self._n)
        covers = [(image[a - 1], image[b - 1]) for a, b in self.covers]
        return LabeledPoset(self._n, covers)

    def comparability_matrix(self) -> np.ndarray:
        """Return the boolean matrix with entry [a-1, b-1] set when a < b."""
        matrix = np.zeros((self._n, self._n), dtype=bool)
        for a, b in self._closure.edges:
            matrix[a - 1, b - 1] = True
        return matrix

    def _natural_relabelings(self, guard: Optional[int]):
        for word in self.linear_extensions(guard=guard):
            position = {x: i for i, x in enumerate(word, start=1)}
            covers = tuple(sorted((position[a], position[b]) for a, b in self.covers))
            yield covers, word

    def canonical_form(self, guard: Optional[int] = None) -> tuple[Cover, ...]:
        """Return an isomorphism invariant of the unlabeled poset.

        This is the smallest sorted cover list over all natural relabelings, so
        two posets have the same canonical form if and only if they are
        isomorphic as unlabeled posets.
        """
        return min(covers for covers, _ in self._natural_relabelings(guard))

    def naturally_label(self, guard: Optional[int] = None) -> "LabeledPoset":
        """Return the canonical naturally labeled copy of the underlying poset."""
        return LabeledPoset(self._n, self.canonical_form(guard=guard))

    def is_isomorphic(self, other: "LabeledPoset", labeled: bool = False) -> bool:
        """Check for isomorphism, optionally also preserving edge strictness."""
        if labeled:
            return nx.is_isomorphic(
                self._graph, other.cover_graph, edge_match=lambda x, y: x == y
            )
        return nx.is_isomorphic(self._graph, other.cover_graph)

    def visualize(self, ax=None, show_labels: bool = True):
        """Draw the Hasse diagram, with strict edges drawn bold.

        Args:
            ax: Matplotlib axis to draw on. A new figure is made if None.
            show_labels: If the labels should be written on the elements.

        Returns:
            The matplotlib axis.
        """
        return _plot.plot_hasse(self, ax=ax, show_labels=show_labels)

    def __eq__(self, other) -> bool:
        """Compare the labeled cover relations."""
        if not isinstance(other, LabeledPoset):
            return NotImplemented
        return self._n == other.n and self.covers == other.covers

    def __hash__(self) -> int:
        return hash((self._n, tuple(self.covers)))

    def __len__(self) -> int:
        return self._n

    def __repr__(self) -> str:
        """Return a string representation of the poset."""
        props = [("n", self._n), ("covers", self.covers)]
        propstr = ", ".join([f"{k}={v!r}" for k, v in props])
        return f"{self.__class__.__name__}({propstr})"


def chain(n: int) -> LabeledPoset:
    """Return the naturally labeled chain 1 < 2 < ... < n."""
    return LabeledPoset(n, [(i, i + 1) for i in range(1, n)])


def antichain(n: int) -> LabeledPoset:
    """Return the antichain on n elements."""
    return LabeledPoset(n)


def disjoint_union(first: LabeledPoset, second: LabeledPoset) -> LabeledPoset:
    """Return P + Q, with the labels of Q shifted up by |P|."""
    shift = first.n
    covers = first.covers + [(a + shift, b + shift) for a, b in second.covers]
    return LabeledPoset(first.n + second.n, covers)


def ordinal_sum(first: LabeledPoset, second: LabeledPoset) -> LabeledPoset:
    """Return the ordinal sum, with every element of Q above every element of P."""
    union = disjoint_union(first, second)
    shift = first.n
    bridges = [
        (a, b + shift)
        for a in first.maximal_elements()
        for b in second.minimal_elements()
    ]
    return LabeledPoset(union.n, union.covers + bridges)


def _is_transitive(relations: set[Cover]) -> bool:
    return all(
        (a, d) in relations for a, b in relations for c, d in relations if b == c
    )


def all_posets(n: int, guard: Optional[int] = None) -> list[LabeledPoset]:
    """Return one naturally labeled poset for every isomorphism class of size n.

    Args:
        n: The number of elements.
        guard: Largest n allowed. Defaults to `utils.POSET_ENUMERATION_GUARD`.

    Returns:
        The posets, sorted by their canonical form.

    Example:
        >>> [len(all_posets(n)) for n in range(5)]
        [1, 1, 2, 5, 16]

    """
    utils.check_guard(n, guard, utils.POSET_ENUMERATION_GUARD, "posets")
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    forms = set()
    for k in range(len(pairs) + 1):
        for chosen in itertools.combinations(pairs, k):
            relations = set(chosen)
            if _is_transitive(relations):
                forms.add(LabeledPoset(n, relations).canonical_form())
    logger.debug("Found %s isomorphism classes of posets on %s elements", len(forms), n)
    return [LabeledPoset(n, form) for form in sorted(forms)]


def all_labelings(
    poset: LabeledPoset, guard: Optional[int] = None
) -> list[LabeledPoset]:
    """Return the relabelings of a poset, one per pattern of strict edges.

    The generating function only depends on which covers are strict, so this
    is the list of all distinct (P, w) for a fixed P, up to that equivalence.
    """
    utils.check_guard(poset.n, guard, utils.LABELING_GUARD, "labelings")
    covers = poset.covers
    seen: dict[tuple[bool, ...], LabeledPoset] = {}
    for image in itertools.permutations(poset.elements):
        pattern = tuple(image[a - 1] > image[b - 1] for a, b in covers)
        if pattern not in seen:
            seen[pattern] = poset.relabel(image)
    return [seen[pattern] for pattern in sorted(seen)]


class SkewShape:
    """A skew shape lambda/mu, drawn in English convention (row 1 on top)."""

    def __init__(self, outer: Iterable[int], inner: Iterable[int] = ()) -> None:
        """Create the skew shape outer/inner.

        Args:
            outer: The partition lambda.
            inner: The partition mu, contained in lambda.

        Raises:
            ShapeError: If the inputs are not partitions, if mu is not contained
                in lambda, or if mu equals a nonempty lambda.

        Example:
            >>> from quasipsi import SkewShape
            >>> shape = SkewShape([2, 1])
            >>> shape.cells
            [(1, 1), (1, 2), (2, 1)]
            >>> shape.cell_labels()
            {(2, 1): 1, (1, 1): 2, (1, 2): 3}

        """
        self._outer = self._check_partition(outer, "lambda")
        self._inner = self._check_partition(inner, "mu")
        if len(self._inner) > len(self._outer) or any(
            m > lam for m, lam in zip(self._inner, self._outer)
        ):
            raise utils.ShapeError(
                f"The partition {list(self._inner)} is not contained in "
                f"{list(self._outer)}"
            )
        if self._outer and self.size == 0:
            raise utils.ShapeError(
                f"The shape {self} has no cells, only the empty shape may be empty"
            )

    @staticmethod
    def _check_partition(parts: Iterable[int], name: str) -> Partition:
        values = [int(p) for p in parts]
        if values and values[-1] == 0:
            warnings.warn(
                f"Trailing zero parts of {name} are ignored.", UserWarning, stacklevel=3
            )
            while values and values[-1] == 0:
                values.pop()
        try:
            return Partition(values)
        except ValueError as err:
            raise utils.ShapeError(f"Invalid partition {name}={values}: {err}") from err

    @property
    def outer(self) -> Partition:
        """Return lambda."""
        return self._outer

    @property
    def inner(self) -> Partition:
        """Return mu."""
        return self._inner

    @property
    def cells(self) -> list[Cell]:
        """Return the cells (row, col) of lambda/mu in row-major order."""
        inner = list(self._inner) + [0] * (len(self._outer) - len(self._inner))
        return [
            (row, col)
            for row, (lam, mu) in enumerate(zip(self._outer, inner), start=1)
            for col in range(mu + 1, lam + 1)
        ]

    @property
    def size(self) -> int:
        """Return the number of cells, |lambda| - |mu|."""
        return self._outer.size - self._inner.size

    def grid(self) -> np.ndarray:
        """Return a boolean (rows x columns) array marking the cells of the shape."""
        width = self._outer[0] if self._outer else 0
        grid = np.zeros((len(self._outer), width), dtype=bool)
        for row, col in self.cells:
            grid[row - 1, col - 1] = True
        return grid

    def is_connected(self) -> bool:
        """Return whether the cells are edge-connected (the empty shape is not)."""
        cells = set(self.cells)
        if not cells:
            return False
        graph = nx.Graph()
        graph.add_nodes_from(cells)
        graph.add_edges_from(
            (cell, neighbour)
            for cell in cells
            for neighbour in ((cell[0] + 1, cell[1]), (cell[0], cell[1] + 1))
            if neighbour in cells
        )
        return nx.is_connected(graph)

    def has_2x2_square(self) -> bool:
        """Return whether the shape contains a 2x2 block of cells."""
        grid = self.grid()
        return bool(
            (grid[:-1, :-1] & grid[1:, :-1] & grid[:-1, 1:] & grid[1:, 1:]).any()
        )

    def is_border_strip(self) -> bool:
        """Return whether the shape is a border strip (connected, no 2x2 square)."""
        return self.is_connected() and not self.has_2x2_square()

    def height(self) -> int:
        """Return the height of a border strip: its number of rows minus one.

        Raises:
            ShapeError: If the shape is not a border strip.
        """
        if not self.is_border_strip():
            raise utils.ShapeError(f"{self} is not a border strip")
        return len({row for row, _ in self.cells}) - 1

    def cell_labels(self) -> dict[Cell, int]:
        """Label the cells up each column, from the first column to the last."""
        ordered = sorted(self.cells, key=lambda cell: (cell[1], -cell[0]))
        return {cell: label for label, cell in enumerate(ordered, start=1)}

    def poset(self) -> LabeledPoset:
        """Return the labeled poset of the shape, see `skew_shape_poset`."""
        return skew_shape_poset(self)

    def visualize(self, ax=None, fill: Optional[Mapping[Cell, int]] = None):
        """Draw the Young diagram, optionally with a filling of the cells.

        Args:
            ax: Matplotlib axis to draw on. A new figure is made if None.
            fill: Optional mapping from cells to the values written in them.

        Returns:
            The matplotlib axis.
        """
        return _plot.plot_tableau(self, fill=fill, ax=ax)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkewShape):
            return NotImplemented
        return (self._outer, self._inner) == (other.outer, other.inner)

    def __hash__(self) -> int:
        return hash((tuple(self._outer), tuple(self._inner)))

    def __repr__(self) -> str:
        """Return a string representation of the shape."""
        props = [("outer", tuple(self._outer)), ("inner", tuple(self._inner))]
        propstr = ", ".join([f"{k}={v!r}" for k, v in props])
        return f"{self.__class__.__name__}({propstr})"

    def __str__(self) -> str:
        """Return the text form, e.g. '[6,5,2]/[2,1]'."""
        return f"{self._outer}/{self._inner}"


def skew_shape_poset(shape: SkewShape) -> LabeledPoset:
    """Return the labeled poset of a skew shape.

    The cells are ordered componentwise. Moving one cell right is a natural
    cover and moving one cell down is a strict cover, so the (P, w)-partitions
    are exactly the semistandard fillings of the shape.

    Example:
        >>> skew_shape_poset(SkewShape([2, 1])).covers
        [(2, 1), (2, 3)]

    """
    labels = shape.cell_labels()
    covers = []
    for (row, col), label in labels.items():
        for neighbour in ((row, col + 1), (row + 1, col)):
            if neighbour in labels:
                covers.append((label, labels[neighbour]))
    return LabeledPoset(len(labels), covers)
