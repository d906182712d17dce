"""P-partition generating functions of labeled posets and their psi-expansions.

`k_generating_function` sums fundamental quasisymmetric functions over the
linear extensions of a labeled poset. `psi_expansion_pointed` reaches the same
function in the psi basis without any basis conversion, as a signed sum over
pointed (P, w)-partitions: chains of order ideals whose consecutive differences
are all rooted.

Example:
    >>> from quasipsi import LabeledPoset, ppartition
    >>> vee = LabeledPoset(3, [(3, 2), (1, 2)])
    >>> print(ppartition.k_generating_function(vee))
    1*L[1,2] + 1*L[2,1]
    >>> print(ppartition.psi_expansion_pointed(vee))
    -1*psi[3] + 2*psi[1,1,1]

"""
import itertools
import logging
import math
from collections import defaultdict
from collections.abc import Iterable
from collections.abc import Iterator
from fractions import Fraction
from typing import Literal
from typing import NamedTuple
from typing import Optional
from quasipsi import composition as comp
from quasipsi import qsym
from quasipsi import utils
from quasipsi.composition import Composition
from quasipsi.poset import LabeledPoset
from quasipsi.qsym import QSymElement
from quasipsi.qsym import TensorElement


logger = logging.getLogger(__name__)

Mark = Literal["minus", "star", "plus"]
MARK_SYMBOLS = {"minus": "-", "star": "*", "plus": "+"}


def k_generating_function(
    poset: LabeledPoset, guard: Optional[int] = None
) -> QSymElement:
    """Return K_(P,w) in the L basis, one L_co(Des(w)) per linear extension w.

    Args:
        poset: The labeled poset.
        guard: Largest poset size allowed. Defaults to
            `utils.LINEAR_EXTENSION_GUARD`.

    Returns:
        The generating function of the (P, w)-partitions, in the L basis.
    """
    terms: dict[Composition, int] = defaultdict(int)
    for word in poset.linear_extensions(guard=guard):
        descents = {i for i in range(1, len(word)) if word[i - 1] > word[i]}
        terms[comp.composition_of_set(descents, len(word))] += 1
    return QSymElement(terms, "L")


class RootedDiagnosis(NamedTuple):
    """The data that decides Min1 of a labeled poset.

    Attributes:
        is_gbs: Whether the poset is a generalized border-strip, i.e. has no
            chain a < b < c with w(a) < w(b) > w(c).
        ideal: I, the largest order ideal all of whose edges are strict.
        roots: J, the elements of I whose filter only has natural edges.
        rooted: Whether is_gbs holds and J is the smallest label alone.
        min1_value: Min1 of the generating function, (-1)^(|I| - 1) or 0.
    """

    is_gbs: bool
    ideal: frozenset[int]
    roots: frozenset[int]
    rooted: bool
    min1_value: int


def diagnose_slice(
    elements: Iterable[int], covers: Iterable[tuple[int, int]]
) -> RootedDiagnosis:
    """Diagnose the labeled poset on `elements`, given all of its cover relations."""
    members = sorted(elements)
    lower: dict[int, list[int]] = {x: [] for x in members}
    upper: dict[int, list[int]] = {x: [] for x in members}
    for a, b in covers:
        upper[a].append(b)
        lower[b].append(a)

    # Natural edge below x followed by a strict edge above x.
    is_gbs = not any(
        any(a < x for a in lower[x]) and any(b < x for b in upper[x]) for x in members
    )

    ideal: set[int] = set()
    pending = [x for x in members if not lower[x]]
    remaining = {x: len(lower[x]) for x in members}
    order = []
    while pending:
        x = pending.pop()
        order.append(x)
        if all(a in ideal and a > x for a in lower[x]):
            ideal.add(x)
        for b in upper[x]:
            remaining[b] -= 1
            if remaining[b] == 0:
                pending.append(b)

    natural_filter: set[int] = set()
    for x in reversed(order):
        if all(b in natural_filter and b > x for b in upper[x]):
            natural_filter.add(x)

    roots = frozenset(ideal & natural_filter)
    rooted = bool(members) and is_gbs and roots == {members[0]}
    value = utils.sign(len(ideal) - 1) if rooted else 0
    return RootedDiagnosis(is_gbs, frozenset(ideal), roots, rooted, value)


def rooted_diagnosis(poset: LabeledPoset) -> RootedDiagnosis:
    """Compute the sets I and J of a labeled poset, and from them Min1(K_P).

    Example:
        >>> from quasipsi import LabeledPoset
        >>> diagnosis = rooted_diagnosis(LabeledPoset(3, [(3, 2), (1, 2)]))
        >>> sorted(diagnosis.ideal), sorted(diagnosis.roots), diagnosis.min1_value
        ([1, 3], [1], -1)

    """
    if poset.n == 0:
        raise ValueError("Min1 is not defined on the empty poset")
    return diagnose_slice(poset.elements, poset.covers)


class StarredPartition:
    """A starred (P, w)-partition: levels 1..k with a mark on every element."""

    def __init__(self, levels: dict[int, tuple[int, Mark]]) -> None:
        """Create a starred partition from a map label -> (level, mark).

        Args:
            levels: For each label, its level (magnitude) and its mark: "minus"
                (forced negative), "star" (ambiguous) or "plus".
        """
        magnitudes = sorted({level for level, _ in levels.values()})
        if magnitudes != list(range(1, len(magnitudes) + 1)):
            raise ValueError(f"The levels {magnitudes} are not onto 1..k")
        if any(mark not in MARK_SYMBOLS for _, mark in levels.values()):
            raise ValueError(f"Marks must be one of {', '.join(MARK_SYMBOLS)}")
        self._levels = dict(sorted(levels.items()))

    @property
    def levels(self) -> dict[int, tuple[int, Mark]]:
        """Return the map label -> (level, mark)."""
        return dict(self._levels)

    @property
    def n_levels(self) -> int:
        """Return k, the number of levels."""
        return max((level for level, _ in self._levels.values()), default=0)

    def level(self, i: int) -> list[int]:
        """Return the labels on level i."""
        return [x for x, (level, _) in self._levels.items() if level == i]

    @property
    def weight(self) -> Composition:
        """Return the composition (|P_1|, |P_2|, ...) of level sizes."""
        return Composition(len(self.level(i)) for i in range(1, self.n_levels + 1))

    @property
    def ambiguity(self) -> tuple[int, ...]:
        """Return the number of starred elements on each level."""
        return tuple(
            sum(self._levels[x][1] == "star" for x in self.level(i))
            for i in range(1, self.n_levels + 1)
        )

    @property
    def sign(self) -> int:
        """Return (-1) to the number of minus marks."""
        return utils.sign(sum(mark == "minus" for _, mark in self._levels.values()))

    def is_pointed(self) -> bool:
        """Return whether every level has exactly one starred element."""
        return all(count == 1 for count in self.ambiguity)

    def __eq__(self, other) -> bool:
        if not isinstance(other, StarredPartition):
            return NotImplemented
        return self._levels == other.levels

    def __hash__(self) -> int:
        return hash(tuple(self._levels.items()))

    def __repr__(self) -> str:
        """Return a string representation of the starred partition."""
        return f"{self.__class__.__name__}({self._levels!r})"

    def __str__(self) -> str:
        """Return the compact form, e.g. '1:1* 2:2* 3:1-'."""
        return " ".join(
            f"{x}:{level}{MARK_SYMBOLS[mark]}"
            for x, (level, mark) in self._levels.items()
        )


class _IdealLattice:
    """Order ideals of a poset as bitmasks, with the rooted slices between them."""

    def __init__(self, poset: LabeledPoset) -> None:
        self.poset = poset
        self.full = (1 << poset.n) - 1
        self.ideals = [self.mask(ideal) for ideal in poset.order_ideals()]
        self._slices: dict[tuple[int, int], RootedDiagnosis] = {}

    @staticmethod
    def mask(labels: Iterable[int]) -> int:
        return sum(1 << (x - 1) for x in labels)

    def labels(self, mask: int) -> list[int]:
        return [x for x in self.poset.elements if mask >> (x - 1) & 1]

    def slice_diagnosis(self, lower: int, upper: int) -> RootedDiagnosis:
        """Diagnose the convex slice upper minus lower; its covers are those of P."""
        key = (lower, upper)
        if key not in self._slices:
            part = upper & ~lower
            covers = [
                (a, b)
                for a, b in self.poset.covers
                if part >> (a - 1) & 1 and part >> (b - 1) & 1
            ]
            self._slices[key] = diagnose_slice(self.labels(part), covers)
        return self._slices[key]

    def rooted_steps(self, lower: int) -> Iterator[tuple[int, RootedDiagnosis]]:
        """Yield the ideals above `lower` whose difference with it is rooted."""
        for upper in self.ideals:
            if upper != lower and upper & lower == lower:
                diagnosis = self.slice_diagnosis(lower, upper)
                if diagnosis.rooted:
                    yield upper, diagnosis


def psi_expansion_pointed(
    poset: LabeledPoset, guard: Optional[int] = None
) -> QSymElement:
    """Return K_(P,w) in the psi basis as a signed sum over pointed partitions.

    Each level of a pointed (P, w)-partition is a rooted slice between two
    order ideals, contributing its Min1 value as a sign. The computation is
    memoized over the order ideals, so the pointed partitions themselves are
    never listed.

    Args:
        poset: The labeled poset.
        guard: Largest poset size allowed. Defaults to
            `utils.LINEAR_EXTENSION_GUARD`.

    Returns:
        The psi-expansion, with integer coefficients.
    """
    utils.check_guard(
        poset.n, guard, utils.LINEAR_EXTENSION_GUARD, "pointed partitions"
    )
    lattice = _IdealLattice(poset)
    memo: dict[int, dict[tuple[int, ...], int]] = {lattice.full: {(): 1}}

    def expand(lower: int) -> dict[tuple[int, ...], int]:
        if lower not in memo:
            terms: dict[tuple[int, ...], int] = defaultdict(int)
            for upper, diagnosis in lattice.rooted_steps(lower):
                size = (upper & ~lower).bit_count()
                for rest, coef in expand(upper).items():
                    terms[(size, *rest)] += diagnosis.min1_value * coef
            memo[lower] = terms
        return memo[lower]

    result = QSymElement(expand(0), "psi")
    logger.debug("Pointed psi-expansion of %s has %s terms", poset, len(result))
    return result


def _marks(diagnosis: RootedDiagnosis, labels: list[int]) -> dict[int, Mark]:
    star = labels[0]
    return {
        x: "star" if x == star else "minus" if x in diagnosis.ideal else "plus"
        for x in labels
    }


def enumerate_pointed_partitions(
    poset: LabeledPoset, guard: Optional[int] = None
) -> list[StarredPartition]:
    """List all pointed (P, w)-partitions.

    In a rooted level the smallest label is starred, the other elements of
    the all-strict ideal I are marked minus, and the rest plus.

    Args:
        poset: The labeled poset.
        guard: Largest poset size allowed. Defaults to `utils.LABELING_GUARD`.

    Returns:
        The pointed partitions, ordered by weight.
    """
    utils.check_guard(poset.n, guard, utils.LABELING_GUARD, "pointed partitions")
    lattice = _IdealLattice(poset)
    found = []

    def extend(lower: int, levels: dict[int, tuple[int, Mark]], depth: int) -> None:
        if lower == lattice.full:
            found.append(StarredPartition(levels))
            return
        for upper, diagnosis in lattice.rooted_steps(lower):
            labels = lattice.labels(upper & ~lower)
            marked = {x: (depth, mark) for x, mark in _marks(diagnosis, labels).items()}
            extend(upper, {**levels, **marked}, depth + 1)

    extend(0, {}, 1)
    return sorted(found, key=lambda f: (f.weight.sort_key, str(f)))


def k_tilde_general(poset: LabeledPoset, guard: Optional[int] = None) -> QSymElement:
    """Return the psi terms of minimal length of K_(P,w), for any labeling."""
    return qsym.min_length_part(psi_expansion_pointed(poset, guard=guard))


def order_ideal_coproduct(
    poset: LabeledPoset, guard: Optional[int] = None
) -> TensorElement:
    """Return the sum over order ideals I of K_I (x) K_(P - I), in the L basis.

    This equals the coproduct of K_(P,w).
    """
    totals: dict[tuple, Fraction] = defaultdict(Fraction)
    elements = set(poset.elements)
    for ideal in poset.order_ideals():
        left = k_generating_function(poset.restrict(ideal), guard=guard)
        right = k_generating_function(poset.restrict(elements - ideal), guard=guard)
        for (alpha, a), (beta, b) in itertools.product(left.items(), right.items()):
            totals[(alpha, beta)] += a * b
    return TensorElement(totals, "L", arity=2)


def _ideal_chains(
    poset: LabeledPoset, sizes: tuple[int, ...]
) -> Iterator[list[list[int]]]:
    """Yield the ways to cut P into consecutive order ideal slices of given sizes."""
    lattice = _IdealLattice(poset)

    def walk(lower: int, remaining: tuple[int, ...], slices: list[list[int]]):
        if not remaining:
            yield slices
            return
        for upper in lattice.ideals:
            part = upper & ~lower
            if upper & lower == lower and part.bit_count() == remaining[0]:
                yield from walk(upper, remaining[1:], [*slices, lattice.labels(part)])

    yield from walk(0, sizes, [])


def graded_order_ideal_coproduct(
    poset: LabeledPoset, alpha: Iterable[int], guard: Optional[int] = None
) -> TensorElement:
    """Return the graded coproduct of K_(P,w), computed from chains of order ideals.

    The sum runs over chains of ideals cutting P into slices of sizes
    alpha_1, ..., alpha_l, each term being the tensor of the slice K's.

    Raises:
        HomogeneityError: If |alpha| differs from the size of the poset.
    """
    alpha = Composition(alpha)
    if not alpha:
        raise ValueError("The graded coproduct needs a nonempty composition")
    if alpha.size != poset.n:
        raise utils.HomogeneityError(
            f"Can not take Delta_{alpha} of a poset with {poset.n} elements"
        )
    totals: dict[tuple, Fraction] = defaultdict(Fraction)
    for slices in _ideal_chains(poset, tuple(alpha)):
        factors = [
            k_generating_function(poset.restrict(part), guard=guard).items()
            for part in slices
        ]
        for combination in itertools.product(*factors):
            legs = tuple(beta for beta, _ in combination)
            totals[legs] += math.prod(c for _, c in combination)
    return TensorElement(totals, "L", arity=len(alpha))
