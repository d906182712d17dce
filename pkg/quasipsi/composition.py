"""Compositions, partitions and the refinement machinery behind the QSym bases."""
import itertools
import math
import numbers
from collections import Counter
from collections.abc import Iterable
from functools import lru_cache
from typing import Optional
from quasipsi import utils


class Composition(tuple):
    """A finite sequence of positive integers.

    Compositions index the basis elements of QSym. They are immutable value
    objects. Sorting uses the canonical order: by length first, then
    lexicographically.

    Example:
        >>> from quasipsi import Composition
        >>> alpha = Composition(1, 1, 4, 2, 1)
        >>> alpha
        Composition(1, 1, 4, 2, 1)
        >>> print(alpha)
        [1,1,4,2,1]
        >>> alpha.size, alpha.length
        (9, 5)
        >>> sorted([Composition(1, 2), Composition(3), Composition(2, 1)])
        [Composition(3), Composition(1, 2), Composition(2, 1)]

    """

    def __new__(cls, *parts):
        """Create a composition from its parts, or from a single iterable of parts."""
        if len(parts) == 1 and not isinstance(parts[0], numbers.Integral):
            parts = tuple(parts[0])
        if any(isinstance(part, float) for part in parts):
            raise TypeError(f"Parts of a composition must be integers, got {parts}")
        values = tuple(int(part) for part in parts)
        if any(part < 1 for part in values):
            raise ValueError(
                f"All parts of a composition must be positive, got {list(values)}"
            )
        return super().__new__(cls, values)

    @property
    def size(self) -> int:
        """Return |alpha|, the sum of the parts."""
        return sum(self)

    @property
    def length(self) -> int:
        """Return l(alpha), the number of parts."""
        return len(self)

    @property
    def sort_key(self) -> tuple:
        """Key of the canonical total order (length, then lexicographic)."""
        return (len(self), tuple(self))

    def reverse(self) -> "Composition":
        """Return the reversed composition alpha^rev."""
        return Composition(tuple(self)[::-1])

    def complement(self) -> "Composition":
        """Return the composition whose descent set is the complement of ours."""
        n = self.size
        if n == 0:
            return Composition()
        return composition_of_set(set(range(1, n)) - descent_set(self), n)

    def is_partition(self) -> bool:
        """Return whether the parts are weakly decreasing."""
        return all(a >= b for a, b in zip(self, self[1:]))

    def __lt__(self, other):
        return self.sort_key < _sort_key(other)

    def __le__(self, other):
        return self.sort_key <= _sort_key(other)

    def __gt__(self, other):
        return self.sort_key > _sort_key(other)

    def __ge__(self, other):
        return self.sort_key >= _sort_key(other)

    def __repr__(self) -> str:
        """Return a string representation of the composition."""
        return f"{self.__class__.__name__}({', '.join(str(p) for p in self)})"

    def __str__(self) -> str:
        """Return the bracketed text form, e.g. [1,1,4,2,1]."""
        return "[" + ",".join(str(p) for p in self) + "]"


class Partition(Composition):
    """A composition with weakly decreasing parts.

    Example:
        >>> Partition(2, 1)
        Partition(2, 1)
        >>> Partition.from_composition(Composition(1, 3, 2))
        Partition(3, 2, 1)

    """

    def __new__(cls, *parts):
        """Create a partition, checking that the parts are weakly decreasing."""
        self = super().__new__(cls, *parts)
        if not self.is_partition():
            raise ValueError(
                f"The parts of a partition must be weakly decreasing, got {list(self)}"
            )
        return self

    @classmethod
    def from_composition(cls, alpha: Iterable[int]) -> "Partition":
        """Sort the parts of a composition into a partition."""
        return cls(sorted(alpha, reverse=True))

    @property
    def multiplicities(self) -> dict[int, int]:
        """Return m_i, the number of parts equal to i, for the parts present."""
        return dict(sorted(Counter(self).items()))


def _sort_key(alpha) -> tuple:
    return (len(alpha), tuple(alpha))


def descent_set(alpha: Iterable[int]) -> frozenset[int]:
    """Return D(alpha), the partial sums of alpha excluding the total.

    Example:
        >>> sorted(descent_set(Composition(1, 1, 4, 2, 1)))
        [1, 2, 6, 8]

    """
    parts = tuple(alpha)
    return frozenset(itertools.accumulate(parts[:-1]))


def composition_of_set(subset: Iterable[int], n: int) -> Composition:
    """Return co(S), the composition of n with descent set S.

    Args:
        subset: A subset of {1, ..., n-1}.
        n: The size of the composition.

    Raises:
        ValueError: If an element of the set lies outside of {1, ..., n-1}.

    Returns:
        The composition alpha with D(alpha) = S.
    """
    if n < 0:
        raise ValueError(f"Compositions can not have a negative size ({n})")
    points = sorted(set(subset))
    if any(s <= 0 or s >= n for s in points):
        raise ValueError(f"The set {points} is not a subset of [1, {n - 1}]")
    if n == 0:
        return Composition()
    bounds = [0, *points, n]
    return Composition(b - a for a, b in zip(bounds, bounds[1:]))


def concat(alpha: Iterable[int], beta: Iterable[int]) -> Composition:
    """Return the concatenation alpha . beta."""
    return Composition(tuple(alpha) + tuple(beta))


def near_concat(alpha: Iterable[int], beta: Iterable[int]) -> Composition:
    """Return the near-concatenation, merging the last and first parts in the middle.

    Raises:
        ValueError: If either composition is empty.
    """
    left, right = tuple(alpha), tuple(beta)
    if not left or not right:
        raise ValueError("The near-concatenation is only defined for nonempty inputs")
    return Composition(left[:-1] + (left[-1] + right[0],) + right[1:])


def refines(alpha: Iterable[int], beta: Iterable[int]) -> bool:
    """Return whether alpha refines beta, i.e. D(beta) is a subset of D(alpha)."""
    alpha, beta = tuple(alpha), tuple(beta)
    return sum(alpha) == sum(beta) and descent_set(beta) <= descent_set(alpha)


def coarsenings(alpha: Iterable[int]) -> list[Composition]:
    """Return all compositions beta with alpha refining beta, in canonical order."""
    alpha = Composition(alpha)
    descents = sorted(descent_set(alpha))
    return sorted(
        composition_of_set(subset, alpha.size)
        for k in range(len(descents) + 1)
        for subset in itertools.combinations(descents, k)
    )


def refinements(alpha: Iterable[int]) -> list[Composition]:
    """Return all compositions beta that refine alpha, in canonical order."""
    alpha = Composition(alpha)
    descents = descent_set(alpha)
    free = sorted(set(range(1, alpha.size)) - descents)
    return sorted(
        composition_of_set(descents.union(extra), alpha.size)
        for k in range(len(free) + 1)
        for extra in itertools.combinations(free, k)
    )


def blocks(alpha: Iterable[int], beta: Iterable[int]) -> list[Composition]:
    """Split alpha into the consecutive pieces alpha^(i) that sum to the parts of beta.

    Raises:
        RefinementError: If alpha does not refine beta.
    """
    alpha, beta = tuple(alpha), tuple(beta)
    pieces: list[Composition] = []
    position = 0
    for target in beta:
        total, start = 0, position
        while total < target and position < len(alpha):
            total += alpha[position]
            position += 1
        if total != target:
            raise utils.RefinementError(
                f"{Composition(alpha)} does not refine {Composition(beta)}"
            )
        pieces.append(Composition(alpha[start:position]))
    if position != len(alpha):
        raise utils.RefinementError(
            f"{Composition(alpha)} does not refine {Composition(beta)}"
        )
    return pieces


def pi(alpha: Iterable[int]) -> int:
    """Return pi(alpha), the product of the partial sums of alpha.

    Example:
        >>> pi(Composition(1, 1, 4, 2, 1))
        864

    """
    return math.prod(itertools.accumulate(tuple(alpha)))


def pi_rel(alpha: Iterable[int], beta: Iterable[int]) -> int:
    """Return pi(alpha, beta), the product of pi over the blocks of alpha in beta.

    Example:
        >>> pi_rel(Composition(1, 1, 4, 2, 1), Composition(2, 7))
        336

    """
    return math.prod(pi(piece) for piece in blocks(alpha, beta))


def z(alpha: Iterable[int]) -> int:
    """Return z_alpha = prod_i i^(m_i) m_i!, which only depends on the sorted parts."""
    return math.prod(
        part**count * math.factorial(count) for part, count in Counter(alpha).items()
    )


def is_in_pi(sigma: Iterable[int], alpha: Iterable[int], beta: Iterable[int]) -> bool:
    """Check whether a permutation lies in Pi(alpha, beta).

    The letters of sigma are cut into blocks with sizes given by beta, and
    these into subblocks given by alpha. Each subblock has to end in the
    maximum of its block so far.

    Args:
        sigma: Permutation of 1..n in one-line notation.
        alpha: Composition of n refining beta.
        beta: Composition of n.

    Returns:
        True if sigma is in Pi(alpha, beta).
    """
    alpha = Composition(alpha)
    word = utils.check_permutation(sigma, alpha.size)
    start = 0
    for piece in blocks(alpha, beta):
        for end in itertools.accumulate(piece):
            if word[start + end - 1] != max(word[start : start + end]):
                return False
        start += piece.size
    return True


def enumerate_pi(
    alpha: Iterable[int], beta: Iterable[int], guard: Optional[int] = None
) -> list[tuple[int, ...]]:
    """List Pi(alpha, beta) by brute force over all permutations of [n].

    Args:
        alpha: Composition refining beta.
        beta: Composition of the same size.
        guard: Largest n allowed. Defaults to `utils.PERMUTATION_GUARD`.

    Returns:
        The permutations, in lexicographic order.
    """
    alpha = Composition(alpha)
    blocks(alpha, beta)
    utils.check_guard(alpha.size, guard, utils.PERMUTATION_GUARD, "permutations")
    return [
        sigma
        for sigma in itertools.permutations(range(1, alpha.size + 1))
        if is_in_pi(sigma, alpha, beta)
    ]


def shuffles(alpha: Iterable[int], beta: Iterable[int]) -> list[Composition]:
    """Return the multiset of shuffles of alpha and beta, in canonical order.

    Example:
        >>> shuffles(Composition(1), Composition(1))
        [Composition(1, 1), Composition(1, 1)]

    """
    alpha, beta = tuple(alpha), tuple(beta)
    total = len(alpha) + len(beta)
    result = []
    for positions in itertools.combinations(range(total), len(alpha)):
        chosen = set(positions)
        left, right = iter(alpha), iter(beta)
        result.append(
            Composition(
                next(left) if i in chosen else next(right) for i in range(total)
            )
        )
    return sorted(result)


@lru_cache(maxsize=4096)
def _quasi_shuffles(alpha: tuple, beta: tuple) -> tuple[tuple, ...]:
    if not alpha:
        return (beta,)
    if not beta:
        return (alpha,)
    head, tail = alpha[0], alpha[1:]
    first, rest = beta[0], beta[1:]
    return (
        tuple((head,) + word for word in _quasi_shuffles(tail, beta))
        + tuple((first,) + word for word in _quasi_shuffles(alpha, rest))
        + tuple((head + first,) + word for word in _quasi_shuffles(tail, rest))
    )


def quasi_shuffles(alpha: Iterable[int], beta: Iterable[int]) -> list[Composition]:
    """Return the multiset of overlapping (quasi-)shuffles of alpha and beta.

    Besides all shuffles, adjacent parts taken one from each composition may
    be merged into their sum. This is the product rule of the M basis.
    """
    return sorted(
        Composition(word) for word in _quasi_shuffles(tuple(alpha), tuple(beta))
    )


def deconcatenations(alpha: Iterable[int]) -> list[tuple[Composition, Composition]]:
    """Return all pairs (beta, gamma) with beta . gamma = alpha."""
    parts = tuple(alpha)
    return [
        (Composition(parts[:i]), Composition(parts[i:])) for i in range(len(parts) + 1)
    ]


def compositions(n: int) -> list[Composition]:
    """Return all compositions of n, in canonical order."""
    if n < 0:
        raise ValueError(f"Compositions can not have a negative size ({n})")
    if n == 0:
        return [Composition()]
    return coarsenings(Composition([1] * n))


def partitions(n: int) -> list[Partition]:
    """Return all partitions of n, in canonical order."""
    return [Partition(alpha) for alpha in compositions(n) if alpha.is_partition()]


def rearrangements(lam: Iterable[int]) -> list[Composition]:
    """Return the distinct compositions that rearrange to the given parts."""
    return sorted({Composition(p) for p in itertools.permutations(tuple(lam))})


def rearranges_to(alpha: Iterable[int], lam: Iterable[int]) -> bool:
    """Return whether alpha is a rearrangement of lam."""
    return sorted(alpha) == sorted(lam)
