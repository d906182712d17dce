"""Minimal-length psi terms, zigzag labelings and irreducibility of K_P.

Throughout, z_1 < ... < z_m are the minimal elements of a naturally labeled
poset, sorted by label. Labelings phi are tuples (phi(1), ..., phi(n)).

Example:
    >>> from quasipsi import LabeledPoset, zigzag
    >>> poset = LabeledPoset(5, [(1, 3), (3, 5), (2, 4), (1, 4), (2, 5)])
    >>> print(zigzag.k_tilde(poset))
    1*psi[1,4] + 1*psi[2,3]
    >>> zigzag.apply_fS((2, 3, 1, 4), {1, 2})
    (1, 4, 3, 2)

"""
import itertools
import logging
from collections.abc import Iterable
from collections.abc import Sequence
from fractions import Fraction
from typing import Optional
from quasipsi import qsym
from quasipsi import utils
from quasipsi.composition import Composition
from quasipsi.poset import LabeledPoset
from quasipsi.qsym import QSymElement


logger = logging.getLogger(__name__)

Labeling = tuple[int, ...]


def check_natural(poset: LabeledPoset) -> None:
    """Check that a poset is naturally labeled.

    Raises:
        LabelingError: If the poset has a strict edge.
    """
    if not poset.is_naturally_labeled():
        raise utils.LabelingError(
            f"Expected a naturally labeled poset, but {poset.strict_edges()} "
            "are strict edges"
        )


def sigma_weight(poset: LabeledPoset, sigma: Iterable[int]) -> Composition:
    """Return the weight alpha(sigma) of a permutation of the minimal elements.

    With V(S) the filter generated by a set S of minimal elements,
    alpha(sigma)_i = |V(z_sigma_i, ..., z_sigma_m)|
    - |V(z_sigma_(i+1), ..., z_sigma_m)|.

    Args:
        poset: The poset, with m minimal elements.
        sigma: A permutation of 1..m in one-line notation.
    """
    minimal = poset.minimal_elements()
    word = utils.check_permutation(sigma, len(minimal))
    sizes = [
        len(poset.principal_filter(minimal[j - 1] for j in word[i:]))
        for i in range(len(word) + 1)
    ]
    return Composition(a - b for a, b in zip(sizes, sizes[1:]))


def k_tilde(poset: LabeledPoset, guard: Optional[int] = None) -> QSymElement:
    """Return the terms of K_P of minimal psi-length, as a sum over sigma.

    For a naturally labeled poset with m minimal elements these are the terms
    of length m, and they equal the sum of psi_alpha(sigma) over all
    permutations sigma of the minimal elements.

    Args:
        poset: A naturally labeled poset.
        guard: Largest number of minimal elements allowed. Defaults to
            `utils.PERMUTATION_GUARD`.

    Raises:
        LabelingError: If the poset is not naturally labeled.
    """
    check_natural(poset)
    m = len(poset.minimal_elements())
    utils.check_guard(m, guard, utils.PERMUTATION_GUARD, "minimal element orders")
    terms: dict[Composition, int] = {}
    for sigma in itertools.permutations(range(1, m + 1)):
        alpha = sigma_weight(poset, sigma)
        terms[alpha] = terms.get(alpha, 0) + 1
    return QSymElement(terms, "psi")


def apply_f(pi: Sequence[int], i: int) -> Labeling:
    """Move the i-th letter of pi to the end."""
    word = tuple(pi)
    if not 1 <= i < len(word):
        raise ValueError(f"f_i needs 1 <= i < {len(word)}, got i={i}")
    return word[: i - 1] + word[i:] + (word[i - 1],)


def apply_g(pi: Sequence[int], i: int) -> Labeling:
    """Move the last letter of pi to position i, the inverse of `apply_f`."""
    word = tuple(pi)
    if not 1 <= i < len(word):
        raise ValueError(f"g_i needs 1 <= i < {len(word)}, got i={i}")
    return word[: i - 1] + (word[-1],) + word[i - 1 : -1]


def _check_subset(subset: Iterable[int], m: int) -> list[int]:
    chosen = sorted(set(subset))
    if any(not 1 <= s < m for s in chosen):
        raise ValueError(f"{chosen} is not a subset of [1, {m - 1}]")
    return chosen


def apply_fS(pi: Sequence[int], subset: Iterable[int]) -> Labeling:  # noqa: N802
    """Apply f_S: drop the letters at positions in S and append them in reverse.

    Example:
        >>> apply_fS((2, 3, 1, 4), {1, 2})
        (1, 4, 3, 2)

    """
    word = utils.check_permutation(pi, len(tuple(pi)))
    chosen = _check_subset(subset, len(word))
    kept = tuple(x for position, x in enumerate(word, 1) if position not in chosen)
    return kept + tuple(word[s - 1] for s in reversed(chosen))


def apply_gS(pi: Sequence[int], subset: Iterable[int]) -> Labeling:  # noqa: N802
    """Apply g_S, the inverse of f_S."""
    word = utils.check_permutation(pi, len(tuple(pi)))
    chosen = _check_subset(subset, len(word))
    moved = iter(reversed(word[len(word) - len(chosen) :]))
    kept = iter(word[: len(word) - len(chosen)])
    return tuple(
        next(moved) if position in chosen else next(kept)
        for position in range(1, len(word) + 1)
    )


def _check_labeling(labeling: Sequence[int], n: int) -> Labeling:
    try:
        return utils.check_permutation(labeling, n)
    except ValueError as err:
        raise utils.LabelingError(f"Not a bijection onto 1..{n}: {err}") from err


def is_pi_sigma_labeling(
    poset: LabeledPoset,
    labeling: Sequence[int],
    pi: Sequence[int],
    sigma: Sequence[int],
) -> bool:
    """Check whether phi is a (pi, sigma)-labeling, i.e. lies in T_P(pi, sigma).

    The conditions are: phi(z_pi_1) > ... > phi(z_pi_m), and every y has
    phi(y) >= phi(z_i), where i is the value appearing latest in sigma among
    the minimal elements z_i below y.
    """
    phi = _check_labeling(labeling, poset.n)
    minimal = poset.minimal_elements()
    pi = utils.check_permutation(pi, len(minimal))
    sigma = utils.check_permutation(sigma, len(minimal))
    values = [phi[minimal[i - 1] - 1] for i in pi]
    if any(a <= b for a, b in zip(values, values[1:])):
        return False
    latest = {i: position for position, i in enumerate(sigma)}
    for y in poset.elements:
        below = [i for i, z in enumerate(minimal, 1) if poset.less_equal(z, y)]
        i = max(below, key=latest.__getitem__)
        if phi[y - 1] < phi[minimal[i - 1] - 1]:
            return False
    return True


def enumerate_T(  # noqa: N802
    poset: LabeledPoset,
    pi: Sequence[int],
    sigma: Sequence[int],
    guard: Optional[int] = None,
) -> list[Labeling]:
    """List T_P(pi, sigma) by brute force over all bijections.

    Args:
        poset: The poset.
        pi: Permutation of the minimal elements fixing the order of their labels.
        sigma: Permutation deciding which minimal element bounds each element.
        guard: Largest poset size allowed. Defaults to `utils.LABELING_GUARD`.
    """
    utils.check_guard(poset.n, guard, utils.LABELING_GUARD, "labelings")
    return [
        phi
        for phi in itertools.permutations(range(1, poset.n + 1))
        if is_pi_sigma_labeling(poset, phi, pi, sigma)
    ]


def is_zigzag_labeling(poset: LabeledPoset, labeling: Sequence[int]) -> bool:
    """Check the two zigzag conditions for a bijection phi: P -> [n].

    A minimal x with phi(x) != 1 needs some y > x with phi(y) < phi(x), and a
    non-minimal x needs some minimal y < x with phi(y) < phi(x).
    """
    phi = _check_labeling(labeling, poset.n)
    minimal = set(poset.minimal_elements())
    for x in poset.elements:
        value = phi[x - 1]
        if x in minimal:
            witnesses = poset.up_set(x) - {x}
            if value != 1 and not any(phi[y - 1] < value for y in witnesses):
                return False
        elif not any(phi[y - 1] < value for y in poset.down_set(x) & minimal):
            return False
    return True


def enumerate_zigzag_labelings(
    poset: LabeledPoset, guard: Optional[int] = None
) -> list[Labeling]:
    """List all zigzag labelings, in lexicographic order.

    Args:
        poset: The poset.
        guard: Largest poset size allowed. Defaults to `utils.LABELING_GUARD`.
    """
    utils.check_guard(poset.n, guard, utils.LABELING_GUARD, "labelings")
    found = [
        phi
        for phi in itertools.permutations(range(1, poset.n + 1))
        if is_zigzag_labeling(poset, phi)
    ]
    logger.debug("Found %s zigzag labelings of %s", len(found), poset)
    return found


def zigzag_type(poset: LabeledPoset, labeling: Sequence[int]) -> Labeling:
    """Return the type pi of a labeling: phi(z_pi_1) > ... > phi(z_pi_m)."""
    phi = _check_labeling(labeling, poset.n)
    minimal = poset.minimal_elements()
    return tuple(
        sorted(
            range(1, len(minimal) + 1),
            key=lambda i: phi[minimal[i - 1] - 1],
            reverse=True,
        )
    )


def zigzag_count_formula(poset: LabeledPoset, guard: Optional[int] = None) -> int:
    """Count the zigzag labelings as (n - 1)! Max1(K~_P), without listing them.

    Raises:
        LabelingError: If the poset is not naturally labeled.
    """
    if poset.n == 0:
        raise ValueError("The empty poset has no zigzag labelings to count")
    value = utils.factorial(poset.n - 1) * qsym.max1(k_tilde(poset, guard=guard))
    return utils.as_integer(value)


def irreducibility_certificate(
    poset: LabeledPoset, guard: Optional[int] = None
) -> Fraction:
    """Return Max1(K~_P), which is positive exactly when P is connected."""
    return qsym.max1(k_tilde(poset, guard=guard))


def is_irreducible_natural(
    poset: LabeledPoset, certify: bool = True, guard: Optional[int] = None
) -> bool:
    """Decide whether K_P is irreducible in QSym, for a naturally labeled P.

    K_P is irreducible exactly when P is connected. With `certify`, a
    connected verdict is backed by checking that Max1(K~_P) > 0.

    Raises:
        LabelingError: If the poset is not naturally labeled. Irreducibility
            of general labeled posets is not decided.
    """
    check_natural(poset)
    connected = poset.is_connected()
    if connected and certify:
        certificate = irreducibility_certificate(poset, guard=guard)
        logger.info("Irreducibility certificate Max1(K~_P) = %s", certificate)
        if certificate <= 0:
            raise RuntimeError(
                f"The certificate Max1(K~_P) = {certificate} of a connected poset "
                "should be positive"
            )
    return connected


def irreducible_factors(poset: LabeledPoset) -> list[LabeledPoset]:
    """Return the connected components, whose K's are the irreducible factors of K_P."""
    check_natural(poset)
    return poset.components()
