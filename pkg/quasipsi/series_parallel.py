"""Series-parallel posets: recognition, canonical trees and enumeration.

A series-parallel poset is built from single elements by disjoint unions
(parallel nodes) and ordinal sums (series nodes). Canonical decomposition trees
are nested tuples: ``("L",)`` for a single element, ``("P", children)`` with
sorted children and ``("S", children)`` with children ordered bottom to top.

Example:
    >>> from quasipsi import series_parallel
    >>> [len(series_parallel.enumerate_series_parallel(n)) for n in range(1, 6)]
    [1, 2, 5, 15, 48]

"""
import functools
import itertools
import logging
from collections import Counter
from typing import Optional
import networkx as nx
import numpy as np
import pandas as pd
from quasipsi import composition as comp
from quasipsi import qsym
from quasipsi import utils
from quasipsi.poset import LabeledPoset
from quasipsi.poset import SkewShape
from quasipsi.poset import antichain
from quasipsi.poset import chain
from quasipsi.poset import disjoint_union
from quasipsi.poset import ordinal_sum
from quasipsi.poset import skew_shape_poset
from quasipsi.ppartition import k_generating_function


logger = logging.getLogger(__name__)

Tree = tuple
LEAF: Tree = ("L",)


def _comparability_graph(poset: LabeledPoset) -> nx.Graph:
    less = poset.comparability_matrix()
    graph = nx.from_numpy_array((less | less.T).astype(int))
    return nx.relabel_nodes(graph, lambda i: i + 1)


def _decompose(
    poset: LabeledPoset, graph: nx.Graph, elements: frozenset
) -> Optional[Tree]:
    if len(elements) == 1:
        return LEAF
    comparability = graph.subgraph(elements)
    parts = list(nx.connected_components(comparability))
    if len(parts) > 1:
        tag = "P"
    else:
        parts = list(nx.connected_components(nx.complement(comparability)))
        if len(parts) == 1:
            return None
        tag = "S"
    children = []
    for part in parts:
        child = _decompose(poset, graph, frozenset(part))
        if child is None:
            return None
        children.append((child, part))
    if tag == "P":
        return ("P", tuple(sorted(child for child, _ in children)))
    # Summands of a series node are totally ordered, count what lies below each.
    depth = {
        child_index: sum(poset.less_than(y, next(iter(part))) for y in elements)
        for child_index, (_, part) in enumerate(children)
    }
    ordered = sorted(range(len(children)), key=depth.__getitem__)
    return ("S", tuple(children[i][0] for i in ordered))


def decomposition_tree(poset: LabeledPoset) -> Optional[Tree]:
    """Return the canonical series-parallel tree of a poset, or None if there is none.

    The tree only depends on the isomorphism class of the unlabeled poset.

    Example:
        >>> from quasipsi import LabeledPoset
        >>> decomposition_tree(LabeledPoset(3, [(1, 3), (2, 3)]))
        ('S', (('P', (('L',), ('L',))), ('L',)))

    """
    if poset.n == 0:
        return ("P", ())
    graph = _comparability_graph(poset)
    return _decompose(poset, graph, frozenset(poset.elements))


def is_series_parallel(poset: LabeledPoset) -> bool:
    """Return whether the poset is series-parallel."""
    return decomposition_tree(poset) is not None


def is_n_free(poset: LabeledPoset) -> bool:
    """Return whether no four elements induce an N.

    An N is a < b > c < d with all other pairs incomparable.

    Example:
        >>> from quasipsi import LabeledPoset
        >>> is_n_free(LabeledPoset(4, [(1, 2), (3, 2), (3, 4)]))
        False

    """
    less = poset.comparability_matrix()
    incomparable = ~(less | less.T) & ~np.eye(poset.n, dtype=bool)
    # Axes are (a, b, c, d).
    pattern = (
        less[:, :, None, None]
        & less.T[None, :, :, None]
        & less[None, None, :, :]
        & incomparable[:, None, :, None]
        & incomparable[:, None, None, :]
        & incomparable[None, :, None, :]
    )
    return not pattern.any()


def tree_size(tree: Tree) -> int:
    """Return the number of elements of a decomposition tree."""
    if tree == LEAF:
        return 1
    return sum(tree_size(child) for child in tree[1])


def tree_to_poset(tree: Tree) -> LabeledPoset:
    """Build the naturally labeled poset of a decomposition tree."""
    if tree == LEAF:
        return chain(1)
    combine = disjoint_union if tree[0] == "P" else ordinal_sum
    parts = (tree_to_poset(child) for child in tree[1])
    return functools.reduce(combine, parts, antichain(0))


@functools.lru_cache(maxsize=None)
def _trees(n: int, exclude: str) -> tuple[Tree, ...]:
    """Return the canonical trees of size n whose root is not of the excluded kind."""
    found: list[Tree] = [LEAF] if n == 1 else []
    if exclude != "S":
        for sizes in comp.compositions(n):
            if len(sizes) < 2:
                continue
            pools = [_trees(size, "S") for size in sizes]
            found.extend(("S", children) for children in itertools.product(*pools))
    if exclude != "P":
        for lam in comp.partitions(n):
            if len(lam) < 2:
                continue
            choices = [
                itertools.combinations_with_replacement(_trees(size, "P"), count)
                for size, count in lam.multiplicities.items()
            ]
            for picked in itertools.product(*choices):
                children = tuple(sorted(itertools.chain.from_iterable(picked)))
                found.append(("P", children))
    return tuple(sorted(found))


def series_parallel_trees(n: int, guard: Optional[int] = None) -> list[Tree]:
    """Return the canonical trees of all series-parallel posets on n elements."""
    utils.check_guard(n, guard, utils.SERIES_PARALLEL_GUARD, "series-parallel posets")
    if n < 1:
        raise ValueError(f"Series-parallel posets need at least one element, not {n}")
    return sorted(set(_trees(n, "")))


def enumerate_series_parallel(
    n: int, guard: Optional[int] = None
) -> list[LabeledPoset]:
    """Return one naturally labeled poset per series-parallel isomorphism class.

    Args:
        n: The number of elements.
        guard: Largest n allowed. Defaults to `utils.SERIES_PARALLEL_GUARD`.
    """
    return [tree_to_poset(tree) for tree in series_parallel_trees(n, guard=guard)]


def labeled_counterexample() -> tuple[LabeledPoset, LabeledPoset]:
    """Return two non-isomorphic labeled series-parallel posets with equal K.

    These are the posets of the skew shapes 21 and 22/1, which are 180 degree
    rotations of each other. Labeled series-parallel posets are therefore not
    determined by their generating functions.
    """
    return skew_shape_poset(SkewShape([2, 1])), skew_shape_poset(SkewShape([2, 2], [1]))


def sp_distinguish(max_n: int, guard: Optional[int] = None) -> pd.DataFrame:
    """Check that K_P tells apart all series-parallel posets of each size up to max_n.

    Args:
        max_n: Largest size to check.
        guard: Largest size allowed. Defaults to `utils.SERIES_PARALLEL_GUARD`.

    Returns:
        DataFrame indexed by n, with the number of isomorphism classes, the
        number of distinct K_P (compared in the psi basis) and the number of
        collisions.
    """
    utils.check_guard(
        max_n, guard, utils.SERIES_PARALLEL_GUARD, "series-parallel posets"
    )
    rows = []
    for n in range(1, max_n + 1):
        posets = enumerate_series_parallel(n, guard=guard)
        keys = Counter(
            str(qsym.convert(k_generating_function(poset), "psi")) for poset in posets
        )
        rows.append(
            {
                "n": n,
                "classes": len(posets),
                "distinct_k": len(keys),
                "collisions": len(posets) - len(keys),
            }
        )
        logger.info("n=%s: %s classes, %s distinct K", n, len(posets), len(keys))
    return pd.DataFrame(rows).set_index("n")
