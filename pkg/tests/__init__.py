import itertools
import json
from functools import lru_cache
from pathlib import Path
import numpy as np
from quasipsi import LabeledPoset
from quasipsi.poset import all_posets


test_folder = Path(__file__).resolve().parent
data_folder = test_folder / "test_data"


def load_poset(name: str) -> LabeledPoset:
    """Shorthand for reading a poset file from the test data folder."""
    document = json.loads((data_folder / name).read_text(encoding="utf-8"))
    return LabeledPoset(document["n"], document["covers"])


@lru_cache(maxsize=None)
def posets_of_size(n: int) -> tuple[LabeledPoset, ...]:
    """All posets of size n up to isomorphism, computed once per test session."""
    return tuple(all_posets(n))


def random_poset(
    rng: np.random.Generator, n: int, labeled: bool = True, density: float = 0.4
) -> LabeledPoset:
    """Draw a poset from random relations i < j, optionally with shuffled labels."""
    relations = [
        pair
        for pair in itertools.combinations(range(1, n + 1), 2)
        if rng.random() < density
    ]
    poset = LabeledPoset(n, relations)
    if not labeled:
        return poset
    return poset.relabel([int(x) for x in rng.permutation(n) + 1])
