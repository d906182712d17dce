"""quasipsi: Quasisymmetric power sums and P-partition generating functions.

Quasisymmetric functions are kept exactly, as rational combinations of the
monomial (M), fundamental (L) and type 1 power sum (psi) bases. Labeled posets
give generating functions K, whose psi expansions are signed sums over pointed
partitions.

Example:
    The generating function of the poset with 1 < 2 > 3, in the psi basis

    >>> import quasipsi
    >>> poset = quasipsi.LabeledPoset(3, [(1, 2), (3, 2)])
    >>> k = quasipsi.ppartition.k_generating_function(poset)
    >>> print(k)
    1*L[1,2] + 1*L[2,1]
    >>> print(k.convert("psi"))
    -1*psi[3] + 2*psi[1,1,1]

    The minimal-length terms of a naturally labeled poset, and its number of
    zigzag labelings

    >>> fence = quasipsi.LabeledPoset(5, [(1, 4), (2, 4), (2, 5), (3, 5)])
    >>> print(quasipsi.zigzag.k_tilde(fence))
    2*psi[1,1,3] + 4*psi[1,2,2]
    >>> quasipsi.zigzag.zigzag_count_formula(fence)
    8

    Murnaghan-Nakayama coefficients of a skew shape

    >>> shape = quasipsi.SkewShape([6, 3, 3, 2], [2, 2, 1])
    >>> quasipsi.tableaux.min1_skew(shape)
    -1

"""

import logging
from quasipsi import ppartition
from quasipsi import qsym
from quasipsi import series_parallel
from quasipsi import tableaux
from quasipsi import zigzag
from .composition import Composition
from .composition import Partition
from .poset import LabeledPoset
from .poset import SkewShape
from .qsym import QSymElement
from .qsym import TensorElement
from .tableaux import BorderStripTableau


logging.getLogger(__name__).addHandler(logging.NullHandler())

__version__ = "0.1.0"

__all__ = [
    "Composition",
    "Partition",
    "QSymElement",
    "TensorElement",
    "LabeledPoset",
    "SkewShape",
    "BorderStripTableau",
    "qsym",
    "ppartition",
    "zigzag",
    "series_parallel",
    "tableaux",
]
