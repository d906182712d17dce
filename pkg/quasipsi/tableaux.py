"""Border-strip tableaux and the Murnaghan-Nakayama expansion of skew Schur functions.

The skew Schur function s_(lambda/mu) is the generating function of the
labeled poset of the shape, and its psi coefficients are the signed counts
chi(lambda/mu, alpha) of border-strip tableaux.

Example:
    >>> from quasipsi import SkewShape, tableaux
    >>> shape = SkewShape([2, 1])
    >>> tableaux.chi(shape, [3]), tableaux.chi(shape, [1, 1, 1])
    (-1, 2)
    >>> print(tableaux.skew_schur_psi(shape))
    -1*psi[3] + 2*psi[1,1,1]

"""
import logging
from collections.abc import Iterable
from collections.abc import Iterator
from collections.abc import Mapping
from fractions import Fraction
from functools import lru_cache
from typing import Optional
import pandas as pd
from quasipsi import composition as comp
from quasipsi import utils
from quasipsi.composition import Composition
from quasipsi.composition import Partition
from quasipsi.poset import Cell
from quasipsi.poset import SkewShape
from quasipsi.poset import skew_shape_poset
from quasipsi.ppartition import StarredPartition
from quasipsi.ppartition import diagnose_slice
from quasipsi.qsym import QSymElement


logger = logging.getLogger(__name__)


def _row_lengths(cells: Iterable[Cell], rows: int) -> Optional[tuple[int, ...]]:
    """Return the partition formed by a set of cells, or None if it is not one."""
    chosen = set(cells)
    lengths = []
    for row in range(1, rows + 1):
        length = sum(1 for r, _ in chosen if r == row)
        if any((row, col) not in chosen for col in range(1, length + 1)):
            return None
        lengths.append(length)
    if any(a < b for a, b in zip(lengths, lengths[1:])):
        return None
    while lengths and lengths[-1] == 0:
        lengths.pop()
    return tuple(lengths)


def _inner_cells(shape: SkewShape) -> list[Cell]:
    return [
        (row, col)
        for row, length in enumerate(shape.inner, start=1)
        for col in range(1, length + 1)
    ]


class BorderStripTableau:
    """A filling of a skew shape in which every value class is a border strip."""

    def __init__(self, shape: SkewShape, fill: Mapping[Cell, int]) -> None:
        """Create a border-strip tableau, checking all of its conditions.

        Args:
            shape: The skew shape lambda/mu.
            fill: Mapping from every cell of the shape to a value 1..k. Each value
                must occur.

        Raises:
            ShapeError: If the filling is not a border-strip tableau of the shape.
        """
        self._shape = shape
        self._fill = {cell: int(fill[cell]) for cell in shape.cells if cell in fill}
        if set(fill) != set(shape.cells):
            raise utils.ShapeError("The filling does not cover exactly the shape cells")
        values = sorted(set(self._fill.values()))
        if values != list(range(1, len(values) + 1)):
            raise utils.ShapeError(f"The values {values} are not exactly 1..k")
        for (row, col), value in self._fill.items():
            for neighbour in ((row, col + 1), (row + 1, col)):
                if neighbour in self._fill and self._fill[neighbour] < value:
                    raise utils.ShapeError(
                        f"Rows and columns must weakly increase at cell {neighbour}"
                    )
        inner = _inner_cells(shape)
        previous = tuple(shape.inner)
        self._heights = []
        for value in values:
            below = [cell for cell, v in self._fill.items() if v <= value]
            current = _row_lengths(below + inner, len(shape.outer))
            if current is None:
                raise utils.ShapeError(
                    f"The cells with values <= {value} are not a shape"
                )
            strip = SkewShape(current, previous)
            if not strip.is_border_strip():
                raise utils.ShapeError(
                    f"The cells with value {value} are not a border strip"
                )
            self._heights.append(strip.height())
            previous = current

    @property
    def shape(self) -> SkewShape:
        """Return the skew shape."""
        return self._shape

    @property
    def fill(self) -> dict[Cell, int]:
        """Return the map cell -> value."""
        return dict(self._fill)

    @property
    def type(self) -> Composition:
        """Return alpha, where value i appears alpha_i times."""
        counts = [0] * max(self._fill.values(), default=0)
        for value in self._fill.values():
            counts[value - 1] += 1
        return Composition(counts)

    @property
    def strip_heights(self) -> list[int]:
        """Return the height of the strip of each value."""
        return list(self._heights)

    @property
    def height(self) -> int:
        """Return the total height, the sum of the strip heights."""
        return sum(self._heights)

    @property
    def sign(self) -> int:
        """Return (-1) to the height."""
        return utils.sign(self.height)

    def visualize(self, ax=None):
        """Draw the tableau with its values, see `SkewShape.visualize`."""
        return self._shape.visualize(ax=ax, fill=self._fill)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BorderStripTableau):
            return NotImplemented
        return self._shape == other.shape and self._fill == other.fill

    def __hash__(self) -> int:
        return hash((self._shape, tuple(sorted(self._fill.items()))))

    def __repr__(self) -> str:
        """Return a string representation of the tableau."""
        props = [("shape", self._shape), ("fill", self._fill)]
        propstr = ", ".join([f"{k}={v!r}" for k, v in props])
        return f"{self.__class__.__name__}({propstr})"


def _check_type(shape: SkewShape, alpha: Iterable[int]) -> Composition:
    alpha = Composition(alpha)
    if alpha.size != shape.size:
        raise utils.ShapeError(
            f"The type {alpha} has size {alpha.size}, "
            f"but {shape} has {shape.size} cells"
        )
    return alpha


def _bounded_partitions(
    outer: tuple[int, ...], inner: tuple[int, ...], size: int
) -> Iterator[tuple[int, ...]]:
    """Yield the partitions nu with inner <= nu <= outer and |nu| = size."""
    inner = inner + (0,) * (len(outer) - len(inner))

    def rows(i: int, cap: int, left: int) -> Iterator[tuple[int, ...]]:
        if i == len(outer):
            if left == 0:
                yield ()
            return
        for length in range(min(outer[i], cap), inner[i] - 1, -1):
            if length <= left:
                for rest in rows(i + 1, length, left - length):
                    yield (length, *rest)

    for nu in rows(0, outer[0] if outer else 0, size):
        yield tuple(length for length in nu if length > 0)


def _rim_strips(outer: tuple, inner: tuple, size: int) -> Iterator[tuple[tuple, int]]:
    """Yield (nu, height) for the border strips outer/nu of the given size."""
    for nu in _bounded_partitions(outer, inner, sum(outer) - size):
        strip = SkewShape(outer, nu)
        if strip.is_border_strip():
            yield nu, strip.height()


def enumerate_bst(
    shape: SkewShape, alpha: Iterable[int], guard: Optional[int] = None
) -> list[BorderStripTableau]:
    """List the border-strip tableaux of a shape and type alpha.

    The largest value is placed first, on a border strip along the outer rim,
    and the rest of the shape is filled recursively.

    Args:
        shape: The skew shape.
        alpha: The type, a composition of the number of cells.
        guard: Largest number of cells allowed. Defaults to `utils.SHAPE_GUARD`.

    Raises:
        ShapeError: If |alpha| differs from the number of cells.
    """
    alpha = _check_type(shape, alpha)
    utils.check_guard(shape.size, guard, utils.SHAPE_GUARD, "border-strip tableaux")

    def fillings(outer: tuple, parts: tuple) -> Iterator[dict[Cell, int]]:
        if not parts:
            yield {}
            return
        for nu, _ in _rim_strips(outer, tuple(shape.inner), parts[-1]):
            cells = SkewShape(outer, nu).cells
            for rest in fillings(nu, parts[:-1]):
                yield {**rest, **{cell: len(parts) for cell in cells}}

    found = [
        BorderStripTableau(shape, fill)
        for fill in fillings(tuple(shape.outer), tuple(alpha))
    ]
    return sorted(found, key=lambda t: [t.fill[cell] for cell in shape.cells])


@lru_cache(maxsize=None)
def _signed_count(outer: tuple, inner: tuple, alpha: tuple) -> int:
    if not alpha:
        return 1
    return sum(
        utils.sign(height) * _signed_count(nu, inner, alpha[:-1])
        for nu, height in _rim_strips(outer, inner, alpha[-1])
    )


def chi(shape: SkewShape, alpha: Iterable[int]) -> int:
    """Return chi(lambda/mu, alpha), the sum of (-1)^height over border-strip tableaux.

    Raises:
        ShapeError: If |alpha| differs from the number of cells.
    """
    alpha = _check_type(shape, alpha)
    return _signed_count(tuple(shape.outer), tuple(shape.inner), tuple(alpha))


def skew_schur_psi(shape: SkewShape, guard: Optional[int] = None) -> QSymElement:
    """Return s_(lambda/mu) in the psi basis, with chi values as coefficients.

    Args:
        shape: The skew shape.
        guard: Largest number of cells allowed. Defaults to `utils.SHAPE_GUARD`.
    """
    utils.check_guard(shape.size, guard, utils.SHAPE_GUARD, "skew Schur expansions")
    terms = {alpha: chi(shape, alpha) for alpha in comp.compositions(shape.size)}
    return QSymElement(terms, "psi")


def skew_schur_p(
    shape: SkewShape, guard: Optional[int] = None
) -> dict[Partition, Fraction]:
    """Return the power sum expansion of s_(lambda/mu), {nu: chi(nu) / z_nu}.

    Example:
        >>> from quasipsi import SkewShape
        >>> {str(nu): str(c) for nu, c in skew_schur_p(SkewShape([1, 1])).items()}
        {'[2]': '-1/2', '[1,1]': '1/2'}

    """
    utils.check_guard(shape.size, guard, utils.SHAPE_GUARD, "skew Schur expansions")
    result = {}
    for nu in comp.partitions(shape.size):
        value = Fraction(chi(shape, nu), comp.z(nu))
        if value:
            result[nu] = value
    return result


def min1_skew(shape: SkewShape) -> int:
    """Return Min1(s_(lambda/mu)): (-1)^height for a border strip, otherwise 0."""
    if shape.is_border_strip():
        return utils.sign(shape.height())
    return 0


def chi_table(*shapes: SkewShape) -> pd.DataFrame:
    """Tabulate chi for shapes of equal size, one row per partition nu.

    Raises:
        ShapeError: If the shapes differ in size.
    """
    sizes = {shape.size for shape in shapes}
    if len(sizes) != 1:
        raise utils.ShapeError(
            f"All shapes should have the same size, got {sorted(sizes)}"
        )
    (size,) = sizes
    partitions = comp.partitions(size)
    table = pd.DataFrame(
        {str(shape): [chi(shape, nu) for nu in partitions] for shape in shapes},
        index=pd.Index([str(nu) for nu in partitions], name="nu"),
    )
    return table


def enumerate_ssyt(
    shape: SkewShape, max_value: int, guard: Optional[int] = None
) -> list[dict[Cell, int]]:
    """List the semistandard fillings of a shape with values 1..max_value.

    Rows weakly increase to the right and columns strictly increase downwards.
    """
    utils.check_guard(shape.size, guard, utils.SHAPE_GUARD, "semistandard tableaux")
    cells = shape.cells
    found = []

    def place(index: int, filled: dict[Cell, int]) -> None:
        if index == len(cells):
            found.append(dict(filled))
            return
        row, col = cells[index]
        low = max(filled.get((row, col - 1), 1), filled.get((row - 1, col), 0) + 1)
        for value in range(low, max_value + 1):
            filled[(row, col)] = value
            place(index + 1, filled)
            del filled[(row, col)]

    place(0, {})
    return found


def bst_to_starred(tableau: BorderStripTableau) -> StarredPartition:
    """Map a border-strip tableau to the pointed partition of the shape's poset.

    The cells with value i become level i. The sign of the result is
    (-1)^height of the tableau.
    """
    labels = tableau.shape.cell_labels()
    covers = skew_shape_poset(tableau.shape).covers
    levels = {}
    for value in range(1, len(tableau.type) + 1):
        members = sorted(labels[cell] for cell, v in tableau.fill.items() if v == value)
        chosen = set(members)
        diagnosis = diagnose_slice(
            members, [(a, b) for a, b in covers if a in chosen and b in chosen]
        )
        for x in members:
            if x == members[0]:
                mark = "star"
            elif x in diagnosis.ideal:
                mark = "minus"
            else:
                mark = "plus"
            levels[x] = (value, mark)
    return StarredPartition(levels)


def shapes_of_size(n: int) -> list[SkewShape]:
    """Return the skew shapes lambda/mu with n cells and no empty rows or columns.

    Example:
        >>> [str(shape) for shape in shapes_of_size(2)]
        ['[1,1]/[]', '[2]/[]', '[2,1]/[1]']

    """
    if n < 1:
        raise ValueError(f"Shapes need at least one cell, not {n}")
    found = []

    def extend(outer: tuple, inner: tuple, left: int) -> None:
        if left == 0:
            shape = SkewShape(outer, tuple(m for m in inner if m > 0))
            if shape.grid().any(axis=0).all():
                found.append(shape)
            return
        top_outer = outer[-1] if outer else n
        top_inner = inner[-1] if inner else n
        for lam in range(1, top_outer + 1):
            for mu in range(max(0, lam - left), min(lam - 1, top_inner) + 1):
                extend(outer + (lam,), inner + (mu,), left - (lam - mu))

    extend((), (), n)
    return sorted(found, key=lambda s: (tuple(s.outer), tuple(s.inner)))
