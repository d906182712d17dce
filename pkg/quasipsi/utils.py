"""Commonly used utility functions, size guards and exceptions for quasipsi."""
import logging
import math
import warnings
from collections.abc import Iterable
from fractions import Fraction
from typing import Optional
from typing import Union


logger = logging.getLogger(__name__)

LINEAR_EXTENSION_GUARD = 12  # Largest poset for linear extension enumeration.
LABELING_GUARD = 9  # Largest poset for enumerating all bijective labelings.
PERMUTATION_GUARD = 10  # Largest n for brute force searches over S_n.
SERIES_PARALLEL_GUARD = 8  # Largest size for series-parallel class enumeration.
POSET_ENUMERATION_GUARD = 6  # Largest size for enumerating all posets.
SHAPE_GUARD = 12  # Largest number of cells for border-strip enumerations.

Rational = Union[int, Fraction]


class GuardExceededError(ValueError):
    """Raised when an enumeration would exceed its configured size guard."""


class RefinementError(ValueError):
    """Raised when a pair of compositions is not related by refinement."""


class HomogeneityError(ValueError):
    """Raised when an operation needs a homogeneous element but got a mixed one."""


class LabelingError(ValueError):
    """Raised when a poset does not carry the labeling an operation requires."""


class ShapeError(ValueError):
    """Raised for invalid (skew) shapes or tableaux."""


class ParseError(ValueError):
    """Raised when an expression or document can not be parsed."""


def check_guard(size: int, guard: Optional[int], default: int, what: str) -> int:
    """Check that an enumeration of the given size is allowed.

    Args:
        size: Size of the object that is going to be enumerated over.
        guard: User supplied guard. If None, the default is used.
        default: The default guard for this kind of enumeration.
        what: Short description of the enumeration, used in error messages.

    Raises:
        GuardExceededError: If the size is larger than the guard.

    Returns:
        The guard that was applied.
    """
    limit = default if guard is None else guard
    if limit < 1:
        raise ValueError(f"Enumeration guards should be at least 1, not {limit}")
    if limit > default:
        warnings.warn(
            message=(
                f"The guard for {what} was raised from {default} to {limit}. "
                "The enumeration may take a very long time."
            ),
            stacklevel=3,
        )
    if size > limit:
        raise GuardExceededError(
            f"Enumerating {what} of size {size} exceeds the guard of {limit}. "
            "Pass a larger `guard` to override."
        )
    logger.debug("Enumerating %s of size %s (guard %s)", what, size, limit)
    return limit


def check_permutation(perm: Iterable[int], m: int) -> tuple[int, ...]:
    """Check that the input is a permutation of 1..m, in one-line notation.

    Args:
        perm: The permutation as a sequence of values.
        m: The expected number of letters.

    Raises:
        ValueError: If the input is not a permutation of 1..m.

    Returns:
        The permutation as a tuple.
    """
    word = tuple(int(x) for x in perm)
    if sorted(word) != list(range(1, m + 1)):
        raise ValueError(f"{list(word)} is not a permutation of 1..{m}")
    return word


def to_fraction(value: Union[int, str, Fraction]) -> Fraction:
    """Convert an integer, fraction or 'p/q' string to an exact rational.

    Floats are refused, as coefficients must always be exact.
    """
    if isinstance(value, float):
        raise TypeError(f"Coefficients must be exact rationals, not the float {value}")
    return Fraction(value)


def format_rational(value: Rational) -> str:
    """Format a rational number as 'p/q' in lowest terms, or 'p' when q is 1.

    Example:
        >>> from fractions import Fraction
        >>> format_rational(Fraction(-2, 4))
        '-1/2'
        >>> format_rational(Fraction(336))
        '336'
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def sign(exponent: int) -> int:
    """Return (-1) to the given power."""
    return -1 if exponent % 2 else 1


def as_integer(value: Rational) -> int:
    """Return an exact rational as an int, raising if it is not integral."""
    value = Fraction(value)
    if value.denominator != 1:
        raise ValueError(f"Expected an integer value, got {format_rational(value)}")
    return value.numerator


def factorial(n: int) -> int:
    """Return n!, with 0! = 1 (n < 0 is refused)."""
    if n < 0:
        raise ValueError(f"The factorial of a negative number ({n}) is undefined")
    return math.factorial(n)
