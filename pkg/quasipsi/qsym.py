"""Quasisymmetric functions in the monomial, fundamental and type 1 power sum bases.

Elements are sparse maps from compositions to exact rationals, tagged with the
basis they are written in. Conversions between the bases are explicit, and
the conversion tables are built once per degree.

Example:
    >>> from quasipsi import qsym
    >>> f = qsym.psi(1, 1)
    >>> print(f.convert("M"))
    1/2*M[2] + 1*M[1,1]
    >>> print(qsym.max1(qsym.psi(3, 4, 2, 1)))
    4/189
    >>> print(qsym.automorphism(qsym.psi(3, 2), "omega"))
    -1*psi[2,3]

"""
import itertools
import logging
import math
from collections import defaultdict
from collections.abc import Callable
from collections.abc import Iterable
from collections.abc import Mapping
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Literal
from typing import Optional
from typing import Union
from quasipsi import composition as comp
from quasipsi import utils
from quasipsi.composition import Composition


logger = logging.getLogger(__name__)

BasisName = Literal["M", "L", "psi"]
AutomorphismName = Literal["omega", "rho", "omegarho"]
BASES = ("M", "L", "psi")
AUTOMORPHISMS = ("omega", "rho", "omegarho")
TENSOR_SEPARATOR = " (x) "

Scalar = Union[int, Fraction]


def check_basis(basis: str) -> str:
    """Check that the basis name is one of 'M', 'L' or 'psi'."""
    if basis not in BASES:
        raise ValueError(f"Unknown basis '{basis}'. Valid bases are {', '.join(BASES)}")
    return basis


def _collect(pairs: Iterable[tuple[Iterable[int], Scalar]]) -> dict:
    """Sum up (composition, coefficient) pairs, dropping zeros, in canonical order."""
    totals: dict[Composition, Fraction] = defaultdict(Fraction)
    for alpha, coef in pairs:
        totals[Composition(alpha)] += utils.to_fraction(coef)
    return {alpha: totals[alpha] for alpha in sorted(totals) if totals[alpha] != 0}


def _format_term(coef: Fraction, body: str, first: bool) -> str:
    magnitude = utils.format_rational(abs(coef))
    if first:
        return f"{'-' if coef < 0 else ''}{magnitude}*{body}"
    return f" {'-' if coef < 0 else '+'} {magnitude}*{body}"


class QSymElement:
    """A quasisymmetric function, written in one of the M, L or psi bases."""

    def __init__(
        self,
        terms: Optional[Mapping] = None,
        basis: BasisName = "psi",
    ) -> None:
        """Create a quasisymmetric function from its coefficients.

        Args:
            terms: Mapping from compositions (any sequence of positive integers)
                to coefficients. Coefficients can be integers, fractions or 'p/q'
                strings. Zero coefficients are dropped.
            basis: The basis the terms are written in. One of "M" (monomial),
                "L" (fundamental) or "psi" (type 1 quasisymmetric power sums).

        Example:
            >>> from quasipsi import QSymElement
            >>> f = QSymElement({(1, 1): 1, (2,): "1/2"}, basis="M")
            >>> f
            QSymElement({(2,): '1/2', (1, 1): '1'}, basis='M')
            >>> print(f)
            1/2*M[2] + 1*M[1,1]

        """
        self._basis = check_basis(basis)
        items = terms.items() if terms is not None else ()
        self._terms = MappingProxyType(_collect(items))

    @classmethod
    def one(cls, basis: BasisName = "psi") -> "QSymElement":
        """Return the unit, indexed by the empty composition."""
        return cls({(): 1}, basis)

    @property
    def basis(self) -> str:
        """Return the name of the basis the element is written in."""
        return self._basis

    @property
    def terms(self) -> Mapping[Composition, Fraction]:
        """Return a read-only view of the nonzero coefficients, in canonical order."""
        return self._terms

    def items(self):
        """Return the (composition, coefficient) pairs."""
        return self._terms.items()

    def coefficient(self, alpha: Iterable[int]) -> Fraction:
        """Return the coefficient of the basis element indexed by alpha."""
        return self._terms.get(Composition(alpha), Fraction(0))

    def degrees(self) -> set[int]:
        """Return the set of degrees |alpha| that occur."""
        return {alpha.size for alpha in self._terms}

    def is_homogeneous(self) -> bool:
        """Return whether at most one degree occurs."""
        return len(self.degrees()) <= 1

    def convert(self, target: BasisName) -> "QSymElement":
        """Return the same function, written in the target basis."""
        return convert(self, target)

    def length_part(self, m: int) -> "QSymElement":
        """Return the projection onto the psi terms of length m."""
        return length_part(self, m)

    def min_length_part(self) -> "QSymElement":
        """Return the psi terms of minimal length."""
        return min_length_part(self)

    def psi_support(self) -> list[Composition]:
        """Return the compositions with a nonzero psi coefficient."""
        return list(convert(self, "psi").terms)

    def normalized_terms(self) -> dict[Composition, Fraction]:
        """Return the coefficients with respect to Psi_alpha = z_alpha * psi_alpha."""
        return {
            alpha: coef / comp.z(alpha) for alpha, coef in convert(self, "psi").items()
        }

    def _coerce(self, other) -> "QSymElement":
        if isinstance(other, QSymElement):
            return convert(other, self.basis)
        if isinstance(other, (int, Fraction)):
            return QSymElement({(): other}, self.basis)
        raise TypeError(f"Can not combine a QSymElement with {type(other)}")

    def __add__(self, other) -> "QSymElement":
        other = self._coerce(other)
        pairs = itertools.chain(self.items(), other.items())
        return QSymElement(_collect(pairs), self.basis)

    __radd__ = __add__

    def __neg__(self) -> "QSymElement":
        return QSymElement({alpha: -coef for alpha, coef in self.items()}, self.basis)

    def __sub__(self, other) -> "QSymElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "QSymElement":
        return (-self) + other

    def __mul__(self, other) -> "QSymElement":
        if isinstance(other, QSymElement):
            return multiply(self, other)
        if isinstance(other, (int, Fraction)):
            scalar = Fraction(other)
            return QSymElement(
                {alpha: coef * scalar for alpha, coef in self.items()}, self.basis
            )
        return NotImplemented

    def __rmul__(self, other) -> "QSymElement":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other) -> "QSymElement":
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __eq__(self, other) -> bool:
        """Compare two elements after converting to a common basis."""
        if not isinstance(other, (QSymElement, int, Fraction)):
            return NotImplemented
        return dict(self._terms) == dict(self._coerce(other).terms)

    __hash__ = None  # type: ignore

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __repr__(self) -> str:
        """Return a string representation that evaluates back to the element."""
        terms = {
            tuple(alpha): utils.format_rational(coef) for alpha, coef in self.items()
        }
        return f"{self.__class__.__name__}({terms!r}, basis={self.basis!r})"

    def __str__(self) -> str:
        """Return the expression text form, e.g. '-1*psi[3,2] + 1/2*psi[3,4,3]'."""
        if not self._terms:
            return "0"
        return "".join(
            _format_term(coef, f"{self.basis}{alpha}", first=i == 0)
            for i, (alpha, coef) in enumerate(self.items())
        )


class TensorElement:
    """An element of a tensor power of QSym, with every leg in the same basis."""

    def __init__(
        self,
        terms: Optional[Mapping] = None,
        basis: BasisName = "psi",
        arity: int = 2,
    ) -> None:
        """Create a tensor from a mapping of tuples of compositions to coefficients.

        Args:
            terms: Mapping from tuples of compositions (one per leg) to
                coefficients.
            basis: The basis of every leg.
            arity: The number of legs, at least 1.
        """
        if arity < 1:
            raise ValueError(f"The arity of a tensor should be at least 1, not {arity}")
        self._basis = check_basis(basis)
        self._arity = arity
        totals: dict[tuple, Fraction] = defaultdict(Fraction)
        for legs, coef in (terms or {}).items():
            key = tuple(Composition(leg) for leg in legs)
            if len(key) != arity:
                raise ValueError(f"Term {key} does not have {arity} legs")
            totals[key] += utils.to_fraction(coef)
        self._terms = MappingProxyType(
            {
                key: totals[key]
                for key in sorted(totals, key=lambda k: [a.sort_key for a in k])
                if totals[key] != 0
            }
        )

    @property
    def basis(self) -> str:
        """Return the basis of the legs."""
        return self._basis

    @property
    def arity(self) -> int:
        """Return the number of legs."""
        return self._arity

    @property
    def terms(self) -> Mapping[tuple, Fraction]:
        """Return a read-only view of the nonzero coefficients."""
        return self._terms

    def items(self):
        """Return the (legs, coefficient) pairs."""
        return self._terms.items()

    def coefficient(self, legs: Iterable[Iterable[int]]) -> Fraction:
        """Return the coefficient of a pure tensor of basis elements."""
        key = tuple(Composition(leg) for leg in legs)
        return self._terms.get(key, Fraction(0))

    def convert(self, target: BasisName) -> "TensorElement":
        """Convert every leg to the target basis."""
        target = check_basis(target)
        if target == self.basis:
            return self
        totals: dict[tuple, Fraction] = defaultdict(Fraction)
        for legs, coef in self.items():
            expansions = [
                convert(basis_element(self.basis, leg), target).items() for leg in legs
            ]
            for combination in itertools.product(*expansions):
                key = tuple(alpha for alpha, _ in combination)
                totals[key] += coef * math.prod(c for _, c in combination)
        return TensorElement(totals, target, self.arity)

    def apply(self, functional: Callable[["QSymElement"], Scalar]) -> Fraction:
        """Evaluate functional^(tensor arity) on the tensor, e.g. with `min1`."""
        total = Fraction(0)
        for legs, coef in self.items():
            total += coef * math.prod(
                Fraction(functional(basis_element(self.basis, leg))) for leg in legs
            )
        return total

    def coproduct_at(self, index: int) -> "TensorElement":
        """Apply the coproduct to one leg, giving a tensor with one more leg."""
        if not 0 <= index < self.arity:
            raise ValueError(f"Leg index {index} out of range for arity {self.arity}")
        totals: dict[tuple, Fraction] = defaultdict(Fraction)
        for legs, coef in self.items():
            split = coproduct(basis_element(self.basis, legs[index]))
            for (left, right), c in split.items():
                totals[legs[:index] + (left, right) + legs[index + 1 :]] += coef * c
        return TensorElement(totals, self.basis, self.arity + 1)

    def __eq__(self, other) -> bool:
        """Compare two tensors after converting to a common basis."""
        if not isinstance(other, TensorElement):
            return NotImplemented
        if other.arity != self.arity:
            return False
        return dict(self._terms) == dict(other.convert(self.basis).terms)

    __hash__ = None  # type: ignore

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        """Return a string representation of the tensor."""
        terms = {
            tuple(tuple(leg) for leg in legs): utils.format_rational(coef)
            for legs, coef in self.items()
        }
        return (
            f"{self.__class__.__name__}({terms!r}, basis={self.basis!r}, "
            f"arity={self.arity})"
        )

    def __str__(self) -> str:
        """Return the text form, legs joined by ' (x) '."""
        if not self._terms:
            return "0"
        return "".join(
            _format_term(
                coef,
                TENSOR_SEPARATOR.join(f"{self.basis}{leg}" for leg in legs),
                first=i == 0,
            )
            for i, (legs, coef) in enumerate(self.items())
        )


def basis_element(basis: BasisName, alpha: Iterable[int]) -> QSymElement:
    """Return the single basis element indexed by alpha."""
    return QSymElement({Composition(alpha): 1}, basis)


def monomial(*parts) -> QSymElement:
    """Return the monomial quasisymmetric function M_alpha."""
    return basis_element("M", Composition(*parts))


def fundamental(*parts) -> QSymElement:
    """Return the fundamental quasisymmetric function L_alpha."""
    return basis_element("L", Composition(*parts))


def psi(*parts, normalized: bool = False) -> QSymElement:
    """Return the type 1 quasisymmetric power sum psi_alpha.

    Args:
        *parts: The parts of alpha, or a single sequence of parts.
        normalized: If True, return Psi_alpha = z_alpha * psi_alpha instead.

    Example:
        >>> print(psi(2, 1, normalized=True))
        2*psi[2,1]

    """
    alpha = Composition(*parts)
    return QSymElement({alpha: comp.z(alpha) if normalized else 1}, "psi")


@lru_cache(maxsize=None)
def _conversion_table(source: str, target: str, n: int) -> Mapping:
    """Expand every source basis element of degree n in the target basis."""
    logger.debug("Building the %s -> %s table of degree %s", source, target, n)
    table: dict[Composition, dict[Composition, Fraction]] = {}
    if source == "L" and target == "M":
        for alpha in comp.compositions(n):
            table[alpha] = {beta: Fraction(1) for beta in comp.refinements(alpha)}
    elif source == "psi" and target == "M":
        for alpha in comp.compositions(n):
            table[alpha] = {
                beta: Fraction(1, comp.pi_rel(alpha, beta))
                for beta in comp.coarsenings(alpha)
            }
    elif source == "M" and target == "L":
        for alpha in comp.compositions(n):
            table[alpha] = {
                beta: Fraction(utils.sign(len(beta) - len(alpha)))
                for beta in comp.refinements(alpha)
            }
    elif source == "M" and target == "psi":
        # psi_alpha = M_alpha / prod(alpha) + coarser terms, solved coarsest first.
        for alpha in sorted(comp.compositions(n), key=len):
            diagonal = math.prod(alpha)
            expansion: dict[Composition, Fraction] = defaultdict(Fraction)
            expansion[alpha] += diagonal
            for beta in comp.coarsenings(alpha):
                if beta == alpha:
                    continue
                scale = Fraction(diagonal, comp.pi_rel(alpha, beta))
                for gamma, coef in table[beta].items():
                    expansion[gamma] -= scale * coef
            table[alpha] = _collect(expansion.items())
    else:
        first = _conversion_table(source, "M", n)
        second = _conversion_table("M", target, n)
        for alpha, expansion in first.items():
            table[alpha] = _collect(
                (gamma, coef * c)
                for beta, coef in expansion.items()
                for gamma, c in second[beta].items()
            )
    return MappingProxyType(table)


def convert(f: QSymElement, target: BasisName) -> QSymElement:
    """Write a quasisymmetric function in the target basis.

    Args:
        f: The element to convert.
        target: One of "M", "L" or "psi".

    Returns:
        The same function, written in the target basis.
    """
    target = check_basis(target)
    if f.basis == target:
        return f
    pairs = (
        (beta, coef * c)
        for alpha, coef in f.items()
        for beta, c in _conversion_table(f.basis, target, alpha.size)[alpha].items()
    )
    return QSymElement(_collect(pairs), target)


def multiply(f: QSymElement, g: QSymElement) -> QSymElement:
    """Multiply two quasisymmetric functions.

    In the psi basis the product is the shuffle product, in the M basis it is the
    quasi-shuffle product. Products in the L basis are computed through M. The
    result is written in the basis of `f`.
    """
    work = "M" if f.basis == "L" else f.basis
    left, right = convert(f, work), convert(g, work)
    rule = comp.shuffles if work == "psi" else comp.quasi_shuffles
    pairs = (
        (gamma, a * b)
        for alpha, a in left.items()
        for beta, b in right.items()
        for gamma in rule(alpha, beta)
    )
    return convert(QSymElement(_collect(pairs), work), f.basis)


def _split_fundamental(alpha: Composition, sizes: Iterable[int]) -> tuple:
    """Cut the word of L_alpha into consecutive pieces of the given sizes."""
    descents = comp.descent_set(alpha)
    legs, start = [], 0
    for size in sizes:
        inner = {d - start for d in descents if start < d < start + size}
        legs.append(comp.composition_of_set(inner, size))
        start += size
    return tuple(legs)


def coproduct(f: QSymElement) -> TensorElement:
    """Return the coproduct of f, written in the basis of f.

    On the psi and M bases the coproduct deconcatenates compositions. On the L
    basis the word of length n is cut at each of the n + 1 positions, giving
    concatenations and near-concatenations.
    """
    totals: dict[tuple, Fraction] = defaultdict(Fraction)
    for alpha, coef in f.items():
        if f.basis == "L":
            n = alpha.size
            for k in range(n + 1):
                totals[_split_fundamental(alpha, (k, n - k))] += coef
        else:
            for pair in comp.deconcatenations(alpha):
                totals[pair] += coef
    return TensorElement(totals, f.basis, arity=2)


def _homogeneous_degree(f: QSymElement) -> Optional[int]:
    degrees = f.degrees()
    if len(degrees) > 1:
        raise utils.HomogeneityError(
            f"Expected a homogeneous element, but found the degrees {sorted(degrees)}"
        )
    return next(iter(degrees), None)


def graded_coproduct(f: QSymElement, alpha: Iterable[int]) -> TensorElement:
    """Return the graded coproduct Delta_alpha(f), with legs of degrees alpha_i.

    Args:
        f: A homogeneous element of degree |alpha|.
        alpha: A nonempty composition.

    Raises:
        HomogeneityError: If f is not homogeneous of degree |alpha|.

    Returns:
        A tensor with l(alpha) legs, in the basis of f.
    """
    alpha = Composition(alpha)
    if not alpha:
        raise ValueError("The graded coproduct needs a nonempty composition")
    degree = _homogeneous_degree(f)
    if degree is not None and degree != alpha.size:
        raise utils.HomogeneityError(
            f"Can not take Delta_{alpha} of an element of degree {degree}"
        )
    totals: dict[tuple, Fraction] = defaultdict(Fraction)
    for beta, coef in f.items():
        if f.basis == "L":
            totals[_split_fundamental(beta, alpha)] += coef
        elif comp.refines(beta, alpha):
            totals[tuple(comp.blocks(beta, alpha))] += coef
    return TensorElement(totals, f.basis, arity=len(alpha))


@lru_cache(maxsize=None)
def _min1_basis(basis: str, alpha: Composition) -> Fraction:
    if basis == "M":
        return Fraction(utils.sign(len(alpha) - 1) * alpha[-1])
    if basis == "L":
        hook = all(part == 1 for part in alpha[:-1])
        return Fraction(utils.sign(len(alpha) - 1) if hook else 0)
    return Fraction(1 if len(alpha) == 1 else 0)


@lru_cache(maxsize=None)
def _max1_basis(basis: str, alpha: Composition) -> Fraction:
    if basis == "M":
        return Fraction(utils.sign(len(alpha) - 1) * alpha[0])
    if basis == "L":
        hook = all(part == 1 for part in alpha[1:])
        return Fraction(utils.sign(len(alpha) - 1) if hook else 0)
    length = len(alpha)
    return sum(
        (
            Fraction(
                utils.sign(length - i),
                comp.pi(alpha[: i - 1]) * comp.pi(alpha[i:][::-1]),
            )
            for i in range(1, length + 1)
        ),
        Fraction(0),
    )


def _functional(f: QSymElement, on_basis: Callable, name: str) -> Fraction:
    degree = _homogeneous_degree(f)
    if degree == 0:
        raise utils.HomogeneityError(f"{name} is not defined on constants")
    return sum(
        (coef * on_basis(f.basis, alpha) for alpha, coef in f.items()), Fraction(0)
    )


def min1(f: QSymElement) -> Fraction:
    """Evaluate the linear functional Min1 on a homogeneous, non-constant element.

    On naturally labeled posets, Min1(K_P) is 1 if P has a unique minimal
    element and 0 otherwise. It vanishes on products.
    """
    return _functional(f, _min1_basis, "min1")


def max1(f: QSymElement) -> Fraction:
    """Evaluate the linear functional Max1 on a homogeneous, non-constant element.

    Example:
        >>> print(max1(monomial(2, 3)))
        -2

    """
    return _functional(f, _max1_basis, "max1")


def psi_coefficients(f: QSymElement) -> dict[Composition, Fraction]:
    """Compute the psi coefficients of f as c_alpha = Min1^(l)(Delta_alpha f).

    This does not use the basis conversion tables, so it serves as an
    independent route to `convert(f, "psi")`.

    Args:
        f: A homogeneous element, in any basis.

    Returns:
        Mapping from compositions to their nonzero coefficients.
    """
    degree = _homogeneous_degree(f)
    if degree is None:
        return {}
    if degree == 0:
        return {Composition(): f.coefficient(())}
    result = {}
    for alpha in comp.compositions(degree):
        value = graded_coproduct(f, alpha).apply(min1)
        if value:
            result[alpha] = value
    return result


@lru_cache(maxsize=None)
def _psi_automorphism(which: str, alpha: Composition) -> dict:
    if which == "omega":
        return {alpha.reverse(): Fraction(utils.sign(alpha.size - alpha.length))}
    terms: dict[Composition, Fraction] = {}
    for beta in comp.coarsenings(alpha):
        value = math.prod(
            (_max1_basis("psi", piece) for piece in comp.blocks(alpha, beta)),
            start=Fraction(1),
        )
        if which == "rho":
            terms[beta.reverse()] = value
        else:
            terms[beta] = utils.sign(beta.size - beta.length) * value
    return _collect(terms.items())


def _fundamental_automorphism(which: str, alpha: Composition) -> Composition:
    if which == "omega":
        return alpha.complement().reverse()
    if which == "rho":
        return alpha.reverse()
    return alpha.complement()


def automorphism(f: QSymElement, which: AutomorphismName) -> QSymElement:
    """Apply one of the automorphisms omega, rho or omega-rho of QSym.

    On the L basis these act by omega(L_a) = L_((a^c)^rev), rho(L_a) = L_(a^rev)
    and omegarho(L_a) = L_(a^c). On the psi basis, omega(psi_a) is
    (-1)^(|a| - l(a)) psi_(a^rev), and rho and omegarho are expanded with Max1
    over the graded coproduct. The M basis goes through L.

    Args:
        f: The element to transform.
        which: One of "omega", "rho" or "omegarho".

    Returns:
        The image of f, in the basis of f.
    """
    if which not in AUTOMORPHISMS:
        raise ValueError(
            f"Unknown automorphism '{which}'. Choose from {', '.join(AUTOMORPHISMS)}"
        )
    if f.basis == "M":
        return convert(automorphism(convert(f, "L"), which), "M")
    if f.basis == "L":
        pairs: Iterable = (
            (_fundamental_automorphism(which, alpha), coef) for alpha, coef in f.items()
        )
    else:
        pairs = (
            (beta, coef * c)
            for alpha, coef in f.items()
            for beta, c in _psi_automorphism(which, alpha).items()
        )
    return QSymElement(_collect(pairs), f.basis)


def power_sum(lam: Iterable[int], over_z: bool = False) -> QSymElement:
    """Return the power sum symmetric function p_lambda in the psi basis.

    Uses p_lambda / z_lambda = sum of psi_alpha over the rearrangements alpha
    of lambda.

    Args:
        lam: A partition (its parts are sorted if needed).
        over_z: If True, return p_lambda / z_lambda instead.

    Example:
        >>> print(power_sum([2, 1], over_z=True))
        1*psi[1,2] + 1*psi[2,1]
        >>> print(power_sum([3]).convert("M"))
        1*M[3]

    """
    lam = comp.Partition.from_composition(lam)
    scale = 1 if over_z else comp.z(lam)
    return QSymElement({alpha: scale for alpha in comp.rearrangements(lam)}, "psi")


def is_symmetric(f: QSymElement) -> bool:
    """Return whether the M coefficients are constant on rearrangement classes."""
    monomials = convert(f, "M")
    for alpha, coef in monomials.items():
        for beta in comp.rearrangements(alpha):
            if monomials.coefficient(beta) != coef:
                return False
    return True


def length_part(f: QSymElement, m: int) -> QSymElement:
    """Project f onto QSym_(n, m), the psi terms of length m."""
    terms = convert(f, "psi").items()
    return QSymElement({alpha: c for alpha, c in terms if len(alpha) == m}, "psi")


def min_length_part(f: QSymElement) -> QSymElement:
    """Return the psi terms of f of minimal length (zero stays zero)."""
    terms = convert(f, "psi").terms
    if not terms:
        return QSymElement({}, "psi")
    return length_part(f, min(len(alpha) for alpha in terms))


def evaluate(f: QSymElement, values: Iterable[Scalar]) -> Fraction:
    """Evaluate f at finitely many variables x_1, ..., x_k (the rest set to zero)."""
    xs = [utils.to_fraction(v) for v in values]
    total = Fraction(0)
    for alpha, coef in convert(f, "M").items():
        for chosen in itertools.combinations(xs, len(alpha)):
            total += coef * math.prod(
                (x**a for x, a in zip(chosen, alpha)), start=Fraction(1)
            )
    return total
