"""Text and structured (JSON) forms of expressions, posets and skew shapes."""
import json
import re
import sys
from collections.abc import Mapping
from pathlib import Path
from typing import Any
from typing import Union
from quasipsi import qsym
from quasipsi import utils
from quasipsi.poset import LabeledPoset
from quasipsi.poset import SkewShape
from quasipsi.qsym import QSymElement
from quasipsi.qsym import TensorElement


_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:(?P<coef>\d+(?:/\d+)?)\s*\*\s*)?"
    r"(?P<basis>M|L|psi)\[(?P<parts>[0-9,\s]*)\]\s*"
)


def _parse_parts(text: str) -> tuple[int, ...]:
    pieces = [piece.strip() for piece in text.split(",") if piece.strip()]
    return tuple(int(piece) for piece in pieces)


def parse_expression(text: str, basis: str = "psi") -> QSymElement:
    """Parse an expression such as '-1*psi[3,2] + 1/2*psi[3,4,3]'.

    A missing coefficient means 1. Terms in different bases are added up in
    the basis of the first term.

    Args:
        text: The expression. The single token '0' is the zero element.
        basis: Basis of the result when the expression is '0'.

    Raises:
        ParseError: If the text is not a valid expression.

    Example:
        >>> print(parse_expression("psi[2,3] - 1/2*psi[1]"))
        -1/2*psi[1] + 1*psi[2,3]

    """
    stripped = text.strip()
    if stripped == "0":
        return QSymElement({}, qsym.check_basis(basis))
    position, total = 0, None
    while position < len(stripped):
        match = _TERM.match(stripped, position)
        if match is None:
            raise utils.ParseError(
                f"Can not parse '{stripped[position:]}' in the expression '{text}'"
            )
        if total is not None and match["sign"] is None:
            raise utils.ParseError(f"Missing '+' or '-' between terms in '{text}'")
        try:
            parts = _parse_parts(match["parts"])
            coef = utils.to_fraction(match["coef"] or 1)
            term = qsym.basis_element(match["basis"], parts) * coef
        except (ValueError, ZeroDivisionError) as err:
            raise utils.ParseError(f"Invalid term '{match[0].strip()}': {err}") from err
        if match["sign"] == "-":
            term = -term
        total = term if total is None else total + term
        position = match.end()
    if total is None:
        raise utils.ParseError("The expression is empty")
    return total


def format_expression(element: Union[QSymElement, TensorElement]) -> str:
    """Return the canonical text form of an element or tensor."""
    return str(element)


def element_to_document(element: QSymElement) -> dict[str, Any]:
    """Return the structured form {basis, terms: [{comp, coef}]} of an element."""
    return {
        "basis": element.basis,
        "terms": [
            {"comp": list(alpha), "coef": utils.format_rational(coef)}
            for alpha, coef in element.items()
        ],
    }


def _require(document: Any, keys: tuple[str, ...], what: str) -> Mapping:
    if not isinstance(document, Mapping):
        raise utils.ParseError(f"A {what} document should be a mapping")
    missing = [key for key in keys if key not in document]
    if missing:
        raise utils.ParseError(f"The {what} document is missing {missing}")
    return document


def element_from_document(document: Any) -> QSymElement:
    """Read an element back from its structured form."""
    document = _require(document, ("basis", "terms"), "expression")
    try:
        terms: dict = {}
        for term in document["terms"]:
            alpha = tuple(term["comp"])
            terms[alpha] = terms.get(alpha, 0) + utils.to_fraction(term["coef"])
        return QSymElement(terms, document["basis"])
    except (KeyError, TypeError, ValueError) as err:
        raise utils.ParseError(f"Invalid expression document: {err}") from err


def tensor_to_document(tensor: TensorElement) -> dict[str, Any]:
    """Return the structured form {basis, arity, terms: [{legs, coef}]} of a tensor."""
    return {
        "basis": tensor.basis,
        "arity": tensor.arity,
        "terms": [
            {"legs": [list(leg) for leg in legs], "coef": utils.format_rational(coef)}
            for legs, coef in tensor.items()
        ],
    }


def tensor_from_document(document: Any) -> TensorElement:
    """Read a tensor back from its structured form."""
    document = _require(document, ("basis", "arity", "terms"), "tensor")
    try:
        terms: dict = {}
        for term in document["terms"]:
            legs = tuple(tuple(leg) for leg in term["legs"])
            terms[legs] = terms.get(legs, 0) + utils.to_fraction(term["coef"])
        return TensorElement(terms, document["basis"], int(document["arity"]))
    except (KeyError, TypeError, ValueError) as err:
        raise utils.ParseError(f"Invalid tensor document: {err}") from err


def poset_to_document(poset: LabeledPoset) -> dict[str, Any]:
    """Return the structured form {n, covers} of a labeled poset."""
    return {"n": poset.n, "covers": [list(cover) for cover in poset.covers]}


def poset_from_document(document: Any) -> LabeledPoset:
    """Read a labeled poset from {"n": 5, "covers": [[1, 3], ...]}."""
    document = _require(document, ("n", "covers"), "poset")
    try:
        return LabeledPoset(int(document["n"]), document["covers"])
    except (TypeError, ValueError) as err:
        raise utils.ParseError(f"Invalid poset document: {err}") from err


def shape_to_document(shape: SkewShape) -> dict[str, Any]:
    """Return the structured form {lambda, mu} of a skew shape."""
    return {"lambda": list(shape.outer), "mu": list(shape.inner)}


def shape_from_document(document: Any) -> SkewShape:
    """Read a skew shape from {"lambda": [6, 5, 2], "mu": [2, 1]}."""
    document = _require(document, ("lambda",), "shape")
    try:
        return SkewShape(document["lambda"], document.get("mu", ()))
    except (TypeError, ValueError) as err:
        raise utils.ParseError(f"Invalid shape document: {err}") from err


def read_document(source: Union[str, Path]) -> Any:
    """Load a JSON document from a file, or from stdin when the source is '-'."""
    try:
        if str(source) == "-":
            return json.load(sys.stdin)
        with Path(source).open(encoding="utf-8") as handle:
            return json.load(handle)
    except json.JSONDecodeError as err:
        raise utils.ParseError(f"Invalid JSON in {source}: {err}") from err


def dump_document(document: Any) -> str:
    """Serialize a document to JSON text."""
    return json.dumps(document)
