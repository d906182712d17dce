"""Command line interface of quasipsi.

Every command reads a poset, a skew shape or an expression, and prints its result
in canonical text form or, with ``--format structured``, as JSON.

Exit codes:
    0: success.
    1: a requested verification failed; the first counterexample is printed.
    2: the input could not be parsed.
    3: an enumeration guard was exceeded.
    4: a precondition was violated, e.g. a strict edge where a natural labeling
        is required.

Example:
    >>> from quasipsi.cli import main
    >>> main(["functional", "max1", "psi[3,4,2,1]"])
    4/189
    0

"""
import argparse
import logging
import sys
from collections.abc import Sequence
from typing import Any
from typing import Callable
from typing import Optional
import matplotlib.pyplot as plt
from quasipsi import __version__
from quasipsi import _io
from quasipsi import ppartition
from quasipsi import qsym
from quasipsi import series_parallel
from quasipsi import tableaux
from quasipsi import utils
from quasipsi import zigzag
from quasipsi.poset import SkewShape
from quasipsi.poset import skew_shape_poset
from quasipsi.qsym import QSymElement


logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("text", "structured")

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_PARSE = 2
EXIT_GUARD = 3
EXIT_PRECONDITION = 4

_handler: Optional[logging.Handler] = None


class VerificationError(Exception):
    """Raised when two routes to the same result disagree."""


class RunConfig:
    """Settings shared by all commands of one run."""

    def __init__(
        self,
        guard: Optional[int] = None,
        output_format: str = "text",
        verify: bool = False,
    ) -> None:
        """Create the run settings.

        Args:
            guard: Enumeration guard overriding the default of the operation that
                a command runs. None keeps the defaults from `quasipsi.utils`.
            output_format: Either "text" or "structured" (JSON).
            verify: If the commands should cross-check their result against a
                second, independent computation.

        Example:
            >>> from quasipsi.cli import RunConfig
            >>> config = RunConfig(guard=8)
            >>> config.verify = True
            >>> config
            RunConfig(guard=8, output_format='text', verify=True)

        """
        self.guard = guard
        self.output_format = output_format
        self.verify = verify

    @property
    def guard(self) -> Optional[int]:
        """Return the enumeration guard override."""
        return self._guard

    @guard.setter
    def guard(self, value: Optional[int]) -> None:
        if value is not None and (not isinstance(value, int) or value < 1):
            raise ValueError(f"The guard should be a positive integer, not {value!r}")
        self._guard = value

    @property
    def output_format(self) -> str:
        """Return the output format, "text" or "structured"."""
        return self._output_format

    @output_format.setter
    def output_format(self, value: str) -> None:
        if value not in OUTPUT_FORMATS:
            raise ValueError(
                f"Unknown output format '{value}', "
                f"use one of {', '.join(OUTPUT_FORMATS)}"
            )
        self._output_format = value

    @property
    def verify(self) -> bool:
        """Return whether results are cross-checked."""
        return self._verify

    @verify.setter
    def verify(self, value: bool) -> None:
        self._verify = bool(value)

    @property
    def structured(self) -> bool:
        """Return whether output is written as JSON."""
        return self._output_format == "structured"

    def __repr__(self) -> str:
        """Return a string representation of the settings."""
        props = [
            ("guard", self.guard),
            ("output_format", self.output_format),
            ("verify", self.verify),
        ]
        propstr = ", ".join([f"{k}={v!r}" for k, v in props])
        return f"{self.__class__.__name__}({propstr})"


def _emit(config: RunConfig, text: str, document: Any) -> None:
    print(_io.dump_document(document) if config.structured else text)


def _emit_element(config: RunConfig, element: QSymElement) -> None:
    _emit(config, str(element), _io.element_to_document(element))


def _check_same(what: str, first: QSymElement, second: QSymElement) -> None:
    if first != second:
        difference = qsym.convert(first - second, "psi")
        raise VerificationError(
            f"{what} disagree, their difference is {difference} "
            f"(first route {qsym.convert(first, 'psi')}, "
            f"second route {qsym.convert(second, 'psi')})"
        )
    logger.info("Verified: %s agree", what)


def _save_plot(ax, path: str) -> None:
    ax.figure.savefig(path, bbox_inches="tight")
    plt.close(ax.figure)
    logger.info("Saved figure to %s", path)


def cmd_kpw(args: argparse.Namespace, config: RunConfig) -> int:
    """Print K of a labeled poset in the requested basis."""
    poset = _io.poset_from_document(_io.read_document(args.poset))
    k = ppartition.k_generating_function(poset, guard=config.guard)
    if config.verify:
        pointed = ppartition.psi_expansion_pointed(poset, guard=config.guard)
        _check_same("The linear extension and pointed partition routes", k, pointed)
    if args.plot:
        _save_plot(poset.visualize(), args.plot)
    _emit_element(config, k.convert(args.basis))
    return EXIT_OK


def cmd_ktilde(args: argparse.Namespace, config: RunConfig) -> int:
    """Print the minimal-length psi terms of K."""
    poset = _io.poset_from_document(_io.read_document(args.poset))
    if poset.is_naturally_labeled():
        result = zigzag.k_tilde(poset, guard=config.guard)
        if config.verify:
            general = ppartition.k_tilde_general(poset, guard=config.guard)
            _check_same(
                "The permutation sum and pointed partition routes", result, general
            )
    else:
        result = ppartition.k_tilde_general(poset, guard=config.guard)
    _emit_element(config, result)
    return EXIT_OK


def cmd_zigzag(args: argparse.Namespace, config: RunConfig) -> int:
    """Print the number of zigzag labelings, and optionally list them."""
    poset = _io.poset_from_document(_io.read_document(args.poset))
    count = zigzag.zigzag_count_formula(poset, guard=config.guard)
    labelings = None
    if config.verify or args.list:
        labelings = zigzag.enumerate_zigzag_labelings(poset, guard=config.guard)
    if config.verify and len(labelings) != count:
        raise VerificationError(
            f"The formula gives {count} zigzag labelings, "
            f"but {len(labelings)} were enumerated"
        )
    lines = [str(count)]
    if args.list:
        lines.extend(" ".join(str(v) for v in phi) for phi in labelings)
    document: dict[str, Any] = {"count": count}
    if args.list:
        document["labelings"] = [list(phi) for phi in labelings]
    _emit(config, "\n".join(lines), document)
    return EXIT_OK


def cmd_irreducible(args: argparse.Namespace, config: RunConfig) -> int:
    """Print whether K of a naturally labeled poset is irreducible."""
    poset = _io.poset_from_document(_io.read_document(args.poset))
    try:
        irreducible = zigzag.is_irreducible_natural(
            poset, certify=config.verify, guard=config.guard
        )
    except RuntimeError as err:
        raise VerificationError(str(err)) from err
    sizes = sorted(factor.n for factor in zigzag.irreducible_factors(poset))
    verdict = "irreducible" if irreducible else "reducible"
    text = verdict if irreducible else f"{verdict}\nfactors: {sizes}"
    _emit(config, text, {"irreducible": irreducible, "factors": sizes})
    return EXIT_OK


def cmd_sp_distinguish(args: argparse.Namespace, config: RunConfig) -> int:
    """Report whether K tells apart the series-parallel posets of each size."""
    if args.labeled_example:
        first, second = series_parallel.labeled_counterexample()
        k_first = ppartition.k_generating_function(first)
        k_second = ppartition.k_generating_function(second)
        if k_first != k_second:
            raise VerificationError(f"{first} and {second} have different K")
        lines = [repr(first), repr(second), f"both have K = {k_first}"]
        document = {
            "posets": [_io.poset_to_document(first), _io.poset_to_document(second)],
            "k": _io.element_to_document(k_first),
        }
        _emit(config, "\n".join(lines), document)
        return EXIT_OK

    table = series_parallel.sp_distinguish(args.max_n, guard=config.guard)
    records = [
        {"n": int(n), **{key: int(value) for key, value in row.items()}}
        for n, row in table.iterrows()
    ]
    _emit(config, table.to_string(), {"report": records})
    collisions = table[table["collisions"] > 0]
    if not collisions.empty:
        raise VerificationError(
            f"Series-parallel posets with equal K found for n={collisions.index[0]}"
        )
    return EXIT_OK


def _format_power_sums(expansion: dict) -> str:
    if not expansion:
        return "0"
    return "\n".join(
        f"p{nu}: {utils.format_rational(coef)}" for nu, coef in expansion.items()
    )


def _verify_skew_schur(
    shape: SkewShape, expansion: QSymElement, guard: Optional[int]
) -> None:
    poset = skew_shape_poset(shape)
    k = ppartition.k_generating_function(poset, guard=guard)
    _check_same("Border-strip tableaux and linear extensions", expansion, k)
    pointed = ppartition.psi_expansion_pointed(poset, guard=guard)
    _check_same("Border-strip tableaux and pointed partitions", expansion, pointed)
    via_p = QSymElement({}, "psi")
    for nu, coef in tableaux.skew_schur_p(shape, guard=guard).items():
        via_p = via_p + qsym.power_sum(nu) * coef
    _check_same("Border-strip tableaux and power sums", expansion, via_p)


def cmd_mn(args: argparse.Namespace, config: RunConfig) -> int:
    """Print the Murnaghan-Nakayama expansion of a skew Schur function."""
    shape = _io.shape_from_document(_io.read_document(args.shape))
    if args.plot:
        _save_plot(shape.visualize(), args.plot)

    if args.min1:
        value = tableaux.min1_skew(shape)
        if config.verify:
            poset = skew_shape_poset(shape)
            k = ppartition.k_generating_function(poset, guard=config.guard)
            via_poset = qsym.min1(k)
            if via_poset != value:
                raise VerificationError(
                    f"Min1 of {shape} is {value} by its shape, "
                    f"but {via_poset} through its poset"
                )
        _emit(config, str(value), {"min1": value})
        return EXIT_OK

    expansion = tableaux.skew_schur_psi(shape, guard=config.guard)
    if config.verify:
        _verify_skew_schur(shape, expansion, config.guard)

    if args.expansion == "psi":
        _emit_element(config, expansion)
    elif args.expansion == "p":
        power_sums = tableaux.skew_schur_p(shape, guard=config.guard)
        document = {
            "p": [
                {"nu": list(nu), "coef": utils.format_rational(coef)}
                for nu, coef in power_sums.items()
            ]
        }
        _emit(config, _format_power_sums(power_sums), document)
    else:
        table = tableaux.chi_table(shape)
        column = table[str(shape)]
        document = {"chi": {nu: int(value) for nu, value in column.items()}}
        _emit(config, table.to_string(), document)
    return EXIT_OK


def cmd_convert(args: argparse.Namespace, config: RunConfig) -> int:
    """Rewrite an expression in another basis."""
    element = _io.parse_expression(args.expression)
    _emit_element(config, element.convert(args.to))
    return EXIT_OK


def cmd_functional(args: argparse.Namespace, config: RunConfig) -> int:
    """Evaluate Min1 or Max1 on an expression."""
    element = _io.parse_expression(args.expression)
    value = qsym.min1(element) if args.which == "min1" else qsym.max1(element)
    text = utils.format_rational(value)
    _emit(config, text, {"value": text})
    return EXIT_OK


def cmd_auto(args: argparse.Namespace, config: RunConfig) -> int:
    """Apply one of the automorphisms omega, rho or their composite."""
    element = _io.parse_expression(args.expression)
    result = qsym.automorphism(element.convert("psi"), args.which)
    if config.verify:
        via_fundamental = qsym.automorphism(element.convert("L"), args.which)
        _check_same("The psi and fundamental routes", result, via_fundamental)
    _emit_element(config, result.convert(args.basis))
    return EXIT_OK


def cmd_product(args: argparse.Namespace, config: RunConfig) -> int:
    """Multiply two expressions."""
    first = _io.parse_expression(args.first)
    second = _io.parse_expression(args.second)
    result = qsym.multiply(first, second)
    if config.verify:
        via_monomial = qsym.multiply(first.convert("M"), second.convert("M"))
        _check_same("The shuffle and quasi-shuffle products", result, via_monomial)
    _emit_element(config, result.convert(args.basis))
    return EXIT_OK


def _parse_composition(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as err:
        raise utils.ParseError(f"Invalid composition '{text}': {err}") from err


def cmd_coproduct(args: argparse.Namespace, config: RunConfig) -> int:
    """Print the coproduct, or its graded component, of an expression."""
    element = _io.parse_expression(args.expression)
    if args.graded:
        tensor = qsym.graded_coproduct(element, _parse_composition(args.graded))
    else:
        tensor = qsym.coproduct(element)
    tensor = tensor.convert(args.basis)
    _emit(config, str(tensor), _io.tensor_to_document(tensor))
    return EXIT_OK


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=OUTPUT_FORMATS,
        default="text",
        help="Print canonical text or structured JSON.",
    )
    common.add_argument(
        "--guard", type=int, default=None, help="Override the enumeration guard."
    )
    common.add_argument(
        "--verify",
        action="store_true",
        help="Cross-check the result against a second computation.",
    )
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="Log more (-v, -vv)."
    )
    return common


def _basis_option(parser: argparse.ArgumentParser, default: str = "psi") -> None:
    parser.add_argument(
        "--basis", choices=qsym.BASES, default=default, help="Basis of the output."
    )


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subcommand per operation."""
    parser = argparse.ArgumentParser(
        prog="quasipsi",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=__version__)
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = _common_options()

    def add(name: str, handler: Callable, help_text: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, parents=[common], help=help_text)
        sub.set_defaults(handler=handler)
        return sub

    poset_help = "JSON file {n, covers} of a labeled poset, or '-' for stdin."

    kpw = add("kpw", cmd_kpw, "Generating function K of a labeled poset.")
    kpw.add_argument("poset", help=poset_help)
    _basis_option(kpw)
    kpw.add_argument("--plot", metavar="FILE", help="Save the Hasse diagram.")

    ktilde = add("ktilde", cmd_ktilde, "Minimal-length psi terms of K.")
    ktilde.add_argument("poset", help=poset_help)

    zig = add("zigzag", cmd_zigzag, "Count the zigzag labelings of a poset.")
    zig.add_argument("poset", help=poset_help)
    zig.add_argument("--list", action="store_true", help="Also list the labelings.")

    irreducible = add("irreducible", cmd_irreducible, "Irreducibility of K.")
    irreducible.add_argument("poset", help=poset_help)

    sp = add(
        "sp-distinguish",
        cmd_sp_distinguish,
        "Check that K tells apart series-parallel posets.",
    )
    sp.add_argument("max_n", type=int, nargs="?", default=6, help="Largest size.")
    sp.add_argument(
        "--labeled-example",
        action="store_true",
        help="Show two labeled series-parallel posets with equal K instead.",
    )

    mn = add("mn", cmd_mn, "Murnaghan-Nakayama expansion of a skew Schur function.")
    mn.add_argument("shape", help="JSON file {lambda, mu}, or '-' for stdin.")
    mn.add_argument(
        "--expansion",
        choices=("psi", "p", "chi"),
        default="psi",
        help="Print the psi expansion, the power sum expansion or the chi table.",
    )
    mn.add_argument("--min1", action="store_true", help="Print Min1 only.")
    mn.add_argument("--plot", metavar="FILE", help="Save the Young diagram.")

    convert = add("convert", cmd_convert, "Rewrite an expression in another basis.")
    convert.add_argument("expression")
    convert.add_argument("--to", choices=qsym.BASES, default="psi")

    functional = add("functional", cmd_functional, "Evaluate Min1 or Max1.")
    functional.add_argument("which", choices=("min1", "max1"))
    functional.add_argument("expression")

    auto = add("auto", cmd_auto, "Apply omega, rho or omegarho.")
    auto.add_argument("which", choices=qsym.AUTOMORPHISMS)
    auto.add_argument("expression")
    _basis_option(auto)

    product = add("product", cmd_product, "Multiply two expressions.")
    product.add_argument("first")
    product.add_argument("second")
    _basis_option(product)

    coproduct = add("coproduct", cmd_coproduct, "Coproduct of an expression.")
    coproduct.add_argument("expression")
    coproduct.add_argument(
        "--graded", metavar="ALPHA", help="Graded component, e.g. '2,1'."
    )
    _basis_option(coproduct)

    return parser


def configure_logging(verbosity: int) -> None:
    """Send package log records to stderr, at WARNING, INFO (-v) or DEBUG (-vv)."""
    global _handler  # noqa: PLW0603
    package_logger = logging.getLogger("quasipsi")
    if _handler is None:
        _handler = logging.StreamHandler(sys.stderr)
        _handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
        package_logger.addHandler(_handler)
    levels = [logging.WARNING, logging.INFO, logging.DEBUG]
    package_logger.setLevel(levels[min(verbosity, len(levels) - 1)])


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line interface and return its exit code."""
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        config = RunConfig(args.guard, args.format, args.verify)
        return args.handler(args, config)
    except VerificationError as err:
        print(f"verification failed: {err}", file=sys.stderr)
        return EXIT_VERIFICATION
    except (utils.ParseError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PARSE
    except utils.GuardExceededError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_GUARD
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
