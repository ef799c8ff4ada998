"""
Command-line front end.

    cellricci gen simplex-boundary 2 | cellricci compare
    cellricci spectrum --gen "torus 4 4"
    cellricci transport v0 v1 --alpha 1/2 --input complex.txt

Complexes come from ``--input`` (a file in the cell/face format), ``--gen``
(a generator spec) or stdin. Reports go to stdout; logs go to stderr.

TSV columns:
    forman     tau sigma ric d_tau d_sigma n_tau n_sigma n2
    lly        tau sigma kappa decimal
    compare    tau sigma ric kappa_formula kappa_lp match
    bound      tau sigma alpha dual W cost tight
    transport  source target mass_num mass_den (after the W line)
    bochner    sample vectors max_residual status

Exit status: 0 all checks pass, 1 a check failed or a computation was
refused, 2 bad input.
"""

import argparse
import sys
from fractions import Fraction
from typing import Callable, Dict, List, Literal, Optional, Sequence, Tuple

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator
from rich.console import Console
from rich.table import Table

from cellricci import __version__
from cellricci.complex import (
    CellComplex,
    build_cycle,
    build_interval_grid,
    build_path,
    build_point,
    build_simplex_boundary,
    build_torus_grid,
    parse_complex_file,
    product,
    serialize_complex,
    validate,
)
from cellricci.complex.validation import CHECKS
from cellricci.config import settings
from cellricci.config.settings import print_settings
from cellricci.curvature import (
    alpha_ricci,
    certify_quasiconvex,
    forman_records,
    lly_ricci,
    mismatches,
    verify_theorem,
)
from cellricci.exceptions import (
    CellRicciError,
    ComplexFormatError,
    InvalidParameterError,
)
from cellricci.forms import OneForm, bochner_terms, hodge_laplacian_one
from cellricci.spectral import eigen_bound
from cellricci.transport import certificate_sandwich, measure_alpha, wasserstein
from cellricci.utils.logger import setup_logging
from cellricci.utils.rationals import format_decimal, format_rational, parse_alpha

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

COMMANDS = (
    "validate",
    "forman",
    "lly",
    "compare",
    "transport",
    "spectrum",
    "bound",
    "gen",
    "bochner",
    "settings",
)


class RunConfig(BaseModel):
    """One CLI invocation, validated."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    command: Literal[COMMANDS]  # type: ignore[valid-type]
    input_path: Optional[str] = None
    generator: Optional[List[str]] = None
    alpha: Optional[Fraction] = None
    output_format: Literal["tsv", "text"] = "tsv"
    eps: Optional[float] = Field(default=None, gt=0)
    jobs: Optional[int] = Field(default=None, ge=1)
    log_level: Optional[str] = None
    cells: List[str] = Field(default_factory=list)
    samples: int = Field(default=3, ge=1)
    seed: int = 0

    @model_validator(mode="after")
    def check_single_source(self) -> "RunConfig":
        if self.input_path is not None and self.generator:
            raise ValueError("give either --input or --gen, not both")
        if self.command == "gen" and not self.generator:
            raise ValueError("gen needs a generator spec")
        return self


# ============================================================================
# Generator specs
# ============================================================================


def _int(tokens: Sequence[str], pos: int, what: str) -> int:
    if pos >= len(tokens):
        raise InvalidParameterError(f"generator spec ended early: expected {what}")
    try:
        return int(tokens[pos])
    except ValueError:
        raise InvalidParameterError(f"expected integer {what}, got {tokens[pos]!r}") from None


def _parse_spec(tokens: Sequence[str], pos: int) -> Tuple[CellComplex, int]:
    if pos >= len(tokens):
        raise InvalidParameterError("empty generator spec")
    name = tokens[pos]
    pos += 1
    if name == "point":
        return build_point(), pos
    if name == "path":
        return build_path(_int(tokens, pos, "path length")), pos + 1
    if name == "cycle":
        return build_cycle(_int(tokens, pos, "cycle length")), pos + 1
    if name == "simplex-boundary":
        return build_simplex_boundary(_int(tokens, pos, "dimension")), pos + 1
    if name == "torus":
        k1 = _int(tokens, pos, "torus side")
        k2 = _int(tokens, pos + 1, "torus side")
        return build_torus_grid(k1, k2), pos + 2
    if name == "grid":
        lengths: List[int] = []
        while pos < len(tokens) and tokens[pos].lstrip("-").isdigit():
            lengths.append(int(tokens[pos]))
            pos += 1
        return build_interval_grid(lengths), pos
    if name == "product":
        left, pos = _parse_spec(tokens, pos)
        right, pos = _parse_spec(tokens, pos)
        return product(left, right), pos
    raise InvalidParameterError(f"unknown generator {name!r}")


def build_from_spec(spec: Sequence[str]) -> CellComplex:
    """
    Build a complex from a generator spec.

    ``simplex-boundary n``, ``grid l1 l2 ...``, ``torus k1 k2``, ``path l``,
    ``cycle k``, ``point`` and ``product <spec> <spec>``; a single string is
    split on whitespace.
    """
    tokens = spec.split() if isinstance(spec, str) else [t for s in spec for t in s.split()]
    complex_, pos = _parse_spec(tokens, 0)
    if pos != len(tokens):
        raise InvalidParameterError(f"trailing tokens in generator spec: {tokens[pos:]}")
    return complex_


def load_complex(config: RunConfig) -> CellComplex:
    if config.generator:
        return build_from_spec(config.generator)
    try:
        if config.input_path is not None and config.input_path != "-":
            with open(config.input_path, encoding="utf-8") as fh:
                text = fh.read()
        else:
            text = sys.stdin.read()
    except UnicodeDecodeError as e:
        raise ComplexFormatError(f"input is not UTF-8 text: {e.reason} at byte {e.start}") from e
    return parse_complex_file(text)


# ============================================================================
# Output
# ============================================================================


def emit(config: RunConfig, title: str, header: List[str], rows: List[List[str]]) -> None:
    """Rows as TSV (with a ``#`` header line) or as a rich table."""
    if config.output_format == "text":
        table = Table(title=title)
        for column in header:
            table.add_column(column)
        for row in rows:
            table.add_row(*row)
        Console(file=sys.stdout, width=160).print(table)
        return
    out = ["# " + "\t".join(header)]
    out += ["\t".join(row) for row in rows]
    sys.stdout.write("\n".join(out) + "\n")


def emit_lines(lines: List[str]) -> None:
    sys.stdout.write("\n".join(lines) + "\n")


# ============================================================================
# Subcommands
# ============================================================================


def cmd_validate(config: RunConfig, c: CellComplex) -> int:
    report = validate(c)
    failed = set(report.failed_checks())
    rows = [[name, "FAIL" if name in failed else "PASS"] for name in CHECKS]
    emit(config, "validation", ["check", "status"], rows)
    if config.output_format == "tsv":
        emit_lines([f"# violation\t{v}" for v in report.violations] or ["# no violations"])
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_forman(config: RunConfig, c: CellComplex) -> int:
    certify_quasiconvex(c)
    header = ["tau", "sigma", "ric", "d_tau", "d_sigma", "n_tau", "n_sigma", "n2"]
    emit(config, "combinatorial Ricci", header, [r.to_row() for r in forman_records(c)])
    return EXIT_OK


def cmd_lly(config: RunConfig, c: CellComplex) -> int:
    certify_quasiconvex(c)
    if config.cells:
        if len(config.cells) != 2:
            raise InvalidParameterError("lly --pair takes exactly two cells")
        a, b = config.cells
        alpha = settings.alpha if config.alpha is None else config.alpha
        kappa = alpha_ricci(c, a, b, alpha)
        emit(
            config,
            "alpha-Ricci",
            ["a", "b", "alpha", "kappa_alpha", "decimal"],
            [[a, b, format_rational(alpha), format_rational(kappa), format_decimal(kappa)]],
        )
        return EXIT_OK
    kappas = [(v, lly_ricci(c, v)) for v in c.vectors()]
    rows = [[v.tau, v.sigma, format_rational(k), format_decimal(k)] for v, k in kappas]
    emit(config, "LLY curvature", ["tau", "sigma", "kappa", "decimal"], rows)
    return EXIT_OK


def cmd_compare(config: RunConfig, c: CellComplex) -> int:
    records = verify_theorem(c, jobs=config.jobs)
    header = ["tau", "sigma", "ric", "kappa_formula", "kappa_lp", "match"]
    emit(config, "LLY vs combinatorial Ricci", header, [r.to_row() for r in records])
    return EXIT_FAILED if mismatches(records) else EXIT_OK


def cmd_transport(config: RunConfig, c: CellComplex) -> int:
    if len(config.cells) != 2:
        raise InvalidParameterError("transport takes exactly two cells")
    a, b = config.cells
    for cell_id in (a, b):
        if cell_id not in c:
            raise InvalidParameterError(f"unknown cell {cell_id}")
    alpha = settings.alpha if config.alpha is None else config.alpha
    certificate = wasserstein(c, measure_alpha(c, a, alpha), measure_alpha(c, b, alpha))
    emit_lines([f"# W\t{format_rational(certificate.value)}\t{format_decimal(certificate.value)}"])
    rows = [
        [x, y, str(m.numerator), str(m.denominator)]
        for x, y, m in certificate.coupling.rows()
    ]
    emit(config, "optimal coupling", ["source", "target", "mass_num", "mass_den"], rows)
    return EXIT_OK


def cmd_spectrum(config: RunConfig, c: CellComplex) -> int:
    report = eigen_bound(c, eps=config.eps)
    if config.output_format == "text":
        rows = [line.split("\t", 1) for line in report.to_lines()]
        emit(config, "spectrum of G_M", ["quantity", "value"], rows)
    else:
        emit_lines(report.to_lines())
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_bound(config: RunConfig, c: CellComplex) -> int:
    certify_quasiconvex(c)
    records = [certificate_sandwich(c, v, config.alpha) for v in c.vectors()]
    header = ["tau", "sigma", "alpha", "dual", "W", "cost", "tight"]
    emit(config, "certificate sandwich", header, [r.to_row() for r in records])
    return EXIT_OK if all(r.ordered and r.tight for r in records) else EXIT_FAILED


def cmd_bochner(config: RunConfig, c: CellComplex) -> int:
    certify_quasiconvex(c)
    rng = np.random.default_rng(config.seed)
    vectors = c.vectors()
    rows: List[List[str]] = []
    failed = False
    for sample in range(config.samples):
        w = OneForm.random(c, rng)
        delta = hodge_laplacian_one(c, w)
        residual = max(
            (abs(bochner_terms(c, w, v, delta).residual) for v in vectors), default=0.0
        )
        ok = residual <= settings.bochner_tolerance
        failed = failed or not ok
        rows.append([str(sample), str(len(vectors)), f"{residual:.3e}", "PASS" if ok else "FAIL"])
    emit(config, "Bochner identity", ["sample", "vectors", "max_residual", "status"], rows)
    return EXIT_FAILED if failed else EXIT_OK


def cmd_gen(config: RunConfig, c: CellComplex) -> int:
    sys.stdout.write(serialize_complex(c))
    return EXIT_OK


HANDLERS: Dict[str, Callable[[RunConfig, CellComplex], int]] = {
    "validate": cmd_validate,
    "forman": cmd_forman,
    "lly": cmd_lly,
    "compare": cmd_compare,
    "transport": cmd_transport,
    "spectrum": cmd_spectrum,
    "bound": cmd_bound,
    "bochner": cmd_bochner,
    "gen": cmd_gen,
}


def run(config: RunConfig) -> int:
    """Execute one validated invocation and return its exit status."""
    if config.log_level:
        setup_logging(config.log_level)
    with logger.contextualize(command=config.command):
        return _dispatch(config)


def _dispatch(config: RunConfig) -> int:
    if config.command == "settings":
        print_settings(Console(file=sys.stdout))
        return EXIT_OK

    try:
        c = load_complex(config)
    except (ComplexFormatError, InvalidParameterError, OSError) as e:
        logger.error(f"Cannot load complex: {e}")
        return EXIT_INPUT

    try:
        return HANDLERS[config.command](config, c)
    except InvalidParameterError as e:
        logger.error(str(e))
        return EXIT_INPUT
    except CellRicciError as e:
        logger.error(f"{config.command} refused: {e}")
        return EXIT_FAILED


# ============================================================================
# Argument parsing
# ============================================================================


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_argument_group("input")
    source.add_argument("--input", "-i", dest="input_path", help="complex file ('-' for stdin)")
    source.add_argument("--gen", "-g", dest="generator", help="generator spec, e.g. 'torus 4 4'")
    common.add_argument("--alpha", help="laziness p/q in [0, 1]")
    common.add_argument("--format", dest="output_format", choices=("tsv", "text"), default="tsv")
    common.add_argument("--eps", type=float, help="zero-eigenvalue threshold")
    common.add_argument("--jobs", type=int, help="worker processes (default CELLRICCI_JOBS)")
    common.add_argument("--log-level", help="DEBUG, INFO, WARNING, ERROR")

    parser = argparse.ArgumentParser(
        prog="cellricci",
        description="Discrete Ricci curvatures on regular quasiconvex cell complexes.",
        epilog="TSV columns:" + __doc__.split("TSV columns:", 1)[1],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("validate", parents=[common], help="structural checks")
    sub.add_parser("forman", parents=[common], help="combinatorial Ricci per vector")
    lly = sub.add_parser("lly", parents=[common], help="LLY curvature per vector")
    lly.add_argument("--pair", nargs=2, metavar="CELL", help="alpha-Ricci of two cells")
    sub.add_parser("compare", parents=[common], help="LLY curvature against the closed form")
    transport = sub.add_parser("transport", parents=[common], help="W between two measures")
    transport.add_argument("cells", nargs=2, metavar="CELL")
    sub.add_parser("spectrum", parents=[common], help="Laplacian spectrum and bounds")
    sub.add_parser("bound", parents=[common], help="dual <= W <= coupling cost per vector")
    bochner = sub.add_parser("bochner", parents=[common], help="sampled Bochner identity")
    bochner.add_argument("--samples", type=int, default=3)
    bochner.add_argument("--seed", type=int, default=0)
    gen = sub.add_parser("gen", parents=[common], help="write a generated complex")
    gen.add_argument("spec", nargs="+", help="generator spec")
    sub.add_parser("settings", parents=[common], help="print effective configuration")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    cells = getattr(args, "cells", None) or getattr(args, "pair", None) or []
    generator = getattr(args, "spec", None) or (args.generator.split() if args.generator else None)
    if args.command == "gen" and args.generator:
        raise InvalidParameterError("gen takes its spec as arguments, not --gen")
    return RunConfig(
        command=args.command,
        input_path=args.input_path,
        generator=generator,
        alpha=None if args.alpha is None else parse_alpha(args.alpha),
        output_format=args.output_format,
        eps=args.eps,
        jobs=args.jobs,
        log_level=args.log_level,
        cells=list(cells),
        samples=getattr(args, "samples", 3),
        seed=getattr(args, "seed", 0),
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_INPUT

    try:
        config = config_from_args(args)
    except (InvalidParameterError, ValidationError) as e:
        logger.error(f"Invalid arguments: {e}")
        return EXIT_INPUT
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
