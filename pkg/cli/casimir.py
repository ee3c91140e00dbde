#!/usr/bin/env python3

"""This module contain the casimir subcommand printing the power traces."""

from lie_endo_toolbox import EXIT_OK
from lie_endo_toolbox.lie_endo import build, casimirs
from lie_endo_toolbox.lie_fieldlang import format_poly

from .common import UsageError, add_shared_arguments, resolve_algebra, write_output


def configure_parser(subparser):
    """Adds the parser for the casimir command to an argparse ArgumentParser"""
    casimir_parser = subparser.add_parser(
        "casimir", help="Print the Casimir polynomials I_k = Tr A^k")
    add_shared_arguments(casimir_parser)
    casimir_parser.add_argument(
        "--max-k", type=int, default=None,
        help="Largest power k (default: the dimension of the algebra)")


def subcommand(args, config):
    """Execute the casimir command with args."""
    algebra = resolve_algebra(args)
    max_k = args.max_k if args.max_k is not None else (config.max_casimir or algebra.dim)
    if max_k < 1:
        raise UsageError("--max-k must be at least 1")

    invariants = casimirs(build(algebra), max_k)
    lines = [f"I{power} = {format_poly(invariant)}"
             for power, invariant in enumerate(invariants, start=1)]
    write_output(args, "\n".join(lines) + "\n")
    return EXIT_OK
