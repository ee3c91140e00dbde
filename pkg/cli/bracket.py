#!/usr/bin/env python3

"""This module contain the bracket subcommand computing {B,C} of two potentials."""

from lie_endo_toolbox import EXIT_OK, EXIT_VERIFICATION_FAILED
from lie_endo_toolbox.lie_endo import build
from lie_endo_toolbox.lie_fieldlang import format_field, parse_field
from lie_endo_toolbox.lie_lax import deformed_bracket, verify_homomorphism

from .common import add_shared_arguments, resolve_algebra, resolve_params, write_output


def configure_parser(subparser):
    """Adds the parser for the bracket command to an argparse ArgumentParser"""
    bracket_parser = subparser.add_parser(
        "bracket", help="Compute the deformed bracket {B,C} of two potentials")
    add_shared_arguments(bracket_parser)
    bracket_parser.add_argument("-b", "--potential-b", required=True,
                                help='Potential B, e.g. "d1: x2; d3: 1/2*x1^2"')
    bracket_parser.add_argument("-c", "--potential-c", required=True,
                                help="Potential C in the same language")


def subcommand(args, config):  # pylint: disable=unused-argument
    """Execute the bracket command with args."""
    algebra = resolve_algebra(args)
    params = resolve_params(args)
    left = parse_field(args.potential_b, algebra.dim, params)
    right = parse_field(args.potential_c, algebra.dim, params)

    pkg = build(algebra)
    report = verify_homomorphism(pkg, left, right)
    lines = [f"{{B,C}} = {format_field(deformed_bracket(pkg, left, right))}"]
    for check in report:
        lines.append(f"{check.statement}: {check.status}")
    write_output(args, "\n".join(lines) + "\n")
    return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED
