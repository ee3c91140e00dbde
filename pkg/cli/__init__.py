#!/usr/bin/env python3

"""Command line interface of the lie_endo_toolbox library."""

import argparse
import logging
import sys

from lie_endo_toolbox import EXIT_IO_ERROR, EXIT_USAGE_ERROR, EXIT_VERIFICATION_FAILED
from lie_endo_toolbox.lie_config import LieConfig
from lie_endo_toolbox.lie_errors import FlowError, LieToolboxError, NonFiniteStateError

from . import bracket, casimir, flow, list_algebras, verify
from .common import UsageError


def build_parser():
    """Return the argparse parser of every subcommand"""
    parser = argparse.ArgumentParser(
        prog="lie-endo-cli",
        description="Exact computations with the canonical endomorphism field of a Lie algebra")
    subparser = parser.add_subparsers(dest="command", help="Subcommands")
    subparser.required = True

    list_algebras.configure_parser(subparser)
    verify.configure_parser(subparser)
    casimir.configure_parser(subparser)
    bracket.configure_parser(subparser)
    flow.configure_parser(subparser)
    return parser


def subcommand(args, config):
    """Execute the right subcommand from args."""
    if args.command == "list":
        return list_algebras.subcommand(args, config)
    if args.command == "verify":
        return verify.subcommand(args, config)
    if args.command == "casimir":
        return casimir.subcommand(args, config)
    if args.command == "bracket":
        return bracket.subcommand(args, config)
    if args.command == "flow":
        return flow.subcommand(args, config)
    print(f"'{args.command}' is not a valid subcommand", file=sys.stderr)
    return EXIT_USAGE_ERROR


def main(argv=None):
    """Parse argv, run the subcommand and return the exit code"""
    args = build_parser().parse_args(argv)
    try:
        config = LieConfig(conf_file=args.conf, seed=args.seed, log_level=args.log_level)
        logging.getLogger().setLevel(config.log_level)
        return subcommand(args, config)
    except NonFiniteStateError as error:
        print(f"Integration failed: {error}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED
    except (UsageError, FlowError, LieToolboxError, ValueError) as error:
        print(f"Error: {error}", file=sys.stderr)
        return EXIT_USAGE_ERROR
    except OSError as error:
        print(f"I/O error: {error}", file=sys.stderr)
        return EXIT_IO_ERROR
