#!/usr/bin/env python3

"""Arguments and helpers shared by every subcommand."""

import os
import sys

from lie_endo_toolbox.lie_algebra import load_algebra_file
from lie_endo_toolbox.lie_catalog import catalog
from lie_endo_toolbox.lie_file_xlsx import LieXlsx
from lie_endo_toolbox.lie_fieldlang import parse_params

ALGEBRA_FILE_EXTENSIONS = (".json", ".xlsx")


class UsageError(Exception):
    """Raised for inconsistent command line options"""


def add_shared_arguments(parser, algebra=True):
    """Adds --seed, --conf, --log-level and --out, and the algebra source
    options when `algebra` is set"""
    if algebra:
        parser.add_argument(
            "source", nargs="?",
            help="Catalog name (e.g. so3) or algebra file (.json or .xlsx)")
        sources = parser.add_mutually_exclusive_group()
        sources.add_argument("--algebra", help="Catalog name, e.g. so3 or strict_upper_triangular4")
        sources.add_argument("--file", help="Algebra document, .json or .xlsx")
        parser.add_argument(
            "--param", default="",
            help="Rational parameter bindings used in expressions, e.g. a=1,b=2/3")
    parser.add_argument("--out", help="Output file, standard output when omitted")
    parser.add_argument("--seed", type=int, default=None,
                        help="Seed of the randomized checks (default 0)")
    parser.add_argument("--conf", default=None,
                        help="INI file with a [lie_endo_toolbox] section")
    parser.add_argument("--log-level", default=None,
                        help="Logging level, e.g. DEBUG or WARNING")


def resolve_algebra(args, validate=True):
    """Load the algebra named by the positional source, --algebra or --file"""
    sources = [value for value in (args.source, args.algebra, args.file) if value]
    if len(sources) != 1:
        raise UsageError("Give exactly one algebra: a catalog name or an algebra file")

    source = sources[0]
    is_file = args.file is not None or source.endswith(ALGEBRA_FILE_EXTENSIONS) \
        or os.path.exists(source)
    if not is_file:
        return catalog(source)
    if source.endswith(".xlsx"):
        return LieXlsx().import_algebra_xlsx(source, validate=validate)
    return load_algebra_file(source, validate=validate)


def resolve_params(args):
    """Parameter bindings of --param"""
    try:
        return parse_params(args.param)
    except ValueError as error:
        raise UsageError(str(error)) from error


def write_output(args, text):
    """Write `text` to --out or to the standard output"""
    if args.out:
        with open(args.out, "w", encoding="utf-8") as stream:
            stream.write(text)
    else:
        sys.stdout.write(text)
