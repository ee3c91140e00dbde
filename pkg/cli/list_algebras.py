#!/usr/bin/env python3

"""This module contain the list subcommand showing the catalog."""

from lie_endo_toolbox import EXIT_OK
from lie_endo_toolbox.lie_catalog import catalog_entries

from .common import add_shared_arguments, write_output


def configure_parser(subparser):
    """Adds the parser for the list command to an argparse ArgumentParser"""
    list_parser = subparser.add_parser("list", help="List the built-in Lie algebras")
    add_shared_arguments(list_parser, algebra=False)


def subcommand(args, config):  # pylint: disable=unused-argument
    """Execute the list command with args."""
    lines = []
    for name, dim, convention in catalog_entries():
        label = f"{name} (dim {dim})" if dim is not None else name
        lines.append(f"{label:<34} {convention}")
    write_output(args, "\n".join(lines) + "\n")
    return EXIT_OK
