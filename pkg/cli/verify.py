#!/usr/bin/env python3

"""This module contain the verify subcommand running identity checks."""

import logging
from concurrent.futures import ThreadPoolExecutor

from lie_endo_toolbox import EXIT_OK, EXIT_VERIFICATION_FAILED
from lie_endo_toolbox.lie_coalgebra import PoissonPackage, verify_poisson_jacobi, \
                                           verify_poisson_leibniz
from lie_endo_toolbox.lie_endo import STRUCTURAL_IDENTITIES, build, structural_check, \
                                      verify_integrability, verify_nijenhuis_identity
from lie_endo_toolbox.lie_lax import random_potentials, verify_antisymmetry, \
                                     verify_conservation, verify_homomorphism, \
                                     verify_jacobi_deformed, verify_lax_equation, \
                                     verify_potential_formulas
from lie_endo_toolbox.lie_report import VerificationReport, check_labelled

from .common import UsageError, add_shared_arguments, resolve_algebra, write_output

DEFAULT_GROUPS = (
    "nijenhuis",
    "structural",
    "homomorphism",
    "deformed_jacobi",
    "conservation",
    "potential_formulas",
    "lax_equation",
    "poisson",
)
GROUPS = DEFAULT_GROUPS + ("integrability",)


def configure_parser(subparser):
    """Adds the parser for the verify command to an argparse ArgumentParser"""
    verify_parser = subparser.add_parser(
        "verify", help="Check the identities of the canonical endomorphism field")
    add_shared_arguments(verify_parser)
    verify_parser.add_argument(
        "--which", default="all",
        help=("Identity group to check: all, jacobi, " + ", ".join(GROUPS)
              + ", or a single structural identity such as "
              + STRUCTURAL_IDENTITIES[0]))
    verify_parser.add_argument(
        "--samples", type=int, default=3,
        help="Number of seeded random potentials per randomized group")


def jacobi_report(algebra):
    """Report of the Jacobi identity of the structure constants"""
    report = VerificationReport(algebra.name)
    defect = algebra.jacobi_defect()
    report.add(check_labelled(
        "jacobi", "[ei,[ej,el]] + [ej,[el,ei]] + [el,[ei,ej]] = 0",
        [(f"({i + 1},{j + 1},{l + 1}) e{m + 1}", value)
         for (i, j, l, m), value in sorted(defect.items())]))
    return report


def _triples(potentials):
    return [potentials[index:index + 3] for index in range(0, len(potentials) - 2, 3)]


def run_group(group, pkg, config, samples):
    """Report of one identity group"""
    # pylint: disable=too-many-return-statements
    algebra = pkg.algebra
    seed = config.seed
    max_casimir = config.max_casimir or min(pkg.dim, 4)
    conserved = config.max_casimir or pkg.dim

    if group == "nijenhuis":
        return verify_nijenhuis_identity(pkg)
    if group == "structural":
        report = VerificationReport(algebra.name)
        for identity in STRUCTURAL_IDENTITIES:
            report.add(structural_check(pkg, identity, max_casimir))
        return report
    if group in STRUCTURAL_IDENTITIES:
        report = VerificationReport(algebra.name)
        report.add(structural_check(pkg, group, max_casimir))
        return report
    if group == "integrability":
        return verify_integrability(algebra, samples=50, seed=seed)

    potentials = random_potentials(pkg, max(samples, 2) * 3, seed=seed)
    report = VerificationReport(algebra.name)
    if group == "homomorphism":
        for left, right in zip(potentials[::2], potentials[1::2]):
            report.extend(verify_homomorphism(pkg, left, right))
            report.extend(verify_antisymmetry(pkg, left, right))
    elif group == "deformed_jacobi":
        for first, second, third in _triples(potentials)[:samples]:
            report.extend(verify_jacobi_deformed(pkg, first, second, third))
    elif group == "conservation":
        for potential in potentials[:samples]:
            report.extend(verify_conservation(pkg, potential, conserved))
    elif group == "lax_equation":
        for potential in potentials[:samples]:
            report.extend(verify_lax_equation(pkg, potential))
    elif group == "potential_formulas":
        for i in range(pkg.dim):
            for j in range(i + 1, pkg.dim):
                report.extend(verify_potential_formulas(
                    pkg, algebra.basis(i), algebra.basis(j)))
    elif group == "poisson":
        poisson = PoissonPackage(pkg)
        for first, second, third in _triples(potentials)[:samples]:
            report.extend(verify_poisson_jacobi(poisson, first[0], second[0], third[0]))
            report.extend(verify_poisson_leibniz(poisson, first[0], second[0], third[0]))
    return report


def selected_groups(which):
    """Groups selected by --which"""
    if which == "all":
        return list(DEFAULT_GROUPS)
    if which in GROUPS or which in STRUCTURAL_IDENTITIES:
        return [which]
    raise UsageError(f"Unknown identity '{which}'")


def subcommand(args, config):
    """Execute the verify command with args."""
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    groups = [] if args.which == "jacobi" else selected_groups(args.which)
    algebra = resolve_algebra(args, validate=False)

    report = jacobi_report(algebra)
    if report.passed and groups:
        pkg = build(algebra)
        with ThreadPoolExecutor(max_workers=config.workers) as executor:
            reports = list(executor.map(
                lambda group: run_group(group, pkg, config, args.samples), groups))
        for group_report in reports:
            report.extend(group_report)
    elif not report.passed:
        logging.error("{} is not a Lie algebra, skipping the other identities".format(
            algebra.name))

    write_output(args, report.to_json() + "\n")
    return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED
