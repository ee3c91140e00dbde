#!/usr/bin/env python3

"""This module contain the flow subcommand integrating a Lax flow."""

import io
import logging
import math
import sys

from lie_endo_toolbox import EXIT_OK
from lie_endo_toolbox.lie_endo import build
from lie_endo_toolbox.lie_errors import NonFiniteStateError
from lie_endo_toolbox.lie_fieldlang import parse_field
from lie_endo_toolbox.lie_file_xlsx import LieXlsx
from lie_endo_toolbox.lie_flow import CSV_FLOAT, FlowMethod, FlowSpec, convergence_study, \
                                      integrate, squared_norm
from lie_endo_toolbox.lie_lax import lax_field

from .common import UsageError, add_shared_arguments, resolve_algebra, resolve_params, \
                    write_output

NORM_INVARIANT = "|x|^2"


def configure_parser(subparser):
    """Adds the parser for the flow command to an argparse ArgumentParser"""
    flow_parser = subparser.add_parser(
        "flow", help="Integrate x' = X_B(x) and monitor the Casimir polynomials")
    add_shared_arguments(flow_parser)
    flow_parser.add_argument("--potential", required=True,
                             help='Potential B, e.g. "d1: a*x1; d2: b*x2; d3: c*x3"')
    flow_parser.add_argument("--x0", required=True,
                             help="Initial point, comma separated, e.g. 1,1,1")
    flow_parser.add_argument("--t0", type=float, default=0.0, help="Start time")
    flow_parser.add_argument("--t1", type=float, default=1.0, help="End time")
    flow_parser.add_argument("--dt", type=float, default=1e-3, help="Time step")
    flow_parser.add_argument("--method", default=FlowMethod.RK4.value,
                             choices=[method.value for method in FlowMethod],
                             help="Integration scheme")
    flow_parser.add_argument("--sample-every", type=int, default=1,
                             help="Write one row every N steps")
    flow_parser.add_argument("--max-k", type=int, default=None,
                             help="Number of logged Casimir polynomials (default min(n, 4))")
    flow_parser.add_argument("--convergence", type=int, default=None, metavar="N",
                             help="Print the drift while halving dt N times instead")


def parse_point(text, nvars):
    """Comma separated initial point"""
    try:
        point = [float(value) for value in text.split(",")]
    except ValueError as error:
        raise UsageError(f"Invalid initial point '{text}'") from error
    if len(point) != nvars or not all(math.isfinite(value) for value in point):
        raise UsageError(f"Initial point must hold {nvars} finite numbers")
    return point


def _write_convergence(args, rows):
    if args.out and args.out.endswith(".xlsx"):
        LieXlsx().export_convergence_xlsx(rows, args.out)
        return
    lines = ["dt,drift,ratio"]
    for row in rows:
        ratio = "" if row.ratio is None else CSV_FLOAT.format(row.ratio)
        lines.append(f"{CSV_FLOAT.format(row.dt)},{CSV_FLOAT.format(row.drift)},{ratio}")
    write_output(args, "\n".join(lines) + "\n")


def _write_trajectory(args, trajectory):
    if args.out and args.out.endswith(".xlsx"):
        LieXlsx().export_trajectory_xlsx(trajectory, args.out)
        return
    stream = io.StringIO()
    trajectory.write_csv(stream)
    write_output(args, stream.getvalue())


def subcommand(args, config):
    """Execute the flow command with args."""
    algebra = resolve_algebra(args)
    params = resolve_params(args)
    pkg = build(algebra)
    potential = parse_field(args.potential, algebra.dim, params)
    if args.sample_every < 1:
        raise UsageError("--sample-every must be at least 1")

    flow_spec = FlowSpec(lax_field(pkg, potential), parse_point(args.x0, algebra.dim),
                         t0=args.t0, t1=args.t1, dt=args.dt, method=args.method,
                         max_casimir=args.max_k if args.max_k is not None
                         else config.max_casimir,
                         extra_invariants={NORM_INVARIANT: squared_norm(pkg.ring)})

    if args.convergence is not None:
        rows = convergence_study(flow_spec, args.convergence, args.sample_every)
        _write_convergence(args, rows)
        return EXIT_OK

    try:
        trajectory = integrate(flow_spec, args.sample_every)
    except NonFiniteStateError as error:
        if error.trajectory is not None and len(error.trajectory):
            _write_trajectory(args, error.trajectory)
        raise
    _write_trajectory(args, trajectory)

    for power, name in enumerate(trajectory.invariant_names, start=1):
        print(f"max drift {name}: {trajectory.casimir_drift(power):.3e}", file=sys.stderr)
    print(f"max drift {NORM_INVARIANT}: {trajectory.invariant_drift(NORM_INVARIANT):.3e}",
          file=sys.stderr)
    print(f"max specdev: {trajectory.spectral_deviation:.3e}", file=sys.stderr)

    # |x|^2 is only conserved on compact algebras
    drift = max(trajectory.casimir_drift(), trajectory.spectral_deviation)
    if drift > config.tolerance:
        logging.warning("Invariant drift {:.3e} exceeds the tolerance {:.1e}".format(
            drift, config.tolerance))
    return EXIT_OK
