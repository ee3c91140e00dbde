"""Fixed-step integration of Lax flows with monitoring of the Casimir
polynomials and of the spectrum of A at the current point"""

import csv
import logging
from collections import namedtuple
from enum import Enum

import numpy as np

from lie_endo_toolbox.lie_catalog import special_orthogonal
from lie_endo_toolbox.lie_endo import casimirs
from lie_endo_toolbox.lie_errors import FlowError, NonFiniteStateError
from lie_endo_toolbox.lie_lax import LaxSystem, rotating_body_system
from lie_endo_toolbox.lie_poly import PolyVectorField, qq, to_sympy

FLOW_MAX_CASIMIR = 4
CSV_FLOAT = "{:.17g}"

ConvergenceRow = namedtuple('ConvergenceRow', ['dt', 'drift', 'ratio'])


class FlowMethod(Enum):
    """Explicit fixed-step schemes"""
    RK4 = 'rk4'
    EULER = 'euler'


# Butcher tables as (stage rows, weights)
BUTCHER_TABLES = {
    FlowMethod.RK4: (
        ([], [1 / 2], [0.0, 1 / 2], [0.0, 0.0, 1.0]),
        (1 / 6, 1 / 3, 1 / 3, 1 / 6),
    ),
    FlowMethod.EULER: (
        ([],),
        (1.0,),
    ),
}


class CompiledPoly:
    """Float evaluator of an exact polynomial, one row of exponents per term"""

    def __init__(self, polynomial, nvars):
        terms = list(polynomial.terms())
        self.exponents = np.array([monom for monom, _ in terms], dtype=float).reshape(-1, nvars)
        self.coefficients = np.array([float(to_sympy(value)) for _, value in terms], dtype=float)

    def __call__(self, point):
        if not self.coefficients.size:
            return 0.0
        return float(self.coefficients @ np.prod(np.power(point, self.exponents), axis=1))


class CompiledField:
    """Float evaluator of a polynomial vector field"""

    def __init__(self, field):
        self.nvars = field.nvars
        exponents, coefficients, targets = [], [], []
        for index, component in enumerate(field):
            for monom, value in component.terms():
                exponents.append(monom)
                coefficients.append(float(to_sympy(value)))
                targets.append(index)
        self.exponents = np.array(exponents, dtype=float).reshape(-1, self.nvars)
        self.coefficients = np.array(coefficients, dtype=float)
        self.targets = np.array(targets, dtype=int)

    def __call__(self, point):
        if not self.coefficients.size:
            return np.zeros(self.nvars)
        values = self.coefficients * np.prod(np.power(point, self.exponents), axis=1)
        return np.bincount(self.targets, weights=values, minlength=self.nvars)


class CompiledEndo:
    """Float matrix of a linear endomorphism field, A_x = sum_i x^i M_i"""

    def __init__(self, endo):
        size = endo.dim
        self.slices = np.zeros((size, size, size))
        for row in range(size):
            for column in range(size):
                for monom, value in endo[row, column].terms():
                    if sum(monom) != 1:
                        raise FlowError("The monitored endomorphism field must be linear")
                    self.slices[monom.index(1), row, column] = float(to_sympy(value))

    def __call__(self, point):
        return np.tensordot(point, self.slices, axes=1)


def characteristic_coefficients(power_traces):
    """Coefficients of det(t - M) after t^n from the traces of M^k (Newton identities)"""
    elementary = [1.0]
    for order in range(1, len(power_traces) + 1):
        total = sum((-1) ** (index - 1) * elementary[order - index] * power_traces[index - 1]
                    for index in range(1, order + 1))
        elementary.append(total / order)
    return np.array([(-1) ** order * elementary[order]
                     for order in range(1, len(power_traces) + 1)])


def spectral_coefficients(matrix):
    """Characteristic coefficients of a float matrix through its power traces"""
    traces = []
    power = np.eye(matrix.shape[0])
    for _ in range(matrix.shape[0]):
        power = power @ matrix
        traces.append(float(np.trace(power)))
    return characteristic_coefficients(traces)


class FlowSpec:
    """Initial value problem for x' = X(x)"""

    def __init__(self, system, x0, t0=0.0, t1=1.0, dt=1e-3, method=FlowMethod.RK4,
                 max_casimir=None, extra_invariants=None):
        if isinstance(system, LaxSystem):
            self.field = system.field
            self.pkg = system.pkg
        elif isinstance(system, PolyVectorField):
            self.field = system
            self.pkg = None
        else:
            raise FlowError(f"Cannot integrate a {type(system).__name__}")
        self.system = system

        if not dt > 0:
            raise FlowError(f"Time step must be positive, got {dt}")
        if not t1 > t0:
            raise FlowError(f"End time {t1} must be after start time {t0}")
        try:
            self.method = FlowMethod(method)
        except ValueError as error:
            raise FlowError(f"Unsupported method '{method}', expected one of "
                            f"{', '.join(item.value for item in FlowMethod)}") from error

        self.x0 = np.array([float(to_sympy(qq(value))) if not isinstance(value, float)
                            else value for value in x0], dtype=float)
        if self.x0.shape != (self.field.nvars,):
            raise FlowError(
                f"Initial state has {self.x0.size} components, expected {self.field.nvars}")
        if not np.all(np.isfinite(self.x0)):
            raise FlowError("Initial state must be finite")

        self.t0 = float(t0)
        self.t1 = float(t1)
        self.dt = float(dt)
        self.max_casimir = max_casimir
        self.extra_invariants = dict(extra_invariants or {})

    @property
    def steps(self):
        """Number of steps, the step being adjusted to land on t1"""
        return max(1, int(round((self.t1 - self.t0) / self.dt)))

    def refined(self, factor=2):
        """Same problem with the step divided by `factor`"""
        return FlowSpec(self.system, self.x0, self.t0, self.t1, self.dt / factor, self.method,
                        self.max_casimir, self.extra_invariants)


class Trajectory:
    """Sampled states with the logged invariants"""

    def __init__(self, nvars, invariant_names, extra_names=()):
        self.nvars = nvars
        self.invariant_names = list(invariant_names)
        self.extra_names = list(extra_names)
        self.times = []
        self.states = []
        self.invariant_log = []
        self.specdev = []
        self.extra_log = []

    def record(self, time, state, invariants, specdev, extras=()):
        """Append one sample"""
        self.times.append(float(time))
        self.states.append(np.array(state, dtype=float))
        self.invariant_log.append(list(invariants))
        self.specdev.append(float(specdev))
        self.extra_log.append(list(extras))

    def __len__(self):
        return len(self.times)

    def _drift(self, log, column):
        if not log:
            return 0.0
        values = np.array([row[column] for row in log])
        return float(np.max(np.abs(values - values[0])))

    def casimir_drift(self, power=None):
        """Largest change of I_power (of every I_k by default) since the first sample"""
        if not self.invariant_names:
            return 0.0
        columns = range(len(self.invariant_names)) if power is None else [power - 1]
        return max(self._drift(self.invariant_log, column) for column in columns)

    def invariant_drift(self, name):
        """Largest change of an extra invariant since the first sample"""
        return self._drift(self.extra_log, self.extra_names.index(name))

    @property
    def spectral_deviation(self):
        """Largest deviation of the characteristic coefficients of A_x"""
        return max(self.specdev, default=0.0)

    def header(self):
        """CSV column names"""
        return (['t'] + [f"x{index + 1}" for index in range(self.nvars)]
                + self.invariant_names + ['specdev'])

    def rows(self):
        """Sample rows aligned with header()"""
        for time, state, invariants, specdev in zip(self.times, self.states,
                                                    self.invariant_log, self.specdev):
            yield [time] + list(state) + list(invariants) + [specdev]

    def write_csv(self, stream):
        """Write every sample, floats with 17 significant digits"""
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(self.header())
        for row in self.rows():
            writer.writerow([CSV_FLOAT.format(value) for value in row])


def _step(field, method, state, step):
    rows, weights = BUTCHER_TABLES[method]
    stages = []
    for row in rows:
        increment = sum((coefficient * stage for coefficient, stage in zip(row, stages)),
                        np.zeros_like(state))
        stages.append(field(state + step * increment))
    return state + step * sum(weight * stage for weight, stage in zip(weights, stages))


class _Monitor:
    """Float evaluation of the logged quantities"""

    def __init__(self, flow_spec):
        self.invariants = []
        self.endo = None
        if flow_spec.pkg is not None:
            count = flow_spec.max_casimir if flow_spec.max_casimir is not None \
                else min(flow_spec.pkg.dim, FLOW_MAX_CASIMIR)
            if count > 0:
                self.invariants = [CompiledPoly(invariant, flow_spec.pkg.dim)
                                   for invariant in casimirs(flow_spec.pkg, count)]
            self.endo = CompiledEndo(flow_spec.pkg.endo)
        self.extras = [CompiledPoly(poly, flow_spec.field.nvars)
                       for poly in flow_spec.extra_invariants.values()]
        self.reference = self.coefficients(flow_spec.x0)

    def coefficients(self, state):
        """Characteristic coefficients of A at `state`"""
        if self.endo is None:
            return np.zeros(0)
        return spectral_coefficients(self.endo(state))

    def sample(self, state):
        """Invariant values, spectral deviation and extra values at `state`"""
        invariants = [invariant(state) for invariant in self.invariants]
        deviation = self.coefficients(state) - self.reference
        specdev = float(np.max(np.abs(deviation))) if deviation.size else 0.0
        return invariants, specdev, [extra(state) for extra in self.extras]


def integrate(flow_spec, sample_every=1):
    """Integrate flow_spec.field from x0 over [t0, t1] with a fixed step"""
    if sample_every < 1:
        raise FlowError(f"sample_every must be at least 1, got {sample_every}")
    logger = logging.getLogger(__name__)
    field = CompiledField(flow_spec.field)
    monitor = _Monitor(flow_spec)
    trajectory = Trajectory(flow_spec.field.nvars,
                            [f"I{index + 1}" for index in range(len(monitor.invariants))],
                            list(flow_spec.extra_invariants))

    steps = flow_spec.steps
    step = (flow_spec.t1 - flow_spec.t0) / steps
    state = flow_spec.x0.copy()
    trajectory.record(flow_spec.t0, state, *monitor.sample(state))

    for index in range(1, steps + 1):
        with np.errstate(over="ignore", invalid="ignore"):
            candidate = _step(field, flow_spec.method, state, step)
        time = flow_spec.t0 + index * step
        if not np.all(np.isfinite(candidate)):
            logger.error("Non-finite state at t={}".format(time))
            raise NonFiniteStateError(time, trajectory)
        state = candidate
        if index % sample_every == 0 or index == steps:
            trajectory.record(time, state, *monitor.sample(state))

    logger.debug("Integrated {} steps of {} with dt={}".format(steps, flow_spec.method.value, step))
    return trajectory


def euler_system(a, b, c, pkg):
    """Rotating body on so3, B = diag(a, b, c) x"""
    if pkg.algebra != special_orthogonal(3):
        raise FlowError(f"The Euler system lives on so3, not on {pkg.algebra.name}")
    return rotating_body_system(pkg, [[a, 0, 0], [0, b, 0], [0, 0, c]])


def squared_norm(ring):
    """x1^2 + ... + xn^2"""
    return sum((gen ** 2 for gen in ring.gens), ring.zero)


def euler_energy(ring, a, b, c):
    """a x1^2 + b x2^2 + c x3^2"""
    return sum(((gen ** 2).mul_ground(qq(value)) for gen, value in zip(ring.gens, (a, b, c))),
               ring.zero)


def convergence_study(flow_spec, refinements=3, sample_every=1):
    """Drift of the monitored invariants while halving dt `refinements` times.

    Extra invariants count towards the drift when no Casimir is logged."""
    if refinements < 2:
        raise FlowError(f"A convergence study needs at least 2 refinements, got {refinements}")
    rows = []
    current = flow_spec
    previous = None
    for _ in range(refinements + 1):
        trajectory = integrate(current, sample_every)
        drifts = [trajectory.casimir_drift()]
        drifts += [trajectory.invariant_drift(name) for name in trajectory.extra_names]
        drift = max(drifts)
        ratio = previous / drift if previous is not None and drift > 0 else None
        rows.append(ConvergenceRow(current.dt, drift, ratio))
        logging.getLogger(__name__).info(
            "dt={} drift={} ratio={}".format(current.dt, drift, ratio))
        previous = drift
        current = current.refined()
    return rows
