"""Test file for lie_flow.py"""

import io
from fractions import Fraction

import numpy as np
import pytest  # pylint: disable=import-error

from lie_endo_toolbox.lie_catalog import catalog
from lie_endo_toolbox.lie_endo import build
from lie_endo_toolbox.lie_errors import FlowError, NonFiniteStateError
from lie_endo_toolbox.lie_flow import CompiledEndo, CompiledField, FlowMethod, FlowSpec, \
                                      characteristic_coefficients, convergence_study, \
                                      euler_energy, euler_system, integrate, \
                                      spectral_coefficients, squared_norm
from lie_endo_toolbox.lie_lax import lax_field, random_potentials
from lie_endo_toolbox.lie_poly import PolyVectorField, coordinate_ring


def euler_spec(a=1, b=2, c=3, **kwargs):
    """Rotating body on so3 started from (1, 1, 1)"""
    pkg = build(catalog("so3"))
    return FlowSpec(euler_system(a, b, c, pkg), (1, 1, 1), **kwargs)


class TestCompiled:
    """Tests for the float evaluators"""

    @staticmethod
    def test_field():
        """The compiled Euler field matches its exact value"""
        system = euler_system(1, 2, 3, build(catalog("so3")))
        compiled = CompiledField(system.field)
        point = (Fraction(1, 2), -1, 2)
        exact = [float(value) for value in system.field.evaluate(point)]
        assert np.allclose(compiled(np.array([0.5, -1.0, 2.0])), exact)

    @staticmethod
    def test_endo():
        """The compiled A_x is the matrix of ad_x"""
        pkg = build(catalog("so3"))
        compiled = CompiledEndo(pkg.endo)
        matrix = compiled(np.array([0.0, 0.0, 1.0]))
        assert np.allclose(matrix, [[0, -1, 0], [1, 0, 0], [0, 0, 0]])

    @staticmethod
    def test_characteristic_coefficients():
        """diag(1, 2) has characteristic polynomial t^2 - 3t + 2"""
        assert np.allclose(characteristic_coefficients([3.0, 5.0]), [-3.0, 2.0])
        assert np.allclose(spectral_coefficients(np.diag([1.0, 2.0])), [-3.0, 2.0])


class TestFlowSpec:
    """Tests for the initial value problem"""

    @staticmethod
    def test_invalid_specs():
        """Bad steps, times, methods and states raise FlowError"""
        for kwargs in ({'dt': 0}, {'dt': -1e-3}, {'t0': 1.0, 't1': 1.0},
                       {'method': 'midpoint'}):
            with pytest.raises(FlowError):
                euler_spec(**kwargs)
        system = euler_system(1, 2, 3, build(catalog("so3")))
        with pytest.raises(FlowError):
            FlowSpec(system, (1, 1))
        with pytest.raises(FlowError):
            FlowSpec(system, (1.0, float('nan'), 1.0))
        with pytest.raises(FlowError):
            FlowSpec("x1", (1,))

    @staticmethod
    def test_euler_system_needs_so3():
        """The rotating body lives on so3"""
        with pytest.raises(FlowError):
            euler_system(1, 2, 3, build(catalog("sl2")))

    @staticmethod
    def test_steps_land_on_end_time():
        """The step count rounds (t1 - t0) / dt"""
        flow_spec = euler_spec(t1=1.0, dt=0.3)
        assert flow_spec.steps == 3
        assert flow_spec.method == FlowMethod.RK4
        assert flow_spec.refined().dt == pytest.approx(0.15)


class TestIntegrate:
    """Tests for fixed-step integration"""

    @staticmethod
    def test_casimirs_are_kept():
        """RK4 keeps I_k and the spectrum of A within 1e-8"""
        trajectory = integrate(euler_spec(t1=10.0, dt=1e-3), sample_every=100)
        assert len(trajectory) == 101
        assert trajectory.invariant_names == ["I1", "I2", "I3"]
        assert trajectory.casimir_drift() < 1e-8
        assert trajectory.spectral_deviation < 1e-7
        assert trajectory.times[-1] == pytest.approx(10.0)

    @staticmethod
    def test_energy_is_kept():
        """The rotating body energy is an extra invariant"""
        ring = coordinate_ring(3)
        flow_spec = euler_spec(t1=10.0, dt=1e-3,
                          extra_invariants={'energy': euler_energy(ring, 1, 2, 3),
                                            '|x|^2': squared_norm(ring)})
        trajectory = integrate(flow_spec, sample_every=100)
        assert trajectory.invariant_drift('energy') < 1e-8
        assert trajectory.invariant_drift('|x|^2') < 1e-8

    @staticmethod
    def test_isotropic_body_is_at_rest():
        """a = b = c gives the zero field"""
        trajectory = integrate(euler_spec(2, 2, 2, t1=1.0, dt=0.1))
        assert all(np.array_equal(state, [1.0, 1.0, 1.0]) for state in trajectory.states)

    @staticmethod
    def test_constant_states():
        """B = 0 and abelian algebras do not move"""
        pkg = build(catalog("so3"))
        zero = PolyVectorField.zero(pkg.ring)
        trajectory = integrate(FlowSpec(lax_field(pkg, zero), (1, 2, 3), t1=1.0, dt=0.1))
        assert np.array_equal(trajectory.states[-1], [1.0, 2.0, 3.0])

        pkg = build(catalog("abelian", 2))
        potential = random_potentials(pkg, 1, seed=0)[0]
        trajectory = integrate(FlowSpec(lax_field(pkg, potential), (1, -1), t1=1.0, dt=0.1))
        assert np.array_equal(trajectory.states[-1], [1.0, -1.0])
        assert trajectory.casimir_drift() == 0.0

    @staticmethod
    def test_blow_up():
        """x' = x^2 from 1 leaves the floats before t = 2"""
        ring = coordinate_ring(1)
        field = PolyVectorField([ring.gens[0] ** 2], ring)
        flow_spec = FlowSpec(field, (1,), t1=2.0, dt=0.01, method='euler')
        with pytest.raises(NonFiniteStateError) as error:
            integrate(flow_spec)
        assert error.value.time < 2.0
        assert len(error.value.trajectory) >= 1

    @staticmethod
    def test_invalid_sampling():
        """sample_every must be positive"""
        with pytest.raises(FlowError):
            integrate(euler_spec(), sample_every=0)

    @staticmethod
    def test_csv():
        """Header then rows with 17 significant digits"""
        trajectory = integrate(euler_spec(t1=0.01, dt=1e-3), sample_every=10)
        stream = io.StringIO()
        trajectory.write_csv(stream)
        lines = stream.getvalue().splitlines()
        assert lines[0] == "t,x1,x2,x3,I1,I2,I3,specdev"
        assert lines[1] == "0,1,1,1,0,-6,0,0"
        assert len(lines) == 3


class TestConvergence:
    """Tests for the drift under step refinement"""

    @staticmethod
    def test_rk4_is_fourth_order():
        """Halving dt divides the RK4 drift by about 16"""
        rows = convergence_study(euler_spec(t1=5.0, dt=0.02), refinements=3)
        assert len(rows) == 4
        assert rows[0].ratio is None
        for row in rows[1:]:
            assert 8 <= row.ratio <= 32

    @staticmethod
    def test_euler_is_first_order():
        """Halving dt halves the forward Euler drift"""
        rows = convergence_study(euler_spec(t1=1.0, dt=1e-3, method='euler'), refinements=2)
        for row in rows[1:]:
            assert 1.8 <= row.ratio <= 2.2

    @staticmethod
    def test_needs_two_refinements():
        """A single refinement gives no order estimate"""
        with pytest.raises(FlowError):
            convergence_study(euler_spec(), refinements=1)
