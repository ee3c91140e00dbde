"""Verification reports listing one outcome per checked identity"""

import json
import logging
from collections import namedtuple

from sympy import MatrixBase
from sympy.polys.rings import PolyElement

from lie_endo_toolbox import STATUS_FAIL, STATUS_PASS, STATUS_UNMET
from lie_endo_toolbox.lie_fieldlang import format_poly
from lie_endo_toolbox.lie_poly import EndoField, PolyVectorField, VectorBiform

IdentityCheck = namedtuple('IdentityCheck', ['identity', 'statement', 'status', 'witness'])

# Named result behind each identity
REFERENCES = {
    'jacobi': "Jacobi identity of the structure constants",
    'nijenhuis_identity': "Nijenhuis torsion of A: [A,A] = -2 lambda _| A",
    'nijenhuis_on_coordinates': "Nijenhuis torsion on pairs of constant fields",
    'liouville_scaling': "A is homogeneous of degree one along J",
    'liouville_kernel': "J lies in the kernel of A",
    'adjoint_invariance': "invariance of A under the adjoint action",
    'trace_square_killing': "Killing form as the trace of A squared",
    'trace_characteristic': "trace of A and the characteristic form",
    'killing_skew': "A is skew for the Killing form",
    'casimir_annihilation': "A annihilates the differentials of the Casimirs",
    'homomorphism': "X_v represents L by vector fields",
    'constant_field_action': "X_v acts on constant fields through ad",
    'integrability': "integrability of the image distribution of A",
    'bracket_formulas': "commutator and derivative forms of the deformed bracket",
    'lax_homomorphism': "Lax fields represent the deformed bracket",
    'deformed_antisymmetry': "antisymmetry of the deformed bracket",
    'deformed_jacobi': "Jacobi identity of the deformed bracket",
    'symmetry_closure': "closure of Lax symmetries under the deformed bracket",
    'casimir_conservation': "Lax fields preserve the traces of powers of A",
    'lax_equation': "Lax equation dA/dt = [A, B]",
    'constant_potentials': "deformed bracket of constant potentials",
    'generator_constant': "deformed bracket of a generator and a constant potential",
    'generator_pair': "deformed bracket of two generators",
    'poisson_jacobi': "Jacobi identity of the Lie-Poisson bracket",
    'poisson_leibniz': "Leibniz rule of the Lie-Poisson bracket",
    'hamiltonian_derivation': "Hamiltonian fields act as derivations",
    'poisson_casimir': "traces of powers of A are Lie-Poisson Casimirs",
    'lax_hamiltonian_duality': "rotating body as Lax and Hamiltonian field",
}


def residual_witness(residual):
    """List the nonzero components of a residual, 1-based"""
    if isinstance(residual, PolyElement):
        return [format_poly(residual)] if residual else []
    if isinstance(residual, PolyVectorField):
        return [f"d{index + 1}: {format_poly(component)}"
                for index, component in enumerate(residual) if component]
    if isinstance(residual, EndoField):
        return [f"({row + 1},{column + 1}): {format_poly(entry)}"
                for row, entries in enumerate(residual.entries)
                for column, entry in enumerate(entries) if entry]
    if isinstance(residual, VectorBiform):
        return [f"d{i + 1} dx{a + 1}^dx{b + 1}: {format_poly(value)}"
                for (i, a, b), value in residual.items()]
    if isinstance(residual, MatrixBase):
        return [f"({row + 1},{column + 1}): {residual[row, column]}"
                for row in range(residual.rows) for column in range(residual.cols)
                if residual[row, column] != 0]
    if isinstance(residual, dict):
        return [f"{key}: {value}" for key, value in sorted(residual.items()) if value != 0]
    if isinstance(residual, (tuple, list)):
        return [f"{index + 1}: {value}" for index, value in enumerate(residual) if value != 0]
    return [] if residual == 0 else [str(residual)]


def check_zero(identity, statement, residual):
    """IdentityCheck passing when `residual` vanishes exactly"""
    witness = residual_witness(residual)
    status = STATUS_FAIL if witness else STATUS_PASS
    return IdentityCheck(identity, statement, status, tuple(witness) or None)


def check_labelled(identity, statement, residuals):
    """IdentityCheck over (label, residual) pairs, passing when all vanish"""
    witness = [f"{label}: {item}" for label, residual in residuals
               for item in residual_witness(residual)]
    status = STATUS_FAIL if witness else STATUS_PASS
    return IdentityCheck(identity, statement, status, tuple(witness) or None)


def unmet(identity, statement, witness):
    """IdentityCheck for an identity whose hypothesis does not hold"""
    return IdentityCheck(identity, statement, STATUS_UNMET, tuple(witness) or None)


class VerificationReport:
    """Ordered collection of identity checks about one subject"""

    def __init__(self, subject, checks=()):
        self.subject = subject
        self.checks = list(checks)
        self.logger = logging.getLogger(self.__class__.__name__)

    def add(self, check):
        """Append a check and log its outcome"""
        if check.status == STATUS_PASS:
            self.logger.debug("{} {}: {}".format(self.subject, check.identity, check.status))
        else:
            self.logger.error("{} {}: {}".format(self.subject, check.identity, check.status))
        self.checks.append(check)
        return check

    def extend(self, report):
        """Append the checks of another report, already logged by it"""
        self.checks.extend(report.checks)
        return self

    @property
    def passed(self):
        """True when every check passed"""
        return all(check.status == STATUS_PASS for check in self.checks)

    def status_of(self, identity):
        """Status of the named identity"""
        for check in self.checks:
            if check.identity == identity:
                return check.status
        raise KeyError(identity)

    def failures(self):
        """Checks that did not pass"""
        return [check for check in self.checks if check.status != STATUS_PASS]

    def __iter__(self):
        return iter(self.checks)

    def __len__(self):
        return len(self.checks)

    def to_dict(self):
        """Serializable form of the report"""
        return {
            'subject': self.subject,
            'passed': self.passed,
            'checks': [{
                'identity': check.identity,
                'paper_ref': REFERENCES.get(check.identity),
                'statement': check.statement,
                'status': check.status,
                'witness': list(check.witness) if check.witness else None,
            } for check in self.checks],
        }

    def to_json(self):
        """JSON text of the report with stable key order"""
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)
