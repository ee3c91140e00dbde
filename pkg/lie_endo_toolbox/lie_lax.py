"""Lax vector fields X_B = A B and the deformed bracket of their potentials"""

import logging
import random
from collections import namedtuple
from itertools import combinations_with_replacement

from lie_endo_toolbox.lie_endo import casimirs, constant_field, infinitesimal_rep
from lie_endo_toolbox.lie_errors import DimensionError
from lie_endo_toolbox.lie_fieldlang import format_field
from lie_endo_toolbox.lie_poly import PolyVectorField, qq
from lie_endo_toolbox.lie_report import VerificationReport, check_labelled, check_zero, unmet

LaxSystem = namedtuple('LaxSystem', ['pkg', 'potential', 'field'])

POTENTIAL_DEGREE = 2
POTENTIAL_BOUND = 3
POTENTIAL_TERMS = 3


def _check_potential(pkg, *fields):
    for field in fields:
        if field.ring != pkg.ring:
            raise DimensionError(
                f"Potential in {field.nvars} variables used with {pkg.algebra.name} "
                f"of dimension {pkg.dim}")


def lax_field(pkg, potential):
    """LaxSystem of X_B = A B, X_B^k = x^i c^k_ij B^j"""
    _check_potential(pkg, potential)
    return LaxSystem(pkg, potential, pkg.endo.apply(potential))


def pointwise_bracket(pkg, left, right):
    """[[B, C]]^m = B^i C^j c^m_ij"""
    _check_potential(pkg, left, right)
    return pkg.lam.evaluate(left, right)


def deformed_bracket(pkg, left, right):
    """{B, C} = -[[B, C]] + [X_B, C] + [B, X_C] - X_[B,C]"""
    left_field = lax_field(pkg, left).field
    right_field = lax_field(pkg, right).field
    return (-pointwise_bracket(pkg, left, right)
            + left_field.commutator(right)
            + left.commutator(right_field)
            - lax_field(pkg, left.commutator(right)).field)


def deformed_bracket_directional(pkg, left, right):
    """{B, C} = [[B, C]] + X_B C - X_C B, derivatives taken componentwise"""
    left_field = lax_field(pkg, left).field
    right_field = lax_field(pkg, right).field
    return (pointwise_bracket(pkg, left, right)
            + left_field.directional(right)
            - right_field.directional(left))


def verify_homomorphism(pkg, left, right):
    """[X_B, X_C] = X_{B,C} and agreement of both bracket formulas"""
    report = VerificationReport(pkg.algebra.name)
    bracket = deformed_bracket(pkg, left, right)
    report.add(check_zero('bracket_formulas', '{B,C} by commutators = {B,C} by derivatives',
                          bracket - deformed_bracket_directional(pkg, left, right)))
    commutator = lax_field(pkg, left).field.commutator(lax_field(pkg, right).field)
    report.add(check_zero('lax_homomorphism', '[X_B,X_C] = X_{B,C}',
                          commutator - lax_field(pkg, bracket).field))
    return report


def verify_antisymmetry(pkg, left, right):
    """{B, C} + {C, B} = 0"""
    report = VerificationReport(pkg.algebra.name)
    report.add(check_zero('deformed_antisymmetry', '{B,C} + {C,B} = 0',
                          deformed_bracket(pkg, left, right)
                          + deformed_bracket(pkg, right, left)))
    return report


def verify_jacobi_deformed(pkg, first, second, third):
    """Cyclic sum {B,{C,D}} + {C,{D,B}} + {D,{B,C}} = 0"""
    report = VerificationReport(pkg.algebra.name)
    total = PolyVectorField.zero(pkg.ring)
    for one, two, three in ((first, second, third), (second, third, first),
                            (third, first, second)):
        total += deformed_bracket(pkg, one, deformed_bracket(pkg, two, three))
    report.add(check_zero('deformed_jacobi', '{B,{C,D}} + {C,{D,B}} + {D,{B,C}} = 0', total))
    return report


def symmetry_closure(pkg, symmetry, left, right):
    """If B and C are potentials of symmetries of X, so is {B, C}"""
    report = VerificationReport(pkg.algebra.name)
    statement = '[X_B,X] = [X_C,X] = 0 implies [X_{B,C},X] = 0'
    hypothesis = [(name, lax_field(pkg, potential).field.commutator(symmetry))
                  for name, potential in (('B', left), ('C', right))]
    failed = check_labelled('symmetry_closure', statement, hypothesis)
    if failed.witness:
        logging.info("Symmetry hypothesis not satisfied on {}".format(pkg.algebra.name))
        report.add(unmet('symmetry_closure', statement, failed.witness))
        return report
    bracket_field = lax_field(pkg, deformed_bracket(pkg, left, right)).field
    report.add(check_zero('symmetry_closure', statement, bracket_field.commutator(symmetry)))
    return report


def verify_conservation(pkg, potential, max_casimir=None):
    """X_B I_k = 0 for k = 1..max_casimir"""
    report = VerificationReport(pkg.algebra.name)
    field = lax_field(pkg, potential).field
    invariants = casimirs(pkg, max_casimir)
    report.add(check_labelled('casimir_conservation', 'X_B I_k = 0',
                              [(f"I{power}", field.derivation(invariant))
                               for power, invariant in enumerate(invariants, start=1)]))
    return report


def verify_lax_equation(pkg, potential):
    """X_B(x) = [[x, B(x)]] as a polynomial identity"""
    report = VerificationReport(pkg.algebra.name)
    residual = lax_field(pkg, potential).field - pointwise_bracket(pkg, pkg.liouville, potential)
    report.add(check_zero('lax_equation', 'dx/dt = [x, B(x)]', residual))
    return report


def verify_potential_formulas(pkg, v, w):
    """Brackets of constant potentials and of infinitesimal generators"""
    report = VerificationReport(pkg.algebra.name)
    algebra = pkg.algebra
    bracket_vector = algebra.bracket(v, w)
    constant_v, constant_w = constant_field(pkg, v), constant_field(pkg, w)
    rep_v, rep_w = infinitesimal_rep(pkg, v), infinitesimal_rep(pkg, w)
    rep_bracket = infinitesimal_rep(pkg, bracket_vector)

    report.add(check_zero('constant_potentials', '{v~,w~} = [v,w]~',
                          deformed_bracket(pkg, constant_v, constant_w)
                          - constant_field(pkg, bracket_vector)))
    report.add(check_zero('generator_constant', '{X_v,w~} = X_[v,w]',
                          deformed_bracket(pkg, rep_v, constant_w) - rep_bracket))
    expected = lax_field(pkg, rep_bracket).field - pointwise_bracket(pkg, rep_v, rep_w)
    report.add(check_zero('generator_pair', '{X_v,X_w} = X_{A[v,w]} - [[X_v,X_w]]',
                          deformed_bracket(pkg, rep_v, rep_w) - expected))
    return report


def rotating_body_system(pkg, matrix):
    """LaxSystem of the potential B = R x for a square rational matrix R"""
    size = pkg.dim
    rows = [list(row) for row in (matrix.tolist() if hasattr(matrix, 'tolist') else matrix)]
    if len(rows) != size or any(len(row) != size for row in rows):
        raise DimensionError(f"Rotating body matrix must be {size}x{size}")
    gens = pkg.ring.gens
    components = []
    for row in rows:
        component = pkg.ring.zero
        for gen, value in zip(gens, row):
            if value != 0:
                component += gen.mul_ground(qq(value))
        components.append(component)
    return lax_field(pkg, PolyVectorField(components, pkg.ring))


def _monomials(nvars, degree):
    monomials = []
    for total in range(degree + 1):
        for indices in combinations_with_replacement(range(nvars), total):
            monomials.append(tuple(indices.count(index) for index in range(nvars)))
    return monomials


def random_potential(ring, generator, degree=POTENTIAL_DEGREE, bound=POTENTIAL_BOUND,
                     terms=POTENTIAL_TERMS):
    """Sparse potential with small nonzero integer coefficients and bounded degree"""
    monomials = _monomials(ring.ngens, degree)
    components = []
    for _ in range(ring.ngens):
        component = ring.zero
        for monom in generator.sample(monomials, min(terms, len(monomials))):
            coefficient = generator.choice([value for value in range(-bound, bound + 1) if value])
            component += ring({monom: qq(coefficient)})
        components.append(component)
    return PolyVectorField(components, ring)


def random_potentials(pkg, count, seed=0, **kwargs):
    """`count` reproducible random potentials for a package"""
    generator = random.Random(seed)
    return [random_potential(pkg.ring, generator, **kwargs) for _ in range(count)]


def describe(system):
    """Printable summary of a Lax system"""
    return f"B = {format_field(system.potential)}\nX_B = {format_field(system.field)}"
