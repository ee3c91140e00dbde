"""Module used to build the canonical endomorphism field A = J _| lambda of a
Lie algebra and to check its structural identities exactly"""

import logging
import random
import threading
from collections import namedtuple

from sympy import ImmutableMatrix, Matrix, Rational

from lie_endo_toolbox import STATUS_FAIL, STATUS_PASS
from lie_endo_toolbox.lie_poly import ConstantOneTwoField, EndoField, PolyVectorField, \
                                      VectorBiform, contract_biform_slot, \
                                      contract_vector_into_onetwo, coordinate_ring, qq
from lie_endo_toolbox.lie_report import IdentityCheck, VerificationReport, check_labelled, \
                                        check_zero

OrbitRanks = namedtuple('OrbitRanks', ['rank_ad', 'rank_ad_sq', 'dim_ker_cap_im'])

IntegrabilityWitness = namedtuple('IntegrabilityWitness', ['x', 'v', 'w', 'value'])

STRUCTURAL_IDENTITIES = (
    'liouville_scaling',
    'liouville_kernel',
    'adjoint_invariance',
    'trace_square_killing',
    'trace_characteristic',
    'killing_skew',
    'casimir_annihilation',
    'nijenhuis_on_coordinates',
    'homomorphism',
    'constant_field_action',
)


class CanonicalPackage:
    """The algebra with its tensor lambda, Liouville field J and field A"""

    __slots__ = ('algebra', 'ring', 'lam', 'liouville', 'endo', '_power', '_traces',
                 '_lock')

    def __init__(self, algebra, ring, lam, liouville, endo):
        self.algebra = algebra
        self.ring = ring
        self.lam = lam
        self.liouville = liouville
        self.endo = endo
        self._power = None
        self._traces = []
        self._lock = threading.Lock()

    @property
    def dim(self):
        """Dimension of the algebra"""
        return self.algebra.dim

    def power_traces(self, count):
        """Tr A^k for k = 1..count, each power computed once per package"""
        with self._lock:
            while len(self._traces) < count:
                self._power = self.endo if self._power is None else self._power @ self.endo
                self._traces.append(self._power.trace())
            return tuple(self._traces[:count])

    def __repr__(self):
        return f"CanonicalPackage({self.algebra.name})"


class CasimirSet:
    """Power traces I_1..I_K of the endomorphism field"""

    def __init__(self, polys):
        self.polys = tuple(polys)

    def __getitem__(self, power):
        """I_power, 1-based as in the usual notation"""
        if not 1 <= power <= len(self.polys):
            raise IndexError(f"I_{power} not computed, available 1..{len(self.polys)}")
        return self.polys[power - 1]

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)


def build(algebra):
    """Build lambda, J and A = J _| lambda for `algebra`"""
    ring = coordinate_ring(algebra.dim)
    lam = ConstantOneTwoField(algebra, ring)
    liouville = PolyVectorField.liouville(ring)
    endo = contract_vector_into_onetwo(liouville, lam)
    logging.debug("Built canonical package of {}".format(algebra.name))
    return CanonicalPackage(algebra, ring, lam, liouville, endo)


def apply(endo, field):
    """(A X)^k = A^k_j X^j"""
    return endo.apply(field)


def constant_field(pkg, vector):
    """The constant field extending an algebra vector"""
    return PolyVectorField.constant(pkg.ring, pkg.algebra.vector(vector))


def infinitesimal_rep(pkg, vector):
    """X_v = A v~ = x^i v^j c^k_ij d_k"""
    return pkg.endo.apply(constant_field(pkg, vector))


def coordinate_fields(ring):
    """The constant fields d_1..d_n"""
    return [PolyVectorField.constant(ring, [1 if index == position else 0
                                            for position in range(ring.ngens)])
            for index in range(ring.ngens)]


def nijenhuis(endo):
    """[A, A] from its polarization on coordinate fields.

    [A, A](d_a, d_b) = 2([A d_a, A d_b] - A[A d_a, d_b] - A[d_a, A d_b]), the
    term A^2 [d_a, d_b] vanishing for coordinate fields."""
    ring = endo.ring
    fields = coordinate_fields(ring)
    images = [endo.apply(field) for field in fields]
    components = {}
    for a in range(ring.ngens):
        for b in range(a + 1, ring.ngens):
            half = (images[a].commutator(images[b])
                    - endo.apply(images[a].commutator(fields[b]))
                    - endo.apply(fields[a].commutator(images[b])))
            for i, value in enumerate(half):
                if value:
                    components[(i, a, b)] = value.mul_ground(qq(2))
    return VectorBiform(ring, components)


def verify_nijenhuis_identity(pkg):
    """Check [A, A] + 2 lambda _| A = 0 exactly"""
    report = VerificationReport(pkg.algebra.name)
    residual = nijenhuis(pkg.endo) + contract_biform_slot(pkg.lam, pkg.endo).scale(2)
    report.add(check_zero('nijenhuis_identity', '[A,A] = -2 lambda _| A', residual))
    return report


def casimirs(pkg, max_power=None):
    """I_k = Tr A^k for k = 1..max_power (default: the dimension)"""
    max_power = pkg.dim if max_power is None else max_power
    if max_power < 1:
        raise ValueError(f"At least one Casimir polynomial is needed, got {max_power}")
    return CasimirSet(pkg.power_traces(max_power))


def killing_polynomial(pkg):
    """K(J, J) = K_ab x^a x^b"""
    killing = pkg.algebra.killing_form()
    gens = pkg.ring.gens
    result = pkg.ring.zero
    for a in range(pkg.dim):
        for b in range(pkg.dim):
            if killing[a, b] != 0:
                result += (gens[a] * gens[b]).mul_ground(qq(killing[a, b]))
    return result


def characteristic_polynomial(pkg):
    """chi(J) = chi_a x^a"""
    result = pkg.ring.zero
    for gen, value in zip(pkg.ring.gens, pkg.algebra.characteristic_form()):
        if value != 0:
            result += gen.mul_ground(qq(value))
    return result


def _basis_pairs(pkg):
    return [(i, j) for i in range(pkg.dim) for j in range(i + 1, pkg.dim)]


def structural_check(pkg, identity, max_casimir=4):
    """Run one of STRUCTURAL_IDENTITIES and return its IdentityCheck"""
    algebra = pkg.algebra
    endo = pkg.endo
    basis = [algebra.basis(index) for index in range(pkg.dim)]
    rep = [infinitesimal_rep(pkg, vector) for vector in basis]

    if identity == 'liouville_scaling':
        return check_zero(identity, 'L_J A = A',
                          endo.lie_derivative(pkg.liouville) - endo)

    if identity == 'liouville_kernel':
        return check_zero(identity, 'J _| A = 0', endo.apply(pkg.liouville))

    if identity == 'adjoint_invariance':
        return check_labelled(identity, 'L_{X_v} A = 0',
                              [(f"e{index + 1}", endo.lie_derivative(field))
                               for index, field in enumerate(rep)])

    if identity == 'trace_square_killing':
        return check_zero(identity, 'Tr(A o A) = K(J,J)',
                          (endo @ endo).trace() - killing_polynomial(pkg))

    if identity == 'trace_characteristic':
        return check_zero(identity, 'Tr A = chi(J)',
                          endo.trace() - characteristic_polynomial(pkg))

    if identity == 'killing_skew':
        killing = EndoField.constant(pkg.ring, algebra.killing_form().tolist())
        return check_zero(identity, 'K(Av,w) = -K(v,Aw)',
                          killing @ endo + endo.transpose() @ killing)

    if identity == 'casimir_annihilation':
        invariants = casimirs(pkg, min(max_casimir, pkg.dim))
        return check_labelled(identity, 'A _| dI_k = 0',
                              [(f"I{power}", PolyVectorField(
                                  endo.contract_differential(invariant), pkg.ring))
                               for power, invariant in enumerate(invariants, start=1)])

    if identity == 'nijenhuis_on_coordinates':
        biform = nijenhuis(endo)
        residuals = []
        for i, j in _basis_pairs(pkg):
            expected = infinitesimal_rep(pkg, algebra.bracket(basis[i], basis[j])).scale(-2)
            residuals.append((f"e{i + 1},e{j + 1}",
                              biform.on_coordinate_fields(i, j) - expected))
        return check_labelled(identity, '[A,A](v,w) = -2 A([v,w])', residuals)

    if identity == 'homomorphism':
        residuals = []
        for i, j in _basis_pairs(pkg):
            bracket_field = infinitesimal_rep(pkg, algebra.bracket(basis[i], basis[j]))
            residuals.append((f"e{i + 1},e{j + 1}",
                              rep[i].commutator(rep[j]) - bracket_field))
        return check_labelled(identity, '[X_v,X_w] = X_[v,w]', residuals)

    if identity == 'constant_field_action':
        residuals = []
        for i in range(pkg.dim):
            for j in range(pkg.dim):
                expected = constant_field(pkg, algebra.bracket(basis[i], basis[j]))
                residuals.append((f"e{i + 1},e{j + 1}",
                                  rep[i].commutator(constant_field(pkg, basis[j])) - expected))
        return check_labelled(identity, '[X_v, w~] = [v,w]~', residuals)

    raise KeyError(f"Unknown structural identity '{identity}'")


def verify_structural(pkg, identities=STRUCTURAL_IDENTITIES, max_casimir=4):
    """Check the structural identities of A as exact polynomial identities"""
    report = VerificationReport(pkg.algebra.name)
    for identity in identities:
        report.add(structural_check(pkg, identity, max_casimir))
    return report


def _intersection_dimension(first, second):
    if not first or not second:
        return 0
    return len(first) + len(second) - Matrix.hstack(*first, *second).rank()


def orbit_ranks(pkg, point):
    """Ranks of ad_x, ad_x^2 and dim(Ker ad_x n Im ad_x) at a point"""
    point = pkg.algebra.vector(point)
    matrix = pkg.endo.evaluate(point)
    square = matrix * matrix
    rank_ad = matrix.rank()
    rank_ad_sq = square.rank()

    image = matrix.columnspace()
    if image:
        restricted = (matrix * Matrix.hstack(*image)).rank()
        combined = Matrix.hstack(matrix * Matrix.hstack(*image), square).rank()
        if restricted != rank_ad_sq or combined != rank_ad_sq:
            raise ArithmeticError(
                f"A restricted to Im ad_x does not map onto Im ad_x^2 at {point}")

    dimension = _intersection_dimension(matrix.nullspace(), image)
    return OrbitRanks(rank_ad, rank_ad_sq, dimension)


def integrability_probe(algebra, x, v, w):
    """[x, [[x, v], [x, w]]], vanishing everywhere when A is integrable on orbits"""
    x = algebra.vector(x)
    return algebra.bracket(x, algebra.bracket(algebra.bracket(x, v), algebra.bracket(x, w)))


def integrability_search(algebra, samples=50, seed=0, bound=3):
    """Evaluate random triples with p/q components and return the first nonzero one"""
    generator = random.Random(seed)
    for _ in range(samples):
        x, v, w = ([Rational(generator.randint(-bound, bound), generator.randint(1, bound))
                    for _ in range(algebra.dim)] for _ in range(3))
        value = integrability_probe(algebra, x, v, w)
        if any(component != 0 for component in value):
            return IntegrabilityWitness(tuple(x), tuple(v), tuple(w), value)
    return None


def endo_at(pkg, point):
    """A evaluated at a point, i.e. the matrix of ad_x"""
    return ImmutableMatrix(pkg.endo.evaluate(pkg.algebra.vector(point)))


def verify_integrability(algebra, samples=50, seed=0):
    """Report the first random triple on which the integrability defect is nonzero"""
    report = VerificationReport(algebra.name)
    statement = '[x, [[x,v], [x,w]]] = 0'
    witness = integrability_search(algebra, samples, seed)
    if witness is None:
        report.add(IdentityCheck('integrability', statement, STATUS_PASS, None))
    else:
        report.add(IdentityCheck('integrability', statement, STATUS_FAIL, tuple(
            f"{label} = ({', '.join(str(value) for value in vector)})"
            for label, vector in zip(('x', 'v', 'w', 'value'), witness))))
    return report
