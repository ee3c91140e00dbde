"""Lie-Poisson structure of the dual space.

Coordinates x_k of the dual are identified with x1..xn, so the bivector
reads Omega^ij = x_k c^k_ij and X_H g = {H, g}."""

import logging

from lie_endo_toolbox.lie_endo import build
from lie_endo_toolbox.lie_errors import DimensionError
from lie_endo_toolbox.lie_lax import rotating_body_system
from lie_endo_toolbox.lie_poly import PolyVectorField, partial, qq
from lie_endo_toolbox.lie_report import VerificationReport, check_labelled, check_zero


class PoissonPackage:
    """Kirillov-Poisson bivector of an algebra, stored for i < j"""

    def __init__(self, pkg):
        self.pkg = pkg
        self.algebra = pkg.algebra
        self.ring = pkg.ring
        self.logger = logging.getLogger(self.__class__.__name__)
        gens = self.ring.gens
        self.bivector = {}
        for (i, j), terms in pkg.lam.products().items():
            if i > j:
                continue
            value = self.ring.zero
            for k, constant in terms:
                value += gens[k].mul_ground(constant)
            if value:
                self.bivector[(i, j)] = value
        self.logger.debug("Poisson bivector of {} has {} entries".format(
            self.algebra.name, len(self.bivector)))

    @classmethod
    def from_algebra(cls, algebra):
        """Build the package of an algebra"""
        return cls(build(algebra))

    def entry(self, i, j):
        """Omega^ij with antisymmetry"""
        if i == j:
            return self.ring.zero
        if i > j:
            return -self.bivector.get((j, i), self.ring.zero)
        return self.bivector.get((i, j), self.ring.zero)

    def _check(self, *functions):
        for function in functions:
            if function.ring != self.ring:
                raise DimensionError(
                    f"Function in {function.ring.ngens} variables used with "
                    f"{self.algebra.name} of dimension {self.algebra.dim}")


def poisson_bracket(poisson, first, second):
    """{f, g} = x_k c^k_ij d_i f d_j g"""
    poisson._check(first, second)  # pylint: disable=protected-access
    result = poisson.ring.zero
    for (i, j), value in poisson.bivector.items():
        cross = partial(first, i) * partial(second, j) - partial(first, j) * partial(second, i)
        if cross:
            result += value * cross
    return result


def hamiltonian_field(poisson, hamiltonian):
    """X_H^j = x_k c^k_ij d_i H, so that X_H g = {H, g}"""
    poisson._check(hamiltonian)  # pylint: disable=protected-access
    size = poisson.algebra.dim
    gradient = [partial(hamiltonian, index) for index in range(size)]
    components = []
    for j in range(size):
        component = poisson.ring.zero
        for i in range(size):
            if gradient[i]:
                entry = poisson.entry(i, j)
                if entry:
                    component += entry * gradient[i]
        components.append(component)
    return PolyVectorField(components, poisson.ring)


def verify_poisson_jacobi(poisson, first, second, third):
    """{f,{g,h}} + {g,{h,f}} + {h,{f,g}} = 0"""
    report = VerificationReport(poisson.algebra.name)
    total = (poisson_bracket(poisson, first, poisson_bracket(poisson, second, third))
             + poisson_bracket(poisson, second, poisson_bracket(poisson, third, first))
             + poisson_bracket(poisson, third, poisson_bracket(poisson, first, second)))
    report.add(check_zero('poisson_jacobi', '{f,{g,h}} + {g,{h,f}} + {h,{f,g}} = 0', total))
    return report


def verify_poisson_leibniz(poisson, first, second, third):
    """{f, gh} = {f, g} h + g {f, h} and X_f g = {f, g}"""
    report = VerificationReport(poisson.algebra.name)
    residual = (poisson_bracket(poisson, first, second * third)
                - poisson_bracket(poisson, first, second) * third
                - second * poisson_bracket(poisson, first, third))
    report.add(check_zero('poisson_leibniz', '{f,gh} = {f,g}h + g{f,h}', residual))
    report.add(check_zero('hamiltonian_derivation', 'X_f g = {f,g}',
                          hamiltonian_field(poisson, first).derivation(second)
                          - poisson_bracket(poisson, first, second)))
    return report


def is_poisson_casimir(poisson, function, samples):
    """Report whether `function` Poisson-commutes with every sample"""
    report = VerificationReport(poisson.algebra.name)
    report.add(check_labelled('poisson_casimir', '{f, g} = 0',
                              [(f"g{index + 1}", poisson_bracket(poisson, function, sample))
                               for index, sample in enumerate(samples)]))
    return report


def euler_hamiltonian(poisson, a, b, c):
    """H = (a x1^2 + b x2^2 + c x3^2) / 2"""
    gens = poisson.ring.gens
    half = qq('1/2')
    return sum(((gen ** 2).mul_ground(qq(value) * half)
                for gen, value in zip(gens, (a, b, c))), poisson.ring.zero)


def verify_lax_hamiltonian_duality(poisson, a, b, c):
    """Euler Lax field of B = diag(a,b,c) x equals the Hamiltonian field of the energy"""
    if poisson.algebra.dim != 3:
        raise DimensionError("The rotating body duality is stated on a 3-dimensional algebra")
    report = VerificationReport(poisson.algebra.name)
    system = rotating_body_system(poisson.pkg, [[a, 0, 0], [0, b, 0], [0, 0, c]])
    report.add(check_zero('lax_hamiltonian_duality', 'X_{Rx} = X_H, H = (ax1^2+bx2^2+cx3^2)/2',
                          system.field - hamiltonian_field(poisson,
                                                           euler_hamiltonian(poisson, a, b, c))))
    return report
