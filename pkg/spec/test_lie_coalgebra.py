"""Test file for lie_coalgebra.py"""

import pytest  # pylint: disable=import-error

from lie_endo_toolbox.__catalog__ import CATALOG_FIXTURES
from lie_endo_toolbox.lie_catalog import catalog
from lie_endo_toolbox.lie_coalgebra import PoissonPackage, euler_hamiltonian, \
                                          hamiltonian_field, is_poisson_casimir, \
                                          poisson_bracket, verify_lax_hamiltonian_duality, \
                                          verify_poisson_jacobi, verify_poisson_leibniz
from lie_endo_toolbox.lie_endo import build
from lie_endo_toolbox.lie_errors import DimensionError
from lie_endo_toolbox.lie_lax import random_potentials
from lie_endo_toolbox.lie_poly import coordinate_ring


def random_functions(poisson, count, seed):
    """Reproducible polynomials taken from the components of random potentials"""
    functions = [component for potential in random_potentials(poisson.pkg, count, seed=seed)
                 for component in potential]
    return functions[:count]


class TestPoissonBracket:
    """Tests for the Lie-Poisson bracket"""

    @staticmethod
    def test_so3_coordinates():
        """{x1, x2} = x3 and cyclic"""
        poisson = PoissonPackage.from_algebra(catalog("so3"))
        x1, x2, x3 = poisson.ring.gens
        assert poisson_bracket(poisson, x1, x2) == x3
        assert poisson_bracket(poisson, x2, x3) == x1
        assert poisson_bracket(poisson, x3, x1) == x2
        assert poisson.entry(1, 0) == -x3
        assert poisson.entry(2, 2) == poisson.ring.zero

    @staticmethod
    def test_self_bracket():
        """{f, f} = 0"""
        poisson = PoissonPackage.from_algebra(catalog("sl2"))
        for function in random_functions(poisson, 5, seed=0):
            assert not poisson_bracket(poisson, function, function)

    @staticmethod
    def test_abelian():
        """The bracket of an abelian algebra vanishes"""
        poisson = PoissonPackage.from_algebra(catalog("abelian", 3))
        x1, x2, _ = poisson.ring.gens
        assert poisson.bivector == {}
        assert not poisson_bracket(poisson, x1 ** 2, x1 * x2)

    @staticmethod
    def test_dimension_mismatch():
        """Functions of another ring are rejected"""
        poisson = PoissonPackage.from_algebra(catalog("so3"))
        with pytest.raises(DimensionError):
            poisson_bracket(poisson, coordinate_ring(2).gens[0], poisson.ring.gens[0])

    @staticmethod
    def test_jacobi_and_leibniz():
        """Jacobi and Leibniz identities on every fixture"""
        for family, param in CATALOG_FIXTURES:
            poisson = PoissonPackage(build(catalog(family, param)))
            first, second, third = random_functions(poisson, 3, seed=1)
            assert verify_poisson_jacobi(poisson, first, second, third).passed
            assert verify_poisson_leibniz(poisson, first, second, third).passed


class TestHamiltonian:
    """Tests for Hamiltonian fields and Casimirs"""

    @staticmethod
    def test_norm_is_casimir():
        """|x|^2 Poisson-commutes with every sample on so3"""
        poisson = PoissonPackage.from_algebra(catalog("so3"))
        x1, x2, x3 = poisson.ring.gens
        samples = random_functions(poisson, 20, seed=2)
        assert len(samples) == 20
        assert is_poisson_casimir(poisson, x1 ** 2 + x2 ** 2 + x3 ** 2, samples).passed
        assert not is_poisson_casimir(poisson, x1, [x2]).passed

    @staticmethod
    def test_constant_hamiltonian():
        """A constant Hamiltonian has a zero field"""
        poisson = PoissonPackage.from_algebra(catalog("so3"))
        assert hamiltonian_field(poisson, poisson.ring(5)).is_zero()

    @staticmethod
    def test_rotating_body_duality():
        """The Euler Lax field is the Hamiltonian field of the energy"""
        poisson = PoissonPackage.from_algebra(catalog("so3"))
        assert verify_lax_hamiltonian_duality(poisson, 1, 2, 3).passed
        assert verify_lax_hamiltonian_duality(poisson, 2, 2, 5).passed
        x1, x2, x3 = poisson.ring.gens
        energy = euler_hamiltonian(poisson, 1, 2, 3)
        assert energy * 2 == x1 ** 2 + 2 * x2 ** 2 + 3 * x3 ** 2

    @staticmethod
    def test_duality_needs_three_dimensions():
        """The rotating body is stated on a 3-dimensional algebra"""
        poisson = PoissonPackage.from_algebra(catalog("solvable2"))
        with pytest.raises(DimensionError):
            verify_lax_hamiltonian_duality(poisson, 1, 2, 3)
