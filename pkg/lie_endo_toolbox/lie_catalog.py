"""Built-in Lie algebras"""

import logging
import re
from itertools import combinations

from sympy import zeros

from lie_endo_toolbox.__catalog__ import BASIS_CONVENTIONS, CATALOG_ABELIAN, \
                                         CATALOG_HEISENBERG3, CATALOG_SL2, CATALOG_SO, \
                                         CATALOG_SOLVABLE2, CATALOG_STRICT_UPPER, \
                                         FAMILIES, FIXED_ALGEBRAS, PARAMETER_RANGES
from lie_endo_toolbox.lie_algebra import LieAlgebra
from lie_endo_toolbox.lie_errors import CatalogError

FAMILY_NAME = re.compile(r'^(' + '|'.join(FAMILIES) + r')(\d+)$')


def _elementary(size, row, column):
    matrix = zeros(size, size)
    matrix[row, column] = 1
    return matrix


def _from_matrix_basis(name, basis, coordinates):
    """Structure constants of a matrix Lie algebra spanned by `basis`.

    `coordinates(matrix)` returns the components of a matrix of the span."""
    structure = {}
    for i, j in combinations(range(len(basis)), 2):
        commutator = basis[i] * basis[j] - basis[j] * basis[i]
        for k, value in enumerate(coordinates(commutator)):
            if value != 0:
                structure[(i + 1, j + 1, k + 1)] = value
    return LieAlgebra(name, len(basis), structure)


def abelian(size):
    """Abelian algebra of dimension `size`"""
    return LieAlgebra(f"{CATALOG_ABELIAN}{size}", size, {})


def solvable2():
    """Two-dimensional solvable algebra [e1, e2] = e2"""
    return LieAlgebra(CATALOG_SOLVABLE2, 2, {(1, 2, 2): 1})


def heisenberg3():
    """Heisenberg algebra [e1, e2] = e3"""
    return LieAlgebra(CATALOG_HEISENBERG3, 3, {(1, 2, 3): 1})


def sl2():
    """sl(2) in the basis (h, e, f)"""
    return LieAlgebra(CATALOG_SL2, 3, {(1, 2, 2): 2, (1, 3, 3): -2, (2, 3, 1): 1})


def special_orthogonal(size):
    """so(size); so3 uses the cross-product basis [ei, ej] = eps_ijk ek"""
    name = f"{CATALOG_SO}{size}"
    if size == 3:
        return LieAlgebra(name, 3, {(1, 2, 3): 1, (2, 3, 1): 1, (1, 3, 2): -1})

    pairs = list(combinations(range(size), 2))
    basis = [_elementary(size, i, j) - _elementary(size, j, i) for i, j in pairs]
    return _from_matrix_basis(name, basis, lambda matrix: [matrix[i, j] for i, j in pairs])


def strict_upper_triangular(size):
    """Nilpotent algebra of strictly upper-triangular size x size matrices"""
    pairs = list(combinations(range(size), 2))
    basis = [_elementary(size, i, j) for i, j in pairs]
    return _from_matrix_basis(f"{CATALOG_STRICT_UPPER}{size}", basis,
                              lambda matrix: [matrix[i, j] for i, j in pairs])


BUILDERS = {
    CATALOG_ABELIAN: abelian,
    CATALOG_SOLVABLE2: solvable2,
    CATALOG_HEISENBERG3: heisenberg3,
    CATALOG_SO: special_orthogonal,
    CATALOG_SL2: sl2,
    CATALOG_STRICT_UPPER: strict_upper_triangular,
}


def split_name(name):
    """Split a catalog name such as "so5" into ("so", 5)"""
    if name in FIXED_ALGEBRAS or name in FAMILIES:
        return name, None
    match = FAMILY_NAME.match(name)
    if match is None:
        raise CatalogError(f"Unknown algebra '{name}'")
    return match.group(1), int(match.group(2))


def catalog(name, param=None):
    """Return a built-in algebra, e.g. catalog("so", 3) or catalog("so3")"""
    family, embedded = split_name(name)
    if embedded is not None:
        if param is not None and param != embedded:
            raise CatalogError(f"Conflicting parameters for '{name}': {param}")
        param = embedded

    if family in FIXED_ALGEBRAS:
        if param is not None:
            raise CatalogError(f"'{family}' takes no parameter")
        algebra = BUILDERS[family]()
    else:
        if param is None:
            raise CatalogError(f"'{family}' needs a size parameter")
        low, high = PARAMETER_RANGES[family]
        if not isinstance(param, int) or not low <= param <= high:
            raise CatalogError(f"'{family}' supports sizes {low} to {high}, got {param}")
        algebra = BUILDERS[family](param)

    logging.debug("Built catalog algebra {}".format(algebra.name))
    return algebra


def catalog_entries():
    """Rows (name, dimension, basis convention) describing the catalog"""
    rows = []
    for family in FIXED_ALGEBRAS:
        rows.append((family, BUILDERS[family]().dim, BASIS_CONVENTIONS[family]))
    for family in FAMILIES:
        low, high = PARAMETER_RANGES[family]
        rows.append((f"{family} n≤{high}", None,
                     f"n from {low}; {BASIS_CONVENTIONS[family]}"))
    rows.append((f"{CATALOG_SO}3", 3, BASIS_CONVENTIONS[CATALOG_SO]))
    return sorted(rows, key=lambda row: row[0])

