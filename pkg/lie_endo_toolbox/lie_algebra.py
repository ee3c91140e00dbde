"""Module used to describe a finite-dimensional Lie algebra by its structure
constants.

Indices of the python API are 0-based. Algebra documents, spreadsheets and
printed output use 1-based indices."""

import json
import logging
import re
from fractions import Fraction
from functools import cached_property
from itertools import combinations

from sympy import ImmutableMatrix, Integer, Rational

from lie_endo_toolbox.lie_errors import AlgebraFormatError, DimensionError, JacobiError

RATIONAL_LITERAL = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$')

DOCUMENT_KEYS = ('name', 'dim', 'structure')
ENTRY_KEYS = ('i', 'j', 'k', 'c')


def parse_rational(text):
    """Parse a rational literal "p" or "p/q" into a sympy Rational"""
    match = RATIONAL_LITERAL.match(text) if isinstance(text, str) else None
    if match is None:
        raise ValueError(f"Invalid rational literal {text!r}")
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise ValueError(f"Zero denominator in rational literal {text!r}")
    return Rational(int(numerator), int(denominator or 1))


def to_rational(value):
    """Convert ints, Fractions, literals and sympy numbers to a Rational"""
    if isinstance(value, Rational):
        return value
    if isinstance(value, bool):
        raise TypeError("Booleans are not rational numbers")
    if isinstance(value, int):
        return Integer(value)
    if isinstance(value, Fraction):
        return Rational(value.numerator, value.denominator)
    if isinstance(value, str):
        return parse_rational(value)
    if hasattr(value, 'numerator') and hasattr(value, 'denominator'):
        return Rational(int(value.numerator), int(value.denominator))
    raise TypeError(f"Cannot convert {value!r} to an exact rational")


class LieAlgebra:
    """A Lie algebra given by its structure constants c^k_ij.

    `structure` maps 1-based keys (i, j, k) with i < j to rationals, absent
    keys being zero. The Jacobi identity is checked at construction unless
    `validate=False`, in which case `validate()` has to be called explicitly."""

    def __init__(self, name, dim, structure, validate=True):
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
            raise AlgebraFormatError(f"Dimension must be a positive integer, got {dim!r}")

        self.logger = logging.getLogger(self.__class__.__name__)
        self._name = name
        self._dim = dim
        self._structure = {}

        for key, value in structure.items():
            i, j, k = key
            if not all(1 <= index <= dim for index in key):
                raise AlgebraFormatError(f"Entry {key} out of range for dim {dim}")
            if i >= j:
                raise AlgebraFormatError(f"Entry {key} is not canonical, expected i < j")
            value = to_rational(value)
            if value != 0:
                self._structure[(i, j, k)] = value

        products = {}
        for (i, j, k), value in sorted(self._structure.items()):
            products.setdefault((i - 1, j - 1), []).append((k - 1, value))
            products.setdefault((j - 1, i - 1), []).append((k - 1, -value))
        self._products = {key: tuple(terms) for key, terms in products.items()}

        if validate:
            self.validate()

    @property
    def name(self):
        """Name of the algebra"""
        return self._name

    @property
    def dim(self):
        """Dimension of the algebra"""
        return self._dim

    @property
    def structure(self):
        """Canonical structure constants {(i, j, k): c} with 1-based i < j"""
        return dict(self._structure)

    def products(self):
        """Nonzero products as {(i, j): ((k, c^k_ij), ...)}, 0-based, both orders"""
        return self._products

    def structure_constant(self, i, j, k):
        """Return c^k_ij for 0-based indices"""
        for index, value in self._products.get((i, j), ()):
            if index == k:
                return value
        return Integer(0)

    def __repr__(self):
        return f"LieAlgebra(name={self._name!r}, dim={self._dim})"

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self._dim == other.dim and self._structure == other.structure

    def __hash__(self):
        return hash((self._dim, frozenset(self._structure.items())))

    def is_abelian(self):
        """Whether the bracket vanishes identically"""
        return not self._structure

    def vector(self, components):
        """Return `components` as an exact vector of this algebra"""
        components = tuple(to_rational(value) for value in components)
        if len(components) != self._dim:
            raise DimensionError(
                f"Vector of length {len(components)} given to {self._name} "
                f"of dimension {self._dim}")
        return components

    def basis(self, index):
        """Return the basis vector e_index (0-based)"""
        if not 0 <= index < self._dim:
            raise DimensionError(f"Basis index {index} out of range for dim {self._dim}")
        return tuple(Integer(1) if pos == index else Integer(0) for pos in range(self._dim))

    def zero(self):
        """Return the zero vector"""
        return (Integer(0),) * self._dim

    def bracket(self, v, w):
        """Return the Lie bracket of two vectors"""
        v = self.vector(v)
        w = self.vector(w)
        result = [Integer(0)] * self._dim
        for (i, j), terms in self._products.items():
            if v[i] == 0 or w[j] == 0:
                continue
            weight = v[i] * w[j]
            for k, value in terms:
                result[k] += weight * value
        return tuple(result)

    def ad(self, v):
        """Matrix of ad_v, column j being bracket(v, e_j)"""
        v = self.vector(v)
        entries = [[Integer(0)] * self._dim for _ in range(self._dim)]
        for (i, j), terms in self._products.items():
            if v[i] == 0:
                continue
            for k, value in terms:
                entries[k][j] += v[i] * value
        return ImmutableMatrix(entries)

    @cached_property
    def adjoint_basis(self):
        """ad(e_a) for every basis vector"""
        return tuple(self.ad(self.basis(index)) for index in range(self._dim))

    def _bracket_basis(self, i, vector):
        result = [Integer(0)] * self._dim
        for j, coefficient in enumerate(vector):
            if coefficient == 0:
                continue
            for k, value in self._products.get((i, j), ()):
                result[k] += coefficient * value
        return result

    def jacobi_defect(self):
        """Cyclic sums [e_i,[e_j,e_l]] + [e_j,[e_l,e_i]] + [e_l,[e_i,e_j]].

        Returns {(i, j, l, m): value} over 0-based i < j < l, nonzero values
        only; the map is empty exactly when the Jacobi identity holds."""
        defect = {}
        for i, j, l in combinations(range(self._dim), 3):
            total = [Integer(0)] * self._dim
            for first, second, third in ((i, j, l), (j, l, i), (l, i, j)):
                inner = [Integer(0)] * self._dim
                for k, value in self._products.get((second, third), ()):
                    inner[k] += value
                for m, value in enumerate(self._bracket_basis(first, inner)):
                    total[m] += value
            for m, value in enumerate(total):
                if value != 0:
                    defect[(i, j, l, m)] = value
        return defect

    def validate(self):
        """Raise JacobiError naming the first violating triple (1-based)"""
        defect = self.jacobi_defect()
        if defect:
            (i, j, l, m), residual = min(defect.items())
            self.logger.error("Jacobi identity fails for {}".format(self._name))
            raise JacobiError((i + 1, j + 1, l + 1), m + 1, residual)
        self.logger.debug("Jacobi identity holds for {}".format(self._name))
        return self

    def killing_form(self):
        """K_ab = Tr(ad(e_a) ad(e_b))"""
        adjoints = self.adjoint_basis
        return ImmutableMatrix(self._dim, self._dim,
                               lambda a, b: (adjoints[a] * adjoints[b]).trace())

    def killing(self, v, w):
        """Evaluate the Killing form on two vectors"""
        v = ImmutableMatrix(self.vector(v))
        w = ImmutableMatrix(self.vector(w))
        return (v.T * self.killing_form() * w)[0, 0]

    def characteristic_form(self):
        """chi_a = Tr ad(e_a).

        The opposite sign -Tr ad_v also appears in the literature; this one is
        the sign for which Tr A = chi(J) holds."""
        return tuple(adjoint.trace() for adjoint in self.adjoint_basis)

    def lie_three_form(self, v, w, z):
        """omega(v, w, z) = Tr(ad([v, w]) ad(z))"""
        return (self.ad(self.bracket(v, w)) * self.ad(z)).trace()


def _check_entry(entry, position):
    if not isinstance(entry, dict) or set(entry) != set(ENTRY_KEYS):
        raise AlgebraFormatError(
            f"Structure entry #{position} must have exactly the keys {', '.join(ENTRY_KEYS)}")
    for key in ('i', 'j', 'k'):
        if not isinstance(entry[key], int) or isinstance(entry[key], bool):
            raise AlgebraFormatError(f"Structure entry #{position}: '{key}' must be an integer")
    if not isinstance(entry['c'], str):
        raise AlgebraFormatError(f"Structure entry #{position}: 'c' must be a string literal")
    try:
        return (entry['i'], entry['j'], entry['k']), parse_rational(entry['c'])
    except ValueError as error:
        raise AlgebraFormatError(f"Structure entry #{position}: {error}") from error


def load_algebra(doc, validate=True):
    """Build a LieAlgebra from a JSON document (text, bytes or parsed dict)"""
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except ValueError as error:
            raise AlgebraFormatError(f"Algebra document is not valid JSON: {error}") from error

    if not isinstance(doc, dict) or set(doc) != set(DOCUMENT_KEYS):
        raise AlgebraFormatError(
            f"Algebra document must be an object with keys {', '.join(DOCUMENT_KEYS)}")
    if not isinstance(doc['name'], str):
        raise AlgebraFormatError("'name' must be a string")
    if not isinstance(doc['structure'], list):
        raise AlgebraFormatError("'structure' must be a list")

    dim = doc['dim']
    structure = {}
    for position, entry in enumerate(doc['structure'], start=1):
        key, value = _check_entry(entry, position)
        if key in structure:
            raise AlgebraFormatError(f"Duplicate structure entry {key}")
        i, j, _ = key
        if i == j:
            if value != 0:
                raise AlgebraFormatError(f"Entry {key} has i = j with nonzero value {value}")
            logging.debug("Skipping zero diagonal entry {}".format(key))
            continue
        if i > j:
            raise AlgebraFormatError(f"Entry {key} has i > j, only i < j is accepted")
        structure[key] = value

    algebra = LieAlgebra(doc['name'], dim, structure, validate=validate)
    logging.debug("Loaded algebra {} of dimension {}".format(algebra.name, algebra.dim))
    return algebra


def load_algebra_file(path, validate=True):
    """Read an algebra JSON file"""
    with open(path, encoding='utf-8') as stream:
        return load_algebra(stream.read(), validate=validate)


def dump_algebra(algebra):
    """Return the JSON document describing `algebra`"""
    return {
        'name': algebra.name,
        'dim': algebra.dim,
        'structure': [{'i': i, 'j': j, 'k': k, 'c': str(value)}
                      for (i, j, k), value in sorted(algebra.structure.items())],
    }
