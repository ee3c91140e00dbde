"""Polynomial tensor fields on a Lie algebra seen as a manifold.

Coordinates x1..xn are the components in the algebra basis. Polynomials are
elements of sympy's sparse ring QQ[x1..xn] in graded-lex order, so every
coefficient is an exact rational and zero terms are never stored.

Vector-valued biforms follow the convention
(dx^a ^ dx^b)(v, w) = v^a w^b - v^b w^a, without a 1/2 factor."""

from functools import lru_cache

from sympy import ImmutableMatrix
from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, xring

from lie_endo_toolbox.lie_algebra import to_rational
from lie_endo_toolbox.lie_errors import DimensionError


@lru_cache(maxsize=None)
def coordinate_ring(nvars):
    """The ring QQ[x1..x<nvars>]"""
    if nvars < 1:
        raise DimensionError(f"A coordinate ring needs at least one variable, got {nvars}")
    ring, _ = xring(f"x1:{nvars + 1}", QQ, grlex)
    return ring


def qq(value):
    """Convert a rational-like value to an element of QQ"""
    return QQ.from_sympy(to_rational(value))


def to_sympy(value):
    """Convert an element of QQ to a sympy Rational"""
    return QQ.to_sympy(value)


def _check_ring(*items):
    rings = {item.ring for item in items}
    if len(rings) != 1:
        raise DimensionError(
            "Operands live in different coordinate rings: "
            + ", ".join(sorted(str(ring.ngens) for ring in rings)) + " variables")
    return rings.pop()


def _check_point(ring, point):
    point = tuple(point)
    if len(point) != ring.ngens:
        raise DimensionError(
            f"Point of dimension {len(point)} given to a ring of {ring.ngens} variables")
    return point


def add(p, q):
    """p + q"""
    _check_ring(p, q)
    return p + q


def mul(p, q):
    """p * q"""
    _check_ring(p, q)
    return p * q


def scale(p, value):
    """value * p for a rational value"""
    return p.mul_ground(qq(value))


def power(p, exponent):
    """p ** exponent for a natural exponent"""
    if exponent < 0:
        raise ValueError(f"Negative exponent {exponent}")
    return p ** exponent


def partial(p, index):
    """Formal partial derivative with respect to x<index + 1>"""
    if not 0 <= index < p.ring.ngens:
        raise DimensionError(f"Variable index {index} out of range for {p.ring.ngens} variables")
    return p.diff(p.ring.gens[index])


def total_degree(p):
    """Total degree of p, -1 for the zero polynomial"""
    return max((sum(monom) for monom in p.itermonoms()), default=-1)


def evaluate(p, point):
    """Exact value of p at a point given by rationals"""
    point = _check_point(p.ring, point)
    return to_sympy(p(*[qq(value) for value in point]))


class PolyVectorField:
    """Vector field with polynomial components, component k being the
    coefficient of the coordinate field d_k"""

    __slots__ = ('ring', 'components')

    def __init__(self, components, ring=None):
        components = tuple(components)
        if ring is None:
            if not components:
                raise DimensionError("A vector field needs at least one component")
            ring = components[0].ring
        if len(components) != ring.ngens:
            raise DimensionError(
                f"{len(components)} components given for {ring.ngens} variables")
        self.ring = ring
        self.components = tuple(ring(component) if not isinstance(component, PolyElement)
                                else component for component in components)
        _check_ring(*self.components)

    @classmethod
    def zero(cls, ring):
        """The zero field"""
        return cls([ring.zero] * ring.ngens, ring)

    @classmethod
    def constant(cls, ring, vector):
        """Constant field extending an algebra vector"""
        vector = _check_point(ring, vector)
        return cls([ring.ground_new(qq(value)) for value in vector], ring)

    @classmethod
    def liouville(cls, ring):
        """The radial field J = x^i d_i"""
        return cls(ring.gens, ring)

    @property
    def nvars(self):
        """Number of coordinates"""
        return self.ring.ngens

    def __getitem__(self, index):
        return self.components[index]

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def __eq__(self, other):
        if not isinstance(other, PolyVectorField):
            return NotImplemented
        return self.ring == other.ring and self.components == other.components

    __hash__ = None

    def __repr__(self):
        return f"PolyVectorField({', '.join(str(component) for component in self.components)})"

    def _combine(self, other, operation):
        _check_ring(self, other)
        return PolyVectorField([operation(left, right)
                                for left, right in zip(self.components, other.components)],
                               self.ring)

    def __add__(self, other):
        return self._combine(other, lambda left, right: left + right)

    def __sub__(self, other):
        return self._combine(other, lambda left, right: left - right)

    def __neg__(self):
        return PolyVectorField([-component for component in self.components], self.ring)

    def scale(self, value):
        """Multiply every component by a rational"""
        value = qq(value)
        return PolyVectorField([component.mul_ground(value) for component in self.components],
                               self.ring)

    def multiply(self, function):
        """Multiply the field by a polynomial function"""
        _check_ring(self, function)
        return PolyVectorField([function * component for component in self.components],
                               self.ring)

    def is_zero(self):
        """Whether every component vanishes identically"""
        return not any(self.components)

    def degree(self):
        """Highest total degree among the components, -1 for the zero field"""
        return max((total_degree(component) for component in self.components), default=-1)

    def derivation(self, function):
        """X f = X^i d_i f"""
        _check_ring(self, function)
        result = self.ring.zero
        for index, component in enumerate(self.components):
            if component:
                result += component * partial(function, index)
        return result

    def directional(self, other):
        """Componentwise derivative of `other` along this field, X^i d_i Y^j d_j"""
        _check_ring(self, other)
        return PolyVectorField([self.derivation(component) for component in other.components],
                               self.ring)

    def commutator(self, other):
        """[X, Y]^j = X^i d_i Y^j - Y^i d_i X^j"""
        return self.directional(other) - other.directional(self)

    def evaluate(self, point):
        """Exact value of the field at a point"""
        return tuple(evaluate(component, point) for component in self.components)


def evaluate_field(field, point):
    """Exact value of a vector field at a point"""
    return field.evaluate(point)


def vf_commutator(left, right):
    """Commutator of two polynomial vector fields"""
    return left.commutator(right)


class EndoField:
    """(1,1) tensor field, entry (k, j) being the coefficient of dx^j (x) d_k"""

    __slots__ = ('ring', 'entries')

    def __init__(self, entries, ring=None):
        entries = tuple(tuple(row) for row in entries)
        if ring is None:
            ring = entries[0][0].ring
        size = ring.ngens
        if len(entries) != size or any(len(row) != size for row in entries):
            raise DimensionError(f"Endomorphism field must be {size}x{size}")
        self.ring = ring
        self.entries = entries
        _check_ring(*(entry for row in entries for entry in row))

    @classmethod
    def zero(cls, ring):
        """The zero endomorphism field"""
        return cls([[ring.zero] * ring.ngens for _ in range(ring.ngens)], ring)

    @classmethod
    def identity(cls, ring):
        """The identity endomorphism field"""
        return cls([[ring.one if row == column else ring.zero for column in range(ring.ngens)]
                    for row in range(ring.ngens)], ring)

    @classmethod
    def constant(cls, ring, matrix):
        """Constant field from a rational matrix"""
        size = ring.ngens
        return cls([[ring.ground_new(qq(matrix[row][column])) for column in range(size)]
                    for row in range(size)], ring)

    @property
    def dim(self):
        """Size of the matrix"""
        return self.ring.ngens

    def __getitem__(self, key):
        row, column = key
        return self.entries[row][column]

    def __eq__(self, other):
        if not isinstance(other, EndoField):
            return NotImplemented
        return self.ring == other.ring and self.entries == other.entries

    __hash__ = None

    def __repr__(self):
        return f"EndoField({self.entries!r})"

    def _combine(self, other, operation):
        _check_ring(self, other)
        return EndoField([[operation(left, right) for left, right in zip(row, other_row)]
                          for row, other_row in zip(self.entries, other.entries)], self.ring)

    def __add__(self, other):
        return self._combine(other, lambda left, right: left + right)

    def __sub__(self, other):
        return self._combine(other, lambda left, right: left - right)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, value):
        """Multiply every entry by a rational"""
        value = qq(value)
        return EndoField([[entry.mul_ground(value) for entry in row] for row in self.entries],
                         self.ring)

    def __matmul__(self, other):
        _check_ring(self, other)
        size = self.dim
        columns = list(zip(*other.entries))
        return EndoField([[sum((left * right for left, right in zip(row, columns[column])
                                if left and right), self.ring.zero)
                           for column in range(size)] for row in self.entries], self.ring)

    def power(self, exponent):
        """k-fold composition, the identity for k = 0"""
        result = EndoField.identity(self.ring)
        for _ in range(exponent):
            result = result @ self
        return result

    def transpose(self):
        """Transposed matrix of polynomials"""
        return EndoField(list(zip(*self.entries)), self.ring)

    def trace(self):
        """Sum of the diagonal entries"""
        return sum((self.entries[index][index] for index in range(self.dim)), self.ring.zero)

    def is_zero(self):
        """Whether every entry vanishes identically"""
        return not any(entry for row in self.entries for entry in row)

    def apply(self, field):
        """(A X)^k = A^k_j X^j"""
        _check_ring(self, field)
        return PolyVectorField([sum((entry * component for entry, component
                                     in zip(row, field.components) if entry and component),
                                    self.ring.zero)
                                for row in self.entries], self.ring)

    def contract_differential(self, function):
        """Components A^k_j d_k f of the one-form obtained by inserting A into df"""
        _check_ring(self, function)
        gradient = [partial(function, index) for index in range(self.dim)]
        return tuple(sum((self.entries[row][column] * gradient[row] for row in range(self.dim)
                          if self.entries[row][column] and gradient[row]), self.ring.zero)
                     for column in range(self.dim))

    def lie_derivative(self, field):
        """(L_X A)^i_j = X^k d_k A^i_j - A^k_j d_k X^i + A^i_k d_j X^k"""
        _check_ring(self, field)
        size = self.dim
        jacobian = [[partial(field[row], column) for column in range(size)]
                    for row in range(size)]
        entries = []
        for i in range(size):
            row = []
            for j in range(size):
                value = field.derivation(self.entries[i][j])
                for k in range(size):
                    if self.entries[k][j] and jacobian[i][k]:
                        value -= self.entries[k][j] * jacobian[i][k]
                    if self.entries[i][k] and jacobian[k][j]:
                        value += self.entries[i][k] * jacobian[k][j]
                row.append(value)
            entries.append(row)
        return EndoField(entries, self.ring)

    def evaluate(self, point):
        """Exact matrix of the field at a point"""
        return ImmutableMatrix([[evaluate(entry, point) for entry in row]
                                for row in self.entries])


def lie_derivative_endo(field, endo):
    """Lie derivative of an endomorphism field along a vector field"""
    return endo.lie_derivative(field)


class VectorBiform:
    """Vector-valued two-form T^i_ab (dx^a ^ dx^b) (x) d_i stored with a < b"""

    __slots__ = ('ring', 'components')

    def __init__(self, ring, components=None):
        self.ring = ring
        self.components = {}
        for (i, a, b), value in (components or {}).items():
            if a == b or not value:
                continue
            if a > b:
                a, b, value = b, a, -value
            key = (i, a, b)
            total = self.components.get(key, ring.zero) + value
            if total:
                self.components[key] = total
            else:
                self.components.pop(key, None)

    @property
    def dim(self):
        """Number of coordinates"""
        return self.ring.ngens

    def component(self, i, a, b):
        """T^i_ab with antisymmetry in (a, b)"""
        if a == b:
            return self.ring.zero
        if a > b:
            return -self.components.get((i, b, a), self.ring.zero)
        return self.components.get((i, a, b), self.ring.zero)

    def items(self):
        """Nonzero components in sorted key order"""
        return sorted(self.components.items())

    def __eq__(self, other):
        if not isinstance(other, VectorBiform):
            return NotImplemented
        return self.ring == other.ring and self.components == other.components

    __hash__ = None

    def __repr__(self):
        return f"VectorBiform({dict(self.items())!r})"

    def __add__(self, other):
        _check_ring(self, other)
        merged = dict(self.components)
        for key, value in other.components.items():
            merged[key] = merged.get(key, self.ring.zero) + value
        return VectorBiform(self.ring, merged)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, value):
        """Multiply every component by a rational"""
        value = qq(value)
        return VectorBiform(self.ring, {key: component.mul_ground(value)
                                        for key, component in self.components.items()})

    def is_zero(self):
        """Whether the biform vanishes identically"""
        return not self.components

    def evaluate(self, left, right):
        """T(v, w)^i = T^i_ab (v^a w^b - v^b w^a)"""
        _check_ring(self, left, right)
        result = [self.ring.zero] * self.dim
        for (i, a, b), value in self.components.items():
            result[i] += value * (left[a] * right[b] - left[b] * right[a])
        return PolyVectorField(result, self.ring)

    def on_coordinate_fields(self, a, b):
        """T(d_a, d_b)"""
        result = [self.component(i, a, b) for i in range(self.dim)]
        return PolyVectorField(result, self.ring)


class ConstantOneTwoField:
    """The constant tensor lambda = 1/2 c^k_ij dx^i ^ dx^j (x) d_k of an algebra"""

    def __init__(self, algebra, ring=None):
        self.algebra = algebra
        self.ring = ring if ring is not None else coordinate_ring(algebra.dim)
        if self.ring.ngens != algebra.dim:
            raise DimensionError(
                f"Ring of {self.ring.ngens} variables used for {algebra.name} "
                f"of dimension {algebra.dim}")
        self._products = {key: tuple((k, qq(value)) for k, value in terms)
                          for key, terms in algebra.products().items()}

    @property
    def dim(self):
        """Number of coordinates"""
        return self.algebra.dim

    def products(self):
        """Nonzero constants {(i, j): ((k, c^k_ij), ...)} in QQ, both orders"""
        return self._products

    def evaluate(self, left, right):
        """lambda(B, C)^k = c^k_ij B^i C^j, the pointwise bracket of two fields"""
        _check_ring(self, left, right)
        result = [self.ring.zero] * self.dim
        for (i, j), terms in self._products.items():
            if not left[i] or not right[j]:
                continue
            product = left[i] * right[j]
            for k, value in terms:
                result[k] += product.mul_ground(value)
        return PolyVectorField(result, self.ring)


def contract_vector_into_onetwo(field, lam):
    """v _| lambda, entry (k, j) = v^i c^k_ij"""
    _check_ring(field, lam)
    ring = lam.ring
    entries = [[ring.zero] * lam.dim for _ in range(lam.dim)]
    for (i, j), terms in lam.products().items():
        if not field[i]:
            continue
        for k, value in terms:
            entries[k][j] += field[i].mul_ground(value)
    return EndoField(entries, ring)


def contract_biform_slot(lam, endo):
    """lambda _| A, the biform T^i_ab = A^i_p c^p_ab"""
    _check_ring(lam, endo)
    components = {}
    for (a, b), terms in lam.products().items():
        if a > b:
            continue
        for p, value in terms:
            for i in range(lam.dim):
                entry = endo[i, p]
                if entry:
                    key = (i, a, b)
                    components[key] = components.get(key, lam.ring.zero) + entry.mul_ground(value)
    return VectorBiform(lam.ring, components)
