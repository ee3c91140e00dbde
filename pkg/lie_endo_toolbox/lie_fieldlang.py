"""Parser of the small language describing polynomials and vector fields.

    field  := comp (";" comp)*
    comp   := "d" INT ":" poly
    poly   := ["+" | "-"] term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := primary ("^" NAT)*
    primary:= INT ["/" NAT] | "x" INT | PARAM | "(" poly ")"

Indices are 1-based, whitespace is insignificant and parameters are bound
to rational values before parsing."""

import re
from collections import namedtuple
from math import comb

from sympy import Rational
from sympy.polys.domains import QQ

from lie_endo_toolbox.lie_algebra import parse_rational
from lie_endo_toolbox.lie_errors import FieldSyntaxError
from lie_endo_toolbox.lie_poly import PolyVectorField, coordinate_ring, qq, to_sympy, total_degree

MAX_EXPONENT = 64
MAX_DEPTH = 100
MAX_DEGREE = 256
MAX_COEFFICIENT_BITS = 100000
MAX_TERMS = 20000

TOKEN_PATTERN = re.compile(r'(?P<space>[ \t\r\n]+)|(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)'
                           r'|(?P<symbol>[-+*/^():;])')
VARIABLE = re.compile(r'^x(\d+)$')
COMPONENT = re.compile(r'^d(\d+)$')

Token = namedtuple('Token', ['kind', 'text', 'line', 'column'])

FieldExpr = namedtuple('FieldExpr', ['source', 'components'])


def tokenize(text):
    """Split `text` into tokens carrying 1-based line and column"""
    tokens = []
    position = 0
    line, line_start = 1, 0
    while position < len(text):
        match = TOKEN_PATTERN.match(text, position)
        column = position - line_start + 1
        if match is None:
            raise FieldSyntaxError(f"unexpected character {text[position]!r}", line, column)
        kind = match.lastgroup
        value = match.group()
        if kind == 'space':
            newlines = value.count('\n')
            if newlines:
                line += newlines
                line_start = position + value.rindex('\n') + 1
        else:
            tokens.append(Token(kind, value, line, column))
        position = match.end()
    column = position - line_start + 1
    tokens.append(Token('end', '', line, column))
    return tokens


def _coefficient_bits(p):
    return max((max(int(coefficient.numerator).bit_length(),
                    int(coefficient.denominator).bit_length())
                for coefficient in p.itercoeffs()), default=0)


def _monomial_bound(nvars, degree):
    """Number of monomials of total degree at most `degree` in `nvars` variables"""
    return comb(nvars + degree, nvars)


def _power_terms(p, exponent):
    """Upper bound on the number of terms of p ** exponent"""
    if not p:
        return 1
    return min(comb(len(p) + exponent - 1, exponent),
               _monomial_bound(p.ring.ngens, total_degree(p) * exponent))


def _product_terms(p, q):
    """Upper bound on the number of terms of p * q"""
    if not p or not q:
        return 0
    return min(len(p) * len(q),
               _monomial_bound(p.ring.ngens, total_degree(p) + total_degree(q)))


class _Parser:
    """Recursive-descent parser over a token list"""

    def __init__(self, text, nvars, params):
        if isinstance(text, (bytes, bytearray)):
            try:
                text = text.decode('utf-8')
            except UnicodeDecodeError as error:
                raise FieldSyntaxError("input is not valid UTF-8", 1, 1) from error
        self.text = text
        self.ring = coordinate_ring(nvars)
        self.params = {name: qq(value) for name, value in (params or {}).items()}
        self.tokens = tokenize(text)
        self.position = 0
        self.depth = 0

    @property
    def current(self):
        """Token under the cursor"""
        return self.tokens[self.position]

    def error(self, message, token=None):
        """Build a FieldSyntaxError located at `token`"""
        token = token or self.current
        return FieldSyntaxError(message, token.line, token.column)

    def advance(self):
        """Consume the current token"""
        token = self.current
        if token.kind != 'end':
            self.position += 1
        return token

    def accept(self, symbol):
        """Consume `symbol` when it is the current token"""
        if self.current.kind == 'symbol' and self.current.text == symbol:
            return self.advance()
        return None

    def expect(self, symbol):
        """Consume `symbol` or fail"""
        token = self.accept(symbol)
        if token is None:
            raise self.error(f"expected '{symbol}', found {self.describe(self.current)}")
        return token

    @staticmethod
    def describe(token):
        """Human readable token description"""
        return 'end of input' if token.kind == 'end' else repr(token.text)

    def integer(self, token):
        """Value of an integer token"""
        try:
            return int(token.text)
        except ValueError as error:
            raise self.error("integer literal too long", token) from error

    def finish(self):
        """Fail unless every token has been consumed"""
        if self.current.kind != 'end':
            raise self.error(f"unexpected {self.describe(self.current)}")

    def parse_field(self):
        """field := comp (";" comp)*"""
        components = {}
        while True:
            head = self.current
            index, value = self.parse_component()
            if index in components:
                raise self.error(f"duplicate clause for component d{index + 1}", head)
            components[index] = value
            if not self.accept(';'):
                break
        self.finish()
        return components

    def parse_component(self):
        """comp := "d" INT ":" poly"""
        token = self.advance()
        match = COMPONENT.match(token.text) if token.kind == 'ident' else None
        if match is None:
            raise self.error(f"expected a component 'd<index>', found {self.describe(token)}",
                             token)
        index = int(match.group(1))
        if not 1 <= index <= self.ring.ngens:
            raise self.error(f"component index {index} out of range 1..{self.ring.ngens}", token)
        self.expect(':')
        return index - 1, self.parse_poly()

    def parse_poly(self):
        """poly := ["+" | "-"] term (("+" | "-") term)*"""
        negate = bool(self.accept('-'))
        if not negate:
            self.accept('+')
        result = self.parse_term()
        if negate:
            result = -result
        while True:
            if self.accept('+'):
                result += self.parse_term()
            elif self.accept('-'):
                result -= self.parse_term()
            else:
                return result

    def parse_term(self):
        """term := factor ("*" factor)*"""
        result = self.parse_factor()
        while True:
            star = self.accept('*')
            if star:
                factor = self.parse_factor()
                if _product_terms(result, factor) > MAX_TERMS:
                    raise self.error(f"product exceeds {MAX_TERMS} terms", star)
                result *= factor
            elif self.current.text == '/' and self.current.kind == 'symbol':
                raise self.error("division is only allowed inside rational literals")
            else:
                return result

    def parse_factor(self):
        """factor := primary ("^" NAT)*"""
        result = self.parse_primary()
        while self.accept('^'):
            token = self.advance()
            if token.kind != 'int':
                raise self.error(f"expected a natural exponent, found {self.describe(token)}",
                                 token)
            exponent = self.integer(token)
            if exponent > MAX_EXPONENT:
                raise self.error(f"exponent {exponent} exceeds {MAX_EXPONENT}", token)
            if total_degree(result) * exponent > MAX_DEGREE:
                raise self.error(f"power exceeds total degree {MAX_DEGREE}", token)
            if _coefficient_bits(result) * exponent > MAX_COEFFICIENT_BITS:
                raise self.error("power produces oversized coefficients", token)
            if _power_terms(result, exponent) > MAX_TERMS:
                raise self.error(f"power exceeds {MAX_TERMS} terms", token)
            result = result ** exponent
        return result

    def parse_primary(self):
        """primary := INT ["/" NAT] | VAR | PARAM | "(" poly ")" """
        token = self.current
        if token.kind == 'int':
            self.advance()
            numerator = self.integer(token)
            if self.accept('/'):
                denominator_token = self.advance()
                if denominator_token.kind != 'int':
                    raise self.error("division is only allowed inside rational literals",
                                     denominator_token)
                denominator = self.integer(denominator_token)
                if denominator == 0:
                    raise self.error("zero denominator", denominator_token)
                return self.ring.ground_new(QQ(numerator, denominator))
            return self.ring(numerator)

        if token.kind == 'ident':
            self.advance()
            return self.resolve(token)

        if self.accept('('):
            self.depth += 1
            if self.depth > MAX_DEPTH:
                raise self.error(f"parentheses nested deeper than {MAX_DEPTH}", token)
            result = self.parse_poly()
            self.expect(')')
            self.depth -= 1
            return result

        raise self.error(f"expected a number, variable, parameter or '(', "
                         f"found {self.describe(token)}")

    def resolve(self, token):
        """Turn an identifier into a coordinate or a bound parameter"""
        match = VARIABLE.match(token.text)
        if match is not None:
            index = int(match.group(1))
            if not 1 <= index <= self.ring.ngens:
                raise self.error(f"variable {token.text} out of range x1..x{self.ring.ngens}",
                                 token)
            return self.ring.gens[index - 1]
        if token.text in self.params:
            return self.ring.ground_new(self.params[token.text])
        raise self.error(f"unknown identifier '{token.text}'", token)


def parse_poly(text, nvars, params=None):
    """Parse a polynomial in x1..x<nvars>"""
    parser = _Parser(text, nvars, params)
    result = parser.parse_poly()
    parser.finish()
    return result


def parse_field_expr(text, nvars, params=None):
    """Parse a field description into a FieldExpr of (index, polynomial)"""
    parser = _Parser(text, nvars, params)
    components = parser.parse_field()
    return FieldExpr(parser.text, tuple(sorted(components.items())))


def parse_field(text, nvars, params=None):
    """Parse a field description, unlisted components being zero"""
    expression = parse_field_expr(text, nvars, params)
    ring = coordinate_ring(nvars)
    components = [ring.zero] * nvars
    for index, value in expression.components:
        components[index] = value
    return PolyVectorField(components, ring)


def parse_params(text):
    """Parse "a=1,b=2/3" into {'a': Rational(1), 'b': Rational(2, 3)}"""
    params = {}
    for item in filter(None, (part.strip() for part in (text or '').split(','))):
        name, separator, value = item.partition('=')
        name = name.strip()
        if not separator or not re.match(r'^[A-Za-z_][A-Za-z0-9_]*$', name):
            raise ValueError(f"Invalid parameter binding {item!r}, expected name=value")
        if VARIABLE.match(name) or COMPONENT.match(name):
            raise ValueError(f"Parameter name {name!r} clashes with coordinate names")
        params[name] = parse_rational(value.strip())
    return params


def format_rational(value):
    """Print a rational as "p" or "p/q" """
    return str(value if isinstance(value, Rational) else to_sympy(value))


def _format_monomial(monom):
    factors = []
    for index, exponent in enumerate(monom):
        if exponent == 1:
            factors.append(f"x{index + 1}")
        elif exponent > 1:
            factors.append(f"x{index + 1}^{exponent}")
    return '*'.join(factors)


def format_poly(p):
    """Print a polynomial in graded-lex order, e.g. "-2*x1^2 - 2*x2^2" """
    if not p:
        return '0'
    pieces = []
    for monom, coefficient in p.terms():
        coefficient = to_sympy(coefficient)
        magnitude = abs(coefficient)
        monomial = _format_monomial(monom)
        if not monomial:
            body = str(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{magnitude}*{monomial}"
        if not pieces:
            pieces.append(f"-{body}" if coefficient < 0 else body)
        else:
            pieces.append(f"- {body}" if coefficient < 0 else f"+ {body}")
    return ' '.join(pieces)


def format_field(field):
    """Print a vector field as "d1: ...; d3: ...", "0" for the zero field"""
    clauses = [f"d{index + 1}: {format_poly(component)}"
               for index, component in enumerate(field.components) if component]
    return '; '.join(clauses) if clauses else '0'
