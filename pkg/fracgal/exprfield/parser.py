"""
Expression language for coefficient fields and forcing amplitudes.

Grammar (EBNF)::

    expr    = term , { ( "+" | "-" ) , term } ;
    term    = unary , { ( "*" | "/" ) , unary } ;
    unary   = "-" , unary | power ;
    power   = atom , [ "^" , unary ] ;          (* right associative *)
    atom    = number | name | name , "(" , expr , ")" | "(" , expr , ")" ;
    number  = digits , [ "." , digits ] , [ exponent ] | "." , digits ,
              [ exponent ] ;
    name    = letter , { letter | digit | "_" } ;

Names are the declared variables (t, x, y by default), the constant 'pi'
and the functions sin, cos, exp, sqrt and abs. The right operand of '^'
must be constant (contain no variables).
"""
from builtins import object
import re
import math
import numpy as np
from fracgal.exceptions import (
    FracGalSyntaxError, FracGalUnknownIdentifierError, FracGalDomainError)


DEFAULT_VARIABLES = ('t', 'x', 'y')

CONSTANTS = {'pi': math.pi}

FUNCTIONS = {
    'sin': np.sin,
    'cos': np.cos,
    'exp': np.exp,
    'sqrt': np.sqrt,
    'abs': np.abs}


class Expr(object):
    "Base class of the nodes of an expression tree"

    __slots__ = ()

    def evaluate(self, env):
        raise NotImplementedError

    def variables(self):
        "The set of variable names referenced in the tree"
        raise NotImplementedError

    def __str__(self):
        return self.to_source()

    def __ne__(self, other):
        return not (self == other)


class Num(Expr):

    __slots__ = ('_value',)

    def __init__(self, value):
        self._value = float(value)

    @property
    def value(self):
        return self._value

    def evaluate(self, env):
        return self._value

    def variables(self):
        return frozenset()

    def to_source(self):
        return repr(self._value)

    def __eq__(self, other):
        return isinstance(other, Num) and self._value == other._value

    def __hash__(self):
        return hash(('num', self._value))

    def __repr__(self):
        return "Num({})".format(self._value)


class Var(Expr):

    __slots__ = ('_name',)

    def __init__(self, name):
        self._name = name

    @property
    def name(self):
        return self._name

    def evaluate(self, env):
        return env[self._name]

    def variables(self):
        return frozenset([self._name])

    def to_source(self):
        return self._name

    def __eq__(self, other):
        return isinstance(other, Var) and self._name == other._name

    def __hash__(self):
        return hash(('var', self._name))

    def __repr__(self):
        return "Var('{}')".format(self._name)


class Const(Expr):

    __slots__ = ('_name',)

    def __init__(self, name):
        self._name = name

    @property
    def name(self):
        return self._name

    def evaluate(self, env):
        return CONSTANTS[self._name]

    def variables(self):
        return frozenset()

    def to_source(self):
        return self._name

    def __eq__(self, other):
        return isinstance(other, Const) and self._name == other._name

    def __hash__(self):
        return hash(('const', self._name))

    def __repr__(self):
        return "Const('{}')".format(self._name)


class Neg(Expr):

    __slots__ = ('_operand',)

    def __init__(self, operand):
        self._operand = operand

    @property
    def operand(self):
        return self._operand

    def evaluate(self, env):
        return -self._operand.evaluate(env)

    def variables(self):
        return self._operand.variables()

    def to_source(self):
        return "-({})".format(self._operand.to_source())

    def __eq__(self, other):
        return isinstance(other, Neg) and self._operand == other._operand

    def __hash__(self):
        return hash(('neg', self._operand))

    def __repr__(self):
        return "Neg({!r})".format(self._operand)


class BinOp(Expr):

    __slots__ = ('_op', '_left', '_right')

    OPS = ('+', '-', '*', '/', '^')

    def __init__(self, op, left, right):
        assert op in self.OPS
        self._op = op
        self._left = left
        self._right = right

    @property
    def op(self):
        return self._op

    @property
    def left(self):
        return self._left

    @property
    def right(self):
        return self._right

    def evaluate(self, env):
        left = self._left.evaluate(env)
        right = self._right.evaluate(env)
        if self._op == '+':
            return left + right
        elif self._op == '-':
            return left - right
        elif self._op == '*':
            return left * right
        elif self._op == '/':
            if np.any(np.asarray(right) == 0.0):
                raise FracGalDomainError(
                    self, "Division by zero in '{}'".format(self))
            return np.true_divide(left, right)
        with np.errstate(all='ignore'):
            result = np.power(left, right)
        if not np.all(np.isfinite(result)):
            raise FracGalDomainError(
                self, "Non-finite power in '{}' (negative base with "
                "fractional exponent or zero to a negative power)"
                .format(self))
        return result

    def variables(self):
        return self._left.variables() | self._right.variables()

    def to_source(self):
        return "({} {} {})".format(self._left.to_source(), self._op,
                                   self._right.to_source())

    def __eq__(self, other):
        return (isinstance(other, BinOp) and self._op == other._op
                and self._left == other._left
                and self._right == other._right)

    def __hash__(self):
        return hash(('binop', self._op, self._left, self._right))

    def __repr__(self):
        return "BinOp('{}', {!r}, {!r})".format(self._op, self._left,
                                                 self._right)


class Call(Expr):

    __slots__ = ('_func', '_arg')

    def __init__(self, func, arg):
        self._func = func
        self._arg = arg

    @property
    def func(self):
        return self._func

    @property
    def arg(self):
        return self._arg

    def evaluate(self, env):
        arg = self._arg.evaluate(env)
        if self._func == 'sqrt' and np.any(np.asarray(arg) < 0.0):
            raise FracGalDomainError(
                self, "Square root of a negative number in '{}'"
                .format(self))
        with np.errstate(over='ignore'):
            result = FUNCTIONS[self._func](arg)
        if not np.all(np.isfinite(result)):
            raise FracGalDomainError(
                self, "Non-finite value of '{}' (overflow)".format(self))
        return result

    def variables(self):
        return self._arg.variables()

    def to_source(self):
        return "{}({})".format(self._func, self._arg.to_source())

    def __eq__(self, other):
        return (isinstance(other, Call) and self._func == other._func
                and self._arg == other._arg)

    def __hash__(self):
        return hash(('call', self._func, self._arg))

    def __repr__(self):
        return "Call('{}', {!r})".format(self._func, self._arg)


_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+)
  | (?P<number>(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z][A-Za-z0-9_]*)
  | (?P<op>[-+*/^()])
""", re.VERBOSE)


class Token(object):

    __slots__ = ('kind', 'text', 'offset')

    def __init__(self, kind, text, offset):
        self.kind = kind
        self.text = text
        self.offset = offset

    def __repr__(self):
        return "Token({}, '{}', {})".format(self.kind, self.text,
                                             self.offset)


def tokenize(source):
    """
    Splits the source into tokens, terminated by an 'end' token. Offsets are
    byte offsets into the UTF-8 encoding of the source
    """
    tokens = []
    pos = 0
    while pos < len(source):
        match = _TOKEN_RE.match(source, pos)
        if match is None:
            raise FracGalSyntaxError(
                _byte_offset(source, pos),
                "unexpected character '{}'".format(source[pos]))
        kind = match.lastgroup
        if kind != 'ws':
            tokens.append(Token(kind, match.group(), _byte_offset(source,
                                                                   pos)))
        pos = match.end()
    tokens.append(Token('end', '', _byte_offset(source, len(source))))
    return tokens


def _byte_offset(source, pos):
    return len(source[:pos].encode('utf-8'))


class Parser(object):
    """
    Recursive descent parser for the coefficient expression language

    Parameters
    ----------
    source : str
        The expression text
    variables : tuple[str]
        The variable names that may appear in the expression
    """

    def __init__(self, source, variables=DEFAULT_VARIABLES):
        self._source = source
        self._variables = tuple(variables)
        self._tokens = tokenize(source)
        self._pos = 0

    @property
    def _current(self):
        return self._tokens[self._pos]

    def _advance(self):
        token = self._tokens[self._pos]
        self._pos += 1
        return token

    def _expect(self, text, description):
        token = self._current
        if token.text != text:
            raise FracGalSyntaxError(
                token.offset, "expected {} but found {}".format(
                    description, self._describe(token)))
        return self._advance()

    @staticmethod
    def _describe(token):
        if token.kind == 'end':
            return 'end of input'
        return "'{}'".format(token.text)

    def parse(self):
        expr = self._expr()
        if self._current.kind != 'end':
            raise FracGalSyntaxError(
                self._current.offset,
                "expected operator or end of input but found {}"
                .format(self._describe(self._current)))
        return expr

    def _expr(self):
        node = self._term()
        while self._current.text in ('+', '-') and self._current.kind == 'op':
            op = self._advance().text
            node = BinOp(op, node, self._term())
        return node

    def _term(self):
        node = self._unary()
        while self._current.text in ('*', '/') and self._current.kind == 'op':
            op = self._advance().text
            node = BinOp(op, node, self._unary())
        return node

    def _unary(self):
        if self._current.kind == 'op' and self._current.text == '-':
            self._advance()
            return Neg(self._unary())
        return self._power()

    def _power(self):
        base = self._atom()
        if self._current.kind == 'op' and self._current.text == '^':
            caret = self._advance()
            exponent = self._unary()
            if exponent.variables():
                raise FracGalSyntaxError(
                    caret.offset,
                    "exponent of '^' must be constant (references '{}')"
                    .format("', '".join(sorted(exponent.variables()))))
            return BinOp('^', base, exponent)
        return base

    def _atom(self):
        token = self._current
        if token.kind == 'number':
            self._advance()
            return Num(token.text)
        elif token.kind == 'name':
            self._advance()
            if token.text in FUNCTIONS:
                self._expect('(', "'(' after function '{}'".format(
                    token.text))
                arg = self._expr()
                self._expect(')', "')'")
                return Call(token.text, arg)
            elif token.text in CONSTANTS:
                return Const(token.text)
            elif token.text in self._variables:
                return Var(token.text)
            raise FracGalUnknownIdentifierError(
                token.text, token.offset,
                "Unknown identifier '{}' at offset {}, expected one of the "
                "variables '{}', a constant or a function ('{}')".format(
                    token.text, token.offset, "', '".join(self._variables),
                    "', '".join(sorted(FUNCTIONS))))
        elif token.kind == 'op' and token.text == '(':
            self._advance()
            node = self._expr()
            self._expect(')', "')'")
            return node
        raise FracGalSyntaxError(
            token.offset, "expected a number, name or '(' but found {}"
            .format(self._describe(token)))


def parse(source, variables=DEFAULT_VARIABLES):
    """
    Parses an expression into its syntax tree

    Parameters
    ----------
    source : str
        The expression text
    variables : tuple[str]
        The declared variable names

    Returns
    -------
    expr : Expr
        The root of the syntax tree
    """
    return Parser(source, variables=variables).parse()


def evaluate(expr, t, point=()):
    """
    Evaluates an expression at time t and spatial coordinates 'point'
    (x, or x and y). Arguments may be numpy arrays, which are broadcast

    Parameters
    ----------
    expr : Expr
        The expression
    t : float | np.ndarray
        Time
    point : tuple
        Spatial coordinates (x,) or (x, y)
    """
    env = {'t': t}
    for name, value in zip(('x', 'y'), point):
        env[name] = value
    missing = expr.variables() - set(env)
    if missing:
        raise FracGalUnknownIdentifierError(
            sorted(missing)[0], None,
            "No value provided for variable(s) '{}' of '{}'".format(
                "', '".join(sorted(missing)), expr))
    with np.errstate(invalid='ignore', divide='ignore', over='ignore'):
        value = expr.evaluate(env)
    if not np.all(np.isfinite(value)):
        raise FracGalDomainError(
            expr, "Non-finite value of '{}' (overflow)".format(expr))
    if np.ndim(value) == 0:
        return float(value)
    return value
