# *******************************************************************************
#
#    Copyright (c) 2020 David Briant
#
#    Licensed under the Apache License, Version 2.0 (the "License");
#    you may not use this file except in compliance with the License.
#    You may obtain a copy of the License at
#
#        http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS,
#    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#    See the License for the specific language governing permissions and
#    limitations under the License.
#
# *******************************************************************************


"""Expression grammar for W, the abstract algebra and the scalar field

    expr   := term (('+' | '-') term)*
    term   := '-'? factor (('*' | '/') factor)*
    factor := atom ('^' signed-int)?
    atom   := int | symbol | '(' expr ')' | 'comm[' expr ',' expr ']' | 'acomm{' expr ',' expr '}'

`/` needs a nonzero scalar on the right. A negative exponent is only allowed on a scalar, or on one of
t, k2, k3 and K1..K3 (and their inv forms). W symbols and abstract symbols may not be mixed.
"""

from functools import lru_cache
from typing import NamedTuple, Any

import pyparsing as pp

from ._core import ParseError, UnknownSymbolError
from .pipeable import Pipeable
from .scalarfield import SYMBOLS, q, p1, p2, p3, isScalar, invert, scalar
from .uqgl21 import U_SYMBOLS, UElement, uGenerator, comm as u_comm, acomm as u_acomm, _inverse, isK
from .walgebra import WElement, W_SYMBOLS, INVERTIBLE, generator, w_scalar, w_pow


__all__ = [
    'Num', 'Sym', 'Neg', 'BinOp', 'Pow', 'Comm', 'AComm', 'parse', 'evaluate', 'render', 'symbolsIn',
    'algebraOf', 'Parse', 'Eval', 'MAX_NESTING',
]


# AST

class Num(NamedTuple):
    value: int
    loc: int = 0

class Sym(NamedTuple):
    name: str
    loc: int = 0

class Neg(NamedTuple):
    operand: Any
    loc: int = 0

class BinOp(NamedTuple):
    op: str
    lhs: Any
    rhs: Any
    loc: int = 0

class Pow(NamedTuple):
    base: Any
    exponent: int
    loc: int = 0

class Comm(NamedTuple):
    lhs: Any
    rhs: Any
    loc: int = 0

class AComm(NamedTuple):
    lhs: Any
    rhs: Any
    loc: int = 0


W_ALGEBRA = 'W'
U_ALGEBRA = 'U'
SCALARS = 'scalar'

_W_NAMES = frozenset(n for n in W_SYMBOLS if '^' not in n)
_U_NAMES = frozenset(U_SYMBOLS)
_SCALAR_NAMES = frozenset(SYMBOLS)
_SCALAR_VALUES = {'q': q, 'p1': p1, 'p2': p2, 'p3': p3}


# grammar

def _leftAssoc(s, loc, toks):
    toks = list(toks)
    answer = toks[0]
    for i in range(1, len(toks), 2):
        answer = BinOp(toks[i], answer, toks[i + 1], answer.loc)
    return answer


def _term(s, loc, toks):
    toks = list(toks)
    if toks[0] == '-':
        return Neg(_leftAssoc(s, loc, toks[1:]), loc)
    return _leftAssoc(s, loc, toks)


def _factor(s, loc, toks):
    if len(toks) == 1:
        return toks[0]
    return Pow(toks[0], int(toks[1]), loc)


@lru_cache(maxsize=None)
def _grammar():
    expr = pp.Forward()
    integer = pp.Regex(r'\d+').set_parse_action(lambda s, loc, toks: Num(int(toks[0]), loc))
    # a trailing + belongs to the symbol unless an operand follows it directly, so a+b is a + b
    symbol = pp.Regex(r'[A-Za-z][A-Za-z0-9]*(?:\+(?![A-Za-z0-9(]))?').set_parse_action(lambda s, loc, toks: Sym(toks[0], loc))
    comma = pp.Suppress(',')
    commNode = (pp.Suppress(pp.Regex(r'comm\[')) + expr + comma + expr + pp.Suppress(']')) \
        .set_parse_action(lambda s, loc, toks: Comm(toks[0], toks[1], loc))
    acommNode = (pp.Suppress(pp.Regex(r'acomm\{')) + expr + comma + expr + pp.Suppress('}')) \
        .set_parse_action(lambda s, loc, toks: AComm(toks[0], toks[1], loc))
    atom = commNode | acommNode | integer | symbol | (pp.Suppress('(') + expr + pp.Suppress(')'))
    factor = (atom + pp.Optional(pp.Suppress('^') + pp.Regex(r'[+-]?\d+'))).set_parse_action(_factor)
    term = (pp.Optional(pp.Literal('-')) + factor + pp.ZeroOrMore(pp.one_of('* /') + factor)).set_parse_action(_term)
    expr <<= (term + pp.ZeroOrMore(pp.one_of('+ -') + term)).set_parse_action(_leftAssoc)
    return expr


def _parseError(message, text, loc) -> ParseError:
    return ParseError(message, text, loc, pp.lineno(loc, text), pp.col(loc, text))


def symbolsIn(ast):
    """(name, loc) for every symbol, left to right"""
    answer, pending = [], [ast]
    while pending:
        node = pending.pop()
        if isinstance(node, Sym):
            answer.append((node.name, node.loc))
        elif isinstance(node, Neg):
            pending.append(node.operand)
        elif isinstance(node, Pow):
            pending.append(node.base)
        elif not isinstance(node, Num):
            pending.extend((node.rhs, node.lhs))
    return answer


MAX_NESTING = 32
_OPENERS, _CLOSERS = '([{', ')]}'


def _checkNesting(text):
    # the grammar recurses once per bracket level
    depth = 0
    for loc, ch in enumerate(text):
        if ch in _OPENERS:
            depth += 1
            if depth > MAX_NESTING:
                raise _parseError('Brackets nest more than %d deep' % MAX_NESTING, text, loc)
        elif ch in _CLOSERS:
            depth = max(depth - 1, 0)


def parse(text: str):
    """text -> AST, raising ParseError (syntax, nesting, mixed algebras) or UnknownSymbolError"""
    if not isinstance(text, str):
        raise TypeError('Expected text but got %r' % (text,))
    _checkNesting(text)
    try:
        ast = _grammar().parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as ex:
        raise _parseError('Syntax error: %s' % ex.msg, text, ex.loc) from None
    except RecursionError:
        raise _parseError('Expression is too long to parse', text, 0) from None
    algebraOf(ast, text)
    return ast


def algebraOf(ast, text='') -> str:
    """W, U or scalar - unknown symbols and mixed expressions are errors"""
    seen = {}
    for name, loc in symbolsIn(ast):
        if name in _SCALAR_NAMES:
            continue
        if name in _W_NAMES:
            family = W_ALGEBRA
        elif name in _U_NAMES:
            family = U_ALGEBRA
        else:
            ex = UnknownSymbolError('Unknown symbol "%s" at position %s' % (name, loc))
            ex.position = loc
            raise ex
        seen.setdefault(family, (name, loc))
        if len(seen) > 1:
            other = seen[W_ALGEBRA if family == U_ALGEBRA else U_ALGEBRA][0]
            raise _parseError('"%s" and "%s" belong to different algebras' % (other, name), text, loc)
    return next(iter(seen)) if seen else SCALARS


# evaluation

class _Evaluator(object):

    def __init__(self, algebra, text):
        self.algebra = algebra
        self.text = text

    def lift(self, x):
        if not isScalar(x):
            return x
        if self.algebra == W_ALGEBRA:
            return w_scalar(x)
        if self.algebra == U_ALGEBRA:
            return UElement({(): x})
        return scalar(x)

    def __call__(self, ast):
        if isinstance(ast, Num):
            return scalar(ast.value)
        if isinstance(ast, Sym):
            return self.symbol(ast.name)
        if isinstance(ast, Neg):
            return -self(ast.operand)
        if isinstance(ast, Pow):
            return self.power(ast)
        if isinstance(ast, (Comm, AComm)):
            x, y = self.lift(self(ast.lhs)), self.lift(self(ast.rhs))
            if self.algebra == U_ALGEBRA:
                return u_comm(x, y) if isinstance(ast, Comm) else u_acomm(x, y)
            return x * y - y * x if isinstance(ast, Comm) else x * y + y * x
        lhs, rhs = self(ast.lhs), self(ast.rhs)
        if ast.op == '/':
            if not isScalar(rhs):
                raise _parseError('Can only divide by a scalar', self.text, ast.rhs.loc)
            return lhs * invert(rhs) if isScalar(lhs) else lhs / rhs
        if isScalar(lhs) and isScalar(rhs):
            return {'+': lambda: lhs + rhs, '-': lambda: lhs - rhs, '*': lambda: lhs * rhs}[ast.op]()
        if ast.op == '*':
            # scalars stay on the right so the algebra's own scaling is used
            return rhs * lhs if isScalar(lhs) else lhs * rhs
        lhs, rhs = self.lift(lhs), self.lift(rhs)
        return lhs + rhs if ast.op == '+' else lhs - rhs

    def symbol(self, name):
        if name in _SCALAR_NAMES:
            return _SCALAR_VALUES[name]
        return generator(name) if self.algebra == W_ALGEBRA else uGenerator(name)

    def power(self, ast):
        n = ast.exponent
        if n < 0 and isinstance(ast.base, Sym):
            name = ast.base.name
            if name in INVERTIBLE:
                return generator(INVERTIBLE[name]) ** -n
            if name in _U_NAMES and isK(name):
                return uGenerator(_inverse(name)) ** -n
        base = self(ast.base)
        if isScalar(base):
            return invert(base) ** -n if n < 0 else base ** n
        if n < 0:
            if isinstance(base, UElement):
                try:
                    return base ** n
                except ValueError:
                    pass
            raise _parseError('Only scalars and t, k2, k3, K1, K2, K3 take negative exponents', self.text, ast.loc)
        return w_pow(base, n) if isinstance(base, WElement) else base ** n


def evaluate(ast, text=''):
    """AST (or text) -> QScalar, WElement or UElement"""
    if isinstance(ast, str):
        text, ast = ast, parse(ast)
    try:
        return _Evaluator(algebraOf(ast, text), text)(ast)
    except RecursionError:
        raise _parseError('Expression is too long to evaluate', text, 0) from None


_PRECEDENCE = {'+': 1, '-': 1, '*': 2, '/': 2}


def render(ast, _parent=0) -> str:
    """The AST as text that parses back to an equal AST, up to positions"""
    if isinstance(ast, Num):
        return str(ast.value)
    if isinstance(ast, Sym):
        return ast.name
    if isinstance(ast, Neg):
        text = '-' + render(ast.operand, 2)
        return '(%s)' % text if _parent else text
    if isinstance(ast, Pow):
        base = render(ast.base)
        if not isinstance(ast.base, (Num, Sym, Comm, AComm)):
            base = '(%s)' % base
        return '%s^%s' % (base, ast.exponent)
    if isinstance(ast, Comm):
        return 'comm[%s, %s]' % (render(ast.lhs), render(ast.rhs))
    if isinstance(ast, AComm):
        return 'acomm{%s, %s}' % (render(ast.lhs), render(ast.rhs))
    level = _PRECEDENCE[ast.op]
    text = '%s %s %s' % (render(ast.lhs, level), ast.op, render(ast.rhs, level + 1))
    return '(%s)' % text if _parent > level else text


@Pipeable
def Parse(text):
    return parse(text)


@Pipeable
def Eval(x):
    return evaluate(x)
