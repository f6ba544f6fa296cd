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


"""Exact arithmetic in Q(q, p1, p2, p3)

Scalars are sympy FracElements of a single module level field. sympy cancels the gcd of
numerator and denominator on every operation and fixes the sign of the denominator's leading
coefficient, so == is equality of canonical forms and hashing is safe.

Laurent monomials such as q^-2 live in the field as 1/q^2 - rendering turns a monomial
denominator back into negative exponents.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Union

from sympy import QQ
from sympy.polys.fields import field, FracElement

from ._core import PoleError
from .config import NumericAssignment
from .pipeable import Pipeable


__all__ = [
    'QScalar', 'FIELD', 'SYMBOLS', 'ZERO', 'ONE', 'q', 'qinv', 'p1', 'p2', 'p3', 'QDIFF',
    'scalar', 'isScalar', 'add', 'mul', 'invert', 'q_integer', 'qPow', 'evaluate', 'canonical',
    'substituteParameters', 'parametersIn', 'isLaurentMonomial', 'renderScalar', 'Render',
]


SYMBOLS = ('q', 'p1', 'p2', 'p3')

FIELD, q, p1, p2, p3 = field(','.join(SYMBOLS), QQ)
QScalar = FracElement

ZERO = FIELD.zero
ONE = FIELD.one
qinv = ONE / q
QDIFF = q - qinv          # q - q^-1, the denominator of every q-integer

Number = Union[int, Fraction, FracElement]


def isScalar(x) -> bool:
    return isinstance(x, (FracElement, int, Fraction))


def scalar(x: Number) -> QScalar:
    if isinstance(x, FracElement):
        return x
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise TypeError('Cannot make a scalar from %r' % (x,))
    if isinstance(x, Fraction):
        return ONE * QQ(x.numerator, x.denominator)
    return ONE * x


def add(x: Number, y: Number) -> QScalar:
    return scalar(x) + scalar(y)


def mul(x: Number, y: Number) -> QScalar:
    return scalar(x) * scalar(y)


def invert(x: Number) -> QScalar:
    x = scalar(x)
    if not x:
        raise ZeroDivisionError('Cannot invert the zero scalar')
    return ONE / x


@lru_cache(maxsize=None)
def qPow(n: int) -> QScalar:
    return q ** n if n >= 0 else qinv ** (-n)


@lru_cache(maxsize=None)
def q_integer(n: int) -> QScalar:
    """[n] = (q^n - q^-n)/(q - q^-1)"""
    return (qPow(n) - qPow(-n)) / QDIFF


def _toFraction(c) -> Fraction:
    # c is a ground element of QQ (python or gmpy rational)
    return Fraction(int(c.numerator), int(c.denominator))


def _polyTerms(poly):
    return [(tuple(monom), _toFraction(coeff)) for monom, coeff in poly.terms()]


def _fromTerms(terms, images) -> QScalar:
    total = ZERO
    for monom, coeff in terms:
        term = scalar(coeff)
        for image, e in zip(images, monom):
            if e:
                term = term * image ** e
        total = total + term
    return total


def canonical(x: Number) -> QScalar:
    """Rebuilds x from its own numerator and denominator terms - normalising twice is normalising once"""
    x = scalar(x)
    gens = (q, p1, p2, p3)
    return _fromTerms(_polyTerms(x.numer), gens) / _fromTerms(_polyTerms(x.denom), gens)


def substituteParameters(x: Number, **images) -> QScalar:
    """e.g. substituteParameters(x, p3=invert(p2))"""
    unknown = set(images) - set(SYMBOLS)
    if unknown:
        raise KeyError('Unknown parameters %s' % sorted(unknown))
    x = scalar(x)
    gens = tuple(scalar(images.get(name, g)) for name, g in zip(SYMBOLS, (q, p1, p2, p3)))
    return _fromTerms(_polyTerms(x.numer), gens) / _fromTerms(_polyTerms(x.denom), gens)


def parametersIn(x: Number) -> frozenset:
    x = scalar(x)
    used = set()
    for poly in (x.numer, x.denom):
        for monom, _ in _polyTerms(poly):
            used.update(name for name, e in zip(SYMBOLS, monom) if e)
    return frozenset(used)


def _evaluatePoly(poly, values) -> Fraction:
    total = Fraction(0)
    for monom, coeff in _polyTerms(poly):
        term = coeff
        for v, e in zip(values, monom):
            if e:
                term *= v ** e
        total += term
    return total


def evaluate(x: Number, assignment: NumericAssignment = None, **overrides) -> Fraction:
    """Exact value of the canonical form - only a genuine pole of the reduced fraction is an error

    overrides, e.g. q=1, bypass the deformation guard of NumericAssignment so the classical limit of a
    polynomial form like q_integer(4) can be read off directly
    """
    assignment = assignment or NumericAssignment()
    named = dict(zip(SYMBOLS, assignment.values()))
    for name, v in overrides.items():
        if name not in named:
            raise KeyError('Unknown parameter %s' % name)
        named[name] = Fraction(v)
    x = scalar(x)
    values = tuple(named[name] for name in SYMBOLS)
    denom = _evaluatePoly(x.denom, values)
    if denom == 0:
        raise PoleError('%s has a pole at %s' % (renderScalar(x), {k: str(v) for k, v in named.items()}))
    return _evaluatePoly(x.numer, values) / denom


def isLaurentMonomial(x: Number) -> bool:
    x = scalar(x)
    return len(x.numer.terms()) == 1 and len(x.denom.terms()) == 1


def _renderMonomial(coeff: Fraction, exponents, first: bool) -> str:
    factors = []
    for name, e in zip(SYMBOLS, exponents):
        if e == 1:
            factors.append(name)
        elif e:
            factors.append('%s^%s' % (name, e))
    magnitude = abs(coeff)
    if not factors:
        body = str(magnitude)
    elif magnitude == 1:
        body = '*'.join(factors)
    else:
        body = '%s*%s' % (magnitude, '*'.join(factors))
    if first:
        return ('-' if coeff < 0 else '') + body
    return (' - ' if coeff < 0 else ' + ') + body


def _renderTerms(terms) -> str:
    if not terms:
        return '0'
    return ''.join(_renderMonomial(c, e, i == 0) for i, (e, c) in enumerate(terms))


def renderScalar(x: Number) -> str:
    """Canonical text, e.g. q^2 + 1 + q^-2 or (q)/(q^2 - 1) - parses back to the same scalar"""
    x = scalar(x)
    numer = _polyTerms(x.numer)
    denom = _polyTerms(x.denom)
    if len(denom) == 1:
        (dMonom, dCoeff), = denom
        laurent = [(tuple(a - b for a, b in zip(monom, dMonom)), c / dCoeff) for monom, c in numer]
        return _renderTerms(laurent)
    return '(%s)/(%s)' % (_renderTerms([(m, c) for m, c in numer]), _renderTerms([(m, c) for m, c in denom]))


@Pipeable
def Render(x):
    render = getattr(x, 'render', None)
    return render() if callable(render) else renderScalar(x)
