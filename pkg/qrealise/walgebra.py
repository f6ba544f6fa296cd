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


"""The oscillator algebra W - one q-boson, two fermion modes and an abstract U_q(gl(1/1)) factor

Every monomial is stored in the fixed order

    a+^ap  t^t  a^a  b1+^bp1 b1^b1  b2+^bp2 b2^b2  e32^e32 k2^k2 k3^k3 e23^e23

with t = q^x, and with a+ a pairs always eliminated in favour of t, i.e. min(ap, a) == 0. The boson
relations used are

    t a+ = q a+ t,    t a = q^-1 a t,    a+ a = (t - t^-1)/(q - q^-1),    a a+ = (q t - q^-1 t^-1)/(q - q^-1)

Bosons are even and commute with everything else. Odd factors anticommute across sectors.
"""

from functools import lru_cache
from typing import NamedTuple, Dict, Tuple

from ._core import MixedParityError, UnknownSymbolError, SubstitutionError, NamedEnum
from .pipeable import Pipeable
from .scalarfield import QScalar, ZERO, ONE, QDIFF, q, p2, p3, qPow, scalar, isScalar, renderScalar, \
    parametersIn, substituteParameters


__all__ = [
    'WMonomial', 'WElement', 'Gl11Realization', 'TRIVIAL', 'FERMIONIC', 'W_SYMBOLS',
    'generator', 'w_mul', 'w_add', 'w_sub', 'w_neg', 'w_scale', 'w_pow', 'w_one', 'w_zero', 'w_scalar',
    'supercommutator', 'parity', 'isHomogeneous', 'substitute_gl11', 'projectModeTwoVacuum',
    'fermionModesUsed', 'parametersUsed', 'w_substituteParameters', 'creationDegree', 'renderWElement', 'Substitute', 'SuperComm',
]


class WMonomial(NamedTuple):
    ap: int = 0
    t: int = 0
    a: int = 0
    bp1: int = 0
    b1: int = 0
    bp2: int = 0
    b2: int = 0
    e32: int = 0
    k2: int = 0
    k3: int = 0
    e23: int = 0

    @property
    def parity(self) -> int:
        return (self.bp1 + self.b1 + self.bp2 + self.b2 + self.e32 + self.e23) % 2

    @property
    def boson(self):
        return (self.ap, self.t, self.a)

    @property
    def mode1(self):
        return (self.bp1, self.b1)

    @property
    def mode2(self):
        return (self.bp2, self.b2)

    @property
    def gl11(self):
        return (self.e32, self.k2, self.k3, self.e23)

    @property
    def hasGl11(self) -> bool:
        return any(self.gl11)


_UNIT = WMonomial()


def _monomialFrom(boson, mode1, mode2, gl11) -> WMonomial:
    return WMonomial(*boson, *mode1, *mode2, *gl11)


class Gl11Realization(NamedEnum):
    pass

TRIVIAL = Gl11Realization('trivial')
FERMIONIC = Gl11Realization('fermionic')


class WElement(object):
    """Immutable finite linear combination of WMonomials with nonzero QScalar coefficients"""
    __slots__ = ['_terms', '_hash']

    def __init__(self, terms=None):
        cleaned = {}
        for m, c in (terms or {}).items():
            c = scalar(c)
            if c:
                cleaned[m] = c
        self._terms = cleaned
        self._hash = None

    def terms(self):
        # deterministic order, identity first
        return sorted(self._terms.items(), key=lambda mc: _monomialSortKey(mc[0]))

    def monomials(self):
        return frozenset(self._terms)

    def coeff(self, m: WMonomial) -> QScalar:
        return self._terms.get(m, ZERO)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isScalar(other):
            other = w_scalar(other)
        if not isinstance(other, WElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        return w_add(self, other)

    def __radd__(self, other):
        return w_add(other, self)

    def __sub__(self, other):
        return w_sub(self, other)

    def __rsub__(self, other):
        return w_sub(other, self)

    def __neg__(self):
        return w_neg(self)

    def __mul__(self, other):
        if isScalar(other):
            return w_scale(self, other)
        return w_mul(self, other)

    def __rmul__(self, other):
        return w_scale(self, other)

    def __truediv__(self, other):
        if not isScalar(other):
            return NotImplemented
        return w_scale(self, ONE / scalar(other))

    def __pow__(self, n):
        return w_pow(self, n)

    def render(self) -> str:
        return renderWElement(self)

    def __repr__(self):
        return 'WElement(%s)' % renderWElement(self)


def _asW(x) -> WElement:
    if isinstance(x, WElement):
        return x
    if isScalar(x):
        return w_scalar(x)
    raise TypeError('Expected a WElement or scalar but got %r' % (x,))


def w_zero() -> WElement:
    return WElement()


def w_one() -> WElement:
    return WElement({_UNIT: ONE})


def w_scalar(c) -> WElement:
    return WElement({_UNIT: scalar(c)})


def _accumulate(acc: Dict[WMonomial, QScalar], m: WMonomial, c: QScalar):
    total = acc.get(m, ZERO) + c
    if total:
        acc[m] = total
    else:
        acc.pop(m, None)


def w_add(x, y) -> WElement:
    x, y = _asW(x), _asW(y)
    acc = dict(x._terms)
    for m, c in y._terms.items():
        _accumulate(acc, m, c)
    return WElement(acc)


def w_scale(x, c) -> WElement:
    x, c = _asW(x), scalar(c)
    if not c:
        return WElement()
    return WElement({m: c * v for m, v in x._terms.items()})


def w_neg(x) -> WElement:
    return w_scale(x, -ONE)


def w_sub(x, y) -> WElement:
    return w_add(x, w_neg(y))


def w_mul(x, y) -> WElement:
    """The normal-ordered product xy"""
    x, y = _asW(x), _asW(y)
    acc = {}
    for m1, c1 in x._terms.items():
        for m2, c2 in y._terms.items():
            c12 = c1 * c2
            for m, c in _monomialProduct(m1, m2):
                _accumulate(acc, m, c12 * c)
    return WElement(acc)


def w_pow(x, n: int) -> WElement:
    if n < 0:
        raise ValueError('w_pow needs n >= 0 (use t^-1, k2inv or k3inv for inverses), got %s' % n)
    answer = w_one()
    for _ in range(n):
        answer = w_mul(answer, x)
    return answer


# boson sector

def _bosonNormal(m, k, l):
    # a+^m t^k a^l as {(m', k', l'): coeff} with min(m', l') == 0
    if m == 0 or l == 0:
        return {(m, k, l): ONE}
    # a+^m t^k a^l = q^-k a+^(m-1) t^k (a+ a) a^(l-1)
    c = qPow(-k) / QDIFF
    acc = {}
    for key, v in _bosonNormal(m - 1, k + 1, l - 1).items():
        acc[key] = acc.get(key, ZERO) + c * v
    for key, v in _bosonNormal(m - 1, k - 1, l - 1).items():
        acc[key] = acc.get(key, ZERO) - c * v
    return {key: v for key, v in acc.items() if v}


@lru_cache(maxsize=None)
def _bosonProduct(b1, b2) -> Tuple:
    (m1, k1, l1), (m2, k2, l2) = b1, b2
    if l1 == 0:
        # t^k1 a+^m2 = q^(k1 m2) a+^m2 t^k1
        c = qPow(k1 * m2)
        return tuple((key, c * v) for key, v in _bosonNormal(m1 + m2, k1 + k2, l2).items())
    if m2 == 0:
        # a^l1 t^k2 = q^(l1 k2) t^k2 a^l1
        c = qPow(l1 * k2)
        return tuple((key, c * v) for key, v in _bosonNormal(m1, k1 + k2, l1 + l2).items())
    # a a+ = (q t - q^-1 t^-1)/(q - q^-1)
    acc = {}
    left, right = (m1, k1, l1 - 1), (m2 - 1, k2, l2)
    for shift, c in ((1, q / QDIFF), (-1, -ONE / (q * QDIFF))):
        for mid, v1 in _bosonProduct(left, (0, shift, 0)):
            for key, v2 in _bosonProduct(mid, right):
                acc[key] = acc.get(key, ZERO) + c * v1 * v2
    return tuple((key, v) for key, v in acc.items() if v)


# fermion sector - (i, j) encodes b+^i b^j

@lru_cache(maxsize=None)
def _fermionProduct(f1, f2) -> Tuple:
    (i1, j1), (i2, j2) = f1, f2
    if j1 == 0:
        return () if i1 + i2 >= 2 else (((i1 + i2, j2), ONE),)
    if i2 == 0:
        return () if j1 + j2 >= 2 else (((i1, j1 + j2), ONE),)
    # b b+ = 1 - b+ b
    if i1 == 0 and j2 == 0:
        return (((0, 0), ONE), ((1, 1), -ONE))
    return (((i1, j2), ONE),)


# gl(1/1) sector - (eps, alpha, beta, delta) encodes e32^eps k2^alpha k3^beta e23^delta

@lru_cache(maxsize=None)
def _gl11Product(g1, g2) -> Tuple:
    (e1, a1, b1, d1), (e2, a2, b2, d2) = g1, g2
    if d1 and e2:
        # e23 e32 = -e32 e23 + (k2 k3 - k2^-1 k3^-1)/(q - q^-1)
        answer = []
        if not e1 and not d2:
            answer.append(((1, a1 + a2, b1 + b2, 1), -qPow(b1 - a1) * qPow(b2 - a2)))
        answer.append(((e1, a1 + a2 + 1, b1 + b2 + 1, d2), ONE / QDIFF))
        answer.append(((e1, a1 + a2 - 1, b1 + b2 - 1, d2), -ONE / QDIFF))
        return tuple(answer)
    if d1:
        # e23 k2^a k3^b = q^(b - a) k2^a k3^b e23
        return () if d2 else (((e1, a1 + a2, b1 + b2, 1), qPow(b2 - a2)),)
    if e2:
        # k2^a k3^b e32 = q^(b - a) e32 k2^a k3^b
        return () if e1 else (((1, a1 + a2, b1 + b2, d2), qPow(b1 - a1)),)
    return (((e1, a1 + a2, b1 + b2, d2), ONE),)


def _sectorParity(pair):
    return sum(pair) % 2


@lru_cache(maxsize=None)
def _monomialProduct(m1: WMonomial, m2: WMonomial) -> Tuple:
    # B1 F1 F2 G1 . B2 F1' F2' G2  ->  B1 B2 . F1 F1' . F2 F2' . G1 G2
    pG1 = (m1.e32 + m1.e23) % 2
    pF1b, pF2a, pF2b = _sectorParity(m2.mode1), _sectorParity(m1.mode2), _sectorParity(m2.mode2)
    sign = -1 if (pG1 * (pF1b + pF2b) + pF2a * pF1b) % 2 else 1
    answer = {}
    for g, cg in _gl11Product(m1.gl11, m2.gl11):
        for f2, c2 in _fermionProduct(m1.mode2, m2.mode2):
            for f1, c1 in _fermionProduct(m1.mode1, m2.mode1):
                for b, cb in _bosonProduct(m1.boson, m2.boson):
                    m = _monomialFrom(b, f1, f2, g)
                    answer[m] = answer.get(m, ZERO) + sign * cg * c2 * c1 * cb
    return tuple((m, c) for m, c in answer.items() if c)


# generators

_GENERATORS = {
    'a+': WMonomial(ap=1),
    'a': WMonomial(a=1),
    't': WMonomial(t=1),
    'tinv': WMonomial(t=-1),
    'b1+': WMonomial(bp1=1),
    'b1': WMonomial(b1=1),
    'b2+': WMonomial(bp2=1),
    'b2': WMonomial(b2=1),
    'e23': WMonomial(e23=1),
    'e32': WMonomial(e32=1),
    'k2': WMonomial(k2=1),
    'k2inv': WMonomial(k2=-1),
    'k3': WMonomial(k3=1),
    'k3inv': WMonomial(k3=-1),
}
_ALIASES = {'b+': 'b1+', 'b': 'b1', 't^-1': 'tinv', 'k2^-1': 'k2inv', 'k3^-1': 'k3inv'}

W_SYMBOLS = tuple(_GENERATORS) + tuple(_ALIASES)
INVERTIBLE = {'t': 'tinv', 'tinv': 't', 'k2': 'k2inv', 'k2inv': 'k2', 'k3': 'k3inv', 'k3inv': 'k3'}


def generator(name: str) -> WElement:
    name = _ALIASES.get(name, name)
    try:
        return WElement({_GENERATORS[name]: ONE})
    except KeyError:
        raise UnknownSymbolError('"%s" is not a generator of W (expected one of %s)' % (name, ', '.join(_GENERATORS)))


# grading

def isHomogeneous(x) -> bool:
    return len({m.parity for m in _asW(x)._terms}) <= 1


def parity(x) -> int:
    """0 (even) or 1 (odd) - the zero element counts as even"""
    parities = {m.parity for m in _asW(x)._terms}
    if len(parities) > 1:
        raise MixedParityError('%s has both even and odd monomials' % renderWElement(x))
    return parities.pop() if parities else 0


def supercommutator(x, y) -> WElement:
    """xy - (-1)^(|x||y|) yx"""
    sign = -1 if parity(x) * parity(y) else 1
    return w_sub(w_mul(x, y), w_scale(w_mul(y, x), sign))


# subalgebra substitution

def _fermionicImage(name) -> WElement:
    n2 = WElement({WMonomial(bp2=1, b2=1): ONE})
    one = w_one()
    bracket = (p2 * p3 - ONE / (p2 * p3)) / QDIFF          # [lambda2 + lambda3]
    if name == 'e23':
        return generator('b2+')
    if name == 'e32':
        return w_scale(generator('b2'), bracket)
    grade = {'k2': q, 'k2inv': ONE / q, 'k3': ONE / q, 'k3inv': q}[name]
    pre = {'k2': p2, 'k2inv': ONE / p2, 'k3': p3, 'k3inv': ONE / p3}[name]
    # p (b2 b2+ + grade b2+ b2)
    return w_scale(w_add(w_sub(one, n2), w_scale(n2, grade)), pre)


@lru_cache(maxsize=None)
def _gl11Image(g, realization: str) -> WElement:
    e32, k2, k3, e23 = g
    if realization == TRIVIAL.name:
        if e32 or e23:
            return w_zero()
        # k2 -> p2, k3 -> p2^-1
        return w_scalar(p2 ** (k2 - k3) if k2 >= k3 else ONE / p2 ** (k3 - k2))
    answer = w_one()
    factors = [('e32', e32), ('k2' if k2 >= 0 else 'k2inv', abs(k2)), ('k3' if k3 >= 0 else 'k3inv', abs(k3)), ('e23', e23)]
    for name, n in factors:
        for _ in range(n):
            answer = w_mul(answer, _fermionicImage(name))
    return answer


def _realizationName(r) -> str:
    name = r.name if isinstance(r, Gl11Realization) else str(r)
    if name not in (TRIVIAL.name, FERMIONIC.name):
        raise SubstitutionError('Unknown gl(1/1) realization "%s" (expected trivial or fermionic)' % name)
    return name


def substitute_gl11(x, r) -> WElement:
    """Replaces every e32^eps k2^alpha k3^beta e23^delta factor by its image under r and re-normal-orders"""
    x, name = _asW(x), _realizationName(r)
    acc = {}
    for m, c in x._terms.items():
        if not m.hasGl11:
            _accumulate(acc, m, c)
            continue
        if name == FERMIONIC.name and any(m.mode2):
            raise SubstitutionError('Mode 2 is occupied in %s, it is reserved for the fermionic image' % renderWElement(WElement({m: c})))
        rest = WElement({m._replace(e32=0, k2=0, k3=0, e23=0): c})
        for m2, c2 in w_mul(rest, _gl11Image(m.gl11, name))._terms.items():
            _accumulate(acc, m2, c2)
    return WElement(acc)


def projectModeTwoVacuum(x) -> WElement:
    """Keeps the monomials with no mode-2 factor"""
    return WElement({m: c for m, c in _asW(x)._terms.items() if not any(m.mode2)})


# structure queries

def fermionModesUsed(x) -> frozenset:
    used = set()
    for m in _asW(x)._terms:
        if any(m.mode1): used.add(1)
        if any(m.mode2): used.add(2)
    return frozenset(used)


def parametersUsed(x) -> frozenset:
    """Which of p1, p2, p3 occur in any coefficient"""
    used = set()
    for c in _asW(x)._terms.values():
        used.update(parametersIn(c))
    used.discard('q')
    return frozenset(used)


def creationDegree(x) -> int:
    """The largest power of a+ in x - the most a single application can raise the boson number by"""
    return max((m.ap for m in _asW(x)._terms), default=0)


# rendering

def _monomialSortKey(m: WMonomial):
    # identity first, then by total degree, then by the stored order
    degree = m.ap + abs(m.t) + m.a + m.bp1 + m.b1 + m.bp2 + m.b2 + m.e32 + abs(m.k2) + abs(m.k3) + m.e23
    return (degree, tuple(-v for v in m))


def _power(name, n):
    if n == 0:
        return []
    return [name if n == 1 else '%s^%s' % (name, n)]


def renderMonomial(m: WMonomial) -> str:
    factors = _power('a+', m.ap) + _power('t', m.t) + _power('a', m.a)
    factors += _power('b+', m.bp1) + _power('b', m.b1) + _power('b2+', m.bp2) + _power('b2', m.b2)
    factors += _power('e32', m.e32)
    for name, e in (('k2', m.k2), ('k3', m.k3)):
        factors += _power(name, e) if e >= 0 else _power(name + 'inv', -e)
    factors += _power('e23', m.e23)
    return '*'.join(factors)


def _isSingleTerm(c: QScalar) -> bool:
    return len(c.numer.terms()) == 1 and len(c.denom.terms()) == 1


def _renderTerm(c: QScalar, word: str, first: bool) -> str:
    negative = _isSingleTerm(c) and renderScalar(c).startswith('-')
    magnitude = -c if negative else c
    text = renderScalar(magnitude)
    if not word:
        body = text
    elif magnitude == 1:
        body = word
    elif _isSingleTerm(magnitude) or text.startswith('('):
        body = '%s*%s' % (text, word)
    else:
        body = '(%s)*%s' % (text, word)
    if first:
        return ('-' if negative else '') + body
    return (' - ' if negative else ' + ') + body


def renderWElement(x) -> str:
    """e.g. 1 - b+*b, or (q^2*t - t^-1)/(q^2 - 1) when every coefficient shares one non-monomial denominator"""
    terms = _asW(x).terms()
    if not terms:
        return '0'
    denoms = {c.denom for _, c in terms}
    if len(terms) > 1 and len(denoms) == 1:
        (denom,) = denoms
        if len(denom.terms()) > 1:
            d = ONE * denom
            numerators = [(m, c * d) for m, c in terms]
            inner = ''.join(_renderTerm(c, renderMonomial(m), i == 0) for i, (m, c) in enumerate(numerators))
            return '(%s)/(%s)' % (inner, renderScalar(d))
    return ''.join(_renderTerm(c, renderMonomial(m), i == 0) for i, (m, c) in enumerate(terms))


@Pipeable
def Substitute(x, r):
    return substitute_gl11(x, r)


@Pipeable
def SuperComm(x, y):
    return supercommutator(x, y)


def w_substituteParameters(x, **images) -> WElement:
    """Maps every coefficient through scalarfield.substituteParameters, e.g. p3=1/p2"""
    acc = {}
    for m, c in _asW(x)._terms.items():
        _accumulate(acc, m, substituteParameters(c, **images))
    return WElement(acc)
