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


"""The abstract quantum superalgebra U_q(gl(2/1))

Words are tuples of generator names. Inverse Cartan generators are the letters K1inv, K2inv, K3inv, so
K1^2 is the word ('K1', 'K1'). E13 and E31 are derived:

    E13 = E12 E23 - q^-1 E23 E12
    E31 = -E21 E32 + q^-1 E32 E21

Straightening moves a generator g to the right of E12^N E13^M, leaving E12^N' E13^M' followed by a word
in the parabolic subalgebra generated by E21, E23, E32 and the K's. It is done twice - once by composing
closed forms for g E12^n and g E13^n (lemma), and once by single swaps using only the n = 1 rules
(the oracle) - and the two are compared.
"""

import logging
from collections import defaultdict
from functools import lru_cache
from typing import NamedTuple, Tuple

from ._core import UnknownSymbolError
from .pipeable import Pipeable
from .report import Check, Report
from .scalarfield import QScalar, ZERO, ONE, QDIFF, qPow, q_integer, scalar, isScalar, renderScalar


__all__ = [
    'U_SYMBOLS', 'ODD', 'A0_SYMBOLS', 'UWord', 'UElement', 'Relation', 'StraightenTerm', 'RELATION_FAMILIES',
    'LEMMA_PAIRS', 'E_SYMBOLS', 'K_SYMBOLS', 'uGenerator', 'uWord', 'comm', 'acomm', 'isK', 'renderWord', 'wordParity', 'weight', 'relation_set', 'lemma', 'oracle_lemma',
    'straighten', 'oracle_straighten', 'canonicalWord', 'verify_lemma', 'verify_straighten', 'Straighten',
]


_logger = logging.getLogger(__name__)


K_SYMBOLS = ('K1', 'K2', 'K3', 'K1inv', 'K2inv', 'K3inv')
E_SYMBOLS = ('E12', 'E21', 'E23', 'E32', 'E13', 'E31')
U_SYMBOLS = E_SYMBOLS + K_SYMBOLS
ODD = frozenset(['E23', 'E32', 'E13', 'E31'])
A0_SYMBOLS = frozenset(['E21', 'E23', 'E32']) | frozenset(K_SYMBOLS)
_INDICES = {'E12': (1, 2), 'E21': (2, 1), 'E23': (2, 3), 'E32': (3, 2), 'E13': (1, 3), 'E31': (3, 1)}

UWord = Tuple[str, ...]


def _kIndexAndSign(k: str):
    return int(k[1]), (-1 if k.endswith('inv') else 1)


def isK(letter: str) -> bool:
    return letter in K_SYMBOLS


def weight(k: str, e: str) -> int:
    """The exponent w in K E = q^w E K, i.e. s (delta_ij - delta_ik) for K = K_i^s and E = E_jk"""
    i, s = _kIndexAndSign(k)
    j, l = _INDICES[e]
    return s * ((i == j) - (i == l))


def wordParity(word: UWord) -> int:
    return sum(1 for letter in word if letter in ODD) % 2


def _checkSymbol(name):
    if name not in U_SYMBOLS:
        raise UnknownSymbolError('"%s" is not a generator of U_q(gl(2/1)) (expected one of %s)' % (name, ', '.join(U_SYMBOLS)))
    return name


def canonicalWord(word: UWord) -> UWord:
    """Merges every maximal run of K letters into K1^e1 K2^e2 K3^e3 (inverse letters for negative exponents)"""
    answer, run = [], [0, 0, 0]

    def flush():
        for i, e in enumerate(run):
            answer.extend(['K%d' % (i + 1) if e > 0 else 'K%dinv' % (i + 1)] * abs(e))
        run[:] = [0, 0, 0]

    for letter in word:
        if isK(letter):
            i, s = _kIndexAndSign(letter)
            run[i - 1] += s
        else:
            flush()
            answer.append(letter)
    flush()
    return tuple(answer)


def _collect(pairs):
    # [(coeff, word)] -> {canonical word: coeff} without zeros
    acc = defaultdict(lambda: ZERO)
    for c, word in pairs:
        acc[canonicalWord(word)] += c
    return {w: c for w, c in acc.items() if c}


def renderWord(word: UWord) -> str:
    if not word:
        return '1'
    parts, i = [], 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        parts.append(word[i] if j - i == 1 else '%s^%d' % (word[i], j - i))
        i = j
    return '*'.join(parts)


class UElement(object):
    """A formal linear combination of words - no relations are applied"""
    __slots__ = ['_terms']

    def __init__(self, terms=None):
        acc = defaultdict(lambda: ZERO)
        for word, c in (terms or {}).items():
            acc[tuple(word)] += scalar(c)
        self._terms = {w: c for w, c in acc.items() if c}

    def terms(self):
        return sorted(self._terms.items(), key=lambda wc: (len(wc[0]), wc[0]))

    def words(self):
        return list(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isScalar(other):
            other = UElement({(): other})
        if not isinstance(other, UElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        other = _asU(other)
        terms = dict(self._terms)
        for w, c in other._terms.items():
            terms[w] = terms.get(w, ZERO) + c
        return UElement(terms)

    __radd__ = __add__

    def __neg__(self):
        return UElement({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_asU(other))

    def __rsub__(self, other):
        return _asU(other) - self

    def __mul__(self, other):
        if isScalar(other):
            c = scalar(other)
            return UElement({w: c * v for w, v in self._terms.items()})
        other = _asU(other)
        terms = defaultdict(lambda: ZERO)
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                terms[w1 + w2] += c1 * c2
        return UElement(terms)

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        if not isScalar(other):
            return NotImplemented
        return self * (ONE / scalar(other))

    def __pow__(self, n: int):
        if len(self._terms) == 1:
            (word, c), = self._terms.items()
            if n >= 2 and len(word) == 1 and word[0] in ODD:
                return UElement()
            if n < 0 and c == 1 and all(isK(letter) for letter in word):
                return UElement({tuple(_inverse(letter) for letter in reversed(word)) * (-n): ONE})
        if n < 0:
            raise ValueError('Only K words have negative powers')
        answer = UElement({(): ONE})
        for _ in range(n):
            answer = answer * self
        return answer

    @property
    def parity(self):
        parities = {wordParity(w) for w in self._terms}
        return parities.pop() if len(parities) == 1 else (0 if not parities else None)

    def render(self) -> str:
        terms = self.terms()
        if not terms:
            return '0'
        out = []
        for i, (w, c) in enumerate(terms):
            text = renderScalar(c)
            single = len(c.numer.terms()) == 1 and len(c.denom.terms()) == 1
            negative = single and text.startswith('-')
            if negative:
                text = text[1:]
            if w == ():
                body = text
            elif c == 1 or c == -1:
                body = renderWord(w)
            elif single or text.startswith('('):
                body = '%s*%s' % (text, renderWord(w))
            else:
                body = '(%s)*%s' % (text, renderWord(w))
            out.append((('-' if negative else '') if i == 0 else (' - ' if negative else ' + ')) + body)
        return ''.join(out)

    def __repr__(self):
        return 'UElement(%s)' % self.render()


def _inverse(letter: str) -> str:
    return letter[:-3] if letter.endswith('inv') else letter + 'inv'


def _asU(x) -> UElement:
    if isinstance(x, UElement):
        return x
    if isScalar(x):
        return UElement({(): scalar(x)})
    raise TypeError('Expected a UElement or scalar but got %r' % (x,))


def uGenerator(name: str) -> UElement:
    return UElement({(_checkSymbol(name),): ONE})


def uWord(*letters) -> UElement:
    return UElement({tuple(_checkSymbol(l) for l in letters): ONE})


def comm(x, y) -> UElement:
    return _asU(x) * _asU(y) - _asU(y) * _asU(x)


def acomm(x, y) -> UElement:
    return _asU(x) * _asU(y) + _asU(y) * _asU(x)


# the defining relations

class Relation(NamedTuple):
    name: str
    family: str
    lhs: UElement
    rhs: UElement

    @property
    def words(self):
        return self.lhs.words() + self.rhs.words()


RELATION_FAMILIES = (
    'K-commutation', 'K-weight', 'commuting', 'cartan-even', 'cartan-odd', 'odd-square', 'serre-E12-E13',
    'serre-E21-E31', 'definition',
)


@lru_cache(maxsize=1)
def _relations():
    E12, E21, E23, E32, E13, E31 = (uGenerator(n) for n in E_SYMBOLS)
    zero = UElement()
    answer = []
    for i, x in enumerate(K_SYMBOLS):
        for y in K_SYMBOLS[i + 1:]:
            if y != _inverse(x):
                answer.append(Relation('%s*%s = %s*%s' % (x, y, y, x), 'K-commutation', uWord(x, y), uWord(y, x)))
    for k in ('K1', 'K2', 'K3'):
        kinv = _inverse(k)
        answer.append(Relation('%s*%s = 1' % (k, kinv), 'K-commutation', uWord(k, kinv), UElement({(): ONE})))
        answer.append(Relation('%s*%s = 1' % (kinv, k), 'K-commutation', uWord(kinv, k), UElement({(): ONE})))
    for k in ('K1', 'K2', 'K3'):
        for e in ('E12', 'E21', 'E23', 'E32'):
            w = weight(k, e)
            rhs = uWord(e, k) * qPow(w)
            factor = '' if w == 0 else renderScalar(qPow(w)) + '*'
            answer.append(Relation('%s*%s = %s%s*%s' % (k, e, factor, e, k), 'K-weight', uWord(k, e), rhs))
    answer.append(Relation('[E12,E32] = 0', 'commuting', comm(E12, E32), zero))
    answer.append(Relation('[E21,E23] = 0', 'commuting', comm(E21, E23), zero))
    answer.append(Relation(
        '[E12,E21] = (K1*K2inv - K1inv*K2)/(q - q^-1)', 'cartan-even', comm(E12, E21),
        (uWord('K1', 'K2inv') - uWord('K1inv', 'K2')) / QDIFF
    ))
    answer.append(Relation(
        '{E23,E32} = (K2*K3 - K2inv*K3inv)/(q - q^-1)', 'cartan-odd', acomm(E23, E32),
        (uWord('K2', 'K3') - uWord('K2inv', 'K3inv')) / QDIFF
    ))
    answer.append(Relation('E23^2 = 0', 'odd-square', E23 * E23, zero))
    answer.append(Relation('E32^2 = 0', 'odd-square', E32 * E32, zero))
    answer.append(Relation('E12*E13 - q*E13*E12 = 0', 'serre-E12-E13', E12 * E13 - E13 * E12 * qPow(1), zero))
    answer.append(Relation('E21*E31 - q*E31*E21 = 0', 'serre-E21-E31', E21 * E31 - E31 * E21 * qPow(1), zero))
    answer.append(Relation('E13 = E12*E23 - q^-1*E23*E12', 'definition', E13, E12 * E23 - E23 * E12 * qPow(-1)))
    answer.append(Relation('E31 = -E21*E32 + q^-1*E32*E21', 'definition', E31, -(E21 * E32) + E32 * E21 * qPow(-1)))
    return tuple(answer)


def relation_set():
    """Every defining relation as (lhs, rhs) pairs, families in a fixed order, then the E13 and E31 definitions"""
    return list(_relations())


# straightening identities in closed form

LEMMA_PAIRS = (
    ('E13', 'E12'), ('E23', 'E12'), ('E23', 'E13'), ('E32', 'E13'), ('E21', 'E12'),
    ('E21', 'E13'), ('E31', 'E12'), ('E31', 'E13'), ('E32', 'E23'),
)


def _odd(n):
    return n % 2 == 1


def lemma(g: str, base: str, n: int):
    """g base^n as [(coeff, word)] by the closed forms, base powers kept as formal letters"""
    if n < 0:
        raise ValueError('n must be >= 0')
    p = lambda letter, k: (letter,) * k
    d = QDIFF
    sign = ONE if n % 2 == 0 else -ONE
    if g == 'E12' and base in ('E12', 'E13'):
        terms = [(ONE, ('E12',) + p(base, n))]
    elif (g, base) == ('E13', 'E12'):
        terms = [(qPow(-n), p('E12', n) + ('E13',))]
    elif (g, base) == ('E32', 'E12'):
        terms = [(ONE, p('E12', n) + ('E32',))]
    elif (g, base) == ('E23', 'E12'):
        terms = [(qPow(n), p('E12', n) + ('E23',))]
        if n:
            terms.append((-qPow(1) * q_integer(n), p('E12', n - 1) + ('E13',)))
    elif (g, base) == ('E23', 'E13'):
        terms = [(sign * qPow(n), p('E13', n) + ('E23',))]
    elif (g, base) == ('E32', 'E13'):
        terms = [(sign, p('E13', n) + ('E32',))]
        if _odd(n):
            terms.append((qPow(-n), ('E12',) + p('E13', n - 1) + ('K2', 'K3')))
    elif (g, base) == ('E21', 'E12'):
        terms = [(ONE, p('E12', n) + ('E21',))]
        if n:
            terms.append((-q_integer(n) * qPow(n - 1) / d, p('E12', n - 1) + ('K1', 'K2inv')))
            terms.append((q_integer(n) * qPow(1 - n) / d, p('E12', n - 1) + ('K1inv', 'K2')))
    elif (g, base) == ('E21', 'E13'):
        terms = [(ONE, p('E13', n) + ('E21',))]
        if _odd(n):
            terms.append((ONE, p('E13', n - 1) + ('E23', 'K1inv', 'K2')))
    elif (g, base) == ('E31', 'E12'):
        terms = [(ONE, p('E12', n) + ('E31',))]
        if n:
            terms.append((qPow(n - 2) * q_integer(n), p('E12', n - 1) + ('K1', 'K2inv', 'E32')))
    elif (g, base) == ('E31', 'E13'):
        terms = [(sign, p('E13', n) + ('E31',))]
        if _odd(n):
            terms.append((qPow(-1) / d, p('E13', n - 1) + ('K1', 'K3')))
            terms.append((-qPow(-1) / d, p('E13', n - 1) + ('K1inv', 'K3inv')))
    elif (g, base) == ('E32', 'E23'):
        terms = [(sign, p('E23', n) + ('E32',))]
        if _odd(n):
            terms.append((ONE / d, p('E23', n - 1) + ('K2', 'K3')))
            terms.append((-ONE / d, p('E23', n - 1) + ('K2inv', 'K3inv')))
    elif isK(g) and base in ('E12', 'E13', 'E23'):
        terms = [(qPow(n * weight(g, base)), p(base, n) + (g,))]
    else:
        raise UnknownSymbolError('No straightening identity for %s past %s' % (g, base))
    return sorted([(c, w) for w, c in _collect(terms).items()], key=lambda cw: cw[1])


# single swaps - the n = 1 rules, written out once and never derived from the closed forms

def _baseRules():
    d = QDIFF
    qinv = qPow(-1)
    return {
        ('E13', 'E12'): [(qinv, ('E12', 'E13'))],
        ('E23', 'E12'): [(qPow(1), ('E12', 'E23')), (-qPow(1), ('E13',))],
        ('E23', 'E13'): [(-qPow(1), ('E13', 'E23'))],
        ('E32', 'E12'): [(ONE, ('E12', 'E32'))],
        ('E32', 'E13'): [(-ONE, ('E13', 'E32')), (qinv, ('E12', 'K2', 'K3'))],
        ('E21', 'E12'): [(ONE, ('E12', 'E21')), (-ONE / d, ('K1', 'K2inv')), (ONE / d, ('K1inv', 'K2'))],
        ('E21', 'E13'): [(ONE, ('E13', 'E21')), (ONE, ('E23', 'K1inv', 'K2'))],
        ('E31', 'E12'): [(ONE, ('E12', 'E31')), (qinv, ('K1', 'K2inv', 'E32'))],
        ('E31', 'E13'): [(-ONE, ('E13', 'E31')), (qinv / d, ('K1', 'K3')), (-qinv / d, ('K1inv', 'K3inv'))],
        ('E32', 'E23'): [(-ONE, ('E23', 'E32')), (ONE / d, ('K2', 'K3')), (-ONE / d, ('K2inv', 'K3inv'))],
    }

_BASE_RULES = None


def _swap(x, y):
    global _BASE_RULES
    if _BASE_RULES is None:
        _BASE_RULES = _baseRules()
    if isK(x):
        return [(qPow(weight(x, y)), (y, x))]
    return _BASE_RULES[(x, y)]


def _rewrite(word: UWord, creators, nilpotentE13: bool):
    # [(coeff, word)] with every creator to the left of every other letter and E12 before E13
    rank = {c: i for i, c in enumerate(creators)}
    done = defaultdict(lambda: ZERO)
    pending = [(ONE, tuple(word))]
    while pending:
        c, w = pending.pop()
        for i in range(len(w) - 1):
            x, y = w[i], w[i + 1]
            if y not in rank:
                continue
            if x in rank:
                if nilpotentE13 and x == y == 'E13':
                    break
                if rank[x] <= rank[y]:
                    continue
            for c2, replacement in _swap(x, y):
                pending.append((c * c2, w[:i] + replacement + w[i + 2:]))
            break
        else:
            done[w] += c
    return [(c, w) for w, c in done.items() if c]


def _creatorsFor(base):
    return ('E23',) if base == 'E23' else ('E12', 'E13')


def oracle_lemma(g: str, base: str, n: int):
    """g base^n as [(coeff, word)] by single swaps, base powers not reduced"""
    if n < 0:
        raise ValueError('n must be >= 0')
    terms = _rewrite((g,) + (base,) * n, _creatorsFor(base), nilpotentE13=False)
    return sorted([(c, w) for w, c in _collect(terms).items()], key=lambda cw: cw[1])


# straightening onto the PBW states E12^N E13^M

class StraightenTerm(NamedTuple):
    N: int
    M: int
    a0word: UWord
    coeff: QScalar

    def render(self):
        state = '|%d,%d>' % (self.N, self.M)
        return '%s %s %s' % (renderScalar(self.coeff), state, renderWord(self.a0word))


def _splitPrefix(word: UWord):
    a = b = 0
    while a < len(word) and word[a] == 'E12':
        a += 1
    i = a
    while i < len(word) and word[i] == 'E13':
        b += 1
        i += 1
    return a, b, word[i:]


def _pass(s: str, a: int, b: int):
    # s E12^a E13^b as [(coeff, a', b', tail)]
    if s == 'E12':
        return [(ONE, a + 1, b, ())]
    if isK(s):
        return [(qPow(weight(s, 'E12') * a + weight(s, 'E13') * b), a, b, (s,))]
    if s == 'E13':
        return [] if b else [(qPow(-a), a, 1, ())]
    if a == 0:
        if b == 0:
            return [(ONE, 0, 0, (s,))]
        answer = []
        for c, word in lemma(s, 'E13', 1):
            a2, b2, tail = _splitPrefix(word)
            answer.append((c, a2, b2, tail))
        return answer
    answer = []
    for c, word in lemma(s, 'E12', a):
        x, _, _ = _splitPrefix(word)
        for c2, a2, b2, tail in _passWord(word[x:], 0, b):
            answer.append((c * c2, x + a2, b2, tail))
    return answer


def _passWord(word: UWord, a: int, b: int):
    states = [(ONE, a, b, ())]
    for s in reversed(word):
        nextStates = []
        for c, a1, b1, tail in states:
            for c2, a2, b2, tail2 in _pass(s, a1, b1):
                nextStates.append((c * c2, a2, b2, tail2 + tail))
        states = nextStates
    return states


def _expandE31(tail: UWord):
    # E31 = -E21 E32 + q^-1 E32 E21 so every tail lies in the parabolic subalgebra
    expanded = [(ONE, ())]
    for letter in tail:
        if letter == 'E31':
            options = [(-ONE, ('E21', 'E32')), (qPow(-1), ('E32', 'E21'))]
        else:
            options = [(ONE, (letter,))]
        expanded = [(c * c2, w + w2) for c, w in expanded for c2, w2 in options]
    return expanded


def _toStraightenTerms(states):
    acc = defaultdict(lambda: ZERO)
    for c, a, b, tail in states:
        for c2, w in _expandE31(tail):
            acc[(a, b, canonicalWord(w))] += c * c2
    return sorted(
        (StraightenTerm(a, b, w, c) for (a, b, w), c in acc.items() if c),
        key=lambda t: (t.N, t.M, len(t.a0word), t.a0word)
    )


def _checkState(g, N, M):
    _checkSymbol(g)
    if N < 0 or M not in (0, 1):
        raise ValueError('Need N >= 0 and M in {0, 1}, got N=%s, M=%s' % (N, M))


def straighten(g: str, N: int, M: int):
    """g E12^N E13^M as [StraightenTerm] by composing the closed forms"""
    _checkState(g, N, M)
    return _toStraightenTerms(_pass(g, N, M))


def oracle_straighten(g: str, N: int, M: int):
    """g E12^N E13^M as [StraightenTerm] by single swaps only"""
    _checkState(g, N, M)
    states = []
    for c, w in _rewrite((g,) + ('E12',) * N + ('E13',) * M, ('E12', 'E13'), nilpotentE13=True):
        a, b, tail = _splitPrefix(w)
        states.append((c, a, b, tail))
    return _toStraightenTerms(states)


# verification

def _difference(lhs, rhs):
    residual = dict(lhs)
    for key, c in rhs.items():
        residual[key] = residual.get(key, ZERO) - c
    return {k: c for k, c in residual.items() if c}


def verify_lemma(nmax: int) -> Report:
    """The closed forms against the single-swap oracle, every pair, n in 0..nmax"""
    report = Report('straightening identities, n <= %d' % nmax)
    for g, base in LEMMA_PAIRS:
        for n in range(nmax + 1):
            closed = {w: c for c, w in lemma(g, base, n)}
            oracle = {w: c for c, w in oracle_lemma(g, base, n)}
            residual = _difference(closed, oracle)
            name = '%s*%s^%d' % (g, base, n)
            _logger.debug('%s: %s residual terms', name, len(residual))
            report.add(Check(name, '%s/%s' % (g, base), not residual, len(residual),
                             '; '.join('%s %s' % (renderScalar(c), renderWord(w)) for w, c in sorted(residual.items()))))
    passed, failed = report.counts()
    _logger.info('lemma: %s passed, %s failed', passed, failed)
    return report


def verify_straighten(nmax: int) -> Report:
    """straighten against oracle_straighten for every generator, N in 0..nmax, M in {0, 1}"""
    report = Report('straightening onto E12^N E13^M, N <= %d' % nmax)
    for g in U_SYMBOLS:
        for M in (0, 1):
            for N in range(nmax + 1):
                closed = {(t.N, t.M, t.a0word): t.coeff for t in straighten(g, N, M)}
                oracle = {(t.N, t.M, t.a0word): t.coeff for t in oracle_straighten(g, N, M)}
                residual = _difference(closed, oracle)
                name = '%s|%d,%d>' % (g, N, M)
                _logger.debug('%s: %s residual terms', name, len(residual))
                report.add(Check(name, g, not residual, len(residual)))
    passed, failed = report.counts()
    _logger.info('straighten: %s passed, %s failed', passed, failed)
    return report


@Pipeable
def Straighten(g, N, M):
    return straighten(g, N, M)
