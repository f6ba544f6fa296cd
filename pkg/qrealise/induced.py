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


"""The module induced from a representation phi of the parabolic subalgebra A0 = <E21, E23, E32, K's>

A basis vector |N,M>(x)v stands for E12^N E13^M (x) v with N >= 0 and M in {0, 1}. act uses the closed
form action, act_oracle straightens g E12^N E13^M and pushes the leftover A0 word through phi.
"""

import logging
from collections import defaultdict
from typing import Dict, Tuple

from ._core import InvalidRepresentationError, UsageError
from .matrix import DomainMatrix, sparse, zeros, identity, diagonal, entries, column, scaled, renderEntries
from .pipeable import Pipeable
from .report import Check, Report
from .scalarfield import QScalar, ZERO, ONE, QDIFF, p1, p2, p3, q, qPow, q_integer, scalar, isScalar, renderScalar
from .uqgl21 import A0_SYMBOLS, U_SYMBOLS, UElement, relation_set, straighten, oracle_straighten, isK, \
    _kIndexAndSign, _checkSymbol


__all__ = [
    'A0Rep', 'Gl11Rep', 'InducedVector', 'trivial_gl11rep', 'fermionic_gl11rep', 'highest_weight_a0rep',
    'validate_a0rep', 'basis_state', 'act', 'act_oracle', 'act_word', 'act_element', 'weight',
    'check_relations_on_module', 'verify_induced', 'Act',
]


_logger = logging.getLogger(__name__)

GL11_SYMBOLS = ('e23', 'e32', 'k2', 'k2inv', 'k3', 'k3inv')
_A0_LETTERS = ('E21', 'E23', 'E32', 'K1', 'K2', 'K3', 'K1inv', 'K2inv', 'K3inv')


class Gl11Rep(object):
    """Matrices for e23, e32, k2^+-1, k3^+-1 on a graded space"""

    def __init__(self, matrices: Dict[str, DomainMatrix], parities: Tuple[int, ...], name=''):
        missing = [s for s in GL11_SYMBOLS if s not in matrices]
        if missing:
            raise InvalidRepresentationError('gl(1/1) representation lacks %s' % ', '.join(missing))
        self.matrices = dict(matrices)
        self.parities = tuple(parities)
        self.dim = len(self.parities)
        self.name = name

    def __repr__(self):
        return 'Gl11Rep(%s, dim=%s)' % (self.name, self.dim)


def trivial_gl11rep() -> Gl11Rep:
    """e23, e32 -> 0 and k2 = k3^-1 -> p2 on a single even vector"""
    one = lambda c: sparse(1, 1, {(0, 0): c})
    return Gl11Rep(
        {'e23': zeros(1), 'e32': zeros(1), 'k2': one(p2), 'k2inv': one(ONE / p2),
         'k3': one(ONE / p2), 'k3inv': one(p2)},
        (0,), 'trivial'
    )


def fermionic_gl11rep() -> Gl11Rep:
    """b2 mode on {|0>, |1>} with e23 -> b2+, e32 -> [lambda2 + lambda3] b2, k2 -> p2 q^n, k3 -> p3 q^-n"""
    bracket = (p2 * p3 - ONE / (p2 * p3)) / QDIFF
    return Gl11Rep(
        {
            'e23': sparse(2, 2, {(1, 0): ONE}),
            'e32': sparse(2, 2, {(0, 1): bracket}),
            'k2': diagonal([p2, p2 * q]),
            'k2inv': diagonal([ONE / p2, ONE / (p2 * q)]),
            'k3': diagonal([p3, p3 / q]),
            'k3inv': diagonal([ONE / p3, q / p3]),
        },
        (0, 1), 'fermionic'
    )


class A0Rep(object):
    """phi - matrices over QScalar for E21, E23, E32 and K_i^+-1 on a graded space V"""

    def __init__(self, matrices: Dict[str, DomainMatrix], parities: Tuple[int, ...], name=''):
        missing = [s for s in _A0_LETTERS if s not in matrices]
        if missing:
            raise InvalidRepresentationError('A0 representation lacks %s' % ', '.join(missing))
        self.matrices = dict(matrices)
        self.parities = tuple(parities)
        self.dim = len(self.parities)
        self.name = name
        for letter, m in self.matrices.items():
            if m.shape != (self.dim, self.dim):
                raise InvalidRepresentationError('%s is %sx%s on a space of dimension %s' % (letter, *m.shape, self.dim))

    def matrix(self, letter: str) -> DomainMatrix:
        if letter == 'E31':
            # E31 = -E21 E32 + q^-1 E32 E21
            E21, E32 = self.matrices['E21'], self.matrices['E32']
            return scaled(E32.matmul(E21), qPow(-1)).sub(E21.matmul(E32))
        try:
            return self.matrices[letter]
        except KeyError:
            raise InvalidRepresentationError('%s is not in A0' % letter)

    def apply(self, word, vector: Dict[int, QScalar]) -> Dict[int, QScalar]:
        """phi(word) vector, letters applied right to left"""
        for letter in reversed(word):
            m = self.matrix(letter)
            answer = defaultdict(lambda: ZERO)
            for j, c in vector.items():
                for i, v in column(m, j).items():
                    answer[i] += v * c
            vector = {i: c for i, c in answer.items() if c}
        return vector

    def __repr__(self):
        return 'A0Rep(%s, dim=%s)' % (self.name, self.dim)


def highest_weight_a0rep(gl11rep: Gl11Rep) -> A0Rep:
    """phi(E21) = 0, phi(K1) = p1, the rest from gl11rep"""
    report = _validateGl11(gl11rep)
    if not report.allPassed:
        raise InvalidRepresentationError(
            'gl(1/1) relations fail: %s' % ', '.join(c.name for c in report.failures)
        )
    n = gl11rep.dim
    g = gl11rep.matrices
    one = identity(n)
    return A0Rep(
        {
            'E21': zeros(n), 'E23': g['e23'], 'E32': g['e32'],
            'K1': scaled(one, p1), 'K1inv': scaled(one, ONE / p1),
            'K2': g['k2'], 'K2inv': g['k2inv'], 'K3': g['k3'], 'K3inv': g['k3inv'],
        },
        gl11rep.parities, gl11rep.name
    )


_GL11_TO_A0 = {'e23': 'E23', 'e32': 'E32', 'k2': 'K2', 'k2inv': 'K2inv', 'k3': 'K3', 'k3inv': 'K3inv'}


def _validateGl11(gl11rep: Gl11Rep) -> Report:
    n = gl11rep.dim
    fixed = {'E21': zeros(n), 'K1': identity(n), 'K1inv': identity(n)}
    matrices = dict(fixed, **{_GL11_TO_A0[k]: v for k, v in gl11rep.matrices.items()})
    report = Report('gl(1/1) relations (%s)' % gl11rep.name)
    for r in relation_set():
        letters = {l for w in r.words for l in w}
        if letters <= {'E23', 'E32', 'K2', 'K3', 'K2inv', 'K3inv'}:
            report.add(_matrixCheck(r, matrices, n))
    return report


def _wordMatrix(word, matrices, n) -> DomainMatrix:
    m = identity(n)
    for letter in word:
        m = m.matmul(matrices[letter])
    return m


def _elementMatrix(u: UElement, matrices, n) -> DomainMatrix:
    total = zeros(n)
    for word, c in u.terms():
        total = total.add(scaled(_wordMatrix(word, matrices, n), c))
    return total


def _matrixCheck(r, matrices, n) -> Check:
    residual = _elementMatrix(r.lhs, matrices, n).sub(_elementMatrix(r.rhs, matrices, n))
    return Check(r.name, r.family, residual.is_zero_matrix, residual.nnz(), renderEntries(residual))


def validate_a0rep(rep: A0Rep) -> Report:
    """The A0 relations as matrix identities plus the grading of every generator"""
    report = Report('A0 relations (%s)' % rep.name)
    for r in relation_set():
        letters = {l for w in r.words for l in w}
        if letters <= A0_SYMBOLS:
            report.add(_matrixCheck(r, rep.matrices, rep.dim))
    for letter in _A0_LETTERS:
        flip = 1 if letter in ('E23', 'E32') else 0
        bad = [(i, j) for (i, j), _ in entries(rep.matrices[letter]) if (rep.parities[i] + rep.parities[j]) % 2 != flip]
        report.add(Check('%s grading' % letter, 'grading', not bad, len(bad),
                         'entries %s break the grading' % bad if bad else ''))
    return report


class InducedVector(object):
    """A finite combination of basis vectors |N,M>(x)v, keyed by (N, M, v)"""
    __slots__ = ['_terms']

    def __init__(self, terms=None):
        acc = defaultdict(lambda: ZERO)
        for (N, M, v), c in (terms or {}).items():
            if N < 0 or M not in (0, 1):
                raise ValueError('Bad basis label (%s, %s, %s)' % (N, M, v))
            acc[(N, M, v)] += scalar(c)
        self._terms = {k: c for k, c in acc.items() if c}

    def terms(self):
        return sorted(self._terms.items())

    def __getitem__(self, key) -> QScalar:
        return self._terms.get(key, ZERO)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, InducedVector):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        terms = defaultdict(lambda: ZERO, self._terms)
        for k, c in other._terms.items():
            terms[k] += c
        return InducedVector(terms)

    def __neg__(self):
        return InducedVector({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        if not isScalar(c):
            return NotImplemented
        c = scalar(c)
        return InducedVector({k: c * v for k, v in self._terms.items()})

    __rmul__ = __mul__

    def render(self) -> str:
        if not self._terms:
            return '0'
        return ' + '.join('(%s)|%s,%s>v%s' % (renderScalar(c), N, M, v) for (N, M, v), c in self.terms())

    def __repr__(self):
        return 'InducedVector(%s)' % self.render()


def basis_state(N: int, M: int, v: int = 0) -> InducedVector:
    return InducedVector({(N, M, v): ONE})


class _Accumulator(object):
    # collects c |N,M> (x) phi(word) v

    def __init__(self, rep):
        self.rep = rep
        self.terms = defaultdict(lambda: ZERO)

    def add(self, c, N, M, word, vector):
        if not c or N < 0:
            return
        for v, cv in self.rep.apply(word, vector).items():
            self.terms[(N, M, v)] += c * cv

    def result(self) -> InducedVector:
        return InducedVector(self.terms)


def _actOnState(g, N, M, vector, rep, acc: _Accumulator, c):
    d = QDIFF
    sgn = -ONE if M else ONE
    nq = q_integer(N)
    if g == 'E12':
        acc.add(c, N + 1, M, (), vector)
    elif g == 'E13':
        if M == 0:
            acc.add(c * qPow(-N), N, 1, (), vector)
    elif isK(g):
        i, s = _kIndexAndSign(g)
        shift = {1: N + M, 2: -N, 3: -M}[i]
        acc.add(c * qPow(s * shift), N, M, (g,), vector)
    elif g == 'E23':
        acc.add(c * sgn * qPow(N + M), N, M, ('E23',), vector)
        if M == 0 and N:
            acc.add(-c * qPow(1) * nq, N - 1, 1, (), vector)
    elif g == 'E32':
        acc.add(c * sgn, N, M, ('E32',), vector)
        if M == 1:
            acc.add(c * qPow(-1), N + 1, 0, ('K2', 'K3'), vector)
    elif g == 'E21':
        acc.add(c, N, M, ('E21',), vector)
        if N:
            acc.add(-c * nq * qPow(N + M - 1) / d, N - 1, M, ('K1', 'K2inv'), vector)
            acc.add(c * nq * qPow(1 - N - M) / d, N - 1, M, ('K1inv', 'K2'), vector)
        if M == 1:
            acc.add(c, N, 0, ('E23', 'K1inv', 'K2'), vector)
    elif g == 'E31':
        acc.add(c * sgn, N, M, ('E31',), vector)
        if M == 1:
            acc.add(c * qPow(-1) / d, N, 0, ('K1', 'K3'), vector)
            acc.add(-c * qPow(-1) / d, N, 0, ('K1inv', 'K3inv'), vector)
        if N and M == 0:
            acc.add(c * qPow(N - 2) * nq, N - 1, 0, ('K1', 'K2inv', 'E32'), vector)
        if N and M == 1:
            acc.add(-c * qPow(N - 1) * nq, N - 1, 1, ('K1', 'K2inv', 'E32'), vector)
            acc.add(c * qPow(N - 1) * nq, N, 0, ('K1', 'K3'), vector)


def act(g: str, x: InducedVector, rep: A0Rep) -> InducedVector:
    """g x by the closed form action on |N,M>(x)v"""
    _checkSymbol(g)
    acc = _Accumulator(rep)
    for (N, M, v), c in x.terms():
        _actOnState(g, N, M, {v: ONE}, rep, acc, c)
    return acc.result()


def act_oracle(g: str, x: InducedVector, rep: A0Rep, useOracle: bool = False) -> InducedVector:
    """g x by straightening g E12^N E13^M then applying phi to the leftover A0 word"""
    _checkSymbol(g)
    straightener = oracle_straighten if useOracle else straighten
    acc = _Accumulator(rep)
    for (N, M, v), c in x.terms():
        for t in straightener(g, N, M):
            acc.add(c * t.coeff, t.N, t.M, t.a0word, {v: ONE})
    return acc.result()


def act_word(word, x: InducedVector, rep: A0Rep) -> InducedVector:
    """Applies the letters of word right to left"""
    for letter in reversed(tuple(word)):
        x = act(letter, x, rep)
    return x


def act_element(u: UElement, x: InducedVector, rep: A0Rep) -> InducedVector:
    total = InducedVector()
    for word, c in u.terms():
        total = total + act_word(word, x, rep) * c
    return total


def weight(N: int, M: int, v: int, rep: A0Rep):
    """The K1, K2, K3 eigenvalues of |N,M>(x)v when v is a weight vector of phi"""
    answer = []
    for i, shift in ((1, N + M), (2, -N), (3, -M)):
        kColumn = column(rep.matrix('K%d' % i), v)
        if set(kColumn) - {v}:
            raise InvalidRepresentationError('v%s is not an eigenvector of phi(K%d)' % (v, i))
        answer.append(qPow(shift) * kColumn.get(v, ZERO))
    return tuple(answer)


def check_relations_on_module(rep: A0Rep, Nmax: int) -> Report:
    """Every defining relation as an operator identity on the states with N <= Nmax - 2"""
    if Nmax < 2:
        raise UsageError('Nmax must be >= 2')
    states = [basis_state(N, M, v) for N in range(Nmax - 1) for M in (0, 1) for v in range(rep.dim)]
    report = Report('induced module (%s), N <= %d' % (rep.name, Nmax - 2))
    for r in relation_set():
        residual = 0
        worst = ''
        for x in states:
            diff = act_element(r.lhs, x, rep) - act_element(r.rhs, x, rep)
            if diff:
                residual += len(diff)
                worst = worst or '%s on %s' % (diff.render(), x.render())
        _logger.debug('%s: %s residual terms', r.name, residual)
        report.add(Check(r.name, r.family, not residual, residual, worst))
    bad = 0
    for (N, M, v) in ((N, M, v) for N in range(Nmax - 1) for M in (0, 1) for v in range(rep.dim)):
        x = basis_state(N, M, v)
        expected = InducedVector({(N, M, w): c for w, c in rep.apply(('K1', 'K2', 'K3'), {v: ONE}).items()})
        if act_word(('K1', 'K2', 'K3'), x, rep) != expected:
            bad += 1
    report.add(Check('K1*K2*K3 ignores N and M', 'weight', not bad, bad))
    passed, failed = report.counts()
    _logger.info('induced module %s: %s passed, %s failed', rep.name, passed, failed)
    return report


def verify_induced(nmax: int, reps=None) -> Report:
    """act against act_oracle on |N,M>(x)v for N <= nmax, then the relations on the module, per representation"""
    reps = reps or [highest_weight_a0rep(trivial_gl11rep()), highest_weight_a0rep(fermionic_gl11rep())]
    report = Report('induced action, N <= %d' % nmax)
    for rep in reps:
        for g in U_SYMBOLS:
            bad = 0
            for N in range(nmax + 1):
                for M in (0, 1):
                    for v in range(rep.dim):
                        x = basis_state(N, M, v)
                        if act(g, x, rep) != act_oracle(g, x, rep):
                            bad += 1
            _logger.debug('%s on %s: %s mismatched states', g, rep.name, bad)
            report.add(Check('act(%s) == straightened (%s)' % (g, rep.name), 'action', not bad, bad))
        report.extend(check_relations_on_module(rep, nmax))
    passed, failed = report.counts()
    _logger.info('induced: %s passed, %s failed', passed, failed)
    return report


@Pipeable
def Act(x, g, rep):
    return act(g, x, rep)
