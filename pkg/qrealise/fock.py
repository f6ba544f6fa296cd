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


"""Truncated Fock space matrices

The boson factor has basis |n>, n < D, with

    a+|n> = |n+1>  (|D-1> -> 0),    a|n> = [n]|n-1>,    t|n> = q^n|n>

Each active fermion mode adds a factor {|0>, |1>}. The basis is n-major, then mode 1, then mode 2, and
|o1, o2> = b1+^o1 b2+^o2 |0>, so b2 and b2+ pick up (-1)^o1.

The Dyson boson builds the same a from an ordinary oscillator, a = ([N+1]/(N+1)) A with A|n> = n|n-1>
and N = A+ A, and t = q^N.
"""

import logging
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import NamedTuple, Optional, Tuple

from ._core import ModeError, NamedEnum, UsageError
from .config import NumericAssignment
from .matrix import DomainMatrix, sparse, zeros, identity, diagonal, entries, entry, scaled, restrictColumns, mapEntries, renderEntries
from .pipeable import Pipeable
from .report import Check, Report
from .scalarfield import ZERO, ONE, qPow, q_integer, scalar, evaluate
from .uqgl21 import relation_set
from .walgebra import WElement, WMonomial, w_mul, fermionModesUsed, creationDegree, renderWElement
from .realization import realization_map, asMode, ABSTRACT


__all__ = [
    'Boson', 'QBOSON', 'DYSON', 'FockMatrix', 'bosonMatrices', 'fock_matrix', 'fermionDimension',
    'check_relations_on_fock', 'check_fock_homomorphism', 'dyson_check', 'FockMatrixOf',
]


_logger = logging.getLogger(__name__)


class Boson(NamedEnum):
    pass

QBOSON = Boson('qboson')
DYSON = Boson('dyson')


def _asBoson(boson) -> Boson:
    name = boson.name if isinstance(boson, Boson) else str(boson)
    for b in (QBOSON, DYSON):
        if b.name == name:
            return b
    raise UsageError('Unknown boson rendering "%s" (expected qboson or dyson)' % name)


class FockMatrix(NamedTuple):
    matrix: DomainMatrix
    dim: int                                # D, the boson cutoff
    modes: Tuple[int, ...]                  # active fermion modes
    labels: Tuple[Tuple[int, Tuple[int, ...]], ...]
    boundary: Tuple[int, ...]               # basis indices whose image may have lost a+ content
    assignment: Optional[NumericAssignment] = None


def fermionDimension(modes) -> int:
    return 2 ** len(tuple(modes))


def basisLabels(D, modes):
    return tuple((n, occ) for n in range(D) for occ in product((0, 1), repeat=len(modes)))


# boson blocks

@lru_cache(maxsize=None)
def _qbosonBlocks(D):
    ap = sparse(D, D, {(n + 1, n): ONE for n in range(D - 1)})
    a = sparse(D, D, {(n - 1, n): q_integer(n) for n in range(1, D)})
    t = diagonal(qPow(n) for n in range(D))
    tinv = diagonal(qPow(-n) for n in range(D))
    return {'a+': ap, 'a': a, 't': t, 'tinv': tinv}


@lru_cache(maxsize=None)
def _dysonBlocks(D):
    Aplus = sparse(D, D, {(n + 1, n): ONE for n in range(D - 1)})
    A = sparse(D, D, {(n - 1, n): n for n in range(1, D)})
    N = Aplus.matmul(A)
    counts = [_asInt(entry(N, n, n)) for n in range(D)]
    # [N+1]/(N+1)
    f = diagonal(q_integer(k + 1) * scalar(Fraction(1, k + 1)) for k in counts)
    qN = diagonal(qPow(k) for k in counts)
    qNinv = diagonal(qPow(-k) for k in counts)
    return {'a+': Aplus, 'a': f.matmul(A), 't': qN, 'tinv': qNinv, 'A': A, 'A+': Aplus, 'N': N}


def _asInt(x) -> int:
    value = evaluate(x)
    if value.denominator != 1:
        raise ValueError('%s is not an integer' % value)
    return int(value)


def bosonMatrices(D: int, boson=QBOSON):
    """{'a+', 'a', 't', 'tinv'} as D x D matrices (the Dyson set also has 'A', 'A+' and 'N')"""
    if D < 2:
        raise UsageError('D must be >= 2')
    return dict(_dysonBlocks(D) if _asBoson(boson) is DYSON else _qbosonBlocks(D))


def _bosonBlock(m: WMonomial, blocks, D) -> DomainMatrix:
    # a+^ap t^t a^a
    answer = identity(D)
    for name, n in (('a+', m.ap), ('t' if m.t >= 0 else 'tinv', abs(m.t)), ('a', m.a)):
        for _ in range(n):
            answer = answer.matmul(blocks[name])
    return answer


def _fermionAction(m: WMonomial, occ, modes):
    # b1+^bp1 b1^b1 b2+^bp2 b2^b2 applied to |occ>, returns (sign, occ') or None
    occ = dict(zip(modes, occ))
    sign = 1
    for mode, ops in ((2, (m.b2, m.bp2)), (1, (m.b1, m.bp1))):
        lower, raise_ = ops
        if (lower or raise_) and mode not in occ:
            raise ModeError('Fermion mode %s is not active in this rendering' % mode)
        if lower:
            if occ[mode] == 0:
                return None
            occ[mode] = 0
            if mode == 2 and occ.get(1):
                sign = -sign
        if raise_:
            if occ[mode] == 1:
                return None
            occ[mode] = 1
            if mode == 2 and occ.get(1):
                sign = -sign
    return sign, tuple(occ[k] for k in modes)


def fock_matrix(x: WElement, D: int, assignment: NumericAssignment = None, modes=None, boson=QBOSON) -> FockMatrix:
    """The matrix of x on the truncated Fock space - gl(1/1) factors must already be substituted"""
    if D < 2:
        raise UsageError('D must be >= 2')
    for m, _ in x.terms():
        if m.hasGl11:
            raise ModeError('%s still has an abstract gl(1/1) factor - substitute a realization first' % renderWElement(x))
    modes = tuple(sorted(fermionModesUsed(x) if modes is None else modes))
    blocks = bosonMatrices(D, boson)
    labels = basisLabels(D, modes)
    index = {label: i for i, label in enumerate(labels)}
    fdim = fermionDimension(modes)
    acc = defaultdict(lambda: ZERO)
    for m, c in x.terms():
        block = _bosonBlock(m, blocks, D)
        for occ in product((0, 1), repeat=len(modes)):
            moved = _fermionAction(m, occ, modes)
            if moved is None:
                continue
            sign, occ2 = moved
            for (n2, n1), v in entries(block):
                acc[(index[(n2, occ2)], index[(n1, occ)])] += c * v * sign
    matrix = sparse(len(labels), len(labels), acc)
    if assignment is not None:
        matrix = mapEntries(matrix, lambda v: evaluate(v, assignment))
    shift = creationDegree(x)
    boundary = tuple(i for i, (n, _) in enumerate(labels) if n > D - 1 - shift)
    assert len(boundary) == min(shift, D) * fdim
    return FockMatrix(matrix, D, modes, labels, boundary, assignment)


def _safeColumns(labels, D, shift):
    return [i for i, (n, _) in enumerate(labels) if n <= D - 1 - shift]


def check_relations_on_fock(mode, D: int, assignment: NumericAssignment = None, boson=QBOSON) -> Report:
    """Every defining relation as a matrix identity through rho, on the columns the truncation cannot reach"""
    mode = asMode(mode)
    if mode is ABSTRACT:
        raise ModeError('The abstract gl(1/1) factor has no matrices, use trivial or fermionic')
    if D < 4:
        raise UsageError('D must be >= 4')
    boson = _asBoson(boson)
    images = realization_map(mode).images
    modes = (1,) if mode.name == 'trivial' else (1, 2)
    labels = basisLabels(D, modes)
    n = len(labels)
    letters = {g: fock_matrix(x, D, assignment, modes, boson).matrix for g, x in images.items()}
    degrees = {g: creationDegree(x) for g, x in images.items()}

    def side(u):
        total = zeros(n)
        for word, c in u.terms():
            m = identity(n)
            for letter in word:
                m = m.matmul(letters[letter])
            c = scalar(evaluate(c, assignment)) if assignment is not None else c
            total = total.add(scaled(m, c))
        return total

    title = 'Fock relations (%s, %s, D=%d%s)' % (mode.name, boson.name, D, ', numeric' if assignment else '')
    report = Report(title)
    for r in relation_set():
        shift = max(sum(degrees[l] for l in w) for w in r.words)
        safe = _safeColumns(labels, D, shift)
        residual = restrictColumns(side(r.lhs).sub(side(r.rhs)), safe)
        excluded = n - len(safe)
        _logger.debug('%s: %s nonzero residual entries, %s states excluded', r.name, residual.nnz(), excluded)
        report.add(Check(r.name, r.family, residual.is_zero_matrix, residual.nnz(),
                         renderEntries(residual, 4),
                         excluded))
    passed, failed = report.counts()
    _logger.info('%s: %s passed, %s failed', title, passed, failed)
    return report


def check_fock_homomorphism(pairs, D: int, modes=(1, 2), boson=QBOSON) -> Report:
    """fock(xy) == fock(x) fock(y) on the columns n <= D - 1 - (a+ degree of y)"""
    report = Report('Fock rendering is multiplicative (D=%d)' % D)
    labels = basisLabels(D, tuple(modes))
    for x, y in pairs:
        xy = fock_matrix(w_mul(x, y), D, modes=modes, boson=boson).matrix
        composed = fock_matrix(x, D, modes=modes, boson=boson).matrix.matmul(fock_matrix(y, D, modes=modes, boson=boson).matrix)
        safe = _safeColumns(labels, D, creationDegree(y))
        residual = restrictColumns(xy.sub(composed), safe)
        report.add(Check('(%s)(%s)' % (renderWElement(x), renderWElement(y)), 'homomorphism', residual.is_zero_matrix,
                         residual.nnz(), excluded=len(labels) - len(safe)))
    return report


def dyson_check(D: int) -> Report:
    """The Dyson substitution reproduces the q-boson matrices and satisfies the boson relations"""
    if D < 4:
        raise UsageError('D must be >= 4')
    dyson, qboson = bosonMatrices(D, DYSON), bosonMatrices(D, QBOSON)
    report = Report('Dyson substitution (D=%d)' % D)
    for name in ('a+', 'a', 't', 'tinv'):
        same = dyson[name] == qboson[name]
        report.add(Check('%s matches the q-boson matrix' % name, 'dyson', same, 0 if same else dyson[name].sub(qboson[name]).nnz()))

    ap, a, t, tinv, A, Aplus = dyson['a+'], dyson['a'], dyson['t'], dyson['tinv'], dyson['A'], dyson['A+']
    one = identity(D)
    q, qinv = qPow(1), qPow(-1)
    checks = [
        # name, lhs - rhs, a+ degree along the words
        ('[A,A+] = 1', A.matmul(Aplus).sub(Aplus.matmul(A)).sub(one), 1),
        ('a*a+ - q^-1*a+*a = t', a.matmul(ap).sub(scaled(ap.matmul(a), qinv)).sub(t), 1),
        ('a*a+ - q*a+*a = t^-1', a.matmul(ap).sub(scaled(ap.matmul(a), q)).sub(tinv), 1),
        ('t*a+*t^-1 = q*a+', t.matmul(ap).matmul(tinv).sub(scaled(ap, q)), 1),
        ('t*a*t^-1 = q^-1*a', t.matmul(a).matmul(tinv).sub(scaled(a, qinv)), 0),
        ('t*t^-1 = 1', t.matmul(tinv).sub(one), 0),
    ]
    labels = basisLabels(D, ())
    for name, residual, shift in checks:
        residual = restrictColumns(residual, _safeColumns(labels, D, shift))
        report.add(Check(name, 'boson', residual.is_zero_matrix, residual.nnz(), excluded=shift))
    passed, failed = report.counts()
    _logger.info('dyson D=%d: %s passed, %s failed', D, passed, failed)
    return report


@Pipeable
def FockMatrixOf(x, dim=8, assignment=None, modes=None, boson=QBOSON):
    return fock_matrix(x, dim, assignment, modes, boson)
