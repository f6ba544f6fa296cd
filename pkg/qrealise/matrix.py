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


"""Sparse matrices over Q(q, p1, p2, p3)

Matrices are sympy DomainMatrix instances in sparse (SDM) format over the fraction field of
scalarfield. DomainMatrix's +, - and * operators unify to dense, so arithmetic goes through
add, sub, matmul and scaled which keep the sparse format and drop entries that cancel.
"""

from typing import Callable, Dict, Iterable, List, Tuple

from sympy.polys.matrices import DomainMatrix

from .scalarfield import FIELD, QScalar, scalar, renderScalar


__all__ = [
    'DOMAIN', 'DomainMatrix', 'sparse', 'zeros', 'identity', 'diagonal', 'entry', 'entries', 'column',
    'scaled', 'restrictColumns', 'mapEntries', 'renderEntries',
]


DOMAIN = FIELD.to_domain()


def sparse(nrows: int, ncols: int, entries=None) -> DomainMatrix:
    dok = {}
    for (i, j), v in (entries or {}).items():
        if not (0 <= i < nrows and 0 <= j < ncols):
            raise IndexError('(%s, %s) is outside a %sx%s matrix' % (i, j, nrows, ncols))
        dok[(i, j)] = scalar(v)
    return DomainMatrix.from_dok(dok, (nrows, ncols), DOMAIN)


def zeros(nrows: int, ncols: int = None) -> DomainMatrix:
    return DomainMatrix.zeros((nrows, nrows if ncols is None else ncols), DOMAIN)


def identity(n: int) -> DomainMatrix:
    return DomainMatrix.eye(n, DOMAIN)


def diagonal(values: Iterable) -> DomainMatrix:
    return DomainMatrix.diag([scalar(v) for v in values], DOMAIN)


def entry(m: DomainMatrix, i: int, j: int) -> QScalar:
    return m[i, j].element


def entries(m: DomainMatrix) -> List[Tuple[Tuple[int, int], QScalar]]:
    """the nonzero entries in row-major order"""
    return sorted(m.to_dok().items())


def column(m: DomainMatrix, j: int) -> Dict[int, QScalar]:
    return {i: v for (i, jj), v in m.to_dok().items() if jj == j}


def scaled(m: DomainMatrix, c) -> DomainMatrix:
    return m.mul(scalar(c))


def restrictColumns(m: DomainMatrix, columns) -> DomainMatrix:
    """zeroes every column not in columns"""
    keep = set(columns)
    return DomainMatrix.from_dok({k: v for k, v in m.to_dok().items() if k[1] in keep}, m.shape, DOMAIN)


def mapEntries(m: DomainMatrix, fn: Callable) -> DomainMatrix:
    return DomainMatrix.from_dok({k: scalar(fn(v)) for k, v in m.to_dok().items()}, m.shape, DOMAIN)


def renderEntries(m: DomainMatrix, limit: int = None) -> str:
    shown = entries(m)[:limit]
    return '; '.join('(%s,%s): %s' % (i, j, renderScalar(v)) for (i, j), v in shown)
