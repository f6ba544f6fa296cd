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


from fractions import Fraction

from sympy.polys.matrices.exceptions import DMShapeError

from .._testing import AssertRaises
from ..testing import AssertEqual
from ..scalarfield import ONE, ZERO, q, qinv, evaluate
from ..matrix import DOMAIN, sparse, zeros, identity, diagonal, entry, entries, column, scaled, restrictColumns, \
    mapEntries, renderEntries


def test_construction():
    m = sparse(2, 3, {(0, 0): 1, (1, 2): q, (0, 1): 0})
    m.shape >> AssertEqual >> (2, 3)
    m.domain >> AssertEqual >> DOMAIN
    m.rep.fmt >> AssertEqual >> 'sparse'
    m.nnz() >> AssertEqual >> 2
    entry(m, 0, 1) >> AssertEqual >> ZERO
    entry(m, 1, 2) >> AssertEqual >> q
    column(m, 2) >> AssertEqual >> {1: q}
    entries(m) >> AssertEqual >> [((0, 0), ONE), ((1, 2), q)]
    zeros(3).is_zero_matrix >> AssertEqual >> True
    identity(2) >> AssertEqual >> diagonal([1, 1])
    with AssertRaises(IndexError):
        sparse(2, 2, {(2, 0): 1})
    renderEntries(diagonal([q, 2])) >> AssertEqual >> '(0,0): q; (1,1): 2'
    renderEntries(diagonal([q, 2]), 1) >> AssertEqual >> '(0,0): q'


def test_arithmetic_stays_sparse():
    a = sparse(2, 2, {(0, 1): q})
    b = sparse(2, 2, {(1, 0): qinv})
    a.matmul(b) >> AssertEqual >> diagonal([1, 0])
    b.matmul(a) >> AssertEqual >> diagonal([0, 1])
    a.matmul(b).add(b.matmul(a)) >> AssertEqual >> identity(2)
    a.matmul(b).add(b.matmul(a)).rep.fmt >> AssertEqual >> 'sparse'
    # cancelled entries are dropped
    a.sub(a).nnz() >> AssertEqual >> 0
    entry(scaled(a, q), 0, 1) >> AssertEqual >> q * q
    scaled(a, 0).is_zero_matrix >> AssertEqual >> True
    a.neg() >> AssertEqual >> scaled(a, -1)
    with AssertRaises(DMShapeError):
        a.add(zeros(3))
    with AssertRaises(DMShapeError):
        a.matmul(zeros(3))


def test_columns_and_maps():
    m = sparse(2, 2, {(0, 0): q, (0, 1): 1, (1, 1): q})
    restrictColumns(m, [1]) >> AssertEqual >> sparse(2, 2, {(0, 1): 1, (1, 1): q})
    restrictColumns(m, []).is_zero_matrix >> AssertEqual >> True
    mapEntries(m, evaluate) >> AssertEqual >> sparse(2, 2, {(0, 0): Fraction(3, 2), (0, 1): 1, (1, 1): Fraction(3, 2)})
    # an entry that maps to zero is not stored
    mapEntries(m, lambda v: v - q).nnz() >> AssertEqual >> 1


def main():
    test_construction()
    test_arithmetic_stays_sparse()
    test_columns_and_maps()
    print('pass')


if __name__ == '__main__':
    main()
