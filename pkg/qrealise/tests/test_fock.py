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

from .._core import ModeError, UsageError
from .._testing import AssertRaises
from ..config import NumericAssignment
from ..matrix import sparse, diagonal, entry, entries, column
from ..testing import AssertEqual, AssertPasses
from ..scalarfield import ONE, q, qPow, q_integer, scalar
from ..walgebra import FERMIONIC, generator, w_mul, substitute_gl11
from ..uqgl21 import U_SYMBOLS
from ..induced import fermionic_gl11rep
from ..realization import FERMIONIC_MODE, realization_map, rho
from ..fock import DYSON, bosonMatrices, fock_matrix, basisLabels, check_relations_on_fock, \
    check_fock_homomorphism, dyson_check, FockMatrixOf


ap, a, t, bp, b, bp2, b2 = (generator(n) for n in ('a+', 'a', 't', 'b1+', 'b1', 'b2+', 'b2'))


def test_boson_blocks():
    m = bosonMatrices(4)
    entry(m['a'], 1, 2) >> AssertEqual >> q_integer(2)
    entry(m['a+'], 3, 2) >> AssertEqual >> ONE
    column(m['a+'], 3) >> AssertEqual >> {}
    entry(m['t'], 3, 3) >> AssertEqual >> qPow(3)
    dyson = bosonMatrices(4, DYSON)
    entry(dyson['A'], 2, 3) >> AssertEqual >> scalar(3)
    dyson['N'] >> AssertEqual >> diagonal([0, 1, 2, 3])
    for name in ('a+', 'a', 't', 'tinv'):
        dyson[name] >> AssertEqual >> m[name]


def test_fock_matrix():
    fm = fock_matrix(ap, 4)
    fm.modes >> AssertEqual >> ()
    fm.matrix >> AssertEqual >> sparse(4, 4, {(1, 0): 1, (2, 1): 1, (3, 2): 1})
    fm.boundary >> AssertEqual >> (3,)
    fm = fock_matrix(bp, 3)
    fm.labels >> AssertEqual >> basisLabels(3, (1,))
    fm.matrix >> AssertEqual >> sparse(6, 6, {(1, 0): 1, (3, 2): 1, (5, 4): 1})
    fm.boundary >> AssertEqual >> ()
    (t >> FockMatrixOf(dim=3)).matrix >> AssertEqual >> diagonal([1, q, q * q])


def test_jordan_wigner_signs():
    m = fock_matrix(b2, 2, modes=(1, 2)).matrix
    # |o1, o2> is index 4n + 2 o1 + o2
    entry(m, 0, 1) >> AssertEqual >> ONE
    entry(m, 2, 3) >> AssertEqual >> -ONE
    m1, m2 = fock_matrix(b, 3, modes=(1, 2)).matrix, fock_matrix(bp2, 3, modes=(1, 2)).matrix
    m1.matmul(m2).add(m2.matmul(m1)).is_zero_matrix >> AssertEqual >> True
    fock_matrix(w_mul(b, bp2), 3, modes=(1, 2)).matrix >> AssertEqual >> m1.matmul(m2)


def test_substitution_commutes_with_rendering():
    # the fermionic gl(1/1) image rendered on mode 2 is the fermionic representation, once per n
    rep = fermionic_gl11rep()
    for name in ('e23', 'e32', 'k2', 'k2inv', 'k3', 'k3inv'):
        rendered = fock_matrix(substitute_gl11(generator(name), FERMIONIC), 3, modes=(2,)).matrix
        blocks = {(2 * n + i, 2 * n + j): v for n in range(3) for (i, j), v in entries(rep.matrices[name])}
        rendered >> AssertEqual >> sparse(6, 6, blocks)
    for g in U_SYMBOLS:
        direct = fock_matrix(realization_map(FERMIONIC_MODE)[g], 5, modes=(1, 2)).matrix
        direct >> AssertEqual >> fock_matrix(substitute_gl11(rho(g), FERMIONIC), 5, modes=(1, 2)).matrix


def test_errors():
    with AssertRaises(ModeError):
        fock_matrix(generator('k2'), 4)
    with AssertRaises(ModeError):
        fock_matrix(b2, 4, modes=(1,))
    with AssertRaises(ModeError):
        check_relations_on_fock('abstract', 6)
    with AssertRaises(UsageError):
        check_relations_on_fock('trivial', 3)
    with AssertRaises(UsageError):
        fock_matrix(ap, 4, boson='classical')
    with AssertRaises(UsageError):
        fock_matrix(ap, 1)
    with AssertRaises(UsageError):
        dyson_check(3)


def test_numeric():
    fm = fock_matrix(a, 3, NumericAssignment())
    entry(fm.matrix, 1, 2) >> AssertEqual >> scalar(Fraction(3, 2) + Fraction(2, 3))
    fm.assignment >> AssertEqual >> NumericAssignment()


def test_homomorphism():
    gens = [ap, a, t, bp, b, bp2, b2]
    pairs = [(x, y) for x in gens for y in gens]
    check_fock_homomorphism(pairs, 5) >> AssertPasses


def test_relations_trivial():
    report = check_relations_on_fock('trivial', 6)
    report >> AssertPasses
    [c.excluded for c in report.checks if c.name == 'K1*E12 = q*E12*K1'] >> AssertEqual >> [2]
    [c.excluded for c in report.checks if c.name == 'K1*K2 = K2*K1'] >> AssertEqual >> [0]


def test_relations_fermionic():
    check_relations_on_fock('fermionic', 8) >> AssertPasses
    check_relations_on_fock('fermionic', 8, NumericAssignment()) >> AssertPasses


def test_relations_dyson():
    check_relations_on_fock('trivial', 6, boson=DYSON) >> AssertPasses
    dyson_check(6) >> AssertPasses


def main():
    test_boson_blocks()
    test_fock_matrix()
    test_jordan_wigner_signs()
    test_substitution_commutes_with_rendering()
    test_errors()
    test_numeric()
    test_homomorphism()
    test_relations_trivial()
    test_relations_fermionic()
    test_relations_dyson()
    print('pass')


if __name__ == '__main__':
    main()
