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


from functools import reduce

from hypothesis import given, settings, HealthCheck
import hypothesis.strategies as st

from .._core import MixedParityError, SubstitutionError, UnknownSymbolError
from .._testing import AssertRaises
from ..testing import AssertEqual, AssertZero
from ..scalarfield import ONE, q, qinv, p1, p2, p3, QDIFF, qPow
from ..walgebra import WMonomial, WElement, TRIVIAL, FERMIONIC, generator, w_mul, w_one, w_zero, w_scalar, w_pow, \
    w_scale, parity, isHomogeneous, supercommutator, substitute_gl11, projectModeTwoVacuum, fermionModesUsed, \
    parametersUsed, creationDegree, renderWElement, w_substituteParameters, Substitute, SuperComm


_SLOW = dict(deadline=None, derandomize=True, suppress_health_check=[HealthCheck.too_slow])

ap, a, t, tinv = generator('a+'), generator('a'), generator('t'), generator('tinv')
bp, b, bp2, b2 = generator('b1+'), generator('b1'), generator('b2+'), generator('b2')
e23, e32, k2, k2inv, k3, k3inv = (generator(n) for n in ('e23', 'e32', 'k2', 'k2inv', 'k3', 'k3inv'))

_ALL = ('a+', 'a', 't', 'tinv', 'b1+', 'b1', 'b2+', 'b2', 'e23', 'e32', 'k2', 'k2inv', 'k3', 'k3inv')
_NO_MODE_TWO = tuple(n for n in _ALL if n not in ('b2+', 'b2'))


def _word(names):
    return reduce(w_mul, [generator(n) for n in names], w_one())

_words = st.lists(st.sampled_from(_ALL), min_size=1, max_size=3).map(_word)
_modeOneWords = st.lists(st.sampled_from(_NO_MODE_TWO), min_size=1, max_size=3).map(_word)
_coeffs = st.sampled_from([ONE, -ONE, q, qinv * 2, p1, ONE / QDIFF])
_elements = st.builds(lambda x, c, y: w_scale(x, c) + y, _modeOneWords, _coeffs, _modeOneWords)


def test_generators():
    t * tinv >> AssertEqual >> w_one()
    tinv * t >> AssertEqual >> w_one()
    k2 * k2inv >> AssertEqual >> w_one()
    parity(bp) >> AssertEqual >> 1
    parity(k2) >> AssertEqual >> 0
    parity(w_zero()) >> AssertEqual >> 0
    generator('b+') >> AssertEqual >> bp
    generator('t^-1') >> AssertEqual >> tinv
    with AssertRaises(UnknownSymbolError):
        generator('c+')


def test_boson():
    a * ap >> AssertEqual >> w_scale(t * qPow(1) - tinv * qPow(-1), ONE / QDIFF)
    ap * a >> AssertEqual >> w_scale(t - tinv, ONE / QDIFF)
    a * ap - ap * a * qinv >> AssertEqual >> t
    a * ap - ap * a * q >> AssertEqual >> tinv
    t * ap >> AssertEqual >> ap * t * q
    t * a >> AssertEqual >> a * t * qinv
    # a+ a a+ reduces to a+ alone times t's
    len(ap * a * ap) >> AssertEqual >> 2
    creationDegree(ap * ap * a) >> AssertEqual >> 1


def test_fermions():
    b * bp >> AssertEqual >> w_one() - bp * b
    renderWElement(b * bp) >> AssertEqual >> '1 - b+*b'
    b * b >> AssertZero
    bp * bp >> AssertZero
    bp * bp2 + bp2 * bp >> AssertZero
    b * b2 + b2 * b >> AssertZero
    supercommutator(bp, b) >> AssertEqual >> w_one()
    fermionModesUsed(bp * b2) >> AssertEqual >> frozenset([1, 2])


def test_grading_against_gl11():
    e23 * bp >> AssertEqual >> -(bp * e23)
    renderWElement(e23 * bp) >> AssertEqual >> '-b+*e23'
    e32 * b2 >> AssertEqual >> -(b2 * e32)
    k2 * bp >> AssertEqual >> bp * k2
    ap * e23 >> AssertEqual >> e23 * ap


def test_gl11():
    k2 * e23 >> AssertEqual >> e23 * k2 * q
    k3 * e23 >> AssertEqual >> e23 * k3 * qinv
    k2 * e32 >> AssertEqual >> e32 * k2 * qinv
    k3 * e32 >> AssertEqual >> e32 * k3 * q
    e23 * e23 >> AssertZero
    e32 * e32 >> AssertZero
    e23 * e32 + e32 * e23 >> AssertEqual >> w_scale(k2 * k3 - k2inv * k3inv, ONE / QDIFF)


def test_supercommutator():
    supercommutator(ap * a, ap * a) >> AssertZero
    supercommutator(ap, k2) >> AssertZero
    ap >> SuperComm >> k2 >> AssertZero
    with AssertRaises(MixedParityError):
        supercommutator(bp + ap, b)
    isHomogeneous(bp + ap) >> AssertEqual >> False
    isHomogeneous(w_zero()) >> AssertEqual >> True


def test_pow():
    w_pow(bp, 2) >> AssertZero
    w_pow(ap, 3) >> AssertEqual >> ap * ap * ap
    w_pow(t, 0) >> AssertEqual >> w_one()
    bp ** 2 >> AssertZero


def test_substitute_trivial():
    substitute_gl11(e23, TRIVIAL) >> AssertZero
    substitute_gl11(e32, TRIVIAL) >> AssertZero
    substitute_gl11(k2, TRIVIAL) >> AssertEqual >> w_scalar(p2)
    substitute_gl11(k3, TRIVIAL) >> AssertEqual >> w_scalar(ONE / p2)
    substitute_gl11(k2 * k3inv * ap, 'trivial') >> AssertEqual >> ap * p2 * p2
    parametersUsed(substitute_gl11(k2inv, TRIVIAL)) >> AssertEqual >> frozenset(['p2'])


def test_substitute_fermionic():
    n2 = bp2 * b2
    substitute_gl11(k2, FERMIONIC) >> AssertEqual >> (b2 * bp2 + n2 * q) * p2
    substitute_gl11(e23, FERMIONIC) >> AssertEqual >> bp2
    bracket = (p2 * p3 - ONE / (p2 * p3)) / QDIFF
    substitute_gl11(e23 * e32 + e32 * e23, FERMIONIC) >> AssertEqual >> w_scalar(bracket)
    k2 >> Substitute(..., FERMIONIC) >> AssertEqual >> substitute_gl11(k2, FERMIONIC)
    with AssertRaises(SubstitutionError):
        substitute_gl11(b2 * k2, FERMIONIC)
    with AssertRaises(SubstitutionError):
        substitute_gl11(k2, 'bosonic')
    # terms without a gl(1/1) factor may use mode 2
    substitute_gl11(b2 + k2, FERMIONIC) >> AssertEqual >> b2 + substitute_gl11(k2, FERMIONIC)


def test_projection():
    x = substitute_gl11(k2 * ap, FERMIONIC)
    projectModeTwoVacuum(x) >> AssertEqual >> ap * p2
    projectModeTwoVacuum(x) >> AssertEqual >> substitute_gl11(k2 * ap, TRIVIAL)
    projectModeTwoVacuum(bp2 * bp) >> AssertZero


def test_parameters():
    w_substituteParameters(k2 * p2 * p3, p3=ONE / p2) >> AssertEqual >> k2
    parametersUsed(ap * p1 * q) >> AssertEqual >> frozenset(['p1'])


def test_rendering():
    renderWElement(w_zero()) >> AssertEqual >> '0'
    renderWElement(ap * tinv * k2inv) >> AssertEqual >> 'a+*t^-1*k2inv'
    renderWElement(WElement({WMonomial(ap=2, k3=-3): qinv})) >> AssertEqual >> 'q^-1*a+^2*k3inv^3'


@given(_words, _words, _words)
@settings(max_examples=500, **_SLOW)
def test_associativity(x, y, z):
    w_mul(w_mul(x, y), z) >> AssertEqual >> w_mul(x, w_mul(y, z))


@given(_words, _words)
@settings(max_examples=200, **_SLOW)
def test_parity_is_multiplicative(x, y):
    xy = w_mul(x, y)
    if xy:
        parity(xy) >> AssertEqual >> (parity(x) + parity(y)) % 2


@given(_elements, _elements)
@settings(max_examples=200, **_SLOW)
def test_substitution_is_a_morphism(x, y):
    for r in (TRIVIAL, FERMIONIC):
        substitute_gl11(w_mul(x, y), r) >> AssertEqual >> w_mul(substitute_gl11(x, r), substitute_gl11(y, r))


def main():
    test_generators()
    test_boson()
    test_fermions()
    test_grading_against_gl11()
    test_gl11()
    test_supercommutator()
    test_pow()
    test_substitute_trivial()
    test_substitute_fermionic()
    test_projection()
    test_parameters()
    test_rendering()
    test_associativity()
    test_parity_is_multiplicative()
    test_substitution_is_a_morphism()
    print('pass')


if __name__ == '__main__':
    main()
