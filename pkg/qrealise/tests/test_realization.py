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


from .._core import UsageError, UnknownSymbolError
from .._testing import AssertRaises
from ..testing import AssertEqual, AssertPasses, AssertZero
from ..scalarfield import ONE, QDIFF, p2
from ..uqgl21 import U_SYMBOLS, uGenerator, uWord
from ..walgebra import generator, w_one, parity, fermionModesUsed, parametersUsed, substitute_gl11, TRIVIAL, \
    projectModeTwoVacuum, w_substituteParameters
from ..realization import ABSTRACT, TRIVIAL_MODE, FERMIONIC_MODE, asMode, rho, realization_map, rho_element, \
    verify_realization, Rho


ap, t, tinv, bp, b = generator('a+'), generator('t'), generator('tinv'), generator('b1+'), generator('b1')


def test_images():
    rho('E12') >> AssertEqual >> ap
    rho('E13') >> AssertEqual >> tinv * bp
    rho('K2') >> AssertEqual >> tinv * generator('k2')
    rho('K1') * rho('K1inv') >> AssertEqual >> w_one()
    rho('K3') * rho('K3inv') >> AssertEqual >> w_one()
    for g in U_SYMBOLS:
        parity(rho(g)) >> AssertEqual >> uGenerator(g).parity
    with AssertRaises(UnknownSymbolError):
        rho('E22')


def test_modes():
    asMode('trivial') >> AssertEqual >> TRIVIAL_MODE
    asMode(FERMIONIC_MODE) >> AssertEqual >> FERMIONIC_MODE
    with AssertRaises(UsageError):
        asMode('bosonic')
    realization_map(TRIVIAL_MODE)['E23'] >> AssertEqual >> substitute_gl11(rho('E23'), TRIVIAL)
    fermionModesUsed(realization_map('fermionic')['E32']) >> AssertEqual >> frozenset([1, 2])
    parametersUsed(realization_map('trivial')['K2']) >> AssertEqual >> frozenset(['p2'])
    'E12' >> Rho >> AssertEqual >> ap
    uWord('E12', 'E12') >> Rho(..., TRIVIAL_MODE) >> AssertEqual >> ap * ap


def test_rho_element():
    u = uWord('E12', 'E21') - uWord('E21', 'E12')
    expected = (rho('K1') * rho('K2inv') - rho('K1inv') * rho('K2')) * (ONE / QDIFF)
    rho_element(u) >> AssertEqual >> expected
    rho_element(uGenerator('E23') * uGenerator('E23')) >> AssertZero
    rho_element(uWord('E23', 'E32') + uWord('E32', 'E23'), FERMIONIC_MODE) >> AssertEqual \
        >> rho_element((uWord('K2', 'K3') - uWord('K2inv', 'K3inv')) / QDIFF, FERMIONIC_MODE)


def test_fermionic_projects_to_trivial():
    # dropping every mode-2 monomial and setting p3 = 1/p2 recovers the trivial image
    for g in U_SYMBOLS:
        projected = projectModeTwoVacuum(realization_map(FERMIONIC_MODE)[g])
        w_substituteParameters(projected, p3=ONE / p2) >> AssertEqual >> realization_map(TRIVIAL_MODE)[g]


def test_verify_abstract():
    report = verify_realization(ABSTRACT)
    report >> AssertPasses
    len(report.checks) >> AssertEqual >> 40 + len(U_SYMBOLS) + 2


def test_verify_compositions():
    verify_realization(TRIVIAL_MODE) >> AssertPasses
    verify_realization(FERMIONIC_MODE) >> AssertPasses


def main():
    test_images()
    test_modes()
    test_rho_element()
    test_fermionic_projects_to_trivial()
    test_verify_abstract()
    test_verify_compositions()
    print('pass')


if __name__ == '__main__':
    main()
