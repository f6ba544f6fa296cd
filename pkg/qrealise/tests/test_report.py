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


from ..testing import AssertEqual
from ..report import Report, Check


def _report():
    r = Report('K relations')
    r.add(Check('K1*K2 = K2*K1', 'K-commutation', True))
    r.add(Check('K1*E12 = q*E12*K1', 'K-weight', False, 3, '(0,1): q'))
    r.add(Check('K2*E12 = E12*K2', 'K-weight', True))
    return r


def test_counts():
    r = _report()
    r.allPassed >> AssertEqual >> False
    r.counts() >> AssertEqual >> (2, 1)
    [c.name for c in r.failures] >> AssertEqual >> ['K1*E12 = q*E12*K1']
    r.families() >> AssertEqual >> ['K-commutation', 'K-weight']
    Report('empty').allPassed >> AssertEqual >> True
    r.extend(Report('more', [Check('t', 'boson', True)])).counts() >> AssertEqual >> (3, 1)
    repr(r) >> AssertEqual(keepWS=True) >> "Report('K relations', 3 passed, 1 failed)"


def test_render():
    lines = _report().render().split('\n')
    lines[0] >> AssertEqual >> 'K relations'
    lines[1].split() >> AssertEqual >> ['check', 'family', 'status', 'residual']
    lines[4].split()[-2:] >> AssertEqual >> ['FAIL', '3']
    lines[5] >> AssertEqual(keepWS=True) >> '    (0,1): q'
    lines[-1] >> AssertEqual >> '2 passed, 1 failed'
    # columns line up
    len({len(l) for l in lines[1:3]}) >> AssertEqual >> 1


def test_excluded_column():
    r = Report('fock', [Check('a', 'f', True, 0, '', 2), Check('b', 'f', True)])
    lines = r.render().split('\n')
    lines[1].split()[-1] >> AssertEqual >> 'excluded'
    lines[3].split()[-1] >> AssertEqual >> '2'
    lines[4].split() >> AssertEqual >> ['b', 'f', 'ok', '0']


def test_colour():
    coloured = _report().render(colour=True)
    ('\x1b[31mFAIL' in coloured) >> AssertEqual >> True
    ('\x1b[32mok' in coloured) >> AssertEqual >> True
    ('\x1b[' in _report().render()) >> AssertEqual >> False


def main():
    test_counts()
    test_render()
    test_excluded_column()
    test_colour()
    print('pass')


if __name__ == '__main__':
    main()
