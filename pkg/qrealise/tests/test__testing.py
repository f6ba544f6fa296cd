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


from .._testing import HookStdOutErrToLines, AssertRaises
from ..testing import AssertEqual, AssertZero, AssertPasses
from ..report import Report, Check
from ..scalarfield import q, qinv, ZERO
from ..walgebra import generator, w_zero


def testStdoutHooker():
    with HookStdOutErrToLines() as outerr:
        lines = outerr[0]
        print("hello")
        assert len(lines) == 1, lines
        assert lines[0] == "hello", lines
        print()
        print("there", "is", "\n", "another line\nagain")
        print()
        assert len(lines) == 6, lines
        assert lines[2] == "there is ", lines
        assert lines[3] == " another line", lines
        assert lines[4] == "again", lines
        assert lines[5] == "", lines
        assert not outerr[0] is outerr[1]


def testAssertRaises():
    with AssertRaises(NotImplementedError) as e:
        raise NotImplementedError()
    assert e.exceptionType == NotImplementedError, e.exceptionType

    # no error
    try:
        with AssertRaises(NotImplementedError) as e:
            pass
    except AssertionError:
        assert e.exceptionType is None, e.exceptionType

    # wrong error
    class Fred(Exception): pass
    try:
        with AssertRaises(NotImplementedError) as e:
            raise Fred
    except AssertionError:
        assert e.exceptionType == Fred, e.exceptionType

    # message filter
    with AssertRaises(ValueError, 'pole'):
        raise ValueError('a pole at q = 1')
    try:
        with AssertRaises(ValueError, 'pole'):
            raise ValueError('something else')
    except AssertionError:
        pass
    else:
        assert False


def testAssertions():
    'a * b' >> AssertEqual >> 'a*b'
    AssertEqual('a * b', 'a*b', keepWS=True, returnResult=True) >> AssertEqual >> False
    q * qinv >> AssertEqual >> 1
    with AssertRaises(AssertionError, 'expected a+ but got t'):
        generator('t') >> AssertEqual >> generator('a+')
    w_zero() >> AssertZero
    ZERO >> AssertZero
    with AssertRaises(AssertionError):
        q >> AssertZero
    Report('fine', [Check('x', 'f', True)]) >> AssertPasses
    with AssertRaises(AssertionError, 'FAIL'):
        Report('broken', [Check('x', 'f', False, 2)]) >> AssertPasses


def main():
    testStdoutHooker()
    testAssertRaises()
    testAssertions()
    print('pass')


if __name__ == '__main__':
    main()
