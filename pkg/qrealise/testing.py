# *******************************************************************************
#
#    Copyright (c) 2019-2020 David Briant
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


from ._testing import HookStdOutErrToLines, AssertRaises
from .pipeable import Pipeable


@Pipeable
def AssertEqual(actual, expected, suppressMsg=False, keepWS=False, returnResult=False):
    # exact comparison only - every value in this package is a rational or a rational function
    if keepWS:
        act, exp = actual, expected
    else:
        act = actual.replace(' ', '').replace('\n', '') if isinstance(actual, str) else actual
        exp = expected.replace(' ', '').replace('\n', '') if isinstance(expected, str) else expected
    equal = act == exp
    if returnResult:
        return equal
    if not equal:
        if suppressMsg:
            raise AssertionError()
        raise AssertionError('expected %s but got %s' % (_show(expected), _show(actual)))


@Pipeable
def AssertZero(actual):
    if actual:
        raise AssertionError('expected zero but got %s' % _show(actual))


@Pipeable
def AssertPasses(report):
    if not report.allPassed:
        raise AssertionError('failed checks:\n%s' % report.render(colour=False))


def _show(x):
    if isinstance(x, str):
        return '"%s"' % x
    render = getattr(x, 'render', None)
    if callable(render):
        try:
            return render()
        except TypeError:
            pass
    return repr(x)
