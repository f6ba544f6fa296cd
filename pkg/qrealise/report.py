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


from typing import NamedTuple, Optional, List


_GREEN = '\x1b[32m'
_RED = '\x1b[31m'
_RESET = '\x1b[0m'


class Check(NamedTuple):
    name: str
    family: str
    passed: bool
    residual: int = 0                   # number of nonzero residual terms or entries
    detail: str = ''
    excluded: Optional[int] = None      # basis states left out near a truncation boundary


class Report(object):
    """The outcome of a verification suite - checks keep the order they were run in"""

    def __init__(self, title: str, checks: List[Check] = None):
        self.title = title
        self.checks = list(checks or [])

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, other: 'Report') -> 'Report':
        self.checks.extend(other.checks)
        return self

    @property
    def allPassed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    def counts(self):
        failed = len(self.failures)
        return len(self.checks) - failed, failed

    def families(self):
        seen = []
        for c in self.checks:
            if c.family not in seen:
                seen.append(c.family)
        return seen

    def render(self, colour: bool = False) -> str:
        withExcluded = any(c.excluded is not None for c in self.checks)
        headers = ['check', 'family', 'status', 'residual'] + (['excluded'] if withExcluded else [])
        rows = []
        for c in self.checks:
            row = [c.name, c.family, 'ok' if c.passed else 'FAIL', str(c.residual)]
            if withExcluded:
                row.append('' if c.excluded is None else str(c.excluded))
            rows.append(row)
        widths = [max([len(h)] + [len(r[i]) for r in rows]) for i, h in enumerate(headers)]

        def line(cells, status=None):
            padded = [cell.ljust(w) for cell, w in zip(cells, widths)]
            if colour and status is not None:
                padded[2] = (_GREEN if status else _RED) + padded[2] + _RESET
            return '  '.join(padded).rstrip()

        lines = [self.title, line(headers), line(['-' * w for w in widths])]
        for c, row in zip(self.checks, rows):
            lines.append(line(row, c.passed))
            if not c.passed and c.detail:
                lines.append('    ' + c.detail)
        passed, failed = self.counts()
        lines.append('%s passed, %s failed' % (passed, failed))
        return '\n'.join(lines)

    def __repr__(self):
        passed, failed = self.counts()
        return 'Report(%r, %s passed, %s failed)' % (self.title, passed, failed)
