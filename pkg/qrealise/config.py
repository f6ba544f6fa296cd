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


import os
from dataclasses import dataclass, fields
from fractions import Fraction

from ._core import UsageError


NMAX_RANGE = (2, 12)
DIM_RANGE = (4, 32)

DEFAULT_NMAX = 8
DEFAULT_LEMMA_NMAX = 6
DEFAULT_FOCK_DIM = 8
DEFAULT_DYSON_DIM = 6


@dataclass(frozen=True)
class NumericAssignment:
    """Exact rational values for q and p_i = q^lambda_i, distinct primes by default"""
    q: Fraction = Fraction(3, 2)
    p1: Fraction = Fraction(2)
    p2: Fraction = Fraction(3)
    p3: Fraction = Fraction(5)

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, Fraction(getattr(self, f.name)))
        if self.q in (0, 1, -1):
            raise UsageError('q = %s is a deformation singularity' % self.q)
        for name in ('p1', 'p2', 'p3'):
            if getattr(self, name) == 0:
                raise UsageError('%s must be nonzero (it stands for q^lambda)' % name)

    def values(self):
        return (self.q, self.p1, self.p2, self.p3)

    def asStrings(self):
        return {f.name: str(getattr(self, f.name)) for f in fields(self)}

    @classmethod
    def fromStrings(cls, **texts):
        values = {}
        for name, text in texts.items():
            if text is None:
                continue
            try:
                values[name] = Fraction(text)
            except (ValueError, ZeroDivisionError):
                raise UsageError('--%s expects a rational such as 3/2, got "%s"' % (name, text))
        return cls(**values)


def checkInRange(name, value, bounds):
    lo, hi = bounds
    if not lo <= value <= hi:
        raise UsageError('--%s must lie in [%s, %s], got %s' % (name, lo, hi, value))
    return value


def useColour(stream=None):
    # NO_COLOR wins whenever it is present, even if empty
    if 'NO_COLOR' in os.environ:
        return False
    return bool(stream is not None and getattr(stream, 'isatty', lambda: False)())
