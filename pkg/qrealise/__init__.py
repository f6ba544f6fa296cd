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


"""Exact symbolic checks of a q-boson / fermion realization of U_q(gl(2/1))"""

_all = set(['QRealiseError', 'PoleError', 'MixedParityError', 'UnknownSymbolError', 'SubstitutionError',
            'InvalidRepresentationError', 'ModeError', 'ParseError', 'UsageError', 'NumericAssignment', 'Report',
            'Check', 'matrix', 'parser'])

import inspect


def _getPublicMembersOnly(module):
    def _isInOrIsChildOf(name, names):
        for parentName in names:
            if name[0:len(parentName)] == parentName:
                return True
        return False
    if hasattr(module, '__all__'):
        return list(module.__all__)
    names = ['qrealise.pipeable', module.__name__]
    members = [(name, o) for (name, o) in inspect.getmembers(module) if (name[0:1] != '_')]         # remove private
    members = [(name, o) for (name, o) in members if not (inspect.isbuiltin(o) or inspect.ismodule(o))]   # remove built-ins and modules
    members = [(name, o) for (name, o) in members if _isInOrIsChildOf(getattr(o, '__module__', '') or '', names)]
    return [name for (name, o) in members]


from ._core import QRealiseError, PoleError, MixedParityError, UnknownSymbolError, SubstitutionError, \
    InvalidRepresentationError, ModeError, ParseError, UsageError
from .config import NumericAssignment
from .report import Check, Report
from . import matrix

from . import pipeable
from .pipeable import *
_all.update(_getPublicMembersOnly(pipeable))

from . import scalarfield
from .scalarfield import *
_all.update(_getPublicMembersOnly(scalarfield))

from . import walgebra
from .walgebra import *
_all.update(_getPublicMembersOnly(walgebra))

from . import uqgl21
from .uqgl21 import *
_all.update(_getPublicMembersOnly(uqgl21))

# induced.weight replaces uqgl21.weight here, the latter stays reachable as uqgl21.weight
from . import induced
from .induced import *
_all.update(_getPublicMembersOnly(induced))

from . import realization
from .realization import *
_all.update(_getPublicMembersOnly(realization))

from . import fock
from .fock import *
_all.update(_getPublicMembersOnly(fock))

# parse, evaluate and render stay in the parser namespace as scalarfield has an evaluate
from . import parser

from . import testing
from .testing import *
_all.update(_getPublicMembersOnly(testing))

_all = list(_all)
_all.sort()
__all__ = _all
