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


"""The realization rho of U_q(gl(2/1)) in W

With t = q^x, p1 = q^lambda1, d = q - q^-1 and the mode-1 fermion b,

    rho(E12) = a+                               rho(K1) = p1 t (b b+ + q b+ b)
    rho(E13) = t^-1 b+                          rho(K2) = t^-1 k2
    rho(E23) = -q a b+ + t (b b+ + q b+ b) e23   rho(K3) = (b b+ + q^-1 b+ b) k3
    rho(E32) = q^-1 a+ b k2 k3 + e32
    rho(E21) = -(a/d) (p1 q^-1 t (b b+ + q b+ b) k2^-1 - p1^-1 q t^-1 (b b+ + q^-1 b+ b) k2) - p1^-1 b e23 k2
    rho(E31) = q^-1 p1 a+ a b t k3 + q^-2 p1 a t (b b+ + q b+ b) k2^-1 e32 + q^-1 b (p1 k3 - p1^-1 k3^-1)/d

b b+ + q^+-1 b+ b is stored expanded as 1 + (q^+-1 - 1) b+ b. The gl(1/1) factor is left abstract, or
replaced by the trivial or fermionic realization.
"""

import logging
from functools import lru_cache
from typing import Dict

from ._core import NamedEnum, UsageError
from .pipeable import Pipeable
from .report import Check, Report
from .scalarfield import ONE, QDIFF, p1, q, qPow
from .uqgl21 import U_SYMBOLS, UElement, relation_set, uGenerator, _checkSymbol
from .walgebra import WElement, TRIVIAL, FERMIONIC, generator, w_one, w_zero, w_scale, w_mul, parity, \
    isHomogeneous, substitute_gl11, fermionModesUsed, parametersUsed, renderWElement


__all__ = [
    'Mode', 'ABSTRACT', 'TRIVIAL_MODE', 'FERMIONIC_MODE', 'MODES', 'RealizationMap', 'asMode', 'rho',
    'realization_map', 'rho_element', 'verify_realization', 'Rho',
]


_logger = logging.getLogger(__name__)


class Mode(NamedEnum):
    pass

ABSTRACT = Mode('abstract')
TRIVIAL_MODE = Mode('trivial')
FERMIONIC_MODE = Mode('fermionic')
MODES = (ABSTRACT, TRIVIAL_MODE, FERMIONIC_MODE)


def asMode(mode) -> Mode:
    name = mode.name if isinstance(mode, NamedEnum) else str(mode)
    for m in MODES:
        if m.name == name:
            return m
    raise UsageError('Unknown subalgebra mode "%s" (expected abstract, trivial or fermionic)' % name)


_GL11 = {TRIVIAL_MODE.name: TRIVIAL, FERMIONIC_MODE.name: FERMIONIC}


@lru_cache(maxsize=None)
def _abstractImages() -> Dict[str, WElement]:
    g = generator
    ap, a, t, tinv, bp, b = g('a+'), g('a'), g('t'), g('tinv'), g('b1+'), g('b1')
    e23, e32, k2, k2inv, k3, k3inv = g('e23'), g('e32'), g('k2'), g('k2inv'), g('k3'), g('k3inv')
    n1 = bp * b
    qPlus = w_one() + n1 * (q - ONE)               # b b+ + q b+ b
    qMinus = w_one() + n1 * (ONE / q - ONE)        # b b+ + q^-1 b+ b
    d = QDIFF
    images = {
        'E12': ap,
        'E13': tinv * bp,
        'E23': -(a * bp) * q + t * qPlus * e23,
        'E32': ap * b * k2 * k3 * qPow(-1) + e32,
        'E21': -(a * (t * qPlus * k2inv * (p1 * qPow(-1)) - tinv * qMinus * k2 * (q / p1))) / d - b * e23 * k2 / p1,
        'E31': ap * a * b * t * k3 * (p1 * qPow(-1)) + a * t * qPlus * k2inv * e32 * (p1 * qPow(-2))
               + b * (k3 * p1 - k3inv / p1) * (qPow(-1) / d),
        'K1': t * qPlus * p1,
        'K1inv': tinv * qMinus / p1,
        'K2': tinv * k2,
        'K2inv': t * k2inv,
        'K3': qMinus * k3,
        'K3inv': qPlus * k3inv,
    }
    return images


def rho(g: str) -> WElement:
    """The image of a generator with the gl(1/1) factor left abstract"""
    return _abstractImages()[_checkSymbol(g)]


class RealizationMap(object):
    """The images of every generator, inverse K's and the derived E13, E31 included"""

    def __init__(self, mode: Mode, images: Dict[str, WElement]):
        self.mode = mode
        self.images = images

    def __getitem__(self, g: str) -> WElement:
        return self.images[_checkSymbol(g)]

    def __repr__(self):
        return 'RealizationMap(%s)' % self.mode


@lru_cache(maxsize=None)
def _realizationMap(modeName: str) -> RealizationMap:
    mode = asMode(modeName)
    images = dict(_abstractImages())
    if mode is not ABSTRACT:
        images = {g: substitute_gl11(x, _GL11[mode.name]) for g, x in images.items()}
    return RealizationMap(mode, images)


def realization_map(mode=ABSTRACT) -> RealizationMap:
    return _realizationMap(asMode(mode).name)


def rho_element(u: UElement, mode=ABSTRACT) -> WElement:
    images = realization_map(mode).images
    total = w_zero()
    for word, c in u.terms():
        product = w_one()
        for letter in word:
            product = w_mul(product, images[letter])
        total = total + w_scale(product, c)
    return total


_EXPECTED_STRUCTURE = {
    # fermion modes and parameters the substituted images may use
    ABSTRACT.name: (frozenset([1]), frozenset(['p1'])),
    TRIVIAL_MODE.name: (frozenset([1]), frozenset(['p1', 'p2'])),
    FERMIONIC_MODE.name: (frozenset([1, 2]), frozenset(['p1', 'p2', 'p3'])),
}


def verify_realization(mode=ABSTRACT) -> Report:
    """rho(lhs) == rho(rhs) in W for every defining relation, plus parity and content of the images"""
    mode = asMode(mode)
    report = Report('realization relations (%s)' % mode.name)
    for r in relation_set():
        residual = rho_element(r.lhs, mode) - rho_element(r.rhs, mode)
        _logger.debug('%s: %s residual terms', r.name, len(residual))
        report.add(Check(r.name, r.family, not residual, len(residual), renderWElement(residual) if residual else ''))
    images = realization_map(mode).images
    for g in U_SYMBOLS:
        x, expected = images[g], uGenerator(g).parity
        ok = isHomogeneous(x) and parity(x) == expected
        report.add(Check('parity of rho(%s)' % g, 'structure', ok, 0 if ok else 1))
    modes = frozenset().union(*(fermionModesUsed(x) for x in images.values()))
    params = frozenset().union(*(parametersUsed(x) for x in images.values()))
    expectedModes, expectedParams = _EXPECTED_STRUCTURE[mode.name]
    report.add(Check('fermion modes %s' % sorted(modes), 'structure', modes == expectedModes, len(modes ^ expectedModes)))
    report.add(Check('parameters %s' % sorted(params), 'structure', params == expectedParams, len(params ^ expectedParams)))
    passed, failed = report.counts()
    _logger.info('realization %s: %s passed, %s failed', mode.name, passed, failed)
    return report


@Pipeable
def Rho(g, mode=ABSTRACT):
    if isinstance(g, UElement):
        return rho_element(g, mode)
    return realization_map(mode)[g]
