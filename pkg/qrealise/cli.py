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


"""qrealise normal-order <expr> | verify <suite> [flags] | matrix <generator> --dim D --mode M [--out path]

Exit status is 0 on success, 1 when a verification check fails and 2 for usage and parse errors.
"""

import argparse, json, logging, sys

from ._core import ParseError, QRealiseError, UsageError
from .config import NMAX_RANGE, DIM_RANGE, DEFAULT_NMAX, DEFAULT_LEMMA_NMAX, DEFAULT_FOCK_DIM, DEFAULT_DYSON_DIM, \
    NumericAssignment, checkInRange, useColour
from .fock import QBOSON, DYSON, fock_matrix, check_relations_on_fock, dyson_check
from .induced import verify_induced
from .matrix import entries
from .parser import parse, evaluate, algebraOf, U_ALGEBRA, W_ALGEBRA
from .realization import ABSTRACT, TRIVIAL_MODE, FERMIONIC_MODE, asMode, rho_element, verify_realization
from .scalarfield import isScalar, renderScalar
from .uqgl21 import UElement, verify_lemma, verify_straighten
from .walgebra import w_scalar, renderWElement


_logger = logging.getLogger(__name__)

SUITES = (
    'relations-abstract', 'relations-trivial', 'relations-fermionic', 'lemma1', 'straighten', 'induced', 'fock',
    'dyson', 'all',
)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


# commands

def cmd_normal_order(text: str) -> str:
    """The canonical normal-ordered form of an expression over W"""
    ast = parse(text)
    if algebraOf(ast, text) == U_ALGEBRA:
        raise UsageError('"%s" is in the abstract algebra - normal-order works in W, try "verify straighten"' % text)
    x = evaluate(ast, text)
    return renderWElement(w_scalar(x) if isScalar(x) else x)


def _assignment(args):
    texts = {name: getattr(args, name, None) for name in ('q', 'p1', 'p2', 'p3')}
    if not getattr(args, 'numeric', False):
        given = [name for name, text in texts.items() if text is not None]
        if given:
            raise UsageError('--%s needs --numeric' % given[0])
        return None
    return NumericAssignment.fromStrings(**texts)


def cmd_verify(suite: str, nmax=None, dim=None, mode=None, assignment=None, boson=QBOSON):
    """The reports for suite, in a fixed order"""
    if suite not in SUITES:
        raise UsageError('Unknown suite "%s" (expected one of %s)' % (suite, ', '.join(SUITES)))
    if nmax is not None:
        checkInRange('nmax', nmax, NMAX_RANGE)
    if dim is not None:
        checkInRange('dim', dim, DIM_RANGE)
    runs = {
        'relations-abstract': lambda: verify_realization(ABSTRACT),
        'relations-trivial': lambda: verify_realization(TRIVIAL_MODE),
        'relations-fermionic': lambda: verify_realization(FERMIONIC_MODE),
        'lemma1': lambda: verify_lemma(DEFAULT_LEMMA_NMAX if nmax is None else nmax),
        'straighten': lambda: verify_straighten(DEFAULT_LEMMA_NMAX if nmax is None else nmax),
        'induced': lambda: verify_induced(DEFAULT_NMAX if nmax is None else nmax),
        'fock': lambda: check_relations_on_fock(
            FERMIONIC_MODE if mode is None else mode, DEFAULT_FOCK_DIM if dim is None else dim, assignment, boson),
        'dyson': lambda: dyson_check(DEFAULT_DYSON_DIM if dim is None else dim),
    }
    names = SUITES[:-1] if suite == 'all' else (suite,)
    reports = []
    for name in names:
        _logger.info('running %s', name)
        reports.append(runs[name]())
    return reports


def cmd_matrix(generator: str, dim: int, mode=FERMIONIC_MODE, assignment=None, boson=QBOSON) -> dict:
    """The Fock matrix of rho(generator) as a JSON-ready document, scalars as canonical strings"""
    checkInRange('dim', dim, DIM_RANGE)
    mode = asMode(mode)
    ast = parse(generator)
    if algebraOf(ast, generator) == W_ALGEBRA:
        raise UsageError('"%s" is over W - matrix takes an expression in E12..E31, K1..K3' % generator)
    u = evaluate(ast, generator)
    if not isinstance(u, UElement):
        u = UElement({(): u})
    x = rho_element(u, mode)
    modes = (1,) if mode is TRIVIAL_MODE else (1, 2)
    fm = fock_matrix(x, dim, assignment, modes, boson)
    return {
        'generator': generator,
        'mode': mode.name,
        'dim': dim,
        'fermionModes': list(fm.modes),
        'basis': [[n, list(occ)] for n, occ in fm.labels],
        'entries': [[i, j, renderScalar(v)] for (i, j), v in entries(fm.matrix)],
        'boundary': list(fm.boundary),
        'assignment': None if assignment is None else assignment.asStrings(),
    }


# argument handling

def _addNumericFlags(p):
    p.add_argument('--numeric', action='store_true', help='evaluate entries at exact rationals')
    for name, default in NumericAssignment().asStrings().items():
        p.add_argument('--%s' % name, default=None, help='rational value of %s (default %s)' % (name, default))


def _argParser():
    parser = argparse.ArgumentParser(prog='qrealise', description='Exact checks of the q-boson / fermion realization of U_q(gl(2/1))')
    parser.add_argument('--verbose', '-v', action='store_true', help='log every check to stderr')
    commands = parser.add_subparsers(dest='command', required=True)

    p = commands.add_parser('normal-order', help='print the normal-ordered form of an expression over W')
    p.add_argument('expr')

    p = commands.add_parser('verify', help='run a verification suite')
    p.add_argument('suite', choices=SUITES)
    p.add_argument('--nmax', type=int, default=None)
    p.add_argument('--dim', type=int, default=None)
    p.add_argument('--mode', choices=[TRIVIAL_MODE.name, FERMIONIC_MODE.name], default=None)
    p.add_argument('--dyson', action='store_true', help='render the boson through an ordinary oscillator')
    _addNumericFlags(p)

    p = commands.add_parser('matrix', help='write the Fock matrix of rho(generator) as JSON')
    p.add_argument('generator')
    p.add_argument('--dim', type=int, required=True)
    p.add_argument('--mode', choices=[TRIVIAL_MODE.name, FERMIONIC_MODE.name], default=FERMIONIC_MODE.name)
    p.add_argument('--dyson', action='store_true')
    p.add_argument('--out', default=None, help='output path (stdout if omitted)')
    _addNumericFlags(p)
    return parser


def _run(args) -> int:
    if args.command == 'normal-order':
        print(cmd_normal_order(args.expr))
        return EXIT_OK
    boson = DYSON if args.dyson else QBOSON
    assignment = _assignment(args)
    if args.command == 'verify':
        reports = cmd_verify(args.suite, args.nmax, args.dim, args.mode, assignment, boson)
        colour = useColour(sys.stdout)
        for report in reports:
            print(report.render(colour))
            print()
        return EXIT_OK if all(r.allPassed for r in reports) else EXIT_FAILED
    doc = cmd_matrix(args.generator, args.dim, args.mode, assignment, boson)
    text = json.dumps(doc, indent=2)
    if args.out:
        with open(args.out, 'w') as f:
            f.write(text + '\n')
        _logger.info('wrote %s', args.out)
    else:
        print(text)
    return EXIT_OK


def main(argv=None) -> int:
    try:
        args = _argParser().parse_args(argv)
    except SystemExit as ex:
        return ex.code if isinstance(ex.code, int) else EXIT_USAGE
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s',
        stream=sys.stderr,
    )
    try:
        return _run(args)
    except ParseError as ex:
        print('error: %s' % ex.pretty(), file=sys.stderr)
    except (QRealiseError, ZeroDivisionError) as ex:
        print('error: %s' % ex, file=sys.stderr)
    return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
