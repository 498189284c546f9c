from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import argparse
import sys

import numpy as np

import analyze_configs as cfg
from core.analyze import mobility_one_report, mobility_two_report, mobius_fit
from core.bonds import (OrientedLine, butterfly_bond, collinearity_bond, limit_bonds, mobius_bond,
                        mobius_bond_from_map, rotation_motion, verify_bond)
from core.boundary import classification_report
from core.errors import InputError, PodBondError, VerificationError
from core.planar import project_points
from core.pod import spherical_residuals
from core.scalars import as_complex, max_abs, parse_rational, tolerance
from core.utils import serialize, tables


def rational(value):
    return parse_rational(value)


def real(value):
    return float(parse_rational(value))


def vector(value):
    parts = value.split(',')
    if len(parts) != 3:
        raise argparse.ArgumentTypeError('expected three comma separated numbers, got %r' % value)
    try:
        return [parse_rational(v) for v in parts]
    except InputError as e:
        raise argparse.ArgumentTypeError(str(e))


def line(value):
    """point:direction, e.g. 0,0,0:0,0,-1"""
    if ':' not in value:
        raise argparse.ArgumentTypeError('expected point:direction, got %r' % value)
    point, direction = value.split(':', 1)
    return OrientedLine(vector(point), vector(direction))


def coefficient(value):
    try:
        return complex(parse_rational(value))
    except InputError:
        try:
            return complex(value.replace(' ', ''))
        except ValueError:
            raise argparse.ArgumentTypeError('malformed coefficient %r' % value)


def mobius_map(value):
    parts = value.split(',')
    if len(parts) != 4:
        raise argparse.ArgumentTypeError('expected a,b,c,d, got %r' % value)
    return [coefficient(v) for v in parts]


def add_motion_arguments(parser):
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument('--motion', type=str, default=None, help='rational motion JSON file')
    source.add_argument('--axis', type=line, default=None,
                        help='rotation family about the line point:direction, rational entries')
    parser.add_argument('--motion-out', dest='motion_out', type=str, default=None,
                        help='write the motion used to this JSON file')


def parse_args(argv=None):
    parser = argparse.ArgumentParser(description='Bonds and mobility conditions of n-pods')
    parser.add_argument('--quiet', action='store_true', help='no status lines or progress bars')
    parser.add_argument('--summary', action='store_true', help='print tables on stderr')
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    analyze = sub.add_parser('analyze', help='necessary conditions for mobility 1 or 2')
    analyze.add_argument('--pod', type=str, required=True, help='pod JSON file')
    analyze.add_argument('--level', type=int, default=1, choices=(1, 2))
    analyze.add_argument('--config', type=str, default='default', help='quick | default | thorough')
    analyze.add_argument('--starts', type=int, default=None, help='number of search starts')
    analyze.add_argument('--seed', type=int, default=None, help='seed of the starts')
    analyze.add_argument('--tol', type=real, default=None, help='tolerance')
    analyze.add_argument('--max-iter', dest='max_iter', type=int, default=None, help='iterations per start')
    analyze.add_argument('--k', dest='k_minima', type=int, default=None, help='minima needed for (a)')

    classify = sub.add_parser('classify', help='class, vectors and normal form of a boundary point')
    classify.add_argument('--point', type=str, required=True)
    classify.add_argument('--tol', type=real, default=1e-9)

    motion = sub.add_parser('verify-motion', help='spherical residuals along a rational motion')
    motion.add_argument('--pod', type=str, required=True)
    add_motion_arguments(motion)
    motion.add_argument('--samples', type=int, default=12)
    motion.add_argument('--tol', type=real, default=1e-9)
    motion.add_argument('--plot', type=str, default=None, help='CSV of per-leg residuals')

    limits = sub.add_parser('limit-bonds', help='bonds at the roots of h(t)')
    add_motion_arguments(limits)
    limits.add_argument('--pod', type=str, default=None, help='verify the bonds against this pod')
    limits.add_argument('--tol', type=real, default=1e-9)

    bond = sub.add_parser('make-bond', help='bond from geometric data')
    bond.add_argument('kind', choices=('butterfly', 'collinearity', 'inversion', 'similarity'))
    bond.add_argument('--gL', type=line, default=None, help='left line point:direction')
    bond.add_argument('--gR', type=line, default=None, help='right line point:direction')
    bond.add_argument('--g', type=line, default=None, help='collinearity line point:direction')
    bond.add_argument('--side', choices=('left', 'right'), default='left')
    bond.add_argument('--L', type=vector, default=None)
    bond.add_argument('--R', type=vector, default=None)
    bond.add_argument('--parameter', type=rational, default=None, help='r or gamma of the normal form')
    bond.add_argument('--map', type=mobius_map, default=None, help='a,b,c,d of the planar map')
    bond.add_argument('--pod', type=str, default=None, help='verify the bond against this pod')
    bond.add_argument('--tol', type=real, default=1e-9)

    project = sub.add_parser('project-check', help='Möbius fit of the projections along L and R')
    project.add_argument('--pod', type=str, required=True)
    project.add_argument('--L', type=vector, required=True)
    project.add_argument('--R', type=vector, required=True)
    project.add_argument('--tol', type=real, default=1e-9)

    return parser.parse_args(argv)


def status(args, message):
    if not args.quiet:
        print('==> ' + message, file=sys.stderr)


def load_pod(path):
    return serialize.pod_from_json(serialize.load_json(path))


def run_analyze(args):
    getattr(cfg, args.config)(args)
    args.progress = not args.quiet
    status(args, 'Loading pod..')
    pod = load_pod(args.pod)
    status(args, 'Searching projection pairs (%d starts, seed %d)..' % (args.starts, args.seed))
    report = (mobility_one_report if args.level == 1 else mobility_two_report)(pod, args)
    if args.summary:
        tables.print_table(tables.flags_table(report))
        tables.print_table(tables.minima_table(report.minima, limit=10))
    return serialize.analysis_to_json(report), 0


def run_classify(args):
    point = serialize.point_from_json(serialize.load_json(args.point))
    return serialize.classification_to_json(classification_report(point, args.tol)), 0


def load_motion(args):
    if args.axis is not None:
        motion = rotation_motion(args.axis)
    else:
        motion = serialize.motion_from_json(serialize.load_json(args.motion))
    if args.motion_out:
        with open(args.motion_out, 'w') as f:
            f.write(serialize.dumps(serialize.document(serialize.motion_to_json(motion))))
    return motion


def motion_samples(count):
    """half-integers symmetric about 0"""
    return [parse_rational('%d/2' % (2 * k - count + 1)) for k in range(count)]


def run_verify_motion(args):
    pod = load_pod(args.pod)
    motion = load_motion(args)
    if args.samples < 1:
        raise InputError('at least one sample is needed')
    ts, rows = [], []
    for t in motion_samples(args.samples):
        if motion.h(t) == 0:
            continue
        ts.append(t)
        rows.append(spherical_residuals(pod, motion.pose(t)))
    if not rows:
        raise InputError('no sample with h(t) != 0')
    values = as_complex(np.asarray(rows, dtype=object))
    worst = max_abs(values)
    ok = worst <= tolerance(args.tol).bound(1.0)
    if args.summary:
        tables.print_table(tables.residual_table(values, ts))
    if args.plot:
        data = np.hstack([np.array([[float(t)] for t in ts]), np.abs(values)])
        header = ','.join(['t'] + ['leg%d' % i for i in range(pod.n)])
        np.savetxt(args.plot, data, delimiter=',', header=header, comments='')
    out = {'samples': [serialize.real_to_json(t) for t in ts], 'max_abs': float(worst),
           'self_motion': bool(ok)}
    return out, 0 if ok else VerificationError.exit_code


def _bond_document(bond, args):
    out = serialize.bond_to_json(bond)
    if getattr(args, 'pod', None):
        out['verification'] = serialize.verification_to_json(verify_bond(bond, load_pod(args.pod), args.tol))
    return out


def run_limit_bonds(args):
    motion = load_motion(args)
    bonds = limit_bonds(motion, args.tol)
    return {'bonds': [_bond_document(b, args) for b in bonds]}, 0


def run_make_bond(args):
    if args.kind == 'butterfly':
        if args.gL is None or args.gR is None:
            raise InputError('butterfly bonds need --gL and --gR')
        bond = butterfly_bond(args.gL, args.gR, args.tol)
    elif args.kind == 'collinearity':
        if args.g is None:
            raise InputError('collinearity bonds need --g')
        bond = collinearity_bond(args.g, args.side, args.tol)
    else:
        if args.L is None or args.R is None:
            raise InputError('%s bonds need --L and --R' % args.kind)
        if args.map is not None:
            bond = mobius_bond_from_map(args.L, args.R, args.map, args.tol)
        elif args.parameter is not None:
            bond = mobius_bond(args.L, args.R, args.kind, args.parameter, tol=args.tol)
        else:
            raise InputError('%s bonds need --parameter or --map' % args.kind)
    return _bond_document(bond, args), 0


def run_project_check(args):
    pod = load_pod(args.pod)
    fit = mobius_fit(project_points(pod.platform, args.L), project_points(pod.base, args.R), args.tol)
    return serialize.fit_to_json(fit), 0


COMMANDS = {
    'analyze': run_analyze,
    'classify': run_classify,
    'verify-motion': run_verify_motion,
    'limit-bonds': run_limit_bonds,
    'make-bond': run_make_bond,
    'project-check': run_project_check,
}


def main(argv=None):
    args = parse_args(argv)
    try:
        payload, code = COMMANDS[args.command](args)
        print(serialize.dumps(serialize.document(payload)))
    except PodBondError as e:
        print(serialize.dumps(serialize.error_to_json(e)))
        return e.exit_code
    return code


if __name__ == '__main__':
    sys.exit(main())
