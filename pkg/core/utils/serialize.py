"""
JSON codecs for points, isometries, pods, motions, bonds and reports.

Exact values are written as "p/q" strings, approximate ones as numbers.
Every document carries the schema tag "podbond-1".
"""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import json
import math
from collections import OrderedDict
from fractions import Fraction

import numpy as np

from core.analyze import CoincidenceWitness, MobiusFit, ParallelWitness, Partition, ProjectionMinimum
from core.bonds import RationalMotion
from core.errors import InputError
from core.pod import Pod
from core.scalars import (GaussianRational, format_rational, parse_rational,
                          scalar_from_json, scalar_to_json)
from core.xspace import IsometryPoint

SCHEMA = 'podbond-1'


def _reject_constant(name):
    raise InputError('non-finite value %s' % name)


def loads(text):
    """decimals are read as exact rationals, NaN and Infinity are rejected"""
    try:
        return json.loads(text, parse_float=Fraction, parse_constant=_reject_constant,
                          object_pairs_hook=OrderedDict)
    except json.JSONDecodeError as e:
        raise InputError('malformed JSON: %s' % e)


def load_json(path):
    try:
        with open(path) as f:
            return loads(f.read())
    except OSError as e:
        raise InputError('cannot read %s: %s' % (path, e.strerror))


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2, default=_default)


def _default(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (np.floating, np.integer, np.bool_)):
        return value.item()
    raise TypeError('cannot serialize %r' % (value,))


def document(payload):
    payload = dict(payload)
    payload['schema'] = SCHEMA
    return payload


def _require(obj, *keys):
    if not isinstance(obj, dict):
        raise InputError('expected a JSON object, got %s' % type(obj).__name__)
    missing = [k for k in keys if k not in obj]
    if missing:
        raise InputError('missing keys: %s' % ', '.join(missing))


# scalars and vectors


def real_to_json(value):
    if isinstance(value, GaussianRational):
        value = value.re
    if isinstance(value, (Fraction, int)) and not isinstance(value, bool):
        return format_rational(value)
    value = float(value)
    if not math.isfinite(value):
        raise InputError('non-finite value %r' % value)
    return value


def reals_to_json(values):
    return [real_to_json(v) for v in np.asarray(values, dtype=object).ravel()]


def _float_vector(values):
    return [float(v) for v in np.asarray(values).ravel()]


def real_from_json(value, exact=True):
    if exact:
        return parse_rational(value)
    if isinstance(value, str):
        return float(parse_rational(value))
    return float(value)


# points


def point_to_json(P):
    def scalars(values):
        return [scalar_to_json(v) for v in values]
    return OrderedDict([('backend', 'exact' if P.exact else 'float'),
                        ('h', scalar_to_json(P.h)),
                        ('M', [scalars(row) for row in P.M]),
                        ('x', scalars(P.x)), ('y', scalars(P.y)),
                        ('r', scalar_to_json(P.r))])


def point_from_json(obj):
    if not isinstance(obj, dict):
        raise InputError('expected a point object')
    backend = obj.get('backend', 'exact')
    if backend not in ('exact', 'float'):
        raise InputError('unknown backend %r' % (backend,))
    exact = backend == 'exact'
    if 'coordinates' in obj:
        coords = obj['coordinates']
        if not isinstance(coords, list):
            raise InputError('coordinates must be a list')
        return IsometryPoint([scalar_from_json(c, exact) for c in coords])
    _require(obj, 'h', 'M', 'x', 'y', 'r')
    M = obj['M']
    if not (isinstance(M, list) and len(M) == 3 and all(isinstance(row, list) and len(row) == 3
                                                         for row in M)):
        raise InputError('M must be a 3x3 array')
    for key in ('x', 'y'):
        if not (isinstance(obj[key], list) and len(obj[key]) == 3):
            raise InputError('%s must have 3 entries' % key)
    to = lambda v: scalar_from_json(v, exact)
    return IsometryPoint.from_blocks(to(obj['h']), [[to(v) for v in row] for row in M],
                                     [to(v) for v in obj['x']], [to(v) for v in obj['y']],
                                     to(obj['r']))


# isometries


def isometry_to_json(sigma):
    return OrderedDict([('M', [reals_to_json(row) for row in sigma.M]),
                        ('y', reals_to_json(sigma.y))])


# pods


def pod_to_json(pod):
    return OrderedDict([('platform', [reals_to_json(p) for p in pod.platform]),
                        ('base', [reals_to_json(P) for P in pod.base]),
                        ('d2', reals_to_json(pod.d2))])


def pod_from_json(obj):
    """decimal entries become exact rationals unless "backend" is "float" """
    _require(obj, 'platform', 'base', 'd2')
    exact = obj.get('backend', 'exact') == 'exact'
    for key in ('platform', 'base', 'd2'):
        if not isinstance(obj[key], list):
            raise InputError('%s must be a list' % key)
    for key in ('platform', 'base'):
        if not all(isinstance(p, list) and len(p) == 3 for p in obj[key]):
            raise InputError('points must have 3 coordinates')
    read = lambda v: real_from_json(v, exact)
    return Pod([[read(v) for v in p] for p in obj['platform']],
               [[read(v) for v in P] for P in obj['base']],
               [read(v) for v in obj['d2']])


# motions


def motion_to_json(motion):
    return OrderedDict([('coordinates', [[scalar_to_json(c) for c in p.coefficients]
                                         for p in motion.coordinates])])


def motion_from_json(obj):
    _require(obj, 'coordinates')
    coords = obj['coordinates']
    if not (isinstance(coords, list) and all(isinstance(c, list) for c in coords)):
        raise InputError('coordinates must be a list of coefficient lists')
    return RationalMotion([[scalar_from_json(c, exact=True) for c in p] for p in coords])


# bonds and reports


def line_to_json(line):
    if line is None:
        return None
    return OrderedDict([('point', reals_to_json(line.point)), ('direction', reals_to_json(line.direction))])


def mobius_to_json(kappa):
    if kappa is None:
        return None
    return OrderedDict([(k, scalar_to_json(getattr(kappa, k))) for k in 'abcd'])


def root_to_json(root):
    if root is None or isinstance(root, str):
        return root
    return scalar_to_json(root)


COLLINEARITY_NOTE = 'extension: carrier direction of the collinearity line'


def _direction(values):
    return None if values is None else _float_vector(values)


def bond_to_json(bond):
    out = OrderedDict([('class', str(bond.cls)), ('point', point_to_json(bond.point))])
    if bond.L is not None:
        out['L'], out['R'] = _direction(bond.L), _direction(bond.R)
    if bond.direction is not None:
        out['direction'] = _direction(bond.direction)
        out['direction_note'] = COLLINEARITY_NOTE
    if bond.planar_map is not None:
        out['map'] = mobius_to_json(bond.planar_map)
    if bond.root is not None:
        out['root'] = root_to_json(bond.root)
    return out


def certificate_to_json(cert):
    if cert is None:
        return None
    return OrderedDict([('sigma_left', isometry_to_json(cert.sigma_left)),
                        ('sigma_right', isometry_to_json(cert.sigma_right)),
                        ('normal_point', point_to_json(cert.normal_point)),
                        ('parameter', None if cert.parameter is None else float(cert.parameter))])


def classification_to_json(report):
    out = OrderedDict([('class', str(report.cls)), ('L', _direction(report.L)),
                       ('R', _direction(report.R)),
                       ('parameter', None if report.certificate is None or report.certificate.parameter is None
                        else float(report.certificate.parameter))])
    if report.direction is not None:
        out['direction'] = _direction(report.direction)
        out['direction_note'] = COLLINEARITY_NOTE
    if report.certificate is not None:
        out['normal_form'] = certificate_to_json(report.certificate)
    if report.note:
        out['note'] = report.note
    return out


def fit_to_json(fit):
    if fit is None:
        return OrderedDict([('equivalent', False), ('map', None)])
    return OrderedDict([('equivalent', fit.map is not None), ('status', fit.status),
                        ('residual', fit.residual), ('map', mobius_to_json(fit.map)),
                        ('kind', fit.kind)])


def _witness(value):
    if value is None:
        return None
    if isinstance(value, list):
        return [_witness(v) for v in value]
    if isinstance(value, ProjectionMinimum):
        return OrderedDict([('L', _float_vector(value.L)), ('R', _float_vector(value.R)),
                            ('map', mobius_to_json(value.map)), ('kind', value.kind),
                            ('residual', value.residual), ('status', value.status),
                            ('start', value.start)])
    if isinstance(value, Partition):
        return OrderedDict([('S', list(value.S)), ('T', list(value.T)),
                            ('platform_line', line_to_json(value.platform_line)),
                            ('base_line', line_to_json(value.base_line)),
                            ('degenerate', value.degenerate)])
    if isinstance(value, CoincidenceWitness):
        return OrderedDict([('collinear_side', value.collinear_side), ('S', list(value.S)),
                            ('T', list(value.T)), ('line', line_to_json(value.line))])
    if isinstance(value, ParallelWitness):
        return OrderedDict([('S', list(value.S)), ('T', list(value.T)),
                            ('platform_lines', [line_to_json(l) for l in value.platform_lines]),
                            ('base_lines', [line_to_json(l) for l in value.base_lines])])
    if isinstance(value, MobiusFit):
        return fit_to_json(value)
    raise TypeError('cannot serialize witness %r' % (value,))


def analysis_to_json(report):
    return OrderedDict([('level', report.level), ('flags', OrderedDict(report.flags)),
                        ('witnesses', OrderedDict((k, _witness(v)) for k, v in report.witnesses.items())),
                        ('minima', [_witness(m) for m in report.minima]),
                        ('metadata', OrderedDict(report.metadata)), ('note', report.note)])


def verification_to_json(verification):
    return OrderedDict([('member', verification.member), ('max_abs', float(verification.max_abs)),
                        ('residuals', [scalar_to_json(r) for r in verification.residuals])])


def error_to_json(error):
    return document({'error': str(error)})
