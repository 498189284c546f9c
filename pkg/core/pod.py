"""
n-pods and their leg forms.

The leg of (p, P, d^2) is the linear form on P^16 whose value at embed(sigma)
is |sigma(p) - P|^2 - d^2.
"""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from dataclasses import dataclass

import numpy as np

from core.errors import ClassificationError, InputError
from core.rigid import apply
from core.scalars import DEFAULT_TOL, as_complex, as_float, is_exact, real_array, tolerance
from core.xspace import LABELS


@dataclass
class Pod:
    """
    platform points p_i, base points P_i and squared leg lengths d_i^2
    """
    platform: np.ndarray
    base: np.ndarray
    d2: np.ndarray

    def __post_init__(self):
        self.platform = _points(self.platform)
        self.base = _points(self.base)
        self.d2 = real_array(list(self.d2))
        n = len(self.platform)
        if len(self.base) != n or len(self.d2) != n:
            raise InputError('length mismatch: %d platform points, %d base points, %d lengths'
                             % (n, len(self.base), len(self.d2)))
        if any(d < 0 for d in self.d2):
            raise InputError('squared leg lengths must be non-negative')
        exact = {is_exact(self.platform), is_exact(self.base), is_exact(self.d2)}
        if n and len(exact) > 1:
            self.platform, self.base = as_float(self.platform), as_float(self.base)
            self.d2 = as_float(self.d2)

    @classmethod
    def from_pose(cls, platform, base, sigma):
        """pod whose legs are realized by the pose sigma"""
        platform, base = _points(platform), _points(base)
        d2 = [_norm2(apply(sigma, p) - P) for p, P in zip(platform, base)]
        return cls(platform, base, d2)

    @property
    def n(self):
        return len(self.platform)

    @property
    def exact(self):
        return self.n == 0 or is_exact(self.platform)

    def with_lengths(self, d2):
        return Pod(self.platform, self.base, d2)

    def legs(self):
        return zip(self.platform, self.base, self.d2)

    def to_float(self):
        return Pod(as_float(self.platform), as_float(self.base), as_float(self.d2))


def _points(values):
    values = list(values)
    if not values:
        return np.empty((0, 3), dtype=object)
    arr = real_array([list(v) for v in values])
    if arr.ndim != 2 or arr.shape[1] != 3:
        raise InputError('points must have 3 coordinates')
    return arr


def _norm2(v):
    return v @ v


class LegForm(object):
    """
    coefficients indexed like IsometryPoint coordinates:
    h: |p|^2 + |P|^2 - d^2, m_jk: -2 p_k P_j, x: -2 p, y: -2 P, r: 1
    """
    __slots__ = ('coefficients',)

    def __init__(self, coefficients):
        self.coefficients = coefficients
        assert len(coefficients) == 17 and coefficients[16] == 1

    def __getitem__(self, label):
        return self.coefficients[LABELS.index(label)]

    def __repr__(self):
        return 'LegForm(%s)' % ', '.join('%s=%s' % (k, c) for k, c in zip(LABELS, self.coefficients)
                                         if c != 0)


def leg_form(p, P, d2):
    p, P = real_array(p), real_array(P)
    d2 = real_array([d2])[0]
    parts = [p @ p + P @ P - d2]
    parts += [-2 * p[k] * P[j] for j in range(3) for k in range(3)]
    parts += list(-2 * p) + list(-2 * P) + [1]
    return LegForm(real_array(parts))


def leg_forms(pod):
    return [leg_form(p, P, d2) for p, P, d2 in pod.legs()]


def eval_leg(l, point):
    """exact when both the form and the point are exact"""
    if is_exact(l.coefficients) and point.exact:
        acc = 0
        for c, z in zip(l.coefficients, point.coords):
            if c != 0:
                acc = z * c + acc
        return acc
    return complex(as_complex(l.coefficients) @ as_complex(point.coords))


def spherical_residuals(pod, sigma):
    return [_norm2(apply(sigma, p) - P) - d2 for p, P, d2 in pod.legs()]


def pseudo_spherical_residuals(pod, beta, tol=DEFAULT_TOL):
    """
    r - 2 <p, x> - 2 <y, P> - 2 <M p, P> per leg, independent of the leg lengths
    """
    if beta.exact:
        if beta.h != 0:
            raise ClassificationError('not a boundary point')
    elif abs(beta.h) > tolerance(tol).bound(1.0):
        raise ClassificationError('not a boundary point')
    M, x, y, r = beta.M, beta.x, beta.y, beta.r
    if not (beta.exact and pod.exact):
        M, x, y, r = as_complex(M), as_complex(x), as_complex(y), complex(r)
        return [r - 2 * (as_float(p) @ x) - 2 * (y @ as_float(P)) - 2 * ((M @ as_float(p)) @ as_float(P))
                for p, P in zip(pod.platform, pod.base)]
    return [r - 2 * (x @ p) - 2 * (y @ P) - 2 * ((M @ p) @ P) for p, P in zip(pod.platform, pod.base)]
