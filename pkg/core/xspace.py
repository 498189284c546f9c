"""
The compactification X of SE(3) inside P^16.

Coordinates are ordered (h, m11, m12, ..., m33, x1, x2, x3, y1, y2, y3, r).
Points are stored normalized: exact points have their first nonzero coordinate
equal to 1, approximate points are divided by their first coordinate of largest
magnitude.
"""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from collections import OrderedDict
from dataclasses import dataclass

import numpy as np

from core.errors import DegeneracyError, InputError
from core.scalars import (DEFAULT_TOL, scalar_array, is_exact, as_complex,
                          all_zero, first_max_index, max_abs, det3, tolerance)


LABELS = (['h'] + ['m%d%d' % (j + 1, k + 1) for j in range(3) for k in range(3)]
          + ['x1', 'x2', 'x3', 'y1', 'y2', 'y3', 'r'])

H, M_SLICE, X_SLICE, Y_SLICE, R = 0, slice(1, 10), slice(10, 13), slice(13, 16), 16


def normalize_coords(coords):
    if is_exact(coords):
        for c in coords:
            if c != 0:
                return coords / c
        raise DegeneracyError('zero point')
    if max_abs(coords) == 0:
        raise DegeneracyError('zero point')
    return coords / coords[first_max_index(coords)]


def concat_blocks(h, M, x, y, r):
    out = np.empty(17, dtype=object)
    out[H] = h
    out[M_SLICE] = list(np.asarray(M, dtype=object).ravel())
    out[X_SLICE] = list(np.asarray(x, dtype=object))
    out[Y_SLICE] = list(np.asarray(y, dtype=object))
    out[R] = r
    return out


class IsometryPoint(object):
    """
    point of P^16 given by its 17 homogeneous coordinates
    """
    __slots__ = ('coords',)

    def __init__(self, coords, normalize=True):
        coords = scalar_array(coords)
        if coords.shape != (17,):
            raise InputError('a point of P^16 has 17 coordinates, got shape %s' % (coords.shape,))
        self.coords = normalize_coords(coords) if normalize else coords

    @classmethod
    def from_blocks(cls, h, M, x, y, r, normalize=True):
        return cls(concat_blocks(h, M, x, y, r), normalize=normalize)

    @property
    def exact(self):
        return is_exact(self.coords)

    @property
    def h(self):
        return self.coords[H]

    @property
    def M(self):
        return self.coords[M_SLICE].reshape(3, 3)

    @property
    def x(self):
        return self.coords[X_SLICE]

    @property
    def y(self):
        return self.coords[Y_SLICE]

    @property
    def r(self):
        return self.coords[R]

    def blocks(self):
        return self.h, self.M, self.x, self.y, self.r

    def to_float(self):
        if not self.exact:
            return self
        return IsometryPoint(as_complex(self.coords))

    def __eq__(self, other):
        if not isinstance(other, IsometryPoint):
            return NotImplemented
        return proj_eq(self, other)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    __hash__ = None

    def __repr__(self):
        return 'IsometryPoint(%s)' % ', '.join('%s=%s' % (k, v) for k, v in zip(LABELS, self.coords)
                                               if v != 0)


def vertex(exact=True):
    """the point (0 : ... : 0 : 1), never a bond"""
    coords = [0] * 16 + [1]
    if not exact:
        coords = [0j] * 16 + [1 + 0j]
    return IsometryPoint(coords)


def from_coordinates(values):
    return IsometryPoint(values)


def _common(*points):
    if all(P.exact for P in points):
        return points
    return tuple(P.to_float() for P in points)


# membership


def residual_blocks(h, M, x, y, r):
    """
    the listed quadratic generators of the ideal of X evaluated on raw blocks
    works for any ring of entries (GaussianRational, complex, GaussPoly)
    """
    MMt, MtM = M @ M.T, M.T @ M
    h2 = h * h

    def minus_diagonal(A):
        return np.array([A[i, j] - h2 if i == j else A[i, j] for i in range(3) for j in range(3)],
                        dtype=object)

    out = OrderedDict()
    out['MMt-h2I'] = minus_diagonal(MMt)
    out['MtM-h2I'] = minus_diagonal(MtM)
    out['det-h3'] = np.array([det3(M) - h2 * h], dtype=object)
    out['Mty+hx'] = np.array(list(M.T @ y + h * x), dtype=object)
    out['Mx+hy'] = np.array(list(M @ x + h * y), dtype=object)
    out['xx-rh'] = np.array([x @ x - r * h], dtype=object)
    out['yy-rh'] = np.array([y @ y - r * h], dtype=object)
    return out


@dataclass
class ResidualReport:
    """
    residuals of the listed generators, a necessary condition for membership in X
    """
    residuals: OrderedDict
    exact: bool

    @property
    def max_abs(self):
        return max(max_abs(v) for v in self.residuals.values())

    def vanishes(self, tol=DEFAULT_TOL):
        if self.exact:
            return all(all(c == 0 for c in v) for v in self.residuals.values())
        return self.max_abs <= tolerance(tol).bound(1.0)

    def as_dict(self):
        return OrderedDict((k, list(v)) for k, v in self.residuals.items())


def defining_residuals(P):
    return ResidualReport(residual_blocks(*P.blocks()), P.exact)


# group law


def product(P1, P2, tol=DEFAULT_TOL):
    """
    (h1 h2 : M1 M2 : M2^t x1 + h1 x2 : h2 y1 + M1 y2 : h2 r1 + h1 r2 - 2 <x1, y2>)
    """
    P1, P2 = _common(P1, P2)
    h1, M1, x1, y1, r1 = P1.blocks()
    h2, M2, x2, y2, r2 = P2.blocks()
    coords = concat_blocks(h1 * h2, M1 @ M2, M2.T @ x1 + h1 * x2, h2 * y1 + M1 @ y2,
                           h2 * r1 + h1 * r2 - 2 * (x1 @ y2))
    if P1.exact:
        if all(c == 0 for c in coords):
            raise DegeneracyError('undefined product')
    elif all_zero(as_complex(coords), tol, scale=1.0):
        raise DegeneracyError('undefined product')
    return IsometryPoint(coords)


def act_blocks(sigma, blocks, side):
    """
    closed forms of left (sigma P) and right (P sigma) multiplication by sigma = T_y o R_M
    """
    h, M, x, y, r = blocks
    R, s = sigma.M, sigma.y
    if side == 'left':
        M, y = R @ M, R @ y
        x = x - M.T @ s
        r = h * (s @ s) + r + 2 * (s @ y)
        y = h * s + y
    elif side == 'right':
        x, y, r = x - h * s, y + M @ s, r + h * (s @ s) - 2 * (x @ s)
        M, x = M @ R, R.T @ x
    else:
        raise InputError('side must be "left" or "right", got %r' % (side,))
    return h, M, x, y, r


def act(a, b, side):
    """
    act(sigma, P, 'left') = sigma P and act(P, sigma, 'right') = P sigma
    the isometry is recognized in either position
    """
    sigma, P = (b, a) if isinstance(a, IsometryPoint) else (a, b)
    if isinstance(sigma, IsometryPoint) or not isinstance(P, IsometryPoint):
        raise InputError('act needs an isometry and a point')
    if sigma.exact != P.exact:
        sigma, P = sigma.to_float(), P.to_float()
    return IsometryPoint(concat_blocks(*act_blocks(sigma, P.blocks(), side)))


def proj_eq(P1, P2, tol=DEFAULT_TOL):
    """projective equality, exact when both points are exact"""
    if P1.exact and P2.exact:
        return all(a == b for a, b in zip(P1.coords, P2.coords))
    a, b = as_complex(P1.coords), as_complex(P2.coords)
    a, b = a / np.linalg.norm(a), b / np.linalg.norm(b)
    lam = np.vdot(b, a)
    return bool(np.linalg.norm(a - lam * b) <= tolerance(tol).bound(1.0))


def is_boundary(P, tol=DEFAULT_TOL):
    if P.exact:
        return P.h == 0
    return abs(P.h) <= tolerance(tol).bound(1.0)

