"""
Direct isometries of R^3: v -> M v + y with M a rotation.

Exact isometries hold Fractions in numpy object arrays, approximate ones float64.
"""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from fractions import Fraction

import numpy as np

from core.errors import InputError
from core.scalars import (DEFAULT_TOL, real_array, is_exact, as_float, det3, max_abs, tolerance)
from core.xspace import IsometryPoint


def identity3(exact=True):
    if exact:
        return np.array([[Fraction(int(i == j)) for j in range(3)] for i in range(3)], dtype=object)
    return np.eye(3)


def vec3(values):
    v = real_array(values)
    if v.shape != (3,):
        raise InputError('expected 3 coordinates, got shape %s' % (v.shape,))
    return v


def is_rotation(M, tol=DEFAULT_TOL):
    M = np.asarray(M)
    if M.shape != (3, 3):
        return False
    if is_exact(M):
        return all(v == 0 for v in (M.T @ M - identity3()).ravel()) and det3(M) == 1
    tol = tolerance(tol)
    return (max_abs(M.T @ M - np.eye(3)) <= tol.bound(1.0)
            and abs(det3(M) - 1.0) <= tol.bound(1.0))


class DirectIsometry(object):
    """
    v -> M v + y
    """
    __slots__ = ('M', 'y')

    def __init__(self, M, y, check=True, tol=DEFAULT_TOL):
        M = real_array(M)
        y = real_array(y)
        if M.shape != (3, 3) or y.shape != (3,):
            raise InputError('isometry needs a 3x3 rotation and a 3-vector')
        if is_exact(M) != is_exact(y):
            M, y = as_float(M), as_float(y)
        if check and not is_rotation(M, tol):
            raise InputError('not a rotation')
        self.M = M
        self.y = y

    @classmethod
    def identity(cls, exact=True):
        zero = [Fraction(0)] * 3 if exact else [0.0] * 3
        return cls(identity3(exact), zero, check=False)

    @property
    def exact(self):
        return is_exact(self.M)

    @property
    def x(self):
        return -(self.M.T @ self.y)

    @property
    def r(self):
        return self.y @ self.y

    def to_float(self):
        return DirectIsometry(as_float(self.M), as_float(self.y), check=False)

    def __call__(self, p):
        return apply(self, p)

    def __eq__(self, other):
        if not isinstance(other, DirectIsometry):
            return NotImplemented
        return bool(np.all(self.M == other.M) and np.all(self.y == other.y))

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    __hash__ = None

    def __repr__(self):
        return 'DirectIsometry(M=%s, y=%s)' % (self.M.tolist(), self.y.tolist())


def _common(*sigmas):
    if all(s.exact for s in sigmas):
        return sigmas
    return tuple(s.to_float() if s.exact else s for s in sigmas)


def apply(sigma, p):
    p = vec3(p)
    if is_exact(p) != sigma.exact:
        sigma, p = sigma.to_float(), as_float(p)
    return sigma.M @ p + sigma.y


def compose(sigma1, sigma2):
    """sigma1 after sigma2"""
    sigma1, sigma2 = _common(sigma1, sigma2)
    return DirectIsometry(sigma1.M @ sigma2.M, sigma1.M @ sigma2.y + sigma1.y, check=False)


def inverse(sigma):
    return DirectIsometry(sigma.M.T, -(sigma.M.T @ sigma.y), check=False)


def translation(s):
    s = vec3(s)
    return DirectIsometry(identity3(is_exact(s)), s, check=False)


def rotation(M, tol=DEFAULT_TOL):
    M = real_array(M)
    zero = [Fraction(0)] * 3 if is_exact(M) else [0.0] * 3
    return DirectIsometry(M, zero, tol=tol)


def quaternion_rotation(q):
    """rotation matrix of the (not necessarily unit) quaternion q = (a, b, c, d)"""
    a, b, c, d = real_array(q)
    n = a * a + b * b + c * c + d * d
    if n == 0:
        raise InputError('zero quaternion')
    M = np.array([
        [a * a + b * b - c * c - d * d, 2 * (b * c - a * d), 2 * (b * d + a * c)],
        [2 * (b * c + a * d), a * a - b * b + c * c - d * d, 2 * (c * d - a * b)],
        [2 * (b * d - a * c), 2 * (c * d + a * b), a * a - b * b - c * c + d * d]],
        dtype=object if is_exact(np.asarray([a])) else np.float64)
    return M / n


def rotation_about_z(c, s):
    """[[c, -s, 0], [s, c, 0], [0, 0, 1]] for c^2 + s^2 = 1"""
    one = Fraction(1) if is_exact(real_array([c, s])) else 1.0
    zero = one - one
    return real_array([[c, -s, zero], [s, c, zero], [zero, zero, one]])


def half_turn_to(d):
    """
    rotation carrying the South pole (0, 0, -1) onto the unit vector d
    exact for rational d
    """
    d = vec3(d)
    exact = is_exact(d)
    south = vec3([0, 0, -1]) if exact else np.array([0.0, 0.0, -1.0])
    if exact and d @ d != 1:
        raise InputError('direction must be a unit vector')
    if not exact:
        d = d / np.linalg.norm(d)
    if all(d == south):
        return identity3(exact)
    flip = real_array([[1, 0, 0], [0, -1, 0], [0, 0, -1]])
    if not exact:
        flip = as_float(flip)
    if d @ south >= 0:
        return _bisector_turn(south, d, exact)
    # through the North pole keeps the bisector away from zero
    return _bisector_turn(-south, d, exact) @ flip


def _bisector_turn(a, b, exact):
    u = a + b
    if all(u == 0):
        raise InputError('antipodal directions have no bisector')
    M = 2 * np.outer(u, u) / (u @ u) - identity3(exact)
    return M


def frame_for_line(point, direction):
    """isometry carrying the z-axis, oriented towards the South pole, onto the given line"""
    point = vec3(point)
    M = half_turn_to(direction)
    if is_exact(point) != is_exact(M):
        point, M = as_float(point), as_float(M)
    return DirectIsometry(M, point, check=False)


def random_rational_isometry(seed, spread=9):
    """
    seeded exact isometry: rotation from an integer quaternion, rational translation
    """
    rng = np.random.default_rng(seed)
    q = [0, 0, 0, 0]
    while not any(q):
        q = [int(v) for v in rng.integers(-4, 5, size=4)]
    num = rng.integers(-spread, spread + 1, size=3)
    den = rng.integers(1, 6, size=3)
    y = [Fraction(int(a), int(b)) for a, b in zip(num, den)]
    return DirectIsometry(quaternion_rotation(q), y, check=False)


def embed(sigma):
    """(1 : M : -M^t y : y : <y, y>) in P^16"""
    one = Fraction(1) if sigma.exact else 1.0
    return IsometryPoint.from_blocks(one, sigma.M, sigma.x, sigma.y, sigma.r)
