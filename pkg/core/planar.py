"""
Planar maps of the complexified projection plane and the projection frames.

A direction D fixes the frame (e1, e2) with (e1, e2, -D) right-handed; the
projection along D is p -> <p, e1> + i <p, e2>. For D = (0, 0, -1) this is
(a, b, c) -> a + ib.
"""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from dataclasses import dataclass

import numpy as np

from core.errors import DegeneracyError, InputError
from core.scalars import as_float


@dataclass(frozen=True, eq=False)
class ProjectionFrame:
    L: np.ndarray
    e1: np.ndarray
    e2: np.ndarray

    def rotation(self):
        """rotation with columns (e1, e2, -L), carries the South pole onto L"""
        return np.stack([self.e1, self.e2, -self.L], axis=1)


def unit(vector):
    v = as_float(vector)
    n = np.linalg.norm(v)
    if v.shape != (3,) or n == 0:
        raise InputError('a direction must be a nonzero 3-vector')
    return v / n


def projection_frame(L):
    L = unit(L)
    u = np.array([0.0, 0.0, -1.0])
    if abs(u @ L) > 1 - 1e-6:
        u = np.array([1.0, 0.0, 0.0])
    e1 = u - (u @ L) * L
    e1 = e1 / np.linalg.norm(e1)
    e2 = np.cross(e1, L)
    return ProjectionFrame(L, e1, e2)


def project_points(points, L):
    frame = projection_frame(L)
    points = as_float(points).reshape(-1, 3)
    return points @ frame.e1 + 1j * (points @ frame.e2)


@dataclass(frozen=True)
class PlanarMobius:
    """
    q -> (a q + b) / (c q + d), stored with its largest coefficient equal to 1
    """
    a: complex
    b: complex
    c: complex
    d: complex

    @classmethod
    def create(cls, a, b, c, d, tol=1e-12):
        coeffs = np.array([a, b, c, d], dtype=np.complex128)
        top = np.abs(coeffs).max()
        if top == 0 or abs(coeffs[0] * coeffs[3] - coeffs[1] * coeffs[2]) <= tol * top * top:
            raise DegeneracyError('degenerate map')
        k = int(np.argmax(np.abs(coeffs) >= top * (1 - 1e-9)))
        coeffs = coeffs / coeffs[k]
        return cls(*(complex(c) for c in coeffs))

    def matrix(self):
        return np.array([[self.a, self.b], [self.c, self.d]])

    def kind(self, tol=1e-9):
        return 'inversion' if abs(self.c) > tol else 'similarity'

    def __call__(self, q):
        den = self.c * q + self.d
        if den == 0:
            return complex(np.inf)
        return complex((self.a * q + self.b) / den)

    def compose(self, other):
        """self after other"""
        m = self.matrix() @ other.matrix()
        return PlanarMobius.create(m[0, 0], m[0, 1], m[1, 0], m[1, 1])

    def inverse(self):
        return PlanarMobius.create(self.d, -self.b, -self.c, self.a)

    def close_to(self, other, tol=1e-9):
        u = self.matrix().ravel()
        v = other.matrix().ravel()
        u, v = u / np.linalg.norm(u), v / np.linalg.norm(v)
        return bool(np.linalg.norm(u - np.vdot(v, u) * v) <= tol)


@dataclass(frozen=True)
class PlanarIsometry:
    """
    z -> u z + c with |u| = 1
    """
    u: complex
    c: complex

    def __post_init__(self):
        if abs(abs(self.u) - 1) > 1e-9:
            raise InputError('planar isometry needs a unit rotation factor')

    @classmethod
    def identity(cls):
        return cls(1 + 0j, 0j)

    def __call__(self, z):
        return self.u * z + self.c

    def compose(self, other):
        return PlanarIsometry(self.u * other.u, self.u * other.c + self.c)

    def inverse(self):
        return PlanarIsometry(1 / self.u, -self.c / self.u)

    def as_mobius(self):
        return PlanarMobius.create(self.u, self.c, 0, 1)


def planar_action(sigma, D, tol=1e-9):
    """
    the planar isometry tau with proj_South(sigma(p)) = tau(proj_D(p)), sigma carrying D to South
    """
    frame = projection_frame(D)
    sigma = sigma.to_float() if sigma.exact else sigma
    row = sigma.M[0] + 1j * sigma.M[1]
    u = (row @ (frame.e1 - 1j * frame.e2)) / 2
    if abs(abs(u) - 1) > tol or abs(row @ frame.L) > tol:
        raise InputError('isometry does not carry the direction onto the South pole')
    return PlanarIsometry(complex(u / abs(u)), complex(sigma.y[0] + 1j * sigma.y[1]))
