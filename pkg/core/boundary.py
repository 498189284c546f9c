"""
Boundary points of X (h = 0): classification, left/right vectors, normal forms.

Isotropic vectors of C^3 are identified with S^2 through the conic
(s : t) -> (s^2 - t^2 : i (s^2 + t^2) : 2 s t) and the stereographic map
(s : t) -> (2 Re(t conj(s)), 2 Im(t conj(s)), |t|^2 - |s|^2) / (|s|^2 + |t|^2).
"""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from core.errors import ClassificationError, DegeneracyError
from core.rigid import DirectIsometry, compose, rotation, rotation_about_z, translation
from core.scalars import (DEFAULT_TOL, I, GaussianRational, all_zero, as_complex,
                          first_max_index, is_exact, max_abs, tolerance)
from core.xspace import IsometryPoint, act, defining_residuals


class BoundaryClass(enum.Enum):
    VERTEX = 'Vertex'
    INVERSION = 'Inversion'
    BUTTERFLY = 'Butterfly'
    SIMILARITY = 'Similarity'
    COLLINEARITY_LEFT = 'CollinearityLeft'
    COLLINEARITY_RIGHT = 'CollinearityRight'

    def __str__(self):
        return self.value


E = np.array([1, 1j, 0], dtype=np.complex128)
SOUTH = np.array([0.0, 0.0, -1.0])
NORTH = np.array([0.0, 0.0, 1.0])


@dataclass
class NormalFormCertificate:
    """
    act(sigma_left, act(P, sigma_right, 'right'), 'left') equals normal_point
    """
    sigma_left: DirectIsometry
    sigma_right: DirectIsometry
    normal_point: IsometryPoint
    cls: BoundaryClass
    parameter: Optional[float] = None


def _zero(values, tol):
    return all_zero(values, tol, scale=1.0)


def n_matrix(P):
    """N = r M + 2 y x^t, invariant under translations"""
    return P.r * P.M + 2 * np.outer(P.y, P.x)


def classify(P, tol=DEFAULT_TOL):
    tol = tolerance(tol)
    if not _zero(np.array([P.h], dtype=P.coords.dtype), tol):
        raise ClassificationError('not a boundary point')
    if not defining_residuals(P).vanishes(tol):
        raise ClassificationError('not on X (listed generators)')
    if _zero(P.M, tol):
        x_zero, y_zero = _zero(P.x, tol), _zero(P.y, tol)
        if x_zero and y_zero:
            return BoundaryClass.VERTEX
        if y_zero:
            return BoundaryClass.COLLINEARITY_LEFT
        if x_zero:
            return BoundaryClass.COLLINEARITY_RIGHT
        return BoundaryClass.SIMILARITY
    if _zero(n_matrix(P), tol):
        return BoundaryClass.BUTTERFLY
    return BoundaryClass.INVERSION


def rank1_factor(M, tol=DEFAULT_TOL):
    """
    M = v w^t with the largest entry of w equal to 1
    """
    M = np.asarray(M)
    if _zero(M, tol):
        raise DegeneracyError('zero matrix')
    k = first_max_index(M)
    i, j = divmod(k, 3)
    v = M[:, j].copy()
    w = M[i, :] / M[i, j]
    if not is_exact(M):
        if max_abs(M - np.outer(v, w)) > tolerance(tol).bound(max_abs(M)):
            raise DegeneracyError('not rank one')
    elif not all(c == 0 for c in (M - np.outer(v, w)).ravel()):
        raise DegeneracyError('not rank one')
    k = first_max_index(w)
    scale = w[k]
    return v * scale, w / scale


def direction_from_conic(v, tol=DEFAULT_TOL):
    v = as_complex(v)
    scale = max_abs(v)
    if scale == 0:
        raise ClassificationError('not on absolute conic')
    v = v / scale
    if abs(v @ v) > tolerance(tol).bound(1.0):
        raise ClassificationError('not on absolute conic')
    alpha, beta, gamma = v
    charts = [(alpha - 1j * beta, gamma), (gamma, -alpha - 1j * beta)]
    s, t = max(charts, key=lambda st: abs(st[0]) ** 2 + abs(st[1]) ** 2)
    ts = t * np.conj(s)
    d = np.array([2 * ts.real, 2 * ts.imag, abs(t) ** 2 - abs(s) ** 2])
    return d / np.linalg.norm(d)


def left_right_vectors(P, tol=DEFAULT_TOL):
    """
    L is carried by the platform side (w, or x), R by the base side (v, or y)
    """
    cls = classify(P, tol)
    if cls in (BoundaryClass.INVERSION, BoundaryClass.BUTTERFLY):
        v, w = rank1_factor(P.M, tol)
        return direction_from_conic(w, tol), direction_from_conic(v, tol)
    if cls is BoundaryClass.SIMILARITY:
        return direction_from_conic(P.x, tol), direction_from_conic(P.y, tol)
    raise ClassificationError('no left/right vector pair')


def collinearity_direction(P, tol=DEFAULT_TOL):
    cls = classify(P, tol)
    if cls is BoundaryClass.COLLINEARITY_LEFT:
        return direction_from_conic(P.x, tol)
    if cls is BoundaryClass.COLLINEARITY_RIGHT:
        return direction_from_conic(P.y, tol)
    raise ClassificationError('not a collinearity point')


def isotropic_frame(w):
    """
    rotation Q with Q w = |Re w| (1, i, 0) for an isotropic w != 0
    """
    w = as_complex(w)
    a, b = w.real, w.imag
    e1 = a / np.linalg.norm(a)
    b = b - (b @ e1) * e1
    e2 = b / np.linalg.norm(b)
    e3 = np.cross(e1, e2)
    return np.stack([e1, e2, e3])


def _unit_phase(z):
    z = z / abs(z)
    # multiplies e = (1, i, 0) by z
    return rotation_about_z(z.real, -z.imag)


def normal_form(P, tol=DEFAULT_TOL):
    """
    reduces P by a left and a right isometry to the normal form of its class
    """
    cls = classify(P, tol)
    if cls is BoundaryClass.VERTEX:
        raise DegeneracyError('vertex has no moduli')
    state = {'point': P.to_float(),
             'left': DirectIsometry.identity(exact=False),
             'right': DirectIsometry.identity(exact=False)}

    def push_left(sigma):
        state['point'] = act(sigma, state['point'], 'left')
        state['left'] = compose(sigma, state['left'])

    def push_right(sigma):
        state['point'] = act(state['point'], sigma, 'right')
        state['right'] = compose(state['right'], sigma)

    def planar(z):
        return np.array([z.real, z.imag, 0.0])

    parameter = None
    if cls in (BoundaryClass.INVERSION, BoundaryClass.BUTTERFLY):
        v, w = rank1_factor(state['point'].M, tol)
        push_right(rotation(isotropic_frame(w).T))
        push_left(rotation(isotropic_frame(v)))
        point = state['point']
        push_left(translation(planar(point.x[0] / point.M[0, 0])))
        point = state['point']
        push_right(translation(planar(-point.y[0] / point.M[0, 0])))
        point = state['point']
        r = point.r / point.M[0, 0]
        if cls is BoundaryClass.INVERSION:
            push_left(rotation(_unit_phase(r)))
            parameter = float(abs(r))
        normal = normal_point(cls, parameter)
    elif cls is BoundaryClass.SIMILARITY:
        push_right(rotation(isotropic_frame(state['point'].x).T))
        push_left(rotation(isotropic_frame(state['point'].y)))
        point = state['point']
        push_left(translation(planar(-point.r / (2 * point.y[0]))))
        point = state['point']
        gamma = point.x[0] / point.y[0]
        push_left(rotation(_unit_phase(gamma)))
        parameter = float(abs(gamma))
        normal = normal_point(cls, parameter)
    elif cls is BoundaryClass.COLLINEARITY_LEFT:
        push_right(rotation(isotropic_frame(state['point'].x).T))
        point = state['point']
        push_right(translation(planar(point.r / (2 * point.x[0]))))
        normal = normal_point(cls)
    else:
        push_left(rotation(isotropic_frame(state['point'].y)))
        point = state['point']
        push_left(translation(planar(-point.r / (2 * point.y[0]))))
        normal = normal_point(cls)
    return NormalFormCertificate(state['left'], state['right'], normal, cls, parameter)


def normal_point(cls, parameter=None, exact=False):
    """
    normal forms: inversion (0 : e e^t : 0 : 0 : r), butterfly (0 : e e^t : 0 : 0 : 0),
    similarity (0 : 0 : gamma e : e : 0), collinearity (0 : 0 : e : 0 : 0) or (0 : 0 : 0 : e : 0)
    with e = (1, i, 0)
    """
    if exact:
        e = np.array([GaussianRational(1), I, GaussianRational(0)], dtype=object)
        zero3 = np.array([GaussianRational(0)] * 3, dtype=object)
        zero = GaussianRational(0)
    else:
        e, zero3, zero = E.copy(), np.zeros(3, dtype=np.complex128), 0j
    ee = np.outer(e, e)
    zero33 = np.outer(zero3, zero3)
    if cls is BoundaryClass.INVERSION:
        assert parameter is not None and parameter > 0
        return IsometryPoint.from_blocks(zero, ee, zero3, zero3, parameter)
    if cls is BoundaryClass.BUTTERFLY:
        return IsometryPoint.from_blocks(zero, ee, zero3, zero3, zero)
    if cls is BoundaryClass.SIMILARITY:
        assert parameter is not None and parameter > 0
        return IsometryPoint.from_blocks(zero, zero33, parameter * e, e, zero)
    if cls is BoundaryClass.COLLINEARITY_LEFT:
        return IsometryPoint.from_blocks(zero, zero33, e, zero3, zero)
    if cls is BoundaryClass.COLLINEARITY_RIGHT:
        return IsometryPoint.from_blocks(zero, zero33, zero3, e, zero)
    raise DegeneracyError('vertex has no moduli')


@dataclass
class ClassificationReport:
    cls: BoundaryClass
    L: Optional[np.ndarray] = None
    R: Optional[np.ndarray] = None
    direction: Optional[np.ndarray] = None
    certificate: Optional[NormalFormCertificate] = None
    note: str = ''


def classification_report(P, tol=DEFAULT_TOL):
    cls = classify(P, tol)
    if cls is BoundaryClass.VERTEX:
        return ClassificationReport(cls, note='the vertex is never a bond')
    report = ClassificationReport(cls, certificate=normal_form(P, tol))
    if cls in (BoundaryClass.COLLINEARITY_LEFT, BoundaryClass.COLLINEARITY_RIGHT):
        report.direction = collinearity_direction(P, tol)
    else:
        report.L, report.R = left_right_vectors(P, tol)
    return report

