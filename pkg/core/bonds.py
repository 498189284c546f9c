"""
Bonds: boundary points on which every leg form of a pod vanishes.

Constructions conjugate the normal forms by isometries: a bond sigma_a beta0 sigma_b^-1
imposes on (p, P) the condition beta0 imposes on (sigma_b^-1 p, sigma_a^-1 P).
"""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from core.boundary import (BoundaryClass, classify, collinearity_direction, left_right_vectors,
                           normal_form, normal_point)
from core.errors import ClassificationError, DegeneracyError, InputError
from core.planar import (PlanarIsometry, PlanarMobius, planar_action, projection_frame, unit)
from core.pod import pseudo_spherical_residuals
from core.rigid import (DirectIsometry, frame_for_line, inverse, rotation_about_z, translation, vec3)
from core.scalars import (DEFAULT_TOL, GaussianRational, GaussPoly, as_float, cross3, is_exact,
                          max_abs, poly_eval, poly_gcd_many, tolerance)
from core.xspace import (IsometryPoint, act, act_blocks, concat_blocks, residual_blocks)


@dataclass
class OrientedLine:
    point: np.ndarray
    direction: np.ndarray
    # direction as given, kept when rational and possibly not unit
    rational_direction: Optional[np.ndarray] = field(default=None, init=False, repr=False)

    def __post_init__(self):
        self.point = vec3(self.point)
        d = vec3(self.direction)
        self.rational_direction = d if is_exact(d) else None
        if not (is_exact(d) and d @ d == 1):
            d = unit(d)
        self.direction = d

    @property
    def exact(self):
        return is_exact(self.point) and is_exact(self.direction)

    def frame(self):
        """isometry carrying the z-axis oriented South onto this line"""
        return frame_for_line(self.point, self.direction)

    def contains(self, p, tol=DEFAULT_TOL):
        p = vec3(p)
        if self.exact and is_exact(p):
            return all(c == 0 for c in cross3(p - self.point, self.direction))
        offset = as_float(p) - as_float(self.point)
        return np.linalg.norm(np.cross(offset, as_float(self.direction))) <= \
            tolerance(tol).bound(np.linalg.norm(offset))


def z_axis(orientation=-1):
    return OrientedLine([0, 0, 0], [0, 0, orientation])


@dataclass
class Bond:
    point: IsometryPoint
    cls: BoundaryClass
    L: Optional[np.ndarray] = None
    R: Optional[np.ndarray] = None
    planar_map: Optional[PlanarMobius] = None
    direction: Optional[np.ndarray] = None
    root: Union[None, str, complex, GaussianRational] = field(default=None)


def bond_from_point(point, tol=DEFAULT_TOL, root=None):
    cls = classify(point, tol)
    if cls is BoundaryClass.VERTEX:
        raise ClassificationError('the vertex is never a bond')
    bond = Bond(point, cls, root=root)
    if cls in (BoundaryClass.COLLINEARITY_LEFT, BoundaryClass.COLLINEARITY_RIGHT):
        bond.direction = collinearity_direction(point, tol)
        return bond
    bond.L, bond.R = left_right_vectors(point, tol)
    if cls in (BoundaryClass.INVERSION, BoundaryClass.SIMILARITY):
        bond.planar_map = extract_planar_map(point, tol)
    return bond


def _point(beta):
    return beta.point if isinstance(beta, Bond) else beta


def butterfly_bond(gL, gR, tol=DEFAULT_TOL):
    """residual vanishes iff p lies on gL or P lies on gR"""
    beta0 = normal_point(BoundaryClass.BUTTERFLY, exact=gL.exact and gR.exact)
    beta = act(gR.frame(), act(beta0, inverse(gL.frame()), 'right'), 'left')
    return bond_from_point(beta, tol)


def collinearity_bond(g, side, tol=DEFAULT_TOL):
    """left: residual vanishes iff p lies on g, right: iff P lies on g"""
    if side == 'left':
        beta0 = normal_point(BoundaryClass.COLLINEARITY_LEFT, exact=g.exact)
        beta = act(beta0, inverse(g.frame()), 'right')
    elif side == 'right':
        beta0 = normal_point(BoundaryClass.COLLINEARITY_RIGHT, exact=g.exact)
        beta = act(g.frame(), beta0, 'left')
    else:
        raise InputError('side must be "left" or "right", got %r' % (side,))
    return bond_from_point(beta, tol)


def normal_map(kind, parameter):
    """q -> (r / 2) / q for inversions, q -> -gamma q for similarities"""
    if kind == 'inversion':
        return PlanarMobius.create(0, parameter / 2, 1, 0)
    if kind == 'similarity':
        return PlanarMobius.create(-parameter, 0, 0, 1)
    raise InputError('kind must be "inversion" or "similarity", got %r' % (kind,))


def _frame_inverse(D, tau):
    """sigma^-1 with proj_South(sigma^-1 p) = tau(proj_D p)"""
    F = projection_frame(D).rotation()
    Rz = rotation_about_z(tau.u.real, tau.u.imag)
    return DirectIsometry(Rz @ F.T, [tau.c.real, tau.c.imag, 0.0])


def mobius_bond(L, R, kind, parameter, frames=None, tol=DEFAULT_TOL):
    """
    bond with vectors (L, R) whose planar map is tau1 o kappa0 o tau2, frames = (tau1, tau2)
    """
    parameter = float(parameter)
    if not parameter > 0:
        raise InputError('parameter must be positive')
    tau1, tau2 = frames or (PlanarIsometry.identity(), PlanarIsometry.identity())
    if kind not in ('inversion', 'similarity'):
        raise InputError('kind must be "inversion" or "similarity", got %r' % (kind,))
    cls = BoundaryClass.INVERSION if kind == 'inversion' else BoundaryClass.SIMILARITY
    beta0 = normal_point(cls, parameter)
    sigma_b_inv = _frame_inverse(L, tau2)
    sigma_a = inverse(_frame_inverse(R, tau1.inverse()))
    beta = act(sigma_a, act(beta0, sigma_b_inv, 'right'), 'left')
    return bond_from_point(beta, tol)


def mobius_bond_from_map(L, R, kappa, tol=DEFAULT_TOL):
    """
    decomposes kappa into tau1 o kappa0 o tau2 and builds the bond
    """
    if not isinstance(kappa, PlanarMobius):
        kappa = PlanarMobius.create(*kappa)
    a, b, c, d = kappa.a, kappa.b, kappa.c, kappa.d
    if abs(a * d - b * c) == 0:
        raise DegeneracyError('degenerate map')
    if kappa.kind() == 'inversion':
        k = -(a * d - b * c) / (c * c)
        tau1 = PlanarIsometry(k / abs(k), a / c)
        tau2 = PlanarIsometry(1 + 0j, d / c)
        return mobius_bond(L, R, 'inversion', 2 * abs(k), (tau1, tau2), tol)
    ratio = a / d
    gamma = abs(ratio)
    tau1 = PlanarIsometry(-ratio / gamma, b / d)
    return mobius_bond(L, R, 'similarity', gamma, (tau1, PlanarIsometry.identity()), tol)


def extract_planar_map(beta, tol=DEFAULT_TOL):
    """
    kappa with kappa(proj_L p) = proj_R P exactly for the pairs (p, P) on which beta vanishes
    """
    point = _point(beta)
    cert = normal_form(point, tol)
    if cert.cls is BoundaryClass.INVERSION:
        kappa0 = normal_map('inversion', cert.parameter)
    elif cert.cls is BoundaryClass.SIMILARITY:
        kappa0 = normal_map('similarity', cert.parameter)
    else:
        raise ClassificationError('planar map needs an inversion or similarity point')
    L, R = left_right_vectors(point, tol)
    tau2 = planar_action(inverse(cert.sigma_right), L)
    tau1 = planar_action(cert.sigma_left, R).inverse()
    return tau1.as_mobius().compose(kappa0.compose(tau2.as_mobius()))


@dataclass
class BondVerification:
    residuals: list
    member: bool
    max_abs: float


def verify_bond(beta, pod, tol=DEFAULT_TOL):
    point = _point(beta)
    residuals = pseudo_spherical_residuals(pod, point, tol)
    if point.exact and pod.exact:
        member = all(r == 0 for r in residuals)
    else:
        scale = 1.0 + max_abs(pod.platform) * max_abs(pod.base) if pod.n else 1.0
        member = max_abs(residuals) <= tolerance(tol).bound(scale)
    return BondVerification(residuals, member, max_abs(residuals))


# rational motions


class RationalMotion(object):
    """
    17 polynomial coordinates t -> (h(t) : M(t) : x(t) : y(t) : r(t)) without common factor
    """
    __slots__ = ('coordinates',)

    def __init__(self, coordinates, reduce=True):
        polys = [p if isinstance(p, GaussPoly) else GaussPoly(p) for p in coordinates]
        if len(polys) != 17:
            raise InputError('a rational motion has 17 coordinates, got %d' % len(polys))
        if reduce:
            g = poly_gcd_many(polys)
            if g.degree > 0:
                polys = [p // g for p in polys]
        self.coordinates = tuple(polys)

    @classmethod
    def from_blocks(cls, h, M, x, y, r, reduce=True):
        return cls(list(concat_blocks(h, M, x, y, r)), reduce=reduce)

    @property
    def h(self):
        return self.coordinates[0]

    @property
    def degree(self):
        return max(p.degree for p in self.coordinates)

    def blocks(self):
        c = np.empty(17, dtype=object)
        c[:] = list(self.coordinates)
        return c[0], c[1:10].reshape(3, 3), c[10:13], c[13:16], c[16]

    def evaluate(self, t):
        return IsometryPoint([poly_eval(p, t) for p in self.coordinates])

    def derivative(self):
        return RationalMotion([p.derivative() for p in self.coordinates], reduce=False)

    def pose(self, t):
        """the isometry at a parameter with h(t) != 0"""
        point = self.evaluate(t)
        if point.h == 0:
            raise DegeneracyError('no isometry where h vanishes')
        scale = point.coords / point.h
        M = np.array([[_real(scale[1 + 3 * j + k]) for k in range(3)] for j in range(3)], dtype=object)
        y = [_real(v) for v in scale[13:16]]
        return DirectIsometry(M, y, check=False)


def _real(value):
    if isinstance(value, GaussianRational):
        if not value.is_real():
            raise DegeneracyError('complex parameter gives no real isometry')
        return value.re
    return float(np.real(value))


def motion_residuals(motion):
    """the defining residuals as polynomials in t"""
    return residual_blocks(*motion.blocks())


def rotation_motion(axis):
    """
    half-angle rotation family about an oriented line with rational data

    The quaternion (1, -t d) of the unnormalized direction d gives h = 1 + t^2 <d, d> and
    M = (1 - t^2 <d, d>) I + 2 t^2 d d^t + 2 t [d]_x without division; the family is then
    conjugated by the translation to the axis point.
    """
    d = axis.rational_direction
    if d is None or not is_exact(axis.point):
        raise InputError('rotation axis needs a rational point and a rational direction')
    t = GaussPoly([0, 1])
    zero = GaussPoly()
    u = [-c * t for c in d]
    norm = u[0] * u[0] + u[1] * u[1] + u[2] * u[2]
    h = 1 + norm
    cross = [[zero, -u[2], u[1]], [u[2], zero, -u[0]], [-u[1], u[0], zero]]
    M = np.empty((3, 3), dtype=object)
    for j in range(3):
        for k in range(3):
            M[j, k] = 2 * u[j] * u[k] + 2 * cross[j][k]
        M[j, j] = M[j, j] + 1 - norm
    zero3 = np.empty(3, dtype=object)
    zero3[:] = [zero, zero, zero]
    shift = translation(axis.point)
    blocks = act_blocks(inverse(shift), (h, M, zero3, zero3.copy(), zero), 'right')
    blocks = act_blocks(shift, blocks, 'left')
    return RationalMotion.from_blocks(*blocks)


def _roots(h):
    """roots of h in increasing (Re, Im), Gaussian rational ones recognized exactly"""
    if h.degree < 1:
        return []
    coeffs = [complex(c) for c in reversed(h.coefficients)]
    found = []
    for rho in np.roots(coeffs):
        rho = complex(rho)
        if any(abs(rho - complex(f)) <= 1e-6 * (1 + abs(rho)) for f in found):
            continue
        candidate = GaussianRational(Fraction(rho.real).limit_denominator(10 ** 6),
                                     Fraction(rho.imag).limit_denominator(10 ** 6))
        found.append(candidate if poly_eval(h, candidate) == 0 else rho)
    # rounded so that conjugate pairs order by the imaginary part
    return sorted(found, key=lambda z: (round(complex(z).real, 9), complex(z).imag))


def _limit_point(motion, t0, tol):
    coords = motion.coordinates
    for _ in range(motion.degree + 1):
        values = [poly_eval(p, t0) for p in coords]
        if isinstance(t0, GaussianRational):
            if any(v != 0 for v in values):
                return IsometryPoint(values)
        else:
            scale = max(sum(abs(complex(c)) * abs(t0) ** k for k, c in enumerate(p.coefficients))
                        for p in coords)
            if max(abs(v) for v in values) > tolerance(tol).bound(scale):
                if abs(values[0]) <= tolerance(tol).bound(scale):
                    values[0] = 0j
                return IsometryPoint(values)
        coords = [p.derivative() for p in coords]
    raise DegeneracyError('degenerate parametrization')


def limit_bonds(motion, tol=DEFAULT_TOL):
    """
    bonds at the roots of h(t), then at t = infinity when deg h is below the motion degree
    limits equal to the vertex are skipped
    """
    if motion.h.is_zero():
        raise DegeneracyError('h vanishes identically')
    points = [(t0, _limit_point(motion, t0, tol)) for t0 in _roots(motion.h)]
    if motion.degree > motion.h.degree:
        lead = [p.coefficient(motion.degree) for p in motion.coordinates]
        points.append(('inf', IsometryPoint(lead)))
    bonds = []
    for t0, point in points:
        if classify(point, tol) is BoundaryClass.VERTEX:
            continue
        bonds.append(bond_from_point(point, tol, root=t0))
    return bonds
