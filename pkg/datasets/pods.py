"""
Fixture pods: random exact pods, Bricard-type hexapods with spherical paths,
butterfly hexapods and the mobility-two constructions.
"""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import math
from fractions import Fraction

import numpy as np

from core.analyze import fit_sphere_center
from core.pod import Pod
from core.rigid import DirectIsometry, apply, random_rational_isometry, rotation_about_z


def _rational_points(rng, n, spread=9, max_den=5):
    num = rng.integers(-spread, spread + 1, size=(n, 3))
    den = rng.integers(1, max_den + 1, size=(n, 3))
    return [[Fraction(int(a), int(b)) for a, b in zip(nr, dr)] for nr, dr in zip(num, den)]


def random_rational_pod(seed, n=6, spread=9):
    """exact pod whose legs are realized by a random rational pose"""
    rng = np.random.default_rng(seed)
    platform = _rational_points(rng, n, spread)
    base = _rational_points(rng, n, spread)
    sigma = random_rational_isometry(int(rng.integers(0, 2 ** 31)))
    return Pod.from_pose(platform, base, sigma)


def generic_hexapod(seed):
    return random_rational_pod(seed, n=6, spread=99)


# Bricard-type motion: rotation about the z-axis by theta composed with the translation
# along z by sqrt(K + a cos theta); the path of (q, c) lies on the sphere about ((a / 2) / conj(q), c)


def bricard_pose(theta, a=2.0, K=5.0):
    assert K > abs(a)
    c, s = math.cos(theta), math.sin(theta)
    return DirectIsometry(rotation_about_z(c, s), [0.0, 0.0, math.sqrt(K + a * c)], check=False)


def bricard_center(p, a=2.0):
    q = complex(p[0], p[1])
    Q = (a / 2) / q.conjugate()
    return np.array([Q.real, Q.imag, p[2]])


def _platform(rng, n):
    radius = rng.uniform(0.5, 2.5, size=n)
    angle = rng.uniform(0, 2 * np.pi, size=n)
    height = rng.uniform(-1.5, 1.5, size=n)
    return np.stack([radius * np.cos(angle), radius * np.sin(angle), height], axis=1)


def bricard_hexapod(seed=0, samples=8, extra_leg=False, a=2.0, K=5.0):
    """
    sphere centers fitted from path samples, legs realized at theta = 0
    extra_leg adds a seventh leg whose base point is the center shifted along z
    """
    assert samples >= 4
    rng = np.random.default_rng(seed)
    platform = _platform(rng, 6)
    thetas = np.linspace(0, 2 * np.pi, samples, endpoint=False) + 0.1
    base, d2 = [], []
    for p in platform:
        path = [apply(bricard_pose(t, a, K), p) for t in thetas]
        center, radius2 = fit_sphere_center(path)
        base.append(center)
        d2.append(radius2)
    if extra_leg:
        p = _platform(rng, 1)[0]
        P = bricard_center(p, a) + np.array([0.0, 0.0, 1.0])
        platform = np.vstack([platform, p])
        base.append(P)
        d2.append(float(np.sum((apply(bricard_pose(0.0, a, K), p) - P) ** 2)))
    return Pod(platform, np.array(base), np.array(d2))


# butterfly: p_0..p_2 and P_3..P_5 on the z-axis, legs realized by the identity

BUTTERFLY_PLATFORM = [[0, 0, 0], [0, 0, 1], [0, 0, 2], [1, 0, 0], [0, 2, 1], [-1, 1, 3]]
BUTTERFLY_BASE = [[2, 1, 0], [-1, 3, 1], [1, -2, 2], [0, 0, -1], [0, 0, 1], [0, 0, 4]]


def butterfly_hexapod():
    return Pod.from_pose([[Fraction(v) for v in p] for p in BUTTERFLY_PLATFORM],
                         [[Fraction(v) for v in P] for P in BUTTERFLY_BASE],
                         DirectIsometry.identity())


def mobility_two_b_pod():
    """platform points 0..3 on the x-axis, base points 4 and 5 coincide"""
    platform = [[0, 0, 0], [1, 0, 0], [3, 0, 0], [-2, 0, 0], [1, 2, 1], [-1, 1, 2]]
    base = [[1, 1, 1], [2, -1, 0], [0, 3, -1], [-1, -2, 2], [2, 2, 3], [2, 2, 3]]
    return Pod.from_pose([[Fraction(v) for v in p] for p in platform],
                         [[Fraction(v) for v in P] for P in base], DirectIsometry.identity())


def mobility_two_c_pod():
    """platform and base on two pairs of parallel lines, indices split as (0, 1, 2) | (3, 4, 5)"""
    platform = [[0, 0, 0], [1, 0, 0], [3, 0, 0], [0, 1, 0], [2, 1, 0], [-1, 1, 0]]
    base = [[0, 0, 2], [0, 2, 2], [0, -1, 2], [1, 0, 1], [1, 3, 1], [1, -2, 1]]
    return Pod.from_pose([[Fraction(v) for v in p] for p in platform],
                         [[Fraction(v) for v in P] for P in base], DirectIsometry.identity())


def similarity_hexapod(gamma=2, seed=0):
    """
    base projections -gamma * (a + ib) of the platform projections: the similarity
    normal form is a bond
    """
    rng = np.random.default_rng(seed)
    platform = _rational_points(rng, 6, spread=5, max_den=1)
    base = []
    for (a, b, _), z in zip(platform, rng.integers(-5, 6, size=6)):
        base.append([-gamma * a, -gamma * b, Fraction(int(z))])
    return Pod.from_pose(platform, base, DirectIsometry.identity())
