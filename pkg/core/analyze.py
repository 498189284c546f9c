"""
Necessary conditions for mobility of an n-pod.

Mobility one: (i) some pair of projections pi_L, pi_R carries the platform onto the base
up to an inversion or a similarity, or (ii) the platform points of a subset and the
base points of its complement are collinear.

Mobility two: (a) many such pairs (L, R) exist, (b) collinear platform subset whose
complement shares one base point (or the same with platform and base interchanged),
(c) platform and base each on two parallel lines with matching index partition.

None of these conditions is sufficient; reports say so.
"""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import itertools
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from core.bonds import OrientedLine
from core.errors import DegeneracyError, InputError
from core.planar import PlanarMobius, project_points, unit
from core.scalars import DEFAULT_TOL, as_float, cross3, is_exact, tolerance
from core.search import ProjectionSearch, sphere_starts

NOTE = 'necessary conditions only'


@dataclass
class MobiusFit:
    map: Optional[PlanarMobius]
    residual: float
    status: str

    @property
    def kind(self):
        return self.map.kind() if self.map is not None else None


def _distinct(values, tol=1e-9):
    found = []
    for v in values:
        if not any(abs(v - u) <= tol * (1 + abs(v)) for u in found):
            found.append(v)
    return len(found)


def mobius_fit(qs, Qs, tol=DEFAULT_TOL):
    """
    kernel of the system c q Q + d Q - a q - b = 0 through the singular value decomposition
    None when the smallest singular value exceeds tol on a full-rank system
    """
    qs = np.asarray(qs, dtype=np.complex128).ravel()
    Qs = np.asarray(Qs, dtype=np.complex128).ravel()
    if len(qs) != len(Qs):
        raise InputError('length mismatch: %d projections against %d' % (len(qs), len(Qs)))
    if len(qs) == 0:
        raise InputError('mobius_fit needs at least one pair')
    A = np.stack([-qs, -np.ones_like(qs), qs * Qs, Qs], axis=1)
    _, s, Vh = np.linalg.svd(A, full_matrices=True)
    residual = float(s[-1]) if len(qs) >= 4 else 0.0
    if len(qs) >= 4 and residual > tolerance(tol).abs_tol:
        return None
    kernel = Vh[-1].conj()
    status = 'equivalent'
    if _distinct(qs) < 3 or _distinct(Qs) < 3:
        status = 'underdetermined'
    try:
        kappa = PlanarMobius.create(*kernel)
    except DegeneracyError:
        return MobiusFit(None, residual, 'degenerate')
    return MobiusFit(kappa, residual, status)


# collinearity


def _collinear(points, tol=DEFAULT_TOL):
    points = list(points)
    if len(points) <= 2:
        return True
    base = points[0]
    direction = None
    for p in points[1:]:
        if any(_differ(p, base, tol)):
            direction = p - base
            break
    if direction is None:
        return True
    for p in points:
        c = cross3(p - base, direction)
        if is_exact(np.asarray(c)):
            if any(v != 0 for v in c):
                return False
        elif np.linalg.norm(as_float(c)) > tolerance(tol).bound(
                np.linalg.norm(as_float(direction)) * (1 + np.linalg.norm(as_float(p - base)))):
            return False
    return True


def _differ(p, q, tol):
    d = p - q
    if is_exact(np.asarray(d)):
        return [v != 0 for v in d]
    return [abs(v) > tolerance(tol).bound(1.0) for v in d]


def _line_through(points, tol=DEFAULT_TOL):
    points = list(points)
    if not points:
        return None
    for p in points[1:]:
        if any(_differ(p, points[0], tol)):
            return OrientedLine(points[0], as_float(p - points[0]))
    return None


@dataclass
class Partition:
    """
    indices S with collinear platform points, complement T with collinear base points
    """
    S: tuple
    T: tuple
    platform_line: Optional[OrientedLine]
    base_line: Optional[OrientedLine]
    degenerate: bool


def _partition(pod, S, tol):
    S = tuple(sorted(S))
    T = tuple(i for i in range(pod.n) if i not in S)
    return Partition(S, T, _line_through(pod.platform[list(S)], tol),
                     _line_through(pod.base[list(T)], tol), len(S) <= 2 or len(T) <= 2)


def _candidate_sets(points, tol):
    n = len(points)
    sets = {(), tuple(range(n))}
    sets.update((i,) for i in range(n))
    sets.update(equal_point_groups(points, tol))
    for i, j in itertools.combinations(range(n), 2):
        if not any(_differ(points[i], points[j], tol)):
            continue
        on_line = tuple(k for k in range(n)
                        if _collinear([points[i], points[j], points[k]], tol))
        sets.add(on_line)
    return sets


def collinear_partition(pod, tol=DEFAULT_TOL):
    """
    first witness S in the order (non-degenerate first, then by index tuple), or None
    """
    candidates = []
    for S in _candidate_sets(pod.platform, tol):
        if not _collinear(pod.platform[list(S)], tol):
            continue
        T = [i for i in range(pod.n) if i not in S]
        if _collinear(pod.base[T], tol):
            candidates.append(_partition(pod, S, tol))
    if not candidates:
        return None
    return min(candidates, key=lambda part: (part.degenerate, part.S))


# projection pairs


@dataclass
class ProjectionMinimum:
    L: np.ndarray
    R: np.ndarray
    map: PlanarMobius
    residual: float
    status: str
    start: int

    @property
    def kind(self):
        return self.map.kind()


def _angle(u, v):
    return float(np.arccos(np.clip(u @ v, -1.0, 1.0)))


def search_projection_pair(pod, starts=64, seed=0, tol=DEFAULT_TOL, max_iter=200, progress=False):
    """
    local minima of the fitting residual over (L, R) with residual <= tol,
    deduplicated at angle 1e-3, sorted by residual then (L, R)
    """
    tol = tolerance(tol)
    platform, base = as_float(pod.platform), as_float(pod.base)
    L0, R0 = sphere_starts(starts, seed)
    if pod.n >= 4:
        search = ProjectionSearch(platform, base, max_iter=max_iter, progress=progress)
        L, R, _ = search.run(L0, R0)
    else:
        L, R = L0, R0
    found = []
    for k in range(len(L)):
        Lk, Rk = unit(L[k]), unit(R[k])
        fit = mobius_fit(project_points(platform, Lk), project_points(base, Rk), tol)
        if fit is None or fit.map is None:
            continue
        found.append(ProjectionMinimum(Lk, Rk, fit.map, fit.residual, fit.status, k))
    found.sort(key=lambda m: (m.residual, m.start))
    minima = []
    for m in found:
        if any(_angle(m.L, o.L) <= 1e-3 and _angle(m.R, o.R) <= 1e-3 for o in minima):
            continue
        minima.append(m)
    minima.sort(key=lambda m: (m.residual, tuple(m.L), tuple(m.R)))
    return minima


# reports


@dataclass
class AnalysisReport:
    level: int
    flags: OrderedDict
    witnesses: OrderedDict
    minima: list = field(default_factory=list)
    metadata: OrderedDict = field(default_factory=OrderedDict)
    note: str = NOTE


def _option(opts, name, default):
    value = getattr(opts, name, None) if opts is not None else None
    return default if value is None else value


def _search(pod, opts):
    return search_projection_pair(pod, starts=_option(opts, 'starts', 64),
                                  seed=_option(opts, 'seed', 0),
                                  tol=_option(opts, 'tol', DEFAULT_TOL),
                                  max_iter=_option(opts, 'max_iter', 200),
                                  progress=_option(opts, 'progress', False))


def _metadata(opts, **extra):
    tol = tolerance(_option(opts, 'tol', DEFAULT_TOL))
    meta = OrderedDict([('seed', _option(opts, 'seed', 0)), ('starts', _option(opts, 'starts', 64)),
                        ('max_iter', _option(opts, 'max_iter', 200)),
                        ('abs_tol', tol.abs_tol), ('rel_tol', tol.rel_tol)])
    meta.update(extra)
    return meta


def mobility_one_report(pod, opts=None):
    tol = _option(opts, 'tol', DEFAULT_TOL)
    partition = collinear_partition(pod, tol)
    minima = _search(pod, opts)
    flags = OrderedDict([('i', bool(minima)), ('ii', partition is not None)])
    witnesses = OrderedDict([('i', minima[0] if minima else None), ('ii', partition)])
    return AnalysisReport(1, flags, witnesses, minima, _metadata(opts))


def equal_point_groups(points, tol=DEFAULT_TOL):
    """index groups of coinciding points, the empty group included"""
    groups = []
    for i, p in enumerate(points):
        for g in groups:
            if not any(_differ(p, points[g[0]], tol)):
                g.append(i)
                break
        else:
            groups.append([i])
    return [()] + [tuple(g) for g in groups]


@dataclass
class CoincidenceWitness:
    """
    collinear_side points indexed by S are collinear, the other side's points indexed by T coincide
    """
    collinear_side: str
    S: tuple
    T: tuple
    line: Optional[OrientedLine]


def coincidence_witness(pod, tol=DEFAULT_TOL):
    """condition (b) of mobility two"""
    for collinear_side, lines, points in (('platform', pod.platform, pod.base),
                                          ('base', pod.base, pod.platform)):
        groups = sorted(equal_point_groups(points, tol), key=lambda g: (-len(g), g))
        for T in groups:
            S = tuple(i for i in range(pod.n) if i not in T)
            if _collinear(lines[list(S)], tol):
                return CoincidenceWitness(collinear_side, S, T, _line_through(lines[list(S)], tol))
    return None


def _parallel(points_a, points_b, tol):
    """both sets collinear on parallel lines"""
    if not (_collinear(points_a, tol) and _collinear(points_b, tol)):
        return False
    la, lb = _line_through(points_a, tol), _line_through(points_b, tol)
    if la is None or lb is None:
        return True
    return np.linalg.norm(np.cross(la.direction, lb.direction)) <= tolerance(tol).bound(1.0)


@dataclass
class ParallelWitness:
    S: tuple
    T: tuple
    platform_lines: tuple
    base_lines: tuple


def parallel_lines_witness(pod, tol=DEFAULT_TOL):
    """condition (c) of mobility two, subsets S containing index 0 with |S|, |T| >= 2"""
    n = pod.n
    for size in range(2, n - 1):
        for rest in itertools.combinations(range(1, n), size - 1):
            S = (0,) + rest
            T = tuple(i for i in range(n) if i not in S)
            if len(T) < 2:
                continue
            if _parallel(pod.platform[list(S)], pod.platform[list(T)], tol) and \
                    _parallel(pod.base[list(S)], pod.base[list(T)], tol):
                return ParallelWitness(
                    S, T,
                    (_line_through(pod.platform[list(S)], tol), _line_through(pod.platform[list(T)], tol)),
                    (_line_through(pod.base[list(S)], tol), _line_through(pod.base[list(T)], tol)))
    return None


def mobility_two_report(pod, opts=None):
    tol = _option(opts, 'tol', DEFAULT_TOL)
    k = _option(opts, 'k_minima', 5)
    minima = _search(pod, opts)
    coincidence = coincidence_witness(pod, tol)
    parallel = parallel_lines_witness(pod, tol)
    flags = OrderedDict([('a', len(minima) >= k), ('b', coincidence is not None),
                         ('c', parallel is not None)])
    witnesses = OrderedDict([('a', minima[:k] if len(minima) >= k else None), ('b', coincidence),
                             ('c', parallel)])
    return AnalysisReport(2, flags, witnesses, minima, _metadata(opts, k_minima=k))


def fit_sphere_center(samples):
    """
    least-squares sphere through path samples: 2 <x, c> + (rho^2 - |c|^2) = |x|^2
    returns (center, squared radius)
    """
    X = np.asarray(samples, dtype=np.float64).reshape(-1, 3)
    if len(X) < 4:
        raise InputError('a sphere needs at least 4 samples')
    A = np.hstack([2 * X, np.ones((len(X), 1))])
    b = (X * X).sum(1)
    sol, _, rank, _ = np.linalg.lstsq(A, b, rcond=None)
    if rank < 4:
        raise DegeneracyError('samples do not determine a sphere')
    center = sol[:3]
    return center, float(sol[3] + center @ center)
