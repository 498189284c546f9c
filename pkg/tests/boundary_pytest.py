"""
Tests classification, left/right vectors and normal forms of boundary points.
"""
from __future__ import print_function

from fractions import Fraction

import numpy as np
import pytest

from core.boundary import (NORTH, SOUTH, BoundaryClass, classification_report, classify,
                           collinearity_direction, direction_from_conic, isotropic_frame,
                           left_right_vectors, n_matrix, normal_form, normal_point, rank1_factor)
from core.errors import ClassificationError, DegeneracyError
from core.rigid import embed, random_rational_isometry, translation
from core.scalars import I, GaussianRational, as_complex
from core.xspace import IsometryPoint, act, proj_eq, vertex

E = [GaussianRational(1), I, GaussianRational(0)]
ZERO3 = [0, 0, 0]
ZERO33 = [ZERO3, ZERO3, ZERO3]


def conjugate(P, sigma_a, sigma_b):
    return act(sigma_a, act(P, sigma_b, 'right'), 'left')


class TestClassify(object):
    """
    test of the five boundary classes
    """

    def init(self, num=50, seed=100):
        self.pairs = [(random_rational_isometry(seed + 2 * i), random_rational_isometry(seed + 2 * i + 1))
                      for i in range(num)]
        self.normal = {
            BoundaryClass.INVERSION: normal_point(BoundaryClass.INVERSION, Fraction(2), exact=True),
            BoundaryClass.BUTTERFLY: normal_point(BoundaryClass.BUTTERFLY, exact=True),
            BoundaryClass.SIMILARITY: normal_point(BoundaryClass.SIMILARITY, Fraction(3), exact=True),
            BoundaryClass.COLLINEARITY_LEFT: normal_point(BoundaryClass.COLLINEARITY_LEFT, exact=True),
            BoundaryClass.COLLINEARITY_RIGHT: normal_point(BoundaryClass.COLLINEARITY_RIGHT, exact=True),
        }

    def pytestcase_known_points(self):
        assert classify(vertex()) is BoundaryClass.VERTEX
        inversion = IsometryPoint.from_blocks(0, [[1, I, 0], [I, -1, 0], [0, 0, 0]], ZERO3, ZERO3, 2)
        assert classify(inversion) is BoundaryClass.INVERSION
        assert classify(IsometryPoint.from_blocks(0, ZERO33, E, ZERO3, 0)) is BoundaryClass.COLLINEARITY_LEFT
        assert classify(IsometryPoint.from_blocks(0, ZERO33, ZERO3, E, 0)) is BoundaryClass.COLLINEARITY_RIGHT
        assert str(BoundaryClass.COLLINEARITY_LEFT) == 'CollinearityLeft'

    def pytestcase_normal_forms_classify(self):
        self.init(0)
        for cls, P in self.normal.items():
            assert classify(P) is cls
            assert classify(P.to_float()) is cls

    def pytestcase_errors(self):
        with pytest.raises(ClassificationError, match='not a boundary point'):
            classify(embed(random_rational_isometry(0)))
        with pytest.raises(ClassificationError, match='not on X'):
            classify(IsometryPoint([0] + [1] * 16))

    def pytestcase_class_invariant_under_conjugation(self):
        self.init(50)
        for k, (sa, sb) in enumerate(self.pairs):
            for cls, P in self.normal.items():
                Q = conjugate(P, sa, sb)
                assert classify(Q) is cls
                if k < 10:
                    assert classify(Q.to_float()) is cls

    def pytestcase_report(self):
        report = classification_report(vertex())
        assert report.cls is BoundaryClass.VERTEX
        assert 'never a bond' in report.note
        self.init(0)
        report = classification_report(self.normal[BoundaryClass.INVERSION])
        assert np.allclose(report.L, SOUTH) and np.allclose(report.R, SOUTH)
        assert report.certificate.parameter == pytest.approx(2)
        report = classification_report(self.normal[BoundaryClass.COLLINEARITY_RIGHT])
        assert report.L is None and np.allclose(report.direction, SOUTH)


class TestVectors(object):
    """
    test of the identifications of the absolute conic with the sphere
    """

    def pytestcase_rank1_factor(self):
        M = np.array([[1, -I, 0], [I, 1, 0], [0, 0, 0]], dtype=object)
        v, w = rank1_factor(M)
        assert list(v) == [1, I, 0] and list(w) == [1, -I, 0]
        v, w = rank1_factor(as_complex(M))
        assert np.allclose(np.outer(v, w), as_complex(M))
        with pytest.raises(DegeneracyError, match='not rank one'):
            rank1_factor(np.eye(3))
        with pytest.raises(DegeneracyError, match='zero matrix'):
            rank1_factor(np.zeros((3, 3)))

    def pytestcase_direction_from_conic(self):
        assert np.allclose(direction_from_conic([1, 1j, 0]), SOUTH)
        assert np.allclose(direction_from_conic([1, -1j, 0]), NORTH)
        assert np.allclose(direction_from_conic([1, 0, 1j]), [0, 1, 0])
        assert np.allclose(direction_from_conic([2j, -2, 0]), SOUTH)
        with pytest.raises(ClassificationError, match='not on absolute conic'):
            direction_from_conic([1, 0, 0])
        with pytest.raises(ClassificationError, match='not on absolute conic'):
            direction_from_conic([0, 0, 0])

    def pytestcase_equivariance(self):
        e = np.array([1, 1j, 0])
        for seed in range(50):
            R = random_rational_isometry(seed).M.astype(np.float64)
            Rp = random_rational_isometry(seed + 1000).M.astype(np.float64)
            v = (0.3 + 1.7j) * (R @ e)
            assert np.allclose(direction_from_conic(Rp @ v), Rp @ direction_from_conic(v), atol=1e-9)

    def pytestcase_isotropic_frame(self):
        for seed in range(20):
            R = random_rational_isometry(seed).M.astype(np.float64)
            w = (2 - 1j) * (R @ np.array([1, 1j, 0]))
            Q = isotropic_frame(w)
            assert np.allclose(Q @ Q.T, np.eye(3)) and np.linalg.det(Q) == pytest.approx(1)
            Qw = Q @ w
            assert abs(Qw[2]) < 1e-12 and abs(Qw[1] - 1j * Qw[0]) < 1e-12 and Qw[0].real > 0

    def pytestcase_left_right_known_points(self):
        L, R = left_right_vectors(normal_point(BoundaryClass.INVERSION, 2))
        assert np.allclose(L, SOUTH) and np.allclose(R, SOUTH)
        L, R = left_right_vectors(normal_point(BoundaryClass.SIMILARITY, 2))
        assert np.allclose(L, SOUTH) and np.allclose(R, SOUTH)
        # M = v w^t: L comes from w, R from v
        M = np.outer([1, 1j, 0], [1, -1j, 0])
        butterfly = IsometryPoint.from_blocks(0j, M, np.zeros(3), np.zeros(3), 0j)
        assert classify(butterfly) is BoundaryClass.BUTTERFLY
        L, R = left_right_vectors(butterfly)
        assert np.allclose(L, NORTH) and np.allclose(R, SOUTH)
        with pytest.raises(ClassificationError, match='no left/right vector pair'):
            left_right_vectors(normal_point(BoundaryClass.COLLINEARITY_LEFT))

    def pytestcase_collinearity_direction(self):
        assert np.allclose(collinearity_direction(normal_point(BoundaryClass.COLLINEARITY_LEFT)), SOUTH)
        assert np.allclose(collinearity_direction(normal_point(BoundaryClass.COLLINEARITY_RIGHT)), SOUTH)
        rotated = IsometryPoint.from_blocks(0, ZERO33, [1, 0, I], ZERO3, 0)
        assert np.allclose(collinearity_direction(rotated), [0, 1, 0])
        with pytest.raises(ClassificationError):
            collinearity_direction(normal_point(BoundaryClass.INVERSION, 1))

    def pytestcase_actions_move_one_vector(self):
        for seed in range(50):
            sa, sb = random_rational_isometry(2 * seed), random_rational_isometry(2 * seed + 1)
            for cls, parameter in ((BoundaryClass.INVERSION, 3), (BoundaryClass.BUTTERFLY, None),
                                   (BoundaryClass.SIMILARITY, 2)):
                P = conjugate(normal_point(cls, parameter), sa, sb)
                L, R = left_right_vectors(P)
                Mb = sb.M.astype(np.float64)
                Ma = sa.M.astype(np.float64)
                # right actions fix R, left actions fix L
                L2, R2 = left_right_vectors(act(P, sb, 'right'))
                assert np.allclose(R2, R, atol=1e-9) and np.allclose(L2, Mb.T @ L, atol=1e-9)
                L3, R3 = left_right_vectors(act(sa, P, 'left'))
                assert np.allclose(L3, L, atol=1e-9) and np.allclose(R3, Ma @ R, atol=1e-9)

    def pytestcase_n_matrix_translation_invariant(self):
        P = conjugate(normal_point(BoundaryClass.INVERSION, Fraction(5), exact=True),
                      random_rational_isometry(1), random_rational_isometry(2))
        N = as_complex(n_matrix(P)).ravel()
        for s in ([1, 2, 3], [Fraction(-1, 2), 0, 4]):
            for Q in (act(translation(s), P, 'left'), act(P, translation(s), 'right')):
                N2 = as_complex(n_matrix(Q)).ravel()
                assert np.allclose(N2 * np.vdot(N, N), N * np.vdot(N, N2))


class TestNormalForm(object):
    """
    test of the reduction to normal form
    """

    def check(self, P, cert, tol=1e-9):
        reduced = act(cert.sigma_left, act(P.to_float(), cert.sigma_right, 'right'), 'left')
        assert proj_eq(reduced, cert.normal_point, tol)

    def pytestcase_idempotent(self):
        for cls, parameter in ((BoundaryClass.INVERSION, 2.5), (BoundaryClass.BUTTERFLY, None),
                               (BoundaryClass.SIMILARITY, 0.5), (BoundaryClass.COLLINEARITY_LEFT, None),
                               (BoundaryClass.COLLINEARITY_RIGHT, None)):
            cert = normal_form(normal_point(cls, parameter))
            assert cert.cls is cls
            assert np.allclose(cert.sigma_left.M, np.eye(3)) and np.allclose(cert.sigma_left.y, 0)
            assert np.allclose(cert.sigma_right.M, np.eye(3)) and np.allclose(cert.sigma_right.y, 0)
            if parameter is not None:
                assert cert.parameter == pytest.approx(parameter)

    def pytestcase_round_trip(self):
        rng = np.random.default_rng(0)
        for k in range(50):
            sa, sb = random_rational_isometry(3 * k), random_rational_isometry(3 * k + 1)
            r = float(rng.uniform(0.01, 10))
            gamma = float(rng.uniform(0.01, 10))
            for cls, parameter in ((BoundaryClass.INVERSION, r), (BoundaryClass.SIMILARITY, gamma)):
                P = conjugate(normal_point(cls, parameter), sa, sb)
                cert = normal_form(P)
                assert cert.cls is cls
                assert abs(cert.parameter - parameter) <= 1e-9 * max(1, parameter)
                self.check(P, cert)

    def pytestcase_exact_conjugates(self):
        for k in range(20):
            sa, sb = random_rational_isometry(7 * k), random_rational_isometry(7 * k + 3)
            for cls in (BoundaryClass.BUTTERFLY, BoundaryClass.COLLINEARITY_LEFT,
                        BoundaryClass.COLLINEARITY_RIGHT):
                P = conjugate(normal_point(cls, exact=True), sa, sb)
                cert = normal_form(P)
                assert cert.cls is cls
                self.check(P, cert)

    def pytestcase_similarity_point(self):
        P = IsometryPoint.from_blocks(0, ZERO33, [2, 2 * I, 0], E, 7)
        cert = normal_form(P)
        assert cert.parameter == pytest.approx(2)
        assert abs(cert.normal_point.r) == 0
        self.check(P, cert)

    def pytestcase_parameter_is_invariant(self):
        base = normal_point(BoundaryClass.INVERSION, Fraction(7, 2), exact=True)
        values = [normal_form(conjugate(base, random_rational_isometry(k), random_rational_isometry(k + 50))).parameter
                  for k in range(10)]
        assert max(values) - min(values) <= 1e-9 * 3.5

    def pytestcase_vertex_has_no_moduli(self):
        with pytest.raises(DegeneracyError, match='vertex has no moduli'):
            normal_form(vertex())
