"""
Tests the batched Newton search over pairs of directions.
"""
from __future__ import print_function

import numpy as np
import torch

from core.planar import project_points
from core.search import ProjectionSearch, frames, objective, project, sphere_starts
from core.utils.hist import HistoryBuffer
from datasets.pods import bricard_hexapod


class TestSearch(object):
    """
    test of the objective and of the batched iterations
    """

    def init(self, seed=0, starts=8):
        pod = bricard_hexapod(seed=seed)
        self.platform, self.base = pod.platform, pod.base
        self.L, self.R = sphere_starts(starts, seed)
        self.search = ProjectionSearch(self.platform, self.base, max_iter=20)

    def pytestcase_starts(self):
        L, R = sphere_starts(7, 3)
        assert L.shape == (7, 3) and R.shape == (7, 3)
        assert np.allclose(np.linalg.norm(L, axis=1), 1)
        assert np.allclose(L[4:], -L[:3]) and np.allclose(R[4:], R[:3])
        L2, _ = sphere_starts(7, 3)
        assert np.array_equal(L, L2)

    def pytestcase_frames_are_orthonormal(self):
        self.init()
        L = torch.as_tensor(np.vstack([self.L, [[0.0, 0.0, -1.0], [0.0, 0.0, 1.0]]]))
        e1, e2 = frames(L)
        for a, b in ((e1, e2), (e1, L), (e2, L)):
            assert torch.allclose((a * b).sum(-1), torch.zeros(len(L), dtype=L.dtype), atol=1e-12)
        det = torch.linalg.det(torch.stack([e1, e2, -L], dim=-1))
        assert torch.allclose(det, torch.ones_like(det))

    def pytestcase_projection_matches_planar(self):
        self.init()
        q = project(torch.as_tensor(self.platform), torch.as_tensor(self.L)).numpy()
        for k in range(len(self.L)):
            assert np.allclose(q[k], project_points(self.platform, self.L[k]))

    def pytestcase_objective_vanishes_at_bricard_pair(self):
        self.init()
        L = torch.tensor([[0.0, 0.0, 1.0]], dtype=torch.float64)
        R = torch.tensor([[0.0, 0.0, -1.0]], dtype=torch.float64)
        f = objective(torch.as_tensor(self.platform), torch.as_tensor(self.base), L, R)
        assert float(f[0]) < 1e-20

    def pytestcase_gradient_matches_finite_differences(self):
        self.init(seed=1, starts=4)
        L, R = torch.as_tensor(self.L), torch.as_tensor(self.R)
        zero = L.new_zeros(len(L), 4)
        _, g = self.search.gradient(L, R, zero)
        step = 1e-6
        for k in range(4):
            e = zero.clone()
            e[:, k] = step
            fd = (self.search.value(L, R, e) - self.search.value(L, R, -e)) / (2 * step)
            assert torch.allclose(g[:, k], fd, rtol=1e-4, atol=1e-8)

    def pytestcase_hessian_is_symmetric(self):
        self.init(starts=4)
        H = self.search.hessian(torch.as_tensor(self.L), torch.as_tensor(self.R))
        assert H.shape == (4, 4, 4)
        assert torch.allclose(H, H.transpose(1, 2))

    def pytestcase_batched_matches_sequential(self):
        self.init(seed=2, starts=6)
        L, R, res = self.search.run(self.L, self.R)
        for k in range(len(self.L)):
            single = ProjectionSearch(self.platform, self.base, max_iter=20)
            Lk, Rk, rk = single.run(self.L[k:k + 1], self.R[k:k + 1])
            assert np.allclose(Lk[0], L[k], atol=1e-6)
            assert np.allclose(Rk[0], R[k], atol=1e-6)
            assert np.allclose(rk[0], res[k], atol=1e-9)

    def pytestcase_residuals_decrease(self):
        self.init(seed=3, starts=8)
        start = np.sqrt(objective(torch.as_tensor(self.platform), torch.as_tensor(self.base),
                                  torch.as_tensor(self.L), torch.as_tensor(self.R)).clamp_min(0).numpy())
        L, R, res = self.search.run(self.L, self.R)
        assert np.all(res <= start + 1e-12)
        assert np.allclose(np.linalg.norm(L, axis=1), 1) and np.allclose(np.linalg.norm(R, axis=1), 1)
        assert len(self.search.history) > 0
        assert self.search.history.best() <= start.min() + 1e-12


class TestHistoryBuffer(object):
    """
    test of the residual history
    """

    def pytestcase_buffer(self):
        buf = HistoryBuffer()
        assert len(buf) == 0 and buf.best() == float('inf')
        for v in (5.0, 1.0, 3.0, 4.0):
            buf.update(v)
        assert len(buf) == 4
        assert buf.best() == 1.0
        buf.update(0.5)
        assert buf.best() == 0.5 and len(buf) == 5
