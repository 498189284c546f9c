"""
Batched multi-start minimization over pairs of directions (L, R) in S^2 x S^2.

The objective is the squared smallest singular value of the Möbius fitting system
[-q, -1, q Q, Q] built from q = proj_L(platform) and Q = proj_R(base). All starts are
evaluated together as one torch batch; steps are damped Newton steps in the tangent
planes, with the gradient from autograd and the Hessian from finite differences of it.
"""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import numpy as np
import torch
from tqdm import trange

from core.utils import hist


def frames(L):
    """
    tangent frames (e1, e2) of unit directions L of shape (S, 3), with (e1, e2, -L) right-handed
    """
    south = L.new_tensor([0.0, 0.0, -1.0]).expand_as(L)
    east = L.new_tensor([1.0, 0.0, 0.0]).expand_as(L)
    polar = (south * L).sum(-1, keepdim=True).abs() > 1 - 1e-6
    u = torch.where(polar, east, south)
    e1 = u - (u * L).sum(-1, keepdim=True) * L
    e1 = e1 / e1.norm(dim=-1, keepdim=True)
    e2 = torch.cross(e1, L, dim=-1)
    return e1, e2


def project(points, L):
    """points (n, 3), L (S, 3) -> (S, n) complex projections"""
    e1, e2 = frames(L)
    return torch.complex(e1 @ points.T, e2 @ points.T)


def fitting_system(q, Q):
    """rows [-q, -1, q Q, Q] acting on (a, b, c, d)"""
    ones = torch.ones_like(q)
    return torch.stack([-q, -ones, q * Q, Q], dim=-1)


def objective(platform, base, L, R):
    A = fitting_system(project(platform, L), project(base, R))
    return torch.linalg.svdvals(A)[..., -1] ** 2


def sphere_starts(count, seed):
    """
    seeded random pairs followed by the same pairs with L flipped
    """
    rng = np.random.default_rng(seed)
    half = (count + 1) // 2
    L = rng.normal(size=(half, 3))
    R = rng.normal(size=(half, 3))
    L /= np.linalg.norm(L, axis=1, keepdims=True)
    R /= np.linalg.norm(R, axis=1, keepdims=True)
    return np.concatenate([L, -L])[:count], np.concatenate([R, R])[:count]


class ProjectionSearch(object):
    """
    class wrapping the damped Newton iterations of all starts
    """

    def __init__(self, platform, base, max_iter=200, fd_step=1e-5, max_step=0.5, max_halvings=30,
                 progress=False):
        self.platform = torch.as_tensor(np.asarray(platform, dtype=np.float64))
        self.base = torch.as_tensor(np.asarray(base, dtype=np.float64))
        assert self.platform.shape == self.base.shape and self.platform.shape[-1] == 3
        self.max_iter = max_iter
        self.fd_step = fd_step
        self.max_step = max_step
        self.max_halvings = max_halvings
        self.progress = progress
        self.history = hist.HistoryBuffer()

    def retract(self, L, R, xi):
        tL1, tL2 = frames(L)
        tR1, tR2 = frames(R)
        L2 = L + xi[:, 0:1] * tL1 + xi[:, 1:2] * tL2
        R2 = R + xi[:, 2:3] * tR1 + xi[:, 3:4] * tR2
        return L2 / L2.norm(dim=-1, keepdim=True), R2 / R2.norm(dim=-1, keepdim=True)

    def value(self, L, R, xi):
        return objective(self.platform, self.base, *self.retract(L, R, xi))

    def gradient(self, L, R, xi):
        xi = xi.detach().clone().requires_grad_(True)
        f = self.value(L, R, xi)
        g, = torch.autograd.grad(f.sum(), xi)
        return f.detach(), torch.nan_to_num(g, nan=0.0, posinf=0.0, neginf=0.0)

    def hessian(self, L, R):
        zero = L.new_zeros(L.shape[0], 4)
        cols = []
        for k in range(4):
            e = zero.clone()
            e[:, k] = self.fd_step
            gp = self.gradient(L, R, e)[1]
            gm = self.gradient(L, R, -e)[1]
            cols.append((gp - gm) / (2 * self.fd_step))
        H = torch.stack(cols, dim=-1)
        return 0.5 * (H + H.transpose(1, 2))

    def newton_step(self, H, g):
        eig_min = torch.linalg.eigvalsh(H)[:, 0]
        size = H.diagonal(dim1=1, dim2=2).abs().sum(-1)
        shift = torch.clamp(-eig_min, min=0) * 1.1 + 1e-10 * size + 1e-300
        eye = torch.eye(4, dtype=H.dtype).expand_as(H)
        step = -torch.linalg.solve(H + shift[:, None, None] * eye, g.unsqueeze(-1)).squeeze(-1)
        norm = step.norm(dim=-1, keepdim=True).clamp_min(1e-300)
        return step * torch.clamp(self.max_step / norm, max=1.0)

    def run(self, L, R):
        """
        returns the final directions and residuals sqrt(f) of every start
        """
        L = torch.as_tensor(np.asarray(L, dtype=np.float64))
        R = torch.as_tensor(np.asarray(R, dtype=np.float64))
        num = L.shape[0]
        zero = L.new_zeros(num, 4)
        active = torch.ones(num, dtype=torch.bool)
        f, g = self.gradient(L, R, zero)
        with trange(self.max_iter, disable=not self.progress) as t:
            for _ in t:
                if not active.any():
                    break
                step = self.newton_step(self.hessian(L, R), g)
                alpha = L.new_ones(num)
                accepted = torch.zeros(num, dtype=torch.bool)
                pending = active.clone()
                with torch.no_grad():
                    for _ in range(self.max_halvings):
                        if not pending.any():
                            break
                        f_try = self.value(L, R, alpha[:, None] * step)
                        better = pending & (f_try < f)
                        accepted |= better
                        pending &= ~better
                        alpha = torch.where(pending, alpha * 0.5, alpha)
                    L_new, R_new = self.retract(L, R, alpha[:, None] * step)
                L = torch.where(accepted[:, None], L_new, L)
                R = torch.where(accepted[:, None], R_new, R)
                active &= accepted
                f, g = self.gradient(L, R, zero)
                self.history.update(float(f.clamp_min(0).min().sqrt()))
                t.set_description('best: %.3e | active: %d' % (self.history.best(),
                                                               int(active.sum())))
        return L.numpy(), R.numpy(), f.clamp_min(0).sqrt().numpy()
