"""Brute-force search for the incoherent state closest in alpha-relative entropy.

This module deliberately does not use the closed-form ``dephase_alpha``; it
only evaluates the objective ``Tr(rho**alpha delta**(1-alpha))`` on diagonal
candidates ``delta`` and minimizes the resulting divergence.
"""
from __future__ import annotations

import numpy as np

from .. import divergences as dv
from ..coherence import IncoherentState
from ..errors import ResolutionTooCoarse
from ..linalg import ensure_density, matrix_power
from .sampling import make_rng


def project_simplex(v: np.ndarray) -> np.ndarray:
    """Euclidean projection onto the probability simplex (sort-based)."""
    u = np.sort(v)[::-1]
    css = np.cumsum(u)
    k = np.arange(1, v.size + 1)
    cond = u - (css - 1.0) / k > 0
    # a huge leading entry can cancel to zero in float; the projection is then that vertex
    r = k[cond][-1] if cond.any() else 1
    tau = (css[r - 1] - 1.0) / r
    return np.maximum(v - tau, 0.0)


class _Objective:
    def __init__(self, rho, alpha: float, family: str):
        self.alpha = dv.check_alpha(alpha, family)
        self.family = family
        self.weights = np.clip(np.real(np.diag(matrix_power(rho.data, alpha))), 0.0, None)

    def trace(self, deltas: np.ndarray) -> np.ndarray:
        """``sum_j w_j delta_j**(1-alpha)`` for each row of ``deltas``."""
        a = self.alpha
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            powered = np.where(deltas > 0, np.abs(deltas) ** (1.0 - a), 0.0 if a < 1 else np.inf)
            terms = np.where(self.weights > 0, self.weights * powered, 0.0)
        return terms.sum(axis=-1)

    def value(self, deltas: np.ndarray) -> np.ndarray:
        t = self.trace(deltas)
        a = self.alpha
        with np.errstate(divide="ignore", invalid="ignore"):
            if self.family == dv.TSALLIS:
                return (t - 1.0) / (a - 1.0)
            return np.log(t) / (a - 1.0)

    def gradient(self, delta: np.ndarray) -> np.ndarray:
        a = self.alpha
        t = float(self.trace(delta))
        with np.errstate(divide="ignore", invalid="ignore"):
            dt = np.where(self.weights > 0, (1.0 - a) * self.weights * np.maximum(delta, 1e-300) ** (-a), 0.0)
        if self.family == dv.TSALLIS:
            return dt / (a - 1.0)
        return dt / (t * (a - 1.0))


def _simplex_grid(d: int, n: int) -> np.ndarray:
    if d == 1:
        return np.ones((1, 1))
    if d == 2:
        i = np.arange(n + 1)
        return np.stack([i, n - i], axis=1) / n
    if d == 3:
        i, j = np.meshgrid(np.arange(n + 1), np.arange(n + 1), indexing="ij")
        mask = i + j <= n
        i, j = i[mask], j[mask]
        return np.stack([i, j, n - i - j], axis=1) / n
    raise ValueError("exhaustive grid is limited to d <= 3")


def _local_grid(center: np.ndarray, step: float, half_width: int) -> np.ndarray:
    """Points ``center + step * k`` (integer offsets on the first d-1 coords) inside the simplex."""
    d = center.size
    offs = np.arange(-half_width, half_width + 1) * step
    mesh = np.meshgrid(*([offs] * (d - 1)), indexing="ij")
    head = center[: d - 1][None, :] + np.stack([m.ravel() for m in mesh], axis=1)
    last = 1.0 - head.sum(axis=1, keepdims=True)
    pts = np.concatenate([head, last], axis=1)
    pts = pts[np.all(pts >= -1e-15, axis=1)]
    return np.clip(pts, 0.0, 1.0)


def _grid_search(obj: _Objective, d: int, resolution: float, refine: int):
    n = int(round(1.0 / resolution))
    pts = _simplex_grid(d, n)
    vals = obj.value(pts)
    k = int(np.nanargmin(vals))
    best, best_val = pts[k], float(vals[k])
    step = 1.0 / n
    for _ in range(refine):
        step /= 10.0
        local = _local_grid(best, step, 10)
        lv = obj.value(local)
        k = int(np.nanargmin(lv))
        if lv[k] <= best_val:
            best, best_val = local[k], float(lv[k])
    return best, best_val


def _descent(obj: _Objective, d: int, starts: int, seed: int, max_iter: int = 20000):
    """Multi-start exponentiated-gradient descent with backtracking.

    The multiplicative update keeps iterates strictly inside the simplex,
    where the objective is smooth even when its boundary slope is infinite.
    """
    rng = make_rng(seed, "oracle-starts")
    inits = [np.full(d, 1.0 / d)] + [rng.dirichlet(np.ones(d)) for _ in range(starts - 1)]
    best, best_val = None, np.inf
    for x in inits:
        logx = np.log(x)
        fx = float(obj.value(x))
        step = 1.0
        for _ in range(max_iter):
            g = obj.gradient(x)
            while step > 1e-18:
                z = logx - step * g
                z -= z.max()
                y = np.exp(z)
                y /= y.sum()
                fy = float(obj.value(y))
                if np.isfinite(fy) and fy <= fx:
                    break
                step *= 0.5
            else:
                break
            improvement = fx - fy
            x, fx, logx = y, fy, np.log(np.maximum(y, 1e-300))
            step *= 2.0
            if improvement < 1e-16 and step > 1e-12:
                break
        if fx < best_val:
            best, best_val = x, fx
    return best, best_val


def closest_incoherent_oracle(rho, alpha: float, family: str = dv.TSALLIS, resolution: float = 1e-3,
                              refine: int = 2, starts: int = 20, seed: int = 0):
    """Minimize the alpha-relative entropy ``S(rho || delta)`` over diagonal states.

    For ``d <= 3`` an exhaustive simplex grid with spacing ``resolution`` is
    scanned, followed by ``refine`` rounds of exhaustive local grids, each ten
    times finer, around the incumbent. Larger dimensions use multi-start
    exponentiated-gradient descent with step-halving line search.

    Returns ``(IncoherentState, minimum value)``.
    """
    if not (0.0 < resolution <= 0.01):
        raise ResolutionTooCoarse(f"resolution must be in (0, 0.01], got {resolution}")
    rho = ensure_density(rho)
    obj = _Objective(rho, alpha, family)
    d = rho.dim
    if d <= 3:
        best, val = _grid_search(obj, d, resolution, refine)
    else:
        best, val = _descent(obj, d, starts, seed)
    best = np.clip(best, 0.0, None)
    return IncoherentState(best / best.sum()), float(val)
