"""Hermitian linear algebra on small dense complex matrices.

Everything downstream (entropies, dephasings, channel checks) goes through
:func:`hermitian_eig` and :func:`matrix_power`, so the numerical conventions
live here: eigenvalues below ``ZERO_CLAMP`` are treated as exact zeros before
any fractional power, and degenerate eigenvectors are ordered deterministically.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotHermitian, NotPositive, TraceMismatch

ZERO_CLAMP = 1e-12
HERMITIAN_TOL = 1e-9


def as_matrix(m) -> np.ndarray:
    """Coerce to a square complex128 array."""
    arr = np.asarray(m, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    return arr


def hermitian_defect(m: np.ndarray) -> float:
    return float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A validated state: Hermitian, positive semidefinite, unit trace.

    Build one with :func:`validate_density`; the stored array is read-only.
    """

    data: np.ndarray
    tol: float = 1e-9

    @property
    def dim(self) -> int:
        return self.data.shape[0]

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.data
        return self.data.astype(dtype)

    def __repr__(self):
        return f"DensityMatrix(dim={self.dim}, tol={self.tol:g})"


@dataclass(frozen=True, eq=False)
class Spectrum:
    eigenvalues: np.ndarray  # real, descending
    eigenvectors: np.ndarray  # columns aligned with eigenvalues

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def _phase_fix(v: np.ndarray) -> np.ndarray:
    # make the first non-negligible component of each column real positive
    v = v.copy()
    for k in range(v.shape[1]):
        col = v[:, k]
        idx = int(np.argmax(np.abs(col) > 1e-10))
        z = col[idx]
        if abs(z) > 0:
            v[:, k] = col * (abs(z) / z)
    return v


def _first_nonzero(col: np.ndarray) -> tuple[int, float]:
    idx = int(np.argmax(np.abs(col) > 1e-10))
    return idx, -abs(col[idx])


def hermitian_eig(m) -> Spectrum:
    """Eigendecomposition of a Hermitian matrix, eigenvalues descending.

    Eigenvectors are phase-fixed (first nonzero component real positive) and
    equal eigenvalues are ordered by the position, then the magnitude, of that
    component, so identical input always gives identical output.
    """
    a = as_matrix(m)
    defect = hermitian_defect(a)
    if defect > HERMITIAN_TOL:
        raise NotHermitian(f"matrix is not Hermitian: max |A - A^*| = {defect:.3e}")
    a = 0.5 * (a + a.conj().T)
    w, v = np.linalg.eigh(a)
    w, v = w[::-1].copy(), _phase_fix(v[:, ::-1])

    order = []
    i, n = 0, len(w)
    scale = max(1.0, float(np.max(np.abs(w)))) if n else 1.0
    while i < n:
        j = i + 1
        while j < n and abs(w[j] - w[i]) <= 1e-12 * scale:
            j += 1
        group = list(range(i, j))
        if len(group) > 1:
            group.sort(key=lambda k: _first_nonzero(v[:, k]))
        order.extend(group)
        i = j
    return Spectrum(w[order], v[:, order])


def clamped_eigenvalues(spec: Spectrum) -> np.ndarray:
    w = spec.eigenvalues.copy()
    w[w < ZERO_CLAMP] = 0.0
    return w


def validate_density(m, tol: float = 1e-9) -> DensityMatrix:
    """Check Hermiticity, positivity and trace (in that order); return a cleaned state.

    Eigenvalues within ``tol`` of zero are clamped to zero and the trace is
    renormalized, so decimal-rounded user input is accepted.
    """
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    if isinstance(m, DensityMatrix):
        return m
    a = as_matrix(m)
    defect = hermitian_defect(a)
    if defect > tol:
        raise NotHermitian(f"not Hermitian: max |A - A^*| = {defect:.3e} > tol {tol:.3e}")
    a = 0.5 * (a + a.conj().T)
    w, v = np.linalg.eigh(a)
    if w[0] < -tol:
        raise NotPositive(f"not positive semidefinite: min eigenvalue = {w[0]:.3e} < -tol {tol:.3e}")
    tr = float(np.trace(a).real)
    if abs(tr - 1.0) > tol:
        raise TraceMismatch(f"trace mismatch: |Tr - 1| = {abs(tr - 1.0):.3e} > tol {tol:.3e}")
    if w[0] < 0:
        w = np.clip(w, 0.0, None)
        a = (v * (w / w.sum())) @ v.conj().T
        a = 0.5 * (a + a.conj().T)
    elif tr != 1.0:
        a = a / tr
    a = np.array(a)
    a.setflags(write=False)
    return DensityMatrix(a, tol)


def ensure_density(rho, tol: float = 1e-9) -> DensityMatrix:
    return rho if isinstance(rho, DensityMatrix) else validate_density(rho, tol)


def matrix_power(rho, alpha: float) -> np.ndarray:
    """``rho**alpha`` through the spectrum, with 0**alpha = 0.

    Accepts any Hermitian positive semidefinite matrix; trace is not required
    to be one.
    """
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    spec = hermitian_eig(np.asarray(rho))
    if spec.eigenvalues[-1] < -HERMITIAN_TOL:
        raise NotPositive(f"fractional power of a non-positive matrix (min eigenvalue {spec.eigenvalues[-1]:.3e})")
    w = clamped_eigenvalues(spec)
    w = np.where(w > 0, np.abs(w) ** alpha, 0.0)
    v = spec.eigenvectors
    return (v * w) @ v.conj().T


def trace_norm(m) -> float:
    """Sum of singular values."""
    return float(np.sum(np.linalg.svd(as_matrix(m), compute_uv=False)))


def abs_power_trace(m, p: float) -> float:
    """``Tr |m|**p`` for Hermitian ``m``."""
    if p <= 0:
        raise ValueError(f"p must be positive, got {p}")
    lam = np.abs(hermitian_eig(m).eigenvalues)
    lam = lam[lam > 0]
    return float(np.sum(lam ** p))


def direct_sum(p1: float, rho1, rho2) -> np.ndarray:
    """Block-diagonal ``p1*rho1 (+) (1-p1)*rho2``, rho1 in the top-left block."""
    a, b = as_matrix(rho1), as_matrix(rho2)
    out = np.zeros((a.shape[0] + b.shape[0],) * 2, dtype=np.complex128)
    out[: a.shape[0], : a.shape[0]] = p1 * a
    out[a.shape[0]:, a.shape[0]:] = (1.0 - p1) * b
    return out
