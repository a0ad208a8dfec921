"""Entropies, relative entropies and quasi-relative entropies (natural log)."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AlphaOutOfRange, NotPositive, ParamOutOfRange
from .linalg import (
    HERMITIAN_TOL,
    ZERO_CLAMP,
    Spectrum,
    as_matrix,
    clamped_eigenvalues,
    ensure_density,
    hermitian_eig,
)

TSALLIS = "tsallis"
RENYI = "renyi"


def check_tsallis_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not (0.0 < alpha <= 2.0) or alpha == 1.0:
        raise AlphaOutOfRange(f"Tsallis alpha must lie in (0, 2] without 1, got {alpha}")
    return alpha


def check_renyi_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not (0.0 < alpha < math.inf) or alpha == 1.0:
        raise AlphaOutOfRange(f"Renyi alpha must lie in (0, inf) without 1, got {alpha}")
    return alpha


def check_alpha(alpha: float, family: str) -> float:
    if family == TSALLIS:
        return check_tsallis_alpha(alpha)
    if family == RENYI:
        return check_renyi_alpha(alpha)
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class CatalogFunction:
    """One of the admissible generating functions ``f`` with ``f(1) = 0``.

    ``neg_log``: f(x) = -log x.  ``tsallis_f``: f(x) = (1 - x**(1-a)) / (1 - a)
    for a in (0, 2), a != 1.
    """

    tag: str
    alpha: float | None = None

    def __post_init__(self):
        if self.tag == "neg_log":
            if self.alpha is not None:
                raise ParamOutOfRange("neg_log takes no parameter")
        elif self.tag == "tsallis_f":
            a = self.alpha
            if a is None or not (0.0 < a < 2.0) or a == 1.0:
                raise AlphaOutOfRange(f"tsallis_f needs alpha in (0, 2) without 1, got {a}")
        else:
            raise ParamOutOfRange(f"unknown catalog function {self.tag!r}")

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        if self.tag == "neg_log":
            return -np.log(x)
        a = self.alpha
        return (1.0 - x ** (1.0 - a)) / (1.0 - a)

    def transpose(self, x):
        """``x * f(1/x)`` with the value 0 at x = 0."""
        x = np.asarray(x, dtype=float)
        pos = x > 0
        safe = np.where(pos, x, 1.0)
        if self.tag == "neg_log":
            val = safe * np.log(safe)
        else:
            a = self.alpha
            val = (safe - safe ** a) / (1.0 - a)
        return np.where(pos, val, 0.0)

    def at_zero(self) -> float:
        """``lim_{x -> 0+} f(x)``."""
        if self.tag == "neg_log" or self.alpha > 1.0:
            return math.inf
        return 1.0 / (1.0 - self.alpha)

    def __str__(self):
        return self.tag if self.alpha is None else f"{self.tag}({self.alpha:g})"


def neg_log() -> CatalogFunction:
    return CatalogFunction("neg_log")


def tsallis_f(alpha: float) -> CatalogFunction:
    return CatalogFunction("tsallis_f", float(alpha))


def _state_eigenvalues(rho) -> np.ndarray:
    rho = ensure_density(rho)
    return clamped_eigenvalues(hermitian_eig(rho.data))


def power_trace(rho, alpha: float) -> float:
    """``Tr rho**alpha`` from the clamped spectrum."""
    lam = _state_eigenvalues(rho)
    lam = lam[lam > 0]
    return float(np.sum(lam ** alpha))


def von_neumann_entropy(rho) -> float:
    lam = _state_eigenvalues(rho)
    lam = lam[lam > 0]
    return float(-np.sum(lam * np.log(lam)))


def tsallis_entropy(rho, alpha: float) -> float:
    alpha = check_tsallis_alpha(alpha)
    return (power_trace(rho, alpha) - 1.0) / (1.0 - alpha)


def renyi_entropy(rho, alpha: float) -> float:
    alpha = check_renyi_alpha(alpha)
    return math.log(power_trace(rho, alpha)) / (1.0 - alpha)


def _psd_spectrum(m, name: str) -> Spectrum:
    spec = hermitian_eig(as_matrix(m))
    if spec.eigenvalues.size and spec.eigenvalues[-1] < -HERMITIAN_TOL:
        raise NotPositive(f"{name} is not positive semidefinite (min eigenvalue {spec.eigenvalues[-1]:.3e})")
    return spec


def _overlaps(sa: Spectrum, sb: Spectrum) -> np.ndarray:
    # entry [j, k] = |<psi_k|phi_j>|^2 with phi from A, psi from B
    return np.abs(sa.eigenvectors.conj().T @ sb.eigenvectors) ** 2


def sandwich_trace(rho, sigma, alpha: float) -> float:
    """``Tr(rho**alpha sigma**(1-alpha))``; +inf on a support violation when alpha > 1."""
    sa, sb = _psd_spectrum(rho, "rho"), _psd_spectrum(sigma, "sigma")
    lam, mu = clamped_eigenvalues(sa), clamped_eigenvalues(sb)
    ov = _overlaps(sa, sb)
    weight = lam[:, None] * ov
    if alpha > 1.0 and np.any(weight[:, mu == 0] > ZERO_CLAMP):
        return math.inf
    lam_a = np.where(lam > 0, lam, 0.0) ** alpha
    mu_b = np.zeros_like(mu)
    mu_b[mu > 0] = mu[mu > 0] ** (1.0 - alpha)
    return float(np.sum(lam_a[:, None] * mu_b[None, :] * ov))


def tsallis_relative_entropy(rho, sigma, alpha: float) -> float:
    alpha = check_tsallis_alpha(alpha)
    rho, sigma = ensure_density(rho), ensure_density(sigma)
    t = sandwich_trace(rho.data, sigma.data, alpha)
    if math.isinf(t):
        return math.inf
    return (t - 1.0) / (alpha - 1.0)


def renyi_relative_entropy(rho, sigma, alpha: float) -> float:
    alpha = check_renyi_alpha(alpha)
    rho, sigma = ensure_density(rho), ensure_density(sigma)
    t = sandwich_trace(rho.data, sigma.data, alpha)
    if math.isinf(t) or t <= 0.0:
        return math.inf
    return math.log(t) / (alpha - 1.0)


def relative_entropy(rho, sigma) -> float:
    """Umegaki relative entropy ``Tr rho (log rho - log sigma)``."""
    return quasi_relative_entropy(ensure_density(rho).data, ensure_density(sigma).data, neg_log())


def quasi_relative_entropy(a, b, f: CatalogFunction) -> float:
    """``S_f(A||B) = sum_{j,k} lam_j f(mu_k / lam_j) |<psi_k|phi_j>|^2``.

    Terms with ``lam_j = 0`` are dropped; terms with ``mu_k = 0`` take the
    limit of ``f`` at zero, which may be +inf.
    """
    sa, sb = _psd_spectrum(a, "A"), _psd_spectrum(b, "B")
    lam, mu = clamped_eigenvalues(sa), clamped_eigenvalues(sb)
    ov = _overlaps(sa, sb)
    total = 0.0
    f0 = f.at_zero()
    for j in np.flatnonzero(lam > 0):
        row = ov[j]
        pos = mu > 0
        total += lam[j] * float(np.sum(f(mu[pos] / lam[j]) * row[pos]))
        w0 = lam[j] * float(np.sum(row[~pos]))
        if w0 > ZERO_CLAMP:
            if math.isinf(f0):
                return math.inf
            total += f0 * w0
    return float(total)


def f_entropy(rho, f: CatalogFunction, variant: int = 1) -> float:
    """f-entropy of a state.

    variant 1: ``-sum_j lam_j f(1/lam_j)``;
    variant 2: ``f(1/d) - sum_j lam_j f(1/(d lam_j))``.
    """
    rho = ensure_density(rho)
    lam = clamped_eigenvalues(hermitian_eig(rho.data))
    return f_entropy_from_probs(lam, f, variant)


def f_entropy_from_probs(probs, f: CatalogFunction, variant: int = 1) -> float:
    """Same as :func:`f_entropy` for a given eigenvalue (or probability) vector."""
    p = np.asarray(probs, dtype=float)
    if variant == 1:
        return float(-np.sum(f.transpose(p)))
    if variant == 2:
        d = p.size
        return float(f(1.0 / d) - np.sum(f.transpose(d * p)) / d)
    raise ParamOutOfRange(f"f-entropy variant must be 1 or 2, got {variant}")
