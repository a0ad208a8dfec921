"""Dephasing maps and the catalog of coherence quantifiers.

Incoherent states are diagonal in the computational basis. ``dephase`` drops
off-diagonal entries; ``dephase_alpha`` returns the incoherent state closest
to ``rho`` in alpha-Tsallis (equivalently alpha-Renyi) relative entropy,
with diagonal proportional to ``<j|rho**alpha|j>**(1/alpha)``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import divergences as dv
from .errors import AlphaOutOfRange, MeasureUndefined, ParamOutOfRange
from .linalg import abs_power_trace, ensure_density, matrix_power, trace_norm

UNDERFLOW = 1e-300


@dataclass(frozen=True, eq=False)
class IncoherentState:
    probs: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.probs, dtype=float)
        if p.ndim != 1 or np.any(p < 0) or abs(p.sum() - 1.0) > 1e-10:
            raise ValueError(f"not a probability vector: {p}")
        p = p.copy()
        p.setflags(write=False)
        object.__setattr__(self, "probs", p)

    @property
    def dim(self) -> int:
        return self.probs.size

    def matrix(self) -> np.ndarray:
        return np.diag(self.probs).astype(np.complex128)


def dephase(rho) -> IncoherentState:
    rho = ensure_density(rho)
    p = np.clip(np.real(np.diag(rho.data)), 0.0, None)
    return IncoherentState(p / p.sum())


def _alpha_diagonal(rho, alpha: float) -> np.ndarray:
    # <j|rho^alpha|j>^(1/alpha), underflowing entries set to 0
    diag = np.real(np.diag(matrix_power(rho, alpha)))
    diag = np.where(diag > UNDERFLOW, diag, 0.0)
    return diag ** (1.0 / alpha)


def dephase_alpha_unnormalized(rho, alpha: float) -> np.ndarray:
    """``sum_j <j|rho**alpha|j>**(1/alpha) |j><j|``.

    Works for any positive semidefinite ``rho``; scales linearly with it.
    """
    alpha = dv.check_tsallis_alpha(alpha)
    return np.diag(_alpha_diagonal(np.asarray(rho), alpha)).astype(np.complex128)


def normalization(rho, alpha: float) -> float:
    """``N(rho) = sum_j <j|rho**alpha|j>**(1/alpha)``."""
    alpha = dv.check_tsallis_alpha(alpha)
    return float(np.sum(_alpha_diagonal(ensure_density(rho).data, alpha)))


def dephase_alpha(rho, alpha: float) -> tuple[IncoherentState, float]:
    """Closest incoherent state for alpha-relative entropies, with its normalization N."""
    alpha = dv.check_tsallis_alpha(alpha)
    x = _alpha_diagonal(ensure_density(rho).data, alpha)
    n = float(x.sum())
    return IncoherentState(x / n), n


def _tsallis_probs(p, alpha):
    p = p[p > 0]
    return (float(np.sum(p ** alpha)) - 1.0) / (1.0 - alpha)


def _renyi_probs(p, alpha):
    p = p[p > 0]
    return math.log(float(np.sum(p ** alpha))) / (1.0 - alpha)


def _vn_probs(p):
    p = p[p > 0]
    return float(-np.sum(p * np.log(p)))


def relative_entropy_coherence(rho) -> float:
    rho = ensure_density(rho)
    return _vn_probs(dephase(rho).probs) - dv.von_neumann_entropy(rho)


def cr1(rho, alpha: float) -> float:
    """Distance-based Renyi coherence, closed form ``alpha/(alpha-1) log N``."""
    return alpha / (alpha - 1.0) * math.log(normalization(rho, alpha))


def ct1(rho, alpha: float) -> float:
    """Distance-based Tsallis coherence, closed form ``(N**alpha - 1)/(alpha - 1)``."""
    return (normalization(rho, alpha) ** alpha - 1.0) / (alpha - 1.0)


def cr2(rho, alpha: float) -> float:
    dv.check_tsallis_alpha(alpha)
    rho = ensure_density(rho)
    return _renyi_probs(dephase(rho).probs, alpha) - dv.renyi_entropy(rho, alpha)


def ct2(rho, alpha: float) -> float:
    rho = ensure_density(rho)
    return _tsallis_probs(dephase(rho).probs, dv.check_tsallis_alpha(alpha)) - dv.tsallis_entropy(rho, alpha)


def cr3(rho, alpha: float) -> float:
    rho = ensure_density(rho)
    return dv.renyi_relative_entropy(rho, dephase(rho).matrix(), alpha)


def ct_new(rho, alpha: float) -> float:
    """Tsallis entropy increment from ``rho`` to its alpha-closest incoherent state."""
    rho = ensure_density(rho)
    delta, _ = dephase_alpha(rho, alpha)
    return _tsallis_probs(delta.probs, alpha) - dv.tsallis_entropy(rho, alpha)


def cr_new(rho, alpha: float) -> float:
    rho = ensure_density(rho)
    delta, _ = dephase_alpha(rho, alpha)
    return _renyi_probs(delta.probs, alpha) - dv.renyi_entropy(rho, alpha)


def f_coherence(rho, f: dv.CatalogFunction, variant: int = 1) -> float:
    rho = ensure_density(rho)
    return dv.f_entropy_from_probs(dephase(rho).probs, f, variant) - dv.f_entropy(rho, f, variant)


def hs_coherence(rho) -> float:
    """Squared Hilbert-Schmidt distance to the dephased state (Tsallis alpha=2 increment)."""
    rho = ensure_density(rho)
    return _tsallis_probs(dephase(rho).probs, 2.0) - dv.tsallis_entropy(rho, 2.0)


def improved_c1(rho, alpha: float) -> float:
    """``Tr |Delta(rho**alpha)**(1/alpha) - rho|``."""
    rho = ensure_density(rho)
    return trace_norm(dephase_alpha_unnormalized(rho.data, alpha) - rho.data)


def improved_c2(rho, alpha: float) -> float:
    """``Tr |Delta(rho**alpha) - rho**alpha|**(1/alpha)``."""
    alpha = dv.check_tsallis_alpha(alpha)
    ra = matrix_power(ensure_density(rho).data, alpha)
    diff = np.diag(np.diag(ra)) - ra
    return abs_power_trace(0.5 * (diff + diff.conj().T), 1.0 / alpha)


def pure_state_ct(chi, alpha: float) -> float:
    """Closed form of ``ct_new`` on a pure state with basis overlaps ``chi``."""
    alpha = dv.check_tsallis_alpha(alpha)
    chi = np.asarray(chi.probs if isinstance(chi, IncoherentState) else chi, dtype=float)
    s = float(np.sum(chi[chi > 0] ** (1.0 / alpha)))
    return (s ** (-alpha) - 1.0) / (1.0 - alpha)


class Measure(str, enum.Enum):
    C_REL = "c_rel"
    CR1 = "cr1"
    CR2 = "cr2"
    CR3 = "cr3"
    CT1 = "ct1"
    CT2 = "ct2"
    CT_NEW = "ct_new"
    CR_NEW = "cr_new"
    C_F = "c_f"
    C_HS = "c_hs"
    C1_IMPROVED = "c1_improved"
    C2_IMPROVED = "c2_improved"


_ALPHA_FREE = {Measure.C_REL, Measure.C_HS, Measure.C_F}


@dataclass(frozen=True)
class MeasureId:
    """A coherence quantifier together with its parameter."""

    tag: Measure
    alpha: float | None = None
    f: dv.CatalogFunction | None = None
    variant: int = 1

    def __post_init__(self):
        object.__setattr__(self, "tag", Measure(self.tag))
        if self.tag in _ALPHA_FREE:
            if self.tag is Measure.C_F:
                if self.f is None:
                    raise ParamOutOfRange("c_f needs a catalog function")
                if self.variant not in (1, 2):
                    raise ParamOutOfRange(f"f-entropy variant must be 1 or 2, got {self.variant}")
            return
        if self.alpha is None:
            raise AlphaOutOfRange(f"{self.tag.value} needs alpha")
        if self.tag is Measure.CR3:
            dv.check_renyi_alpha(self.alpha)
        else:
            dv.check_tsallis_alpha(self.alpha)

    def __str__(self):
        if self.tag is Measure.C_F:
            return f"c_f[{self.f}, v{self.variant}]"
        if self.alpha is None:
            return self.tag.value
        return f"{self.tag.value}[alpha={self.alpha:g}]"


def coherence(rho, measure, alpha: float | None = None, f=None, variant: int = 1) -> float:
    """Evaluate any catalog measure. ``measure`` is a :class:`MeasureId` or a tag."""
    mid = measure if isinstance(measure, MeasureId) else MeasureId(Measure(measure), alpha, f, variant)
    rho = ensure_density(rho)
    tag, a = mid.tag, mid.alpha
    if tag is Measure.C_REL:
        return relative_entropy_coherence(rho)
    if tag is Measure.C_HS:
        return hs_coherence(rho)
    if tag is Measure.C_F:
        return f_coherence(rho, mid.f, mid.variant)
    dispatch = {
        Measure.CR1: cr1,
        Measure.CR2: cr2,
        Measure.CR3: cr3,
        Measure.CT1: ct1,
        Measure.CT2: ct2,
        Measure.CT_NEW: ct_new,
        Measure.CR_NEW: cr_new,
        Measure.C1_IMPROVED: improved_c1,
        Measure.C2_IMPROVED: improved_c2,
    }
    value = dispatch[tag](rho, a)
    if math.isnan(value):
        raise MeasureUndefined(f"{mid} is undefined on this state")
    return value
