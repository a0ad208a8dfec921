"""Kraus channels, post-measurement ensembles and incoherence classes."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import divergences as dv
from .coherence import dephase_alpha
from .errors import DimensionMismatch, IncompleteKraus, NotGio, ParamOutOfRange
from .linalg import DensityMatrix, as_matrix, ensure_density, trace_norm, validate_density


@dataclass(frozen=True, eq=False)
class KrausChannel:
    """``rho -> sum_n K_n rho K_n^*`` with ``sum_n K_n^* K_n = I`` (within ``tol``)."""

    kraus: tuple
    tol: float = 1e-9

    def __post_init__(self):
        ks = tuple(as_matrix(k).copy() for k in self.kraus)
        if not ks:
            raise ValueError("a channel needs at least one Kraus operator")
        dim = ks[0].shape[0]
        if any(k.shape != (dim, dim) for k in ks):
            raise DimensionMismatch("Kraus operators have inconsistent shapes")
        for k in ks:
            k.setflags(write=False)
        object.__setattr__(self, "kraus", ks)
        res = self.completeness_residual()
        if res > self.tol:
            raise IncompleteKraus(f"completeness residual ||sum K^*K - I||_F = {res:.3e} > tol {self.tol:.3e}")

    @property
    def dim(self) -> int:
        return self.kraus[0].shape[0]

    def completeness_residual(self) -> float:
        s = sum(k.conj().T @ k for k in self.kraus)
        return float(np.linalg.norm(s - np.eye(self.dim)))

    def __call__(self, rho) -> np.ndarray:
        """Apply to any square matrix (no validation), e.g. matrix units."""
        m = np.asarray(rho, dtype=np.complex128)
        return sum(k @ m @ k.conj().T for k in self.kraus)

    def __len__(self):
        return len(self.kraus)


def _check_dims(ch: KrausChannel, rho: DensityMatrix):
    if rho.dim != ch.dim:
        raise DimensionMismatch(f"channel acts on dimension {ch.dim}, state has dimension {rho.dim}")


def apply(ch: KrausChannel, rho) -> DensityMatrix:
    rho = ensure_density(rho)
    _check_dims(ch, rho)
    return validate_density(ch(rho.data), tol=1e-9)


def post_measurement(ch: KrausChannel, rho, cutoff: float = 1e-12) -> list[tuple[float, DensityMatrix]]:
    """Outcome probabilities and normalized post-measurement states.

    Outcomes with probability below ``cutoff`` are omitted.
    """
    rho = ensure_density(rho)
    _check_dims(ch, rho)
    out = []
    for k in ch.kraus:
        m = k @ rho.data @ k.conj().T
        p = float(np.trace(m).real)
        if p < cutoff:
            continue
        out.append((p, validate_density(m / p, tol=1e-9)))
    return out


def _offdiag_max(k: np.ndarray) -> float:
    return float(np.max(np.abs(k - np.diag(np.diag(k)))))


def is_gio_representation(ch: KrausChannel, tol: float | None = None) -> bool:
    """Every given Kraus operator is diagonal (sufficient for GIO)."""
    tol = ch.tol if tol is None else tol
    return all(_offdiag_max(k) <= tol for k in ch.kraus)


def is_io_representation(ch: KrausChannel, tol: float | None = None) -> bool:
    """Every Kraus operator has at most one nonzero entry per column."""
    tol = ch.tol if tol is None else tol
    return all(np.all(np.sum(np.abs(k) > tol, axis=0) <= 1) for k in ch.kraus)


def _matrix_units(d: int):
    for i in range(d):
        for j in range(d):
            e = np.zeros((d, d), dtype=np.complex128)
            e[i, j] = 1.0
            yield i, j, e


def _dephase_matrix(m: np.ndarray) -> np.ndarray:
    return np.diag(np.diag(m))


def is_sio_representation(ch: KrausChannel, tol: float | None = None) -> bool:
    """``K Delta(X) K^* = Delta(K X K^*)`` for every Kraus operator and matrix unit X."""
    tol = ch.tol if tol is None else tol
    for k in ch.kraus:
        kh = k.conj().T
        for _, _, e in _matrix_units(ch.dim):
            lhs = k @ _dephase_matrix(e) @ kh
            rhs = _dephase_matrix(k @ e @ kh)
            if np.max(np.abs(lhs - rhs)) > tol:
                return False
    return True


def is_dio(ch: KrausChannel, tol: float | None = None) -> bool:
    """``Lambda(Delta(X)) = Delta(Lambda(X))`` on the matrix-unit basis."""
    tol = ch.tol if tol is None else tol
    for _, _, e in _matrix_units(ch.dim):
        if np.max(np.abs(ch(_dephase_matrix(e)) - _dephase_matrix(ch(e)))) > tol:
            return False
    return True


@dataclass
class AlphaGioResult:
    """Outcome of the sampling test for commutation with ``dephase_alpha``.

    Truthy when no sampled state separated the two sides. A ``False`` result
    carries the separating state and its trace-norm residual.
    """

    alpha: float
    trials: int
    certified: bool
    max_residual: float
    witness: np.ndarray | None = None

    def __bool__(self):
        return self.certified


def alpha_commutation_residual(ch: KrausChannel, rho, alpha: float) -> float:
    """``|| Delta_alpha(Lambda(rho)) - Lambda(Delta_alpha(rho)) ||_1``."""
    rho = ensure_density(rho)
    out, _ = dephase_alpha(apply(ch, rho), alpha)
    inp, _ = dephase_alpha(rho, alpha)
    return trace_norm(out.matrix() - ch(inp.matrix()))


def is_alpha_gio(ch: KrausChannel, alpha: float, trials: int = 100, seed: int = 0,
                 threshold: float = 1e-8) -> AlphaGioResult:
    """Randomized certificate that a GIO commutes with ``dephase_alpha``.

    A positive answer is evidence, not proof: ``dephase_alpha`` is nonlinear,
    so no finite basis check is conclusive.
    """
    from .harness.sampling import MIXED, PURE, make_rng, random_state

    alpha = dv.check_tsallis_alpha(alpha)
    if not is_gio_representation(ch):
        raise NotGio("alpha-GIO certification requires diagonal Kraus operators")
    worst = 0.0
    for t in range(trials):
        rng = make_rng(seed, t)
        rho = random_state(ch.dim, PURE if t % 2 else MIXED, rng)
        r = alpha_commutation_residual(ch, rho, alpha)
        worst = max(worst, r)
        if r > threshold:
            return AlphaGioResult(alpha, t + 1, False, worst, np.array(rho.data))
    return AlphaGioResult(alpha, trials, True, worst)


@dataclass
class ChannelClass:
    is_io: bool
    is_sio: bool
    is_dio: bool
    is_gio: bool
    alpha_gio: dict = field(default_factory=dict)

    def chain_consistent(self) -> bool:
        ok = (not self.is_gio or self.is_sio) and (not self.is_sio or self.is_dio)
        return ok and (not self.is_gio or self.is_io)


def classify(ch: KrausChannel, alphas=(), trials: int = 100, seed: int = 0) -> ChannelClass:
    gio = is_gio_representation(ch)
    cls = ChannelClass(
        is_io=is_io_representation(ch),
        is_sio=is_sio_representation(ch),
        is_dio=is_dio(ch),
        is_gio=gio,
    )
    if gio:
        for a in alphas:
            cls.alpha_gio[float(a)] = bool(is_alpha_gio(ch, a, trials, seed))
    return cls


def fig1_gio() -> KrausChannel:
    """Two diagonal Kraus operators diag(1/sqrt2, sqrt3/2), diag(1/sqrt2, 1/2)."""
    s2 = math.sqrt(2.0)
    return KrausChannel((np.diag([1 / s2, math.sqrt(3.0) / 2]), np.diag([1 / s2, 0.5])))


fig3_gio = fig1_gio


def fig2_io(b: float = 0.9) -> KrausChannel:
    """Qutrit IO pair with ``a = sqrt(1 - b**2)``."""
    b = float(b)
    if abs(b) > 1.0:
        raise ParamOutOfRange(f"|b| must be at most 1, got {b}")
    a = math.sqrt(1.0 - b * b)
    k1 = np.array([[0, 1, 0], [0, 0, 0], [0, 0, a]], dtype=np.complex128)
    k2 = np.array([[1, 0, 0], [0, 0, b], [0, 0, 0]], dtype=np.complex128)
    return KrausChannel((k1, k2))


def diag_unitary_mix(phases, weights) -> KrausChannel:
    """``sum_k w_k U_k rho U_k^*`` with ``U_k = diag(exp(i phases[k]))``."""
    phases = np.atleast_2d(np.asarray(phases, dtype=float))
    weights = np.asarray(weights, dtype=float).ravel()
    if phases.shape[0] != weights.size:
        raise ParamOutOfRange("need one weight per unitary")
    if np.any(weights < 0) or abs(weights.sum() - 1.0) > 1e-12:
        raise ParamOutOfRange("weights must form a probability vector")
    return KrausChannel(tuple(math.sqrt(w) * np.diag(np.exp(1j * ph)) for w, ph in zip(weights, phases)))


def make_example_channel(which: str, **kwargs) -> KrausChannel:
    which = which.upper()
    if which == "FIG1_GIO":
        return fig1_gio()
    if which == "FIG3_GIO":
        return fig3_gio()
    if which == "FIG2_IO":
        return fig2_io(kwargs.get("b", 0.9))
    if which == "DIAG_UNITARY_MIX":
        return diag_unitary_mix(kwargs["phases"], kwargs["weights"])
    raise ParamOutOfRange(f"unknown example channel {which!r}")
