"""Continuity bounds in trace distance and their randomized checks.

``eps`` is always half the trace norm of the difference of the two states.
"""
from __future__ import annotations

import enum
import math

import numpy as np

from .. import divergences as dv
from ..coherence import cr1, ct_new, f_coherence
from ..errors import ParamOutOfRange
from ..linalg import trace_norm
from .checks import MARGIN, CheckReport
from .sampling import MIXED, PURE, make_rng, random_state


class ContinuityKind(str, enum.Enum):
    F_ENTROPY_1 = "f_entropy_1"
    F_ENTROPY_2 = "f_entropy_2"
    F_COHERENCE = "f_coherence"
    CT_PURE = "ct_pure"
    CR_PURE = "cr_pure"


def pure_modulus(eps: float, d: int, alpha: float) -> float:
    """``1 - (1-eps)**(1/alpha) - eps**(1/alpha) (d-1)**(1-1/alpha)``; negative for alpha > 1."""
    r = 1.0 / alpha
    return 1.0 - (1.0 - eps) ** r - eps ** r * (d - 1) ** (1.0 - r)


def f_entropy_modulus(eps: float, d: int, f: dv.CatalogFunction, variant: int = 1) -> float:
    """Continuity modulus of the f-entropy, written with the transpose ``x f(1/x)``
    so the endpoints ``eps = 0`` and ``eps = 1`` need no special casing."""
    ft = f.transpose
    if variant == 1:
        return float(-ft(1.0 - eps) - (d - 1) * ft(eps / (d - 1)))
    if variant == 2:
        return float(f(1.0 / d) - ft(d * (1.0 - eps)) / d - (d - 1) / d * ft(d * eps / (d - 1)))
    raise ParamOutOfRange(f"f-entropy variant must be 1 or 2, got {variant}")


def continuity_bound(kind, d: int, param, eps: float, variant: int = 1, clamp: bool = False) -> float:
    """Upper bound on ``|Q(rho) - Q(sigma)|`` for states at trace distance ``eps``.

    ``param`` is a :class:`CatalogFunction` for the f-kinds and alpha for the
    pure-state kinds. The expressions are evaluated exactly as written; they
    increase with ``eps`` only up to ``eps = (d-1)/d``; ``clamp=True`` evaluates
    them at ``min(eps, (d-1)/d)`` instead, which gives their monotone envelope.
    """
    kind = ContinuityKind(kind)
    if not (0.0 <= eps <= 1.0):
        raise ParamOutOfRange(f"eps must lie in [0, 1], got {eps}")
    if d < 2:
        raise ParamOutOfRange(f"d must be at least 2, got {d}")
    if eps == 0.0:
        return 0.0
    if clamp:
        eps = min(eps, (d - 1) / d)
    if kind is ContinuityKind.F_ENTROPY_1:
        return f_entropy_modulus(eps, d, param, 1)
    if kind is ContinuityKind.F_ENTROPY_2:
        return f_entropy_modulus(eps, d, param, 2)
    if kind is ContinuityKind.F_COHERENCE:
        return 2.0 * f_entropy_modulus(eps, d, param, variant)

    alpha = dv.check_tsallis_alpha(param)
    h = pure_modulus(eps, d, alpha)
    if kind is ContinuityKind.CT_PURE:
        if alpha < 1.0:
            return (d ** (1.0 - alpha) - (d ** (1.0 - 1.0 / alpha) + h) ** (-alpha)) / (1.0 - alpha)
        return (1.0 - (1.0 - h) ** (-alpha)) / (alpha - 1.0)
    if alpha < 1.0:
        return alpha / (1.0 - alpha) * math.log(d ** (1.0 - 1.0 / alpha) + h) + math.log(d)
    return alpha / (alpha - 1.0) * math.log(1.0 - h)


def _quantity(kind: ContinuityKind, param, variant: int):
    if kind is ContinuityKind.CT_PURE:
        return lambda r: ct_new(r, param)
    if kind is ContinuityKind.CR_PURE:
        return lambda r: cr1(r, param)
    if kind is ContinuityKind.F_COHERENCE:
        return lambda r: f_coherence(r, param, variant)
    raise ParamOutOfRange(f"no randomized check for {kind.value}")


def check_continuity(kind, trials: int, seed: int, d: int = 2, param=0.5, variant: int = 1,
                     tol: float = MARGIN, clamp: bool = False) -> CheckReport:
    """Draw ``trials`` random pairs and test the bound at their exact trace distance.

    Pure pairs for the pure-state kinds, Ginibre mixed pairs for f-coherence.
    """
    kind = ContinuityKind(kind)
    q = _quantity(kind, param, variant)
    purity = MIXED if kind is ContinuityKind.F_COHERENCE else PURE
    label = param if isinstance(param, dv.CatalogFunction) else f"alpha={param:g}"
    rep = CheckReport(f"continuity {kind.value} d={d} {label}" + (f" v{variant}" if purity == MIXED else "")
                      + (" clamped" if clamp else ""))
    for t in range(trials):
        rng = make_rng(seed, "continuity", kind.value, d, t)
        rho, sigma = random_state(d, purity, rng), random_state(d, purity, rng)
        eps = min(1.0, 0.5 * trace_norm(rho.data - sigma.data))
        diff = abs(q(rho) - q(sigma))
        bound = continuity_bound(kind, d, param, eps, variant, clamp)
        rep.trials += 1
        if diff > bound + tol:
            rep.add(f"trial#{t} eps={eps:.6f}", diff, bound, diff - bound)
    return rep


def bound_profile(kind, d: int, param, eps_grid, variant: int = 1) -> np.ndarray:
    return np.array([continuity_bound(kind, d, param, float(e), variant) for e in eps_grid])

