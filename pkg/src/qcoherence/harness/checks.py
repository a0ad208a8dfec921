"""Inequality checkers over channels and state samples."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .. import divergences as dv
from ..channels import KrausChannel, apply, is_io_representation, post_measurement
from ..coherence import MeasureId, coherence, ct1, dephase_alpha
from ..errors import NotIo
from ..linalg import ensure_density

MARGIN = 1e-9


@dataclass
class Violation:
    descriptor: str
    lhs: float
    rhs: float
    margin: float


@dataclass
class CheckReport:
    name: str
    trials: int = 0
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def add(self, descriptor: str, lhs: float, rhs: float, margin: float):
        self.violations.append(Violation(descriptor, float(lhs), float(rhs), float(margin)))

    def merge(self, other: "CheckReport") -> "CheckReport":
        self.trials += other.trials
        self.violations.extend(other.violations)
        return self

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{self.name}: {status} ({self.trials} trials, {len(self.violations)} violations)"
        if self.violations:
            worst = max(self.violations, key=lambda v: v.margin)
            line += f"; worst {worst.descriptor}: lhs={worst.lhs:.12g} rhs={worst.rhs:.12g} margin={worst.margin:.3e}"
        return line


def _measure(mid) -> MeasureId:
    return mid if isinstance(mid, MeasureId) else MeasureId(mid)


def check_monotonicity(mid: MeasureId, ch: KrausChannel, states, name: str | None = None,
                       tol: float = MARGIN) -> CheckReport:
    """Flags states with ``C(Lambda(rho)) > C(rho) + tol``."""
    mid = _measure(mid)
    rep = CheckReport(name or f"monotonicity {mid}")
    for i, rho in enumerate(states):
        rho = ensure_density(rho)
        before = coherence(rho, mid)
        after = coherence(apply(ch, rho), mid)
        rep.trials += 1
        if after > before + tol:
            rep.add(f"state#{i}", after, before, after - before)
    return rep


def ensemble_average(mid: MeasureId, ch: KrausChannel, rho) -> float:
    return sum(p * coherence(r, mid) for p, r in post_measurement(ch, rho))


def check_strong_monotonicity(mid: MeasureId, ch: KrausChannel, states, name: str | None = None,
                              tol: float = MARGIN) -> CheckReport:
    """Flags states with ``sum_n p_n C(rho_n) > C(rho) + tol``."""
    mid = _measure(mid)
    rep = CheckReport(name or f"strong monotonicity {mid}")
    for i, rho in enumerate(states):
        rho = ensure_density(rho)
        avg = ensemble_average(mid, ch, rho)
        c = coherence(rho, mid)
        rep.trials += 1
        if avg > c + tol:
            rep.add(f"state#{i}", avg, c, avg - c)
    return rep


def check_strong_equality(mid: MeasureId, ch: KrausChannel, states, name: str | None = None,
                          tol: float = MARGIN) -> CheckReport:
    """Flags states where ``sum_n p_n C(rho_n)`` and ``C(rho)`` differ by more than ``tol``."""
    mid = _measure(mid)
    rep = CheckReport(name or f"strong equality {mid}")
    for i, rho in enumerate(states):
        avg = ensemble_average(mid, ch, rho)
        c = coherence(rho, mid)
        rep.trials += 1
        if abs(avg - c) > tol:
            rep.add(f"state#{i}", avg, c, abs(avg - c))
    return rep


def modified_strong_sides(ch: KrausChannel, rho, alpha: float) -> tuple[float, float]:
    """``(sum_n p_n**alpha q_n**(1-alpha) CT1(rho_n), CT1(rho))``."""
    alpha = dv.check_tsallis_alpha(alpha)
    rho = ensure_density(rho)
    delta = dephase_alpha(rho, alpha)[0].matrix()
    lhs = 0.0
    for k in ch.kraus:
        m = k @ rho.data @ k.conj().T
        p = float(np.trace(m).real)
        if p < 1e-12:
            continue
        q = float(np.trace(k @ delta @ k.conj().T).real)
        if q <= 0.0:
            if alpha > 1.0:
                return np.inf, ct1(rho, alpha)
            continue
        lhs += p ** alpha * q ** (1.0 - alpha) * ct1(m / p, alpha)
    return lhs, ct1(rho, alpha)


def check_modified_strong_monotonicity_ct1(ch: KrausChannel, rho, alpha: float,
                                           name: str | None = None, tol: float = MARGIN) -> CheckReport:
    """Weighted strong monotonicity of CT1 under an IO; ``rho`` may be one state or a list."""
    if not is_io_representation(ch):
        raise NotIo("modified strong monotonicity is stated for incoherent operations")
    states = rho if isinstance(rho, (list, tuple)) else [rho]
    rep = CheckReport(name or f"modified strong monotonicity ct1[alpha={alpha:g}]")
    for i, r in enumerate(states):
        lhs, rhs = modified_strong_sides(ch, r, alpha)
        rep.trials += 1
        if lhs > rhs + tol:
            rep.add(f"state#{i}", lhs, rhs, lhs - rhs)
    return rep
