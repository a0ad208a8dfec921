"""Named verification suites shared by the CLI and the acceptance tests.

Every suite takes ``(trials, dim, seed)`` and returns a :class:`SuiteResult`.
Suites marked ``expect_violation`` succeed when they exhibit a counterexample.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .. import divergences as dv
from ..channels import KrausChannel, fig1_gio, fig2_io, is_alpha_gio
from ..coherence import (
    Measure,
    MeasureId,
    coherence,
    cr1,
    cr_new,
    ct1,
    ct2,
    ct_new,
    dephase,
    dephase_alpha,
    improved_c1,
    improved_c2,
    normalization,
)
from ..linalg import direct_sum, trace_norm, validate_density
from .checks import (
    MARGIN,
    CheckReport,
    check_modified_strong_monotonicity_ct1,
    check_monotonicity,
    check_strong_equality,
    check_strong_monotonicity,
)
from .continuity import ContinuityKind, check_continuity
from .figures import QUOTED_ALPHA, fig1_state, fig2_state
from .oracle import closest_incoherent_oracle
from .sampling import (
    MIXED,
    PURE,
    make_rng,
    random_diag_unitary_mix,
    random_diagonal_state,
    random_diagonal_unitary,
    random_gio,
    random_io,
    random_state,
)

ALPHA_GRID = (0.2, 0.5, 0.8, 1.3, 1.7, 2.0)
ORACLE_ALPHAS = (0.3, 0.5, 0.7, 1.3, 1.7)
CONTINUITY_ALPHAS = (0.3, 0.5, 0.7, 1.3, 1.7)


@dataclass
class SuiteResult:
    name: str
    reports: list = field(default_factory=list)
    expect_violation: bool = False

    @property
    def ok(self) -> bool:
        if self.expect_violation:
            return any(not r.passed for r in self.reports)
        return all(r.passed for r in self.reports)

    def lines(self) -> list[str]:
        head = f"suite {self.name}: {'PASS' if self.ok else 'FAIL'}"
        if self.expect_violation:
            head += " (expects a violation)"
        return [head] + ["  " + r.summary() for r in self.reports]


def measure_catalog(alphas=ALPHA_GRID) -> list[MeasureId]:
    """Every implemented measure at every admissible alpha of ``alphas``."""
    out = [MeasureId(Measure.C_REL), MeasureId(Measure.C_HS)]
    for v in (1, 2):
        out.append(MeasureId(Measure.C_F, f=dv.neg_log(), variant=v))
        out.extend(MeasureId(Measure.C_F, f=dv.tsallis_f(a), variant=v) for a in alphas if 0 < a < 2)
    for tag in (Measure.CR1, Measure.CR2, Measure.CR3, Measure.CT1, Measure.CT2, Measure.CT_NEW,
                Measure.CR_NEW, Measure.C1_IMPROVED, Measure.C2_IMPROVED):
        out.extend(MeasureId(tag, alpha=a) for a in alphas)
    return out


def _state(seed, name, t, dim, purity=None):
    rng = make_rng(seed, name, dim, t)
    if purity is None:
        purity = PURE if t % 2 else MIXED
    return random_state(dim, purity, rng)


def positivity(trials: int, dim: int, seed: int) -> SuiteResult:
    rep = CheckReport(f"positivity d={dim}")
    mids = measure_catalog()
    for t in range(trials):
        rho = _state(seed, "positivity", t, dim)
        for mid in mids:
            v = coherence(rho, mid)
            rep.trials += 1
            if not v >= -MARGIN:
                rep.add(f"state#{t} {mid}", v, 0.0, -v)
    return SuiteResult("positivity", [rep])


def faithfulness(trials: int, dim: int, seed: int) -> SuiteResult:
    diag = CheckReport(f"vanishing on diagonal states d={dim}")
    coh = CheckReport(f"strictly positive on coherent states d={dim}")
    mids = measure_catalog()
    for t in range(trials):
        rng = make_rng(seed, "faithfulness", dim, t)
        delta = random_diagonal_state(dim, rng)
        rho = random_state(dim, MIXED, rng)
        coherent = trace_norm(rho.data - dephase(rho).matrix()) > 1e-6
        for mid in mids:
            v = coherence(delta, mid)
            diag.trials += 1
            if not (-MARGIN <= v <= 1e-8):
                diag.add(f"diag#{t} {mid}", v, 1e-8, abs(v))
            if coherent:
                w = coherence(rho, mid)
                coh.trials += 1
                if not w > 1e-8:
                    coh.add(f"state#{t} {mid}", w, 1e-8, 1e-8 - w)
    return SuiteResult("faithfulness", [diag, coh])


def comparison(trials: int, dim: int, seed: int, alphas=(0.2, 0.5, 0.8, 1.3, 1.7)) -> SuiteResult:
    """CT_NEW >= CT1 for alpha < 1 and CT_NEW <= CT1 for 1 < alpha < 2, margin 1e-10."""
    rep = CheckReport(f"ct_new vs ct1 ordering d={dim}")
    for t in range(trials):
        rho = _state(seed, "comparison", t, dim)
        for a in alphas:
            new, old = ct_new(rho, a), ct1(rho, a)
            rep.trials += 1
            if a < 1 and new < old - 1e-10:
                rep.add(f"state#{t} alpha={a}", new, old, old - new)
            if a > 1 and new > old + 1e-10:
                rep.add(f"state#{t} alpha={a}", new, old, new - old)
    return SuiteResult("comparison", [rep])


def identities(trials: int, dim: int, seed: int, alphas=ALPHA_GRID) -> SuiteResult:
    """CR_NEW = CR1 = S_R(rho || Delta_alpha rho) and CT_NEW = CT1 Tr(rho^a) / N^a."""
    ren = CheckReport(f"renyi three-path identity d={dim}")
    ts = CheckReport(f"tsallis rescaling identity d={dim}")
    for t in range(trials):
        rho = _state(seed, "identities", t, dim)
        for a in alphas:
            delta = dephase_alpha(rho, a)[0].matrix()
            paths = (cr_new(rho, a), cr1(rho, a), dv.renyi_relative_entropy(rho, delta, a))
            spread = max(paths) - min(paths)
            ren.trials += 1
            if spread > 1e-9:
                ren.add(f"state#{t} alpha={a}", max(paths), min(paths), spread)
            rhs = ct1(rho, a) * dv.power_trace(rho, a) / normalization(rho, a) ** a
            lhs = ct_new(rho, a)
            ts.trials += 1
            if abs(lhs - rhs) > 1e-9:
                ts.add(f"state#{t} alpha={a}", lhs, rhs, abs(lhs - rhs))
    return SuiteResult("identity", [ren, ts])


def invariance(trials: int, dim: int, seed: int, alphas=ALPHA_GRID) -> SuiteResult:
    """Diagonal-unitary invariance, monotonicity under certified alpha-GIO,
    and strong-monotonicity equality for mixtures of diagonal unitaries."""
    inv = CheckReport(f"ct_new diagonal-unitary invariance d={dim}")
    mono = CheckReport(f"ct_new monotone under certified alpha-GIO d={dim}")
    eq = CheckReport(f"ct_new strong equality under diagonal-unitary mixtures d={dim}")
    certified = 0
    for t in range(trials):
        rng = make_rng(seed, "invariance", dim, t)
        rho = random_state(dim, PURE if t % 2 else MIXED, rng)
        u = random_diagonal_unitary(dim, rng)
        moved = validate_density(u @ rho.data @ u.conj().T)
        a = alphas[t % len(alphas)]
        before, after = ct_new(rho, a), ct_new(moved, a)
        inv.trials += 1
        if abs(before - after) > 1e-9:
            inv.add(f"state#{t} alpha={a}", after, before, abs(after - before))

        if t % 3 == 0:
            ch = KrausChannel((u,))
        elif t % 3 == 1:
            ch = random_gio(dim, int(rng.integers(2, 4)), rng)
        else:
            ch = random_diag_unitary_mix(dim, int(rng.integers(2, 4)), rng)
        if is_alpha_gio(ch, a, trials=20, seed=seed + t):
            certified += 1
            mono.merge(check_monotonicity(MeasureId(Measure.CT_NEW, alpha=a), ch, [rho, moved]))

        mix = random_diag_unitary_mix(dim, int(rng.integers(1, 5)), rng)
        eq.merge(check_strong_equality(MeasureId(Measure.CT_NEW, alpha=a), mix, [rho]))
    mono.name += f" ({certified} certified channels)"
    return SuiteResult("invariance", [inv, mono, eq])


def mono_gio(trials: int, dim: int, seed: int, alphas=(0.05, 0.1, 0.2, 0.3), states_per_channel: int = 4) -> SuiteResult:
    """Search for a GIO that increases CT_NEW; the quoted qubit setup is included first.

    Each trial draws a two-Kraus GIO and several pure inputs: in sampling,
    increases only show up for pure inputs at small alpha.
    """
    fig1 = CheckReport("fig1 setup")
    fig1.merge(check_monotonicity(MeasureId(Measure.CT_NEW, alpha=QUOTED_ALPHA["FIG1"]), fig1_gio(),
                                  [fig1_state()]))
    search = CheckReport(f"random GIO search d={dim}")
    for t in range(trials):
        rng = make_rng(seed, "mono-gio", dim, t)
        ch = random_gio(dim, 2, rng)
        states = [random_state(dim, PURE, rng) for _ in range(states_per_channel)]
        for a in alphas:
            r = check_monotonicity(MeasureId(Measure.CT_NEW, alpha=a), ch, states)
            for v in r.violations:
                v.descriptor = f"trial#{t} {v.descriptor} alpha={a}"
            search.merge(r)
    return SuiteResult("mono-gio", [fig1, search], expect_violation=True)


def strong_mono(trials: int, dim: int, seed: int) -> SuiteResult:
    """Strong-monotonicity counterexamples: the qutrit IO pair and the qubit GIO."""
    io_rep = check_strong_monotonicity(MeasureId(Measure.CT_NEW, alpha=QUOTED_ALPHA["FIG2"]), fig2_io(0.9),
                                       [fig2_state()], name="IO pair b=0.9")
    gio_rep = check_strong_monotonicity(MeasureId(Measure.CT_NEW, alpha=QUOTED_ALPHA["FIG3"]), fig1_gio(),
                                        [fig1_state()], name="qubit GIO")
    search = CheckReport(f"random GIO search d={dim}")
    for t in range(trials):
        rng = make_rng(seed, "strong-mono", dim, t)
        ch = random_gio(dim, int(rng.integers(2, 4)), rng)
        rho = random_state(dim, PURE, rng)
        search.merge(check_strong_monotonicity(MeasureId(Measure.CT_NEW, alpha=0.2), ch, [rho]))
    return SuiteResult("strong-mono", [io_rep, gio_rep, search], expect_violation=True)


def modified_strong(trials: int, dim: int, seed: int, alphas=(0.3, 0.7, 1.3, 1.7, 2.0)) -> SuiteResult:
    rep = CheckReport(f"ct1 weighted strong monotonicity under IO d={dim}")
    for t in range(trials):
        rng = make_rng(seed, "modified-strong", dim, t)
        ch = random_io(dim, rng)
        rho = random_state(dim, PURE if t % 2 else MIXED, rng)
        for a in alphas:
            rep.merge(check_modified_strong_monotonicity_ct1(ch, rho, a))
    return SuiteResult("modified-strong", [rep])


def additivity(trials: int, dim: int, seed: int, alphas=ALPHA_GRID) -> SuiteResult:
    """p**alpha-weighted additivity of CT2; plain additivity of the improved measures."""
    reps = {name: CheckReport(f"{name} direct sums d={dim}+{dim}") for name in ("ct2", "c1_improved", "c2_improved")}
    for t in range(trials):
        rng = make_rng(seed, "additivity", dim, t)
        r1 = random_state(dim, PURE if t % 3 == 0 else MIXED, rng)
        r2 = random_state(dim, MIXED, rng)
        p1 = float(rng.uniform(0.05, 0.95))
        p2 = 1.0 - p1
        joint = validate_density(direct_sum(p1, r1.data, r2.data))
        for a in alphas:
            cases = (
                ("ct2", ct2(joint, a), p1 ** a * ct2(r1, a) + p2 ** a * ct2(r2, a)),
                ("c1_improved", improved_c1(joint, a), p1 * improved_c1(r1, a) + p2 * improved_c1(r2, a)),
                ("c2_improved", improved_c2(joint, a), p1 * improved_c2(r1, a) + p2 * improved_c2(r2, a)),
            )
            for name, lhs, rhs in cases:
                reps[name].trials += 1
                if abs(lhs - rhs) > 1e-9:
                    reps[name].add(f"trial#{t} alpha={a}", lhs, rhs, abs(lhs - rhs))
    return SuiteResult("additivity", list(reps.values()))


def continuity(trials: int, dim: int, seed: int, alphas=CONTINUITY_ALPHAS) -> SuiteResult:
    reps = []
    for a in alphas:
        reps.append(check_continuity(ContinuityKind.CT_PURE, trials, seed, dim, a))
        reps.append(check_continuity(ContinuityKind.CR_PURE, trials, seed, dim, a))
    for f in (dv.neg_log(), dv.tsallis_f(0.5), dv.tsallis_f(1.5)):
        for v in (1, 2):
            reps.append(check_continuity(ContinuityKind.F_COHERENCE, trials, seed, dim, f, v))
    return SuiteResult("continuity", reps)


def oracle(trials: int, dim: int, seed: int, alphas=ORACLE_ALPHAS, resolution: float = 1e-3) -> SuiteResult:
    """Brute-force minimizer against the closed-form closest state and divergence."""
    reps = {fam: CheckReport(f"oracle {fam} d={dim}") for fam in (dv.TSALLIS, dv.RENYI)}
    for t in range(trials):
        rho = _state(seed, "oracle", t, dim, MIXED)
        for a in alphas:
            closed_state, _ = dephase_alpha(rho, a)
            for fam, closed_value in ((dv.TSALLIS, ct1(rho, a)), (dv.RENYI, cr1(rho, a))):
                best, value = closest_incoherent_oracle(rho, a, fam, resolution, seed=seed + t)
                dist = float(np.sum(np.abs(best.probs - closed_state.probs)))
                rep = reps[fam]
                rep.trials += 1
                if dist > 2 * resolution:
                    rep.add(f"state#{t} alpha={a} distance", dist, 2 * resolution, dist - 2 * resolution)
                if not abs(value - closed_value) <= 1e-5:
                    rep.add(f"state#{t} alpha={a} value", value, closed_value, abs(value - closed_value))
    return SuiteResult("oracle", list(reps.values()))


SUITES = {
    "positivity": positivity,
    "faithfulness": faithfulness,
    "comparison": comparison,
    "identity": identities,
    "invariance": invariance,
    "mono-gio": mono_gio,
    "strong-mono": strong_mono,
    "modified-strong": modified_strong,
    "additivity": additivity,
    "continuity": continuity,
    "oracle": oracle,
}


def run_suite(name: str, trials: int, dim: int, seed: int) -> SuiteResult:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return fn(trials, dim, seed)


