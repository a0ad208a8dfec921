import math

import numpy as np
import pytest

from qcoherence import divergences as dv
from qcoherence.errors import ParamOutOfRange
from qcoherence.harness.continuity import (
    ContinuityKind,
    bound_profile,
    check_continuity,
    continuity_bound,
    f_entropy_modulus,
    pure_modulus,
)

F_FAMILY = [dv.neg_log(), dv.tsallis_f(0.5), dv.tsallis_f(1.5)]


@pytest.mark.parametrize("kind", list(ContinuityKind))
def test_zero_distance(kind):
    param = dv.neg_log() if kind.value.startswith("f_") else 0.5
    assert continuity_bound(kind, 3, param, 0.0) == 0.0


def test_ct_pure_example_value():
    d, a, eps = 2, 0.5, 0.1
    h = 1 - (1 - eps) ** 2 - eps ** 2 * (d - 1) ** (1 - 2)
    expected = (d ** (1 - a) - (d ** (1 - 1 / a) + h) ** (-a)) / (1 - a)
    assert pure_modulus(eps, d, a) == pytest.approx(0.18)
    assert continuity_bound(ContinuityKind.CT_PURE, d, a, eps) == pytest.approx(expected, abs=1e-15)


def test_neg_log_coherence_bound_is_twice_entropy_modulus():
    for d in (2, 3, 4):
        for eps in (0.05, 0.3, 0.6):
            modulus = -(1 - eps) * math.log(1 - eps) - eps * math.log(eps / (d - 1))
            got = continuity_bound(ContinuityKind.F_COHERENCE, d, dv.neg_log(), eps)
            assert got == pytest.approx(2 * modulus, abs=1e-14)


@pytest.mark.parametrize("f", F_FAMILY)
def test_f_entropy_modulus_endpoints(f):
    assert f_entropy_modulus(0.0, 3, f, 1) == pytest.approx(0.0, abs=1e-15)
    assert f_entropy_modulus(1.0, 3, f, 2) == pytest.approx(float(f(1 / 3)) - 2 / 3 * float(f.transpose(1.5)))
    with pytest.raises(ParamOutOfRange):
        f_entropy_modulus(0.5, 3, f, 3)


def test_bound_domain_errors():
    with pytest.raises(ParamOutOfRange):
        continuity_bound(ContinuityKind.CT_PURE, 2, 0.5, 1.5)
    with pytest.raises(ParamOutOfRange):
        continuity_bound(ContinuityKind.CT_PURE, 1, 0.5, 0.5)
    with pytest.raises(ParamOutOfRange):
        check_continuity(ContinuityKind.F_ENTROPY_1, 1, 0)


@pytest.mark.parametrize("alpha", [0.3, 0.5, 1.5])
def test_pure_bounds_increase_up_to_turning_point(alpha):
    d = 3
    grid = np.linspace(0.0, (d - 1) / d, 60)
    for kind in (ContinuityKind.CT_PURE, ContinuityKind.CR_PURE):
        prof = bound_profile(kind, d, alpha, grid)
        assert np.all(np.diff(prof) >= -1e-12)
        assert np.all(prof >= -1e-15)


def test_pure_bounds_decrease_past_turning_point():
    # the formulas as written bend down beyond eps = (d-1)/d; this is why large-distance pairs can escape them
    d, a = 2, 0.5
    for kind in (ContinuityKind.CT_PURE, ContinuityKind.CR_PURE):
        b_turn = continuity_bound(kind, d, a, 0.5)
        assert continuity_bound(kind, d, a, 0.9) < b_turn
        assert continuity_bound(kind, d, a, 1.0) == pytest.approx(0.0, abs=1e-12)
        assert continuity_bound(kind, d, a, 0.9, clamp=True) == b_turn


def test_pure_qubit_bound_fails_only_beyond_turning_point():
    d = 2
    rep = check_continuity(ContinuityKind.CT_PURE, 500, 42, d, 0.5)
    assert rep.violations, "expected large-distance violations of the unclamped bound"
    for v in rep.violations:
        eps = float(v.descriptor.split("eps=")[1])
        assert eps > (d - 1) / d


@pytest.mark.parametrize("d", [2, 3, 4])
@pytest.mark.parametrize("alpha", [0.3, 0.5, 0.7, 1.3, 1.7])
def test_pure_bounds_hold_with_clamped_distance(d, alpha):
    for kind in (ContinuityKind.CT_PURE, ContinuityKind.CR_PURE):
        rep = check_continuity(kind, 500, 42, d, alpha, clamp=True)
        assert rep.passed, rep.summary()


@pytest.mark.parametrize("d", [2, 3, 4])
@pytest.mark.parametrize("f", F_FAMILY)
@pytest.mark.parametrize("variant", [1, 2])
def test_f_coherence_bound(d, f, variant):
    rep = check_continuity(ContinuityKind.F_COHERENCE, 200, 42, d, f, variant)
    assert rep.passed, rep.summary()


def test_identical_states_difference_zero():
    from qcoherence.coherence import ct_new
    from qcoherence.harness.sampling import PURE, make_rng, random_state
    rho = random_state(3, PURE, make_rng(0))
    assert abs(ct_new(rho, 0.5) - ct_new(rho, 0.5)) <= continuity_bound(ContinuityKind.CT_PURE, 3, 0.5, 0.0)
