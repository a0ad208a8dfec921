import math

import numpy as np
import pytest

from conftest import pure, random_states
from qcoherence.channels import KrausChannel, diag_unitary_mix, fig1_gio, fig2_io, fig3_gio
from qcoherence.coherence import Measure, MeasureId
from qcoherence.errors import NotIo
from qcoherence.harness.checks import (
    CheckReport,
    check_modified_strong_monotonicity_ct1,
    check_monotonicity,
    check_strong_equality,
    check_strong_monotonicity,
    modified_strong_sides,
)
from qcoherence.harness.sampling import make_rng, random_diag_unitary_mix, random_io

PSI34 = pure([math.sqrt(0.75), math.sqrt(0.25)])
RHO3 = np.array([[1, 0, 1], [0, 2, 0], [1, 0, 1]]) / 4


def test_report_summary():
    rep = CheckReport("demo")
    rep.trials = 2
    assert rep.passed and "PASS" in rep.summary()
    rep.add("x", 1.0, 0.5, 0.5)
    assert not rep.passed and "margin=5.000e-01" in rep.summary()


def test_fig1_setup_is_not_a_violation():
    # the output state has CT ~ 0.2511 at alpha = 0.2, below the input's 0.4153
    rep = check_monotonicity(MeasureId(Measure.CT_NEW, alpha=0.2), fig1_gio(), [PSI34])
    assert rep.passed


def test_fig3_strong_violation():
    rep = check_strong_monotonicity(MeasureId(Measure.CT_NEW, alpha=0.20303), fig3_gio(), [PSI34])
    assert not rep.passed
    v = rep.violations[0]
    assert v.rhs < 0.42 < v.lhs


def test_fig2_strong_violation():
    rep = check_strong_monotonicity(MeasureId(Measure.CT_NEW, alpha=0.21101), fig2_io(0.9), [RHO3])
    assert not rep.passed
    v = rep.violations[0]
    assert v.rhs < 0.35 < v.lhs


def test_diagonal_unitary_no_violation():
    u = np.diag(np.exp(1j * np.array([0.4, 2.2, -0.9])))
    for a in (0.2, 0.8, 1.5):
        mid = MeasureId(Measure.CT_NEW, alpha=a)
        rep = check_monotonicity(mid, KrausChannel((u,)), random_states(20, 3))
        assert rep.passed
        assert check_strong_equality(mid, KrausChannel((u,)), random_states(20, 3)).passed


def test_relative_entropy_coherence_monotone_under_io():
    rng = make_rng(4, "c_rel-io")
    rep = CheckReport("c_rel io")
    for i, rho in enumerate(random_states(200, 3, seed=4)):
        rep.merge(check_monotonicity(MeasureId(Measure.C_REL), random_io(3, rng), [rho]))
        rep.merge(check_strong_monotonicity(MeasureId(Measure.C_REL), random_io(3, rng), [rho]))
    assert rep.passed, rep.summary()


def test_strong_equality_under_mixtures():
    rng = make_rng(6, "mix")
    for rho in random_states(20, 3, seed=6):
        ch = random_diag_unitary_mix(3, 3, rng)
        assert check_strong_equality(MeasureId(Measure.CT_NEW, alpha=0.3), ch, [rho]).passed


def test_modified_strong_incoherent_state():
    delta = np.diag([0.5, 0.3, 0.2])
    lhs, rhs = modified_strong_sides(fig2_io(0.9), delta, 0.4)
    assert lhs == pytest.approx(0.0, abs=1e-12) and rhs == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("alpha", [0.3, 0.5, 0.7, 0.9, 1.1, 1.3, 1.5, 1.7, 1.9])
def test_modified_strong_on_fig2_setup(alpha):
    assert check_modified_strong_monotonicity_ct1(fig2_io(0.9), RHO3, alpha).passed


def test_modified_strong_random_qubits():
    rng = make_rng(8, "ms")
    for t, rho in enumerate(random_states(200, 2, seed=8)):
        a = (0.3, 0.6, 1.4, 1.8)[t % 4]
        assert check_modified_strong_monotonicity_ct1(random_io(2, rng), rho, a).passed


def test_modified_strong_requires_io():
    h = np.array([[1, 1], [1, -1]]) / math.sqrt(2)
    with pytest.raises(NotIo):
        check_modified_strong_monotonicity_ct1(KrausChannel((h,)), PSI34, 0.5)


def test_modified_strong_accepts_lists():
    rep = check_modified_strong_monotonicity_ct1(diag_unitary_mix([[0, 1], [1, 0]], [0.5, 0.5]),
                                                 [PSI34, np.eye(2) / 2], 0.5)
    assert rep.trials == 2
