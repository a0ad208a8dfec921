import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import pure, random_states
from qcoherence import divergences as dv
from qcoherence.coherence import dephase_alpha, normalization
from qcoherence.errors import AlphaOutOfRange, ParamOutOfRange
from qcoherence.harness.sampling import MIXED, make_rng, random_state

PSI = pure([math.sqrt(0.75), math.sqrt(0.25)])
ALPHAS = [0.2, 0.5, 0.8, 1.3, 1.7, 2.0]


def test_alpha_domains():
    for bad in (0.0, 1.0, -0.5, 2.5):
        with pytest.raises(AlphaOutOfRange):
            dv.check_tsallis_alpha(bad)
    assert dv.check_renyi_alpha(3.0) == 3.0
    with pytest.raises(AlphaOutOfRange):
        dv.check_renyi_alpha(1.0)
    with pytest.raises(ValueError):
        dv.check_alpha(0.5, "shannon")


def test_catalog_domain():
    for bad in (0.0, 1.0, 2.0):
        with pytest.raises(AlphaOutOfRange):
            dv.tsallis_f(bad)
    with pytest.raises(ParamOutOfRange):
        dv.CatalogFunction("sqrt")
    for f in (dv.neg_log(), dv.tsallis_f(0.5), dv.tsallis_f(1.5)):
        assert float(f(1.0)) == pytest.approx(0.0, abs=1e-15)
        x = np.array([0.3, 2.0])
        np.testing.assert_allclose(f.transpose(x), x * f(1 / x))
        assert float(f.transpose(0.0)) == 0.0


def test_von_neumann_examples():
    assert dv.von_neumann_entropy(PSI) == pytest.approx(0.0, abs=1e-12)
    assert dv.von_neumann_entropy(np.eye(2) / 2) == pytest.approx(math.log(2))
    assert dv.von_neumann_entropy(np.diag([0.75, 0.25])) == pytest.approx(0.562335, abs=1e-6)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_tsallis_and_renyi_entropy_examples(alpha):
    assert dv.tsallis_entropy(PSI, alpha) == pytest.approx(0.0, abs=1e-12)
    assert dv.renyi_entropy(PSI, alpha) == pytest.approx(0.0, abs=1e-12)
    for d in (2, 3, 5):
        assert dv.renyi_entropy(np.eye(d) / d, alpha) == pytest.approx(math.log(d))


def test_entropy_numbers():
    assert dv.tsallis_entropy(np.eye(2) / 2, 2.0) == pytest.approx(0.5)
    assert dv.renyi_entropy(np.diag([0.75, 0.25]), 2.0) == pytest.approx(math.log(1.6))
    assert math.log(1.6) == pytest.approx(0.470004, abs=1e-6)


@pytest.mark.parametrize("alpha", [0.3, 0.7, 1.5])
def test_tsallis_entropy_of_qutrit_example(alpha):
    rho = np.array([[1, 0, 1], [0, 2, 0], [1, 0, 1]]) / 4
    # spectrum (1/2, 1/2, 0)
    assert dv.tsallis_entropy(rho, alpha) == pytest.approx((2 * 0.5 ** alpha - 1) / (1 - alpha))


@pytest.mark.parametrize("alpha", ALPHAS)
def test_relative_entropies_vanish_on_equal_arguments(alpha):
    for rho in random_states(5, 3):
        assert dv.tsallis_relative_entropy(rho, rho, alpha) == pytest.approx(0.0, abs=1e-10)
        assert dv.renyi_relative_entropy(rho, rho, alpha) == pytest.approx(0.0, abs=1e-10)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_pure_state_against_alpha_dephased(alpha):
    sigma = dephase_alpha(PSI, alpha)[0].matrix()
    n = normalization(PSI, alpha)
    assert dv.tsallis_relative_entropy(PSI, sigma, alpha) == pytest.approx((n ** alpha - 1) / (alpha - 1), abs=1e-12)
    assert dv.renyi_relative_entropy(PSI, sigma, alpha) == pytest.approx(alpha / (alpha - 1) * math.log(n), abs=1e-12)


def test_support_violation_is_infinite():
    a, b = np.diag([1.0, 0.0]), np.diag([0.0, 1.0])
    assert dv.tsallis_relative_entropy(a, b, 1.5) == math.inf
    assert dv.renyi_relative_entropy(a, b, 1.5) == math.inf
    assert dv.relative_entropy(a, b) == math.inf
    # below 1 the orthogonal pair has Tr = 0
    assert dv.tsallis_relative_entropy(a, b, 0.5) == pytest.approx(2.0)
    assert dv.renyi_relative_entropy(a, b, 0.5) == math.inf


def test_renyi_commuting_example():
    value = dv.renyi_relative_entropy(np.eye(2) / 2, np.diag([0.75, 0.25]), 0.5)
    scalar = -2.0 * math.log((math.sqrt(0.75) + math.sqrt(0.25)) / math.sqrt(2))
    assert value == pytest.approx(scalar, abs=1e-14)
    assert value == pytest.approx(0.0693, abs=1e-4)


@pytest.mark.parametrize("f", [dv.neg_log(), dv.tsallis_f(0.4), dv.tsallis_f(1.6)])
def test_quasi_relative_entropy_zero_on_diagonal(f):
    for rho in random_states(5, 3):
        assert dv.quasi_relative_entropy(rho.data, rho.data, f) == pytest.approx(0.0, abs=1e-10)


def test_neg_log_on_diagonals_is_kl():
    lam, mu = np.array([0.6, 0.3, 0.1]), np.array([0.2, 0.5, 0.3])
    kl = float(np.sum(lam * np.log(lam / mu)))
    assert dv.quasi_relative_entropy(np.diag(lam), np.diag(mu), dv.neg_log()) == pytest.approx(kl)


@pytest.mark.parametrize("alpha", [0.3, 0.6, 1.4, 1.8])
def test_tsallis_f_matches_tsallis_relative_entropy(alpha):
    rng = make_rng(3, "tsallis-f", alpha)
    for _ in range(100):
        rho, sigma = random_state(3, MIXED, rng), random_state(3, MIXED, rng)
        got = dv.quasi_relative_entropy(rho.data, sigma.data, dv.tsallis_f(alpha))
        assert got == pytest.approx(dv.tsallis_relative_entropy(rho, sigma, alpha), abs=1e-10)


def test_relative_entropy_via_logs():
    rng = make_rng(5, "umegaki")
    for _ in range(20):
        rho, sigma = random_state(3, MIXED, rng), random_state(3, MIXED, rng)

        def logm(m):
            w, v = np.linalg.eigh(m)
            return (v * np.log(w)) @ v.conj().T

        ref = np.trace(rho.data @ (logm(rho.data) - logm(sigma.data))).real
        assert dv.relative_entropy(rho, sigma) == pytest.approx(ref, abs=1e-10)


def test_f_entropy_variant1_reductions():
    rng = make_rng(9, "f-entropy")
    for _ in range(100):
        rho = random_state(4, MIXED, rng)
        assert dv.f_entropy(rho, dv.neg_log()) == pytest.approx(dv.von_neumann_entropy(rho), abs=1e-12)
        for a in (0.5, 1.5):
            assert dv.f_entropy(rho, dv.tsallis_f(a)) == pytest.approx(dv.tsallis_entropy(rho, a), abs=1e-12)


@pytest.mark.parametrize("f", [dv.neg_log(), dv.tsallis_f(0.5), dv.tsallis_f(1.5)])
def test_f_entropy_of_pure_state(f):
    assert dv.f_entropy(PSI, f, 1) == pytest.approx(0.0, abs=1e-12)
    # variant 2 is f(1/d) - f(1/d)/d... evaluated at a single unit eigenvalue
    d = 2
    assert dv.f_entropy(PSI, f, 2) == pytest.approx(float(f(1 / d)) - float(f.transpose(d)) / d, abs=1e-12)


def test_f_entropy_bad_variant():
    with pytest.raises(ParamOutOfRange):
        dv.f_entropy(PSI, dv.neg_log(), 3)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 100_000), st.sampled_from(ALPHAS))
def test_relative_entropies_nonnegative(seed, alpha):
    rng = make_rng(seed, "nonneg")
    rho, sigma = random_state(3, MIXED, rng), random_state(3, MIXED, rng)
    assert dv.tsallis_relative_entropy(rho, sigma, alpha) >= -1e-12
    assert dv.renyi_relative_entropy(rho, sigma, alpha) >= -1e-12
