import numpy as np
import pytest

from qcoherence.harness.sampling import MIXED, PURE, make_rng, random_state


@pytest.fixture
def rng():
    return make_rng(1234, "tests")


def random_states(n, dim, seed=7, purity=None):
    rng = make_rng(seed, "fixture-states", dim)
    return [random_state(dim, purity or (PURE if i % 2 else MIXED), rng) for i in range(n)]


def pure(vec):
    v = np.asarray(vec, dtype=np.complex128)
    v = v / np.linalg.norm(v)
    return np.outer(v, v.conj())


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
