"""Seeded random states and channels.

All randomness flows through Philox generators keyed by ``(seed, *stream)``,
so each trial owns an independent substream and results do not depend on
the order in which trials run.
"""
from __future__ import annotations

import zlib
from dataclasses import dataclass

import numpy as np

from ..channels import KrausChannel
from ..linalg import DensityMatrix, validate_density

PURE = "pure"
MIXED = "mixed"


def make_rng(seed: int, *stream) -> np.random.Generator:
    """Philox generator for ``seed`` and an optional substream path.

    String stream components are hashed with CRC32 so the mapping is stable
    across platforms and interpreter runs.
    """
    key = [int(seed) & 0xFFFFFFFFFFFFFFFF]
    for s in stream:
        key.append(zlib.crc32(s.encode()) if isinstance(s, str) else int(s))
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(key)))


@dataclass(frozen=True)
class RngConfig:
    seed: int = 42
    algorithm: str = "philox"

    def stream(self, *path) -> np.random.Generator:
        return make_rng(self.seed, *path)


def _complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_pure_vector(dim: int, rng: np.random.Generator) -> np.ndarray:
    v = _complex_gaussian(rng, dim)
    return v / np.linalg.norm(v)


def random_state(dim: int, purity: str, rng: np.random.Generator) -> DensityMatrix:
    """Haar pure state or Ginibre (Hilbert-Schmidt) mixed state."""
    if dim < 2:
        raise ValueError("dim must be at least 2")
    if purity == PURE:
        v = random_pure_vector(dim, rng)
        return validate_density(np.outer(v, v.conj()))
    if purity == MIXED:
        g = _complex_gaussian(rng, (dim, dim))
        m = g @ g.conj().T
        return validate_density(m / np.trace(m).real)
    raise ValueError(f"purity must be {PURE!r} or {MIXED!r}")


def random_diagonal_state(dim: int, rng: np.random.Generator) -> DensityMatrix:
    p = rng.dirichlet(np.ones(dim))
    return validate_density(np.diag(p))


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar unitary via QR with the phase correction of Mezzadri."""
    q, r = np.linalg.qr(_complex_gaussian(rng, (dim, dim)))
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_isometry(rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
    q, r = np.linalg.qr(_complex_gaussian(rng, (rows, cols)))
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_diagonal_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    return np.diag(np.exp(1j * rng.uniform(0, 2 * np.pi, dim)))


def random_gio(dim: int, n_kraus: int, rng: np.random.Generator) -> KrausChannel:
    """Diagonal Kraus operators; for each basis index the column
    ``(K_1[j,j], ..., K_n[j,j])`` is a uniform point on the complex unit sphere."""
    if n_kraus < 1:
        raise ValueError("n_kraus must be at least 1")
    z = _complex_gaussian(rng, (dim, n_kraus))
    z /= np.linalg.norm(z, axis=1, keepdims=True)
    return KrausChannel(tuple(np.diag(z[:, n]) for n in range(n_kraus)))


def random_diag_unitary_mix(dim: int, n_unitaries: int, rng: np.random.Generator) -> KrausChannel:
    w = rng.dirichlet(np.ones(n_unitaries))
    return KrausChannel(tuple(np.sqrt(wk) * random_diagonal_unitary(dim, rng) for wk in w))


def random_io(dim: int, rng: np.random.Generator, max_extra: int = 1) -> KrausChannel:
    """Random incoherent operation in block measure-and-prepare form.

    The basis is split into random blocks. Block ``b`` gets an isometry
    ``V_b`` with ``m_b >= |b|`` rows; Kraus operator ``n`` sends the whole
    block onto one basis row with amplitudes from row ``n`` of ``V_b``, and
    distinct blocks land on distinct rows. Every column then has a single
    nonzero and ``sum_n K_n^* K_n = sum_b V_b^* V_b = I``. Blocks of size one
    give diagonal-times-permutation (SIO) pieces; larger blocks are IO but
    not SIO.
    """
    perm = rng.permutation(dim)
    n_cuts = int(rng.integers(0, dim))
    cuts = np.sort(rng.choice(np.arange(1, dim), size=n_cuts, replace=False)) if n_cuts else []
    blocks = np.split(perm, cuts)
    isos = []
    for blk in blocks:
        rows = len(blk) + int(rng.integers(0, max_extra + 1))
        isos.append((blk, random_isometry(rows, len(blk), rng)))
    n_kraus = max(v.shape[0] for _, v in isos)
    kraus = []
    for n in range(n_kraus):
        k = np.zeros((dim, dim), dtype=np.complex128)
        targets = rng.permutation(dim)
        for b, (blk, v) in enumerate(isos):
            if n < v.shape[0]:
                k[targets[b], blk] = v[n, :]
        kraus.append(k)
    return KrausChannel(tuple(kraus))
