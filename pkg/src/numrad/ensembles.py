"""Seeded random matrix ensembles.

Every matrix is drawn from its own Philox4x64-10 stream (numpy's ``Philox``
bit generator). The 128-bit key is ``seed + (stream_id << 64)``, where
``stream_id`` packs the ensemble kind, the dimension, the sample index and
the role of the matrix (A, B, X or Y). Blocks are generated at counters
1, 2, 3, ... (numpy advances the counter before each block) and consumed
word by word. A stream can therefore be regenerated on its own, in any
order, and the same spec always yields the same bits.

Raw 64-bit words become uniforms on (0, 1) as ((x >> 11) + 0.5) / 2^53.
Gaussians come from the Box-Muller transform, and a standard complex
Gaussian is (g0 + i g1) / sqrt(2).
"""

import math
from dataclasses import dataclass

import numpy as np

KINDS = ("gaussian", "hermitian", "skew-hermitian", "nilpotent-jordan", "normal-random", "shift")
ROLES = ("A", "B", "X", "Y")
_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class EnsembleSpec:
    kind: str
    dims: tuple  # inclusive (lo, hi)
    count: int
    seed: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown ensemble kind {self.kind!r}; choose from {', '.join(KINDS)}")
        lo, hi = self.dims
        if not 1 <= lo <= hi:
            raise ValueError(f"bad dimension range {lo}..{hi}")
        if self.count < 0:
            raise ValueError("count must be nonnegative")
        if not 0 <= self.seed <= _MASK64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    def __iter__(self):
        """Yield ``(dim, index, A)`` in (dim, index) order."""
        lo, hi = self.dims
        for n in range(lo, hi + 1):
            for i in range(self.count):
                yield n, i, sample(self.kind, n, i, self.seed)


def stream_id(kind, dim, index, role="A"):
    k = KINDS.index(kind)
    r = ROLES.index(role)
    if not (0 <= dim < 1 << 16 and 0 <= index < 1 << 32):
        raise ValueError("dimension or index out of range")
    return (k << 56) | (r << 48) | (dim << 32) | index


class Stream:
    """Uniform and Gaussian variates from one Philox stream."""

    def __init__(self, seed, sid):
        self._bits = np.random.Philox(key=(seed & _MASK64) | (sid << 64))

    def uniform(self, size):
        x = self._bits.random_raw(size)
        return ((x >> np.uint64(11)).astype(np.float64) + 0.5) * 2.0**-53

    def normal(self, size):
        m = (size + 1) // 2
        u1, u2 = self.uniform(m), self.uniform(m)
        r = np.sqrt(-2.0 * np.log(u1))
        z = np.empty(2 * m)
        z[0::2] = r * np.cos(2.0 * np.pi * u2)
        z[1::2] = r * np.sin(2.0 * np.pi * u2)
        return z[:size]

    def complex_normal(self, shape):
        size = int(np.prod(shape))
        z = self.normal(2 * size)
        return ((z[0::2] + 1j * z[1::2]) / math.sqrt(2.0)).reshape(shape)

    def unitary(self, n):
        """Product of random complex Givens rotations over every index pair, twice."""
        U = np.eye(n, dtype=np.complex128)
        pairs = [(p, q) for p in range(n) for q in range(p + 1, n)] * 2
        if not pairs:
            return U * np.exp(2j * np.pi * self.uniform(1)[0])
        angles = self.uniform(3 * len(pairs)).reshape(-1, 3)
        for (p, q), (a, b, c) in zip(pairs, angles):
            cs, sn = math.cos(0.5 * math.pi * a), math.sin(0.5 * math.pi * a)
            e1, e2 = np.exp(2j * np.pi * b), np.exp(2j * np.pi * c)
            rp, rq = U[p].copy(), U[q].copy()
            U[p] = cs * e1 * rp - sn * np.conj(e2) * rq
            U[q] = sn * e2 * rp + cs * np.conj(e1) * rq
        return U


def jordan_shift(n):
    return np.diag(np.ones(n - 1, dtype=np.complex128), 1)


def _draw(kind, n, st):
    if kind == "gaussian":
        return st.complex_normal((n, n))
    if kind == "hermitian":
        G = st.complex_normal((n, n))
        return 0.5 * (G + G.conj().T)
    if kind == "skew-hermitian":
        G = st.complex_normal((n, n))
        return 0.5 * (G - G.conj().T)
    if kind == "nilpotent-jordan":
        T = np.triu(st.complex_normal((n, n)), 1)
        U = st.unitary(n)
        return U @ T @ U.conj().T
    if kind == "normal-random":
        D = st.complex_normal((n,))
        U = st.unitary(n)
        return (U * D) @ U.conj().T
    phase, scale = st.uniform(2)
    U = st.unitary(n)
    return np.exp(2j * np.pi * phase) * (0.5 + 2.0 * scale) * (U @ jordan_shift(n) @ U.conj().T)


def sample(kind, n, index, seed, role="A"):
    """One matrix of the ensemble; depends only on its arguments."""
    if kind not in KINDS:
        raise ValueError(f"unknown ensemble kind {kind!r}")
    st = Stream(seed, stream_id(kind, n, index, role))
    return np.ascontiguousarray(_draw(kind, n, st))


def companion(kind, n, index, seed, role):
    """A complex Gaussian partner matrix (B, X or Y) tied to one ensemble sample."""
    st = Stream(seed, stream_id(kind, n, index, role))
    return st.complex_normal((n, n))
