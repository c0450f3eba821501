"""Finite short-time Fourier transforms as N x N matrices.

Rows are time indices ``n``, columns are frequency bins ``l``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .spectral import as_signal, dft
from .window import WindowSpec

KINDS = ("stft", "modified_stft", "sst", "itvps")


@dataclass(frozen=True)
class TFMatrix:
    entries: np.ndarray
    kind: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}; expected one of {KINDS}")
        e = self.entries
        if e.ndim != 2 or e.shape[0] != e.shape[1]:
            raise ValueError(f"TF matrix must be N x N, got shape {e.shape}")
        e.setflags(write=False)

    @property
    def N(self) -> int:
        return self.entries.shape[0]

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.entries, dtype=dtype)


def _check(x, w: WindowSpec) -> np.ndarray:
    x = as_signal(x)
    if x.size != w.N:
        raise ValueError(f"signal length {x.size} does not match window length {w.N}")
    return x


def _shifted_windows(g: np.ndarray) -> np.ndarray:
    """``G[n, k] = conj(g(k - n))``."""
    N = g.size
    idx = (np.arange(N)[None, :] - np.arange(N)[:, None]) % N
    return g.conj()[idx]


def stft(x, w: WindowSpec) -> TFMatrix:
    """``V[k, l] = sum_n x(n) conj(g(n - k)) exp(-2 pi i l n / N)``."""
    x = _check(x, w)
    return TFMatrix(dft(x[None, :] * _shifted_windows(w.g), axis=1), "stft")


def _phase(N: int) -> np.ndarray:
    ln = np.outer(np.arange(N), np.arange(N)) % N
    return np.exp(2j * np.pi * ln / N)


def modified_stft(x, w: WindowSpec) -> TFMatrix:
    """``V[n, l] = sum_k x(k) conj(g(k - n)) exp(-2 pi i l (k - n) / N)``.

    A unit harmonic at integer frequency ``omega`` maps to
    ``exp(2 pi i omega n / N) * g_hat(l - omega)`` for a real, even spectrum.
    """
    x = _check(x, w)
    raw = dft(x[None, :] * _shifted_windows(w.g), axis=1)
    return TFMatrix(raw * _phase(x.size), "modified_stft")


def naive_stft(x, w: WindowSpec, modified: bool = False) -> TFMatrix:
    """Triple-loop reference; O(N^3), only meant for small N in tests."""
    x = _check(x, w)
    N = x.size
    g = w.g
    out = np.zeros((N, N), dtype=complex)
    for n in range(N):
        for l in range(N):
            acc = 0j
            for k in range(N):
                shift = (k - n) if modified else k
                acc += x[k] * np.conj(g[(k - n) % N]) * np.exp(-2j * np.pi * l * shift / N)
            out[n, l] = acc
    return TFMatrix(out, "modified_stft" if modified else "stft")
