"""Finite Fourier analysis on the cyclic group Z_N.

Signals and spectra are plain 1-D numpy arrays; index ``k`` always means
``k mod N``.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np


def as_signal(x) -> np.ndarray:
    """Return ``x`` as a 1-D complex array, checking ``N >= 2``."""
    arr = np.asarray(x, dtype=complex)
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-D signal, got shape {arr.shape}")
    if arr.size < 2:
        raise ValueError("signal length must be at least 2")
    return arr


@lru_cache(maxsize=32)
def dft_kernel(N: int) -> np.ndarray:
    """The N x N matrix ``F[m, n] = exp(-2 pi i m n / N)``.

    The exponent is reduced mod N before evaluation so large products
    do not lose phase accuracy.
    """
    mn = np.outer(np.arange(N), np.arange(N)) % N
    F = np.exp(-2j * np.pi * mn / N)
    F.setflags(write=False)
    return F


def dft(x, axis: int = -1) -> np.ndarray:
    """Direct O(N^2) DFT, ``X[m] = sum_n x[n] exp(-2 pi i m n / N)``."""
    x = np.asarray(x, dtype=complex)
    N = x.shape[axis]
    return np.moveaxis(np.tensordot(np.moveaxis(x, axis, -1), dft_kernel(N), axes=([-1], [1])), -1, axis)


def idft(X, axis: int = -1) -> np.ndarray:
    """Inverse of :func:`dft`, ``x[n] = (1/N) sum_m X[m] exp(2 pi i m n / N)``."""
    X = np.asarray(X, dtype=complex)
    N = X.shape[axis]
    F = dft_kernel(N)
    return np.moveaxis(np.tensordot(np.moveaxis(X, axis, -1), F.conj(), axes=([-1], [1])), -1, axis) / N


def translate(x, k: int) -> np.ndarray:
    """Cyclic translation ``(T_k x)(n) = x(n - k)``."""
    x = as_signal(x)
    return np.roll(x, int(k) % x.size)


def modulate(x, l: int) -> np.ndarray:
    """Modulation ``(M_l x)(n) = exp(-2 pi i l n / N) x(n)``."""
    x = as_signal(x)
    N = x.size
    ln = (int(l) * np.arange(N)) % N
    return np.exp(-2j * np.pi * ln / N) * x


def tf_shift(x, k: int, l: int) -> np.ndarray:
    """Time-frequency shift ``pi(k, l) x = M_l T_k x``."""
    return modulate(translate(x, k), l)


def inner(x, y) -> complex:
    """``<x, y> = sum_n x(n) conj(y(n))``."""
    return complex(np.vdot(np.asarray(y, dtype=complex), np.asarray(x, dtype=complex)))
