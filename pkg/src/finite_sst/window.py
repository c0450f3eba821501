"""Analysis windows with compactly supported spectra."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .spectral import idft

DEGENERATE_TOL = 1e-14


class DegenerateWindowError(ValueError):
    """Raised when ``g(0)`` is numerically zero and no inversion constant exists."""


@dataclass(frozen=True)
class WindowSpec:
    """A window ``g`` together with its spectrum ``g_hat``.

    ``support_width`` counts the nonzero bins of ``g_hat``; the arrays are
    marked read-only so a spec can be shared freely.
    """

    g: np.ndarray
    g_hat: np.ndarray
    support_width: int
    N: int

    def __post_init__(self):
        for arr in (self.g, self.g_hat):
            arr.setflags(write=False)

    @classmethod
    def from_spectrum(cls, g_hat) -> "WindowSpec":
        """Build a window from an arbitrary spectrum (no normalization)."""
        g_hat = np.array(g_hat, dtype=complex)
        if g_hat.ndim != 1 or g_hat.size < 2:
            raise ValueError("spectrum must be 1-D with at least 2 bins")
        return cls(g=idft(g_hat), g_hat=g_hat, support_width=int(np.count_nonzero(g_hat)), N=g_hat.size)

    @property
    def l1_norm(self) -> float:
        return float(np.abs(self.g).sum())

    def support_bins(self) -> np.ndarray:
        """Frequency offsets (in ``(-N/2, N/2]``) where ``g_hat`` is nonzero."""
        idx = np.flatnonzero(self.g_hat)
        return np.where(idx > self.N // 2, idx - self.N, idx)


def hann_taper(W: int) -> np.ndarray:
    """Hann taper with ``W`` strictly positive samples (endpoints dropped)."""
    j = np.arange(1, W + 1)
    return np.sin(np.pi * j / (W + 1)) ** 2


def make_hann_freq_window(N: int, support_width: int) -> WindowSpec:
    """Window whose DFT is a Hann taper on ``support_width`` bins around 0.

    The taper occupies bins ``-(W // 2), ..., W - W // 2 - 1`` (mod N), so an
    even width sits one bin to the negative side. The spectrum is scaled to
    sum to one, which gives ``g(0) = 1/N``.
    """
    W = int(support_width)
    if N < 2:
        raise ValueError("N must be at least 2")
    if W <= 0:
        raise ValueError(f"support width must be positive, got {W}")
    if W >= N:
        raise ValueError(f"support width {W} must be smaller than N={N}")
    taper = hann_taper(W)
    g_hat = np.zeros(N, dtype=complex)
    offsets = np.arange(-(W // 2), W - W // 2)
    g_hat[offsets % N] = taper / taper.sum()
    return WindowSpec(g=idft(g_hat), g_hat=g_hat, support_width=W, N=N)


def validate_separation(w: WindowSpec, d: int) -> bool:
    """True iff the spectral support is narrower than half the separation ``d``."""
    if d < 1:
        raise ValueError("separation d must be >= 1")
    return w.support_width < d / 2


def recon_constant(w: WindowSpec) -> complex:
    """Inversion constant ``C_g = N * conj(g(0))``.

    Summing the modified STFT over all frequencies at time ``n`` gives
    ``C_g * x(n)``; band reconstruction divides by this.
    """
    g0 = complex(w.g[0])
    if abs(g0) < DEGENERATE_TOL:
        raise DegenerateWindowError(f"|g(0)| = {abs(g0):.3e} is below {DEGENERATE_TOL}")
    return w.N * g0.conjugate()
