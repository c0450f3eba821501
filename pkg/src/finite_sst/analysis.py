"""Ridge extraction and STFT-vs-SST comparison metrics."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .synchrosqueeze import cyclic_distance


@dataclass(frozen=True)
class RidgeSet:
    """``curves[k, n]`` is the bin of ridge ``k`` at time ``n``.

    ``flagged[n]`` marks columns where fewer than K peaks were found; the
    missing curve entries are filled with bin 0.
    """

    curves: np.ndarray
    flagged: np.ndarray | None = None

    def __post_init__(self):
        c = np.atleast_2d(np.asarray(self.curves, dtype=int))
        object.__setattr__(self, "curves", c)
        if self.flagged is None:
            object.__setattr__(self, "flagged", np.zeros(c.shape[1], dtype=bool))
        if np.any((c < 0) | (c >= c.shape[1])):
            raise ValueError("ridge bins must lie in [0, N)")

    @property
    def K(self) -> int:
        return self.curves.shape[0]

    @property
    def N(self) -> int:
        return self.curves.shape[1]

    @classmethod
    def from_model(cls, model) -> "RidgeSet":
        from .synchrosqueeze import round_half_down

        return cls(round_half_down(model.ifreqs()) % model.N)


def _column_peaks(power: np.ndarray, K: int, min_sep: int, lo: int, hi: int) -> list[int]:
    N = power.size
    left = np.roll(power, 1)
    right = np.roll(power, -1)
    cand = np.flatnonzero((power > 0) & (power >= left) & (power >= right))
    cand = cand[(cand >= lo) & (cand < hi)]
    # magnitude descending, smaller bin first on ties
    order = np.lexsort((cand, -power[cand]))
    chosen: list[int] = []
    for b in cand[order]:
        if all(cyclic_distance(b, c, N) >= min_sep for c in chosen):
            chosen.append(int(b))
            if len(chosen) == K:
                break
    return sorted(chosen)


def extract_ridges(T, K: int, min_sep: int = 0, search: tuple[int, int] | None = None) -> RidgeSet:
    """Greedy per-column ridge picking.

    In each column the K strongest local maxima of ``|T|^2`` are kept, subject to
    pairwise cyclic separation of at least ``min_sep`` bins. ``search`` limits the
    candidate bins to ``[lo, hi)``; pass ``(0, N // 2 + 1)`` for real signals so
    mirror ridges are ignored.
    """
    if K < 1:
        raise ValueError("K must be at least 1")
    if min_sep < 0:
        raise ValueError("min_sep must be non-negative")
    P = np.abs(np.asarray(T)) ** 2
    N = P.shape[0]
    lo, hi = search if search is not None else (0, N)
    curves = np.zeros((K, N), dtype=int)
    flagged = np.zeros(N, dtype=bool)
    for n in range(N):
        peaks = _column_peaks(P[n], K, min_sep, lo, hi)
        if len(peaks) < K:
            flagged[n] = True
        curves[: len(peaks), n] = peaks
    return RidgeSet(curves, flagged)


def concentration(T, truth: RidgeSet, band: int) -> float:
    """Share of ``|T|^2`` lying within ``band`` bins (cyclic) of any truth curve."""
    if band < 0:
        raise ValueError("band must be non-negative")
    P = np.abs(np.asarray(T)) ** 2
    total = P.sum()
    if total == 0:
        raise ValueError("matrix has zero energy")
    N = P.shape[0]
    xi = np.arange(N)[None, :]
    near = np.zeros((N, N), dtype=bool)
    for curve in truth.curves:
        near |= cyclic_distance(xi, curve[:, None], N) <= band
    return float(P[near].sum() / total)


def ridge_distances(est: RidgeSet, truth: RidgeSet) -> np.ndarray:
    """``(K, N)`` cyclic distances after greedy per-column matching to the truth curves."""
    if est.curves.shape != truth.curves.shape:
        raise ValueError(f"shape mismatch: {est.curves.shape} vs {truth.curves.shape}")
    K, N = truth.curves.shape
    out = np.zeros((K, N), dtype=int)
    for n in range(N):
        D = cyclic_distance(truth.curves[:, n][:, None], est.curves[:, n][None, :], N)
        free_t = set(range(K))
        free_e = set(range(K))
        for flat in np.argsort(D, axis=None, kind="stable"):
            i, j = divmod(int(flat), K)
            if i in free_t and j in free_e:
                out[i, n] = D[i, j]
                free_t.discard(i)
                free_e.discard(j)
    return out


@dataclass(frozen=True)
class RidgeError:
    mean: np.ndarray
    max: np.ndarray


def ridge_error(est: RidgeSet, truth: RidgeSet, columns=None) -> RidgeError:
    """Per-curve mean and max bin distance, optionally over a subset of columns."""
    D = ridge_distances(est, truth)
    if columns is not None:
        D = D[:, columns]
    return RidgeError(D.mean(axis=1), D.max(axis=1))
