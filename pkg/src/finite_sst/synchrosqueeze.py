"""Instantaneous-frequency reassignment, band reconstruction and error bounds."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .signals import ComponentModel, smoothness_eps
from .stft import TFMatrix
from .window import WindowSpec, recon_constant

ZERO_THRESHOLD = 1e-12


def round_half_down(v):
    """Nearest integer, ties going down: ``[v]`` if ``v <= [v] + 0.5`` else ``[v] + 1``.

    ``[v]`` is the floor, so negative inputs round the same way as positive ones.
    """
    r = np.ceil(np.asarray(v, dtype=float) - 0.5).astype(np.int64)
    return int(r) if r.ndim == 0 else r


def cyclic_distance(a, b, N: int):
    d = np.abs(np.asarray(a) - np.asarray(b)) % N
    return np.minimum(d, N - d)


@dataclass(frozen=True)
class OmegaMatrix:
    """Rounded instantaneous-frequency estimates and the mask of defined entries."""

    values: np.ndarray
    mask: np.ndarray

    @property
    def N(self) -> int:
        return self.values.shape[0]


@dataclass(frozen=True)
class RidgeBand:
    center: np.ndarray
    half_width: int

    def __post_init__(self):
        if self.half_width < 0:
            raise ValueError("half_width must be non-negative")

    @classmethod
    def full(cls, N: int) -> "RidgeBand":
        """A band that covers every bin at every time."""
        return cls(np.zeros(N, dtype=int), N // 2)


def _defined(a: np.ndarray, zero_threshold: float) -> np.ndarray:
    peak = a.max()
    if peak == 0:
        return np.zeros(a.shape, dtype=bool)
    return a > zero_threshold * peak


def _require_kind(V: TFMatrix, kind: str):
    if V.kind != kind:
        raise ValueError(f"expected a {kind} matrix, got {V.kind}")


def inst_freq_info(V: TFMatrix, zero_threshold: float = ZERO_THRESHOLD) -> OmegaMatrix:
    """Rounded frequency read off the phase advance from row ``n`` to ``n + 1``.

    ``omega = round(real(N / (2 pi i) * log(V[n+1, l] / V[n, l]))) mod N`` using the
    principal logarithm. Entries where either ``V[n, l]`` or ``V[n+1, l]`` is at or
    below ``zero_threshold * max|V|`` are masked and set to 0.
    """
    _require_kind(V, "modified_stft")
    if zero_threshold < 0:
        raise ValueError("zero_threshold must be non-negative")
    E = V.entries
    N = V.N
    nxt = np.roll(E, -1, axis=0)
    ok = _defined(np.abs(E), zero_threshold)
    mask = ok & np.roll(ok, -1, axis=0)
    ratio = np.divide(nxt, E, out=np.ones_like(E), where=mask)
    # real(N/(2 pi i) * log r) == N * arg(r) / (2 pi)
    raw = N * np.angle(ratio) / (2 * np.pi)
    omega = np.where(mask, round_half_down(raw) % N, 0)
    return OmegaMatrix(omega, mask)


def sst(V: TFMatrix, omega: OmegaMatrix) -> TFMatrix:
    """Scatter each unmasked ``V[n, l]`` into bin ``omega[n, l]`` of the same row."""
    _require_kind(V, "modified_stft")
    if omega.values.shape != V.entries.shape:
        raise ValueError("omega and V shapes differ")
    N = V.N
    rows = np.broadcast_to(np.arange(N)[:, None], (N, N))
    S = np.zeros(N * N, dtype=complex)
    m = omega.mask
    np.add.at(S, rows[m] * N + omega.values[m], V.entries[m])
    return TFMatrix(S.reshape(N, N), "sst")


def band_sum(S: TFMatrix, band: RidgeBand) -> np.ndarray:
    """Per-time sum of ``S[n, xi]`` over ``|xi - center(n)| <= half_width`` (cyclic)."""
    N = S.N
    center = np.asarray(band.center)
    if center.shape != (N,):
        raise ValueError(f"band center must have length {N}")
    if np.any((center < 0) | (center >= N)):
        raise ValueError("band centers must lie in [0, N)")
    inside = cyclic_distance(np.arange(N)[None, :], center[:, None], N) <= band.half_width
    return np.where(inside, S.entries, 0).sum(axis=1)


def reconstruct_component(S: TFMatrix, band: RidgeBand, w: WindowSpec) -> np.ndarray:
    _require_kind(S, "sst")
    return band_sum(S, band) / recon_constant(w)


def reconstruct_real_component(S: TFMatrix, band: RidgeBand, w: WindowSpec) -> np.ndarray:
    """Real oscillation from its positive-frequency band.

    The band only holds ``(A/2) exp(i theta)``, so twice the real part is returned.
    """
    return 2 * reconstruct_component(S, band, w).real


def ridge_band(model: ComponentModel, k: int, half_width: int) -> RidgeBand:
    """Band around component ``k``'s rounded instantaneous frequency."""
    if not 0 <= k < model.K:
        raise IndexError(f"component {k} out of range; model has components 0..{model.K - 1}")
    center = round_half_down(model.components[k].ifreq(model.n)) % model.N
    return RidgeBand(center, half_width)


# ---------------------------------------------------------------------------
# computable bounds
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ErrorBoundReport:
    n: int
    N: int
    I11: float
    I21: float
    I12: float
    I22: float
    I31: float
    I32: float
    delta: float
    M: float
    M_prime: float
    eps: float
    eps_tilde: float
    eps_prime: float
    real_signal: bool

    @property
    def noise_term(self) -> float:
        """``N M' eps' / pi``."""
        return self.N * self.M_prime * self.eps_prime / np.pi

    @property
    def noisy_total(self) -> float:
        return self.eps_tilde + self.noise_term


def window_moments(g: np.ndarray, n: int) -> dict[str, float]:
    """The weighted window sums entering the bounds at time ``n``.

    ``I_s^j = sum_k |g(k - n - j + 1)| d(k, n)^s`` with cyclic distance ``d``,
    and ``I_3^j = sum_k |g(k - n - j + 1)| (k + 1)``.
    """
    N = g.size
    k = np.arange(N)
    dist = cyclic_distance(k, n, N).astype(float)
    a1 = np.abs(g[(k - n) % N])
    a2 = np.abs(g[(k - n - 1) % N])
    return {
        "I11": float(a1 @ dist),
        "I21": float(a1 @ dist**2),
        "I12": float(a2 @ dist),
        "I22": float(a2 @ dist**2),
        "I31": float(a1 @ (k + 1)),
        "I32": float(a2 @ (k + 1)),
    }


def magnitude_constants(V: TFMatrix, zero_threshold: float = ZERO_THRESHOLD) -> tuple[float, float]:
    """``(delta, M)``: smallest defined ``|V|`` and the largest ``|V[n,l] / V[n+1,l]|`` (at least 1)."""
    a = np.abs(V.entries)
    ok = _defined(a, zero_threshold)
    if not ok.any():
        raise ValueError("V is zero everywhere; delta is undefined")
    delta = float(a[ok].min())
    a1 = np.roll(a, -1, axis=0)
    pair = ok & np.roll(ok, -1, axis=0)
    M = max(1.0, float((a[pair] / a1[pair]).max())) if pair.any() else 1.0
    return delta, M


def error_bound(
    model: ComponentModel,
    w: WindowSpec,
    V: TFMatrix,
    n: int,
    eps: float | None = None,
    real_signal: bool | None = None,
    eps_prime: float = 0.0,
    V_noisy: TFMatrix | None = None,
    zero_threshold: float = ZERO_THRESHOLD,
    constants: tuple[float, float] | None = None,
) -> ErrorBoundReport:
    """Frequency-error bound ``eps_tilde`` at time ``n`` and its noisy extension.

    ``eps`` defaults to :func:`smoothness_eps` of the model and ``real_signal`` to
    ``model.real_valued`` (which adds the ``I_3`` terms). ``M'`` is taken as
    ``1 / min(delta_x, delta_y)`` when the noisy transform is supplied, else ``1 / delta``.
    """
    eps = smoothness_eps(model) if eps is None else eps
    real_signal = model.real_valued if real_signal is None else real_signal
    if eps < 0 or eps_prime < 0:
        raise ValueError("eps and eps_prime must be non-negative")
    N = V.N
    n = int(n) % N
    delta, M = constants if constants is not None else magnitude_constants(V, zero_threshold)
    delta_min = delta
    if V_noisy is not None:
        delta_min = min(delta, magnitude_constants(V_noisy, zero_threshold)[0])
    I = window_moments(w.g, n)
    total = 0.0
    for c in model.components:
        A = abs(float(c.amp(n)))
        sup = float(np.abs(c.ifreq(model.n)).max())
        terms = I["I11"] + np.pi * A * I["I21"] + I["I12"] + np.pi * A * I["I22"]
        if real_signal:
            terms += I["I31"] + I["I32"]
        total += sup * terms
    eps_tilde = N * M * eps / (2 * np.pi * delta) * total + 0.5
    return ErrorBoundReport(
        n=n, **I, delta=delta, M=M, M_prime=1.0 / delta_min, eps=eps,
        eps_tilde=float(eps_tilde), eps_prime=eps_prime, real_signal=real_signal, N=N,
    )


def off_ridge_bound(model: ComponentModel, w: WindowSpec, n: int, eps: float | None = None,
                    real_signal: bool | None = None) -> tuple[float, float]:
    """Upper bounds for ``|V(n, l)|`` and ``|V(n+1, l)|`` away from every ridge."""
    eps = smoothness_eps(model) if eps is None else eps
    real_signal = model.real_valued if real_signal is None else real_signal
    I = window_moments(w.g, n)
    b1 = b2 = 0.0
    for c in model.components:
        A = abs(float(c.amp(n)))
        sup = float(np.abs(c.ifreq(model.n)).max())
        b1 += eps * sup * (I["I11"] + np.pi * A * I["I21"] + (I["I31"] if real_signal else 0.0))
        b2 += eps * sup * (I["I12"] + np.pi * A * I["I22"] + (I["I32"] if real_signal else 0.0))
    return b1, b2


def ridge_zones(model: ComponentModel, include_mirror: bool | None = None) -> np.ndarray:
    """``(K, N, N)`` booleans: ``|l - phi'_k(n)| < d/2`` in cyclic distance.

    For real models the mirrored ridge at ``N - phi'_k(n)`` belongs to the same zone
    when ``include_mirror`` is left at its default.
    """
    include_mirror = model.real_valued if include_mirror is None else include_mirror
    N = model.N
    l = np.arange(N)[None, None, :]
    f = model.ifreqs()[:, :, None]
    zone = cyclic_distance(l, f, N) < model.d / 2
    if include_mirror:
        zone |= cyclic_distance(l, N - f, N) < model.d / 2
    return zone


def bound_violations(V: TFMatrix, omega: OmegaMatrix, model: ComponentModel, w: WindowSpec,
                     eps: float | None = None, real_signal: bool | None = None,
                     zero_threshold: float = ZERO_THRESHOLD) -> tuple[int, int]:
    """Count unmasked on-ridge entries whose frequency error exceeds ``eps_tilde``.

    Only positive-frequency zones are checked. Returns ``(violations, checked)``.
    """
    N = V.N
    constants = magnitude_constants(V, zero_threshold)
    tildes = np.array([error_bound(model, w, V, n, eps, real_signal, constants=constants).eps_tilde
                       for n in range(N)])
    zones = ridge_zones(model, include_mirror=False)
    f = model.ifreqs()
    violations = checked = 0
    for k in range(model.K):
        sel = zones[k] & omega.mask
        err = cyclic_distance(omega.values, f[k][:, None], N)
        violations += int(np.count_nonzero(sel & (err > tildes[:, None])))
        checked += int(np.count_nonzero(sel))
    return violations, checked


def off_ridge_violations(V: TFMatrix, model: ComponentModel, w: WindowSpec, eps: float | None = None,
                         real_signal: bool | None = None) -> tuple[int, int]:
    """Count entries outside every ridge zone where ``|V|`` exceeds its smallness bound."""
    N = V.N
    outside = ~ridge_zones(model).any(axis=0)
    a = np.abs(V.entries)
    a1 = np.roll(a, -1, axis=0)
    violations = 0
    for n in range(N):
        b1, b2 = off_ridge_bound(model, w, n, eps, real_signal)
        row = outside[n]
        violations += int(np.count_nonzero(row & ((a[n] > b1) | (a1[n] > b2))))
    return violations, int(np.count_nonzero(outside))


def noise_eps(e, w: WindowSpec) -> float:
    """``eps' = ||e||_inf * ||g||_1``."""
    return float(np.abs(np.asarray(e)).max() * w.l1_norm)


def omega_drift_bound(Vx: TFMatrix, Vy: TFMatrix, eps_prime: float,
                      zero_threshold: float = ZERO_THRESHOLD) -> float:
    """Allowed ``|omega_y - omega_x|`` under noise: ``N M' eps' / pi + 1``.

    One unit covers the two roundings (both estimates are rounded).
    """
    d = min(magnitude_constants(Vx, zero_threshold)[0], magnitude_constants(Vy, zero_threshold)[0])
    return Vx.N * eps_prime / (np.pi * d) + 1.0
