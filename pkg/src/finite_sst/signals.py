"""Test signals, their ground-truth component models, and bounded noise.

Phases are in bin units: a component oscillates as ``cos(2 pi phi(n) / N)``
(real models) or ``exp(2 pi i phi(n) / N)`` (complex models), so the
instantaneous frequency ``phi'(n)`` is directly a DFT bin.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .stft import TFMatrix

SIGNALS = ("chirp", "two", "interlace")


@dataclass(frozen=True)
class Component:
    """One closed-form oscillation with constant amplitude.

    ``family`` is ``"quadratic"`` (``phi = f0 n + c n^2``) or ``"cosine_fm"``
    (``phi = f0 n + beta cos(n / period)``).
    """

    family: str
    params: dict
    amplitude: float = 1.0

    def __post_init__(self):
        if self.family not in ("quadratic", "cosine_fm"):
            raise ValueError(f"unknown component family {self.family!r}")
        if self.amplitude < 0:
            raise ValueError("amplitude must be non-negative")

    def amp(self, n) -> np.ndarray:
        return np.full(np.shape(n), float(self.amplitude))

    def amp_deriv(self, n) -> np.ndarray:
        return np.zeros(np.shape(n))

    def phase(self, n) -> np.ndarray:
        n = np.asarray(n, dtype=float)
        p = self.params
        if self.family == "quadratic":
            return p["f0"] * n + p["c"] * n**2
        return p["f0"] * n + p["beta"] * np.cos(n / p["period"])

    def ifreq(self, n) -> np.ndarray:
        n = np.asarray(n, dtype=float)
        p = self.params
        if self.family == "quadratic":
            return p["f0"] + 2 * p["c"] * n
        return p["f0"] - p["beta"] / p["period"] * np.sin(n / p["period"])

    def ifreq_deriv(self, n) -> np.ndarray:
        n = np.asarray(n, dtype=float)
        p = self.params
        if self.family == "quadratic":
            return np.full(n.shape, 2.0 * p["c"])
        return -p["beta"] / p["period"] ** 2 * np.cos(n / p["period"])

    def to_dict(self) -> dict:
        return {"name": self.family, "amplitude": self.amplitude, **self.params}

    @classmethod
    def from_dict(cls, d: dict) -> "Component":
        d = dict(d)
        family = d.pop("name")
        amplitude = float(d.pop("amplitude", 1.0))
        return cls(family, {k: float(v) for k, v in d.items()}, amplitude)


@dataclass(frozen=True)
class ComponentModel:
    components: tuple[Component, ...]
    N: int
    d: int
    real_valued: bool = True
    name: str = ""
    notes: tuple[str, ...] = field(default=())

    @property
    def K(self) -> int:
        return len(self.components)

    @property
    def n(self) -> np.ndarray:
        return np.arange(self.N)

    def amplitudes(self) -> np.ndarray:
        return np.array([c.amp(self.n) for c in self.components]).reshape(self.K, self.N)

    def ifreqs(self) -> np.ndarray:
        """``(K, N)`` array of ``phi'_k(n)``."""
        return np.array([c.ifreq(self.n) for c in self.components]).reshape(self.K, self.N)

    def component_signal(self, k: int) -> np.ndarray:
        c = self.components[k]
        theta = 2 * np.pi * c.phase(self.n) / self.N
        if self.real_valued:
            return c.amp(self.n) * np.cos(theta)
        return c.amp(self.n) * np.exp(1j * theta)

    def signal(self) -> np.ndarray:
        if self.K == 0:
            return np.zeros(self.N)
        return sum(self.component_signal(k) for k in range(self.K))

    def separation_violations(self) -> np.ndarray:
        """Time indices where two consecutive ridges are not more than ``d`` apart."""
        if self.K < 2:
            return np.array([], dtype=int)
        f = np.sort(self.ifreqs(), axis=0)
        gaps = np.diff(f, axis=0).min(axis=0)
        return np.flatnonzero(gaps <= self.d)

    def to_dict(self) -> dict:
        return {
            "signal": self.name,
            "N": self.N,
            "K": self.K,
            "d": self.d,
            "real_valued": self.real_valued,
            "components": [c.to_dict() for c in self.components],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ComponentModel":
        comps = tuple(Component.from_dict(c) for c in d["components"])
        if "K" in d and int(d["K"]) != len(comps):
            raise ValueError(f"K={d['K']} but {len(comps)} components listed")
        return cls(comps, int(d["N"]), int(d["d"]), bool(d.get("real_valued", True)), d.get("signal", ""))


def smoothness_eps(model: ComponentModel) -> float:
    """Smallest ``eps`` with ``|phi''| <= eps |phi'|`` and ``|A'| <= eps |phi'|`` (sup norms)."""
    n = model.n
    eps = 0.0
    for c in model.components:
        scale = np.abs(c.ifreq(n)).max()
        if scale == 0:
            continue
        eps = max(eps, np.abs(c.ifreq_deriv(n)).max() / scale, np.abs(c.amp_deriv(n)).max() / scale)
    return float(eps)


def chirp_model(N: int = 200) -> ComponentModel:
    return ComponentModel((Component("quadratic", {"f0": 10.0, "c": 1 / 40}),), N, d=20, name="chirp")


def two_component_model(N: int = 200) -> ComponentModel:
    comps = (
        Component("cosine_fm", {"f0": 40.0, "beta": 4.0, "period": 10.0}),
        Component("quadratic", {"f0": 60.0, "c": 0.04}),
    )
    return ComponentModel(comps, N, d=20, name="two")


def interlacing_model(N: int = 200) -> ComponentModel:
    comps = (
        Component("quadratic", {"f0": 50.0, "c": 0.0}),
        Component("quadratic", {"f0": 20.0, "c": 0.1}),
    )
    return ComponentModel(comps, N, d=20, name="interlace", notes=("ridges cross; not well separated",))


def _check_N(N: int):
    if N < 2:
        raise ValueError("N must be at least 2")


def gen_chirp(N: int = 200) -> tuple[np.ndarray, ComponentModel]:
    """``cos(2 pi (n/20 + 0.05 (n/20)^2))``, instantaneous frequency ``10 + n/20``."""
    _check_N(N)
    n = np.arange(N)
    return np.cos(2 * np.pi * (n / 20 + 0.05 * (n / 20) ** 2)), chirp_model(N)


def gen_two_component(N: int = 200) -> tuple[np.ndarray, ComponentModel]:
    """Sinusoidal-FM component around bin 40 plus a chirp starting at bin 60.

    The waveform is synthesized from the phases ``40 n + 4 cos(n/10)`` and
    ``60 n + 0.04 n^2`` (bin units, N = 200 scaling).
    """
    _check_N(N)
    model = two_component_model(N)
    return model.signal(), model


def gen_interlacing(N: int = 200) -> tuple[np.ndarray, ComponentModel]:
    """Constant tone at bin 50 crossed by a chirp ``20 + n/5`` at n = 150."""
    _check_N(N)
    n = np.arange(N)
    x = np.cos(5 * np.pi * (n / 10)) + np.cos(2 * np.pi * (n / 10 + 0.05 * (n / 10) ** 2))
    return x, interlacing_model(N)


GENERATORS = {"chirp": gen_chirp, "two": gen_two_component, "interlace": gen_interlacing}


def generate(name: str, N: int = 200) -> tuple[np.ndarray, ComponentModel]:
    try:
        gen = GENERATORS[name]
    except KeyError:
        raise ValueError(f"unknown signal {name!r}; choose from {', '.join(SIGNALS)}") from None
    return gen(N)


def add_noise(x, level: float, seed: int) -> np.ndarray:
    """Add real uniform noise rescaled so that ``max |e| == level``."""
    if level < 0:
        raise ValueError("noise level must be non-negative")
    x = np.asarray(x)
    if level == 0:
        return x.copy()
    e = np.random.default_rng(seed).uniform(-1.0, 1.0, x.shape)
    e *= level / np.abs(e).max()
    return x + e


def itvps(model: ComponentModel, N: int | None = None) -> TFMatrix:
    """Ideal time-varying power spectrum: ``A_k(n)^2`` at the rounded ridge bin."""
    from .synchrosqueeze import round_half_down

    N = model.N if N is None else N
    if N != model.N:
        raise ValueError(f"model is defined for N={model.N}, not {N}")
    P = np.zeros((N, N), dtype=complex)
    rows = np.arange(N)
    if model.K:
        bins = round_half_down(model.ifreqs()) % N
        for a, b in zip(model.amplitudes(), bins):
            np.add.at(P, (rows, b), a**2)
    return TFMatrix(P, "itvps")
