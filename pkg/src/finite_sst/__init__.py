"""Finite STFT synchrosqueezing transform on length-N cyclic signals."""

from .analysis import RidgeSet, concentration, extract_ridges, ridge_distances, ridge_error
from .signals import (
    Component,
    ComponentModel,
    add_noise,
    gen_chirp,
    gen_interlacing,
    gen_two_component,
    generate,
    itvps,
    smoothness_eps,
)
from .spectral import dft, idft, inner, modulate, tf_shift, translate
from .stft import TFMatrix, modified_stft, naive_stft, stft
from .synchrosqueeze import (
    ErrorBoundReport,
    OmegaMatrix,
    RidgeBand,
    bound_violations,
    error_bound,
    inst_freq_info,
    noise_eps,
    omega_drift_bound,
    reconstruct_component,
    reconstruct_real_component,
    ridge_band,
    round_half_down,
    sst,
)
from .window import (
    DegenerateWindowError,
    WindowSpec,
    make_hann_freq_window,
    recon_constant,
    validate_separation,
)

__version__ = "0.1.0"
