# %% [markdown]
# # Synchrosqueezing a pure harmonic
#
# For ``x(n) = A exp(2 pi i omega n / N)`` the modified STFT advances by the
# same phase from one time index to the next, so every defined entry of the
# frequency-information map equals omega and synchrosqueezing moves all
# coefficients into the single bin omega.

# %%
import numpy as np

from finite_sst import (
    RidgeBand,
    inst_freq_info,
    make_hann_freq_window,
    modified_stft,
    reconstruct_component,
    sst,
)

N, omega, A = 64, 5, 2.0
w = make_hann_freq_window(N, 9)
x = A * np.exp(2j * np.pi * omega * np.arange(N) / N)

V = modified_stft(x, w)
om = inst_freq_info(V)
S = sst(V, om)

print("distinct omega values:", np.unique(om.values[om.mask]))
print("bins holding SST energy:", np.flatnonzero(np.abs(S.entries).sum(axis=0)))

# %% band reconstruction recovers the harmonic
rec = reconstruct_component(S, RidgeBand(np.full(N, omega), 4), w)
print("reconstruction error:", np.abs(rec - x).max())

# %% [markdown]
# Summing every frequency of the modified STFT gives ``N conj(g(0)) x(n)``,
# which is why the band sum is divided by that constant.

# %%
print("column sums / x:", np.unique(np.round(V.entries.sum(axis=1) / x, 12)))
