# %% [markdown]
# # STFT versus SST on the three test signals
#
# Each figure shows the signal, the ideal time-varying power spectrum, the
# STFT magnitude and the SST magnitude (frequency bins on the vertical axis).
# Requires matplotlib (``pip install finite-sst[notebooks]``).

# %%
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from finite_sst import (
    RidgeSet,
    concentration,
    generate,
    inst_freq_info,
    itvps,
    make_hann_freq_window,
    modified_stft,
    sst,
    stft,
)

w = make_hann_freq_window(200, 10)


def panels(name, x, model, fname):
    V = modified_stft(x, w)
    S = sst(V, inst_freq_info(V))
    mats = [itvps(model).entries, stft(x, w).entries, S.entries]
    fig, ax = plt.subplots(4, 1, figsize=(6, 10))
    ax[0].plot(np.real(x), lw=0.8)
    ax[0].set_title(name)
    for a, M, title in zip(ax[1:], mats, ["itvPS", "STFT", "SST"]):
        a.imshow(np.abs(M[:, :101]).T, origin="lower", aspect="auto", cmap="gray_r")
        a.set_title(title)
    fig.tight_layout()
    fig.savefig(fname, dpi=100)
    plt.close(fig)
    truth = RidgeSet.from_model(model)
    return concentration(S, truth, 2), concentration(stft(x, w), truth, 2)


# %%
for name in ("chirp", "two", "interlace"):
    x, model = generate(name)
    c_sst, c_stft = panels(name, x, model, f"signal_{name}.png")
    print(f"{name:10s} concentration within 2 bins: SST {c_sst:.3f}  STFT {c_stft:.3f}")
