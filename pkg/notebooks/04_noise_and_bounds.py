# %% [markdown]
# # Noise, stability and the computable bounds
#
# Uniform noise with sup norm 0.4 is added to the chirp. The frequency-error
# bound ``eps_tilde`` is reported alongside the observed errors; because it
# divides by the smallest nonzero STFT magnitude it is very loose in practice.

# %%
import numpy as np

from finite_sst import (
    add_noise,
    error_bound,
    gen_chirp,
    inst_freq_info,
    make_hann_freq_window,
    modified_stft,
    noise_eps,
    reconstruct_component,
    reconstruct_real_component,
    ridge_band,
    sst,
)

x, model = gen_chirp()
w = make_hann_freq_window(200, 10)
Vx = modified_stft(x, w)
Sx = sst(Vx, inst_freq_info(Vx))

y = add_noise(x, 0.4, seed=3)
Vy = modified_stft(y, w)
Sy = sst(Vy, inst_freq_info(Vy))
eps_prime = noise_eps(y - x, w)

# %% the bound report at one time index
r = error_bound(model, w, Vx, 100, eps_prime=eps_prime, V_noisy=Vy)
print(f"delta={r.delta:.3e}  M={r.M:.2f}  eps={r.eps:.4f}  eps_tilde={r.eps_tilde:.3e}  noisy total={r.noisy_total:.3e}")

# %% reconstruction from clean and noisy transforms
band = ridge_band(model, 0, 6)
core = slice(10, 190)
for label, S in [("clean", Sx), ("noisy", Sy)]:
    rec = reconstruct_real_component(S, band, w)
    print(label, "relative error:", np.linalg.norm((rec - x)[core]) / np.linalg.norm(x[core]))

drift = np.abs(reconstruct_component(Sy, band, w) - reconstruct_component(Sx, band, w)).max()
print(f"band drift {drift:.4f} vs ||e||_inf ||g||_1 = {eps_prime:.4f}")
