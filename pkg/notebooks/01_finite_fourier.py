# %% [markdown]
# # Finite Fourier analysis on Z_N
#
# Signals are length-N arrays indexed cyclically. This walk-through checks the
# DFT pair, the Plancherel identity, and how translation and modulation act.

# %%
import numpy as np

from finite_sst import dft, idft, inner, modulate, tf_shift, translate

rng = np.random.default_rng(0)
N = 16
x = rng.standard_normal(N) + 1j * rng.standard_normal(N)
y = rng.standard_normal(N) + 1j * rng.standard_normal(N)

# %% inversion and Plancherel
print("inversion error :", np.abs(idft(dft(x)) - x).max())
print("<x,y>           :", inner(x, y))
print("<X,Y>/N         :", inner(dft(x), dft(y)) / N)

# %% [markdown]
# A translation by k multiplies the spectrum by a phase; a modulation by l
# rotates the spectrum by l bins.

# %%
k, l = 3, 5
m = np.arange(N)
print("shift theorem   :", np.abs(dft(translate(x, k)) - np.exp(-2j * np.pi * m * k / N) * dft(x)).max())
print("modulation      :", np.abs(dft(modulate(x, l)) - np.roll(dft(x), -l)).max())
print("pi(k,l) = M_l T_k:", np.abs(tf_shift(x, k, l) - modulate(translate(x, k), l)).max())
