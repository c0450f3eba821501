import numpy as np
import pytest

from finite_sst.spectral import dft, idft
from finite_sst.window import (
    DegenerateWindowError,
    WindowSpec,
    make_hann_freq_window,
    recon_constant,
    validate_separation,
)


def test_single_bin_window():
    w = make_hann_freq_window(16, 1)
    expected = np.zeros(16)
    expected[0] = 1
    np.testing.assert_array_equal(w.g_hat, expected)
    np.testing.assert_allclose(w.g, np.full(16, 1 / 16), atol=1e-16)


def test_paper_window_support():
    w = make_hann_freq_window(200, 10)
    nz = np.flatnonzero(w.g_hat)
    assert nz.size == 10
    assert sorted(w.support_bins()) == list(range(-5, 5))
    assert np.isclose(w.g_hat.sum(), 1.0, atol=1e-15)
    assert np.isclose(w.g[0], 1 / 200, atol=1e-16)


@pytest.mark.parametrize("N,W", [(8, 1), (64, 5), (64, 9), (200, 10), (33, 32)])
def test_window_invariants(N, W):
    w = make_hann_freq_window(N, W)
    np.testing.assert_allclose(idft(dft(w.g)), w.g, atol=1e-12)
    np.testing.assert_allclose(idft(w.g_hat), w.g, atol=1e-12)
    assert np.all(w.g_hat.imag == 0)
    assert np.all(w.g_hat.real >= 0)
    assert abs(recon_constant(w) - w.g_hat.sum()) <= 1e-12
    assert w.g[0] != 0
    # nonzero bins form one cyclic run of length W around 0
    offsets = np.sort(w.support_bins())
    np.testing.assert_array_equal(offsets, np.arange(-(W // 2), W - W // 2))


@pytest.mark.parametrize("W", [1, 3, 5, 9])
def test_odd_window_is_real_and_even(W):
    w = make_hann_freq_window(64, W)
    l = np.arange(64)
    np.testing.assert_allclose(w.g_hat[(-l) % 64], w.g_hat, atol=0)
    np.testing.assert_allclose(w.g.imag, 0, atol=1e-17)
    # conj(g_hat(p - l)) == g_hat(l - p)
    for p in (0, 3, 17):
        np.testing.assert_allclose(np.conj(w.g_hat[(p - l) % 64]), w.g_hat[(l - p) % 64])


def test_window_rejects_bad_width():
    with pytest.raises(ValueError):
        make_hann_freq_window(10, 10)
    with pytest.raises(ValueError):
        make_hann_freq_window(10, 0)


def test_window_is_read_only():
    w = make_hann_freq_window(16, 3)
    with pytest.raises(ValueError):
        w.g[0] = 0


@pytest.mark.parametrize("W,d,expected", [(10, 21, True), (10, 20, False), (1, 3, True), (9, 20, True)])
def test_validate_separation(W, d, expected):
    assert validate_separation(make_hann_freq_window(200, W), d) is expected


def test_recon_constant_normalized():
    assert recon_constant(make_hann_freq_window(64, 1)) == pytest.approx(1.0, abs=1e-15)
    assert recon_constant(make_hann_freq_window(200, 10)) == pytest.approx(1.0, abs=1e-14)


def test_recon_constant_unnormalized():
    g_hat = 2 * make_hann_freq_window(64, 7).g_hat
    w = WindowSpec.from_spectrum(g_hat)
    direct = g_hat.sum()
    assert direct == pytest.approx(2.0)
    assert recon_constant(w) == pytest.approx(direct, abs=1e-12)
    assert recon_constant(w) == pytest.approx(64 * np.conj(w.g[0]), abs=1e-12)


def test_degenerate_window():
    # spectrum summing to zero forces g(0) = 0
    g_hat = np.zeros(8)
    g_hat[1], g_hat[-1] = 1.0, -1.0
    with pytest.raises(DegenerateWindowError):
        recon_constant(WindowSpec.from_spectrum(g_hat))
