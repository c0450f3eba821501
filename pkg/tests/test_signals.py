import numpy as np
import pytest

from finite_sst.signals import (
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
from finite_sst.window import make_hann_freq_window, validate_separation

n = np.arange(200)


def test_chirp_formula():
    x, model = gen_chirp()
    np.testing.assert_array_equal(x, np.cos(2 * np.pi * (n / 20 + 0.05 * (n / 20) ** 2)))
    assert x[0] == 1
    assert x[10] == pytest.approx(np.cos(1.025 * np.pi), abs=1e-15)
    f = model.ifreqs()[0]
    assert f[0] == 10 and f[100] == 15
    np.testing.assert_allclose(model.components[0].phase(n), 10 * n + n**2 / 40)
    np.testing.assert_allclose(model.signal(), x, atol=1e-12)


def test_two_component_model():
    x, model = gen_two_component()
    f1, f2 = model.ifreqs()
    assert f1[0] == 40 and f2[0] == 60
    np.testing.assert_allclose(f1, 40 - 0.4 * np.sin(n / 10))
    np.testing.assert_allclose(f2, 60 + 0.08 * n)
    expected = np.cos(2 * np.pi * (40 * n + 4 * np.cos(n / 10)) / 200) + np.cos(2 * np.pi * (60 * n + 0.04 * n**2) / 200)
    np.testing.assert_allclose(x, expected, atol=1e-12)
    # closed forms evaluated independently over n = 0..199
    gap = (60 + 0.08 * n) - (40 - 0.4 * np.sin(n / 10))
    assert gap.min() >= 19.6
    assert model.d == 20


def test_two_component_separation_hypothesis():
    _, model = gen_two_component()
    assert not validate_separation(make_hann_freq_window(200, 10), model.d)
    assert validate_separation(make_hann_freq_window(200, 9), model.d)
    # the gap equals d = 20 exactly at n = 0
    np.testing.assert_array_equal(model.separation_violations(), [0])


def test_interlacing():
    x, model = gen_interlacing()
    assert x[0] == 2
    np.testing.assert_allclose(x, np.cos(5 * np.pi * n / 10) + np.cos(2 * np.pi * (n / 10 + 0.05 * (n / 10) ** 2)))
    f1, f2 = model.ifreqs()
    np.testing.assert_array_equal(f1, 50)
    assert f2[150] == 50
    assert 150 in model.separation_violations()
    np.testing.assert_allclose(model.signal(), x, atol=1e-10)


def test_generate_dispatch():
    x, m = generate("chirp", 64)
    assert x.size == 64 and m.N == 64
    with pytest.raises(ValueError, match="unknown signal"):
        generate("sweep")
    with pytest.raises(ValueError):
        gen_chirp(1)


def test_add_noise():
    x, _ = gen_chirp()
    np.testing.assert_array_equal(add_noise(x, 0.0, 7), x)
    y = add_noise(x, 0.4, 7)
    assert np.abs(y - x).max() == pytest.approx(0.4, abs=1e-12)
    np.testing.assert_array_equal(add_noise(x, 0.4, 7), y)
    assert not np.array_equal(add_noise(x, 0.4, 8), y)
    with pytest.raises(ValueError):
        add_noise(x, -1, 0)


def test_itvps():
    _, chirp = gen_chirp()
    P = itvps(chirp).entries
    assert P[0, 10] == 1 and np.count_nonzero(P[0]) == 1
    _, two = gen_two_component()
    P2 = itvps(two).entries
    assert P2[0, 40] == 1 and P2[0, 60] == 1
    assert (np.count_nonzero(P2, axis=1) <= 2).all()
    zero = ComponentModel((Component("quadratic", {"f0": 5.0, "c": 0.0}, amplitude=0.0),), 16, d=4)
    assert not np.any(itvps(zero).entries)


def test_model_roundtrip():
    _, model = gen_two_component()
    again = ComponentModel.from_dict(model.to_dict())
    np.testing.assert_allclose(again.ifreqs(), model.ifreqs())
    assert again.K == 2 and again.d == 20 and again.real_valued


def test_smoothness_eps():
    _, model = gen_chirp()
    assert smoothness_eps(model) == pytest.approx((1 / 20) / (10 + 199 / 20))


def test_complex_model_waveform():
    m = ComponentModel((Component("quadratic", {"f0": 3.0, "c": 0.0}, amplitude=2.0),), 8, d=2, real_valued=False)
    np.testing.assert_allclose(m.signal(), 2 * np.exp(2j * np.pi * 3 * np.arange(8) / 8))
