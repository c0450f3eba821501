import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from finite_sst.analysis import RidgeSet, concentration, extract_ridges, ridge_distances, ridge_error
from finite_sst.signals import gen_chirp, gen_two_component, itvps
from finite_sst.stft import modified_stft
from finite_sst.synchrosqueeze import inst_freq_info, round_half_down, sst
from finite_sst.window import make_hann_freq_window


def sst_of(x, W=10):
    V = modified_stft(x, make_hann_freq_window(x.size, W))
    return sst(V, inst_freq_info(V))


def test_ridges_of_itvps():
    _, model = gen_chirp()
    r = extract_ridges(itvps(model), 1)
    np.testing.assert_array_equal(r.curves[0], round_half_down(10 + np.arange(200) / 20))
    assert not r.flagged.any()


def test_zero_matrix_flags_everything():
    r = extract_ridges(np.zeros((8, 8)), 1)
    assert r.flagged.all()


def test_peak_tie_break_and_separation():
    T = np.zeros((10, 10))
    T[0, [2, 6]] = 1.0
    T[0, 3] = 0.5
    assert extract_ridges(T, 1).curves[0, 0] == 2
    assert list(extract_ridges(T, 2, min_sep=2).curves[:, 0]) == [2, 6]
    T[0, 7] = 1.0  # plateau 6-7 gives two candidates one bin apart
    assert list(extract_ridges(T, 2, min_sep=2).curves[:, 0]) == [2, 6]


def test_sst_chirp_ridge():
    x, model = gen_chirp()
    r = extract_ridges(sst_of(x), 1, search=(0, 101))
    f = model.ifreqs()[0]
    core = slice(10, 190)
    assert np.mean(np.abs(r.curves[0] - f)[core] <= 1) >= 0.95


def test_concentration_examples():
    _, model = gen_chirp()
    truth = RidgeSet.from_model(model)
    assert concentration(itvps(model), truth, 0) == pytest.approx(1.0)
    U = np.ones((200, 200))
    for b in (0, 2, 7):
        assert concentration(U, truth, b) == pytest.approx((2 * b + 1) / 200)
    with pytest.raises(ValueError):
        concentration(np.zeros((4, 4)), RidgeSet(np.zeros((1, 4))), 1)


def test_concentration_sst_beats_stft():
    from finite_sst.stft import stft

    x, model = gen_chirp()
    w = make_hann_freq_window(200, 10)
    truth = RidgeSet.from_model(model)
    assert concentration(sst_of(x), truth, 2) > concentration(stft(x, w), truth, 2)


@given(st.integers(0, 10_000))
@settings(max_examples=20, deadline=None)
def test_concentration_properties(seed):
    rng = np.random.default_rng(seed)
    N = 24
    T = rng.standard_normal((N, N)) + 1j * rng.standard_normal((N, N))
    truth = RidgeSet(rng.integers(0, N, (2, N)))
    vals = [concentration(T, truth, b) for b in range(N // 2 + 1)]
    assert all(a <= b + 1e-15 for a, b in zip(vals, vals[1:]))
    assert vals[-1] == pytest.approx(1.0)
    scale = complex(rng.standard_normal(), rng.standard_normal())
    np.testing.assert_array_equal(extract_ridges(T, 2, 1).curves, extract_ridges(scale * T, 2, 1).curves)


def test_ridge_error_examples():
    truth = RidgeSet(np.tile([[12], [4]], 16) + np.arange(16) % 3)
    e = ridge_error(truth, truth)
    np.testing.assert_array_equal(e.mean, 0)
    np.testing.assert_array_equal(e.max, 0)
    shifted = RidgeSet(truth.curves + 1)
    e = ridge_error(shifted, truth)
    np.testing.assert_array_equal(e.mean, 1)
    np.testing.assert_array_equal(e.max, 1)
    with pytest.raises(ValueError):
        ridge_error(RidgeSet(np.zeros((1, 16))), truth)


def test_matching_ignores_curve_order():
    with pytest.raises(ValueError):
        RidgeSet(np.array([[40, 40]]))
    truth = RidgeSet(np.array([[10] * 40, [30] * 40]))
    swapped = RidgeSet(np.array([[30] * 40, [11] * 40]))
    np.testing.assert_array_equal(ridge_distances(swapped, truth), [[1] * 40, [0] * 40])


def test_two_component_ridge_error():
    x, model = gen_two_component()
    r = extract_ridges(sst_of(x), 2, min_sep=10, search=(0, 101))
    err = ridge_error(r, RidgeSet.from_model(model), columns=np.arange(10, 190))
    assert (err.mean <= 2).all()
