import numpy as np
import pytest


def naive_modified(x, g):
    """Independent double sum: V[n, l] = sum_k x(k) conj(g(k-n)) exp(-2 pi i l (k-n) / N)."""
    N = len(x)
    V = np.zeros((N, N), dtype=complex)
    for n in range(N):
        m = (np.arange(N) - n) % N
        # l (k - n) taken mod N before exponentiation
        phase = np.exp(-2j * np.pi * ((np.arange(N)[:, None] * m[None, :]) % N) / N)
        V[n] = phase @ (np.asarray(x) * np.conj(g[m]))
    return V


@pytest.fixture
def rng():
    return np.random.default_rng(20261017)


def random_signal(rng, N):
    return rng.standard_normal(N) + 1j * rng.standard_normal(N)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
