import numpy as np
import pytest

from concbounds.qstate import MultipartiteState, PureState


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def bell() -> PureState:
    return PureState((2, 2), np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2))


def product_density(*factors) -> MultipartiteState:
    rho = np.ones((1, 1), dtype=complex)
    for f in factors:
        rho = np.kron(rho, f)
    return MultipartiteState(tuple(f.shape[0] for f in factors), rho)


def random_hermitian(rng, d):
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return (g + g.conj().T) / 2


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
