import numpy as np
import pytest

from concbounds.generators import su_generators

from conftest import random_hermitian


def test_qubit_generators_are_paulis():
    x = np.array([[0, 1], [1, 0]])
    y = np.array([[0, -1j], [1j, 0]])
    z = np.diag([1, -1])
    mats = su_generators(2).mats
    assert len(mats) == 3
    for got, pauli in zip(mats, [x, y, z]):
        np.testing.assert_allclose(got, pauli / np.sqrt(2), atol=1e-15)


@pytest.mark.parametrize("d", [2, 3, 4, 6, 8])
def test_orthonormal_hermitian_traceless(d):
    mats = su_generators(d).mats
    assert mats.shape == (d * d - 1, d, d)
    for g in mats:
        assert np.abs(g - g.conj().T).max() < 1e-12
        assert abs(np.trace(g)) < 1e-12
    gram = np.einsum("kab,lba->kl", mats, mats)
    np.testing.assert_allclose(gram, np.eye(d * d - 1), atol=1e-12)


def test_completeness_d4():
    d = 4
    mats = su_generators(d).mats
    lhs = np.einsum("kab,kcd->abcd", mats, mats.conj())
    eye = np.eye(d)
    lhs += np.einsum("ab,cd->abcd", eye, eye) / d
    np.testing.assert_allclose(lhs, np.einsum("ac,bd->abcd", eye, eye), atol=1e-12)


@pytest.mark.parametrize("d", [2, 3, 5])
def test_expansion_round_trip(rng, d):
    h = random_hermitian(rng, d)
    mats = su_generators(d).mats
    coeffs = np.einsum("ab,kba->k", h, mats)
    rebuilt = np.trace(h) / d * np.eye(d) + np.einsum("k,kab->ab", coeffs, mats)
    np.testing.assert_allclose(rebuilt, h, atol=1e-10)


def test_order_and_errors():
    mats = su_generators(3).mats
    # symmetric block: (0,1), (0,2), (1,2)
    assert mats[1][0, 2] == mats[1][2, 0] == pytest.approx(1 / np.sqrt(2))
    # antisymmetric block starts at index 3
    assert mats[3][0, 1] == pytest.approx(-1j / np.sqrt(2))
    np.testing.assert_allclose(np.diag(mats[7]).real, np.array([1, 1, -2]) / np.sqrt(6))
    with pytest.raises(ValueError):
        su_generators(1)
